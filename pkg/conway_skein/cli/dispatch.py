"""Single entry point running any skein command by name
Created on: 19 Oct 2026
"""

from __future__ import annotations

__all__ = ["COMMANDS", "skein_main"]

import sys
import typing

import conway_skein.base_cli as cscli
import conway_skein.typing as cst
from conway_skein import __version__ as skein_version
from conway_skein.cli.axioms import axioms_main
from conway_skein.cli.batch import batch_main
from conway_skein.cli.invariant import invariant_main
from conway_skein.cli.simplex import simplex_main
from conway_skein.cli.simplify import simplify_main
from conway_skein.cli.tree import tree_main

COMMANDS: dict[str, typing.Callable[[cst.ArgType], int]] = {
    "axioms": axioms_main,
    "batch": batch_main,
    "invariant": invariant_main,
    "simplex": simplex_main,
    "simplify": simplify_main,
    "tree": tree_main,
}


def _usage() -> str:
    return f"usage: conway-skein {{{','.join(COMMANDS)}}} [options]"


def skein_main(args: cst.ArgType = None) -> int:
    argv = sys.argv[1:] if args is None else list(args)
    if not argv or argv[0] in ("-h", "--help"):
        print(_usage())
        return cscli.EXIT_OK if argv else cscli.EXIT_PARSE
    if argv[0] == "--version":
        print(f"conway-skein version {skein_version}")
        return cscli.EXIT_OK
    command, rest = argv[0], argv[1:]
    if command not in COMMANDS:
        print(f"conway-skein: unknown command '{command}'", file=sys.stderr)
        print(_usage(), file=sys.stderr)
        return cscli.EXIT_PARSE
    return COMMANDS[command](rest)
