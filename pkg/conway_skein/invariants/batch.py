"""Tabulate invariants of many diagrams from a CSV file
Created on: 19 Oct 2026
"""

from __future__ import annotations

__all__ = ["BatchCLI", "tabulate"]

import argparse
import collections.abc
import concurrent.futures
import json
import logging
import pathlib
import typing

import conway_skein as cs
import conway_skein.base_cli as cscli
import conway_skein.invariants.cache as csic
import conway_skein.invariants.evaluate as csie
import conway_skein.typing as cst
import conway_skein.util.io as csio

logger = logging.getLogger(__name__)


def _cell(value: typing.Any) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def tabulate(
    items: collections.abc.Sequence[csio.BatchItem],
    algebras: collections.abc.Sequence[str],
    *,
    convention: cst.Convention | str = cst.Convention.MODERN,
    cache: csic.InvariantCache | None = None,
    simplify: bool = True,
    jobs: int = 1,
    base_dir: cst.PathLike | None = None,
) -> list[dict[str, str]]:
    """one row per item, in input order; parsing happens before any evaluation"""
    diagrams = [csio.diagram_from_item(item, base_dir) for item in items]
    evaluators = [
        csie.Evaluator(name, convention, simplify=simplify) for name in algebras
    ]

    def row(index: int) -> dict[str, str]:
        records = csie.invariant_records(diagrams[index], evaluators, cache=cache)
        out = {"name": items[index].name}
        out.update({r["algebra"]: _cell(r["value"]) for r in records})
        logger.debug(f"finished {items[index].name}")
        return out

    with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as executor:
        rows = list(executor.map(row, range(len(items))))
    for ev in evaluators:
        logger.info(f"{ev.algebra}: {ev.stats}")
    return rows


class BatchCLI(cscli.CommandCLI):
    def __init__(
        self,
        algebras: collections.abc.Sequence[str] = ("P2",),
        *,
        jobs: int = 1,
        simplify: bool = True,
    ):
        self.algebras = tuple(algebras)
        self.jobs = jobs
        self.simplify = simplify

    def __call__(
        self,
        path: cst.PathLike,
        convention: cst.Convention | str = cst.Convention.MODERN,
        cache: csic.InvariantCache | None = None,
    ) -> list[dict[str, str]]:
        items = csio.read_batch_csv(path)
        logger.info(f"tabulating {len(items)} diagrams with {self.jobs} workers")
        return tabulate(
            items,
            self.algebras,
            convention=convention,
            cache=cache,
            simplify=self.simplify,
            jobs=self.jobs,
            base_dir=pathlib.Path(path).parent,
        )

    @staticmethod
    def name() -> str:
        return "batch"

    @staticmethod
    def fullname() -> str:
        return "batch tabulation"

    @staticmethod
    def description() -> str:
        desc = "Read a CSV with columns name,kind,input and write a CSV with "
        desc += "one column per requested algebra."
        return desc

    @classmethod
    def get_parent_parser(
        cls, desc: str, **kwargs: typing.Any
    ) -> argparse.ArgumentParser:
        parser = super().get_parent_parser(desc, **kwargs)
        parser.add_argument(
            "input",
            type=cst.file_path(),
            help="CSV file with columns name,kind,input (kind: pd, braid, file).",
        )
        parser.add_argument(
            "--convention",
            type=str,
            default="modern",
            choices=("modern", "old"),
            help="Crossing-sign convention; 'old' swaps the roles of | and *.",
        )
        parser.add_argument(
            "--no-cache",
            action="store_true",
            help="Neither read nor write the persistent invariant cache.",
        )
        return parser

    @staticmethod
    def add_method_specific_arguments(
        parent_parser: argparse.ArgumentParser,
    ) -> argparse.ArgumentParser:
        parser = parent_parser.add_argument_group("method-specific arguments")
        parser.add_argument(
            "-a",
            "--algebra",
            type=str,
            nargs="+",
            default=["P2"],
            choices=sorted(cs.VALID_ALGEBRAS),
            help="Algebras to tabulate, one output column each.",
        )
        parser.add_argument(
            "-j",
            "--jobs",
            type=cst.positive_int(),
            default=1,
            help="Number of diagrams evaluated concurrently.",
        )
        parser.add_argument(
            "--no-simplify",
            action="store_true",
            help="Do not remove R1/R2 sites before each memo lookup.",
        )
        return parent_parser

    @classmethod
    def from_argparse_args(cls, args: argparse.Namespace, /) -> BatchCLI:
        return cls(args.algebra, jobs=args.jobs, simplify=not args.no_simplify)

    def call_from_argparse_args(
        self, args: argparse.Namespace, /, **kwargs: typing.Any
    ) -> None:
        cache = None if args.no_cache else csic.InvariantCache()
        rows = self(args.input, args.convention, cache)
        text = csio.write_batch_csv(rows, ("name",) + self.algebras)
        csio.emit(text.rstrip("\n"), args.output)
