"""CLI base classes for the skein commands
Created on: 19 Oct 2026
"""

from __future__ import annotations

__all__ = [
    "CLIMixin",
    "CommandCLI",
    "DiagramCLI",
    "EXIT_CHECK_FAILED",
    "EXIT_EVALUATION",
    "EXIT_OK",
    "EXIT_PARSE",
    "setup_log",
]

import abc
import argparse
import logging
import sys
import typing

import conway_skein.diagram.base as csdb
import conway_skein.diagram.parse as csdp
import conway_skein.errors as cse
import conway_skein.typing as cst
from conway_skein import __version__ as skein_version

logger = logging.getLogger(__name__)

T = typing.TypeVar("T")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_EVALUATION = 3


def setup_log(verbosity: int) -> None:
    """set logger with verbosity logging level and message"""
    if verbosity == 1:
        level = logging.getLevelName("INFO")
    elif verbosity >= 2:
        level = logging.getLevelName("DEBUG")
    else:
        level = logging.getLevelName("WARNING")
    fmt = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    logging.basicConfig(format=fmt, level=level)
    logging.captureWarnings(True)


def add_common_arguments(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument(
        "-o",
        "--output",
        type=cst.save_file_path(),
        default=None,
        help="Path to save the output (default: print to stdout).",
    )
    parser.add_argument(
        "-v",
        "--verbosity",
        action="count",
        default=0,
        help="Increase output verbosity (e.g., -vv is more than -v).",
    )
    parser.add_argument(
        "--version",
        action="store_true",
        help="Print the version of conway-skein.",
    )
    return parser


class CLIMixin(metaclass=abc.ABCMeta):
    def __str__(self) -> str:
        return self.__class__.__name__

    @staticmethod
    @abc.abstractmethod
    def description() -> str:
        raise NotImplementedError

    @staticmethod
    @abc.abstractmethod
    def name() -> str:
        raise NotImplementedError

    @staticmethod
    @abc.abstractmethod
    def fullname() -> str:
        raise NotImplementedError

    @classmethod
    @abc.abstractmethod
    def get_parent_parser(
        cls, desc: str, **kwargs: typing.Any
    ) -> argparse.ArgumentParser:
        raise NotImplementedError

    @staticmethod
    def add_method_specific_arguments(
        parent_parser: argparse.ArgumentParser,
    ) -> argparse.ArgumentParser:
        return parent_parser

    @classmethod
    def parser(cls) -> argparse.ArgumentParser:
        parser = cls.get_parent_parser(cls.description())
        parser = cls.add_method_specific_arguments(parser)
        return parser

    @classmethod
    def main(
        cls, parser: argparse.ArgumentParser
    ) -> typing.Callable[[cst.ArgType], int]:
        def _main(args: cst.ArgType = None) -> int:
            if args is None:
                if len(sys.argv) == 2 and sys.argv[1] == "--version":
                    print(f"conway-skein version {skein_version}")
                    return EXIT_OK
                args = parser.parse_args()
            elif isinstance(args, list):
                args = parser.parse_args(args)
            else:
                raise ValueError("args must be None or a list of strings to parse")
            if args.version:
                print(f"conway-skein version {skein_version}")
            setup_log(args.verbosity)
            try:
                cls_instance = cls.from_argparse_args(args)
                retval = cls_instance.call_from_argparse_args(args)
            except cse.DiagramParseError as e:
                logger.error(f"parse stage: {e}")
                return EXIT_PARSE
            except cse.ConwaySkeinError as e:
                logger.error(f"evaluation stage: {e}")
                return EXIT_EVALUATION
            return EXIT_OK if retval is None else retval

        return _main

    @classmethod
    @abc.abstractmethod
    def from_argparse_args(cls: typing.Type[T], args: argparse.Namespace) -> T:
        raise NotImplementedError

    @abc.abstractmethod
    def call_from_argparse_args(
        self, args: argparse.Namespace, /, **kwargs: typing.Any
    ) -> int | None:
        raise NotImplementedError


class DiagramCLI(CLIMixin, metaclass=abc.ABCMeta):
    """commands taking one diagram from --pd, --braid or --file"""

    @classmethod
    def get_parent_parser(
        cls, desc: str, **kwargs: typing.Any
    ) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            description=desc,
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument(
            "--pd",
            type=str,
            default=None,
            help="PD code, e.g. 'X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)'.",
        )
        source.add_argument(
            "--braid",
            type=str,
            default=None,
            help="Braid word whose closure is the diagram, e.g. '2: 1 1 1'.",
        )
        source.add_argument(
            "--file",
            type=cst.file_path(),
            default=None,
            help="Path of a file holding a PD code or braid word.",
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
        return add_common_arguments(parser)

    @staticmethod
    def load_diagram(args: argparse.Namespace) -> csdb.Diagram:
        if args.pd is not None:
            diagram = csdp.parse_pd(args.pd)
        elif args.braid is not None:
            diagram = csdp.close_braid(csdp.parse_braid(args.braid))
        else:
            diagram = csdp.read_diagram_file(args.file)
        logger.info(
            f"diagram: {diagram.crossing_count} crossings, "
            f"{diagram.component_count} components"
        )
        return diagram


class CommandCLI(CLIMixin, metaclass=abc.ABCMeta):
    """commands without a diagram argument"""

    @classmethod
    def get_parent_parser(
        cls, desc: str, **kwargs: typing.Any
    ) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            description=desc,
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        return add_common_arguments(parser)
