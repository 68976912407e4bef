"""Project-specific types
Created on: 19 Oct 2026
"""

from __future__ import annotations

__all__ = [
    "ArgType",
    "Convention",
    "file_path",
    "nonnegative_int",
    "PathLike",
    "positive_int",
    "save_file_path",
    "Side",
    "Specialization",
    "TreeFormat",
]

import argparse
import enum
import os
import pathlib
import typing

ArgType = typing.Union[argparse.Namespace, list[str], None]
PathLike = typing.Union[str, os.PathLike]


class Convention(enum.Enum):
    """crossing-sign convention used when folding skein triples

    MODERN is the right-hand rule used internally; OLD swaps the roles of the
    positive and negative crossing, i.e., of | and *.
    """

    MODERN: str = "modern"
    OLD: str = "old"

    @classmethod
    def from_string(cls, string: str | Convention) -> Convention:
        if isinstance(string, cls):
            return string
        for member in cls:
            if string.lower() == member.value:
                return member
        msg = f"'string' must be 'modern' or 'old'. Got '{string}'."
        raise ValueError(msg)

    def effective_sign(self, sign: int) -> int:
        return sign if self == Convention.MODERN else -sign


class TreeFormat(enum.Enum):
    DOT: str = "dot"
    JSON: str = "json"

    @classmethod
    def from_string(cls, string: str | TreeFormat) -> TreeFormat:
        if isinstance(string, cls):
            return string
        if string.lower() == "dot":
            return TreeFormat.DOT
        elif string.lower() == "json":
            return TreeFormat.JSON
        else:
            raise ValueError(f"'string' must be 'dot' or 'json'. Got '{string}'.")


class Specialization(enum.Enum):
    CONWAY: str = "conway"
    JONES: str = "jones"

    @classmethod
    def from_string(cls, string: str | Specialization) -> Specialization:
        if isinstance(string, cls):
            return string
        if string.lower() == "conway":
            return Specialization.CONWAY
        elif string.lower() == "jones":
            return Specialization.JONES
        else:
            msg = f"'string' must be 'conway' or 'jones'. Got '{string}'."
            raise ValueError(msg)


class Side(enum.Enum):
    LEFT: str = "left"
    RIGHT: str = "right"

    @classmethod
    def from_string(cls, string: str | Side) -> Side:
        if isinstance(string, cls):
            return string
        if string.lower() == "left":
            return Side.LEFT
        elif string.lower() == "right":
            return Side.RIGHT
        else:
            raise ValueError(f"'string' must be 'left' or 'right'. Got '{string}'.")


class _ParseType:
    @property
    def __name__(self) -> str:
        name = self.__class__.__name__
        assert isinstance(name, str)
        return name

    def __str__(self) -> str:
        return self.__name__


class save_file_path(_ParseType):
    def __call__(self, string: str) -> pathlib.Path:
        if not string.isprintable():
            msg = f"'{string}' must only contain printable characters."
            raise argparse.ArgumentTypeError(msg)
        path = pathlib.Path(string)
        return path


class file_path(_ParseType):
    def __call__(self, string: str) -> str:
        path = pathlib.Path(string)
        if not path.is_file():
            msg = f"'{string}' is not a valid file path."
            raise argparse.ArgumentTypeError(msg)
        return str(path)


class positive_int(_ParseType):
    def __call__(self, string: str) -> int:
        num = int(string)
        if num <= 0:
            msg = f"'{string}' needs to be a positive integer."
            raise argparse.ArgumentTypeError(msg)
        return num


class nonnegative_int(_ParseType):
    def __call__(self, string: str) -> int:
        num = int(string)
        if num < 0:
            msg = f"'{string}' needs to be a non-negative integer."
            raise argparse.ArgumentTypeError(msg)
        return num
