"""Input/output utilities for the project
Created on: 19 Oct 2026
"""

from __future__ import annotations

__all__ = [
    "BatchItem",
    "diagram_from_item",
    "emit",
    "read_batch_csv",
    "write_batch_csv",
]

import collections.abc
import logging
import pathlib
import typing

import pandas as pd

import conway_skein.diagram.base as csdb
import conway_skein.diagram.parse as csdp
import conway_skein.errors as cse
import conway_skein.typing as cst

logger = logging.getLogger(__name__)

BATCH_COLUMNS = ("name", "kind", "input")
BATCH_KINDS = frozenset({"pd", "braid", "file"})


class BatchItem(typing.NamedTuple):
    name: str
    kind: str
    input: str


def read_batch_csv(path: cst.PathLike) -> list[BatchItem]:
    """rows of ``name,kind,input`` where kind is pd, braid or file"""
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise cse.DiagramSyntaxError(f"Malformed batch file '{path}': {e}") from e
    missing = [c for c in BATCH_COLUMNS if c not in frame.columns]
    if missing:
        msg = f"Batch file '{path}' lacks columns {missing}; "
        msg += f"expected header '{','.join(BATCH_COLUMNS)}'."
        raise cse.DiagramSyntaxError(msg)
    items = []
    for row in frame.itertuples(index=False):
        kind = str(row.kind).strip().lower()
        if kind not in BATCH_KINDS:
            msg = f"Row '{row.name}' has kind '{row.kind}'; "
            msg += f"expected one of {sorted(BATCH_KINDS)}."
            raise cse.DiagramSyntaxError(msg)
        items.append(BatchItem(str(row.name), kind, str(row.input)))
    logger.debug(f"read {len(items)} batch items from {path}")
    return items


def diagram_from_item(
    item: BatchItem, base_dir: cst.PathLike | None = None
) -> csdb.Diagram:
    if item.kind == "pd":
        return csdp.parse_pd(item.input)
    if item.kind == "braid":
        return csdp.close_braid(csdp.parse_braid(item.input))
    path = pathlib.Path(item.input)
    if not path.is_absolute() and base_dir is not None:
        path = pathlib.Path(base_dir) / path
    if not path.is_file():
        raise cse.DiagramSyntaxError(f"Row '{item.name}': no such file '{path}'.")
    return csdp.read_diagram_file(path)


def write_batch_csv(
    rows: collections.abc.Sequence[collections.abc.Mapping[str, typing.Any]],
    columns: collections.abc.Sequence[str],
    path: cst.PathLike | None = None,
) -> str:
    """one row per item, one column per algebra; returns the CSV text"""
    frame = pd.DataFrame(list(rows), columns=list(columns))
    text: str = frame.to_csv(index=False, lineterminator="\n")
    if path is not None:
        pathlib.Path(path).write_text(text)
    return text


def emit(text: str, output: cst.PathLike | None = None) -> None:
    """print to stdout or write to a file"""
    if output is None:
        print(text)
        return
    path = pathlib.Path(output)
    path.write_text(text if text.endswith("\n") else text + "\n")
    logger.info(f"wrote {path}")
