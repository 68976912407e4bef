"""Named diagrams shipped with the package
Created on: 19 Oct 2026

The braids gamma1/gamma2 and y1/y2 are pairs of distinct links that no
Conway-algebra invariant computed here tells apart; they have 18 and 24
crossings.
"""

from __future__ import annotations

__all__ = ["FIXTURES_CSV", "fixture", "fixture_names", "SLOW_FIXTURES"]

import functools
import pathlib

import conway_skein.diagram.base as csdb
import conway_skein.errors as cse
import conway_skein.util.io as csio

FIXTURES_CSV = pathlib.Path(__file__).parent / "data" / "fixtures.csv"
SLOW_FIXTURES = frozenset({"gamma1", "gamma2", "y1", "y2"})


@functools.lru_cache(maxsize=None)
def _items() -> dict[str, csio.BatchItem]:
    return {item.name: item for item in csio.read_batch_csv(FIXTURES_CSV)}


def fixture_names(*, slow: bool = True) -> list[str]:
    return [n for n in _items() if slow or n not in SLOW_FIXTURES]


def fixture(name: str) -> csdb.Diagram:
    try:
        item = _items()[name]
    except KeyError:
        msg = f"No fixture named '{name}'; available: {', '.join(_items())}."
        raise cse.DiagramParseError(msg) from None
    return csio.diagram_from_item(item, FIXTURES_CSV.parent)
