"""Base points, traversal and the skein operations on a single crossing
Created on: 19 Oct 2026

A base point is stored as the edge label it sits on; walking from it means
following that edge forward. The order of the base points is the order in
which components are traversed.
"""

from __future__ import annotations

__all__ = [
    "bad_count",
    "bad_crossings",
    "BasePointState",
    "BaseStrategy",
    "first_bad_crossing",
    "is_untangled",
    "lowest_edge_strategy",
    "make_untangled",
    "RandomBaseStrategy",
    "smooth",
    "switch",
    "traversal",
]

import collections.abc
import dataclasses
import logging
import typing

import numpy as np

import conway_skein.diagram.base as csdb
import conway_skein.errors as cse

logger = logging.getLogger(__name__)

BasePoints = tuple[int, ...]
BaseStrategy = collections.abc.Callable[[csdb.Diagram], BasePoints]


def lowest_edge_strategy(d: csdb.Diagram) -> BasePoints:
    """the least edge label of each component, components in their stored order"""
    return tuple(min(comp) for comp in d.components)


class RandomBaseStrategy:
    """random edge per component and random component order"""

    def __init__(self, seed: int | np.random.Generator | None = None):
        self.rng = np.random.default_rng(seed)

    def __call__(self, d: csdb.Diagram) -> BasePoints:
        comps = d.components
        order = self.rng.permutation(len(comps)) if comps else []
        return tuple(int(self.rng.choice(comps[i])) for i in order)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}()"


@dataclasses.dataclass(frozen=True)
class BasePointState:
    diagram: csdb.Diagram
    base_points: BasePoints

    def __post_init__(self) -> None:
        d = self.diagram
        seen = [d.component_of.get(b) for b in self.base_points]
        if None in seen:
            missing = [b for b in self.base_points if b not in d.component_of]
            raise cse.DiagramError(f"Base points {missing} are not edges.")
        if sorted(seen) != list(range(len(d.components))):  # type: ignore[type-var]
            msg = f"Base points {list(self.base_points)} must hit each of the "
            msg += f"{len(d.components)} components exactly once."
            raise cse.DiagramError(msg)

    @classmethod
    def create(
        cls, d: csdb.Diagram, strategy: BaseStrategy | None = None
    ) -> BasePointState:
        strategy = strategy or lowest_edge_strategy
        return cls(d, strategy(d))


def traversal(s: BasePointState) -> typing.Iterator[csdb.Dart]:
    """every arrival at a crossing, in traversal order"""
    d = s.diagram
    for start in s.base_points:
        label = start
        while True:
            head = d.heads[label]
            yield head
            label = d.next_label(label)
            if label == start:
                break


def _first_meetings(s: BasePointState) -> typing.Iterator[csdb.Dart]:
    seen: set[int] = set()
    for dart in traversal(s):
        if dart.crossing not in seen:
            seen.add(dart.crossing)
            yield dart


def first_bad_crossing(s: BasePointState) -> int | None:
    """the first crossing reached along its under-strand"""
    for dart in _first_meetings(s):
        if dart.slot == 0:
            return dart.crossing
    return None


def bad_count(s: BasePointState) -> int:
    return sum(1 for dart in _first_meetings(s) if dart.slot == 0)


def is_untangled(s: BasePointState) -> bool:
    return first_bad_crossing(s) is None


def bad_crossings(s: BasePointState) -> list[int]:
    return [dart.crossing for dart in _first_meetings(s) if dart.slot == 0]


def switch(d: csdb.Diagram, p: int) -> csdb.Diagram:
    x = d.crossing(p)
    crossings = list(d.crossings)
    crossings[p] = x.switched()
    return csdb.Diagram(tuple(crossings), d.free_loops)


def smooth(d: csdb.Diagram, p: int) -> csdb.Diagram:
    """remove p, joining each incoming end to the adjacent outgoing end"""
    x = d.crossing(p)
    if x.sign > 0:
        unions = [(x.a, x.b), (x.d, x.c)]
    else:
        unions = [(x.a, x.d), (x.b, x.c)]
    return csdb.splice(d, {p}, unions)


def make_untangled(s: BasePointState) -> csdb.Diagram:
    """switch every bad crossing; edge labels, hence base points, are kept"""
    bad = set(bad_crossings(s))
    d = s.diagram
    crossings = tuple(
        x.switched() if i in bad else x for i, x in enumerate(d.crossings)
    )
    logger.debug(f"switched {len(bad)} bad crossings")
    return csdb.Diagram(crossings, d.free_loops)
