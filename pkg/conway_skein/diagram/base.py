"""Oriented planar link diagrams
Created on: 19 Oct 2026

A crossing lists its four edge labels counterclockwise starting at the
incoming under-edge, so slots 0 and 2 carry the under-strand (in, out) and
slots 1 and 3 the over-strand. With the right-hand rule a positive crossing
has its over-strand entering at slot 3, a negative one at slot 1.

Each edge label occurs exactly twice in a diagram, once as an incoming and
once as an outgoing edge-end. Crossing-free components are only counted.
"""

from __future__ import annotations

__all__ = [
    "Crossing",
    "Dart",
    "Diagram",
    "splice",
]

import collections.abc
import dataclasses
import functools
import hashlib
import logging
import typing

import numpy as np
import scipy.sparse as sps
import scipy.sparse.csgraph as spcg

import conway_skein.errors as cse

logger = logging.getLogger(__name__)

DiagramKey = tuple[tuple[tuple[tuple[int, int, int, int, int], ...], ...], int]


class Crossing(typing.NamedTuple):
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def labels(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def label(self, slot: int) -> int:
        return self.labels[slot % 4]

    def is_incoming(self, slot: int) -> bool:
        slot %= 4
        if slot == 0:
            return True
        if slot == 2:
            return False
        return (slot == 3) == (self.sign > 0)

    @property
    def over_in(self) -> int:
        return 3 if self.sign > 0 else 1

    def switched(self) -> Crossing:
        """same planar position with over and under exchanged"""
        a, b, c, d = self.labels
        if self.sign > 0:
            return Crossing(d, a, b, c, -1)
        return Crossing(b, c, d, a, 1)

    def relabeled(self, f: collections.abc.Callable[[int], int]) -> Crossing:
        return Crossing(f(self.a), f(self.b), f(self.c), f(self.d), self.sign)

    def with_labels(self, labels: collections.abc.Sequence[int]) -> Crossing:
        a, b, c, d = labels
        return Crossing(a, b, c, d, self.sign)

    def __str__(self) -> str:
        sign = "+" if self.sign > 0 else "-"
        return f"X({self.a},{self.b},{self.c},{self.d}){sign}"


class Dart(typing.NamedTuple):
    """an edge-end: a slot of a crossing"""

    crossing: int
    slot: int


@dataclasses.dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    @classmethod
    def unlink(cls, n: int = 1) -> Diagram:
        return cls((), n)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def crossing(self, index: int) -> Crossing:
        if not 0 <= index < len(self.crossings):
            msg = f"Crossing {index} does not exist; "
            msg += f"the diagram has {len(self.crossings)} crossings."
            raise cse.UnknownCrossingError(msg)
        return self.crossings[index]

    @functools.cached_property
    def ends(self) -> dict[int, list[Dart]]:
        ends: dict[int, list[Dart]] = {}
        for i, x in enumerate(self.crossings):
            for s, label in enumerate(x.labels):
                ends.setdefault(label, []).append(Dart(i, s))
        return ends

    @property
    def labels(self) -> list[int]:
        return sorted(self.ends)

    @functools.cached_property
    def heads(self) -> dict[int, Dart]:
        return {
            label: dart
            for label, darts in self.ends.items()
            for dart in darts
            if self.crossings[dart.crossing].is_incoming(dart.slot)
        }

    @functools.cached_property
    def tails(self) -> dict[int, Dart]:
        return {
            label: dart
            for label, darts in self.ends.items()
            for dart in darts
            if not self.crossings[dart.crossing].is_incoming(dart.slot)
        }

    def label_at(self, dart: Dart) -> int:
        return self.crossings[dart.crossing].label(dart.slot)

    def other_end(self, dart: Dart) -> Dart:
        first, second = self.ends[self.label_at(dart)]
        return second if first == (dart.crossing, dart.slot % 4) else first

    def next_label(self, label: int) -> int:
        head = self.heads[label]
        return self.crossings[head.crossing].label(head.slot + 2)

    @functools.cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """edge labels of each component in traversal order, by minimal label"""
        seen: set[int] = set()
        comps: list[tuple[int, ...]] = []
        for start in sorted(self.ends):
            if start in seen:
                continue
            comp = []
            label = start
            while label not in seen:
                seen.add(label)
                comp.append(label)
                label = self.next_label(label)
            comps.append(tuple(comp))
        return tuple(comps)

    @property
    def component_count(self) -> int:
        return len(self.components) + self.free_loops

    @functools.cached_property
    def component_of(self) -> dict[int, int]:
        return {label: i for i, comp in enumerate(self.components) for label in comp}

    def strand_components(self, index: int) -> tuple[int, int]:
        """(under component, over component) at a crossing"""
        x = self.crossing(index)
        return self.component_of[x.a], self.component_of[x.b]

    def is_self_crossing(self, index: int) -> bool:
        under, over = self.strand_components(index)
        return under == over

    @property
    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def linking_number(self, i: int, j: int) -> int:
        if i == j:
            raise ValueError("Linking number needs two distinct components.")
        total = 0
        for k, x in enumerate(self.crossings):
            if set(self.strand_components(k)) == {i, j}:
                total += x.sign
        return total // 2

    @functools.cached_property
    def pieces(self) -> tuple[tuple[int, ...], ...]:
        """crossing indices of each connected piece of the plane graph"""
        n = len(self.crossings)
        if n == 0:
            return ()
        rows, cols = [], []
        for first, second in self.ends.values():
            rows.append(first.crossing)
            cols.append(second.crossing)
        graph = sps.coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
        _, membership = spcg.connected_components(graph, directed=False)
        groups: dict[int, list[int]] = {}
        for i, m in enumerate(membership.tolist()):
            groups.setdefault(m, []).append(i)
        return tuple(sorted(tuple(g) for g in groups.values()))

    @property
    def is_connected(self) -> bool:
        return len(self.pieces) <= 1

    @functools.cached_property
    def face_cycles(self) -> tuple[tuple[Dart, ...], ...]:
        """boundary walks of all faces, each as its arrival darts

        Arriving at slot s the walk leaves by slot s - 1, keeping the face
        on the left. Walks are listed by their least dart.
        """
        seen: set[Dart] = set()
        cycles = []
        for i in range(len(self.crossings)):
            for s in range(4):
                start = Dart(i, s)
                if start in seen:
                    continue
                cycle = []
                dart = start
                while dart not in seen:
                    seen.add(dart)
                    cycle.append(dart)
                    dart = self.other_end(Dart(dart.crossing, (dart.slot - 1) % 4))
                cycles.append(tuple(cycle))
        return tuple(cycles)

    def validate(self) -> None:
        """check valence, orientation and the Euler relation per piece"""
        for label, darts in self.ends.items():
            if len(darts) != 2:
                msg = f"Edge {label} appears {len(darts)} times; "
                msg += "every edge must appear exactly twice."
                raise cse.BadValenceError(msg)
            incoming = [self.crossings[c].is_incoming(s) for c, s in darts]
            if sum(incoming) != 1:
                msg = f"Edge {label} must have exactly one head and one tail; "
                msg += f"found {sum(incoming)} incoming ends."
                raise cse.InconsistentOrientationError(msg)
        piece_of = {c: k for k, piece in enumerate(self.pieces) for c in piece}
        face_count = [0] * len(self.pieces)
        for cycle in self.face_cycles:
            face_count[piece_of[cycle[0].crossing]] += 1
        for k, piece in enumerate(self.pieces):
            v = len(piece)
            if v - 2 * v + face_count[k] != 2:
                msg = f"Piece with crossings {list(piece)} fails the Euler check: "
                msg += f"V={v}, E={2 * v}, F={face_count[k]}."
                raise cse.NonPlanarError(msg)

    def relabeled(self, offset: int) -> Diagram:
        return Diagram(
            tuple(x.relabeled(lambda e: e + offset) for x in self.crossings),
            self.free_loops,
        )

    def max_label(self) -> int:
        return max(self.ends, default=0)

    def serialize(self) -> str:
        tokens = [str(x) for x in self.crossings] + ["O"] * self.free_loops
        return " ".join(tokens)

    def __str__(self) -> str:
        return self.serialize()

    # canonical keys
    def _signature(self, label: int, depth: int = 4) -> tuple[tuple[int, int], ...]:
        sig = []
        for _ in range(depth):
            head = self.heads[label]
            sig.append((int(head.slot != 0), self.crossings[head.crossing].sign))
            label = self.next_label(label)
        return tuple(sig)

    def _piece_key(self, start: int) -> tuple[tuple[int, int, int, int, int], ...]:
        new: dict[int, int] = {}
        order: list[int] = []
        discovered: set[int] = set()
        pending: int | None = start
        while pending is not None:
            label = pending
            while label not in new:
                new[label] = len(new) + 1
                c = self.heads[label].crossing
                if c not in discovered:
                    discovered.add(c)
                    order.append(c)
                label = self.next_label(label)
            pending = next(
                (
                    lab
                    for c in order
                    for lab in self.crossings[c].labels
                    if lab not in new
                ),
                None,
            )
        return tuple(
            (new[x.a], new[x.b], new[x.c], new[x.d], x.sign)
            for x in (self.crossings[c] for c in order)
        )

    @functools.cached_property
    def canonical_key(self) -> DiagramKey:
        """isomorphism-invariant key of the oriented plane diagram"""
        piece_keys = []
        for piece in self.pieces:
            labels = {lab for c in piece for lab in self.crossings[c].labels}
            sigs = {lab: self._signature(lab) for lab in labels}
            best = min(sigs.values())
            starts = sorted(lab for lab, sig in sigs.items() if sig == best)
            piece_keys.append(min(self._piece_key(lab) for lab in starts))
        return tuple(sorted(piece_keys)), self.free_loops

    @property
    def key_digest(self) -> str:
        return hashlib.sha256(repr(self.canonical_key).encode()).hexdigest()

    def isomorphic(self, other: Diagram) -> bool:
        return self.canonical_key == other.canonical_key


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        root = x
        while self.parent.get(root, root) != root:
            root = self.parent[root]
        while x != root:
            self.parent[x], x = root, self.parent.get(x, x)
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            lo, hi = min(rx, ry), max(rx, ry)
            self.parent[hi] = lo


def splice(
    d: Diagram,
    remove: collections.abc.Collection[int],
    unions: collections.abc.Iterable[tuple[int, int]],
    *,
    loop_candidates: collections.abc.Iterable[int] | None = None,
    replace: collections.abc.Mapping[int, Crossing] | None = None,
) -> Diagram:
    """drop crossings, identify edge labels, and count strands closing up

    Classes of ``loop_candidates`` (default: labels of removed crossings)
    that no longer touch any crossing become free loops.
    """
    uf = _UnionFind()
    for x, y in unions:
        uf.union(x, y)
    replace = replace or {}
    kept = []
    for i, x in enumerate(d.crossings):
        if i in remove:
            continue
        kept.append(replace.get(i, x).relabeled(uf.find))
    if loop_candidates is None:
        loop_candidates = [lab for i in remove for lab in d.crossings[i].labels]
    remaining = {lab for x in kept for lab in x.labels}
    closed = {uf.find(lab) for lab in loop_candidates} - remaining
    return Diagram(tuple(kept), d.free_loops + len(closed))
