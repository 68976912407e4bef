"""Regions of a diagram bounded by at most two corners
Created on: 19 Oct 2026

An i-gon is a disk whose boundary lies on the diagram and turns at i
crossings. Its boundary consists of arcs that run straight through every
other crossing; a 1-gon leaves and re-enters one crossing through adjacent
slots, a 2-gon is two such arcs between two crossings. The inside of a
boundary is the side away from the outer face of its piece.
"""

from __future__ import annotations

__all__ = [
    "all_fgons",
    "find_empty_triangle",
    "find_innermost_fgon",
    "FGonWitness",
    "innermost_fgons",
    "triangles_inside",
]

import dataclasses
import logging
import typing

import conway_skein.diagram.base as csdb
import conway_skein.diagram.faces as csdf
import conway_skein.diagram.moves as csdm
import conway_skein.errors as cse
import conway_skein.typing as cst

logger = logging.getLogger(__name__)

Marker = tuple[int, cst.Side]


@dataclasses.dataclass(frozen=True)
class FGonWitness:
    kind: int
    corners: tuple[int, ...] = ()
    boundary: frozenset[int] = frozenset()
    region: frozenset[int] = frozenset()
    innermost: bool = True

    @property
    def is_face(self) -> bool:
        """the region is a single face, i.e. nothing of the diagram is inside"""
        return len(self.region) == 1

    def inside_edges(self, d: csdb.Diagram) -> set[int]:
        sides = csdf.edge_faces(d)
        return {
            label
            for label, (left, right) in sides.items()
            if left in self.region and right in self.region
        }

    def __str__(self) -> str:
        if self.kind == 0:
            return "0-gon (free loop)"
        return (
            f"{self.kind}-gon at crossings {list(self.corners)} "
            f"bounded by edges {sorted(self.boundary)}, "
            f"{len(self.region)} faces inside"
        )


class _Arc(typing.NamedTuple):
    end: int
    slot: int
    edges: tuple[int, ...]
    through: frozenset[int]


def _arcs(
    d: csdb.Diagram, start: csdb.Dart
) -> tuple[list[_Arc], int | None, tuple[int, ...]]:
    """straight arcs leaving ``start``, the slot of a return to it, all edges"""
    arcs: list[_Arc] = []
    edges: list[int] = []
    through: list[int] = []
    dart = start
    for _ in range(2 * d.crossing_count + 1):
        edges.append(d.label_at(dart))
        arrival = d.other_end(dart)
        if arrival.crossing == start.crossing:
            return arcs, arrival.slot, tuple(edges)
        arcs.append(
            _Arc(arrival.crossing, arrival.slot, tuple(edges), frozenset(through))
        )
        if arrival.crossing in through:
            break
        through.append(arrival.crossing)
        dart = csdb.Dart(arrival.crossing, (arrival.slot + 2) % 4)
    return arcs, None, tuple(edges)


def _adjacent(s: int, t: int) -> bool:
    return (s - t) % 4 in (1, 3)


def _boundaries(d: csdb.Diagram) -> dict[frozenset[int], tuple[int, ...]]:
    """boundary edges -> corners, for every 1-gon and 2-gon"""
    found: dict[frozenset[int], tuple[int, ...]] = {}
    for c in range(d.crossing_count):
        walks = [_arcs(d, csdb.Dart(c, k)) for k in range(4)]
        for k, (_, back, loop) in enumerate(walks):
            if back is not None and _adjacent(k, back):
                found.setdefault(frozenset(loop), (c,))
        for k in range(4):
            first = {a.end: a for a in walks[k][0] if a.end not in a.through}
            second = walks[(k + 1) % 4][0]
            for b in second:
                a = first.get(b.end)
                if a is None or b.end in b.through:
                    continue
                if not _adjacent(a.slot, b.slot) or a.through & b.through:
                    continue
                if set(a.edges) & set(b.edges):
                    continue
                edges = frozenset(a.edges + b.edges)
                found.setdefault(edges, tuple(sorted((c, b.end))))
    return found


def all_fgons(
    d: csdb.Diagram, *, marker: Marker | None = None
) -> list[FGonWitness]:
    """every 1-gon and 2-gon, innermost flags set; free loops are not listed"""
    if d.crossing_count == 0:
        return []
    if marker is not None and marker[0] not in d.heads:
        raise cse.DiagramError(f"Marker edge {marker[0]} is not in the diagram.")
    outer = {}
    for piece in d.pieces:
        piece_marker = marker
        if marker is not None and d.heads[marker[0]].crossing not in piece:
            piece_marker = None
        face = csdf.outer_face(d, piece, marker=piece_marker)
        for c in piece:
            outer[c] = face
    witnesses = []
    for boundary, corners in _boundaries(d).items():
        region = csdf.region_inside(d, boundary, outer[corners[0]])
        witnesses.append(FGonWitness(len(corners), corners, boundary, region))
    result = []
    for w in witnesses:
        inner = any(v.region < w.region for v in witnesses)
        result.append(dataclasses.replace(w, innermost=not inner))
    return result


def _order(w: FGonWitness) -> tuple[int, int, int, tuple[int, ...]]:
    boundary = tuple(sorted(w.boundary))
    return len(w.region), min(w.region, default=-1), w.kind, boundary


def innermost_fgons(
    d: csdb.Diagram, *, marker: Marker | None = None
) -> list[FGonWitness]:
    """1-gons and 2-gons containing no other, least region first"""
    return sorted(
        (w for w in all_fgons(d, marker=marker) if w.innermost), key=_order
    )


def find_innermost_fgon(
    d: csdb.Diagram, *, marker: Marker | None = None
) -> FGonWitness:
    """an f-gon containing no other; free loops first, then the least region"""
    if d.free_loops:
        return FGonWitness(0)
    candidates = innermost_fgons(d, marker=marker)
    if not candidates:
        msg = f"No 0-, 1- or 2-gon found in a diagram with {d.crossing_count} "
        msg += "crossings."
        raise cse.NoFGonError(msg)
    logger.debug(f"innermost f-gon: {candidates[0]}")
    return candidates[0]


def triangles_inside(
    x: FGonWitness, d: csdb.Diagram, *, touching: bool = False
) -> list[csdf.Face]:
    """triangular faces in the region of x, optionally only those on its boundary"""
    return [
        f
        for f in csdf.all_faces(d)
        if f.index in x.region
        and f.degree == 3
        and len(set(f.vertices)) == 3
        and (not touching or set(f.edges(d)) & x.boundary)
    ]


def find_empty_triangle(x: FGonWitness, d: csdb.Diagram) -> csdf.Face:
    """a triangular face inside x, touching its boundary, that supports R3"""
    if x.kind not in (1, 2):
        raise cse.MovePreconditionFailed(f"Expected a 1- or 2-gon, got a {x}.")
    if x.is_face:
        msg = f"The {x} is empty; remove it with R{x.kind} instead."
        raise cse.MovePreconditionFailed(msg)
    triangles = triangles_inside(x, d, touching=True)
    valid = {f.index for f in csdm.r3_faces(d)}
    supported = [f for f in triangles if f.index in valid]
    if supported:
        return supported[0]
    msg = f"No triangle inside the {x} supports R3: faces "
    msg += f"{[f.index for f in triangles]} touch its boundary and none is "
    msg += "crossed in a top, middle and bottom order."
    raise cse.NoTriangleError(msg)
