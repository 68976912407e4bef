"""Faces of the plane graph underlying a diagram
Created on: 19 Oct 2026
"""

from __future__ import annotations

__all__ = [
    "edge_faces",
    "Face",
    "faces",
    "outer_face",
    "piece_faces",
    "region_inside",
]

import collections.abc
import logging
import typing

import numpy as np
import scipy.sparse as sps
import scipy.sparse.csgraph as spcg

import conway_skein.diagram.base as csdb
import conway_skein.errors as cse
import conway_skein.typing as cst

logger = logging.getLogger(__name__)


class Face(typing.NamedTuple):
    index: int
    darts: tuple[csdb.Dart, ...]

    @property
    def degree(self) -> int:
        """number of corners, the i of an i-gon"""
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(dart.crossing for dart in self.darts)

    def edges(self, d: csdb.Diagram) -> tuple[int, ...]:
        return tuple(d.label_at(dart) for dart in self.darts)


def all_faces(d: csdb.Diagram) -> tuple[Face, ...]:
    return tuple(Face(i, cycle) for i, cycle in enumerate(d.face_cycles))


def faces(d: csdb.Diagram) -> tuple[Face, ...]:
    if not d.is_connected:
        msg = f"Diagram has {len(d.pieces)} connected pieces; "
        msg += "compute faces per piece."
        raise cse.DisconnectedError(msg)
    return all_faces(d)


def piece_faces(d: csdb.Diagram, piece: collections.abc.Collection[int]) -> list[Face]:
    members = set(piece)
    return [f for f in all_faces(d) if f.darts[0].crossing in members]


def face_of_dart(d: csdb.Diagram) -> dict[csdb.Dart, int]:
    return {dart: i for i, cycle in enumerate(d.face_cycles) for dart in cycle}


def edge_faces(d: csdb.Diagram) -> dict[int, tuple[int, int]]:
    """edge label -> (face on its left, face on its right)"""
    lookup = face_of_dart(d)
    return {
        label: (lookup[d.heads[label]], lookup[d.tails[label]]) for label in d.ends
    }


def outer_face(
    d: csdb.Diagram,
    piece: collections.abc.Collection[int] | None = None,
    *,
    marker: tuple[int, cst.Side] | None = None,
) -> int:
    """face containing the marker edge-side; default the least edge's left side"""
    if marker is None:
        members = set(piece) if piece is not None else set(range(d.crossing_count))
        labels = [lab for c in members for lab in d.crossings[c].labels]
        if not labels:
            raise cse.DisconnectedError("No crossings to choose an outer face from.")
        marker = (min(labels), cst.Side.LEFT)
    label, side = marker
    if label not in d.ends:
        raise cse.DiagramError(f"Marker edge {label} is not in the diagram.")
    left, right = edge_faces(d)[label]
    return left if cst.Side.from_string(side) == cst.Side.LEFT else right


def region_inside(
    d: csdb.Diagram,
    boundary: collections.abc.Collection[int],
    outer: int,
) -> frozenset[int]:
    """faces separated from ``outer`` by the boundary edges, within outer's piece"""
    n = len(d.face_cycles)
    sides = edge_faces(d)
    cut = set(boundary)
    rows, cols = [], []
    for label, (left, right) in sides.items():
        if label not in cut:
            rows.append(left)
            cols.append(right)
    graph = sps.coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    _, membership = spcg.connected_components(graph, directed=False)
    crossing_piece = {c: k for k, p in enumerate(d.pieces) for c in p}
    face_piece = [crossing_piece[cycle[0].crossing] for cycle in d.face_cycles]
    piece = face_piece[outer]
    return frozenset(
        f
        for f in range(n)
        if face_piece[f] == piece and membership[f] != membership[outer]
    )
