"""Reidemeister moves and diagram combinators
Created on: 19 Oct 2026

All moves return new diagrams. Labels of untouched edges are kept; new
edges get labels above the current maximum.
"""

from __future__ import annotations

__all__ = [
    "apply_r1_add",
    "apply_r1_remove",
    "apply_r2_add",
    "apply_r2_remove",
    "apply_r3",
    "connected_sum",
    "delete_components",
    "disjoint_union",
    "mirror",
    "r1_sites",
    "r2_add_sites",
    "r2_sites",
    "r3_faces",
    "reduce_monotone",
]

import collections.abc
import logging

import conway_skein.diagram.base as csdb
import conway_skein.diagram.faces as csdf
import conway_skein.errors as cse
import conway_skein.typing as cst

logger = logging.getLogger(__name__)

_COMPASS = ("E", "N", "W", "S")


def mirror(d: csdb.Diagram) -> csdb.Diagram:
    return csdb.Diagram(tuple(x.switched() for x in d.crossings), d.free_loops)


def disjoint_union(d1: csdb.Diagram, d2: csdb.Diagram) -> csdb.Diagram:
    shifted = d2.relabeled(d1.max_label())
    return csdb.Diagram(d1.crossings + shifted.crossings, d1.free_loops + d2.free_loops)


def _on_outer_face(d: csdb.Diagram, edge: int) -> bool:
    head = d.heads[edge]
    piece = next(p for p in d.pieces if head.crossing in p)
    outer = csdf.outer_face(d, piece)
    return outer in csdf.edge_faces(d)[edge]


def connected_sum(
    d1: csdb.Diagram, e1: int | None, d2: csdb.Diagram, e2: int | None
) -> csdb.Diagram:
    """band two diagrams together along outer-face edges (None: a free loop)"""
    for d, e, name in ((d1, e1, "first"), (d2, e2, "second")):
        if e is None:
            if d.free_loops < 1:
                msg = f"The {name} diagram has no free loop to sum along."
                raise cse.EdgeNotOnOuterFaceError(msg)
        elif e not in d.ends:
            raise cse.EdgeNotOnOuterFaceError(f"Edge {e} is not in the {name} diagram.")
        elif not _on_outer_face(d, e):
            msg = f"Edge {e} of the {name} diagram does not border its outer face."
            raise cse.EdgeNotOnOuterFaceError(msg)
    union = disjoint_union(d1, d2)
    if e1 is None or e2 is None:
        return csdb.Diagram(union.crossings, union.free_loops - 1)
    offset = d1.max_label()
    f1, f2 = e1, e2 + offset
    h1, h2 = union.heads[f1], union.heads[f2]
    crossings = list(union.crossings)
    for dart, label in ((h1, f2), (h2, f1)):
        x = crossings[dart.crossing]
        labels = list(x.labels)
        labels[dart.slot] = label
        crossings[dart.crossing] = x.with_labels(labels)
    return csdb.Diagram(tuple(crossings), union.free_loops)


def delete_components(
    d: csdb.Diagram, keep: collections.abc.Collection[int]
) -> csdb.Diagram:
    """sub-diagram of the kept components (free loops index after the others)"""
    keep = set(keep)
    if not keep:
        raise cse.EmptySelectionError("At least one component must be kept.")
    n_strands = len(d.components)
    bad = [k for k in keep if not 0 <= k < d.component_count]
    if bad:
        raise cse.EmptySelectionError(f"Components {sorted(bad)} do not exist.")
    remove, unions, candidates = set(), [], []
    for i, x in enumerate(d.crossings):
        under, over = d.strand_components(i)
        if under in keep and over in keep:
            continue
        remove.add(i)
        if under in keep:
            unions.append((x.a, x.c))
            candidates.extend((x.a, x.c))
        if over in keep:
            unions.append((x.b, x.d))
            candidates.extend((x.b, x.d))
    result = csdb.splice(d, remove, unions, loop_candidates=candidates)
    kept_loops = sum(1 for k in keep if k >= n_strands)
    return csdb.Diagram(result.crossings, result.free_loops - d.free_loops + kept_loops)


def _kink_slot(x: csdb.Crossing) -> int | None:
    for i in range(4):
        if x.label(i) == x.label(i + 1):
            return i
    return None


def r1_sites(d: csdb.Diagram) -> list[int]:
    return [i for i, x in enumerate(d.crossings) if _kink_slot(x) is not None]


def apply_r1_remove(d: csdb.Diagram, crossing: int) -> csdb.Diagram:
    x = d.crossing(crossing)
    i = _kink_slot(x)
    if i is None:
        msg = f"Crossing {crossing} ({x}) does not bound a 1-gon."
        raise cse.MovePreconditionFailed(msg)
    p, q = x.label(i + 2), x.label(i + 3)
    return csdb.splice(d, {crossing}, [(p, q)], loop_candidates=[p, q])


def apply_r1_add(
    d: csdb.Diagram, edge: int, side: cst.Side | str, sign: int
) -> csdb.Diagram:
    """add a kink to an edge; the loop lies on the given side of its direction"""
    if edge not in d.ends:
        raise cse.MovePreconditionFailed(f"Edge {edge} is not in the diagram.")
    side = cst.Side.from_string(side)
    kink, out = d.max_label() + 1, d.max_label() + 2
    under_first = (side == cst.Side.LEFT) == (sign > 0)
    if under_first:
        labels = (edge, out, kink, kink) if sign > 0 else (edge, kink, kink, out)
    else:
        labels = (kink, kink, out, edge) if sign > 0 else (kink, edge, out, kink)
    new = csdb.Crossing(*labels, 1 if sign > 0 else -1)
    head = d.heads[edge]
    crossings = list(d.crossings)
    x = crossings[head.crossing]
    relabeled = list(x.labels)
    relabeled[head.slot] = out
    crossings[head.crossing] = x.with_labels(relabeled)
    return csdb.Diagram(tuple(crossings) + (new,), d.free_loops)


def _bigon_ok(d: csdb.Diagram, face: csdf.Face) -> bool:
    (c1, s1), (c2, s2) = face.darts
    return c1 != c2 and (s1 - 1) % 2 == s2 % 2


def r2_sites(d: csdb.Diagram) -> list[tuple[int, int]]:
    return [
        face.vertices  # type: ignore[misc]
        for face in csdf.all_faces(d)
        if face.degree == 2 and _bigon_ok(d, face)
    ]


def apply_r2_remove(d: csdb.Diagram, c1: int, c2: int) -> csdb.Diagram:
    d.crossing(c1), d.crossing(c2)
    candidates = [
        f
        for f in csdf.all_faces(d)
        if f.degree == 2 and set(f.vertices) == {c1, c2} and c1 != c2
    ]
    if not candidates:
        raise cse.MovePreconditionFailed(f"Crossings {c1}, {c2} do not bound a 2-gon.")
    good = [f for f in candidates if _bigon_ok(d, f)]
    if not good:
        msg = f"The 2-gon at crossings {c1}, {c2} is not an R2 pair: "
        msg += "one strand must pass over at both corners."
        raise cse.MovePreconditionFailed(msg)
    (a, s1), (b, s2) = good[0].darts
    xa, xb = d.crossings[a], d.crossings[b]
    e1, e2 = xa.label(s1 - 1), xb.label(s2 - 1)
    unions = [
        (xa.label(s1 + 1), e1),
        (e1, xb.label(s2 + 2)),
        (xb.label(s2 + 1), e2),
        (e2, xa.label(s1 + 2)),
    ]
    return csdb.splice(d, {a, b}, unions)


def r2_add_sites(d: csdb.Diagram) -> list[tuple[int, int, int]]:
    """(over edge, under edge, face) triples for which apply_r2_add is defined"""
    sites = []
    for face in csdf.all_faces(d):
        edges = sorted(set(face.edges(d)))
        sites.extend((e1, e2, face.index) for e1 in edges for e2 in edges if e1 != e2)
    return sites


def _traversal(d: csdb.Diagram, face: csdf.Face, edge: int) -> bool | None:
    """True if the face walk runs along the edge forward, False if backward"""
    if d.heads[edge] in face.darts:
        return True
    if d.tails[edge] in face.darts:
        return False
    return None


def _compass_crossing(
    compass: dict[str, int], under_in: str, over_in: str
) -> csdb.Crossing:
    start = _COMPASS.index(under_in)
    order = [_COMPASS[(start + k) % 4] for k in range(4)]
    labels = [compass[direction] for direction in order]
    sign = 1 if order.index(over_in) == 3 else -1
    return csdb.Crossing(*labels, sign)


def apply_r2_add(
    d: csdb.Diagram, edge1: int, edge2: int, *, face: int | None = None
) -> csdb.Diagram:
    """push a finger of edge1 over edge2 across a face they share

    Picture edge2 at the bottom of the face and edge1 at its top. edge2 heads
    east if the face walk runs along it forward, and edge1 heads west if the
    walk runs along it forward.
    """
    if edge1 == edge2 or edge1 not in d.ends or edge2 not in d.ends:
        msg = f"Edges {edge1}, {edge2} are not two distinct edges of the diagram."
        raise cse.MovePreconditionFailed(msg)
    shared = [
        f
        for f in csdf.all_faces(d)
        if (face is None or f.index == face)
        and _traversal(d, f, edge1) is not None
        and _traversal(d, f, edge2) is not None
    ]
    if not shared:
        msg = f"Edges {edge1} and {edge2} do not border a common face"
        msg += "." if face is None else f" {face}."
        raise cse.MovePreconditionFailed(msg)
    f = shared[0]
    e2_east = bool(_traversal(d, f, edge2))
    e1_west = bool(_traversal(d, f, edge1))
    top = d.max_label()
    m, e1_out, n, e2_out = top + 1, top + 2, top + 3, top + 4

    left: dict[str, int] = {}
    right: dict[str, int] = {}
    if e2_east:
        left.update(W=edge2, E=n)
        right.update(W=n, E=e2_out)
        under_in_left = under_in_right = "W"
    else:
        right.update(E=edge2, W=n)
        left.update(E=n, W=e2_out)
        under_in_left = under_in_right = "E"
    if e1_west:
        right.update(N=edge1, S=m)
        left.update(S=m, N=e1_out)
        over_in_right, over_in_left = "N", "S"
    else:
        left.update(N=edge1, S=m)
        right.update(S=m, N=e1_out)
        over_in_left, over_in_right = "N", "S"

    crossings = list(d.crossings)
    for edge, label in ((edge1, e1_out), (edge2, e2_out)):
        head = d.heads[edge]
        x = crossings[head.crossing]
        relabeled = list(x.labels)
        relabeled[head.slot] = label
        crossings[head.crossing] = x.with_labels(relabeled)
    x_left = _compass_crossing(left, under_in_left, over_in_left)
    x_right = _compass_crossing(right, under_in_right, over_in_right)
    return csdb.Diagram(tuple(crossings) + (x_left, x_right), d.free_loops)


def _r3_ok(face: csdf.Face) -> bool:
    arr = [s for _, s in face.darts]
    return any((arr[k] - 1) % 2 == arr[(k + 1) % 3] % 2 for k in range(3))


def r3_faces(d: csdb.Diagram) -> list[csdf.Face]:
    return [
        f
        for f in csdf.all_faces(d)
        if f.degree == 3 and len(set(f.vertices)) == 3 and _r3_ok(f)
    ]


def apply_r3(d: csdb.Diagram, face: csdf.Face | int) -> csdb.Diagram:
    if isinstance(face, int):
        all_faces = csdf.all_faces(d)
        if not 0 <= face < len(all_faces):
            raise cse.MovePreconditionFailed(f"Face {face} does not exist.")
        face = all_faces[face]
    if face.degree != 3 or len(set(face.vertices)) != 3:
        msg = f"Face {face.index} is a {face.degree}-gon on crossings "
        msg += f"{list(face.vertices)}; R3 needs a triangle."
        raise cse.MovePreconditionFailed(msg)
    if not _r3_ok(face):
        msg = f"Triangle {face.index} does not support R3: "
        msg += "each strand passes over at one corner and under at the other."
        raise cse.MovePreconditionFailed(msg)
    cs = [c for c, _ in face.darts]
    arr = [s for _, s in face.darts]
    xs = [d.crossings[c] for c in cs]
    out = [xs[k].label(arr[k] - 1) for k in range(3)]
    replace = {}
    for k in range(3):
        nxt, prv = (k + 1) % 3, (k - 1) % 3
        labels = list(xs[k].labels)
        labels[(arr[k] - 1) % 4] = xs[nxt].label(arr[nxt] + 2)
        labels[(arr[k] + 1) % 4] = out[k]
        labels[arr[k] % 4] = xs[prv].label(arr[prv] + 1)
        labels[(arr[k] + 2) % 4] = out[prv]
        replace[cs[k]] = xs[k].with_labels(labels)
    return csdb.splice(d, set(), [], replace=replace)


def reduce_monotone(d: csdb.Diagram) -> csdb.Diagram:
    """greedy R1 and R2 removals until neither applies"""
    while True:
        kinks = r1_sites(d)
        if kinks:
            d = apply_r1_remove(d, kinks[0])
            continue
        bigons = r2_sites(d)
        if bigons:
            d = apply_r2_remove(d, *bigons[0])
            continue
        return d
