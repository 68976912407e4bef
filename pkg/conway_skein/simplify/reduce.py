"""Reduce an untangled diagram to a crossing-free one without adding crossings
Created on: 19 Oct 2026

Empty 1-gons and 2-gons are removed by R1 and R2. Otherwise an innermost
1- or 2-gon is emptied with R3 on a triangle touching its boundary. An
innermost f-gon that is descending from base points outside it must have
only triangles that admit R3; a violation raises ReductionClaimError.
A breadth-first search over R3 moves is available as an explicit fallback.
"""

from __future__ import annotations

__all__ = [
    "Move",
    "reduce_untangled",
    "Reduction",
    "reduction_script",
    "replay",
    "SimplifyCLI",
]

import argparse
import collections
import dataclasses
import json
import logging
import typing

import conway_skein.base_cli as cscli
import conway_skein.diagram.base as csdb
import conway_skein.diagram.moves as csdm
import conway_skein.errors as cse
import conway_skein.simplify.fgon as csfg
import conway_skein.skein.base as cssb
import conway_skein.typing as cst
import conway_skein.util.io as csio

logger = logging.getLogger(__name__)

DEFAULT_MAX_STATES = 20_000


@dataclasses.dataclass(frozen=True)
class Move:
    """one move, addressed by crossing (and face) indices of the diagram before it"""

    kind: str
    site: tuple[int, ...]
    face: int | None = None
    crossings: int = 0

    def apply(self, d: csdb.Diagram) -> csdb.Diagram:
        if self.kind == "R1":
            return csdm.apply_r1_remove(d, self.site[0])
        if self.kind == "R2":
            return csdm.apply_r2_remove(d, *self.site)
        if self.kind == "R3":
            if self.face is None:
                raise cse.MovePreconditionFailed("An R3 move needs a face.")
            return csdm.apply_r3(d, self.face)
        raise cse.MovePreconditionFailed(f"Unknown move '{self.kind}'.")

    def to_json(self) -> str:
        data: dict[str, typing.Any] = {
            "move": self.kind,
            "site": list(self.site),
            "crossings": self.crossings,
        }
        if self.face is not None:
            data["face"] = self.face
        return json.dumps(data, sort_keys=True)


class Reduction(typing.NamedTuple):
    diagram: csdb.Diagram
    moves: list[Move]


def replay(d: csdb.Diagram, moves: typing.Iterable[Move]) -> csdb.Diagram:
    """apply a move script, checking that no move adds crossings"""
    for i, move in enumerate(moves):
        before = d.crossing_count
        d = move.apply(d)
        if d.crossing_count > before or d.crossing_count != move.crossings:
            msg = f"Move {i} ({move.kind}) left {d.crossing_count} crossings; "
            msg += f"expected {move.crossings} and at most {before}."
            raise cse.MovePreconditionFailed(msg)
    return d


def _monotone_move(d: csdb.Diagram) -> Move | None:
    kinks = csdm.r1_sites(d)
    if kinks:
        return Move("R1", (kinks[0],), crossings=d.crossing_count - 1)
    bigons = csdm.r2_sites(d)
    if bigons:
        return Move("R2", tuple(bigons[0]), crossings=d.crossing_count - 2)
    return None


def _outside_base_points(
    d: csdb.Diagram, x: csfg.FGonWitness
) -> cssb.BasePoints | None:
    """least edge of each component off the closed region of x"""
    covered = x.inside_edges(d) | x.boundary
    points = []
    for comp in d.components:
        outside = [e for e in comp if e not in covered]
        if not outside:
            return None
        points.append(min(outside))
    return tuple(points)


def _outside_bad_count(d: csdb.Diagram, x: csfg.FGonWitness) -> int | None:
    points = _outside_base_points(d, x)
    if points is None:
        return None
    return cssb.bad_count(cssb.BasePointState(d, points))


def _check_descending_inside(
    d: csdb.Diagram, x: csfg.FGonWitness, supported: set[int]
) -> None:
    """with no bad crossing from outside x, every triangle in x admits R3"""
    if x.is_face and x.kind == 2:
        msg = f"The {x} is empty and descending from outside, "
        msg += "yet it is not an R2 pair."
        raise cse.ReductionClaimError(msg)
    blocked = [
        f.index for f in csfg.triangles_inside(x, d) if f.index not in supported
    ]
    if blocked:
        msg = f"Triangles {blocked} inside the {x} do not support R3 although "
        msg += "the diagram is descending from base points outside it."
        raise cse.ReductionClaimError(msg)


def _triangle_move(
    d: csdb.Diagram,
    marker: csfg.Marker | None,
    visited: set[csdb.DiagramKey],
) -> Move:
    """R3 on a triangle touching the boundary of an innermost 1- or 2-gon

    Innermost f-gons that are descending from base points outside them are
    tried first, then the rest, each in order of least region.
    """
    ranked = [
        (_outside_bad_count(d, x), x)
        for x in csfg.innermost_fgons(d, marker=marker)
    ]
    if not ranked:
        msg = f"No 1- or 2-gon found in a diagram with {d.crossing_count} "
        msg += "crossings."
        raise cse.NoFGonError(msg)
    ranked.sort(key=lambda item: item[0] != 0)
    supported = {f.index for f in csdm.r3_faces(d)}
    tried: list[str] = []
    for bad, x in ranked:
        if bad == 0:
            _check_descending_inside(d, x, supported)
        tried.append(f"{x} ({bad} bad from outside)")
        if x.is_face:
            continue
        for face in csfg.triangles_inside(x, d, touching=True):
            if face.index not in supported:
                continue
            move = Move("R3", face.vertices, face.index, d.crossing_count)
            if move.apply(d).canonical_key in visited:
                continue
            logger.debug(f"{x}; {bad} bad crossings from outside it")
            return move
    msg = f"No R1, R2 or boundary R3 move in a diagram with {d.crossing_count} "
    msg += f"crossings; innermost f-gons tried: {'; '.join(tried)}."
    raise cse.ReductionStuckError(msg)


def _r3_search(d: csdb.Diagram, max_states: int) -> list[Move]:
    """shortest R3 sequence reaching a diagram with an R1 or R2 site"""
    n = d.crossing_count
    seen = {d.canonical_key}
    queue: collections.deque[tuple[csdb.Diagram, list[Move]]] = collections.deque()
    queue.append((d, []))
    while queue:
        current, path = queue.popleft()
        for face in csdm.r3_faces(current):
            nxt = csdm.apply_r3(current, face)
            key = nxt.canonical_key
            if key in seen:
                continue
            seen.add(key)
            steps = path + [Move("R3", face.vertices, face.index, n)]
            if _monotone_move(nxt) is not None:
                logger.debug(f"R3 search: {len(steps)} moves, {len(seen)} states")
                return steps
            if len(seen) >= max_states:
                msg = f"No R1 or R2 site within {max_states} R3-equivalent "
                msg += f"diagrams of {n} crossings."
                raise cse.ReductionStuckError(msg)
            queue.append((nxt, steps))
    msg = f"No R1 or R2 site is reachable by R3 moves from {n} crossings "
    msg += f"({len(seen)} diagrams explored)."
    raise cse.ReductionStuckError(msg)


def reduction_script(
    s: cssb.BasePointState,
    *,
    marker: csfg.Marker | None = None,
    r3_search: bool = False,
    max_states: int = DEFAULT_MAX_STATES,
) -> Reduction:
    """moves taking an untangled diagram to one without crossings

    Free loops carry no crossings and stay in place, so the final diagram
    has as many components as the input. If no innermost f-gon admits a
    move, ``ReductionStuckError`` is raised; with ``r3_search`` a
    breadth-first search over at most ``max_states`` R3-equivalent diagrams
    looks for the nearest R1 or R2 site instead. ``ReductionClaimError``
    means an f-gon descending from outside had a triangle without R3.
    """
    if not cssb.is_untangled(s):
        msg = f"The diagram has {cssb.bad_count(s)} bad crossings with respect "
        msg += f"to base points {list(s.base_points)}; apply make_untangled first."
        raise cse.NotUntangledError(msg)
    d = s.diagram
    moves: list[Move] = []
    visited: set[csdb.DiagramKey] = set()
    while d.crossing_count:
        active = marker if marker is not None and marker[0] in d.heads else None
        move = _monotone_move(d)
        if move is not None:
            script = [move]
        else:
            try:
                script = [_triangle_move(d, active, visited)]
            except (cse.NoFGonError, cse.ReductionStuckError) as e:
                if not r3_search:
                    raise
                logger.warning(f"f-gon procedure stuck, searching R3 moves: {e}")
                script = _r3_search(d, max_states)
        for step in script:
            visited.add(d.canonical_key)
            d = step.apply(d)
            moves.append(step)
            logger.debug(f"{step.kind} at {list(step.site)}: {d.crossing_count} left")
        if script[-1].kind != "R3":
            visited.clear()
    logger.info(f"reduced to 0 crossings in {len(moves)} moves")
    return Reduction(d, moves)


def reduce_untangled(s: cssb.BasePointState) -> csdb.Diagram:
    return reduction_script(s).diagram


class SimplifyCLI(cscli.DiagramCLI):
    def __init__(
        self,
        *,
        make_untangled: bool = False,
        marker: int | None = None,
        r3_search: bool = False,
        max_states: int = DEFAULT_MAX_STATES,
    ):
        self.make_untangled = make_untangled
        self.marker = marker
        self.r3_search = r3_search
        self.max_states = max_states

    def __call__(self, d: csdb.Diagram) -> Reduction:
        state = cssb.BasePointState.create(d)
        if self.make_untangled:
            state = cssb.BasePointState(cssb.make_untangled(state), state.base_points)
        marker = None if self.marker is None else (self.marker, cst.Side.LEFT)
        return reduction_script(
            state,
            marker=marker,
            r3_search=self.r3_search,
            max_states=self.max_states,
        )

    @staticmethod
    def name() -> str:
        return "simplify"

    @staticmethod
    def fullname() -> str:
        return "untangled reduction"

    @staticmethod
    def description() -> str:
        desc = "Reduce an untangled diagram to zero crossings with R1, R2 and R3 "
        desc += "moves that never add crossings; prints the moves as JSON lines."
        return desc

    @staticmethod
    def add_method_specific_arguments(
        parent_parser: argparse.ArgumentParser,
    ) -> argparse.ArgumentParser:
        parser = parent_parser.add_argument_group("method-specific arguments")
        parser.add_argument(
            "--make-untangled",
            action="store_true",
            help="First switch every bad crossing (lowest-edge base points).",
        )
        parser.add_argument(
            "--marker",
            type=cst.positive_int(),
            default=None,
            help="Edge whose left side lies in the outer face "
            "(default: the least edge of each piece).",
        )
        parser.add_argument(
            "--r3-search",
            action="store_true",
            help="When no innermost f-gon admits a move, search R3 sequences "
            "for an R1 or R2 site instead of failing.",
        )
        parser.add_argument(
            "--max-states",
            type=cst.positive_int(),
            default=DEFAULT_MAX_STATES,
            help="Bound on diagrams visited by --r3-search.",
        )
        return parent_parser

    @classmethod
    def from_argparse_args(cls, args: argparse.Namespace, /) -> SimplifyCLI:
        return cls(
            make_untangled=args.make_untangled,
            marker=args.marker,
            r3_search=args.r3_search,
            max_states=args.max_states,
        )

    def call_from_argparse_args(
        self, args: argparse.Namespace, /, **kwargs: typing.Any
    ) -> None:
        diagram = self.load_diagram(args)
        reduction = self(diagram)
        csio.emit("\n".join(m.to_json() for m in reduction.moves), args.output)
