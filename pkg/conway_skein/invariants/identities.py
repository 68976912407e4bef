"""Identities relating invariants of related diagrams
Created on: 19 Oct 2026
"""

from __future__ import annotations

__all__ = [
    "circle_law_check",
    "evaluate_mirror_pair",
    "referee_identity_check",
    "skein_identity_check",
    "skein_triple",
    "sum_law_connected",
    "sum_law_disjoint",
]

import logging
import typing

import conway_skein.algebra.polynomial as csap
import conway_skein.diagram.base as csdb
import conway_skein.diagram.moves as csdm
import conway_skein.errors as cse
import conway_skein.invariants.evaluate as csie
import conway_skein.polynomial.laurent as cspl
import conway_skein.skein.base as cssb
import conway_skein.typing as cst

logger = logging.getLogger(__name__)


class SkeinTriple(typing.NamedTuple):
    positive: csdb.Diagram
    negative: csdb.Diagram
    smoothed: csdb.Diagram


def skein_triple(d: csdb.Diagram, p: int) -> SkeinTriple:
    """L+, L- and L0 at crossing p; d is whichever of L+ and L- it already is"""
    switched = cssb.switch(d, p)
    smoothed = cssb.smooth(d, p)
    if d.crossing(p).sign > 0:
        return SkeinTriple(d, switched, smoothed)
    return SkeinTriple(switched, d, smoothed)


def skein_identity_check(d: csdb.Diagram, p: int, evaluator: csie.Evaluator) -> bool:
    """w(L+) = w(L-) | w(L0) and w(L-) = w(L+) * w(L0)"""
    triple = skein_triple(d, p)
    wp, wn, w0 = (evaluator(t) for t in triple)
    A = evaluator.algebra
    if evaluator.convention == cst.Convention.OLD:
        wp, wn = wn, wp
    return A.equal(wp, A.pipe(wn, w0)) and A.equal(wn, A.star(wp, w0))


def circle_law_check(d: csdb.Diagram, p: int, evaluator: csie.Evaluator) -> bool:
    """w(L0) = w(L+) o w(L-)"""
    triple = skein_triple(d, p)
    wp, wn, w0 = (evaluator(t) for t in triple)
    if evaluator.convention == cst.Convention.OLD:
        wp, wn = wn, wp
    return evaluator.algebra.equal(w0, evaluator.algebra.circle(wp, wn))


def evaluate_mirror_pair(
    d: csdb.Diagram,
    algebra: str = "P3",
    *,
    convention: cst.Convention | str = cst.Convention.MODERN,
) -> tuple[cspl.LaurentPoly, cspl.LaurentPoly]:
    """the invariant of d and of its mirror image, which differ by x <-> y"""
    evaluator = csie.Evaluator(algebra, convention)
    value = evaluator(d)
    mirrored = evaluator(csdm.mirror(d))
    if mirrored != value.swap("x", "y"):
        msg = f"Mirror values {value} and {mirrored} are not related by "
        msg += "exchanging x and y."
        raise cse.EvaluationError(msg)
    return value, mirrored


def referee_identity_check(
    d: csdb.Diagram, *, convention: cst.Convention | str = cst.Convention.MODERN
) -> bool:
    """(1 - x - y) * P3 = (1 - x - y - z) * P2 + z"""
    w3 = csie.evaluate(d, "P3", convention=convention)
    w2 = csie.evaluate(d, "P2", convention=convention)
    s = 1 - csap.X - csap.Y
    lhs = s * w3
    rhs = (s - csap.Z) * w2 + csap.Z
    if lhs != rhs:
        logger.warning(f"identity fails on {d}: {lhs} != {rhs}")
    return bool(lhs == rhs)


def sum_law_disjoint(
    d1: csdb.Diagram,
    d2: csdb.Diagram,
    *,
    evaluator: csie.Evaluator | None = None,
) -> bool:
    """P(L1 + L2) = (x + y) * P(L1) * P(L2) for the split union"""
    ev = evaluator or csie.Evaluator("P2")
    union = ev(csdm.disjoint_union(d1, d2))
    return bool(union == (csap.X + csap.Y) * ev(d1) * ev(d2))


def sum_law_connected(
    d1: csdb.Diagram,
    e1: int | None,
    d2: csdb.Diagram,
    e2: int | None,
    *,
    evaluator: csie.Evaluator | None = None,
) -> bool:
    """P(L1 + L2) = (x + y) * P(L1 # L2), summing along outer edges e1 and e2"""
    ev = evaluator or csie.Evaluator("P2")
    union = ev(csdm.disjoint_union(d1, d2))
    summed = ev(csdm.connected_sum(d1, e1, d2, e2))
    return bool(union == (csap.X + csap.Y) * summed)
