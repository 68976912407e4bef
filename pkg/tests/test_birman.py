"""Pairs of braid closures that the invariants do not tell apart."""

import pytest

import conway_skein as cs
import conway_skein.invariants.evaluate as csie
import conway_skein.invariants.simplex as csis
from conway_skein.fixtures import fixture

ZOO = sorted(cs.VERIFIABLE_ALGEBRAS)


@pytest.mark.parametrize("algebra", ZOO)
def test_gamma_pair_agrees(algebra: str) -> None:
    g1, g2 = fixture("gamma1"), fixture("gamma2")
    assert g1.crossing_count == g2.crossing_count == 18
    evaluator = csie.Evaluator(algebra)
    assert evaluator.algebra.equal(evaluator(g1), evaluator(g2))


def test_gamma_pair_simplices_differ() -> None:
    evaluator = csie.Evaluator("linking")
    s1 = csis.weighted_simplex(fixture("gamma1"), "linking", evaluator=evaluator)
    s2 = csis.weighted_simplex(fixture("gamma2"), "linking", evaluator=evaluator)
    assert s1.vertices == s2.vertices == 3
    assert not csis.simplex_equivalent(s1, s2)


@pytest.mark.parametrize("algebra", ZOO)
def test_y_pair_agrees(algebra: str) -> None:
    y1, y2 = fixture("y1"), fixture("y2")
    assert y1.crossing_count == y2.crossing_count == 24
    evaluator = csie.Evaluator(algebra)
    assert evaluator.algebra.equal(evaluator(y1), evaluator(y2))
