"""Tests for identities between invariants of related diagrams."""

import pytest

import conway_skein.diagram.base as csdb
import conway_skein.errors as cse
import conway_skein.invariants.evaluate as csie
import conway_skein.invariants.identities as csid


def test_skein_triple(trefoil: csdb.Diagram) -> None:
    triple = csid.skein_triple(trefoil, 0)
    assert triple.positive.crossings[0].sign == 1
    assert triple.negative.crossings[0].sign == -1
    assert triple.smoothed.crossing_count == 2
    assert trefoil in (triple.positive, triple.negative)


@pytest.mark.parametrize("algebra", ["P2", "P3", "mod3", "linking"])
@pytest.mark.parametrize("convention", ["modern", "old"])
def test_skein_identity(
    figure_eight: csdb.Diagram, algebra: str, convention: str
) -> None:
    evaluator = csie.Evaluator(algebra, convention)
    for p in range(figure_eight.crossing_count):
        assert csid.skein_identity_check(figure_eight, p, evaluator)


@pytest.mark.parametrize("convention", ["modern", "old"])
def test_circle_law(hopf: csdb.Diagram, convention: str) -> None:
    evaluator = csie.Evaluator("P3", convention)
    for p in range(hopf.crossing_count):
        assert csid.circle_law_check(hopf, p, evaluator)


def test_circle_law_needs_circle(hopf: csdb.Diagram) -> None:
    with pytest.raises(cse.CircleUndefinedError):
        csid.circle_law_check(hopf, 0, csie.Evaluator("components"))


def test_mirror_pair(trefoil: csdb.Diagram, figure_eight: csdb.Diagram) -> None:
    value, mirrored = csid.evaluate_mirror_pair(trefoil)
    assert mirrored == value.swap("x", "y")
    value, mirrored = csid.evaluate_mirror_pair(figure_eight, "P2")
    assert value == mirrored


@pytest.mark.parametrize("name", ["unknot", "hopf", "trefoil", "figure_eight"])
def test_referee_identity(small_knots: dict, name: str) -> None:
    assert csid.referee_identity_check(small_knots[name])


def test_sum_laws(trefoil: csdb.Diagram, hopf: csdb.Diagram) -> None:
    evaluator = csie.Evaluator("P2")
    assert csid.sum_law_disjoint(trefoil, hopf, evaluator=evaluator)
    assert csid.sum_law_disjoint(trefoil, csdb.Diagram.unlink())
    assert csid.sum_law_connected(trefoil, 1, hopf, 1, evaluator=evaluator)
    assert csid.sum_law_connected(trefoil, 1, csdb.Diagram.unlink(), None)
