"""Tests for the f-gon search and the untangled reduction."""

import json
import logging

import pytest

import conway_skein.diagram.base as csdb
import conway_skein.diagram.moves as csdm
import conway_skein.diagram.parse as csdp
import conway_skein.errors as cse
import conway_skein.simplify.fgon as csfg
import conway_skein.simplify.reduce as cssr
import conway_skein.skein.base as cssb
import conway_skein.typing as cst


def untangled(d: csdb.Diagram) -> cssb.BasePointState:
    state = cssb.BasePointState.create(d)
    return cssb.BasePointState(cssb.make_untangled(state), state.base_points)


def test_free_loops_come_first(hopf: csdb.Diagram) -> None:
    assert csfg.find_innermost_fgon(csdb.Diagram.unlink(2)).kind == 0
    with_loop = csdm.disjoint_union(hopf, csdb.Diagram.unlink())
    assert csfg.find_innermost_fgon(with_loop).kind == 0
    assert csfg.all_fgons(csdb.Diagram.unlink()) == []


def test_hopf_bigon(hopf: csdb.Diagram) -> None:
    x = csfg.find_innermost_fgon(hopf)
    assert x.kind == 2
    assert x.innermost
    assert sorted(x.corners) == [0, 1]
    assert len(x.boundary) == 2
    assert x.is_face
    assert "2-gon" in str(x)


def test_kink_is_a_monogon(trefoil: csdb.Diagram) -> None:
    kinked = csdm.apply_r1_add(trefoil, 1, cst.Side.LEFT, 1)
    kinds = {w.kind for w in csfg.all_fgons(kinked)}
    assert 1 in kinds


def test_unknown_marker(hopf: csdb.Diagram) -> None:
    with pytest.raises(cse.DiagramError):
        csfg.all_fgons(hopf, marker=(99, cst.Side.LEFT))


def test_triangle_preconditions(hopf: csdb.Diagram) -> None:
    with pytest.raises(cse.MovePreconditionFailed):
        csfg.find_empty_triangle(csfg.FGonWitness(0), hopf)
    empty = csfg.find_innermost_fgon(hopf)
    with pytest.raises(cse.MovePreconditionFailed):
        csfg.find_empty_triangle(empty, hopf)


def test_not_untangled(hopf: csdb.Diagram) -> None:
    with pytest.raises(cse.NotUntangledError):
        cssr.reduction_script(cssb.BasePointState.create(hopf))


@pytest.mark.parametrize(
    "name", ["unknot", "unlink2", "hopf", "trefoil", "figure_eight", "borromean"]
)
def test_reduction_reaches_zero(request: pytest.FixtureRequest, name: str) -> None:
    d: csdb.Diagram = request.getfixturevalue(name)
    state = untangled(d)
    reduction = cssr.reduction_script(state)
    assert reduction.diagram.crossing_count == 0
    assert reduction.diagram.component_count == d.component_count
    counts = [m.crossings for m in reduction.moves]
    assert counts == sorted(counts, reverse=True)
    replayed = cssr.replay(state.diagram, reduction.moves)
    assert replayed == reduction.diagram
    assert cssr.reduce_untangled(state).crossing_count == 0


def test_reduction_with_marker(figure_eight: csdb.Diagram) -> None:
    state = untangled(figure_eight)
    marker = (min(state.diagram.heads), cst.Side.LEFT)
    reduction = cssr.reduction_script(state, marker=marker)
    assert reduction.diagram.crossing_count == 0


def test_move_json() -> None:
    move = cssr.Move("R3", (0, 1, 2), 4, 5)
    data = json.loads(move.to_json())
    assert data == {"move": "R3", "site": [0, 1, 2], "face": 4, "crossings": 5}
    assert "face" not in json.loads(cssr.Move("R1", (0,)).to_json())


def test_replay_rejects_bad_scripts(hopf: csdb.Diagram) -> None:
    with pytest.raises(cse.MovePreconditionFailed):
        cssr.replay(hopf, [cssr.Move("R1", (0,))])
    with pytest.raises(cse.MovePreconditionFailed):
        cssr.replay(hopf, [cssr.Move("R4", (0,))])
    with pytest.raises(cse.MovePreconditionFailed):
        cssr.replay(hopf, [cssr.Move("R3", (0, 1, 2))])


# untangled closures where the least innermost f-gon is an empty clasp
CLASP_BRAIDS = [
    "3: -2 1 -2 -1 2 1 -1 -1 2 1 1",
    "3: 1 2 -1 2 2 2 -2 2 -1 -2 -1 -2",
]


def braid_state(word: str) -> cssb.BasePointState:
    return untangled(csdp.close_braid(csdp.parse_braid(word)))


@pytest.mark.parametrize("word", CLASP_BRAIDS)
def test_clasp_braids_reduce_or_report(word: str) -> None:
    state = braid_state(word)
    try:
        reduction = cssr.reduction_script(state)
    except cse.ReductionStuckError as e:
        assert "innermost f-gons tried" in str(e)
    else:
        assert reduction.diagram.crossing_count == 0
    searched = cssr.reduction_script(state, r3_search=True)
    assert searched.diagram.crossing_count == 0
    assert cssr.replay(state.diagram, searched.moves) == searched.diagram


@pytest.mark.parametrize("word", CLASP_BRAIDS)
def test_stuck_reduction_raises_by_default(
    word: str, monkeypatch: pytest.MonkeyPatch, caplog: pytest.LogCaptureFixture
) -> None:
    state = braid_state(word)
    monkeypatch.setattr(csfg, "triangles_inside", lambda x, d, touching=False: [])
    with pytest.raises(cse.ReductionStuckError):
        cssr.reduction_script(state)
    with caplog.at_level(logging.WARNING, logger="conway_skein.simplify.reduce"):
        reduction = cssr.reduction_script(state, r3_search=True, max_states=50_000)
    assert reduction.diagram.crossing_count == 0
    assert "searching R3 moves" in caplog.text


def test_empty_descending_bigon_must_be_an_r2_pair(
    hopf: csdb.Diagram, monkeypatch: pytest.MonkeyPatch
) -> None:
    state = untangled(hopf)
    monkeypatch.setattr(csdm, "r2_sites", lambda d: [])
    with pytest.raises(cse.ReductionClaimError, match="not an R2 pair"):
        cssr.reduction_script(state)
    with pytest.raises(cse.ReductionClaimError):
        cssr.reduction_script(state, r3_search=True)


@pytest.mark.parametrize("word", CLASP_BRAIDS)
def test_free_loops_stay_and_count(word: str) -> None:
    d = csdp.close_braid(csdp.parse_braid(word))
    plain = cssr.reduction_script(untangled(d), r3_search=True)
    looped = csdm.disjoint_union(d, csdb.Diagram.unlink())
    reduction = cssr.reduction_script(untangled(looped), r3_search=True)
    assert reduction.moves == plain.moves
    assert reduction.diagram.crossing_count == 0
    assert reduction.diagram.component_count == d.component_count + 1
    assert reduction.diagram.free_loops == plain.diagram.free_loops + 1


def test_boundary_triangles_are_inside(figure_eight: csdb.Diagram) -> None:
    for x in csfg.innermost_fgons(figure_eight):
        touching = csfg.triangles_inside(x, figure_eight, touching=True)
        inside = {f.index for f in csfg.triangles_inside(x, figure_eight)}
        assert {f.index for f in touching} <= inside
        assert all(f.index in x.region for f in touching)
