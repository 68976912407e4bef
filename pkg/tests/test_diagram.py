"""Tests for diagrams: parsing, faces and moves."""

import pathlib

import pytest

import conway_skein.diagram.base as csdb
import conway_skein.diagram.faces as csdf
import conway_skein.diagram.moves as csdm
import conway_skein.diagram.parse as csdp
import conway_skein.errors as cse


def test_parse_trefoil(trefoil: csdb.Diagram) -> None:
    assert trefoil.crossing_count == 3
    assert trefoil.component_count == 1
    assert len(csdf.all_faces(trefoil)) == 5


def test_close_hopf(hopf: csdb.Diagram) -> None:
    assert hopf.crossing_count == 2
    assert hopf.component_count == 2
    assert len(csdf.all_faces(hopf)) == 4
    assert not hopf.is_self_crossing(0)


@pytest.mark.parametrize(
    "word,crossings,components,loops",
    [("3: 1 2", 2, 1, 0), ("3: 1", 1, 2, 1), ("2: 1 1 1", 3, 1, 0)],
)
def test_braid_closure(word: str, crossings: int, components: int, loops: int) -> None:
    d = csdp.close_braid(csdp.parse_braid(word))
    assert d.crossing_count == crossings
    assert d.component_count == components
    assert d.free_loops == loops
    assert csdp.parse_braid(word).cycle_count() == components
    d.validate()


def test_free_loops() -> None:
    d = csdp.parse_pd("O O")
    assert d.crossing_count == 0
    assert d.component_count == 2
    assert d == csdb.Diagram.unlink(2)


@pytest.mark.parametrize(
    "text,error",
    [
        ("X(1,2,3,4)", cse.BadValenceError),
        ("Y(1,2,3,4)", cse.DiagramSyntaxError),
        ("X(0,1,1,0)", cse.DiagramSyntaxError),
    ],
)
def test_parse_pd_errors(text: str, error: type) -> None:
    with pytest.raises(error):
        csdp.parse_pd(text)


@pytest.mark.parametrize("text", ["2: 2", "1: 1", "two: 1", "2: 1 x"])
def test_parse_braid_errors(text: str) -> None:
    with pytest.raises(cse.DiagramSyntaxError):
        csdp.parse_braid(text)


def test_parse_errors_are_parse_stage() -> None:
    assert issubclass(cse.DiagramSyntaxError, cse.DiagramParseError)
    assert issubclass(cse.NonPlanarError, cse.DiagramParseError)


def test_read_diagram_file(diagram_file: pathlib.Path, trefoil: csdb.Diagram) -> None:
    assert csdp.read_diagram_file(diagram_file) == trefoil


def test_parse_diagram_spec(hopf: csdb.Diagram) -> None:
    assert csdp.parse_diagram_spec("braid 2: 1 1") == hopf
    assert csdp.parse_diagram_spec("2: 1, 1") == hopf


def test_canonical_key_ignores_labels(
    trefoil: csdb.Diagram, figure_eight: csdb.Diagram
) -> None:
    assert trefoil.relabeled(10).canonical_key == trefoil.canonical_key
    assert trefoil.relabeled(10).key_digest == trefoil.key_digest
    assert not trefoil.isomorphic(figure_eight)


def test_mirror(trefoil: csdb.Diagram) -> None:
    mirrored = csdm.mirror(trefoil)
    assert [x.sign for x in mirrored.crossings] == [-x.sign for x in trefoil.crossings]
    assert csdm.mirror(mirrored) == trefoil


def test_disjoint_union(trefoil: csdb.Diagram, hopf: csdb.Diagram) -> None:
    union = csdm.disjoint_union(trefoil, hopf)
    assert union.component_count == 3
    assert union.crossing_count == 5
    assert len(union.pieces) == 2
    with pytest.raises(cse.DisconnectedError):
        csdf.faces(union)


def test_connected_sum(trefoil: csdb.Diagram, figure_eight: csdb.Diagram) -> None:
    summed = csdm.connected_sum(trefoil, min(trefoil.labels), figure_eight, 1)
    assert summed.crossing_count == 7
    assert summed.component_count == 1
    assert summed.is_connected
    summed.validate()


def test_connected_sum_with_free_loop(trefoil: csdb.Diagram) -> None:
    unknot = csdb.Diagram.unlink()
    summed = csdm.connected_sum(trefoil, min(trefoil.labels), unknot, None)
    assert summed == trefoil
    with pytest.raises(cse.EdgeNotOnOuterFaceError):
        csdm.connected_sum(trefoil, None, trefoil, 1)


def test_delete_components(hopf: csdb.Diagram) -> None:
    for keep in ([0], [1]):
        sub = csdm.delete_components(hopf, keep)
        assert sub.crossing_count == 0
        assert sub.component_count == 1
    with pytest.raises(cse.EmptySelectionError):
        csdm.delete_components(hopf, [])
    with pytest.raises(cse.EmptySelectionError):
        csdm.delete_components(hopf, [2])


def test_r1_add_then_remove(trefoil: csdb.Diagram) -> None:
    assert csdm.r1_sites(trefoil) == []
    for side in ("left", "right"):
        for sign in (1, -1):
            kinked = csdm.apply_r1_add(trefoil, 1, side, sign)
            assert kinked.crossing_count == 4
            assert csdm.r1_sites(kinked) == [3]
            kinked.validate()
            assert csdm.apply_r1_remove(kinked, 3).isomorphic(trefoil)


def test_r1_remove_needs_kink(trefoil: csdb.Diagram) -> None:
    with pytest.raises(cse.MovePreconditionFailed):
        csdm.apply_r1_remove(trefoil, 0)
    with pytest.raises(cse.UnknownCrossingError):
        csdm.apply_r1_remove(trefoil, 7)


def test_r2_add_then_reduce(trefoil: csdb.Diagram) -> None:
    assert csdm.r2_sites(trefoil) == []
    e1, e2, face = csdm.r2_add_sites(trefoil)[0]
    fingered = csdm.apply_r2_add(trefoil, e1, e2, face=face)
    assert fingered.crossing_count == 5
    fingered.validate()
    assert csdm.r2_sites(fingered)
    assert csdm.reduce_monotone(fingered).crossing_count == 3


def test_r2_remove_on_descending_hopf(hopf: csdb.Diagram) -> None:
    with pytest.raises(cse.MovePreconditionFailed):
        csdm.apply_r2_remove(hopf, 0, 1)
    unlinked = csdb.Diagram((hopf.crossings[0], hopf.crossings[1].switched()))
    assert csdm.r2_sites(unlinked)
    reduced = csdm.apply_r2_remove(unlinked, 0, 1)
    assert reduced == csdb.Diagram.unlink(2)


def test_r3_requires_triangle(hopf: csdb.Diagram) -> None:
    assert csdm.r3_faces(hopf) == []
    with pytest.raises(cse.MovePreconditionFailed):
        csdm.apply_r3(hopf, 0)


def test_writhe_and_linking_number(
    trefoil: csdb.Diagram, figure_eight: csdb.Diagram, hopf: csdb.Diagram
) -> None:
    assert abs(trefoil.writhe) == 3
    assert figure_eight.writhe == 0
    assert abs(hopf.linking_number(0, 1)) == 1
    assert hopf.writhe == 2 * hopf.linking_number(1, 0)
    with pytest.raises(ValueError):
        hopf.linking_number(0, 0)
