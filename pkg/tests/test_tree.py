"""Tests for resolving trees."""

import json
import re

import pytest

import conway_skein.algebra.finite as csaf
import conway_skein.algebra.polynomial as csap
import conway_skein.diagram.base as csdb
import conway_skein.errors as cse
import conway_skein.invariants.evaluate as csie
import conway_skein.skein.tree as csst


def test_untangled_diagram_is_a_leaf(unlink2: csdb.Diagram) -> None:
    tree = csst.build_resolving_tree(unlink2)
    assert isinstance(tree.root, csst.Leaf)
    assert tree.root.components == 2
    assert len(tree) == 1


def test_compressed_hopf_tree(hopf: csdb.Diagram) -> None:
    tree = csst.build_resolving_tree(hopf, compress=True)
    root = tree.root
    assert isinstance(root, csst.Node)
    assert tree.internal_count == 1
    assert isinstance(root.switched, csst.Leaf) and root.switched.components == 2
    assert isinstance(root.smoothed, csst.Leaf) and root.smoothed.components == 1


def test_tree_shape_counts(figure_eight: csdb.Diagram) -> None:
    tree = csst.build_resolving_tree(figure_eight)
    assert (tree.internal_count, tree.leaf_count) == (2, 3)
    assert len(tree) == 5
    assert isinstance(tree.root, csst.Node)
    assert tree.root.diagram == figure_eight
    full = csst.build_resolving_tree(figure_eight, compress=False)
    assert (full.internal_count, full.leaf_count) == (3, 4)


def test_figure_eight_dot_has_five_nodes(figure_eight: csdb.Diagram) -> None:
    dot = csst.export_tree(csst.build_resolving_tree(figure_eight), "dot")
    assert len(re.findall(r"^  n\d+ \[", dot, flags=re.MULTILINE)) == 5
    assert dot.count("->") == 4
    assert dot.count("shape=box") == 3


@pytest.mark.parametrize("compress", [True, False])
def test_fold_matches_evaluator(figure_eight: csdb.Diagram, compress: bool) -> None:
    tree = csst.build_resolving_tree(figure_eight, compress=compress)
    value = csst.fold(tree, csap.TwoVarAlgebra())
    assert value == csie.evaluate(figure_eight, "P2")


def test_symbolic_fold(figure_eight: csdb.Diagram) -> None:
    tree = csst.build_resolving_tree(figure_eight)
    term = csst.fold(tree, csaf.TermAlgebra())
    assert isinstance(term, csaf.Term)
    assert str(term) == "a1*(a2|a1)"
    assert not term.is_constant


def test_node_cap(figure_eight: csdb.Diagram) -> None:
    with pytest.raises(cse.TreeTooLargeError):
        csst.build_resolving_tree(figure_eight, node_cap=2)


def test_export_json(hopf: csdb.Diagram) -> None:
    tree = csst.build_resolving_tree(hopf, compress=True)
    data = json.loads(csst.export_tree(tree, "json"))
    assert data["switched"] == {"leaf": 2}
    assert data["smoothed"] == {"leaf": 1}
    assert data["sign"] in ("+", "-")


def test_export_dot(hopf: csdb.Diagram) -> None:
    tree = csst.build_resolving_tree(hopf, compress=True)
    dot = csst.export_tree(tree, "dot")
    assert dot.startswith("digraph resolving_tree {")
    assert dot.count("->") == 2
    assert 'label="a2"' in dot and 'label="a1"' in dot


def test_export_unknown_format(hopf: csdb.Diagram) -> None:
    tree = csst.build_resolving_tree(hopf)
    with pytest.raises(cse.UnknownFormatError):
        csst.export_tree(tree, "svg")
