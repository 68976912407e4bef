"""Tests for the command-line entry points."""

import json
import pathlib

import pandas as pd
import pytest

from conway_skein.cli.axioms import axioms_main
from conway_skein.cli.batch import batch_main
from conway_skein.cli.dispatch import skein_main
from conway_skein.cli.invariant import invariant_main
from conway_skein.cli.simplex import simplex_main
from conway_skein.cli.simplify import simplify_main
from conway_skein.cli.tree import tree_main
from tests.conftest import FIGURE_EIGHT_PD, HOPF_BRAID, TREFOIL_PD


def test_invariant_cli(
    capsys: pytest.CaptureFixture, cache_dir: pathlib.Path
) -> None:
    retval = invariant_main(["--braid", HOPF_BRAID, "-a", "components", "linking"])
    assert retval == 0
    lines = capsys.readouterr().out.strip().splitlines()
    records = [json.loads(line) for line in lines]
    assert [r["algebra"] for r in records] == ["components", "linking"]
    assert str(records[0]["value"]) == "2"
    assert (cache_dir / "cache.jsonl").is_file()


def test_invariant_cli_specialize(
    capsys: pytest.CaptureFixture, temp_dir: pathlib.Path
) -> None:
    out = temp_dir / "trefoil.jsonl"
    args = ["--pd", TREFOIL_PD, "--specialize", "conway", "--no-cache"]
    assert invariant_main(args + ["-o", str(out)]) == 0
    record = json.loads(out.read_text())
    assert record["algebra"] == "P2"
    assert record["conway"] == "z**2 + 1"


def test_invariant_cli_naive_and_seed(diagram_file: pathlib.Path) -> None:
    args = ["--file", str(diagram_file), "--no-cache", "--naive", "-a", "mod3"]
    assert invariant_main(args) == 0
    assert invariant_main(["--pd", FIGURE_EIGHT_PD, "--no-cache", "--seed", "3"]) == 0


def test_invariant_cli_errors(cache_dir: pathlib.Path) -> None:
    assert invariant_main(["--pd", "X(1,2,3"]) == 2
    assert invariant_main(["--braid", "2: 1 3"]) == 2
    with pytest.raises(SystemExit):
        invariant_main(["--pd", TREFOIL_PD, "-a", "nonsense"])


def test_tree_cli(capsys: pytest.CaptureFixture) -> None:
    args = ["--braid", HOPF_BRAID, "--format", "json", "--no-cache"]
    assert tree_main(args + ["--fold", "P2"]) == 0
    tree = json.loads(capsys.readouterr().out)
    assert isinstance(tree, dict)
    assert tree_main(["--pd", TREFOIL_PD, "--no-cache"]) == 0
    assert "digraph" in capsys.readouterr().out
    assert tree_main(["--pd", TREFOIL_PD, "--node-cap", "1"]) == 3


def test_tree_cli_figure_eight(capsys: pytest.CaptureFixture) -> None:
    assert tree_main(["--pd", FIGURE_EIGHT_PD, "--format", "dot"]) == 0
    dot = capsys.readouterr().out
    assert (dot.count("shape=box"), dot.count("->")) == (3, 4)
    assert tree_main(["--pd", FIGURE_EIGHT_PD, "--uncompressed"]) == 0
    assert capsys.readouterr().out.count("shape=box") == 4


def test_simplify_cli(capsys: pytest.CaptureFixture) -> None:
    args = ["--pd", FIGURE_EIGHT_PD, "--make-untangled", "--no-cache"]
    assert simplify_main(args) == 0
    moves = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert moves[-1]["crossings"] == 0
    assert simplify_main(args + ["--r3-search", "--max-states", "100"]) == 0
    assert simplify_main(["--braid", HOPF_BRAID]) == 3


def test_axioms_cli(temp_dir: pathlib.Path) -> None:
    assert axioms_main(["-a", "mod3", "--exhaustive"]) == 0
    assert axioms_main(["-a", "mod3", "--exhaustive", "--corrupt"]) == 1
    out = temp_dir / "reports.jsonl"
    args = ["-a", "P2", "--samples", "5", "--json", "-o", str(out)]
    assert axioms_main(args) == 0
    assert all(json.loads(line) for line in out.read_text().splitlines())
    assert axioms_main(["-a", "P2", "--corrupt"]) == 3


def test_simplex_cli(capsys: pytest.CaptureFixture) -> None:
    args = ["--braid", HOPF_BRAID, "--compare", "2: -1 -1", "-a", "components"]
    assert simplex_main(args) == 0
    assert capsys.readouterr().out.strip().endswith("\nEQUIVALENT")
    args = ["--braid", HOPF_BRAID, "--compare", "O O", "-a", "linking"]
    assert simplex_main(args) == 0
    assert capsys.readouterr().out.strip().endswith("NOT EQUIVALENT")


def test_batch_cli(batch_csv: pathlib.Path, temp_dir: pathlib.Path) -> None:
    out = temp_dir / "table.csv"
    args = [str(batch_csv), "-o", str(out), "-a", "components", "mod3", "--no-cache"]
    assert batch_main(args + ["-j", "2"]) == 0
    table = pd.read_csv(out, dtype=str)
    assert list(table.columns) == ["name", "components", "mod3"]
    assert list(table["name"]) == ["unknot", "hopf", "trefoil", "figure_eight"]
    assert list(table["components"]) == ["1", "2", "1", "1"]
    assert table["mod3"].iloc[2] == "2"


def test_batch_cli_bad_row(temp_dir: pathlib.Path) -> None:
    path = temp_dir / "bad.csv"
    path.write_text("name,kind,input\nknot,gauss,1 -2 3\n")
    assert batch_main([str(path), "--no-cache"]) == 2


def test_dispatch(capsys: pytest.CaptureFixture) -> None:
    assert skein_main([]) == 2
    assert skein_main(["--help"]) == 0
    assert skein_main(["--version"]) == 0
    assert "conway-skein version" in capsys.readouterr().out
    assert skein_main(["knot"]) == 2
    assert "unknown command" in capsys.readouterr().err
    args = ["invariant", "--braid", HOPF_BRAID, "-a", "components", "--no-cache"]
    assert skein_main(args) == 0
