"""Tests for batch files, the invariant cache and packaged fixtures."""

import pathlib

import pytest

import conway_skein.diagram.base as csdb
import conway_skein.errors as cse
import conway_skein.invariants.cache as csic
import conway_skein.util.io as csio
from conway_skein.fixtures import SLOW_FIXTURES, fixture, fixture_names


def test_read_batch_csv(batch_csv: pathlib.Path) -> None:
    items = csio.read_batch_csv(batch_csv)
    assert [i.name for i in items] == ["unknot", "hopf", "trefoil", "figure_eight"]
    assert [i.kind for i in items] == ["pd", "braid", "file", "pd"]
    trefoil = csio.diagram_from_item(items[2], batch_csv.parent)
    assert trefoil.crossing_count == 3


@pytest.mark.parametrize(
    "text",
    [
        "name,kind\nknot,pd\n",
        "name,kind,input\nknot,gauss,1 -2\n",
        "",
    ],
)
def test_bad_batch_csv(temp_dir: pathlib.Path, text: str) -> None:
    path = temp_dir / "bad.csv"
    path.write_text(text)
    with pytest.raises(cse.DiagramSyntaxError):
        csio.read_batch_csv(path)


def test_missing_file_item(temp_dir: pathlib.Path) -> None:
    item = csio.BatchItem("knot", "file", "nowhere.pd")
    with pytest.raises(cse.DiagramSyntaxError):
        csio.diagram_from_item(item, temp_dir)


def test_write_batch_csv(temp_dir: pathlib.Path) -> None:
    rows = [{"name": "hopf", "components": "2"}, {"name": "unknot"}]
    path = temp_dir / "out.csv"
    text = csio.write_batch_csv(rows, ["name", "components"], path)
    assert text.splitlines() == ["name,components", "hopf,2", "unknot,"]
    assert path.read_text() == text


def test_cache_roundtrip(temp_dir: pathlib.Path) -> None:
    cache = csic.InvariantCache(temp_dir)
    assert cache.get("k", "P2", "modern") is None
    cache.put("k", "P2", "modern", {"1": 1})
    cache.put("k", "P2", "modern", {"1": 2})
    assert len(cache) == 1
    again = csic.InvariantCache(temp_dir)
    assert again.get("k", "P2", "modern") == {"1": 1}
    assert again.get("k", "P2", "old") is None


def test_cache_skips_malformed_lines(temp_dir: pathlib.Path) -> None:
    path = temp_dir / csic.InvariantCache.filename
    lines = [
        '{"key": "a", "algebra": "mod3", "convention": "modern", "value": 2}',
        "not json",
        '{"key": "b"}',
        "",
    ]
    path.write_text("\n".join(lines))
    cache = csic.InvariantCache(temp_dir)
    assert len(cache) == 1
    assert cache.get("a", "mod3", "modern") == 2


def test_default_cache_dir(cache_dir: pathlib.Path) -> None:
    assert csic.default_cache_dir() == cache_dir
    assert csic.InvariantCache().path == cache_dir / "cache.jsonl"


def test_fixtures() -> None:
    names = fixture_names()
    assert {"unknot", "hopf", "trefoil", "figure_eight", "borromean"} <= set(names)
    assert SLOW_FIXTURES <= set(names)
    assert not SLOW_FIXTURES & set(fixture_names(slow=False))
    assert fixture("unlink2") == csdb.Diagram.unlink(2)
    assert fixture("borromean").component_count == 3
    with pytest.raises(cse.DiagramParseError):
        fixture("granny")
