import pathlib
import typing

import pytest

import conway_skein.diagram.base as csdb
import conway_skein.diagram.parse as csdp
from conway_skein.fixtures import fixture

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIGURE_EIGHT_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
HOPF_BRAID = "2: 1 1"


@pytest.fixture
def temp_dir(tmpdir_factory: pytest.TempdirFactory) -> pathlib.Path:
    return pathlib.Path(tmpdir_factory.mktemp("out"))


@pytest.fixture
def cache_dir(temp_dir: pathlib.Path, monkeypatch: pytest.MonkeyPatch) -> pathlib.Path:
    cache_dir = temp_dir / "cache"
    monkeypatch.setenv("SKEIN_CACHE_DIR", str(cache_dir))
    return cache_dir


@pytest.fixture
def unknot() -> csdb.Diagram:
    return csdb.Diagram.unlink(1)


@pytest.fixture
def unlink2() -> csdb.Diagram:
    return csdb.Diagram.unlink(2)


@pytest.fixture
def hopf() -> csdb.Diagram:
    return csdp.close_braid(csdp.parse_braid(HOPF_BRAID))


@pytest.fixture
def trefoil() -> csdb.Diagram:
    return csdp.parse_pd(TREFOIL_PD)


@pytest.fixture
def braid_trefoil() -> csdb.Diagram:
    return csdp.close_braid(csdp.parse_braid("2: 1 1 1"))


@pytest.fixture
def figure_eight() -> csdb.Diagram:
    return csdp.parse_pd(FIGURE_EIGHT_PD)


@pytest.fixture
def borromean() -> csdb.Diagram:
    return fixture("borromean")


@pytest.fixture
def small_knots(
    unknot: csdb.Diagram,
    hopf: csdb.Diagram,
    trefoil: csdb.Diagram,
    figure_eight: csdb.Diagram,
) -> typing.Dict[str, csdb.Diagram]:
    return {
        "unknot": unknot,
        "hopf": hopf,
        "trefoil": trefoil,
        "figure_eight": figure_eight,
    }


@pytest.fixture
def diagram_file(temp_dir: pathlib.Path) -> pathlib.Path:
    path = temp_dir / "trefoil.pd"
    path.write_text(f"# trefoil\n{TREFOIL_PD}\n")
    return path


@pytest.fixture
def batch_csv(temp_dir: pathlib.Path, diagram_file: pathlib.Path) -> pathlib.Path:
    path = temp_dir / "links.csv"
    lines = [
        "name,kind,input",
        "unknot,pd,O",
        f"hopf,braid,{HOPF_BRAID}",
        f"trefoil,file,{diagram_file.name}",
        f'figure_eight,pd,"{FIGURE_EIGHT_PD}"',
    ]
    path.write_text("\n".join(lines) + "\n")
    return path
