"""Shared graph and geometry fixtures."""

from pathlib import Path

import networkx as nx
import pytest
from asrg_core import Settings
from asrg_geometry import Cap, cap_construct
from asrg_graphs import Graph, format_graph, no_graph_only


@pytest.fixture
def settings():
    """Default settings, independent of any .env file."""
    return Settings(_env_file=None)


@pytest.fixture
def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture
def c5() -> Graph:
    return Graph.from_networkx(nx.cycle_graph(5))


@pytest.fixture
def c6() -> Graph:
    return Graph.from_networkx(nx.cycle_graph(6))


@pytest.fixture
def two_triangles() -> Graph:
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])


@pytest.fixture
def conic() -> Cap:
    return cap_construct("conic", 2, 3)


@pytest.fixture(scope="session")
def elliptic_quadric() -> Cap:
    return cap_construct("elliptic_quadric", 3, 3)


@pytest.fixture(scope="session")
def no_5_3_plus() -> Graph:
    return no_graph_only(5, 3, 1)


@pytest.fixture
def petersen_file(tmp_path: Path, petersen: Graph) -> Path:
    path = tmp_path / "petersen.txt"
    path.write_text(format_graph(petersen))
    return path


@pytest.fixture(scope="session")
def no_4_5_plus() -> Graph:
    return no_graph_only(4, 5, 1)
