"""
Shared pytest fixtures for the resolution engine tests.
"""

import os

import pytest

# Keep test output quiet regardless of a developer's .env
os.environ["JUNG_LOG_LEVEL"] = "WARNING"

from jung.config.fixtures import load_fixture  # noqa: E402
from jung.models.complex import DivisorComplex  # noqa: E402
from jung.models.curve import Arrow, CurveGraph, Vertex  # noqa: E402
from jung.services.assembler import build_complex  # noqa: E402
from jung.services.curve_graph import normalize_parity, order_vertices  # noqa: E402


@pytest.fixture(autouse=True)
def reset_singletons():
    """Reset cached settings between tests to avoid state leakage."""
    from jung.config.settings import reset_settings

    reset_settings()
    yield
    reset_settings()


def build(graph: CurveGraph, order: list[str] | None = None) -> DivisorComplex:
    """Normalize, order and build in one call."""
    return build_complex(order_vertices(normalize_parity(graph), order))


@pytest.fixture
def cusp_graph() -> CurveGraph:
    """Resolution graph of x^2 + y^3."""
    return load_fixture("cusp")


@pytest.fixture
def node_graph() -> CurveGraph:
    """Resolution graph of x^2 + y^2."""
    return load_fixture("node")


@pytest.fixture
def cusp_complex(cusp_graph) -> DivisorComplex:
    return build(cusp_graph)


@pytest.fixture
def node_complex(node_graph) -> DivisorComplex:
    return build(node_graph)


@pytest.fixture
def tacnode_graph() -> CurveGraph:
    """Resolution graph of x^2 + y^4 (two smooth branches with contact 2)."""
    return CurveGraph(
        name="tacnode",
        vertices=[Vertex(id="A1", e=-2, m=2), Vertex(id="A2", e=-1, m=4)],
        edges=[("A1", "A2")],
        arrows=[Arrow(id="St1", attach="A2"), Arrow(id="St2", attach="A2")],
    )


@pytest.fixture
def odd_pair_graph() -> CurveGraph:
    """Two adjacent odd vertices, so parity normalization has work to do."""
    return CurveGraph(
        name="odd_pair",
        vertices=[Vertex(id="A", e=-2, m=1), Vertex(id="B", e=-2, m=1)],
        edges=[("A", "B")],
        arrows=[Arrow(id="St1", attach="A"), Arrow(id="St2", attach="B")],
    )
