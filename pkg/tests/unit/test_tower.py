"""
Tests for vertex contexts and tower construction.
"""

import pytest

from jung.errors import ConstructionError, TowerPreconditionError, UnknownVertexError
from jung.models.curve import OrderedCurveGraph
from jung.models.tower import AdjacentEntry, LevelRole, VertexContext
from jung.services.curve_graph import order_vertices
from jung.services.tower import build_tower, vertex_context


@pytest.fixture
def cusp_ordered(cusp_graph) -> OrderedCurveGraph:
    return order_vertices(cusp_graph)


def _pairs(tower) -> list[tuple[int, int]]:
    return [(c.upper_self_int, c.lower_self_int) for c in tower.curves]


class TestVertexContext:
    """Tests for the per-vertex numerical data."""

    def test_oldest_vertex(self, cusp_ordered):
        """A1 has no older neighbors, so x = 0."""
        ctx = vertex_context(cusp_ordered, "A1")
        assert (ctx.e, ctx.m, ctx.l, ctx.x) == (-3, 2, 1, 0)
        assert [entry.label for entry in ctx.younger] == ["A2"]
        assert ctx.older == []

    def test_middle_vertex(self, cusp_ordered):
        """A2 has A1 older; A3 and the branch are younger."""
        ctx = vertex_context(cusp_ordered, "A2")
        assert (ctx.l, ctx.x) == (3, -1)
        assert [entry.label for entry in ctx.older] == ["A1"]
        assert [(entry.label, entry.is_arrow) for entry in ctx.younger] == [
            ("A3", False),
            ("St1", True),
        ]

    def test_odd_vertex(self, cusp_ordered):
        """A3 only has an older neighbor."""
        ctx = vertex_context(cusp_ordered, "A3")
        assert (ctx.l, ctx.x) == (1, -3)
        assert ctx.younger == []

    def test_unknown_vertex(self, cusp_ordered):
        """Unknown ids raise."""
        with pytest.raises(UnknownVertexError):
            vertex_context(cusp_ordered, "Z")

    def test_odd_older_neighbor(self, cusp_graph):
        """An order placing an odd vertex first is caught when building contexts."""
        ordered = OrderedCurveGraph(graph=cusp_graph, order=["A3", "A1", "A2"])
        with pytest.raises(ConstructionError):
            vertex_context(ordered, "A2")


class TestBuildTower:
    """Tests for the ruled surface towers of the cusp."""

    def test_even_vertex_without_older(self, cusp_ordered):
        """A1: a single modified bottom X^m_3 of multiplicity 2."""
        tower = build_tower(vertex_context(cusp_ordered, "A1"))
        assert [level.label for level in tower.levels] == ["X^m_3"]
        assert tower.g_mults == [0, 2]
        assert _pairs(tower) == [(0, -3)]
        assert tower.strict_site == 1
        assert tower.free_curves[0].name == "C1m"
        assert tower.free_curves[0].self_int == 0

    def test_even_vertex(self, cusp_ordered):
        """A2: X_0, X_1, then X^m_2."""
        tower = build_tower(vertex_context(cusp_ordered, "A2"))
        assert [level.label for level in tower.levels] == ["X_0", "X_1", "X^m_2"]
        assert [level.role for level in tower.levels] == [
            LevelRole.RULED,
            LevelRole.RULED,
            LevelRole.BOTTOM,
        ]
        assert tower.g_mults == [0, 2, 4, 6]
        assert _pairs(tower) == [(-1, 0), (0, -1), (1, -2)]
        assert tower.top.zero_section_self_int == -1
        assert tower.top.modifications[0].count == 1

    def test_odd_vertex(self, cusp_ordered):
        """A3: T_1, the support U = X_0 and the tail V."""
        tower = build_tower(vertex_context(cusp_ordered, "A3"))
        assert [level.label for level in tower.levels] == ["X_1", "X_0", "X_1"]
        assert [level.role for level in tower.levels] == [
            LevelRole.RULED,
            LevelRole.SUPPORT,
            LevelRole.TAIL,
        ]
        assert tower.g_mults == [0, 2, 6, 3]
        assert _pairs(tower) == [(-3, 1), (-1, 0), (0, -1)]
        assert tower.strict_site == 2
        free = tower.free_curves[0]
        assert (free.level, free.name, free.self_int) == (3, "lower-section", 1)

    def test_transversal_chain(self, cusp_ordered):
        """m = 3 gives the (-3, -1, -2) chain."""
        tower = build_tower(vertex_context(cusp_ordered, "A3"))
        assert [(n.self_int, n.mult) for n in tower.transversal] == [(-3, 2), (-1, 6), (-2, 3)]

    def test_node(self, node_graph):
        """The node has one level and C_1^m with self-intersection 1."""
        tower = build_tower(vertex_context(order_vertices(node_graph), "A"))
        assert [level.label for level in tower.levels] == ["X^m_1"]
        assert tower.free_curves[0].self_int == 1
        assert [(n.self_int, n.mult) for n in tower.transversal] == [(-1, 2)]

    def test_weight_one_vertex(self):
        """m = 1 has no compact level and S lies on the top."""
        ctx = VertexContext(vertex="A", e=-2, m=1, l=0, x=-2)
        tower = build_tower(ctx)
        assert tower.levels == []
        assert tower.strict_site == 0
        assert tower.transversal == []


class TestPreconditions:
    """Tests for contexts that cannot carry a tower."""

    def test_unbalanced_bottom(self):
        """2(x - l e) must equal the younger weights."""
        ctx = VertexContext(
            vertex="A", e=-1, m=2, l=1, x=0, younger=[AdjacentEntry(label="St1", m=1)]
        )
        with pytest.raises(TowerPreconditionError):
            build_tower(ctx)

    def test_odd_with_younger(self):
        """Odd vertices may not have younger neighbors."""
        ctx = VertexContext(
            vertex="A",
            e=-2,
            m=3,
            l=1,
            x=-3,
            younger=[AdjacentEntry(label="St1", m=1, is_arrow=True)],
        )
        with pytest.raises(TowerPreconditionError):
            build_tower(ctx)

    def test_weight_one_with_younger(self):
        """m = 1 with a younger entry is rejected too."""
        ctx = VertexContext(
            vertex="A", e=-1, m=1, l=0, x=0, younger=[AdjacentEntry(label="B", m=1)]
        )
        with pytest.raises(TowerPreconditionError):
            build_tower(ctx)

    def test_odd_relation(self):
        """(2l+1)e must equal 2x."""
        ctx = VertexContext(vertex="A", e=-2, m=3, l=1, x=-2)
        with pytest.raises(TowerPreconditionError) as exc_info:
            build_tower(ctx)
        assert exc_info.value.vertex_id == "A"
