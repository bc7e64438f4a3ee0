"""
Tests for the verification checks.
"""

from unittest.mock import patch

import pytest

from jung.config.fixtures import load_fixture
from jung.models.curve import Arrow, CurveGraph, Vertex
from jung.models.surface import SGraph, SVertex
from jung.services.verifier import (
    check_blow_down,
    check_divisibility,
    check_fiber_balance,
    check_negative_definite,
    check_normal_bundles,
    check_oracle,
    check_oracle_range,
    check_picard_ranks,
    check_refinement_invariance,
    check_strict_transforms,
    check_triple_point_formula,
    expected_ade,
    minimal_surface_graph,
    run_all,
    sgraph_matrix,
    triple_point_residual,
)
from tests.conftest import build


def _perturb(complex_, curve_id: str, delta: int):
    """Copy of the complex with one curve's first self-intersection shifted."""
    curves = []
    for curve in complex_.curves:
        if curve.id == curve_id:
            first, second = curve.sides
            first = first.model_copy(update={"self_int": first.self_int + delta})
            curve = curve.model_copy(update={"sides": [first, second]})
        curves.append(curve)
    return complex_.model_copy(update={"curves": curves})


class TestComplexChecks:
    """Checks that run on a built complex."""

    def test_fiber_balance(self, cusp_complex):
        """Both modified bottoms balance."""
        report = check_fiber_balance(cusp_complex)
        assert report.passed
        assert [r.scope for r in report.results] == ["A1/1:A2", "A2/3:A3", "A2/3:St1"]

    def test_triple_point_formula(self, cusp_complex):
        """Holds on every complete curve."""
        report = check_triple_point_formula(cusp_complex)
        assert report.passed
        assert "A1-A2/open" not in {r.scope for r in report.results}

    def test_tower_curve_residual(self, cusp_complex):
        """A2/c1 between X_0 (g 2) and X_1 (g 4) is balanced by its triple points."""
        assert triple_point_residual(cusp_complex, cusp_complex.curve("A2/c1")) == 0

    def test_perturbation_is_localized(self, cusp_complex):
        """Shifting one self-intersection fails exactly that curve."""
        report = check_triple_point_formula(_perturb(cusp_complex, "A2/c1", 1))
        assert [r.scope for r in report.failures] == ["A2/c1"]
        assert report.failures[0].details["residual"] == 4

    def test_picard_ranks(self, cusp_complex):
        """Rank and unimodularity of every compact level."""
        report = check_picard_ranks(cusp_complex)
        assert report.passed
        assert len(report.results) == 7

    def test_divisibility(self, cusp_complex):
        """E^2 is integral on every compact level."""
        report = check_divisibility(cusp_complex)
        assert report.passed
        assert report.for_check("divisibility")[0].scope == "A1/1"

    def test_normal_bundles(self, cusp_complex):
        """E^2 . C matches the self-intersection of C in the other surface."""
        report = check_normal_bundles(cusp_complex)
        assert report.passed
        assert "S(A1)+@A1/1" in {r.scope for r in report.results}

    def test_oracle(self, cusp_complex):
        """The weights used by the cusp are 1, 3 and 6."""
        report = check_oracle(cusp_complex)
        assert report.passed
        assert [r.scope for r in report.results] == ["m=001", "m=003", "m=006"]

    def test_oracle_range(self):
        """Table and simulation agree for every weight up to 50."""
        report = check_oracle_range()
        assert report.passed
        assert len(report.results) == 50

    def test_strict_transforms(self, cusp_complex):
        """Every vertex of the cusp passes the strict transform case split."""
        report = check_strict_transforms(cusp_complex)
        assert report.passed
        assert [r.scope for r in report.results] == ["A1", "A2", "A3"]

    def test_strict_transforms_skip_weight_one(self, odd_pair_graph):
        """Vertices with m = 1 are not checked."""
        report = check_strict_transforms(build(odd_pair_graph))
        assert report.passed
        assert {r.scope for r in report.results} == {"B1", "B2", "B3"}


class TestSurfaceGraphChecks:
    """Checks on the dual graph of {g = 0}."""

    def test_matrix(self):
        """Diagonal self-intersections, edge counts off it."""
        sgraph = SGraph(
            vertices=[SVertex(id="a", self_int=-2), SVertex(id="b", self_int=-3)],
            edges=[("a", "b")],
        )
        assert sgraph_matrix(sgraph).tolist() == [[-2, 1], [1, -3]]

    def test_negative_definite(self):
        """Two (-2) curves meeting once are negative definite."""
        sgraph = SGraph(
            vertices=[SVertex(id="a", self_int=-2), SVertex(id="b", self_int=-2)],
            edges=[("a", "b")],
        )
        assert check_negative_definite(sgraph).passed

    def test_not_negative_definite(self):
        """Two (-1) curves meeting once are not."""
        sgraph = SGraph(
            vertices=[SVertex(id="a", self_int=-1), SVertex(id="b", self_int=-1)],
            edges=[("a", "b")],
        )
        report = check_negative_definite(sgraph, scope="minimal")
        assert not report.passed
        assert report.failures[0].scope == "minimal"

    def test_empty_graph_passes(self):
        """An empty minimal graph means {g = 0} is smooth."""
        report = check_negative_definite(SGraph(), scope="minimal")
        assert report.passed
        assert report.results[0].details["smooth"] is True

    def test_expected_ade(self):
        """Only Brieskorn (2, q) names carry an expectation."""
        assert expected_ade("brieskorn_2_7") == "A_6"
        assert expected_ade("cusp") is None

    def test_blow_down_flags_fail(self):
        """A non-contractible (-1) vertex fails the check."""
        sgraph = SGraph(
            vertices=[SVertex(id="a", self_int=-1)],
            flags=["non-contractible:a"],
        )
        assert not check_blow_down(sgraph).passed

    def test_blow_down_wrong_type(self, node_graph):
        """A graph named for (2, 7) must reduce to A_6."""
        minimal = minimal_surface_graph(node_graph)
        report = check_blow_down(minimal, "brieskorn_2_7")
        assert not report.passed
        assert report.results[0].details["ade"] == "A_1"


class TestRefinementInvariance:
    """The minimal graph does not depend on the resolution of f."""

    def test_cusp(self, cusp_graph):
        """Random refinements of the cusp reduce to the same graph."""
        report = check_refinement_invariance(cusp_graph, seeds=[0, 1, 2, 3], steps=4)
        assert report.passed
        assert [r.scope for r in report.results] == ["seed=0", "seed=1", "seed=2", "seed=3"]

    def test_node(self, node_graph):
        """Same for the node."""
        assert check_refinement_invariance(node_graph, seeds=[5], steps=6).passed


class TestRunAll:
    """Tests for the full verification run."""

    @pytest.mark.parametrize("name", ["cusp", "node", "brieskorn_2_7"])
    def test_fixtures_pass(self, name):
        """Every bundled valid fixture passes every check."""
        report = run_all(load_fixture(name), seeds=[0], steps=3)
        assert report.passed, [r.model_dump() for r in report.failures]

    def test_smooth_surface_passes(self):
        """A smooth {g = 0} blows down to nothing and still passes."""
        graph = CurveGraph(
            vertices=[Vertex(id="A", e=-2, m=1), Vertex(id="B", e=-1, m=2)],
            edges=[("A", "B")],
            arrows=[Arrow(id="St1", attach="B")],
        )
        assert minimal_surface_graph(graph).vertices == []
        report = run_all(graph, seeds=[0], steps=2)
        assert report.passed, [r.model_dump() for r in report.failures]

    def test_results_sorted(self, cusp_graph):
        """Results are ordered by check, then scope."""
        report = run_all(cusp_graph, seeds=[0], steps=2)
        keys = [(r.check, r.scope) for r in report.results]
        assert keys == sorted(keys)

    def test_invalid_graph(self):
        """Invariant violations come back as failing results."""
        report = run_all(load_fixture("bad_relation"))
        assert not report.passed
        assert [r.check for r in report.results] == ["graph.valid"]
        assert report.results[0].details["code"] == "relation"

    def test_construction_failure(self, cusp_graph):
        """A rejected order is reported, not raised."""
        report = run_all(cusp_graph, order=["A3", "A1", "A2"])
        assert [r.check for r in report.results] == ["construction"]
        assert report.results[0].details["error"] == "InvalidOrderError"

    @patch("jung.events._event_logger")
    def test_failures_are_logged(self, mock_logger, cusp_complex):
        """Failing checks emit a warning event."""
        check_triple_point_formula(_perturb(cusp_complex, "A2/c1", 1))
        mock_logger.warning.assert_called_once()
        assert mock_logger.warning.call_args[0][0] == "check.failed"
