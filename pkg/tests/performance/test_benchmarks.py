"""
Performance benchmarks for the construction pipeline.

These tests measure execution time of key operations to detect regressions.

Run with: pytest tests/performance -v
Run benchmarks only: pytest tests/performance -v -m benchmark
"""

import time

import pytest

from jung.config.fixtures import load_fixture
from jung.services.curve_graph import brieskorn_graph, random_refinement
from jung.services.local_models import fiber_chain, local_blowup_oracle
from jung.services.surface_graph import blow_down_minimal, surface_dual_graph
from jung.services.verifier import check_oracle_range, run_all
from tests.conftest import build

# Mark all tests in this module as performance benchmarks
pytestmark = [pytest.mark.performance, pytest.mark.benchmark]


class TestConstructionPerformance:
    """Benchmarks for building divisor complexes."""

    def test_cusp_build(self):
        """Benchmark the full cusp pipeline."""
        graph = load_fixture("cusp")
        iterations = 10
        start = time.perf_counter()

        for _ in range(iterations):
            complex_ = build(graph)
            blow_down_minimal(surface_dual_graph(complex_))

        avg_time = (time.perf_counter() - start) / iterations
        assert avg_time < 1.0, f"Average cusp build {avg_time:.3f}s exceeds 1s"

    @pytest.mark.parametrize("q", [3, 5, 7, 9])
    def test_brieskorn_build(self, q):
        """Benchmark building x^2 + y^q + z^2."""
        start = time.perf_counter()
        complex_ = build(brieskorn_graph(2, q))
        elapsed = time.perf_counter() - start

        assert complex_.surfaces
        assert elapsed < 1.0, f"Brieskorn (2, {q}) build {elapsed:.3f}s exceeds 1s"

    def test_refined_build(self):
        """Benchmark a cusp refined by five blow-ups."""
        graph = random_refinement(load_fixture("cusp"), seed=7, steps=5)
        start = time.perf_counter()
        build(graph)
        elapsed = time.perf_counter() - start

        assert elapsed < 2.0, f"Refined build {elapsed:.3f}s exceeds 2s"


class TestLocalModelPerformance:
    """Benchmarks for fiber chains and the blow-up oracle."""

    def test_fiber_chain_table(self):
        """Benchmark the closed form chain for m up to 500."""
        start = time.perf_counter()

        for m in range(1, 501):
            fiber_chain(m)

        elapsed = time.perf_counter() - start
        assert elapsed < 0.5, f"Chain table {elapsed:.3f}s exceeds 500ms"

    def test_oracle_range(self):
        """Benchmark the simulation against the table up to m = 50."""
        start = time.perf_counter()
        report = check_oracle_range(50)
        elapsed = time.perf_counter() - start

        assert report.passed
        assert elapsed < 2.0, f"Oracle range {elapsed:.3f}s exceeds 2s"

    def test_large_multiplicity(self):
        """Benchmark a single large simulation."""
        start = time.perf_counter()
        local_blowup_oracle(400)
        elapsed = time.perf_counter() - start

        assert elapsed < 1.0, f"Oracle m=400 {elapsed:.3f}s exceeds 1s"


class TestVerifierPerformance:
    """Benchmarks for the full check run."""

    def test_run_all_cusp(self):
        """Benchmark every check on the cusp with three refinements."""
        start = time.perf_counter()
        report = run_all(load_fixture("cusp"), seeds=[0, 1, 2], steps=3)
        elapsed = time.perf_counter() - start

        assert report.passed
        assert elapsed < 10.0, f"run_all {elapsed:.3f}s exceeds 10s"
