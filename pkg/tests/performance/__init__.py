"""
Timing budgets for the construction pipeline and the checks.

Run with: pytest tests/performance -v
Run benchmarks only: pytest tests/performance -v -m benchmark
"""
