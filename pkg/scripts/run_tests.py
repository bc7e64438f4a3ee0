#!/usr/bin/env python3
"""
Test runner script for jung.

Usage:
    python scripts/run_tests.py [--coverage] [--verbose] [--fast | --contract] [pattern ...]

Examples:
    python scripts/run_tests.py                    # Run all tests
    python scripts/run_tests.py --coverage         # Run with coverage report
    python scripts/run_tests.py --fast             # Skip the performance benchmarks
    python scripts/run_tests.py --contract         # Golden data and exchange formats only
    python scripts/run_tests.py tower golden       # Run tests matching any pattern
"""

import argparse
import subprocess
import sys
from pathlib import Path


def build_command(args: argparse.Namespace) -> list[str]:
    cmd = ["uv", "run", "pytest"]

    if args.coverage:
        cmd.extend(["--cov=jung", "--cov-report=term-missing", "--cov-report=html"])

    cmd.append("-v" if args.verbose else "-q")

    if args.contract:
        cmd.extend(["-m", "contract"])
    elif args.fast:
        cmd.extend(["-m", "not performance"])

    if args.patterns:
        cmd.extend(["-k", " or ".join(args.patterns)])
    return cmd


def main():
    parser = argparse.ArgumentParser(description="Run the jung test suite")
    parser.add_argument("--coverage", action="store_true", help="Report coverage of jung/")
    parser.add_argument("-v", "--verbose", action="store_true", help="Verbose pytest output")
    markers = parser.add_mutually_exclusive_group()
    markers.add_argument("--fast", action="store_true", help="Skip performance benchmarks")
    markers.add_argument("--contract", action="store_true", help="Only contract tests")
    parser.add_argument("patterns", nargs="*", help="Test name patterns (pytest -k)")

    cmd = build_command(parser.parse_args())
    project_root = Path(__file__).parent.parent

    print(f"Running: {' '.join(cmd)}")
    print("-" * 60)

    result = subprocess.run(cmd, cwd=project_root)
    sys.exit(result.returncode)


if __name__ == "__main__":
    main()
