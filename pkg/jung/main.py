"""
Command-line entry point.

Usage:
    jung validate cusp
    jung build fixtures/cusp.json --output cusp_complex.json
    jung surface-graph brieskorn_2_5 --minimal --format dot
    jung check node --seed 3 --steps 5

Artifacts go to --output or stdout; logs always go to stderr. Exit status
is 0 on success, 1 when an invariant is violated or a check fails and 2
for usage or parse errors.
"""

import argparse
import sys
from collections.abc import Callable
from pathlib import Path

from pydantic import BaseModel

from jung.config.fixtures import load_graph
from jung.config.logging import configure_logging, get_logger, set_run_id
from jung.config.settings import get_settings
from jung.constants import DEFAULT_REFINEMENT_SEEDS, DEFAULT_REFINEMENT_STEPS
from jung.errors import (
    CliUsageError,
    GraphParseError,
    InvalidOrderError,
    JungError,
)
from jung.models.cli import CliConfig, Command, OutputFormat
from jung.models.complex import DivisorComplex
from jung.models.curve import CurveGraph
from jung.models.report import CheckReport, CheckResult
from jung.services.assembler import build_complex
from jung.services.curve_graph import (
    normalize_parity,
    order_vertices,
    random_refinement,
    require_valid,
    validate,
)
from jung.services.surface_graph import blow_down_minimal, surface_dual_graph
from jung.services.verifier import run_all
from jung.transformers.dot import DotRenderer
from jung.validation import ValidationError, parse_order, validate_steps

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

CommandResult = tuple[int, str]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("source", nargs="?", help="Graph JSON path or bundled fixture name")
    common.add_argument("--input", "-i", dest="input", help="Graph JSON path or fixture name")
    common.add_argument("--output", "-o", help="Write the artifact here instead of stdout")
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
        help="Artifact format",
    )
    common.add_argument("--order", help="Explicit vertex order: id,id,...")
    common.add_argument(
        "--minimal", action="store_true", help="Blow the surface graph down to a minimal one"
    )
    common.add_argument("--seed", type=int, help="Refinement seed")
    common.add_argument("--steps", type=int, help="Refinement steps")

    parser = argparse.ArgumentParser(
        prog="jung", description="Canonical embedded resolution of f(x, y) + z^2"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    helps = {
        Command.VALIDATE: "Check the curve graph invariants",
        Command.NORMALIZE: "Insert vertices between adjacent odd vertices",
        Command.BUILD: "Build the divisor complex",
        Command.SURFACE_GRAPH: "Dual resolution graph of {f + z^2 = 0}",
        Command.CHECK: "Run every verification check",
        Command.RENDER: "Render the divisor complex as DOT",
    }
    for command, text in helps.items():
        subparsers.add_parser(command.value, parents=[common], help=text, description=text)
    return parser


def parse_config(argv: list[str] | None = None) -> CliConfig:
    """
    Parse arguments into a CliConfig.

    Raises:
        CliUsageError: If the input is missing or given twice, or if --order
            is combined with a refinement (--seed or --steps)
        ValidationError: If --order or --steps is malformed
    """
    args = build_parser().parse_args(argv)
    if args.source and args.input and args.source != args.input:
        raise CliUsageError("Give the input either positionally or with --input, not both")
    source = args.input or args.source
    if not source:
        raise CliUsageError("An input graph is required")
    if args.steps is not None:
        validate_steps(args.steps)
    if args.order is not None and (args.seed is not None or args.steps is not None):
        raise CliUsageError(
            "--order names vertices of the input graph and cannot be combined with --seed or --steps"
        )
    return CliConfig(
        command=Command(args.command),
        input=source,
        output=args.output,
        format=OutputFormat(args.format),
        order=parse_order(args.order),
        minimal=args.minimal,
        seed=args.seed,
        steps=args.steps,
    )


def _json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2) + "\n"


def _validation_report(graph: CurveGraph) -> CheckReport:
    report = validate(graph)
    if report.valid:
        return CheckReport.of(
            [CheckResult(check="graph.valid", scope=graph.name or "graph", passed=True)]
        )
    return CheckReport.of(
        [
            CheckResult(
                check="graph.valid",
                scope=",".join(v.ids) or graph.name or "graph",
                passed=False,
                details={"code": v.code.value, "message": v.message},
            )
            for v in report.violations
        ]
    )


def cmd_validate(config: CliConfig, graph: CurveGraph) -> CommandResult:
    report = _validation_report(graph)
    return (EXIT_OK if report.passed else EXIT_VIOLATION), _json(report)


def cmd_normalize(config: CliConfig, graph: CurveGraph) -> CommandResult:
    require_valid(graph)
    normalized = normalize_parity(graph)
    if config.format == OutputFormat.DOT:
        return EXIT_OK, DotRenderer().curve_graph(normalized)
    return EXIT_OK, _json(normalized)


def _complex(config: CliConfig, graph: CurveGraph) -> DivisorComplex:
    return build_complex(order_vertices(normalize_parity(graph), config.order))


def cmd_build(config: CliConfig, graph: CurveGraph) -> CommandResult:
    complex_ = _complex(config, graph)
    if config.format == OutputFormat.DOT:
        return EXIT_OK, DotRenderer().divisor_complex(complex_)
    return EXIT_OK, _json(complex_)


def cmd_surface_graph(config: CliConfig, graph: CurveGraph) -> CommandResult:
    sgraph = surface_dual_graph(_complex(config, graph))
    if config.minimal:
        sgraph = blow_down_minimal(sgraph)
    if config.format == OutputFormat.DOT:
        return EXIT_OK, DotRenderer().surface_graph(sgraph, title=graph.name or "surface_graph")
    return EXIT_OK, _json(sgraph)


def cmd_check(config: CliConfig, graph: CurveGraph) -> CommandResult:
    seeds = (config.seed,) if config.seed is not None else DEFAULT_REFINEMENT_SEEDS
    steps = config.steps if config.steps is not None else DEFAULT_REFINEMENT_STEPS
    report = run_all(graph, seeds=seeds, steps=steps, order=config.order)
    return (EXIT_OK if report.passed else EXIT_VIOLATION), _json(report)


def cmd_render(config: CliConfig, graph: CurveGraph) -> CommandResult:
    return EXIT_OK, DotRenderer().divisor_complex(_complex(config, graph))


COMMANDS: dict[Command, Callable[[CliConfig, CurveGraph], CommandResult]] = {
    Command.VALIDATE: cmd_validate,
    Command.NORMALIZE: cmd_normalize,
    Command.BUILD: cmd_build,
    Command.SURFACE_GRAPH: cmd_surface_graph,
    Command.CHECK: cmd_check,
    Command.RENDER: cmd_render,
}


def _emit(config: CliConfig, status: int, text: str) -> None:
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
    elif status == EXIT_OK:
        sys.stdout.write(text)
    if status != EXIT_OK:
        sys.stderr.write(text)


def _exit_code(error: JungError) -> int:
    if isinstance(error, GraphParseError | CliUsageError | InvalidOrderError):
        return EXIT_USAGE
    return EXIT_VIOLATION


def main(argv: list[str] | None = None) -> int:
    """Run one command and return the process exit status."""
    settings = get_settings()
    configure_logging(
        level=settings.log_level, json_format=settings.log_json, stream=settings.log_stream
    )
    run_id = set_run_id()

    try:
        config = parse_config(argv)
    except (CliUsageError, ValidationError) as exc:
        sys.stderr.write(f"jung: error: {exc}\n")
        return EXIT_USAGE

    logger.info("Running command", command=config.command.value, input=config.input, run_id=run_id)
    try:
        graph = load_graph(config.input)
        if config.seed is not None or config.steps is not None:
            graph = random_refinement(
                graph,
                config.seed if config.seed is not None else 0,
                config.steps if config.steps is not None else DEFAULT_REFINEMENT_STEPS,
            )
        status, text = COMMANDS[config.command](config, graph)
    except JungError as exc:
        code = _exit_code(exc)
        logger.warning("Command failed", command=config.command.value, error=exc.message)
        failure = CheckResult(
            check="error", scope=config.input, passed=False, details=exc.to_dict()
        )
        sys.stderr.write(_json(CheckReport.of([failure])))
        return code

    _emit(config, status, text)
    return status


def run() -> None:
    """Console script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
