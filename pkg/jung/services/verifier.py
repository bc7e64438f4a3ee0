"""
Exact cross-checks of the construction.

Every check returns a CheckReport and never raises on a failing property:
faults are reported per scope (surface, curve, vertex or graph id).
"""

import re
from collections.abc import Iterable

import sympy

from jung.config.logging import get_logger
from jung.constants import (
    DEFAULT_REFINEMENT_SEEDS,
    DEFAULT_REFINEMENT_STEPS,
    ORACLE_MAX_MULTIPLICITY,
    STRICT_SHEET_ID,
)
from jung.errors import DivisibilityError, JungError
from jung.events import PipelineEvent, log_event
from jung.models.complex import Curve, DivisorComplex
from jung.models.curve import CurveGraph
from jung.models.local import ChainDescriptor
from jung.models.report import CheckReport, CheckResult
from jung.models.surface import SGraph
from jung.services.assembler import (
    build_complex,
    restricted_class,
    self_intersection_class,
)
from jung.services.curve_graph import (
    is_negative_definite,
    normalize_parity,
    order_vertices,
    random_refinement,
    validate,
)
from jung.services.local_models import (
    FIBER,
    blow_up_count,
    fiber_balance,
    fiber_chain,
    intersection_form,
    local_blowup_oracle,
    pairing,
)
from jung.services.surface_graph import (
    NON_CONTRACTIBLE_FLAG,
    adjacent_weights,
    blow_down_minimal,
    classify_ade,
    graphs_isomorphic,
    strict_transform_curve,
    surface_dual_graph,
)

logger = get_logger(__name__)

BRIESKORN_NAME = re.compile(r"^brieskorn_2_(\d+)$")


def _report(check: str, results: list[CheckResult], graph: str = "") -> CheckReport:
    report = CheckReport.of(results)
    failed = [r.scope for r in report.failures]
    log_event(
        PipelineEvent.CHECK_FAILED if failed else PipelineEvent.CHECK_PASSED,
        graph=graph,
        success=not failed,
        details={"check": check, "scopes": len(results), "failed": failed},
    )
    return report


def _chains(complex_: DivisorComplex) -> Iterable[tuple[str, str, int, ChainDescriptor]]:
    for surface in complex_.surfaces:
        if surface.level is None or surface.level.modified is None:
            continue
        for point in surface.level.modified.modified_points:
            yield surface.id, point.label, point.m, point.chain


def check_fiber_balance(complex_: DivisorComplex) -> CheckReport:
    """Every fiber chain pulls the fiber class back to a class orthogonal to each component."""
    results = []
    for surface_id, label, m, chain in _chains(complex_):
        residual = fiber_balance(chain)
        results.append(
            CheckResult(
                check="fiber_balance",
                scope=f"{surface_id}:{label}",
                passed=not any(residual),
                details={"m": m, "chain": chain.as_pairs(), "residual": residual},
            )
        )
    return _report("fiber_balance", results, complex_.graph)


def triple_point_residual(complex_: DivisorComplex, curve: Curve) -> int:
    """m_D1 (C^2 in D2) + m_D2 (C^2 in D1) + sum of m_D over triple points."""
    first, second = curve.sides
    total = complex_.g_mult(first.surface) * second.self_int
    total += complex_.g_mult(second.surface) * first.self_int
    total += sum(
        complex_.g_mult(t.third) * t.intersection for t in complex_.triple_points_on(curve.id)
    )
    return total


def check_triple_point_formula(complex_: DivisorComplex) -> CheckReport:
    """The triple point formula on every compact curve with complete data."""
    results = []
    for curve in complex_.curves:
        if not curve.complete:
            continue
        residual = triple_point_residual(complex_, curve)
        results.append(
            CheckResult(
                check="triple_point_formula",
                scope=curve.id,
                passed=residual == 0,
                details={
                    "surfaces": curve.surfaces,
                    "self_ints": curve.self_ints,
                    "residual": residual,
                },
            )
        )
    return _report("triple_point_formula", results, complex_.graph)


def sgraph_matrix(sgraph: SGraph) -> sympy.Matrix:
    index = {vertex.id: i for i, vertex in enumerate(sgraph.vertices)}
    matrix = sympy.diag(*[vertex.self_int for vertex in sgraph.vertices])
    for a, b in sgraph.edges:
        if a == b:
            matrix[index[a], index[a]] += 2
        else:
            matrix[index[a], index[b]] += 1
            matrix[index[b], index[a]] += 1
    return matrix


def check_negative_definite(sgraph: SGraph, scope: str = "sgraph") -> CheckReport:
    """An empty graph (smooth {g = 0}) has the empty form and passes."""
    smooth = not sgraph.vertices
    passed = smooth or is_negative_definite(sgraph_matrix(sgraph))
    return _report(
        "negative_definite",
        [
            CheckResult(
                check="negative_definite",
                scope=scope,
                passed=passed,
                details={"vertices": len(sgraph.vertices), "edges": len(sgraph.edges), "smooth": smooth},
            )
        ],
    )


def check_picard_ranks(complex_: DivisorComplex) -> CheckReport:
    """Basis size, blow-up count and unimodularity of every compact level."""
    results = []
    for surface in complex_.surfaces:
        if not surface.compact:
            continue
        basis, gram = intersection_form(surface.level)
        expected = 2
        if surface.level.modified is not None:
            expected += sum(blow_up_count(p.m) for p in surface.level.modified.modified_points)
        det = int(gram.det(method="bareiss"))
        results.append(
            CheckResult(
                check="picard_rank",
                scope=surface.id,
                passed=len(basis) == surface.picard_rank == expected and abs(det) == 1,
                details={"rank": surface.picard_rank, "expected": expected, "det": det},
            )
        )
    return _report("picard_rank", results, complex_.graph)


def check_divisibility(complex_: DivisorComplex) -> CheckReport:
    """E_k^2 exists as an integral class on every compact surface."""
    results = []
    for surface in complex_.surfaces:
        if not surface.compact:
            continue
        try:
            square = self_intersection_class(complex_, surface.id)
            result = CheckResult(
                check="divisibility",
                scope=surface.id,
                passed=True,
                details={"class": square.as_dict()},
            )
        except DivisibilityError as exc:
            result = CheckResult(
                check="divisibility", scope=surface.id, passed=False, details=exc.details
            )
        results.append(result)
    return _report("divisibility", results, complex_.graph)


def check_normal_bundles(complex_: DivisorComplex) -> CheckReport:
    """E_k^2 . C equals C^2 in E_l for every curve C = E_k . E_l with E_k compact."""
    squares = {}
    results = []
    for curve in complex_.curves:
        if not curve.compact:
            continue
        for side in curve.sides:
            surface = complex_.surface(side.surface)
            other = curve.other(side.surface)
            if not surface.compact or other.self_int is None:
                continue
            try:
                if surface.id not in squares:
                    squares[surface.id] = self_intersection_class(complex_, surface.id)
            except DivisibilityError as exc:
                results.append(
                    CheckResult(
                        check="normal_bundle",
                        scope=f"{curve.id}@{surface.id}",
                        passed=False,
                        details=exc.details,
                    )
                )
                continue
            _, gram = intersection_form(surface.level)
            curve_class = restricted_class(complex_, surface.id, curve.id)
            degree = pairing(gram, squares[surface.id].coefficients, curve_class.coefficients)
            results.append(
                CheckResult(
                    check="normal_bundle",
                    scope=f"{curve.id}@{surface.id}",
                    passed=degree == other.self_int,
                    details={"degree": degree, "expected": other.self_int},
                )
            )
    return _report("normal_bundle", results, complex_.graph)


def _oracle_result(m: int) -> CheckResult:
    table = fiber_chain(m)
    oracle = local_blowup_oracle(m)
    return CheckResult(
        check="oracle",
        scope=f"m={m:03d}",
        passed=table == oracle,
        details={"table": table.as_pairs(), "oracle": oracle.as_pairs()},
    )


def check_oracle(complex_: DivisorComplex) -> CheckReport:
    """Every chain used by the complex equals its blow-up simulation."""
    weights = sorted({m for _, _, m, _ in _chains(complex_)})
    return _report("oracle", [_oracle_result(m) for m in weights], complex_.graph)


def check_oracle_range(max_m: int = ORACLE_MAX_MULTIPLICITY) -> CheckReport:
    return _report("oracle", [_oracle_result(m) for m in range(1, max_m + 1)])


def check_strict_transforms(complex_: DivisorComplex) -> CheckReport:
    """
    Case split of S_i^m: component count, branch parity, genus, degree
    over A_i, self-intersection in the host and the triple point formula
    of each component. Vertices with m_i = 1 are skipped: S_i then lies on
    the non-compact E^m(A_i).
    """
    results = []
    for vertex_id in complex_.order:
        tower = complex_.tower(vertex_id)
        if tower.m == 1:
            continue
        data = strict_transform_curve(complex_, vertex_id)
        problems = []
        weights = adjacent_weights(complex_, vertex_id)
        split = tower.m % 2 == 0 and all(w % 2 == 0 for w in weights)
        if data.components != (2 if split else 1):
            problems.append("components")
        if data.branch_count % 2:
            problems.append("branch_count")
        if data.components == 2 and (data.genus or data.branch_count):
            problems.append("genus")

        surface = complex_.surface(data.host)
        basis, gram = intersection_form(surface.level)
        fiber = [1 if b == FIBER else 0 for b in basis]
        coefficients = data.class_in_host.coefficients
        degree = pairing(gram, coefficients, fiber)
        if degree != (2 if tower.m % 2 == 0 else 1):
            problems.append("degree")
        if pairing(gram, coefficients, coefficients) != data.components * data.self_int_in_host:
            problems.append("self_int_in_host")

        residuals = {
            curve.id: triple_point_residual(complex_, curve)
            for curve in complex_.curves
            if STRICT_SHEET_ID in curve.surfaces and curve.base.ids == [vertex_id]
        }
        if any(residuals.values()):
            problems.append("triple_point")

        results.append(
            CheckResult(
                check="strict_transforms",
                scope=vertex_id,
                passed=not problems,
                details={
                    "components": data.components,
                    "genus": data.genus,
                    "branch_count": data.branch_count,
                    "degree": degree,
                    "residuals": residuals,
                    "problems": problems,
                },
            )
        )
    return _report("strict_transforms", results, complex_.graph)


def minimal_surface_graph(graph: CurveGraph, order: list[str] | None = None) -> SGraph:
    """Full pipeline: normalize, order, build, dual graph, blow down."""
    ordered = order_vertices(normalize_parity(graph), order)
    return blow_down_minimal(surface_dual_graph(build_complex(ordered)))


def check_refinement_invariance(
    graph: CurveGraph,
    seeds: Iterable[int] = DEFAULT_REFINEMENT_SEEDS,
    steps: int = DEFAULT_REFINEMENT_STEPS,
    reference: SGraph | None = None,
) -> CheckReport:
    """The minimal graph of {g = 0} does not depend on the resolution of f."""
    reference = reference or minimal_surface_graph(graph)
    results = []
    for seed in seeds:
        try:
            refined = random_refinement(graph, seed, steps)
            minimal = minimal_surface_graph(refined)
            passed = graphs_isomorphic(reference, minimal)
            details = {
                "vertices": len(refined.vertices),
                "minimal_vertices": len(minimal.vertices),
            }
        except JungError as exc:
            passed, details = False, exc.to_dict()
        results.append(
            CheckResult(
                check="refinement_invariance",
                scope=f"seed={seed}",
                passed=passed,
                details={"steps": steps, **details},
            )
        )
    return _report("refinement_invariance", results, graph.name)


def expected_ade(graph_name: str) -> str | None:
    """A_{q-1} for x^2 + y^q, when the graph name records q."""
    match = BRIESKORN_NAME.match(graph_name)
    return f"A_{int(match.group(1)) - 1}" if match else None


def check_blow_down(minimal: SGraph, graph_name: str = "") -> CheckReport:
    """The reduced graph is minimal, and is A_{q-1} for Brieskorn (2, q) inputs."""
    classification = classify_ade(minimal)
    expected = expected_ade(graph_name)
    stuck = [f for f in minimal.flags if f.startswith(NON_CONTRACTIBLE_FLAG)]
    return _report(
        "blow_down",
        [
            CheckResult(
                check="blow_down",
                scope=graph_name or "sgraph",
                passed=not stuck and (expected is None or classification == expected),
                details={"ade": classification, "expected": expected, "flags": stuck},
            )
        ],
        graph_name,
    )


def run_all(
    graph: CurveGraph,
    seeds: Iterable[int] = DEFAULT_REFINEMENT_SEEDS,
    steps: int = DEFAULT_REFINEMENT_STEPS,
    order: list[str] | None = None,
) -> CheckReport:
    """
    Run the pipeline on a graph and every check on its products.

    Input that cannot be built is reported as a failing result rather than
    raised, so callers always receive a report.
    """
    report = validate(graph)
    if not report.valid:
        return CheckReport.of(
            [
                CheckResult(
                    check="graph.valid",
                    scope=",".join(v.ids) or graph.name,
                    passed=False,
                    details={"code": v.code.value, "message": v.message},
                )
                for v in report.violations
            ]
        )

    try:
        ordered = order_vertices(normalize_parity(graph), order)
        complex_ = build_complex(ordered)
        sgraph = surface_dual_graph(complex_)
        minimal = blow_down_minimal(sgraph)
    except JungError as exc:
        return CheckReport.of(
            [
                CheckResult(
                    check="construction",
                    scope=graph.name or "graph",
                    passed=False,
                    details=exc.to_dict(),
                )
            ]
        )

    return CheckReport().merge(
        check_fiber_balance(complex_),
        check_triple_point_formula(complex_),
        check_picard_ranks(complex_),
        check_divisibility(complex_),
        check_normal_bundles(complex_),
        check_oracle(complex_),
        check_strict_transforms(complex_),
        check_negative_definite(sgraph, scope="sgraph"),
        check_negative_definite(minimal, scope="minimal"),
        check_blow_down(minimal, graph.name),
        check_refinement_invariance(graph, seeds, steps, reference=minimal),
    )
