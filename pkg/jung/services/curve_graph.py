"""
Validation, parity normalization and ordering of curve graphs.

Also provides the two input generators: the Brieskorn builder for
x^p + y^q and randomized refinements of a valid graph by graph-level
blow-ups.
"""

import random
from collections import Counter

import networkx as nx
import sympy

from jung.config.logging import get_logger
from jung.constants import ARROW_PREFIX, BRIESKORN_VERTEX_PREFIX, INSERTED_VERTEX_PREFIX
from jung.errors import (
    GraphNotNormalizedError,
    GraphStructureError,
    InvalidGraphError,
    InvalidOrderError,
)
from jung.events import PipelineEvent, log_event
from jung.models.curve import (
    Arrow,
    CurveGraph,
    OrderedCurveGraph,
    ValidationReport,
    Vertex,
    Violation,
    ViolationCode,
)
from jung.validation import validate_brieskorn_exponents, validate_steps

logger = get_logger(__name__)


def _check_structure(graph: CurveGraph) -> None:
    """Raise on duplicate ids or references to unknown vertices."""
    counts = Counter(graph.vertex_ids)
    duplicates = sorted(vertex_id for vertex_id, n in counts.items() if n > 1)
    if duplicates:
        raise GraphStructureError(f"Duplicate vertex ids: {', '.join(duplicates)}", duplicates)

    arrow_counts = Counter(arrow.id for arrow in graph.arrows)
    clashes = sorted(
        arrow_id for arrow_id, n in arrow_counts.items() if n > 1 or arrow_id in counts
    )
    if clashes:
        raise GraphStructureError(f"Duplicate arrow ids: {', '.join(clashes)}", clashes)

    known = set(counts)
    unknown = sorted(
        {vertex_id for edge in graph.edges for vertex_id in edge if vertex_id not in known}
        | {arrow.attach for arrow in graph.arrows if arrow.attach not in known}
    )
    if unknown:
        raise GraphStructureError(f"Unknown vertex ids: {', '.join(unknown)}", unknown)


def intersection_matrix(graph: CurveGraph) -> sympy.Matrix:
    """Symmetric matrix with e_i on the diagonal and edge counts off it."""
    index = {vertex_id: i for i, vertex_id in enumerate(graph.vertex_ids)}
    n = len(index)
    matrix = sympy.zeros(n, n)
    for vertex in graph.vertices:
        matrix[index[vertex.id], index[vertex.id]] = vertex.e
    for a, b in graph.edges:
        if a != b:
            matrix[index[a], index[b]] += 1
            matrix[index[b], index[a]] += 1
    return matrix


def is_negative_definite(matrix: sympy.Matrix) -> bool:
    """Exact test: the k-th leading principal minor has sign (-1)^k."""
    for k in range(1, matrix.rows + 1):
        minor = matrix[:k, :k].det(method="bareiss")
        if (-1) ** k * minor <= 0:
            return False
    return True


def validate(graph: CurveGraph) -> ValidationReport:
    """
    Check every curve graph invariant.

    Returns:
        ValidationReport listing each violation; empty iff the graph is valid

    Raises:
        GraphStructureError: On duplicate ids or unknown references
    """
    _check_structure(graph)
    violations: list[Violation] = []

    if not graph.vertices:
        violations.append(Violation(code=ViolationCode.EMPTY, message="Graph has no vertices"))
        return ValidationReport(graph=graph.name, violations=violations)

    for vertex in graph.vertices:
        if vertex.e > -1:
            violations.append(
                Violation(
                    code=ViolationCode.SELF_INTERSECTION,
                    ids=[vertex.id],
                    message=f"e = {vertex.e} must be <= -1",
                )
            )
        if vertex.m < 1:
            violations.append(
                Violation(
                    code=ViolationCode.MULTIPLICITY,
                    ids=[vertex.id],
                    message=f"m = {vertex.m} must be >= 1",
                )
            )

    for arrow in graph.arrows:
        if arrow.m != 1:
            violations.append(
                Violation(
                    code=ViolationCode.ARROW_MULTIPLICITY,
                    ids=[arrow.id],
                    message=f"Arrow multiplicity {arrow.m} must be 1 (reduced f)",
                )
            )

    seen: set[frozenset[str]] = set()
    for a, b in graph.edges:
        if a == b:
            violations.append(
                Violation(code=ViolationCode.SELF_LOOP, ids=[a], message=f"Loop at {a}")
            )
            continue
        key = frozenset((a, b))
        if key in seen:
            violations.append(
                Violation(
                    code=ViolationCode.MULTIPLE_EDGE,
                    ids=sorted(key),
                    message=f"More than one edge between {a} and {b}",
                )
            )
        seen.add(key)

    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(graph.vertex_ids)
    nx_graph.add_edges_from(graph.edges)
    if not nx.is_connected(nx_graph):
        components = sorted(sorted(c) for c in nx.connected_components(nx_graph))
        violations.append(
            Violation(
                code=ViolationCode.DISCONNECTED,
                ids=[c[0] for c in components],
                message=f"Graph has {len(components)} connected components",
            )
        )

    vertex_map = graph.vertex_map
    for vertex in graph.vertices:
        total = vertex.e * vertex.m
        total += sum(vertex_map[n].m for n in graph.neighbors(vertex.id) if n != vertex.id)
        total += sum(arrow.m for arrow in graph.arrows_at(vertex.id))
        if total != 0:
            violations.append(
                Violation(
                    code=ViolationCode.RELATION,
                    ids=[vertex.id],
                    message=f"e*m + sum of adjacent multiplicities = {total}, expected 0",
                )
            )

    if not is_negative_definite(intersection_matrix(graph)):
        violations.append(
            Violation(
                code=ViolationCode.NOT_NEGATIVE_DEFINITE,
                ids=graph.vertex_ids,
                message="Intersection matrix is not negative definite",
            )
        )

    report = ValidationReport(graph=graph.name, violations=violations)
    log_event(
        PipelineEvent.GRAPH_VALIDATED,
        graph=graph.name,
        success=report.valid,
        details={"violations": [v.code.value for v in violations]},
    )
    return report


def require_valid(graph: CurveGraph) -> None:
    """Raise InvalidGraphError unless the graph validates."""
    report = validate(graph)
    if not report.valid:
        raise InvalidGraphError([v.model_dump(mode="json") for v in report.violations])


def fresh_id(used: set[str], prefix: str = INSERTED_VERTEX_PREFIX) -> str:
    """First id of the form prefix + n (n >= 1) not in used."""
    n = 1
    while f"{prefix}{n}" in used:
        n += 1
    return f"{prefix}{n}"


def _used_ids(graph: CurveGraph) -> set[str]:
    return set(graph.vertex_ids) | {arrow.id for arrow in graph.arrows}


def odd_adjacencies(graph: CurveGraph) -> list[list[str]]:
    """Edges and vertex-arrow pairs whose two multiplicities are odd."""
    vertex_map = graph.vertex_map
    found = [
        sorted([a, b])
        for a, b in graph.edges
        if vertex_map[a].m % 2 == 1 and vertex_map[b].m % 2 == 1
    ]
    found += [
        [arrow.attach, arrow.id]
        for arrow in graph.arrows
        if vertex_map[arrow.attach].m % 2 == 1 and arrow.m % 2 == 1
    ]
    return sorted(found)


def normalize_parity(graph: CurveGraph) -> CurveGraph:
    """
    Insert a (-1) vertex into every odd-odd adjacency.

    The inserted multiplicity is even, so one pass suffices. Insertions run
    in sorted order so the fresh ids are deterministic.

    Raises:
        InvalidGraphError: If the input graph is not valid
    """
    require_valid(graph)
    vertex_map = graph.vertex_map
    odd = {v.id for v in graph.vertices if v.m % 2 == 1}
    used = _used_ids(graph)
    e_shift: Counter[str] = Counter()
    new_vertices: list[Vertex] = []
    edges: list[tuple[str, str]] = []
    inserted_edges: list[tuple[str, str]] = []

    for a, b in sorted(graph.edges, key=lambda edge: sorted(edge)):
        if a in odd and b in odd:
            new_id = fresh_id(used)
            used.add(new_id)
            new_vertices.append(Vertex(id=new_id, e=-1, m=vertex_map[a].m + vertex_map[b].m))
            e_shift[a] += 1
            e_shift[b] += 1
            inserted_edges += [(a, new_id), (new_id, b)]
    edges = [edge for edge in graph.edges if not (edge[0] in odd and edge[1] in odd)]

    arrows: list[Arrow] = []
    moved: dict[str, Arrow] = {}
    for arrow in sorted(graph.arrows, key=lambda a: a.id):
        if arrow.attach in odd and arrow.m % 2 == 1:
            new_id = fresh_id(used)
            used.add(new_id)
            new_vertices.append(Vertex(id=new_id, e=-1, m=vertex_map[arrow.attach].m + arrow.m))
            e_shift[arrow.attach] += 1
            inserted_edges.append((arrow.attach, new_id))
            moved[arrow.id] = arrow.model_copy(update={"attach": new_id})
    for arrow in graph.arrows:
        arrows.append(moved.get(arrow.id, arrow))

    if not new_vertices:
        return graph

    vertices = [
        v.model_copy(update={"e": v.e - e_shift[v.id]}) if e_shift[v.id] else v
        for v in graph.vertices
    ]
    result = CurveGraph(
        name=graph.name,
        vertices=vertices + new_vertices,
        edges=edges + inserted_edges,
        arrows=arrows,
    )
    log_event(
        PipelineEvent.GRAPH_NORMALIZED,
        graph=graph.name,
        details={"inserted": [v.id for v in new_vertices]},
    )
    return result


def _check_normalized(graph: CurveGraph) -> None:
    adjacencies = odd_adjacencies(graph)
    if adjacencies:
        raise GraphNotNormalizedError(adjacencies)


def order_vertices(graph: CurveGraph, order: list[str] | None = None) -> OrderedCurveGraph:
    """
    Fix the "older than" order: even multiplicities first, each class by ascending id.

    Args:
        graph: Valid, parity-normalized graph
        order: Optional explicit order; must be a permutation of the vertex
            ids with every even vertex before every odd one

    Raises:
        GraphNotNormalizedError: If an odd-odd adjacency remains
        InvalidOrderError: If the explicit order is rejected
    """
    require_valid(graph)
    _check_normalized(graph)
    vertex_map = graph.vertex_map

    if order is None:
        chosen = sorted(
            graph.vertex_ids, key=lambda vertex_id: (vertex_map[vertex_id].m % 2, vertex_id)
        )
    else:
        if sorted(order) != sorted(graph.vertex_ids):
            raise InvalidOrderError("Order must be a permutation of the vertex ids", order)
        seen_odd = False
        for vertex_id in order:
            if vertex_map[vertex_id].m % 2 == 1:
                seen_odd = True
            elif seen_odd:
                raise InvalidOrderError(
                    f"Even vertex {vertex_id} follows an odd vertex", order
                )
        chosen = list(order)

    log_event(PipelineEvent.GRAPH_ORDERED, graph=graph.name, details={"order": chosen})
    return OrderedCurveGraph(graph=graph, order=chosen)


def _dfs_order(adjacency: dict[str, list[str]], root: str) -> list[str]:
    """Preorder walk visiting neighbors in creation order."""
    seen: list[str] = []
    stack = [root]
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.append(node)
        stack.extend(reversed([n for n in adjacency[node] if n not in seen]))
    return seen


def brieskorn_graph(p: int, q: int) -> CurveGraph:
    """
    Resolution graph of x^p + y^q by the Euclidean blow-up sequence.

    The state (a, b, dx, dy) describes u^a = v^b at the current centre,
    where dx = {u = 0} and dy = {v = 0} are exceptional curves or None.
    Vertices are renamed A1, A2, ... along a walk from the first
    exceptional curve, then parity-normalized.
    """
    validate_brieskorn_exponents(p, q)
    self_ints: dict[str, int] = {}
    mults: dict[str, int] = {}
    adjacency: dict[str, list[str]] = {}
    arrows_on: dict[str, int] = {}
    created: list[str] = []

    def blow_up(dx: str | None, dy: str | None, extra: int) -> str:
        new = f"E{len(created) + 1}"
        created.append(new)
        self_ints[new] = -1
        mults[new] = (mults[dx] if dx else 0) + (mults[dy] if dy else 0) + extra
        adjacency[new] = []
        if dx and dy:
            adjacency[dx].remove(dy)
            adjacency[dy].remove(dx)
        for old in (dx, dy):
            if old:
                self_ints[old] -= 1
                adjacency[old].append(new)
                adjacency[new].append(old)
        return new

    a, b = p, q
    dx: str | None = None
    dy: str | None = None
    while True:
        if a == 1 and dx is None and dy is not None:
            arrows_on[dy] = arrows_on.get(dy, 0) + 1
            break
        if b == 1 and dy is None and dx is not None:
            arrows_on[dx] = arrows_on.get(dx, 0) + 1
            break
        new = blow_up(dx, dy, min(a, b))
        if a == b:
            arrows_on[new] = arrows_on.get(new, 0) + a
            break
        if a < b:
            b, dy = b - a, new
        else:
            a, dx = a - b, new

    walk = _dfs_order(adjacency, created[0])
    names = {old: f"{BRIESKORN_VERTEX_PREFIX}{i + 1}" for i, old in enumerate(walk)}
    vertices = [Vertex(id=names[old], e=self_ints[old], m=mults[old]) for old in walk]
    edges = sorted(
        {
            tuple(sorted((names[a], names[b]), key=lambda n: int(n[1:])))
            for a in walk
            for b in adjacency[a]
        },
        key=lambda edge: (int(edge[0][1:]), int(edge[1][1:])),
    )
    arrows = []
    for old in walk:
        for _ in range(arrows_on.get(old, 0)):
            arrows.append(
                Arrow(id=f"{ARROW_PREFIX}{len(arrows) + 1}", attach=names[old], m=1)
            )
    graph = CurveGraph(name=f"brieskorn_{p}_{q}", vertices=vertices, edges=edges, arrows=arrows)
    return normalize_parity(graph)


def blow_up_free(graph: CurveGraph, vertex_id: str) -> CurveGraph:
    """Blow up a general point of A_i: new (-1) vertex of multiplicity m_i."""
    vertex = graph.vertex(vertex_id)
    new_id = fresh_id(_used_ids(graph))
    vertices = [
        v.model_copy(update={"e": v.e - 1}) if v.id == vertex_id else v for v in graph.vertices
    ]
    return CurveGraph(
        name=graph.name,
        vertices=vertices + [Vertex(id=new_id, e=-1, m=vertex.m)],
        edges=list(graph.edges) + [(vertex_id, new_id)],
        arrows=list(graph.arrows),
    )


def blow_up_satellite(graph: CurveGraph, vertex_id: str, other: str) -> CurveGraph:
    """
    Blow up the point where A_i meets another vertex or an arrow.

    Args:
        graph: Curve graph
        vertex_id: The vertex A_i
        other: An adjacent vertex id or the id of an arrow attached to A_i
    """
    new_id = fresh_id(_used_ids(graph))
    arrow_ids = {arrow.id: arrow for arrow in graph.arrows}
    if other in arrow_ids:
        arrow = arrow_ids[other]
        if arrow.attach != vertex_id:
            raise GraphStructureError(f"Arrow {other} is not attached to {vertex_id}", [other])
        m = graph.vertex(vertex_id).m + arrow.m
        shifted = {vertex_id}
        edges = list(graph.edges) + [(vertex_id, new_id)]
        arrows = [
            a.model_copy(update={"attach": new_id}) if a.id == other else a for a in graph.arrows
        ]
    else:
        if other not in graph.neighbors(vertex_id):
            raise GraphStructureError(f"{vertex_id} and {other} are not adjacent", [other])
        m = graph.vertex(vertex_id).m + graph.vertex(other).m
        shifted = {vertex_id, other}
        edges = [edge for edge in graph.edges if set(edge) != {vertex_id, other}]
        edges += [(vertex_id, new_id), (new_id, other)]
        arrows = list(graph.arrows)
    vertices = [
        v.model_copy(update={"e": v.e - 1}) if v.id in shifted else v for v in graph.vertices
    ]
    return CurveGraph(
        name=graph.name,
        vertices=vertices + [Vertex(id=new_id, e=-1, m=m)],
        edges=edges,
        arrows=arrows,
    )


def random_refinement(graph: CurveGraph, seed: int, steps: int) -> CurveGraph:
    """
    Apply `steps` random graph-level blow-ups, then normalize parity.

    Deterministic for a fixed seed. Each step is a free blow-up on a vertex
    or a satellite blow-up on an edge or vertex-arrow pair, chosen with
    equal probability.
    """
    validate_steps(steps)
    require_valid(graph)
    if steps == 0:
        return graph
    rng = random.Random(seed)
    current = graph
    for _ in range(steps):
        satellites = sorted(tuple(sorted(edge)) for edge in current.edges) + sorted(
            (arrow.attach, arrow.id) for arrow in current.arrows
        )
        if satellites and rng.random() < 0.5:
            vertex_id, other = rng.choice(satellites)
            current = blow_up_satellite(current, vertex_id, other)
        else:
            current = blow_up_free(current, rng.choice(sorted(current.vertex_ids)))
    result = normalize_parity(current)
    log_event(
        PipelineEvent.GRAPH_REFINED,
        graph=graph.name,
        details={"seed": seed, "steps": steps, "vertices": len(result.vertices)},
    )
    return result
