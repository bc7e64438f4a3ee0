"""
Strict transform curves S_i^m and the dual resolution graph of {f + z^2 = 0}.

The vertices of the graph are the components of the curves S_i^m lying on
St(g), decorated with their genus and their self-intersection in St(g).
Two components are joined once per point where they meet, which is the
point where St(g) crosses a chain over an edge of the curve graph.
"""

from collections import defaultdict
from itertools import combinations

import networkx as nx

from jung.config.logging import get_logger
from jung.constants import STRICT_SHEET_ID
from jung.errors import PairingError
from jung.events import PipelineEvent, log_event
from jung.models.complex import CurveClass, DivisorComplex
from jung.models.surface import SCurveData, SGraph, SVertex
from jung.services.assembler import restricted_class, strict_curve_id

logger = get_logger(__name__)

TANGENT_FLAG = "tangent"
NON_CONTRACTIBLE_FLAG = "non-contractible"


def adjacent_weights(complex_: DivisorComplex, vertex_id: str) -> list[int]:
    """Multiplicities of the neighbors and arrows of a vertex, read off its tower."""
    tower = complex_.tower(vertex_id)
    weights = [m.count * 2 for m in tower.top.modifications]
    if tower.levels and tower.levels[-1].modified is not None:
        weights += [point.m for point in tower.levels[-1].modified.modified_points]
    return weights


def strict_transform_curve(complex_: DivisorComplex, vertex_id: str) -> SCurveData:
    """
    Describe S_i^m = St(g) . (tower over A_i).

    S_i^m -> A_i is a double cover branched over the points with odd weight,
    so its genus follows from Hurwitz. It splits into two sections when
    every adjacent weight is even.

    Raises:
        KeyError: If the vertex has no tower in the complex
    """
    tower = complex_.tower(vertex_id)
    weights = adjacent_weights(complex_, vertex_id)
    branch_count = sum(1 for m in weights if m % 2)

    whole = [c for c in complex_.curves if c.id == strict_curve_id(vertex_id)]
    components = whole or [
        complex_.curve(strict_curve_id(vertex_id, sign)) for sign in ("+", "-")
    ]
    host = components[0].sides[0].surface
    host_self_int = components[0].side(host).self_int
    sheet_self_int = components[0].side(STRICT_SHEET_ID).self_int

    class_in_host: CurveClass | None = None
    if complex_.surface(host).compact:
        classes = [restricted_class(complex_, host, c.id) for c in components]
        class_in_host = CurveClass(
            surface=host,
            basis=classes[0].basis,
            coefficients=[sum(values) for values in zip(*(c.coefficients for c in classes))],
        )

    odd_weights = 0
    c1m_meets = 0
    if tower.m % 2 == 0:
        modified = tower.levels[-1].modified
        odd_weights = sum(1 for p in modified.modified_points if p.m % 2 and p.m >= 3)
        c1m_meets = sum(1 for p in modified.modified_points if p.m == 1)

    return SCurveData(
        vertex=vertex_id,
        host=host,
        components=len(components),
        genus=(branch_count - 2) // 2 if branch_count >= 2 else 0,
        self_int_in_host=host_self_int,
        self_int_in_stg=sheet_self_int,
        class_in_host=class_in_host,
        c1m_meets=c1m_meets,
        branch_count=branch_count,
        odd_weights=odd_weights,
    )


def surface_dual_graph(complex_: DivisorComplex) -> SGraph:
    """
    Build the dual graph of the strict transform of {g = 0}.

    Split components pair by sign: across every edge between two split
    vertices, + meets + and - meets -. This is the assignment propagated
    from any root along any spanning tree, and non-tree edges follow it.

    Raises:
        PairingError: If a meeting point does not join exactly two curves
    """
    strict_ids = {c.id for c in complex_.curves if STRICT_SHEET_ID in c.surfaces}

    vertices = []
    for vertex_id in complex_.order:
        data = strict_transform_curve(complex_, vertex_id)
        for curve in complex_.curves:
            if curve.id not in strict_ids or curve.base.ids != [vertex_id]:
                continue
            side = curve.side(STRICT_SHEET_ID)
            vertices.append(
                SVertex(
                    id=curve.id,
                    from_vertex=vertex_id,
                    component=side.sign,
                    genus=data.genus,
                    self_int=side.self_int,
                )
            )

    by_point: dict[str, list[tuple[str, int]]] = defaultdict(list)
    for record in complex_.triple_points:
        if record.curve in strict_ids:
            by_point[record.point].append((record.curve, record.intersection))

    edges: list[tuple[str, str]] = []
    flags: list[str] = []
    for point, members in by_point.items():
        curves = sorted({curve for curve, _ in members})
        if len(curves) != 2:
            raise PairingError(f"Point {point} carries {len(curves)} strict transform curves")
        edges.append((curves[0], curves[1]))
        if any(intersection > 1 for _, intersection in members):
            flags.append(f"{TANGENT_FLAG}:{curves[0]}|{curves[1]}")

    sgraph = SGraph(vertices=vertices, edges=edges, flags=flags)
    log_event(
        PipelineEvent.SGRAPH_BUILT,
        graph=complex_.graph,
        details={"vertices": len(vertices), "edges": len(edges)},
    )
    return sgraph


def to_multigraph(sgraph: SGraph) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    for vertex in sgraph.vertices:
        graph.add_node(vertex.id, genus=vertex.genus, self_int=vertex.self_int)
    graph.add_edges_from(sgraph.edges)
    return graph


def _contractible(graph: nx.MultiGraph, node: str) -> bool:
    data = graph.nodes[node]
    if data["genus"] != 0 or data["self_int"] != -1:
        return False
    if graph.has_edge(node, node):
        return False
    return all(graph.number_of_edges(node, other) == 1 for other in graph.neighbors(node))


def blow_down_minimal(sgraph: SGraph) -> SGraph:
    """
    Contract rational -1 vertices until none is contractible.

    A contractible vertex has simple edges to distinct neighbors. Each
    neighbor gains +1 and every pair of neighbors gains an edge. Vertices
    are taken in list order; -1 vertices that cannot be contracted are
    kept and flagged.
    """
    graph = to_multigraph(sgraph)
    order = [v.id for v in sgraph.vertices]
    contracted = []

    while True:
        node = next((n for n in order if n in graph and _contractible(graph, n)), None)
        if node is None:
            break
        neighbors = sorted(graph.neighbors(node), key=order.index)
        graph.remove_node(node)
        for other in neighbors:
            graph.nodes[other]["self_int"] += 1
        for a, b in combinations(neighbors, 2):
            graph.add_edge(a, b)
        contracted.append(node)

    kept = [v for v in sgraph.vertices if v.id in graph]
    vertices = [
        v.model_copy(update={"self_int": graph.nodes[v.id]["self_int"]}) for v in kept
    ]
    edges = [tuple(sorted((a, b), key=order.index)) for a, b in graph.edges()]
    flags = [f for f in sgraph.flags if all(part in graph for part in f.split(":")[-1].split("|"))]
    flags += [
        f"{NON_CONTRACTIBLE_FLAG}:{v.id}"
        for v in vertices
        if v.genus == 0 and v.self_int == -1
    ]
    if any(f.startswith(NON_CONTRACTIBLE_FLAG) for f in flags):
        logger.warning("Non-contractible -1 vertices remain", flags=flags)

    minimal = SGraph(vertices=vertices, edges=edges, flags=flags)
    log_event(
        PipelineEvent.SGRAPH_MINIMIZED,
        details={"contracted": contracted, "vertices": len(vertices)},
    )
    return minimal


def classify_ade(sgraph: SGraph) -> str | None:
    """
    Name the rational double point whose graph this is, if any.

    Returns "A_n", "D_n", "E_6", "E_7" or "E_8", or None when some vertex is
    not a rational -2 curve or the graph is not a star with at most three legs.
    """
    if not sgraph.vertices:
        return None
    if any(v.genus != 0 or v.self_int != -2 for v in sgraph.vertices):
        return None
    graph = to_multigraph(sgraph)
    simple = nx.Graph(graph)
    if simple.number_of_edges() != graph.number_of_edges() or not nx.is_tree(simple):
        return None

    n = simple.number_of_nodes()
    branches = [node for node, degree in simple.degree() if degree > 2]
    if not branches:
        return f"A_{n}"
    if len(branches) > 1 or simple.degree(branches[0]) != 3:
        return None

    center = branches[0]
    legs = []
    for start in simple.neighbors(center):
        length, previous, current = 1, center, start
        while simple.degree(current) == 2:
            previous, current = current, next(x for x in simple.neighbors(current) if x != previous)
            length += 1
        legs.append(length)
    legs.sort()

    if legs[0] == 1 and legs[1] == 1:
        return f"D_{n}"
    if legs[0] == 1 and legs[1] == 2 and legs[2] in (2, 3, 4):
        return f"E_{n}"
    return None


def graphs_isomorphic(a: SGraph, b: SGraph) -> bool:
    """Isomorphism of decorated multigraphs (genus, self-int, edge multiplicity)."""
    return nx.is_isomorphic(
        to_multigraph(a),
        to_multigraph(b),
        node_match=lambda x, y: (x["genus"], x["self_int"]) == (y["genus"], y["self_int"]),
    )
