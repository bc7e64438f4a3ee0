"""
Graphviz DOT renderers.

Three undirected graphs can be drawn: the curve graph (vertices labelled
"e (m)"), the surface adjacency multigraph of a divisor complex (one edge
per curve, labels "kind/param (g_mult)") and the dual graph of {g = 0}
(labels "[g] e"). Node and edge order follow the input records so the
output is stable across runs.
"""

from jung.config.logging import get_logger
from jung.models.complex import DivisorComplex, Surface, SurfaceKind
from jung.models.curve import CurveGraph
from jung.models.surface import SGraph

logger = get_logger(__name__)

GRAPH_TEMPLATE = 'graph "{title}" {{\n{attrs}\n{nodes}\n{edges}\n}}\n'
NODE_TEMPLATE = '  "{node_id}" [label="{label}"{extra}];'
EDGE_TEMPLATE = '  "{a}" -- "{b}"{extra};'

KIND_TAGS = {
    SurfaceKind.COMPACT_LEVEL: "level",
    SurfaceKind.NONCOMPACT_E: "E",
    SurfaceKind.STRICT_SHEET: "St",
    SurfaceKind.NONCOMPACT_D: "D~",
}


def _quote(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


class DotRenderer:
    """Renders curve graphs, divisor complexes and surface graphs as DOT."""

    def __init__(self, rankdir: str = "LR"):
        self.rankdir = rankdir

    def _graph(self, title: str, nodes: list[str], edges: list[str]) -> str:
        attrs = f"  rankdir={self.rankdir};\n  node [shape=box, fontname=Helvetica];"
        return GRAPH_TEMPLATE.format(
            title=_quote(title), attrs=attrs, nodes="\n".join(nodes), edges="\n".join(edges)
        )

    @staticmethod
    def _node(node_id: str, label: str, extra: str = "") -> str:
        return NODE_TEMPLATE.format(node_id=_quote(node_id), label=_quote(label), extra=extra)

    @staticmethod
    def _edge(a: str, b: str, extra: str = "") -> str:
        return EDGE_TEMPLATE.format(a=_quote(a), b=_quote(b), extra=extra)

    def curve_graph(self, graph: CurveGraph) -> str:
        nodes = [self._node(v.id, f"{v.e} ({v.m})") for v in graph.vertices]
        nodes += [
            self._node(a.id, f"({a.m})", extra=", shape=plaintext") for a in graph.arrows
        ]
        edges = [self._edge(a, b) for a, b in graph.edges]
        edges += [self._edge(a.attach, a.id, extra=" [style=dashed]") for a in graph.arrows]
        return self._graph(graph.name or "curve_graph", nodes, edges)

    @staticmethod
    def surface_label(surface: Surface) -> str:
        tag = KIND_TAGS[surface.kind]
        if surface.level is not None:
            return f"{tag}/{surface.label} ({surface.g_mult})"
        if surface.disc is not None:
            return f"{tag}/x={surface.disc.zero_section_self_int} ({surface.g_mult})"
        return f"{tag} ({surface.g_mult})"

    def divisor_complex(self, complex_: DivisorComplex) -> str:
        nodes = []
        for surface in complex_.surfaces:
            extra = "" if surface.compact else ", style=dashed"
            nodes.append(self._node(surface.id, self.surface_label(surface), extra=extra))
        edges = []
        for curve in complex_.curves:
            if len(curve.sides) != 2:
                continue
            first, second = curve.sides
            label = "|".join("?" if s is None else str(s) for s in curve.self_ints)
            style = "" if curve.compact else ", style=dashed"
            edges.append(
                self._edge(
                    first.surface, second.surface, extra=f' [label="{_quote(label)}"{style}]'
                )
            )
        logger.debug("Rendered complex", surfaces=len(nodes), curves=len(edges))
        return self._graph(complex_.graph or "divisor_complex", nodes, edges)

    def surface_graph(self, sgraph: SGraph, title: str = "surface_graph") -> str:
        nodes = [self._node(v.id, f"[{v.genus}] {v.self_int}") for v in sgraph.vertices]
        edges = [self._edge(a, b) for a, b in sgraph.edges]
        return self._graph(title, nodes, edges)
