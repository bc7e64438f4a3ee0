"""
Towers of ruled surfaces over the vertices of an ordered curve graph.

Over A_i the transversal singularity u^m + z^2 = 0 is resolved by blowing
up rational curves; each blow-up adds one compact ruled level. The levels,
their g-multiplicities and the self-intersection pairs of the curves
between consecutive levels depend only on (e_i, m_i, x_i).
"""

from jung.config.logging import get_logger
from jung.errors import ConstructionError, TowerPreconditionError, UnknownVertexError
from jung.events import PipelineEvent, log_event
from jung.models.curve import OrderedCurveGraph
from jung.models.tower import (
    AdjacentEntry,
    FreeCurve,
    LevelRole,
    TowerCurve,
    TowerDescriptor,
    TowerLevel,
    TransversalNode,
    VertexContext,
)
from jung.services.local_models import disc_bundle, modified_surface

logger = get_logger(__name__)


def vertex_context(ordered: OrderedCurveGraph, vertex_id: str) -> VertexContext:
    """
    Collect e_i, m_i, l_i, x_i and the neighbor lists of one vertex.

    Raises:
        UnknownVertexError: If the vertex is not in the graph
        ConstructionError: If an older neighbor has odd multiplicity
    """
    graph = ordered.graph
    if vertex_id not in graph.vertex_map:
        raise UnknownVertexError(vertex_id)
    vertex = graph.vertex(vertex_id)

    older: list[AdjacentEntry] = []
    younger: list[AdjacentEntry] = []
    for neighbor in graph.neighbors(vertex_id):
        entry = AdjacentEntry(label=neighbor, m=graph.vertex(neighbor).m)
        (older if ordered.is_older(neighbor, vertex_id) else younger).append(entry)
    younger += [
        AdjacentEntry(label=arrow.id, m=arrow.m, is_arrow=True)
        for arrow in graph.arrows_at(vertex_id)
    ]

    odd_older = [entry.label for entry in older if entry.m % 2]
    if odd_older:
        raise ConstructionError(
            f"Older neighbors of {vertex_id} must have even multiplicity",
            details={"vertex": vertex_id, "odd": odd_older},
        )

    return VertexContext(
        vertex=vertex_id,
        e=vertex.e,
        m=vertex.m,
        l=vertex.m // 2,
        x=-sum(entry.m for entry in older) // 2,
        older=older,
        younger=younger,
    )


def _transversal_chain(m: int) -> list[TransversalNode]:
    """Minimal resolution graph of u^m + z^2 (without its arrows)."""
    half = m // 2
    if m == 1:
        return []
    nodes = [TransversalNode(self_int=-2, mult=2 * k) for k in range(1, half)]
    if m % 2 == 0:
        return nodes + [TransversalNode(self_int=-1, mult=m)]
    return nodes + [
        TransversalNode(self_int=-3, mult=2 * half),
        TransversalNode(self_int=-1, mult=2 * m),
        TransversalNode(self_int=-2, mult=m),
    ]


def build_tower(ctx: VertexContext) -> TowerDescriptor:
    """
    Build the tower over A_i.

    Even m_i = 2l: levels T_1..T_l with parameters k*e - x and g-multiplicity
    2k, the last one modified over the younger points. Odd m_i = 2l+1 >= 3:
    T_1..T_l, then U = X_0 (g = 4l+2) carrying S_i, then V (g = 2l+1).
    m_i = 1: no compact level, S_i lies on E^m(A_i).

    Raises:
        TowerPreconditionError: If the context violates the vertex relation
    """
    e, x, l = ctx.e, ctx.x, ctx.l  # noqa: E741
    levels = [
        TowerLevel(role=LevelRole.RULED, param=k * e - x, g_mult=2 * k) for k in range(1, l)
    ]
    free_curves: list[FreeCurve] = []

    if ctx.is_even:
        bottom_e = x - l * e
        weights = [entry.m for entry in ctx.younger]
        if 2 * bottom_e != sum(weights):
            raise TowerPreconditionError(
                ctx.vertex, f"2 * (x - l*e) = {2 * bottom_e} but younger weights sum to {sum(weights)}"
            )
        if bottom_e < 0:
            raise TowerPreconditionError(ctx.vertex, f"x - l*e = {bottom_e} is negative")
        surface = modified_surface(
            bottom_e,
            [(entry.label, entry.m) for entry in ctx.younger],
            marked=[entry.label for entry in ctx.older],
        )
        levels.append(
            TowerLevel(role=LevelRole.BOTTOM, param=l * e - x, g_mult=2 * l, modified=surface)
        )
        free_curves.append(FreeCurve(level=l, name="C1m", self_int=surface.c1m_self_int))
        strict_site = l
    elif ctx.m == 1:
        if ctx.younger:
            raise TowerPreconditionError(ctx.vertex, "odd vertex has younger neighbors or arrows")
        strict_site = 0
    else:
        if ctx.younger:
            raise TowerPreconditionError(ctx.vertex, "odd vertex has younger neighbors or arrows")
        if (2 * l + 1) * e - 2 * x != 0:
            raise TowerPreconditionError(
                ctx.vertex, f"(2l+1)e - 2x = {(2 * l + 1) * e - 2 * x}, expected 0"
            )
        levels.append(TowerLevel(role=LevelRole.RULED, param=l * e - x, g_mult=2 * l))
        levels.append(TowerLevel(role=LevelRole.SUPPORT, param=0, g_mult=4 * l + 2))
        tail = TowerLevel(role=LevelRole.TAIL, param=(l + 1) * e - x, g_mult=2 * l + 1)
        levels.append(tail)
        free_curves.append(
            FreeCurve(level=len(levels), name="lower-section", self_int=tail.lower_self_int)
        )
        strict_site = l + 1

    curves = []
    for index, level in enumerate(levels):
        upper_self_int = x if index == 0 else levels[index - 1].lower_self_int
        curves.append(
            TowerCurve(
                upper=index,
                lower=index + 1,
                upper_self_int=upper_self_int,
                lower_self_int=level.upper_self_int,
            )
        )

    tower = TowerDescriptor(
        vertex=ctx.vertex,
        e=e,
        x=x,
        m=ctx.m,
        top=disc_bundle(x, [(entry.label, entry.m) for entry in ctx.older]),
        levels=levels,
        curves=curves,
        free_curves=free_curves,
        strict_site=strict_site,
        transversal=_transversal_chain(ctx.m),
    )
    log_event(
        PipelineEvent.TOWER_BUILT,
        vertex=ctx.vertex,
        details={"levels": [level.label for level in levels], "g_mults": tower.g_mults},
    )
    return tower
