"""
Gluing of towers into the global divisor complex of g = f + z^2.

Surface ids: "E(A)" for the non-compact E^m(A), "A/k" for the k-th compact
level of the tower over A (k = 1 is the top compact level), "St(g)" for the
strict transform sheet and "D~" for the family of discs over the z-axis.

At an edge {j, i} with j older, the fiber chain of j's bottom surface over
the point of A_i is glued to i's tower: chain component k is the curve
shared with level k of the tower over A_i (level 0 being E^m(A_i)).
Triple points come in three families over such a point: j's tower curves
crossing E^m(A_i), i's tower curves crossing j's bottom, and the points
where St(g) meets the chain.
"""

import sympy

from jung.config.logging import get_logger
from jung.constants import DISC_FAMILY_ID, FIGURE_AMBIGUOUS, STRICT_SHEET_ID
from jung.errors import (
    ConstructionError,
    DivisibilityError,
    GraphNotNormalizedError,
    NonCompactSurfaceError,
)
from jung.events import PipelineEvent, log_event
from jung.models.complex import (
    BaseKind,
    BaseLocus,
    Curve,
    CurveClass,
    CurveRole,
    CurveSide,
    DivisorComplex,
    Surface,
    SurfaceKind,
    TriplePoint,
)
from jung.models.curve import OrderedCurveGraph
from jung.models.tower import TowerDescriptor, TowerLevel, VertexContext
from jung.services.curve_graph import odd_adjacencies, require_valid
from jung.services.local_models import (
    C0,
    FIBER,
    c1m_coefficients,
    chain_basis_name,
    intersection_form,
)
from jung.services.tower import build_tower, vertex_context

logger = get_logger(__name__)

SIGNS = ("+", "-")


def surface_id(vertex: str, index: int) -> str:
    """Id of the index-th surface of the tower over a vertex (0 = E^m)."""
    return f"E({vertex})" if index == 0 else f"{vertex}/{index}"


def strict_curve_id(vertex: str, sign: str | None = None) -> str:
    return f"S({vertex}){sign or ''}"


def splits(ctx: VertexContext) -> bool:
    """S_i has two components iff m_i and every adjacent multiplicity are even."""
    return ctx.is_even and all(entry.m % 2 == 0 for entry in ctx.older + ctx.younger)


def odd_weight_count(ctx: VertexContext) -> int:
    """M_i: number of younger weights that are odd and at least 3."""
    return sum(1 for entry in ctx.younger if entry.m % 2 == 1 and entry.m >= 3)


def strict_self_ints(ctx: VertexContext, tower: TowerDescriptor) -> tuple[int | None, int]:
    """
    Self-intersection of one component of S_i in its host and in St(g).

    Raises:
        ConstructionError: If e_i must be halved but is odd
    """
    if not ctx.is_even:
        if ctx.e % 2:
            raise ConstructionError(
                f"Odd vertex {ctx.vertex} has odd self-intersection {ctx.e}",
                details={"vertex": ctx.vertex, "e": ctx.e},
            )
        return (None if ctx.m == 1 else 0), ctx.e // 2

    c1m = tower.levels[-1].modified.c1m_self_int
    if splits(ctx):
        return c1m, ctx.e
    return 4 * c1m + 2 * odd_weight_count(ctx), 2 * ctx.e


class _Builder:
    """Accumulates the records of one complex."""

    def __init__(self, ordered: OrderedCurveGraph):
        self.ordered = ordered
        self.contexts = {v: vertex_context(ordered, v) for v in ordered.order}
        self.towers = {v: build_tower(self.contexts[v]) for v in ordered.order}
        self.surfaces: list[Surface] = []
        self.curves: list[Curve] = []
        self.triple_points: list[TriplePoint] = []

    def strict_ids(self, vertex: str) -> list[str]:
        if splits(self.contexts[vertex]):
            return [strict_curve_id(vertex, sign) for sign in SIGNS]
        return [strict_curve_id(vertex)]

    def strict_id_for(self, vertex: str, point_index: int) -> str:
        """Component of S_vertex through the point_index-th of two paired points."""
        ids = self.strict_ids(vertex)
        return ids[point_index] if len(ids) == 2 else ids[0]

    def add_triple(self, point: str, members: list[tuple[str, str]], intersection: int = 1):
        for curve, third in members:
            self.triple_points.append(
                TriplePoint(point=point, curve=curve, third=third, intersection=intersection)
            )

    def add_surfaces(self) -> None:
        for vertex in self.ordered.order:
            tower = self.towers[vertex]
            self.surfaces.append(
                Surface(
                    id=surface_id(vertex, 0),
                    kind=SurfaceKind.NONCOMPACT_E,
                    label=f"E^m({vertex})",
                    owner=vertex,
                    index=0,
                    g_mult=0,
                    disc=tower.top,
                )
            )
            for index, level in enumerate(tower.levels, start=1):
                rank = level.modified.picard_rank if level.modified is not None else 2
                self.surfaces.append(
                    Surface(
                        id=surface_id(vertex, index),
                        kind=SurfaceKind.COMPACT_LEVEL,
                        label=level.label,
                        owner=vertex,
                        index=index,
                        g_mult=level.g_mult,
                        picard_rank=rank,
                        level=level,
                    )
                )
        self.surfaces.append(
            Surface(
                id=STRICT_SHEET_ID, kind=SurfaceKind.STRICT_SHEET, label="St(g)", g_mult=1
            )
        )
        self.surfaces.append(
            Surface(id=DISC_FAMILY_ID, kind=SurfaceKind.NONCOMPACT_D, label="D~", g_mult=0)
        )

    def add_tower_curves(self, vertex: str) -> None:
        for curve in self.towers[vertex].curves:
            self.curves.append(
                Curve(
                    id=f"{vertex}/c{curve.upper}",
                    sides=[
                        CurveSide(
                            surface=surface_id(vertex, curve.upper),
                            self_int=curve.upper_self_int,
                            role=CurveRole.LOWER,
                        ),
                        CurveSide(
                            surface=surface_id(vertex, curve.lower),
                            self_int=curve.lower_self_int,
                            role=CurveRole.UPPER,
                        ),
                    ],
                    compact=True,
                    base=BaseLocus(kind=BaseKind.VERTEX, ids=[vertex]),
                )
            )

    def add_gluing(self, older: str, younger: str) -> None:
        """Curves and triple points over the point A_older . A_younger."""
        point = f"{older}-{younger}"
        base = BaseLocus(kind=BaseKind.POINT, ids=[older, younger])
        older_tower = self.towers[older]
        younger_tower = self.towers[younger]
        bottom_index = len(older_tower.levels)
        bottom = surface_id(older, bottom_index)
        modified = older_tower.levels[-1].modified
        chain = next(p.chain for p in modified.modified_points if p.label == younger)
        depth = len(younger_tower.levels)
        if len(chain.components) != depth + 1:
            raise ConstructionError(
                f"Chain over {point} has {len(chain.components)} components "
                f"but the tower over {younger} has {depth} levels",
                details={"point": point},
            )
        t = older_tower.m // 2

        chain_ids = [f"{point}/k{k}" for k in range(depth + 1)]
        for k, component in enumerate(chain.components):
            self.curves.append(
                Curve(
                    id=chain_ids[k],
                    sides=[
                        CurveSide(
                            surface=bottom,
                            self_int=component.self_int,
                            role=CurveRole.CHAIN,
                            point=younger,
                            index=k,
                        ),
                        CurveSide(
                            surface=surface_id(younger, k),
                            self_int=-1 if k == 0 else 0,
                            role=CurveRole.DISC if k == 0 else CurveRole.FIBER,
                            point=older,
                            index=t - 1 if k == 0 else None,
                        ),
                    ],
                    compact=True,
                    base=base,
                )
            )

        # curves L_{older,k} . E(younger); k = 0 is the disc over the z-axis
        disc_ids = {0: f"{point}/open", t: chain_ids[0]}
        self.curves.append(
            Curve(
                id=disc_ids[0],
                sides=[
                    CurveSide(surface=surface_id(older, 0), self_int=None, role=CurveRole.OPEN),
                    CurveSide(surface=surface_id(younger, 0), self_int=None, role=CurveRole.OPEN),
                ],
                compact=False,
                base=base,
                flags=[FIGURE_AMBIGUOUS],
            )
        )
        for k in range(1, t):
            disc_ids[k] = f"{point}/d{k}"
            self.curves.append(
                Curve(
                    id=disc_ids[k],
                    sides=[
                        CurveSide(
                            surface=surface_id(older, k),
                            self_int=0,
                            role=CurveRole.FIBER,
                            point=younger,
                        ),
                        CurveSide(
                            surface=surface_id(younger, 0),
                            self_int=-2,
                            role=CurveRole.DISC,
                            point=older,
                            index=t - 1 - k,
                        ),
                    ],
                    compact=True,
                    base=base,
                )
            )

        # older tower curves crossing E(younger)
        for k in range(t):
            self.add_triple(
                f"{point}/a{k}",
                [
                    (f"{older}/c{k}", surface_id(younger, 0)),
                    (disc_ids[k], surface_id(older, k + 1)),
                    (disc_ids[k + 1], surface_id(older, k)),
                ],
            )

        # younger tower curves crossing the older bottom
        for k in range(depth):
            self.add_triple(
                f"{point}/b{k}",
                [
                    (f"{younger}/c{k}", bottom),
                    (chain_ids[k], surface_id(younger, k + 1)),
                    (chain_ids[k + 1], surface_id(younger, k)),
                ],
            )

        # St(g) meeting the chain
        site = younger_tower.strict_site
        host = surface_id(younger, site)
        if younger_tower.m % 2 == 0:
            for n in range(2):
                self.add_triple(
                    f"{point}/s{n + 1}",
                    [
                        (chain_ids[site], STRICT_SHEET_ID),
                        (self.strict_id_for(older, n), host),
                        (self.strict_id_for(younger, n), bottom),
                    ],
                )
        else:
            self.add_triple(
                f"{point}/s1",
                [
                    (chain_ids[site], STRICT_SHEET_ID),
                    (self.strict_id_for(older, 0), host),
                    (self.strict_id_for(younger, 0), bottom),
                ],
                intersection=2 if younger_tower.m == 1 else 1,
            )

    def add_strict_curves(self, vertex: str) -> None:
        ctx = self.contexts[vertex]
        tower = self.towers[vertex]
        in_host, in_sheet = strict_self_ints(ctx, tower)
        ids = self.strict_ids(vertex)
        for curve_id in ids:
            sign = curve_id[-1] if len(ids) == 2 else None
            self.curves.append(
                Curve(
                    id=curve_id,
                    sides=[
                        CurveSide(
                            surface=surface_id(vertex, tower.strict_site),
                            self_int=in_host,
                            role=CurveRole.STRICT,
                            sign=sign,
                        ),
                        CurveSide(
                            surface=STRICT_SHEET_ID,
                            self_int=in_sheet,
                            role=CurveRole.STRICT,
                            sign=sign,
                        ),
                    ],
                    compact=True,
                    base=BaseLocus(kind=BaseKind.VERTEX, ids=[vertex]),
                )
            )

    def build(self) -> DivisorComplex:
        graph = self.ordered.graph
        self.add_surfaces()
        for vertex in self.ordered.order:
            self.add_tower_curves(vertex)
        edges = sorted(
            (
                (a, b) if self.ordered.is_older(a, b) else (b, a)
                for a, b in graph.edges
            ),
            key=lambda edge: (self.ordered.rank[edge[0]], self.ordered.rank[edge[1]]),
        )
        for older, younger in edges:
            self.add_gluing(older, younger)
        for vertex in self.ordered.order:
            self.add_strict_curves(vertex)
        return DivisorComplex(
            graph=graph.name,
            order=list(self.ordered.order),
            surfaces=self.surfaces,
            curves=self.curves,
            triple_points=self.triple_points,
            towers=[self.towers[v] for v in self.ordered.order],
        )


def build_complex(ordered: OrderedCurveGraph) -> DivisorComplex:
    """
    Build the divisor complex of the resolution of g = f + z^2.

    Raises:
        InvalidGraphError: If the graph is invalid
        GraphNotNormalizedError: If an odd-odd adjacency remains
        ConstructionError: On any internal inconsistency
    """
    require_valid(ordered.graph)
    odd = odd_adjacencies(ordered.graph)
    if odd:
        raise GraphNotNormalizedError(odd)

    complex_ = _Builder(ordered).build()
    log_event(
        PipelineEvent.COMPLEX_BUILT,
        graph=complex_.graph,
        details={
            "surfaces": len(complex_.surfaces),
            "curves": len(complex_.curves),
            "triple_points": len(complex_.triple_points),
        },
    )
    return complex_


def _unit(basis: list[str], name: str) -> list[int]:
    return [1 if b == name else 0 for b in basis]


def _combine(*terms: tuple[int, list[int]]) -> list[int]:
    size = len(terms[0][1])
    return [sum(c * v[i] for c, v in terms) for i in range(size)]


def _section_class(basis: list[str], self_int: int) -> list[int]:
    """Distinguished section of a plain X_n with the given self-intersection."""
    if self_int <= 0:
        return _unit(basis, C0)
    return _combine((1, _unit(basis, C0)), (self_int, _unit(basis, FIBER)))


def _chain_class(level: TowerLevel, basis: list[str], point: str, index: int) -> list[int]:
    if level.modified is None:
        return _unit(basis, FIBER)
    modified = next((p for p in level.modified.modified_points if p.label == point), None)
    if modified is None or len(modified.chain.components) == 1:
        return _unit(basis, FIBER)
    if index >= 1:
        return _unit(basis, chain_basis_name(point, index))
    terms = [(1, _unit(basis, FIBER))]
    for k, component in enumerate(modified.chain.components[1:], start=1):
        terms.append((-component.fiber_mult, _unit(basis, chain_basis_name(point, k))))
    return _combine(*terms)


def _strict_class(level: TowerLevel, basis: list[str], whole: bool) -> list[int]:
    if level.modified is None:
        return _unit(basis, C0)
    c1m = c1m_coefficients(level)
    if not whole:
        return c1m
    terms = [(2, c1m)]
    for point in level.modified.modified_points:
        if point.m % 2 == 1 and point.m >= 3:
            last = len(point.chain.components) - 1
            terms.append((1, _unit(basis, chain_basis_name(point.label, last))))
    return _combine(*terms)


def side_class(surface: Surface, side: CurveSide) -> list[int]:
    """Coefficients of a curve over the basis of its compact surface."""
    if not surface.compact or surface.level is None:
        raise NonCompactSurfaceError(surface.id)
    level = surface.level
    basis, _ = intersection_form(level)
    if side.role == CurveRole.UPPER:
        if level.modified is not None:
            return _unit(basis, C0)
        return _section_class(basis, level.upper_self_int)
    if side.role == CurveRole.LOWER:
        if level.modified is not None:
            return c1m_coefficients(level)
        return _section_class(basis, level.lower_self_int)
    if side.role == CurveRole.FIBER:
        return _unit(basis, FIBER)
    if side.role == CurveRole.CHAIN:
        return _chain_class(level, basis, side.point or "", side.index or 0)
    if side.role == CurveRole.STRICT:
        return _strict_class(level, basis, whole=side.sign is None)
    raise ConstructionError(
        f"Curve role {side.role.value} cannot lie on compact surface {surface.id}",
        details={"surface": surface.id},
    )


def restricted_class(complex_: DivisorComplex, surface_id_: str, curve_id: str) -> CurveClass:
    """Class of a curve on one of its compact incident surfaces."""
    surface = complex_.surface(surface_id_)
    if not surface.compact:
        raise NonCompactSurfaceError(surface_id_)
    side = complex_.curve(curve_id).side(surface_id_)
    basis, _ = intersection_form(surface.level)
    return CurveClass(surface=surface_id_, basis=basis, coefficients=side_class(surface, side))


def self_intersection_class(complex_: DivisorComplex, surface_id_: str) -> CurveClass:
    """
    E_k^2 in Pic(E_k), from (g o phi) . E_k = 0.

    The numerator -St(g).E_k - sum_l m_l E_l.E_k is a class on E_k; it must
    be divisible by m_k.

    Raises:
        NonCompactSurfaceError: If the surface is not compact
        DivisibilityError: If the numerator is not divisible by m_k
    """
    surface = complex_.surface(surface_id_)
    if not surface.compact:
        raise NonCompactSurfaceError(surface_id_)
    basis, _ = intersection_form(surface.level)
    numerator = sympy.zeros(len(basis), 1)
    for curve in complex_.curves_on(surface_id_):
        other = curve.other(surface_id_)
        weight = complex_.g_mult(other.surface)
        if weight == 0:
            continue
        coefficients = side_class(surface, curve.side(surface_id_))
        numerator -= weight * sympy.Matrix(coefficients)

    values = [int(v) for v in numerator]
    if any(v % surface.g_mult for v in values):
        raise DivisibilityError(surface_id_, surface.g_mult, dict(zip(basis, values, strict=True)))
    return CurveClass(
        surface=surface_id_,
        basis=basis,
        coefficients=[v // surface.g_mult for v in values],
    )
