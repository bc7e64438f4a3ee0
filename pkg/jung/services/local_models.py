"""
Numerics of ruled surfaces X_e, their modifications X_e^m and disc bundles.

fiber_chain reads the chain tables directly; local_blowup_oracle derives
the same chains from scratch by simulating point blow-ups, and the two are
compared by the verifier. Intersection forms are exact sympy matrices.
"""

import networkx as nx
import sympy

from jung.config.logging import get_logger
from jung.constants import S_MEETS_C1
from jung.errors import ConstructionError, InvalidMultiplicityError, ModificationBalanceError
from jung.models.complex import CurveClass
from jung.models.local import (
    ChainComponent,
    ChainDescriptor,
    DiscBundleModel,
    DiscModification,
    ModifiedPoint,
    ModifiedRuledSurface,
)
from jung.models.tower import TowerLevel

logger = get_logger(__name__)

C0 = "C0"
FIBER = "f"


def _require_positive(m: int) -> None:
    if m < 1:
        raise InvalidMultiplicityError(m)


def blow_up_count(m: int) -> int:
    """Number of blow-ups needed over a point of weight m'."""
    _require_positive(m)
    if m == 1:
        return 0
    if m % 2 == 0:
        return m // 2
    return (m + 3) // 2


def c1_drop(m: int) -> int:
    """How many of those blow-ups are centred on the strict transform of C_1."""
    _require_positive(m)
    if m == 1:
        return 0
    if m % 2 == 0:
        return m // 2
    return (m + 1) // 2


def fiber_chain(m: int) -> ChainDescriptor:
    """
    Fiber chain over a point of weight m', C_0^m side first.

    Args:
        m: The weight m' >= 1

    Returns:
        ChainDescriptor with components (self_int, fiber_mult)
    """
    _require_positive(m)
    if m == 1:
        pairs = [(0, 1)]
        s_meets: int | str = S_MEETS_C1
    elif m % 2 == 0:
        half = m // 2
        pairs = [(-1, 1)] + [(-2, 1)] * (half - 1) + [(-1, 1)]
        s_meets = len(pairs) - 1
    else:
        half = (m - 1) // 2
        pairs = [(-1, 1)] + [(-2, 1)] * (half - 1) + [(-3, 1), (-1, 2), (-2, 1)]
        s_meets = len(pairs) - 2
    return ChainDescriptor(
        components=[ChainComponent(self_int=s, fiber_mult=k) for s, k in pairs],
        blow_ups=blow_up_count(m),
        s_meets=s_meets,
        c1_drop=c1_drop(m),
    )


def local_blowup_oracle(m: int) -> ChainDescriptor:
    """
    Resolve {w^2 = y^m'} together with C_1 = {w = 0} by point blow-ups.

    The state (a, b, dx, dy) describes the curve u^a = v^b at the current
    centre, where dx = {u = 0} and dy = {v = 0} are the curves through it.
    C_1 and the exceptional curves must end up crossing the curve normally;
    the original fiber F may stay tangent to it.
    """
    _require_positive(m)
    graph = nx.Graph()
    graph.add_node("C1", self_int=0, mult=0)
    graph.add_node("F", self_int=0, mult=1)
    graph.add_edge("C1", "F")
    required = {"C1"}
    created = 0
    drop = 0
    meets: str | None = None

    a, b, dx, dy = 2, m, "C1", "F"
    while True:
        through_two_required = dx in required and dy in required
        if a != b and (a == 1 or b == 1):
            tangent_to = dx if a == 1 else dy
            if tangent_to not in required and not through_two_required:
                meets = dx if dx in required else dy
                break

        created += 1
        new = f"E{created}"
        graph.add_node(
            new, self_int=-1, mult=graph.nodes[dx]["mult"] + graph.nodes[dy]["mult"]
        )
        for old in (dx, dy):
            graph.nodes[old]["self_int"] -= 1
            graph.add_edge(new, old)
        graph.remove_edge(dx, dy)
        required.add(new)
        if "C1" in (dx, dy):
            drop += 1

        if a == b:
            meets = new
            break
        if a < b:
            a, b, dx, dy = a, b - a, dx, new
        else:
            a, b, dx, dy = a - b, b, new, dy

    path = nx.shortest_path(graph, "F", "C1")[:-1]
    components = [
        ChainComponent(self_int=graph.nodes[n]["self_int"], fiber_mult=graph.nodes[n]["mult"])
        for n in path
    ]
    s_meets: int | str = S_MEETS_C1 if meets == "C1" else path.index(meets)
    return ChainDescriptor(components=components, blow_ups=created, s_meets=s_meets, c1_drop=drop)


def chain_matrix(chain: ChainDescriptor) -> sympy.Matrix:
    """Intersection matrix of the chain components."""
    n = len(chain.components)
    matrix = sympy.zeros(n, n)
    for i, component in enumerate(chain.components):
        matrix[i, i] = component.self_int
        if i + 1 < n:
            matrix[i, i + 1] = 1
            matrix[i + 1, i] = 1
    return matrix


def fiber_balance(chain: ChainDescriptor) -> list[int]:
    """Per component residual of (pulled back fiber) . component; all zero when balanced."""
    mults = sympy.Matrix(chain.mults)
    residual = chain_matrix(chain) * mults
    return [int(value) for value in residual]


def c1m_self_int(e: int, m_list: list[int]) -> int:
    """
    Self-intersection of C_1^m in X_e^m.

    Raises:
        ModificationBalanceError: If 2e differs from sum(m_list)
    """
    for m in m_list:
        _require_positive(m)
    if 2 * e != sum(m_list):
        raise ModificationBalanceError(e, m_list)
    return e - sum(c1_drop(m) for m in m_list)


def picard_rank(m_list: list[int]) -> int:
    """Rank of Pic(X_e^m): the generic fiber, C_0^m and one class per blow-up."""
    for m in m_list:
        _require_positive(m)
    return 2 + sum(blow_up_count(m) for m in m_list)


def modified_surface(
    e: int, modified: list[tuple[str, int]], marked: list[str] | None = None
) -> ModifiedRuledSurface:
    """Assemble X_e^m for the given (label, m') points."""
    weights = [m for _, m in modified]
    return ModifiedRuledSurface(
        e=e,
        marked_points=list(marked or []),
        modified_points=[
            ModifiedPoint(label=label, m=m, chain=fiber_chain(m)) for label, m in modified
        ],
        c0m_self_int=-e,
        c1m_self_int=c1m_self_int(e, weights),
        picard_rank=picard_rank(weights),
    )


def disc_bundle(x: int, older: list[tuple[str, int]]) -> DiscBundleModel:
    """E^m(A_i): zero section x_i, t = m_j/2 blow-ups over each older neighbor point."""
    modifications = []
    for label, m in older:
        if m % 2:
            raise ConstructionError(
                f"Older neighbor {label} has odd multiplicity {m}", details={"label": label}
            )
        count = m // 2
        modifications.append(
            DiscModification(label=label, count=count, self_ints=[-2] * (count - 1) + [-1])
        )
    return DiscBundleModel(zero_section_self_int=x, modifications=modifications)


def chain_basis_name(label: str, index: int) -> str:
    return f"{label}:{index}"


def intersection_form(level: TowerLevel) -> tuple[list[str], sympy.Matrix]:
    """
    Basis and Gram matrix of Pic of a compact level.

    Plain X_n uses {C0, f} with C0^2 = -|n|. A modified X^m_e adds the chain
    curves of index >= 1 over every modified point; they are orthogonal to
    C0 and f, and C0^2 = -e.
    """
    if level.modified is None:
        gram = sympy.Matrix([[-abs(level.param), 1], [1, 0]])
        return [C0, FIBER], gram

    surface = level.modified
    basis = [C0, FIBER]
    blocks = []
    for point in surface.modified_points:
        if len(point.chain.components) < 2:
            continue
        basis.extend(
            chain_basis_name(point.label, k) for k in range(1, len(point.chain.components))
        )
        blocks.append(chain_matrix(point.chain)[1:, 1:])
    gram = sympy.diag(sympy.Matrix([[-surface.e, 1], [1, 0]]), *blocks)
    if len(basis) != surface.picard_rank:
        raise ConstructionError(
            "Basis size differs from Picard rank",
            details={"basis": len(basis), "picard_rank": surface.picard_rank},
        )
    return basis, gram


def c1m_coefficients(level: TowerLevel) -> list[int]:
    """
    Coefficients of C_1^m over the basis of intersection_form.

    C_1^m is disjoint from C_0^m, meets the generic fiber once and meets
    exactly the last component of each modified chain.
    """
    basis, gram = intersection_form(level)
    rhs = sympy.zeros(len(basis), 1)
    rhs[1] = 1
    if level.modified is not None:
        for point in level.modified.modified_points:
            last = len(point.chain.components) - 1
            if last >= 1:
                rhs[basis.index(chain_basis_name(point.label, last))] = 1
    solution = gram.LUsolve(rhs)
    if not all(value.is_integer for value in solution):
        raise ConstructionError("C_1^m is not an integral class", details={"solution": str(solution)})
    return [int(value) for value in solution]


def pairing(gram: sympy.Matrix, a: list[int], b: list[int]) -> int:
    """Intersection number of two classes."""
    return int((sympy.Matrix([a]) * gram * sympy.Matrix(b))[0, 0])


def c1m_class(level: TowerLevel, surface_id: str = "") -> CurveClass:
    """C_1^m as a CurveClass over the basis of intersection_form."""
    basis, _ = intersection_form(level)
    return CurveClass(surface=surface_id, basis=basis, coefficients=c1m_coefficients(level))
