"""
Data types for the global exceptional divisor of g = f + z^2.

A DivisorComplex lists every surface of the exceptional set (plus the
strict transform sheet St(g)), every curve along which two of them meet,
and every triple point, recorded once per curve through it.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from jung.models.local import DiscBundleModel
from jung.models.tower import TowerDescriptor, TowerLevel


class SurfaceKind(str, Enum):
    """Kinds of surfaces in the complex."""

    COMPACT_LEVEL = "compact_tower_level"
    NONCOMPACT_E = "noncompact_E(A)"
    STRICT_SHEET = "strict_transform_sheet"
    NONCOMPACT_D = "noncompact_D~"


class Surface(BaseModel):
    """One divisor of the complex."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(description="Surface identifier")
    kind: SurfaceKind = Field(description="Surface kind")
    label: str = Field(description="Display name such as X_1 or X^m_2")
    owner: str | None = Field(default=None, description="Vertex whose tower holds the surface")
    index: int | None = Field(default=None, description="Position in the owner's tower (0 = top)")
    g_mult: int = Field(description="Multiplicity of g along the surface")
    picard_rank: int | None = Field(default=None, description="Picard rank (compact only)")
    level: TowerLevel | None = Field(default=None, description="Ruled surface parameters")
    disc: DiscBundleModel | None = Field(default=None, description="Disc bundle data")

    @property
    def compact(self) -> bool:
        return self.kind == SurfaceKind.COMPACT_LEVEL


class CurveRole(str, Enum):
    """How a curve sits inside one of its surfaces."""

    UPPER = "upper"  # upper distinguished curve (C_0^m on a bottom level)
    LOWER = "lower"  # lower distinguished curve, or zero section of E^m
    FIBER = "fiber"  # full fiber over a point
    CHAIN = "chain"  # component of a fiber chain over a modified point
    DISC = "disc"  # compact curve of a modified disc bundle
    STRICT = "strict"  # strict transform S_i or one of its components
    OPEN = "open"  # non-compact intersection


class CurveSide(BaseModel):
    """A curve seen from one of its incident surfaces."""

    model_config = ConfigDict(frozen=True)

    surface: str = Field(description="Incident surface id")
    self_int: int | None = Field(description="Self-intersection in this surface")
    role: CurveRole = Field(description="Position inside the surface")
    point: str | None = Field(default=None, description="Base point label (fibers, chains)")
    index: int | None = Field(default=None, description="Chain component index")
    sign: str | None = Field(default=None, description="'+' or '-' for split strict transforms")


class BaseKind(str, Enum):
    """What a curve lies over in the plane curve resolution."""

    VERTEX = "vertex"
    POINT = "point"
    ARROW = "arrow"


class BaseLocus(BaseModel):
    """Base locus of a curve."""

    model_config = ConfigDict(frozen=True)

    kind: BaseKind
    ids: list[str] = Field(default_factory=list)


class Curve(BaseModel):
    """Intersection of two surfaces of the complex."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(description="Curve identifier")
    sides: list[CurveSide] = Field(description="Incident surfaces with self-intersections")
    compact: bool = Field(description="True for projective curves")
    base: BaseLocus = Field(description="Where the curve lies over")
    flags: list[str] = Field(default_factory=list, description="Annotations")

    @property
    def surfaces(self) -> list[str]:
        return [side.surface for side in self.sides]

    @property
    def self_ints(self) -> list[int | None]:
        return [side.self_int for side in self.sides]

    def side(self, surface_id: str) -> CurveSide:
        for side in self.sides:
            if side.surface == surface_id:
                return side
        raise KeyError(surface_id)

    def other(self, surface_id: str) -> CurveSide:
        for side in self.sides:
            if side.surface != surface_id:
                return side
        raise KeyError(surface_id)

    @property
    def complete(self) -> bool:
        """Compact with two integer self-intersections."""
        return self.compact and len(self.sides) == 2 and None not in self.self_ints


class TriplePoint(BaseModel):
    """A point where a third surface crosses a curve."""

    model_config = ConfigDict(frozen=True)

    point: str = Field(description="Label shared by the three records of one point")
    curve: str = Field(description="Curve id")
    third: str = Field(description="Surface id of the third divisor")
    intersection: int = Field(default=1, description="Local intersection number")


class DivisorComplex(BaseModel):
    """Surfaces, curves and triple points of the resolution of g."""

    model_config = ConfigDict(frozen=True)

    graph: str = Field(default="", description="Name of the source curve graph")
    order: list[str] = Field(description="Vertex order used for the construction")
    surfaces: list[Surface] = Field(default_factory=list)
    curves: list[Curve] = Field(default_factory=list)
    triple_points: list[TriplePoint] = Field(default_factory=list)
    towers: list[TowerDescriptor] = Field(default_factory=list)

    def surface(self, surface_id: str) -> Surface:
        for surface in self.surfaces:
            if surface.id == surface_id:
                return surface
        raise KeyError(surface_id)

    def curve(self, curve_id: str) -> Curve:
        for curve in self.curves:
            if curve.id == curve_id:
                return curve
        raise KeyError(curve_id)

    def tower(self, vertex_id: str) -> TowerDescriptor:
        for tower in self.towers:
            if tower.vertex == vertex_id:
                return tower
        raise KeyError(vertex_id)

    def curves_on(self, surface_id: str) -> list[Curve]:
        return [c for c in self.curves if surface_id in c.surfaces]

    def triple_points_on(self, curve_id: str) -> list[TriplePoint]:
        return [t for t in self.triple_points if t.curve == curve_id]

    def g_mult(self, surface_id: str) -> int:
        return self.surface(surface_id).g_mult


class CurveClass(BaseModel):
    """Integer class of a curve on a compact surface, over a named basis."""

    model_config = ConfigDict(frozen=True)

    surface: str = Field(description="Compact surface id")
    basis: list[str] = Field(description="Basis names (C0, f, chain curves)")
    coefficients: list[int] = Field(description="Coefficients over the basis")

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.basis, self.coefficients, strict=True))

    def coefficient(self, name: str) -> int:
        return self.as_dict()[name]
