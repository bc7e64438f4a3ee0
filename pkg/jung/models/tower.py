"""Data types for the tower of ruled surfaces over one vertex."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from jung.models.local import DiscBundleModel, ModifiedRuledSurface


class AdjacentEntry(BaseModel):
    """A neighbor or an arrow meeting the vertex, with its multiplicity."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(description="Vertex or arrow id")
    m: int = Field(description="Multiplicity m'")
    is_arrow: bool = Field(default=False, description="True for strict transform branches")


class VertexContext(BaseModel):
    """Numerical data of A_i needed to build its tower."""

    model_config = ConfigDict(frozen=True)

    vertex: str = Field(description="Vertex id")
    e: int = Field(description="A_i^2")
    m: int = Field(description="m_i(f)")
    l: int = Field(description="floor(m_i / 2)")  # noqa: E741
    x: int = Field(description="-(1/2) * sum of older neighbor multiplicities")
    older: list[AdjacentEntry] = Field(default_factory=list, description="Older neighbors")
    younger: list[AdjacentEntry] = Field(
        default_factory=list, description="Younger neighbors and arrows"
    )

    @property
    def is_even(self) -> bool:
        return self.m % 2 == 0


class LevelRole(str, Enum):
    """Position of a compact level inside a tower."""

    RULED = "ruled"  # T_k
    BOTTOM = "bottom"  # modified X^m (even case)
    SUPPORT = "support"  # U = X_0 carrying S_i (odd case)
    TAIL = "tail"  # V (odd case)


class TowerLevel(BaseModel):
    """One compact surface of a tower."""

    model_config = ConfigDict(frozen=True)

    role: LevelRole = Field(description="Position in the tower")
    param: int = Field(
        description="Signed parameter n: upper curve self-int n, lower curve self-int -n"
    )
    g_mult: int = Field(description="Multiplicity of g along the level")
    modified: ModifiedRuledSurface | None = Field(
        default=None, description="Modification data (bottom level only)"
    )

    @property
    def upper_self_int(self) -> int:
        return self.param

    @property
    def lower_self_int(self) -> int:
        return -self.param

    @property
    def label(self) -> str:
        prefix = "X^m" if self.modified is not None else "X"
        value = self.modified.e if self.modified is not None else abs(self.param)
        return f"{prefix}_{value}"


class TowerCurve(BaseModel):
    """Curve shared by two consecutive surfaces of a tower (level 0 is the top)."""

    model_config = ConfigDict(frozen=True)

    upper: int = Field(description="Index of the upper surface")
    lower: int = Field(description="Index of the lower surface")
    upper_self_int: int = Field(description="Self-intersection in the upper surface")
    lower_self_int: int = Field(description="Self-intersection in the lower surface")


class FreeCurve(BaseModel):
    """A decorated curve of one level not shared with any other surface."""

    model_config = ConfigDict(frozen=True)

    level: int = Field(description="Index of the carrying surface")
    name: str = Field(description="Role of the curve (C1m or lower-section)")
    self_int: int = Field(description="Self-intersection in the carrying surface")


class TransversalNode(BaseModel):
    """Vertex of the resolution graph of u^m + z^2 printed next to a tower."""

    model_config = ConfigDict(frozen=True)

    self_int: int
    mult: int


class TowerDescriptor(BaseModel):
    """The stack of ruled surfaces over one vertex A_i."""

    model_config = ConfigDict(frozen=True)

    vertex: str = Field(description="Vertex id")
    e: int = Field(description="Normal bundle degree e_i")
    x: int = Field(description="Normal bundle degree x_i")
    m: int = Field(description="m_i(f)")
    top: DiscBundleModel = Field(description="Non-compact E^m(A_i), g-multiplicity 0")
    levels: list[TowerLevel] = Field(default_factory=list, description="Compact levels, top down")
    curves: list[TowerCurve] = Field(default_factory=list, description="Inter-surface curves")
    free_curves: list[FreeCurve] = Field(default_factory=list, description="Unshared curves")
    strict_site: int = Field(description="Index of the surface carrying S_i (0 = top)")
    transversal: list[TransversalNode] = Field(
        default_factory=list, description="Resolution chain of u^m + z^2"
    )

    @property
    def g_mults(self) -> list[int]:
        """g-multiplicities of the surfaces, top first."""
        return [0] + [level.g_mult for level in self.levels]

    def surface(self, index: int) -> TowerLevel | DiscBundleModel:
        return self.top if index == 0 else self.levels[index - 1]
