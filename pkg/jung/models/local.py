"""
Data types for ruled surfaces, their modifications and disc bundles.

Fiber chains are always listed from the C_0^m side to the C_1^m side.
Points are symbolic labels; their positions on the base never matter.
"""

from pydantic import BaseModel, ConfigDict, Field


class ChainComponent(BaseModel):
    """One irreducible component of the fiber over a modified point."""

    model_config = ConfigDict(frozen=True)

    self_int: int = Field(description="Self-intersection inside the modified surface")
    fiber_mult: int = Field(description="Multiplicity in the pulled back fiber")


class ChainDescriptor(BaseModel):
    """Fiber chain produced over a modified point P'_j."""

    model_config = ConfigDict(frozen=True)

    components: list[ChainComponent] = Field(description="Components, C_0^m side first")
    blow_ups: int = Field(description="Number of point blow-ups performed over the point")
    s_meets: int | str = Field(
        description="Index of the component met by the strict transform, 'C1' or 'none'"
    )
    c1_drop: int = Field(
        default=0, description="Blow-ups centred on the strict transform of C_1"
    )

    @property
    def self_ints(self) -> list[int]:
        return [c.self_int for c in self.components]

    @property
    def mults(self) -> list[int]:
        return [c.fiber_mult for c in self.components]

    def as_pairs(self) -> list[tuple[int, int]]:
        return [(c.self_int, c.fiber_mult) for c in self.components]


class ModifiedPoint(BaseModel):
    """A point P'_j of the base where the ruled surface is blown up."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(description="Younger neighbor or arrow id")
    m: int = Field(description="Weight m'_j")
    chain: ChainDescriptor = Field(description="Fiber chain over the point")


class ModifiedRuledSurface(BaseModel):
    """X_e^m: the ruled surface X_e blown up over the modified points."""

    model_config = ConfigDict(frozen=True)

    e: int = Field(description="C_0^2 = -e before modification")
    marked_points: list[str] = Field(
        default_factory=list, description="Older neighbor labels P_j (full fibers)"
    )
    modified_points: list[ModifiedPoint] = Field(
        default_factory=list, description="Points P'_j with their weights and chains"
    )
    c0m_self_int: int = Field(description="(C_0^m)^2")
    c1m_self_int: int = Field(description="(C_1^m)^2")
    picard_rank: int = Field(description="Rank of the Picard group")

    @property
    def weights(self) -> list[int]:
        return [p.m for p in self.modified_points]


class DiscModification(BaseModel):
    """Blow-ups of a disc bundle over one older neighbor point."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(description="Older neighbor id")
    count: int = Field(description="Number t of infinitely near blow-ups")
    self_ints: list[int] = Field(description="Compact chain self-intersections")


class DiscBundleModel(BaseModel):
    """B_e^m: the non-compact divisor E^m(A_i) over a vertex."""

    model_config = ConfigDict(frozen=True)

    zero_section_self_int: int = Field(description="Self-intersection of the zero section (x_i)")
    modifications: list[DiscModification] = Field(
        default_factory=list, description="Per older neighbor chains"
    )
