"""Data types for the strict transform curves and the dual graph of {g=0}."""

from pydantic import BaseModel, ConfigDict, Field

from jung.models.complex import CurveClass


class SCurveData(BaseModel):
    """The curve S_i^m = St(g) intersected with the tower over A_i."""

    model_config = ConfigDict(frozen=True)

    vertex: str = Field(description="Vertex id i")
    host: str = Field(description="Surface id of the strict site")
    components: int = Field(description="1 or 2")
    genus: int = Field(description="Genus per component")
    self_int_in_host: int | None = Field(
        description="Self-intersection of one component in the host (None over m_i = 1)"
    )
    self_int_in_stg: int = Field(description="Self-intersection of one component in St(g)")
    class_in_host: CurveClass | None = Field(
        default=None, description="Class of the whole curve (even case)"
    )
    c1m_meets: int = Field(description="Points where S meets C_1^m")
    branch_count: int = Field(description="Branch points of S -> A_i")
    odd_weights: int = Field(default=0, description="M_i = #{m' odd >= 3}")


class SVertex(BaseModel):
    """Vertex of the dual resolution graph of {f + z^2 = 0}."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(description="Vertex identifier")
    from_vertex: str = Field(default="", description="Curve graph vertex i")
    component: str | None = Field(default=None, description="'+' or '-' when S_i splits")
    genus: int = Field(default=0, description="Genus")
    self_int: int = Field(description="Self-intersection")


class SGraph(BaseModel):
    """Dual resolution graph (edges are a multiset of pairs)."""

    model_config = ConfigDict(frozen=True)

    vertices: list[SVertex] = Field(default_factory=list)
    edges: list[tuple[str, str]] = Field(default_factory=list)
    flags: list[str] = Field(default_factory=list, description="Reducer annotations")

    def vertex(self, vertex_id: str) -> SVertex:
        for vertex in self.vertices:
            if vertex.id == vertex_id:
                return vertex
        raise KeyError(vertex_id)

    def degree(self, vertex_id: str) -> int:
        return sum((x == vertex_id) + (y == vertex_id) for x, y in self.edges)
