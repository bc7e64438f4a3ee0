"""
Data types for the decorated embedded resolution graph of a plane curve.

The JSON layout of CurveGraph is the exchange format of the CLI:

    {"name": str,
     "vertices": [{"id": str, "e": int, "m": int}],
     "edges": [[str, str]],
     "arrows": [{"id": str, "attach": str, "m": 1}]}
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class Vertex(BaseModel):
    """Exceptional curve A_i with self-intersection e and multiplicity m of f."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(description="Vertex identifier")
    e: int = Field(description="Self-intersection A_i^2")
    m: int = Field(description="Multiplicity of the pulled back f along A_i")

    @property
    def is_even(self) -> bool:
        return self.m % 2 == 0


class Arrow(BaseModel):
    """Strict transform of a branch of f, attached to one vertex."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(description="Arrow identifier")
    attach: str = Field(description="Id of the vertex the branch meets")
    m: int = Field(default=1, description="Multiplicity of the branch (reduced f: 1)")


class CurveGraph(BaseModel):
    """Decorated embedded resolution graph of f."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(default="", description="Human readable graph name")
    vertices: list[Vertex] = Field(default_factory=list, description="Exceptional curves")
    edges: list[tuple[str, str]] = Field(
        default_factory=list, description="Unordered vertex-id pairs, one per intersection point"
    )
    arrows: list[Arrow] = Field(default_factory=list, description="Strict transform branches")

    @property
    def vertex_map(self) -> dict[str, Vertex]:
        return {v.id: v for v in self.vertices}

    @property
    def vertex_ids(self) -> list[str]:
        return [v.id for v in self.vertices]

    def vertex(self, vertex_id: str) -> Vertex:
        return self.vertex_map[vertex_id]

    def neighbors(self, vertex_id: str) -> list[str]:
        """Edge neighbors of a vertex in edge-list order."""
        result = []
        for a, b in self.edges:
            if a == vertex_id:
                result.append(b)
            elif b == vertex_id:
                result.append(a)
        return result

    def arrows_at(self, vertex_id: str) -> list[Arrow]:
        return [arrow for arrow in self.arrows if arrow.attach == vertex_id]


class OrderedCurveGraph(BaseModel):
    """A curve graph together with the total order "older first"."""

    model_config = ConfigDict(frozen=True)

    graph: CurveGraph = Field(description="Parity-normalized curve graph")
    order: list[str] = Field(description="Vertex ids, oldest first")

    @property
    def rank(self) -> dict[str, int]:
        return {vertex_id: index for index, vertex_id in enumerate(self.order)}

    def is_older(self, a: str, b: str) -> bool:
        """True if vertex a precedes vertex b."""
        return self.rank[a] < self.rank[b]


class ViolationCode(str, Enum):
    """Kinds of curve graph invariant violations."""

    EMPTY = "empty"
    SELF_INTERSECTION = "self-intersection"
    MULTIPLICITY = "multiplicity"
    ARROW_MULTIPLICITY = "arrow-multiplicity"
    SELF_LOOP = "self-loop"
    MULTIPLE_EDGE = "multiple-edge"
    DISCONNECTED = "disconnected"
    RELATION = "relation"
    NOT_NEGATIVE_DEFINITE = "not-negative-definite"


class Violation(BaseModel):
    """One violated invariant with the offending ids."""

    code: ViolationCode = Field(description="Kind of violation")
    ids: list[str] = Field(default_factory=list, description="Offending vertex/edge ids")
    message: str = Field(description="Human-readable description")


class ValidationReport(BaseModel):
    """Result of validating a curve graph; empty iff valid."""

    graph: str = Field(default="", description="Name of the validated graph")
    violations: list[Violation] = Field(default_factory=list, description="Violated invariants")

    @property
    def valid(self) -> bool:
        return not self.violations
