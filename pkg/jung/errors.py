"""
Custom error types for the resolution engine.

Every failure the pipeline can raise derives from JungError so callers
(the CLI in particular) can report it uniformly. Invariant violations of
an input graph are data (see ValidationReport), not exceptions; the classes
here cover malformed input and internal consistency failures.
"""

from typing import Any


class JungError(Exception):
    """Base exception for all resolution engine errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        self.message = message
        self.details = details or {}
        super().__init__(message)

    def to_dict(self) -> dict[str, Any]:
        """Convert error to dictionary for serialization."""
        return {
            "error": self.__class__.__name__,
            "message": self.message,
            "details": self.details,
        }


# Input Errors


class InputError(JungError):
    """Base exception for problems with a user supplied graph."""

    pass


class GraphParseError(InputError):
    """Raised when a graph document cannot be parsed."""

    def __init__(
        self,
        message: str,
        source: str | None = None,
        line: int | None = None,
        column: int | None = None,
        field: str | None = None,
    ):
        self.source = source
        self.line = line
        self.column = column
        self.field = field
        location = []
        if source:
            location.append(source)
        if line is not None:
            location.append(f"line {line}")
            if column is not None:
                location.append(f"column {column}")
        if field:
            location.append(f"field '{field}'")
        msg = f"{message} ({', '.join(location)})" if location else message
        super().__init__(
            msg,
            details={"source": source, "line": line, "column": column, "field": field},
        )


class GraphStructureError(InputError):
    """Raised when ids are duplicated or reference unknown vertices."""

    def __init__(self, message: str, ids: list[str] | None = None):
        self.ids = ids or []
        super().__init__(message, details={"ids": self.ids})


class InvalidGraphError(InputError):
    """Raised when an operation requires a valid graph and gets an invalid one."""

    def __init__(self, violations: list[dict[str, Any]]):
        self.violations = violations
        codes = sorted({v.get("code", "unknown") for v in violations})
        super().__init__(
            f"Graph violates {len(violations)} invariant(s): {', '.join(codes)}",
            details={"violations": violations},
        )


class GraphNotNormalizedError(InputError):
    """Raised when a graph still has odd-odd adjacencies."""

    def __init__(self, adjacencies: list[list[str]]):
        self.adjacencies = adjacencies
        super().__init__(
            f"Graph is not parity-normalized: {len(adjacencies)} odd-odd adjacency(ies)",
            details={"adjacencies": adjacencies},
        )


class InvalidOrderError(InputError):
    """Raised when an explicit vertex order is rejected."""

    def __init__(self, message: str, order: list[str] | None = None):
        self.order = order or []
        super().__init__(message, details={"order": self.order})


class UnknownVertexError(InputError):
    """Raised when an operation is asked about a vertex the graph lacks."""

    def __init__(self, vertex_id: str):
        self.vertex_id = vertex_id
        super().__init__(f"Unknown vertex: {vertex_id}", details={"vertex_id": vertex_id})


# Local Model Errors


class InvalidMultiplicityError(JungError):
    """Raised when a fiber multiplicity m' is not positive."""

    def __init__(self, value: int):
        self.value = value
        super().__init__(f"Multiplicity must be >= 1, got {value}", details={"value": value})


class ModificationBalanceError(JungError):
    """Raised when 2e differs from the sum of the modification weights."""

    def __init__(self, e: int, weights: list[int]):
        self.e = e
        self.weights = weights
        super().__init__(
            f"2e = {2 * e} does not match sum of weights {sum(weights)}",
            details={"e": e, "weights": weights},
        )


# Construction Errors


class ConstructionError(JungError):
    """Raised when an internal consistency check of the construction fails."""

    pass


class TowerPreconditionError(ConstructionError):
    """Raised when a vertex context cannot carry a tower."""

    def __init__(self, vertex_id: str, reason: str):
        self.vertex_id = vertex_id
        super().__init__(
            f"Cannot build tower over {vertex_id}: {reason}",
            details={"vertex_id": vertex_id, "reason": reason},
        )


class DivisibilityError(ConstructionError):
    """Raised when a self-intersection class is not divisible by the g-multiplicity."""

    def __init__(self, surface_id: str, g_mult: int, coefficients: dict[str, int]):
        self.surface_id = surface_id
        self.g_mult = g_mult
        self.coefficients = coefficients
        super().__init__(
            f"Class on {surface_id} is not divisible by {g_mult}",
            details={"surface_id": surface_id, "g_mult": g_mult, "coefficients": coefficients},
        )


class NonCompactSurfaceError(ConstructionError):
    """Raised when a compact-only operation gets a non-compact surface."""

    def __init__(self, surface_id: str):
        self.surface_id = surface_id
        super().__init__(
            f"Surface {surface_id} is not compact", details={"surface_id": surface_id}
        )


class PairingError(ConstructionError):
    """Raised when two-component strict transforms cannot be paired consistently."""

    pass


# CLI Errors


class CliUsageError(JungError):
    """Raised when command-line arguments are inconsistent."""

    pass
