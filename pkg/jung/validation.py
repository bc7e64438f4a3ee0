"""
Argument validation.

Small validators for numeric arguments and order overrides that callers
pass in directly (as opposed to whole graphs, which are checked by
services.curve_graph.validate).
"""

import re

VERTEX_ID_PATTERN = re.compile(r"^[A-Za-z0-9_\-\.\+\(\)~]{1,64}$")


class ValidationError(ValueError):
    """Validation error with details."""

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(message)


def validate_brieskorn_exponents(p: int, q: int) -> tuple[int, int]:
    """
    Validate the exponents of x^p + y^q.

    Raises:
        ValidationError: If either exponent is below 2
    """
    for name, value in (("p", p), ("q", q)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(f"{name} must be an integer", field=name)
        if value < 2:
            raise ValidationError(f"{name} must be >= 2, got {value}", field=name)
    return p, q


def validate_steps(steps: int) -> int:
    """Validate a refinement step count."""
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 0:
        raise ValidationError(f"steps must be a non-negative integer, got {steps}", field="steps")
    return steps


def validate_vertex_id(vertex_id: str) -> str:
    """
    Validate vertex identifier format.

    Raises:
        ValidationError: If the id is empty or has unsupported characters
    """
    if not vertex_id:
        raise ValidationError("Vertex id is required", field="id")
    if not VERTEX_ID_PATTERN.match(vertex_id):
        raise ValidationError(f"Invalid vertex id: {vertex_id!r}", field="id")
    return vertex_id


def parse_order(raw: str | None) -> list[str] | None:
    """
    Parse an order override of the form "id,id,...".

    Returns:
        The list of ids, or None if no override was given

    Raises:
        ValidationError: If the override is empty or repeats an id
    """
    if raw is None:
        return None
    ids = [part.strip() for part in raw.split(",")]
    if not ids or any(not part for part in ids):
        raise ValidationError("Order override must be a comma separated list of ids", field="order")
    for vertex_id in ids:
        validate_vertex_id(vertex_id)
    if len(set(ids)) != len(ids):
        raise ValidationError("Order override repeats a vertex id", field="order")
    return ids
