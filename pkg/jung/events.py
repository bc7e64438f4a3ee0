"""
Pipeline event logging.

Every stage of the construction emits one structured event on the
dedicated `jung.events` logger, so a run can be followed (or replayed
in a log aggregator) without turning on DEBUG for the whole engine.
"""

import logging
from typing import Any

import structlog

_event_logger = structlog.wrap_logger(
    logging.getLogger("jung.events"),
    wrapper_class=structlog.stdlib.BoundLogger,
)


class PipelineEvent:
    """Constants for pipeline event types."""

    # Input events
    INPUT_LOADED = "input.loaded"
    INPUT_REJECTED = "input.rejected"

    # Curve graph events
    GRAPH_VALIDATED = "graph.validated"
    GRAPH_NORMALIZED = "graph.normalized"
    GRAPH_ORDERED = "graph.ordered"
    GRAPH_REFINED = "graph.refined"

    # Construction events
    TOWER_BUILT = "tower.built"
    COMPLEX_BUILT = "complex.built"

    # Surface graph events
    SGRAPH_BUILT = "sgraph.built"
    SGRAPH_MINIMIZED = "sgraph.minimized"

    # Verification events
    CHECK_PASSED = "check.passed"
    CHECK_FAILED = "check.failed"


MAX_DETAIL_ITEMS = 10


def _clip(value: Any) -> Any:
    """Shorten long lists so one event never floods the log."""
    if isinstance(value, list) and len(value) > MAX_DETAIL_ITEMS:
        return value[:MAX_DETAIL_ITEMS] + [f"...[{len(value) - MAX_DETAIL_ITEMS} more]"]
    if isinstance(value, dict):
        return {k: _clip(v) for k, v in value.items()}
    return value


def log_event(
    event: str,
    *,
    graph: str | None = None,
    vertex: str | None = None,
    surface: str | None = None,
    success: bool = True,
    error: str | None = None,
    details: dict[str, Any] | None = None,
) -> None:
    """
    Log a pipeline event.

    Args:
        event: Event type from PipelineEvent constants
        graph: Optional graph name
        vertex: Optional curve-graph vertex id
        surface: Optional surface id of the divisor complex
        success: Whether the stage succeeded
        error: Optional error message if failed
        details: Optional additional details
    """
    log_data: dict[str, Any] = {
        "pipeline_event": event,
        "success": success,
    }

    if graph:
        log_data["graph"] = graph
    if vertex:
        log_data["vertex"] = vertex
    if surface:
        log_data["surface"] = surface
    if error:
        log_data["error"] = error
    if details:
        log_data["details"] = _clip(details)

    if success:
        _event_logger.info(event, **log_data)
    else:
        _event_logger.warning(event, **log_data)
