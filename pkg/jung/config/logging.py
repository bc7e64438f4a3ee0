"""
Structured logging configuration.

structlog is routed through the standard library so that every event
lands on stderr by default; stdout is reserved for emitted artifacts.
Each CLI invocation gets a short run id that is attached to every event.
"""

import logging
import sys
import uuid
from collections.abc import Callable
from contextvars import ContextVar
from dataclasses import dataclass, field
from typing import Any

import structlog
import sympy
from pydantic import BaseModel


@dataclass
class LoggingConfig:
    """Logging configuration."""

    suppressed_loggers: dict[str, str] = field(default_factory=lambda: {"sympy": "WARNING"})
    run_id_length: int = 8
    colors: bool = False


_logging_config = LoggingConfig()

run_id_var: ContextVar[str] = ContextVar("run_id", default="")


def get_run_id() -> str:
    return run_id_var.get()


def set_run_id(run_id: str | None = None) -> str:
    """Bind a run id for this invocation; a random one if none is given."""
    new_id = run_id or uuid.uuid4().hex[: _logging_config.run_id_length]
    run_id_var.set(new_id)
    return new_id


def add_run_id(
    logger: logging.Logger, method_name: str, event_dict: dict[str, Any]
) -> dict[str, Any]:
    """Structlog processor adding the run id."""
    run_id = get_run_id()
    if run_id:
        event_dict.setdefault("run_id", run_id)
    return event_dict


def _plain(value: Any) -> Any:
    if isinstance(value, sympy.Integer):
        return int(value)
    if isinstance(value, sympy.MatrixBase):
        return [[_plain(x) for x in row] for row in value.tolist()]
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, list | tuple | set | frozenset):
        return [_plain(v) for v in value]
    return value


def plain_values(
    logger: logging.Logger, method_name: str, event_dict: dict[str, Any]
) -> dict[str, Any]:
    """
    Structlog processor turning engine values into JSON data.

    sympy integers and matrices become ints and nested lists, pydantic
    models become dicts; anything else is left to the renderer.
    """
    return {
        key: value if key == "exc_info" else _plain(value) for key, value in event_dict.items()
    }


def configure_logging(
    level: str = "WARNING",
    json_format: bool = False,
    stream: str = "stderr",
) -> None:
    """
    Configure structured logging for the engine.

    Args:
        level: Log level name; unknown names fall back to WARNING
        json_format: Render one JSON object per line instead of console text
        stream: "stderr" (default) or "stdout"
    """
    log_level = getattr(logging, level.upper(), logging.WARNING)

    processors: list[Callable] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
        add_run_id,
        plain_values,
    ]
    if json_format:
        processors += [
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(sort_keys=True),
        ]
    else:
        processors += [
            structlog.processors.StackInfoRenderer(),
            structlog.dev.ConsoleRenderer(colors=_logging_config.colors),
        ]

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    # force=True: reconfigurable within one process
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stdout if stream == "stdout" else sys.stderr,
        level=log_level,
        force=True,
    )

    for name, name_level in _logging_config.suppressed_loggers.items():
        logging.getLogger(name).setLevel(getattr(logging, name_level, logging.WARNING))


def get_logger(name: str | None = None) -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name)
