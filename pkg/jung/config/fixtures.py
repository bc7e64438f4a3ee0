"""
Bundled curve graph fixtures and graph document loading.

Fixtures live as JSON files in the package's fixtures directory, one graph
per file (fixtures/cusp.json, fixtures/brieskorn_2_5.json, ...). The file
stem is the fixture name. The directory is scanned once and cached for the
lifetime of the process.
"""

import json
from pathlib import Path
from typing import Any

from pydantic import ValidationError as PydanticValidationError

from jung.config.logging import get_logger
from jung.errors import GraphParseError
from jung.events import PipelineEvent, log_event
from jung.models.curve import CurveGraph

logger = get_logger(__name__)

FIXTURES_DIR = Path(__file__).parent.parent / "fixtures"

_fixture_cache: dict[str, Path] | None = None


def _scan_fixtures(fixtures_dir: Path) -> dict[str, Path]:
    if not fixtures_dir.exists():
        logger.warning("Fixtures directory not found", path=str(fixtures_dir))
        return {}
    return {path.stem: path for path in sorted(fixtures_dir.glob("*.json"))}


def _registry(fixtures_dir: Path | None = None) -> dict[str, Path]:
    global _fixture_cache
    if fixtures_dir is not None:
        return _scan_fixtures(fixtures_dir)
    if _fixture_cache is None:
        _fixture_cache = _scan_fixtures(FIXTURES_DIR)
        logger.debug("Loaded fixture registry", count=len(_fixture_cache))
    return _fixture_cache


def reload_fixtures() -> dict[str, Path]:
    """Drop the cached registry and rescan."""
    global _fixture_cache
    _fixture_cache = None
    return _registry()


def list_fixtures() -> list[str]:
    """Names of the bundled fixtures, sorted."""
    return sorted(_registry())


def fixture_path(name: str) -> Path:
    """
    Path of a bundled fixture.

    Raises:
        GraphParseError: If no fixture has that name
    """
    registry = _registry()
    if name not in registry:
        raise GraphParseError(f"Unknown fixture {name!r}", source=name)
    return registry[name]


def _read_document(path: Path) -> dict[str, Any]:
    source = str(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphParseError(f"Cannot read input: {exc.strerror}", source=source) from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, source=source, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(document, dict):
        raise GraphParseError("Top-level JSON value must be an object", source=source)
    return document


def parse_graph(document: dict[str, Any], source: str | None = None) -> CurveGraph:
    """
    Validate a decoded JSON document against the CurveGraph schema.

    Raises:
        GraphParseError: With the dotted path of the first offending field
    """
    try:
        return CurveGraph.model_validate(document)
    except PydanticValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        raise GraphParseError(first["msg"], source=source, field=field) from exc


def load_document(source: str) -> dict[str, Any]:
    """
    Raw JSON of a fixture name or a file path.

    A path that does not exist falls back to the bundled fixture named by
    its stem, so "cusp", "fixtures/cusp.json" and "cusp.json" all resolve.
    """
    path = Path(source)
    if not path.exists():
        registry = _registry()
        if source in registry:
            path = registry[source]
        elif path.suffix == ".json" and path.stem in registry:
            path = registry[path.stem]
    return _read_document(path)


def load_graph(source: str) -> CurveGraph:
    """
    Load a curve graph from a file path or a bundled fixture name.

    Raises:
        GraphParseError: If the file is missing, is not JSON or fails the schema
    """
    try:
        graph = parse_graph(load_document(source), source=source)
    except GraphParseError as exc:
        log_event(PipelineEvent.INPUT_REJECTED, success=False, error=exc.message)
        raise
    log_event(
        PipelineEvent.INPUT_LOADED,
        graph=graph.name,
        details={"source": source, "vertices": len(graph.vertices)},
    )
    return graph


def load_fixture(name: str) -> CurveGraph:
    """Load a bundled fixture by name."""
    return parse_graph(_read_document(fixture_path(name)), source=name)
