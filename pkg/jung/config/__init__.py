"""Configuration modules for the resolution engine."""

from jung.config.fixtures import (
    fixture_path,
    list_fixtures,
    load_fixture,
    load_graph,
    reload_fixtures,
)
from jung.config.logging import configure_logging, get_logger
from jung.config.settings import Settings, get_settings

__all__ = [
    "Settings",
    "get_settings",
    "configure_logging",
    "get_logger",
    "fixture_path",
    "list_fixtures",
    "load_fixture",
    "load_graph",
    "reload_fixtures",
]
