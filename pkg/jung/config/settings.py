"""
Application settings using pydantic-settings.

Environment variables are prefixed with JUNG_. Settings only steer
diagnostics; nothing here changes a computed artifact.
"""

from functools import lru_cache
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="JUNG_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging
    log_level: str = "WARNING"
    log_json: bool = False
    log_stream: Literal["stderr", "stdout"] = "stderr"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


def reset_settings() -> None:
    """Clear the cached settings (used by tests)."""
    get_settings.cache_clear()
