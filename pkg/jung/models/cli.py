"""Data types for the command-line surface."""

from enum import Enum

from pydantic import BaseModel, Field


class Command(str, Enum):
    """CLI subcommands."""

    VALIDATE = "validate"
    NORMALIZE = "normalize"
    BUILD = "build"
    SURFACE_GRAPH = "surface-graph"
    CHECK = "check"
    RENDER = "render"


class OutputFormat(str, Enum):
    """Output formats."""

    JSON = "json"
    DOT = "dot"


class CliConfig(BaseModel):
    """Resolved arguments of one CLI invocation."""

    command: Command = Field(description="Subcommand to run")
    input: str = Field(description="Input path or bundled fixture name")
    output: str | None = Field(default=None, description="Output path (stdout if omitted)")
    format: OutputFormat = Field(default=OutputFormat.JSON, description="Output format")
    order: list[str] | None = Field(default=None, description="Explicit vertex order")
    minimal: bool = Field(default=False, description="Apply blow-down to the surface graph")
    seed: int | None = Field(default=None, description="Refinement seed")
    steps: int | None = Field(default=None, description="Refinement steps")
