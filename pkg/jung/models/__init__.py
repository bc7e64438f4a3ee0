"""Pydantic models for the resolution engine."""

from jung.models.cli import CliConfig, Command, OutputFormat
from jung.models.complex import (
    BaseKind,
    BaseLocus,
    Curve,
    CurveClass,
    CurveRole,
    CurveSide,
    DivisorComplex,
    Surface,
    SurfaceKind,
    TriplePoint,
)
from jung.models.curve import (
    Arrow,
    CurveGraph,
    OrderedCurveGraph,
    ValidationReport,
    Vertex,
    Violation,
    ViolationCode,
)
from jung.models.local import (
    ChainComponent,
    ChainDescriptor,
    DiscBundleModel,
    DiscModification,
    ModifiedPoint,
    ModifiedRuledSurface,
)
from jung.models.report import CheckReport, CheckResult
from jung.models.surface import SCurveData, SGraph, SVertex
from jung.models.tower import (
    AdjacentEntry,
    FreeCurve,
    LevelRole,
    TowerCurve,
    TowerDescriptor,
    TowerLevel,
    TransversalNode,
    VertexContext,
)

__all__ = [
    "AdjacentEntry",
    "Arrow",
    "BaseKind",
    "BaseLocus",
    "ChainComponent",
    "ChainDescriptor",
    "CheckReport",
    "CheckResult",
    "CliConfig",
    "Command",
    "Curve",
    "CurveClass",
    "CurveGraph",
    "CurveRole",
    "CurveSide",
    "DiscBundleModel",
    "DiscModification",
    "DivisorComplex",
    "FreeCurve",
    "LevelRole",
    "ModifiedPoint",
    "ModifiedRuledSurface",
    "OrderedCurveGraph",
    "OutputFormat",
    "SCurveData",
    "SGraph",
    "SVertex",
    "Surface",
    "SurfaceKind",
    "TowerCurve",
    "TowerDescriptor",
    "TowerLevel",
    "TransversalNode",
    "TriplePoint",
    "ValidationReport",
    "Vertex",
    "VertexContext",
    "Violation",
    "ViolationCode",
]
