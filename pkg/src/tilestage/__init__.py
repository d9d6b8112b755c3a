"""Staged two-handed tile self-assembly workbench."""

from .core import (
    GlueTable,
    Placement,
    Supertile,
    Tile,
    TileSet,
    attachment_strength,
    canonicalize,
    combine,
)
from .engine import Bin, BinResult, ClosureBudget, produce_closure, unique_production
from .staged import ExecutionResult, Metrics, StagedSystem, execute, metrics, validate
from .verify import (
    AttachmentEvent,
    Shape,
    is_fully_connected,
    is_planar_attachment,
    is_planar_system,
    shape_equals,
)

__all__ = [
    "GlueTable",
    "Placement",
    "Supertile",
    "Tile",
    "TileSet",
    "attachment_strength",
    "canonicalize",
    "combine",
    "Bin",
    "BinResult",
    "ClosureBudget",
    "produce_closure",
    "unique_production",
    "ExecutionResult",
    "Metrics",
    "StagedSystem",
    "execute",
    "metrics",
    "validate",
    "AttachmentEvent",
    "Shape",
    "is_fully_connected",
    "is_planar_attachment",
    "is_planar_system",
    "shape_equals",
]

__version__ = "0.1.0"
