"""Validated records exchanged between modules and the CLI."""

from tropdelpezzo.schemas.models import (
    GOLDEN_FIELDS,
    BergmanCheckpoint,
    CheckReport,
    CheckResult,
    FanRecord,
    FieldDiff,
    GoldenDiff,
    GoldenRow,
    GoldenTable,
    SurfaceStats,
)

__all__ = [
    "GOLDEN_FIELDS",
    "BergmanCheckpoint",
    "CheckReport",
    "CheckResult",
    "FanRecord",
    "FieldDiff",
    "GoldenDiff",
    "GoldenRow",
    "GoldenTable",
    "SurfaceStats",
]
