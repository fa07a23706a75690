"""Golden table of combinatorial types and field-by-field comparison."""

from __future__ import annotations

from functools import cache
from importlib import resources

import yaml  # type: ignore[import-untyped]

from tropdelpezzo.schemas.models import (
    GOLDEN_FIELDS,
    FieldDiff,
    GoldenDiff,
    GoldenRow,
    GoldenTable,
    SurfaceStats,
)


@cache
def load_golden_table() -> GoldenTable:
    """The table shipped in ``tropdelpezzo/data/golden_types.yaml``."""
    text = resources.files("tropdelpezzo").joinpath("data/golden_types.yaml").read_text(encoding="utf-8")
    return GoldenTable.model_validate(yaml.safe_load(text))


def golden_compare(produced: SurfaceStats, expected: GoldenRow) -> GoldenDiff:
    """Compare every golden counter; an empty mismatch list means a pass."""
    return GoldenDiff(
        row=expected.type,
        fields=[
            FieldDiff(
                field=name,
                produced=getattr(produced, name),
                expected=getattr(expected, name),
            )
            for name in GOLDEN_FIELDS
        ],
    )


def matching_rows(produced: SurfaceStats, table: GoldenTable | None = None) -> list[GoldenRow]:
    """Rows whose counters all equal `produced`."""
    table = table or load_golden_table()
    return [row for row in table.rows if golden_compare(produced, row).matches]


def closest_row(produced: SurfaceStats, table: GoldenTable | None = None) -> GoldenRow:
    """The row with the fewest mismatching counters (first on ties)."""
    table = table or load_golden_table()
    return min(table.rows, key=lambda row: len(golden_compare(produced, row).mismatches))


# Types of the maximal cones of the moduli fan; generic cubics land on one of them.
GENERIC_TYPES: tuple[str, ...] = ("aa2a3a4", "aa2a3b")


def generic_row(produced: SurfaceStats, table: GoldenTable | None = None) -> GoldenRow | None:
    """The row of a generic type matching `produced`, if any."""
    for row in matching_rows(produced, table):
        if row.type in GENERIC_TYPES:
            return row
    return None
