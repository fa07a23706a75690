"""Pydantic models for statistics, golden records and reports."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

# --- Surface statistics ---


class SurfaceStats(BaseModel):
    """Counters of the cell classes of a two-dimensional complex."""

    model_config = ConfigDict(frozen=True)

    vertices: int = Field(ge=0, description="Number of 0-cells")
    bounded_edges: int = Field(ge=0, description="Bounded 1-cells")
    rays: int = Field(ge=0, description="Unbounded 1-cells")
    triangles: int = Field(ge=0, description="Bounded 2-cells with 3 vertices")
    squares: int = Field(ge=0, description="Bounded 2-cells with 4 vertices")
    other_bounded_2cells: int = Field(
        default=0, ge=0, description="Bounded 2-cells with 5 or more vertices"
    )
    flaps: int = Field(ge=0, description="Unbounded 2-cells like [0,1] x R>=0")
    cones: int = Field(ge=0, description="Unbounded 2-cells like R>=0^2")
    other_unbounded: int = Field(
        default=0, ge=0, description="Unbounded 2-cells that are neither"
    )

    @property
    def bounded_2cells(self) -> int:
        """All bounded 2-cells."""
        return self.triangles + self.squares + self.other_bounded_2cells

    def as_tuple(self) -> tuple[int, ...]:
        """Counters in display order (vertices .. cones)."""
        return (
            self.vertices,
            self.bounded_edges,
            self.rays,
            self.triangles,
            self.squares,
            self.other_bounded_2cells,
            self.flaps,
            self.cones,
        )


# --- Golden data ---


GOLDEN_FIELDS: tuple[str, ...] = (
    "vertices",
    "bounded_edges",
    "rays",
    "triangles",
    "squares",
    "flaps",
    "cones",
)


class GoldenRow(BaseModel):
    """One row of the table of combinatorial types of tropical cubic surfaces."""

    model_config = ConfigDict(frozen=True)

    type: str = Field(description="Type name such as 'a' or 'aa2a3b'")
    moduli_cones: int = Field(ge=1, description="Cones of this type in moduli")
    vertices: int = Field(ge=0)
    bounded_edges: int = Field(ge=0)
    rays: int = Field(ge=0)
    triangles: int = Field(ge=0)
    squares: int = Field(ge=0)
    flaps: int = Field(ge=0)
    cones: int = Field(ge=0)


class GoldenTable(BaseModel):
    """The shipped golden table."""

    rows: list[GoldenRow]

    def row(self, name: str) -> GoldenRow:
        """Return the row of a type name."""
        for row in self.rows:
            if row.type == name:
                return row
        raise KeyError(name)


class FieldDiff(BaseModel):
    """Comparison of one counter."""

    field: str
    produced: int
    expected: int

    @property
    def ok(self) -> bool:
        """True when both counters agree."""
        return self.produced == self.expected


class GoldenDiff(BaseModel):
    """Field-by-field comparison of produced statistics with a golden row."""

    row: str
    fields: list[FieldDiff]

    @property
    def mismatches(self) -> list[FieldDiff]:
        """Fields whose counters differ."""
        return [f for f in self.fields if not f.ok]

    @property
    def matches(self) -> bool:
        """True on an empty diff."""
        return not self.mismatches


# --- Reports ---


class CheckResult(BaseModel):
    """Outcome of a named verification."""

    name: str
    passed: bool
    detail: str = ""


class CheckReport(BaseModel):
    """A bundle of verification outcomes."""

    subject: str
    summary: str
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True when every check passed."""
        return all(check.passed for check in self.checks)


# --- Fans ---


class FanRecord(BaseModel):
    """Rays and cones of a simplicial fan enumerated up to symmetry."""

    rays: list[tuple[int, ...]] = Field(description="Indicator vectors of connected flats")
    cones: dict[int, list[tuple[int, ...]]] = Field(
        default_factory=dict, description="Cones by dimension, as sorted ray indices"
    )
    orbits: dict[int, int] = Field(default_factory=dict, description="Orbit count per dimension")
    complete: bool = Field(default=True, description="False when a cap stopped the enumeration")

    @property
    def f_vector(self) -> list[int]:
        """(1, #rays, #2-cones, ...) in the reported dimensions."""
        return [1] + [len(self.cones[d]) for d in sorted(self.cones)]

    @property
    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic of the link: alternating f-vector sum."""
        return sum((-1) ** i * f for i, f in enumerate(self.f_vector))

    def to_json(self) -> dict[str, object]:
        """JSON payload with string dimension keys."""
        return {
            "rays": [list(r) for r in self.rays],
            "cones": {str(d): [list(c) for c in cs] for d, cs in sorted(self.cones.items())},
            "f_vector": self.f_vector,
            "orbits": {str(d): n for d, n in sorted(self.orbits.items())},
            "complete": self.complete,
            "euler_characteristic": self.euler_characteristic,
        }


class BergmanCheckpoint(BaseModel):
    """Enumeration state saved after every finished dimension."""

    matroid: str
    dim: int = Field(ge=1, description="Last finished dimension")
    record: FanRecord
    representatives: list[tuple[int, ...]] = Field(
        description="Orbit representatives of the cones of dimension `dim`"
    )
