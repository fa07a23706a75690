import pytest
from pydantic import ValidationError

from tropdelpezzo.golden import closest_row, golden_compare, load_golden_table, matching_rows
from tropdelpezzo.schemas.models import (
    GOLDEN_FIELDS,
    CheckReport,
    CheckResult,
    GoldenRow,
    SurfaceStats,
)

TYPE_ZERO = SurfaceStats(
    vertices=1, bounded_edges=0, rays=27, triangles=0, squares=0, flaps=0, cones=135
)


def test_stats_tuple_and_bounded_cells():
    stats = SurfaceStats(
        vertices=78, bounded_edges=150, rays=216, triangles=31, squares=42, flaps=189, cones=135
    )
    assert stats.as_tuple() == (78, 150, 216, 31, 42, 0, 189, 135)
    assert stats.bounded_2cells == 73


def test_stats_are_frozen_and_non_negative():
    with pytest.raises(ValidationError):
        SurfaceStats(vertices=-1, bounded_edges=0, rays=0, triangles=0, squares=0, flaps=0, cones=0)
    with pytest.raises(ValidationError):
        TYPE_ZERO.vertices = 2


def test_golden_table_shape():
    table = load_golden_table()
    assert len(table.rows) == 24
    assert table.row("0").cones == 135
    assert sum(row.moduli_cones for row in table.rows if row.type in ("aa2a3a4", "aa2a3b")) == 9720
    with pytest.raises(KeyError):
        table.row("zz")


def test_golden_rows_all_have_135_cones():
    assert {row.cones for row in load_golden_table().rows} == {135}


def test_golden_compare_reports_each_field():
    row = load_golden_table().row("0")
    diff = golden_compare(TYPE_ZERO, row)
    assert diff.matches
    assert [f.field for f in diff.fields] == list(GOLDEN_FIELDS)
    assert [r.type for r in matching_rows(TYPE_ZERO)] == ["0"]


def test_closest_row_for_a_near_miss():
    near = TYPE_ZERO.model_copy(update={"rays": 28})
    assert matching_rows(near) == []
    assert closest_row(near).type == "0"
    diff = golden_compare(near, load_golden_table().row("0"))
    assert [(f.field, f.produced, f.expected) for f in diff.mismatches] == [("rays", 28, 27)]


def test_golden_row_rejects_zero_moduli_cones():
    with pytest.raises(ValidationError):
        GoldenRow(
            type="x", moduli_cones=0, vertices=1, bounded_edges=0, rays=0,
            triangles=0, squares=0, flaps=0, cones=0,
        )


def test_check_report_passes_only_when_all_checks_pass():
    report = CheckReport(subject="s", summary="2 checks", checks=[CheckResult(name="a", passed=True)])
    assert report.passed
    report.checks.append(CheckResult(name="b", passed=False, detail="why"))
    assert not report.passed
    assert CheckReport(subject="empty", summary="").passed
