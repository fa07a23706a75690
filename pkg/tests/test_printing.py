from io import StringIO

import pytest
from rich.console import Console

from tropdelpezzo.printing import PipelineTracer, Stage
from tropdelpezzo.printing.console import THEME
from tropdelpezzo.schemas.models import CheckReport, CheckResult, FieldDiff, GoldenDiff, SurfaceStats


@pytest.fixture
def recorded():
    buffer = StringIO()
    console = Console(file=buffer, theme=THEME, width=120, color_system=None)
    return PipelineTracer(console), buffer


def test_timed_reports_success(recorded):
    tracer, buffer = recorded
    with tracer.timed(Stage.MODIFICATION, "F14", "step 1/3"):
        pass
    text = buffer.getvalue()
    assert "F14" in text and "step 1/3" in text
    assert "✓" in text


def test_timed_reports_failure_and_reraises(recorded):
    tracer, buffer = recorded
    with pytest.raises(ValueError, match="boom"):
        with tracer.timed(Stage.ANALYSIS, "Trees", "reading"):
            raise ValueError("boom")
    assert "reading: boom" in buffer.getvalue()
    assert "✗" in buffer.getvalue()


def test_stage_header_rendered_once(recorded):
    tracer, buffer = recorded
    tracer.info(Stage.SETUP, "Arrangement", "first")
    before = buffer.getvalue()
    tracer.info(Stage.SETUP, "Arrangement", "second")
    added = buffer.getvalue()[len(before):]
    assert "second" in added
    assert before.count("\n") >= 2
    assert added.count("\n") == 1


def test_tables(recorded):
    tracer, buffer = recorded
    stats = SurfaceStats(vertices=1, bounded_edges=0, rays=27, triangles=0, squares=0, flaps=0, cones=135)
    tracer.stats("type 0", stats)
    tracer.golden(
        [GoldenDiff(row="a", fields=[FieldDiff(field="rays", produced=27, expected=69)])]
    )
    tracer.report(
        CheckReport(subject="cox", summary="1 check", checks=[CheckResult(name="grading", passed=True)])
    )
    text = buffer.getvalue()
    assert "135" in text
    assert "rays: 27 != 69" in text
    assert "grading" in text


def test_silent_tracer_renders_nothing():
    tracer = PipelineTracer.silent()
    assert tracer.console.quiet
    with tracer.timed(Stage.SETUP, "x", "y"):
        pass
