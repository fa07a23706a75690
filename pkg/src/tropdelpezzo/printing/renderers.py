"""Rendering helpers for pipeline tracing output."""

from __future__ import annotations

from collections.abc import Sequence

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from tropdelpezzo.printing.console import now_timestamp
from tropdelpezzo.printing.events import (
    EventBranch,
    EventKind,
    Stage,
    StageMeta,
    TraceEvent,
)
from tropdelpezzo.schemas.models import CheckReport, GoldenDiff, SurfaceStats

_STATS_COLUMNS = (
    ("vertices", "V"),
    ("bounded_edges", "E"),
    ("rays", "R"),
    ("triangles", "tri"),
    ("squares", "sq"),
    ("other_bounded_2cells", "other"),
    ("flaps", "flaps"),
    ("cones", "cones"),
)


def render_run_start(console: Console, subject: str) -> None:
    """Render a top-level run start panel."""
    title = Text(f"RUN STARTED: {subject}", style="bold")
    panel = Panel.fit(
        title,
        border_style="stage",
        box=box.DOUBLE,
        padding=(0, 2),
    )
    console.print(panel)


def render_stage_header(console: Console, stage: Stage, meta: StageMeta) -> None:
    """Render a stage title row with timestamp."""
    console.print(
        f"[muted][{now_timestamp()}][/muted] "
        f"[stage]{meta.icon} STAGE {stage.value}: {meta.title}[/stage]"
    )


def render_trace_event(console: Console, event: TraceEvent) -> None:
    """Render one structured trace event line."""
    branch = "├─" if event.branch is EventBranch.MID else "└─"
    prefix = f"           {branch} [actor]{event.actor}[/actor]: "

    if event.kind is EventKind.PROGRESS:
        console.print(f"{prefix}{event.message}")
        return

    if event.kind is EventKind.SUCCESS:
        console.print(f"{prefix}[ok]✓[/] {event.message}")
        return

    console.print(f"{prefix}[error]✗[/] {event.message}")


def render_stats(console: Console, title: str, stats: SurfaceStats) -> None:
    """Render the cell counters of one surface as a single-row table."""
    table = Table(title=title, box=box.SIMPLE_HEAVY)
    for _, header in _STATS_COLUMNS:
        table.add_column(header, justify="right", style="count")
    table.add_row(*(str(getattr(stats, name)) for name, _ in _STATS_COLUMNS))
    console.print(table)


def render_golden_diffs(console: Console, diffs: Sequence[GoldenDiff]) -> None:
    """Render golden comparisons; mismatching fields are listed per row."""
    table = Table(title="Golden comparison", box=box.SIMPLE_HEAVY)
    table.add_column("Row", style="actor")
    table.add_column("Result")
    table.add_column("Mismatches")
    for diff in diffs:
        verdict = "[ok]match[/ok]" if diff.matches else "[error]differs[/error]"
        details = ", ".join(
            f"{f.field}: {f.produced} != {f.expected}" for f in diff.mismatches
        )
        table.add_row(diff.row, verdict, details or "-")
    console.print(table)


def render_check_report(console: Console, report: CheckReport) -> None:
    """Render a bundle of named checks inside a panel."""
    table = Table(show_header=False, box=box.SIMPLE, pad_edge=False)
    table.add_column("check", style="actor")
    table.add_column("result")
    table.add_column("detail", style="muted")
    for check in report.checks:
        mark = "[ok]✓[/]" if check.passed else "[error]✗[/]"
        table.add_row(check.name, mark, check.detail)
    border = "ok" if report.passed else "error"
    console.print(
        Panel(table, title=f"{report.subject}: {report.summary}", border_style=border, box=box.ROUNDED)
    )
