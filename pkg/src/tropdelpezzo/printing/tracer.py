"""High-level tracing facade used by long-running computations."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from time import perf_counter

from rich.console import Console

from tropdelpezzo.printing.console import console as default_console
from tropdelpezzo.printing.console import quiet_console
from tropdelpezzo.printing.events import (
    STAGE_META,
    EventBranch,
    EventKind,
    Stage,
    TraceEvent,
)
from tropdelpezzo.printing.renderers import (
    render_check_report,
    render_golden_diffs,
    render_run_start,
    render_stage_header,
    render_stats,
    render_trace_event,
)
from tropdelpezzo.schemas.models import CheckReport, GoldenDiff, SurfaceStats


class PipelineTracer:
    """Facade for rendering progress events to the terminal."""

    def __init__(self, rich_console: Console | None = None) -> None:
        """Initialize tracer with an optional Rich console instance."""
        self._console = rich_console or default_console
        self._rendered_stages: set[Stage] = set()

    @classmethod
    def silent(cls) -> PipelineTracer:
        """A tracer that renders nothing (library default)."""
        return cls(quiet_console())

    @property
    def console(self) -> Console:
        """The console events are rendered to."""
        return self._console

    def run_started(self, subject: str) -> None:
        """Render the run start banner."""
        render_run_start(self._console, subject)

    def stage_started(self, stage: Stage) -> None:
        """Render a stage header once."""
        if stage in self._rendered_stages:
            return
        render_stage_header(self._console, stage, STAGE_META[stage])
        self._rendered_stages.add(stage)

    def info(
        self,
        stage: Stage,
        actor: str,
        message: str,
        *,
        branch: EventBranch = EventBranch.MID,
    ) -> None:
        """Render an informational in-progress line."""
        self._emit(stage, actor, message, EventKind.PROGRESS, branch)

    def success(
        self,
        stage: Stage,
        actor: str,
        message: str,
        *,
        branch: EventBranch = EventBranch.END,
    ) -> None:
        """Render a success line."""
        self._emit(stage, actor, message, EventKind.SUCCESS, branch)

    def failure(
        self,
        stage: Stage,
        actor: str,
        message: str,
        *,
        branch: EventBranch = EventBranch.END,
    ) -> None:
        """Render a failure line."""
        self._emit(stage, actor, message, EventKind.FAILURE, branch)

    @contextmanager
    def live_status(self, stage: Stage, actor: str, message: str) -> Iterator[None]:
        """Render spinner status for long-running work."""
        self.stage_started(stage)
        with self._console.status(f"[actor]{actor}[/actor]: {message}", spinner="dots"):
            yield

    @contextmanager
    def timed(self, stage: Stage, actor: str, message: str) -> Iterator[None]:
        """Spinner plus a success line carrying the elapsed time."""
        started_at = perf_counter()
        try:
            with self.live_status(stage, actor, message):
                yield
        except Exception as exc:
            self.failure(stage, actor, f"{message}: {exc}")
            raise
        self.success(stage, actor, f"{message} ({perf_counter() - started_at:.1f}s)")

    def stats(self, title: str, stats: SurfaceStats) -> None:
        """Render a statistics table."""
        self.stage_started(Stage.ANALYSIS)
        render_stats(self._console, title, stats)

    def golden(self, diffs: list[GoldenDiff]) -> None:
        """Render golden comparisons."""
        self.stage_started(Stage.VERIFICATION)
        render_golden_diffs(self._console, diffs)

    def report(self, report: CheckReport) -> None:
        """Render a check report."""
        self.stage_started(Stage.VERIFICATION)
        render_check_report(self._console, report)

    def _emit(
        self,
        stage: Stage,
        actor: str,
        message: str,
        kind: EventKind,
        branch: EventBranch,
    ) -> None:
        self.stage_started(stage)
        render_trace_event(
            self._console,
            TraceEvent(stage=stage, actor=actor, message=message, kind=kind, branch=branch),
        )
