"""Typed trace events and stage metadata."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Stage(Enum):
    """High-level execution stages for rendering."""

    SETUP = 0
    CONSTRUCTION = 1
    MODIFICATION = 2
    ANALYSIS = 3
    VERIFICATION = 4
    EMISSION = 5


@dataclass(frozen=True)
class StageMeta:
    """Visual metadata for a stage."""

    icon: str
    title: str


class EventKind(Enum):
    """Semantic kind of a trace line."""

    PROGRESS = "progress"
    SUCCESS = "success"
    FAILURE = "failure"


class EventBranch(Enum):
    """Tree branch style for event rendering."""

    MID = "mid"
    END = "end"


@dataclass(frozen=True)
class TraceEvent:
    """Event payload consumed by terminal renderers."""

    stage: Stage
    actor: str
    message: str
    kind: EventKind
    branch: EventBranch


STAGE_META: dict[Stage, StageMeta] = {
    Stage.SETUP: StageMeta(icon="⚙", title="SETUP"),
    Stage.CONSTRUCTION: StageMeta(icon="△", title="CONSTRUCTION"),
    Stage.MODIFICATION: StageMeta(icon="↧", title="MODIFICATION"),
    Stage.ANALYSIS: StageMeta(icon="⌥", title="ANALYSIS"),
    Stage.VERIFICATION: StageMeta(icon="✔", title="VERIFICATION"),
    Stage.EMISSION: StageMeta(icon="▤", title="EMISSION"),
}
