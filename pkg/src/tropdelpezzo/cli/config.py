"""Validated run configuration assembled from flags and an optional YAML file."""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

import yaml  # type: ignore[import-untyped]
from pydantic import BaseModel, ConfigDict, ValidationError

from tropdelpezzo.errors import DomainError, UsageError
from tropdelpezzo.rational import parse_rational
from tropdelpezzo.rootsys import RootVector, parse_root
from tropdelpezzo.tropcurves import TropPoint2

logger = logging.getLogger(__name__)

COMMANDS = (
    "build",
    "classify",
    "stats",
    "trees",
    "bergman",
    "cox",
    "degenerate",
    "m05",
    "golden",
    "sample",
)
FORMATS = ("json", "dot", "newick", "svg")


class ConfigFile(BaseModel):
    """Keys accepted in a ``--config`` YAML file; flags on the command line win."""

    model_config = ConfigDict(extra="forbid")

    degree: int | None = None
    p5: str | None = None
    p6: str | None = None
    seed: int | None = None
    order: list[str] | None = None
    verify: bool | None = None
    matroid: str | None = None
    coarse: bool | None = None
    threads: int | None = None
    max_dim: int | None = None
    cone_cap: int | None = None
    time_budget: float | None = None
    allow_huge: bool | None = None
    check: str | None = None
    kind: str | None = None
    root: str | None = None
    system_index: int | None = None
    v: str | None = None
    samples: int | None = None
    input: str | None = None
    line: str | None = None
    row: str | None = None
    all_rows: bool | None = None
    out: str | None = None
    format: str | None = None
    quiet: bool | None = None


def load_config_file(path: Path) -> dict[str, Any]:
    """Read and validate a YAML run-config file.

    Raises:
        UsageError: If the file is missing, not YAML or has unknown keys.
    """
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
        parsed = ConfigFile.model_validate(raw)
    except (OSError, yaml.YAMLError, ValidationError) as exc:
        raise UsageError(f"invalid config file {path}: {exc}") from exc
    return parsed.model_dump(exclude_none=True)


@dataclass(frozen=True)
class RunConfig:
    """Everything one command needs, parsed exactly."""

    command: str
    degree: int | None = None
    p5: TropPoint2 | None = None
    p6: TropPoint2 | None = None
    seed: int = 0
    order: tuple[str, ...] | None = None
    verify: bool = False
    matroid: str = "k4"
    coarse: bool = False
    threads: int = 1
    max_dim: int | None = None
    cone_cap: int | None = None
    time_budget: float | None = None
    allow_huge: bool = False
    check: str = "all"
    kind: str | None = None
    root: RootVector | None = None
    system_index: int = 0
    v: Fraction | None = None
    samples: int = 10
    input: Path | None = None
    line: str | None = None
    row: str | None = None
    all_rows: bool = False
    out: Path | None = None
    format: str = "json"
    quiet: bool = False

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> RunConfig:
        """Parse raw flag/config values.

        Raises:
            UsageError: If a value cannot be parsed or is out of range.
        """
        present = {k: v for k, v in values.items() if v is not None}
        command = present.get("command")
        if command not in COMMANDS:
            raise UsageError(f"unknown command {command!r}")
        try:
            config = cls(
                command=command,
                degree=_int_or_none(present.get("degree")),
                p5=_point(present.get("p5")),
                p6=_point(present.get("p6")),
                seed=int(present.get("seed", 0)),
                order=_order(present.get("order")),
                verify=bool(present.get("verify", False)),
                matroid=str(present.get("matroid", "k4")),
                coarse=bool(present.get("coarse", False)),
                threads=int(present.get("threads", 1)),
                max_dim=_int_or_none(present.get("max_dim")),
                cone_cap=_int_or_none(present.get("cone_cap")),
                time_budget=_float_or_none(present.get("time_budget")),
                allow_huge=bool(present.get("allow_huge", False)),
                check=str(present.get("check", "all")),
                kind=None if "kind" not in present else str(present["kind"]),
                root=None if "root" not in present else parse_root(str(present["root"]), 6),
                system_index=int(present.get("system_index", 0)),
                v=_valuation(present.get("v")),
                samples=int(present.get("samples", 10)),
                input=_path(present.get("input")),
                line=present.get("line"),
                row=present.get("row"),
                all_rows=bool(present.get("all_rows", False)),
                out=_path(present.get("out")),
                format=str(present.get("format", "json")),
                quiet=bool(present.get("quiet", False)),
            )
        except (DomainError, ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from exc
        config.validate()
        return config

    def validate(self) -> None:
        """Range checks that do not depend on the command's own module.

        Raises:
            UsageError: On the first violation.
        """
        if self.degree is not None and self.degree not in (3, 4, 5):
            raise UsageError("--degree must be 3, 4 or 5")
        if self.format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
        if self.threads < 1:
            raise UsageError("--threads must be positive")
        if self.samples < 1:
            raise UsageError("--samples must be positive")
        if self.kind is not None and self.kind not in ("0", "a", "b"):
            raise UsageError("--kind must be 0, a or b")
        if self.command in ("stats", "trees") and self.input is None:
            raise UsageError(f"{self.command} needs --input surface.json")


def _int_or_none(value: Any) -> int | None:
    return None if value is None else int(value)


def _float_or_none(value: Any) -> float | None:
    return None if value is None else float(value)


def _path(value: Any) -> Path | None:
    return None if value is None else Path(str(value)).expanduser()


def _point(value: Any) -> TropPoint2 | None:
    return None if value is None else TropPoint2.parse(str(value))


def _order(value: Any) -> tuple[str, ...] | None:
    if value is None:
        return None
    if isinstance(value, str):
        return tuple(part.strip() for part in value.split(",") if part.strip())
    return tuple(str(part) for part in value)


def _valuation(value: Any) -> Fraction | None:
    """Parse v; "inf" (the default) means the triple point does not split."""
    if value is None or str(value).strip().lower() in ("inf", "oo", "infinity"):
        return None
    return parse_rational(str(value))
