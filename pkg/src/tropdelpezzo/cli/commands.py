"""Command implementations behind `dispatch`."""

from __future__ import annotations

import json
import logging
import random
import sys
from collections.abc import Callable
from fractions import Fraction
from pathlib import Path
from typing import Any

from tropdelpezzo.cli.config import RunConfig
from tropdelpezzo.config import load_settings
from tropdelpezzo.coxideal import cox_system, run_checks
from tropdelpezzo.degenerate import (
    DegenerateKind,
    DegenerateSpec,
    build_degenerate,
    build_type_a,
    build_type_b,
    build_type_zero,
    system_by_index,
)
from tropdelpezzo.errors import (
    EXIT_FAILURE,
    EXIT_NON_GENERIC,
    EXIT_OK,
    EXIT_RESOURCE_CAP,
    NonGenericError,
    StructuralError,
    UsageError,
)
from tropdelpezzo.golden import golden_compare, load_golden_table, matching_rows
from tropdelpezzo.matroid import circuits_cached, enumerate_bergman, matroid_by_name, root_symmetry
from tropdelpezzo.modification import (
    DelPezzoSurface,
    build_del_pezzo,
    example_M05,
    length_rank,
)
from tropdelpezzo.polyhedra import PolyComplex, complex_to_json, dumps, link_at_vertex, to_dot
from tropdelpezzo.printing import PipelineTracer, Stage
from tropdelpezzo.rootsys import LineLabel
from tropdelpezzo.schemas.models import GoldenDiff
from tropdelpezzo.svg import arrangement_svg, tree_svg, triangle_svg
from tropdelpezzo.tropcurves import (
    P1,
    P2,
    P3,
    P4,
    TropPoint2,
    TypeVerdict,
    check_general_position,
    classify_type,
    plane_arrangement,
    trop_triangle,
)

logger = logging.getLogger(__name__)

DEFAULT_TYPE_A_ROOT = (1, 0, 1, 0, 1, 0)

Command = Callable[[RunConfig, PipelineTracer], int]


def emit(cfg: RunConfig, text: str, tracer: PipelineTracer) -> None:
    """Write an artifact to ``--out`` or stdout."""
    if cfg.out is None:
        sys.stdout.write(text)
        return
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(text, encoding="utf-8")
    tracer.success(Stage.EMISSION, "Writer", f"{cfg.format} written to {cfg.out}")


def _unsupported_format(cfg: RunConfig) -> UsageError:
    return UsageError(f"{cfg.command} cannot emit --format {cfg.format}")


def _load_surface(path: Path) -> DelPezzoSurface:
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise StructuralError(f"cannot read surface JSON {path}: {exc}") from exc
    return DelPezzoSurface.from_json(payload)


def _links_dot(X: PolyComplex) -> str:
    return "".join(to_dot(link_at_vertex(X, i), f"link_v{i}") for i in range(len(X.vertices)))


def _trees_newick(trees: dict[LineLabel, Any]) -> str:
    return "".join(f"{line}\t{tree.to_newick()}\n" for line, tree in sorted(trees.items()))


def _surface_artifact(cfg: RunConfig, surface: DelPezzoSurface) -> str:
    if cfg.format == "json":
        return dumps(surface.to_json())
    if cfg.format == "dot":
        return _links_dot(surface.complex)
    if cfg.format == "newick":
        return _trees_newick(surface.trees)
    if cfg.format == "svg" and len(surface.points) > 4:
        return arrangement_svg(surface.points, plane_arrangement(surface.points))
    raise _unsupported_format(cfg)


# --- build / classify ---


def cmd_build(cfg: RunConfig, tracer: PipelineTracer) -> int:
    """Build a del Pezzo surface by iterated modification."""
    if cfg.degree is None:
        raise UsageError("build needs --degree")
    tracer.run_started(f"degree {cfg.degree} tropical del Pezzo surface")
    surface = build_del_pezzo(
        cfg.degree,
        cfg.p5,
        cfg.p6,
        seed=cfg.seed,
        order=cfg.order,
        verify=cfg.verify,
        tracer=tracer,
    )
    tracer.stats(f"degree {cfg.degree}", surface.stats)
    emit(cfg, _surface_artifact(cfg, surface), tracer)
    return EXIT_OK


def cmd_classify(cfg: RunConfig, tracer: PipelineTracer) -> int:
    """Parallelogram verdict for a pair of points."""
    if cfg.p5 is None or cfg.p6 is None:
        raise UsageError("classify needs --p5 and --p6")
    verdict = classify_type(cfg.p5, cfg.p6)
    tracer.success(Stage.ANALYSIS, "Classifier", str(verdict))
    if cfg.format == "svg":
        cell = trop_triangle(P4, cfg.p5, cfg.p6)
        emit(cfg, triangle_svg(cell, [P4, cfg.p5, cfg.p6]), tracer)
    elif cfg.format == "json":
        emit(cfg, dumps({"p5": str(cfg.p5), "p6": str(cfg.p6), "verdict": str(verdict)}), tracer)
    else:
        raise _unsupported_format(cfg)
    return EXIT_NON_GENERIC if verdict is TypeVerdict.NON_GENERIC else EXIT_OK


# --- surface files ---


def cmd_stats(cfg: RunConfig, tracer: PipelineTracer) -> int:
    """Cell counters of a stored surface."""
    assert cfg.input is not None
    surface = _load_surface(cfg.input)
    tracer.stats(str(cfg.input), surface.stats)
    if cfg.format != "json":
        raise _unsupported_format(cfg)
    emit(cfg, dumps(surface.stats.model_dump()), tracer)
    return EXIT_OK


def cmd_trees(cfg: RunConfig, tracer: PipelineTracer) -> int:
    """Boundary trees of a stored surface."""
    assert cfg.input is not None
    surface = _load_surface(cfg.input)
    trees = surface.trees
    if cfg.line is not None:
        label = LineLabel.parse(cfg.line, surface.degree)
        trees = {label: surface.trees[label]} if label in surface.trees else {}
        if not trees:
            raise UsageError(f"surface has no line {cfg.line}")
    tracer.success(Stage.ANALYSIS, "Trees", f"{len(trees)} boundary trees")
    if cfg.format == "json":
        text = dumps({str(line): tree.to_json() for line, tree in sorted(trees.items())})
    elif cfg.format == "newick":
        text = _trees_newick(trees)
    elif cfg.format == "dot":
        text = "".join(
            tree.to_dot(f"tree_{line}") for line, tree in sorted(trees.items())
        )
    elif len(trees) == 1:
        (line, tree), = trees.items()
        text = tree_svg(tree, str(line))
    else:
        raise UsageError("svg output draws one tree; pass --line")
    emit(cfg, text, tracer)
    return EXIT_OK


# --- matroids and Cox ideals ---


HUGE_MATROIDS = ("e7",)


def cmd_bergman(cfg: RunConfig, tracer: PipelineTracer) -> int:
    """Bergman fan of K4, E6 or E7; exit 3 when a cap stops the enumeration.

    E7 runs only with ``--allow-huge`` and then checkpoints every finished
    dimension under the cache directory, resuming from it on the next run.
    """
    settings = load_settings()
    if cfg.matroid in HUGE_MATROIDS and not cfg.allow_huge:
        raise UsageError(
            f"the {cfg.matroid} Bergman fan is out of desk scale; pass --allow-huge"
        )
    checkpoint = None
    if cfg.allow_huge:
        checkpoint = settings.cache_dir / f"bergman_{cfg.matroid}.checkpoint.json"
    M = matroid_by_name(cfg.matroid)
    symmetry = root_symmetry(int(cfg.matroid[1:])) if cfg.matroid in ("e6", "e7") else []
    with tracer.timed(Stage.CONSTRUCTION, "Matroid", f"circuits of {cfg.matroid}"):
        circuit_list = circuits_cached(M, settings.cache_dir if symmetry else None)
    with tracer.timed(Stage.CONSTRUCTION, "Bergman", "enumerating cones"):
        record = enumerate_bergman(
            M,
            symmetry,
            cfg.max_dim,
            circuit_list=circuit_list,
            coarse=cfg.coarse,
            workers=cfg.threads,
            cone_cap=cfg.cone_cap,
            time_budget=cfg.time_budget,
            checkpoint=checkpoint,
        )
    if cfg.format != "json":
        raise _unsupported_format(cfg)
    emit(cfg, dumps(record.to_json()), tracer)
    if not record.complete:
        tracer.failure(Stage.VERIFICATION, "Bergman", f"incomplete: f-vector {record.f_vector}")
        return EXIT_RESOURCE_CAP
    tracer.success(Stage.VERIFICATION, "Bergman", f"f-vector {record.f_vector}")
    return EXIT_OK


def cmd_cox(cfg: RunConfig, tracer: PipelineTracer) -> int:
    """Trinomial list or check report of a universal Cox system."""
    degree = cfg.degree or 3
    if cfg.format != "json":
        raise _unsupported_format(cfg)
    if cfg.check == "none":
        with tracer.timed(Stage.CONSTRUCTION, "Cox", f"degree {degree} trinomials"):
            system = cox_system(degree)
        emit(cfg, dumps([t.to_json() for t in system]), tracer)
        return EXIT_OK
    with tracer.timed(Stage.VERIFICATION, "Cox", f"degree {degree} checks"):
        report = run_checks(degree, cfg.check)
    tracer.report(report)
    emit(cfg, dumps(report.model_dump()), tracer)
    return EXIT_OK if report.passed else EXIT_FAILURE


# --- degenerate and M05 ---


def degenerate_spec(cfg: RunConfig) -> DegenerateSpec:
    """The degenerate type selected by ``--kind``/``--root``/``--system-index``."""
    kind = DegenerateKind(cfg.kind or "0")
    if kind is DegenerateKind.A:
        return DegenerateSpec(kind, root=cfg.root or DEFAULT_TYPE_A_ROOT)
    if kind is DegenerateKind.B:
        return DegenerateSpec(kind, system=system_by_index(cfg.system_index))
    return DegenerateSpec(kind)


def cmd_degenerate(cfg: RunConfig, tracer: PipelineTracer) -> int:
    """Degenerate cubic surface of type 0, (a) or (b)."""
    spec = degenerate_spec(cfg)
    with tracer.timed(Stage.CONSTRUCTION, "Degenerate", f"type {spec.kind}"):
        surface = build_degenerate(spec)
    tracer.stats(f"type {spec.kind}", surface.stats)
    emit(cfg, _surface_artifact(cfg, surface), tracer)
    return EXIT_OK


def cmd_m05(cfg: RunConfig, tracer: PipelineTracer) -> int:
    """Three modifications along a triple point splitting at scale v."""
    shown = "inf" if cfg.v is None else str(cfg.v)
    X = example_M05(cfg.v, tracer=tracer)
    tracer.success(Stage.ANALYSIS, "M05", f"v={shown}: {'fan' if X.is_fan() else 'not a fan'}")
    if cfg.format == "json":
        payload = {"v": shown, "is_fan": X.is_fan(), "complex": complex_to_json(X)}
        emit(cfg, dumps(payload), tracer)
    elif cfg.format == "dot":
        emit(cfg, _links_dot(X), tracer)
    else:
        raise _unsupported_format(cfg)
    return EXIT_OK


# --- golden data and sampling ---


def _degenerate_diffs(cfg: RunConfig, tracer: PipelineTracer) -> list[GoldenDiff]:
    table = load_golden_table()
    builders: list[tuple[str, Callable[[], DelPezzoSurface]]] = [
        ("0", build_type_zero),
        ("a", lambda: build_type_a(cfg.root or DEFAULT_TYPE_A_ROOT)),
        ("b", lambda: build_type_b(system_by_index(cfg.system_index))),
    ]
    diffs = []
    for name, builder in builders:
        with tracer.timed(Stage.CONSTRUCTION, "Degenerate", f"type {name}"):
            surface = builder()
        diffs.append(golden_compare(surface.stats, table.row(name)))
    return diffs


def cmd_golden(cfg: RunConfig, tracer: PipelineTracer) -> int:
    """Field-by-field comparison with the golden table."""
    table = load_golden_table()
    if cfg.all_rows:
        diffs = _degenerate_diffs(cfg, tracer)
    elif cfg.input is not None:
        stats = _load_surface(cfg.input).stats
        if cfg.row is not None:
            try:
                rows = [table.row(cfg.row)]
            except KeyError as exc:
                raise UsageError(f"no golden row {cfg.row!r}") from exc
        else:
            rows = matching_rows(stats, table) or table.rows
        diffs = [golden_compare(stats, row) for row in rows]
    else:
        raise UsageError("golden needs --input or --all")
    tracer.golden(diffs)
    if cfg.format != "json":
        raise _unsupported_format(cfg)
    emit(cfg, dumps([d.model_dump() for d in diffs]), tracer)
    passed = all(d.matches for d in diffs) if cfg.all_rows or cfg.row else any(
        d.matches for d in diffs
    )
    return EXIT_OK if passed else EXIT_FAILURE


_SAMPLE_RANGE = 6
_SAMPLE_DENOMINATOR = 12
_MAX_ATTEMPTS = 200
_MAX_BUILDS = 20


def _random_point(rng: random.Random) -> TropPoint2:
    bound = _SAMPLE_RANGE * _SAMPLE_DENOMINATOR
    x, y = (Fraction(rng.randint(-bound, bound), _SAMPLE_DENOMINATOR) for _ in range(2))
    return TropPoint2.finite(x, y)


def random_generic_points(degree: int, rng: random.Random) -> list[TropPoint2]:
    """Points of a small box in (1/12)Z^2 that pass every planar genericity test.

    Denominators divide 12, which keeps the valued field of the realization
    small.

    Raises:
        NonGenericError: If no generic choice is found within the attempt budget.
    """
    wanted = 1 if degree == 4 else 2
    for _ in range(_MAX_ATTEMPTS):
        extra = [_random_point(rng) for _ in range(wanted)]
        try:
            check_general_position([P1, P2, P3, P4, *extra])
        except NonGenericError:
            continue
        if degree == 3 and classify_type(*extra) is TypeVerdict.NON_GENERIC:
            continue
        return extra
    raise NonGenericError(f"no generic points found in {_MAX_ATTEMPTS} attempts")


def sample_generic_surface(
    degree: int, rng: random.Random, *, seed: int, tracer: PipelineTracer
) -> tuple[list[TropPoint2], DelPezzoSurface]:
    """Draw points until the surface built from them is generic as well.

    Raises:
        NonGenericError: If every build within the budget is rejected.
    """
    for _ in range(_MAX_BUILDS):
        extra = random_generic_points(degree, rng)
        try:
            return extra, build_del_pezzo(degree, *extra, seed=seed, tracer=tracer)
        except NonGenericError as exc:
            logger.info("resampling %s: %s", ", ".join(map(str, extra)), exc.condition)
    raise NonGenericError(f"no generic surface built in {_MAX_BUILDS} attempts")


def cmd_sample(cfg: RunConfig, tracer: PipelineTracer) -> int:
    """Random generic surfaces: statistics, golden rows and the classifier verdict.

    Degree 3 also reports the rank of the tree-length map over the samples.
    """
    degree = cfg.degree or 3
    if degree not in (3, 4):
        raise UsageError("sample supports degrees 3 and 4")
    rng = random.Random(cfg.seed)
    records: list[dict[str, Any]] = []
    surfaces: list[DelPezzoSurface] = []
    for index in range(cfg.samples):
        extra, surface = sample_generic_surface(
            degree, rng, seed=cfg.seed + index, tracer=tracer
        )
        surfaces.append(surface)
        record: dict[str, Any] = {
            "points": [str(p) for p in extra],
            "stats": list(surface.stats.as_tuple()),
            "four_valent_trees": surface.four_valent_trees(),
        }
        if degree == 3:
            record["verdict"] = str(classify_type(*extra))
            record["rows"] = [row.type for row in matching_rows(surface.stats)]
        records.append(record)
        tracer.info(Stage.ANALYSIS, "Sample", f"{index + 1}/{cfg.samples}: {record['stats']}")
    summary: dict[str, Any] = {"degree": degree, "seed": cfg.seed, "samples": records}
    if degree == 3:
        by_verdict: dict[str, set[tuple[str, ...]]] = {}
        for record in records:
            by_verdict.setdefault(record["verdict"], set()).add(tuple(record["rows"]))
        summary["verdict_rows"] = {k: sorted(map(list, v)) for k, v in sorted(by_verdict.items())}
        summary["consistent"] = all(len(v) == 1 for v in by_verdict.values())
        summary["length_rank"] = length_rank(surfaces)
    if cfg.format != "json":
        raise _unsupported_format(cfg)
    emit(cfg, dumps(summary), tracer)
    return EXIT_OK


COMMAND_TABLE: dict[str, Command] = {
    "build": cmd_build,
    "classify": cmd_classify,
    "stats": cmd_stats,
    "trees": cmd_trees,
    "bergman": cmd_bergman,
    "cox": cmd_cox,
    "degenerate": cmd_degenerate,
    "m05": cmd_m05,
    "golden": cmd_golden,
    "sample": cmd_sample,
}


def dispatch(cfg: RunConfig, tracer: PipelineTracer | None = None) -> int:
    """Run one command and return its exit status.

    Library errors propagate; `tropdelpezzo.main.run` maps them to exit codes.
    """
    tracer = tracer or PipelineTracer.silent()
    command = COMMAND_TABLE.get(cfg.command)
    if command is None:
        raise UsageError(f"unknown command {cfg.command!r}")
    logger.debug("dispatching %s", cfg.command)
    return command(cfg, tracer)

