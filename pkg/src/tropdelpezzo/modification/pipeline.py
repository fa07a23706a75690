"""The iterated open modification building tropical del Pezzo surfaces.

The torus of the plane blown up at the three coordinate points tropicalizes
to the plane with its hexagonal fan. Each further (-1)-curve contributes one
coordinate: the surface built so far is refined along the curve's tropical
function and replaced by the graph of that function plus downward cells
over its divisor. After the last step every ray of the surface points toward
one line, and the boundary trees are read off at infinity.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from tropdelpezzo.errors import (
    ConsistencyError,
    DomainError,
    LabelingError,
    NonGenericError,
    ResourceCapError,
)
from tropdelpezzo.golden import closest_row, generic_row
from tropdelpezzo.modification.arrangement import (
    MODIFICATION_ORDER,
    Arrangement,
    blowup_lines,
    curve_label,
    display_label,
    expected_direction,
    point_count,
)
from tropdelpezzo.modification.checks import fiber_dichotomy, local_irreducibility, round_trip
from tropdelpezzo.modification.plfunction import (
    PLFunction,
    graph_along,
    linearity_subdivision,
)
from tropdelpezzo.modification.surface import (
    DelPezzoSurface,
    TrackedCurve,
    check_cones,
    check_leaf_sets,
)
from tropdelpezzo.modification.valued import common_denominator
from tropdelpezzo.polyhedra import Cell, PolyComplex, check_balanced
from tropdelpezzo.printing import PipelineTracer, Stage
from tropdelpezzo.rational import IntVector, primitive
from tropdelpezzo.rootsys import LineKind, LineLabel
from tropdelpezzo.schemas.models import CheckResult
from tropdelpezzo.tropcurves import P1, P2, P3, P4, TropPoint2, check_general_position

logger = logging.getLogger(__name__)

MAX_DENOMINATOR = 60

HEX_RAYS: tuple[IntVector, ...] = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))


def hex_fan() -> PolyComplex:
    """The plane with the fan of the degree-six toric del Pezzo surface."""
    origin = (0, 0)
    cells = [
        Cell.make(2, [origin], [HEX_RAYS[i], HEX_RAYS[(i + 1) % 6]]) for i in range(6)
    ]
    return PolyComplex.from_cells(2, cells)


@dataclass
class ModificationRun:
    """The outcome of a sequence of modifications starting from the hex fan."""

    complex: PolyComplex
    coordinates: list[LineLabel]
    tracked_curves: dict[LineLabel, TrackedCurve] = field(default_factory=dict)
    checks: list[CheckResult] = field(default_factory=list)


def _verify_step(label: LineLabel, pl: PLFunction, modified: PolyComplex) -> list[CheckResult]:
    balanced, violations = check_balanced(modified)
    results = [
        CheckResult(
            name=f"{label}: balanced",
            passed=balanced,
            detail=f"{len(violations)} violations",
        ),
        CheckResult(name=f"{label}: fiber dichotomy", passed=fiber_dichotomy(modified)),
        CheckResult(
            name=f"{label}: locally irreducible", passed=local_irreducibility(modified)
        ),
        CheckResult(name=f"{label}: divisor round trip", passed=round_trip(pl, modified)),
    ]
    failed = [r.name for r in results if not r.passed]
    if failed:
        raise ConsistencyError("; ".join(failed))
    return results


def run_modifications(
    arrangement: Arrangement,
    labels: Sequence[LineLabel],
    *,
    verify: bool = False,
    tracer: PipelineTracer | None = None,
) -> ModificationRun:
    """Modify the hex fan successively along the curves `labels`.

    Raises:
        ConsistencyError: If `verify` is set and a step fails a check.
    """
    tracer = tracer or PipelineTracer.silent()
    degree = arrangement.degree
    run = ModificationRun(hex_fan(), [curve_label("F13", degree), curve_label("F12", degree)])
    total = len(labels)
    for step, label in enumerate(labels):
        shown = display_label(label)
        with tracer.timed(Stage.MODIFICATION, str(shown), f"step {step + 1}/{total}"):
            h = arrangement.function(label, run.coordinates)
            pl = linearity_subdivision(run.complex, h)
            run.tracked_curves[shown] = TrackedCurve(shown, step, pl.divisor_complex())
            modified = graph_along(pl.domain, pl)
            if verify:
                run.checks.extend(_verify_step(shown, pl, modified))
        logger.info(
            "modified along %s: %d cells in dimension %d",
            shown,
            len(modified.cells),
            modified.ambient_dim,
        )
        run.complex = modified
        run.coordinates.append(label)
    return run


def label_rays(
    X: PolyComplex, degree: int, coordinates: Sequence[LineLabel]
) -> dict[IntVector, LineLabel]:
    """Attach every ray direction of the final surface to its line.

    Raises:
        LabelingError: If a line has no ray, or a ray no line.
    """
    directions = X.recession_directions()
    labels: dict[IntVector, LineLabel] = {}
    for line in blowup_lines(degree):
        direction = primitive(expected_direction(line, coordinates))
        if direction not in directions:
            raise LabelingError(f"no ray points toward {display_label(line)}")
        labels[direction] = display_label(line)
    unlabeled = directions - set(labels)
    if unlabeled:
        raise LabelingError(f"{len(unlabeled)} ray directions carry no line")
    return labels


def modification_order(degree: int, order: Sequence[str] | None = None) -> list[LineLabel]:
    """The curves to modify along, in order.

    Raises:
        DomainError: If `order` is not a permutation of the default list or
            puts a conic before a line.
    """
    default = MODIFICATION_ORDER[degree]
    names = list(order) if order is not None else list(default)
    if sorted(names) != sorted(default):
        raise DomainError(f"order must be a permutation of {', '.join(default)}")
    labels = [curve_label(name, degree) for name in names]
    kinds = [label.kind for label in labels]
    if LineKind.G in kinds and LineKind.F in kinds[kinds.index(LineKind.G) :]:
        raise DomainError("conics must come after every line")
    return labels


def _extra_points(
    degree: int, p5: TropPoint2 | None, p6: TropPoint2 | None
) -> list[TropPoint2]:
    wanted = point_count(degree) - 4
    given = [p for p in (p5, p6) if p is not None]
    if len(given) != wanted or (wanted == 1 and p5 is None):
        raise DomainError(f"degree {degree} takes {wanted} finite points beyond P1..P4")
    if any(not p.is_finite for p in given):
        raise DomainError("P5 and P6 must be finite")
    denominator = common_denominator([c for p in given for c in p.xy])
    if denominator > MAX_DENOMINATOR:
        # exponents of s grow with the denominator
        raise ResourceCapError("common denominator of the points", MAX_DENOMINATOR, denominator)
    return given


DEGREE4_STATS: tuple[int, ...] = (12, 20, 48, 8, 1, 0, 32, 40)


def check_generic_output(surface: DelPezzoSurface) -> None:
    """Reject surfaces whose combinatorics betray special marked points.

    A generic quartic has the fixed cell counts of `DEGREE4_STATS` and only
    trivalent trees; a generic cubic lands on a row of a generic type of the
    golden table.

    Raises:
        NonGenericError: Naming the produced counts and the nearest row.
    """
    produced = surface.stats
    if surface.degree == 4:
        if produced.as_tuple() != DEGREE4_STATS:
            raise NonGenericError(f"degree-4 cell counts {produced.as_tuple()}")
        if not all(tree.is_trivalent() for tree in surface.trees.values()):
            raise NonGenericError(
                f"{surface.four_valent_trees()} degree-4 trees are not trivalent"
            )
    elif surface.degree == 3 and generic_row(produced) is None:
        raise NonGenericError(
            f"cell counts {produced.as_tuple()} fit no generic type"
            f" (closest: {closest_row(produced).type})"
        )


def build_del_pezzo(
    degree: int,
    p5: TropPoint2 | None = None,
    p6: TropPoint2 | None = None,
    *,
    seed: int = 0,
    order: Sequence[str] | None = None,
    verify: bool = False,
    tracer: PipelineTracer | None = None,
) -> DelPezzoSurface:
    """Build the tropical del Pezzo surface of degree 5, 4 or 3.

    Args:
        degree: 5 (no extra points), 4 (with `p5`) or 3 (with `p5`, `p6`).
        p5: Fifth marked point.
        p6: Sixth marked point.
        seed: Seed for the unit coefficients of the realization.
        order: Alternative modification order (same curves).
        verify: Check balancing, fibers, irreducibility and the divisor
            round trip after every step.
        tracer: Progress renderer.

    Raises:
        NonGenericError: If the points are not in general position, checked
            on the plane arrangement before and on the cell counts after.
        ResourceCapError: If the points need a common denominator above
            `MAX_DENOMINATOR`.
        DomainError: For missing points or a malformed order.
        LabelingError: If rays or trees cannot be matched to lines.
    """
    tracer = tracer or PipelineTracer.silent()
    extra = _extra_points(degree, p5, p6)
    labels = modification_order(degree, order)
    points = (P1, P2, P3, P4, *extra)
    with tracer.timed(Stage.SETUP, "Arrangement", f"realizing {len(points)} points"):
        if extra:
            check_general_position(points)
        arrangement = Arrangement.realize(degree, extra, seed=seed)
    run = run_modifications(arrangement, labels, verify=verify, tracer=tracer)
    with tracer.timed(Stage.ANALYSIS, "Trees", "labeling rays and reading boundary trees"):
        ray_labels = label_rays(run.complex, degree, run.coordinates)
        surface = DelPezzoSurface(
            degree=degree,
            complex=run.complex,
            ray_labels=ray_labels,
            points=points,
            coordinates=tuple(run.coordinates),
            tracked_curves=run.tracked_curves,
            checks=run.checks,
        )
        surface.compute_trees()
        check_leaf_sets(surface)
        check_cones(surface)
        check_generic_output(surface)
    logger.info("degree %d surface: %s", degree, surface.stats.as_tuple())
    return surface
