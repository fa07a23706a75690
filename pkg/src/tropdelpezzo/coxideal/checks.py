"""Consistency checks over the trinomial systems."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from tropdelpezzo import rootsys
from tropdelpezzo.coxideal.grading import (
    apply_involution,
    is_homogeneous,
    line_involution,
    monomial_degree,
)
from tropdelpezzo.coxideal.model import Trinomial, trop_eval
from tropdelpezzo.coxideal.systems import cox_system, groups
from tropdelpezzo.rootsys import LineLabel
from tropdelpezzo.schemas import CheckReport, CheckResult

logger = logging.getLogger(__name__)

CHECKS = ("grading", "involution", "support", "schlafli-rays", "symmetry")


def trinomial_support(trinomial: Trinomial) -> frozenset[LineLabel]:
    """Line variables of a trinomial (Plücker scalars excluded)."""
    return frozenset(v for v in trinomial.variables if v.kind is not rootsys.LineKind.P)


def check_grading(system: Sequence[Trinomial], d: int) -> CheckResult:
    """Every trinomial homogeneous; for cubics also each line group in one degree.

    Groups of the degree-4 and degree-5 systems collect relations of several
    degrees, so only the individual trinomials are tested there.
    """
    bad = [str(t) for t in system if not is_homogeneous(t, d)]
    mixed = [
        name
        for name, members in groups(tuple(system)).items()
        if d == 3 and len({monomial_degree(t, 0, d) for t in members}) > 1
    ]
    return CheckResult(
        name="grading",
        passed=not bad and not mixed,
        detail=f"{len(bad)} inhomogeneous, {len(mixed)} mixed groups",
    )


def check_support(system: Sequence[Trinomial]) -> CheckResult:
    """The group of each line lives on the lines meeting it."""
    failures = []
    for name, members in groups(tuple(system)).items():
        line = LineLabel.parse(name, 3)
        support = frozenset().union(*(trinomial_support(t) for t in members))
        if support != frozenset(rootsys.neighbors(line)):
            failures.append(name)
    return CheckResult(
        name="support", passed=not failures, detail=", ".join(failures) or "27 groups"
    )


def check_involution(system: Sequence[Trinomial]) -> CheckResult:
    """The tritangent involution of each line fixes its group up to sign."""
    failures = []
    for name, members in groups(tuple(system)).items():
        line = LineLabel.parse(name, 3)
        mapping = line_involution(line)
        before = {t.key() for t in members}
        after = {apply_involution(t, mapping).key() for t in members}
        if before != after:
            failures.append(name)
    return CheckResult(
        name="involution", passed=not failures, detail=", ".join(failures) or "27 groups"
    )


def schlafli_ray_check(system: Sequence[Trinomial]) -> CheckResult:
    """Each coordinate ray e_L passes the min-twice test on every trinomial."""
    labels = rootsys.lines(3)
    failures = []
    for line in labels:
        w = {other: int(other == line) for other in labels}
        if not all(trop_eval(t, w) for t in system):
            failures.append(str(line))
    return CheckResult(
        name="schlafli-rays",
        passed=not failures,
        detail=", ".join(failures) or f"{len(labels)} rays",
    )


def check_symmetry(system: Sequence[Trinomial]) -> CheckResult:
    """The set of cubic trinomials is closed under the simple reflections of W(E6)."""
    keys = {t.key() for t in system}
    for reflection in rootsys.weyl_generators(6):
        if {t.act(reflection).key() for t in system} != keys:
            return CheckResult(name="symmetry", passed=False, detail=str(reflection.root))
    return CheckResult(name="symmetry", passed=True, detail="6 simple reflections")


def run_checks(d: int, which: str = "all") -> CheckReport:
    """Run the named checks (or all applicable ones) on the system of degree `d`."""
    system = cox_system(d)
    selected = CHECKS if which == "all" else (which,)
    results = []
    for name in selected:
        if name == "grading":
            results.append(check_grading(system, d))
        elif d != 3:
            continue
        elif name == "involution":
            results.append(check_involution(system))
        elif name == "support":
            results.append(check_support(system))
        elif name == "schlafli-rays":
            results.append(schlafli_ray_check(system))
        elif name == "symmetry":
            results.append(check_symmetry(system))
    report = CheckReport(
        subject=f"degree {d} Cox system",
        summary=f"{len(system)} trinomials in {len(groups(system))} groups",
        checks=results,
    )
    logger.info("%s: %s", report.subject, "passed" if report.passed else "FAILED")
    return report
