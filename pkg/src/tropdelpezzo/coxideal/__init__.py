"""Trinomial generators of universal Cox ideals and their tropical checks."""

from tropdelpezzo.coxideal.checks import (
    check_grading,
    check_involution,
    check_support,
    check_symmetry,
    run_checks,
    schlafli_ray_check,
    trinomial_support,
)
from tropdelpezzo.coxideal.grading import (
    apply_involution,
    grade,
    group_line,
    is_homogeneous,
    line_involution,
    tritangent_pairs,
)
from tropdelpezzo.coxideal.model import Term, Trinomial, parse_trinomial, term_values, trop_eval
from tropdelpezzo.coxideal.systems import (
    cox_system,
    group_of,
    groups,
    plucker_d5,
    universal_cox_d3,
    universal_cox_d4,
)

__all__ = [
    "Term",
    "Trinomial",
    "apply_involution",
    "check_grading",
    "check_involution",
    "check_support",
    "check_symmetry",
    "cox_system",
    "grade",
    "group_line",
    "group_of",
    "groups",
    "is_homogeneous",
    "line_involution",
    "parse_trinomial",
    "plucker_d5",
    "run_checks",
    "schlafli_ray_check",
    "term_values",
    "tritangent_pairs",
    "trop_eval",
    "universal_cox_d3",
    "universal_cox_d4",
]
