"""Open tropical modifications and the del Pezzo surface pipeline."""

from tropdelpezzo.modification.arrangement import (
    MODIFICATION_ORDER,
    Arrangement,
    blowup_lines,
    expected_direction,
)
from tropdelpezzo.modification.checks import (
    chain_graph,
    divisor_of_modification,
    fiber_dichotomy,
    length_rank,
    local_irreducibility,
    locally_irreducible,
    round_trip,
    same_surface,
    tst_chains,
    vertex_kinds,
)
from tropdelpezzo.modification.m05 import example_M05
from tropdelpezzo.modification.pipeline import build_del_pezzo, hex_fan, label_rays
from tropdelpezzo.modification.plfunction import (
    LocalAffine,
    Monomial,
    PLFunction,
    TropicalFunction,
    differ_by_affine,
    function_from_divisor,
    graph_along,
    linearity_subdivision,
)
from tropdelpezzo.modification.surface import (
    DelPezzoSurface,
    TrackedCurve,
    boundary_tree,
    boundary_tree_of,
)

__all__ = [
    "MODIFICATION_ORDER",
    "Arrangement",
    "DelPezzoSurface",
    "LocalAffine",
    "Monomial",
    "PLFunction",
    "TrackedCurve",
    "TropicalFunction",
    "blowup_lines",
    "boundary_tree",
    "boundary_tree_of",
    "build_del_pezzo",
    "chain_graph",
    "differ_by_affine",
    "divisor_of_modification",
    "example_M05",
    "expected_direction",
    "fiber_dichotomy",
    "function_from_divisor",
    "graph_along",
    "hex_fan",
    "label_rays",
    "length_rank",
    "linearity_subdivision",
    "local_irreducibility",
    "locally_irreducible",
    "round_trip",
    "same_surface",
    "tst_chains",
    "vertex_kinds",
]
