"""Exact polyhedral complexes of dimension at most two."""

from tropdelpezzo.polyhedra.balancing import (
    Violation,
    check_balanced,
    lattice_normal,
)
from tropdelpezzo.polyhedra.complex import (
    Cell,
    CellClass,
    Point,
    PolyComplex,
    classify_cell,
    stats,
)
from tropdelpezzo.polyhedra.io import complex_from_json, complex_to_json, dumps
from tropdelpezzo.polyhedra.links import (
    fan_of,
    isomorphic,
    link_at_vertex,
    to_dot,
    unimodular_equivalent,
)
from tropdelpezzo.schemas.models import SurfaceStats

__all__ = [
    "Cell",
    "CellClass",
    "Point",
    "PolyComplex",
    "SurfaceStats",
    "Violation",
    "check_balanced",
    "classify_cell",
    "complex_from_json",
    "complex_to_json",
    "dumps",
    "fan_of",
    "isomorphic",
    "lattice_normal",
    "link_at_vertex",
    "stats",
    "to_dot",
    "unimodular_equivalent",
]
