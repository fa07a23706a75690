"""Lattice normals and the balancing condition."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from tropdelpezzo.errors import StructuralError
from tropdelpezzo.polyhedra.complex import Cell, CellKey, PolyComplex
from tropdelpezzo.rational import IntVector, primitive, sub


@dataclass(frozen=True)
class Violation:
    """A codimension-one cell where the weighted normals do not cancel."""

    cell: CellKey
    residual: tuple[int, ...]


def minors2(u: Sequence[int], w: Sequence[int]) -> list[int]:
    """All 2x2 minors of the matrix with rows `u` and `w`."""
    n = len(u)
    return [u[i] * w[j] - u[j] * w[i] for i in range(n) for j in range(i + 1, n)]


def parallel(u: Sequence[int], w: Sequence[int]) -> bool:
    """True when `w` lies on the line spanned by `u`."""
    return all(m == 0 for m in minors2(u, w))


def lattice_normal(u: IntVector, w: Sequence[Fraction | int]) -> IntVector:
    """Primitive generator of the 2-dimensional lattice modulo `u`, toward `w`.

    Args:
        u: Primitive direction of the codimension-one cell.
        w: Any vector of the 2-cell's span pointing into the cell.

    Returns:
        The integer vector ``n`` with ``Z u + Z n`` equal to the saturated
        lattice of ``span(u, w)`` and ``n`` on the side of ``w``. It is
        unique modulo ``u``; the representative returned is canonical.
    """
    wi = primitive(w)
    if parallel(u, wi):
        raise StructuralError("normal direction is parallel to the face")
    index = math.gcd(*minors2(u, wi))
    for k in range(index):
        candidate = [a + k * b for a, b in zip(wi, u, strict=True)]
        if all(c % index == 0 for c in candidate):
            return tuple(c // index for c in candidate)
    raise StructuralError("no integral normal found")  # pragma: no cover


def face_direction(face: Cell) -> IntVector:
    """Primitive direction of a 1-cell."""
    if face.rays:
        return face.rays[0]
    a, b = face.vertices
    return primitive(sub(b, a))


def inward_vector(cell: Cell, face: Cell) -> tuple[Fraction, ...]:
    """A vector from the 1-cell `face` into the 2-cell `cell`."""
    u = face_direction(face)
    base = face.vertices[0]
    for vertex in cell.vertices:
        if vertex in face.vertices:
            continue
        w = sub(vertex, base)
        if not parallel(u, primitive(w)):
            return w
    for ray in cell.rays:
        if not parallel(u, ray):
            return tuple(Fraction(r) for r in ray)
    raise StructuralError("2-cell is degenerate along its face")


def _reduce(u: IntVector, s: Sequence[int]) -> tuple[int, ...]:
    """A canonical representative of `s` modulo the line of `u`."""
    if all(x == 0 for x in s) or parallel(u, s):
        return tuple(0 for _ in s)
    return tuple(s)


def check_balanced(X: PolyComplex) -> tuple[bool, list[Violation]]:
    """Check that weighted primitive normals cancel at every codimension-one cell.

    Two-dimensional complexes are checked along their 1-cells modulo each
    1-cell's span; one-dimensional complexes are checked at vertices.
    """
    violations: list[Violation] = []
    top = X.dim
    if top <= 0:
        return True, []
    for face in X.cells_of_dim(top - 1):
        cofaces = [c for c in X.cofaces.get(face.key, ()) if c.dim == top]
        if top == 1:
            point = face.vertices[0]
            total = [0] * X.ambient_dim
            for edge in cofaces:
                if edge.rays:
                    direction = edge.rays[0]
                else:
                    a, b = edge.vertices
                    direction = primitive(sub(b if a == point else a, point))
                for i, d in enumerate(direction):
                    total[i] += edge.weight * d
            if any(total):
                violations.append(Violation(face.key, tuple(total)))
            continue
        u = face_direction(face)
        total = [0] * X.ambient_dim
        for cell in cofaces:
            normal = lattice_normal(u, inward_vector(cell, face))
            for i, n in enumerate(normal):
                total[i] += cell.weight * n
        residual = _reduce(u, total)
        if any(residual):
            violations.append(Violation(face.key, residual))
    return not violations, violations
