"""Exact rational helpers: parsing, primitive lattice vectors, linear algebra.

Linear algebra is delegated to sympy's `DomainMatrix` over `QQ`; this module
only converts between `fractions.Fraction` and the ground domain.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Any

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from tropdelpezzo.errors import DomainError, RealizationError, StructuralError

Vector = tuple[Fraction, ...]
IntVector = tuple[int, ...]


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or an integer string into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction | int) -> str:
    """Render a rational as "p/q" (or "p" when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_point(text: str) -> tuple[Fraction, Fraction]:
    """Parse a planar point written as "x,y"."""
    parts = text.split(",")
    if len(parts) != 2:
        raise DomainError(f"expected 'x,y', got {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])


def vec(values: Iterable[Fraction | int]) -> Vector:
    """Coerce an iterable into an exact rational vector."""
    return tuple(Fraction(v) for v in values)


def add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    """Componentwise sum."""
    return tuple(x + y for x, y in zip(a, b, strict=True))


def sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    """Componentwise difference."""
    return tuple(x - y for x, y in zip(a, b, strict=True))


def scale(c: Fraction | int, a: Sequence[Fraction]) -> Vector:
    """Scalar multiple."""
    return tuple(c * x for x in a)


def dot(a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> Fraction:
    """Standard inner product."""
    return Fraction(sum(x * y for x, y in zip(a, b, strict=True)))


def primitive(values: Sequence[Fraction | int]) -> IntVector:
    """Return the primitive integer vector on the ray spanned by `values`."""
    fractions = [Fraction(v) for v in values]
    if all(f == 0 for f in fractions):
        raise DomainError("zero vector has no primitive direction")
    denominator = math.lcm(*(f.denominator for f in fractions))
    ints = [int(f * denominator) for f in fractions]
    g = math.gcd(*ints)
    return tuple(i // g for i in ints)


def lattice_length(values: Sequence[Fraction | int]) -> Fraction:
    """Lattice length of a rational vector: the factor over its primitive vector."""
    direction = primitive(values)
    for value, unit in zip(values, direction, strict=True):
        if unit != 0:
            return Fraction(value) / unit
    raise DomainError("zero vector")  # pragma: no cover


def is_integral(values: Iterable[Fraction | int]) -> bool:
    """True when every entry is an integer."""
    return all(Fraction(v).denominator == 1 for v in values)


def to_qq(value: Fraction | int) -> Any:
    """Convert to an element of sympy's `QQ`."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value: Any) -> Fraction:
    """Convert a `QQ` element back to a `Fraction`."""
    return Fraction(int(value.numerator), int(value.denominator))


def domain_matrix(
    rows: Sequence[Sequence[Fraction | int]], ncols: int
) -> DomainMatrix:
    """Build a dense `DomainMatrix` over `QQ`."""
    data = [[to_qq(v) for v in row] for row in rows]
    for row in data:
        if len(row) != ncols:
            raise StructuralError("ragged matrix rows")
    return DomainMatrix(data, (len(data), ncols), QQ)


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank of a rational matrix given by rows."""
    if not rows:
        return 0
    return int(domain_matrix(rows, len(rows[0])).rank())


def nullspace(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> list[Vector]:
    """Basis of the right kernel, one vector per free column of the rref."""
    if not rows:
        return [
            tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)
        ]
    reduced, pivots = domain_matrix(rows, ncols).rref()
    table = _rows(reduced)
    basis: list[Vector] = []
    for free in (c for c in range(ncols) if c not in pivots):
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for row_index, pivot in enumerate(pivots):
            vector[pivot] = -table[row_index][free]
        basis.append(tuple(vector))
    return basis


def _rows(matrix: DomainMatrix) -> list[list[Fraction]]:
    nrows, ncols = matrix.shape
    sparse = matrix.to_sdm()
    table: list[list[Fraction]] = []
    for i in range(nrows):
        row = sparse.get(i, {})
        table.append([from_qq(row[j]) if j in row else Fraction(0) for j in range(ncols)])
    return table


def solve_sparse(
    equations: Sequence[Mapping[int, Fraction]],
    rhs: Sequence[Fraction],
    nvars: int,
) -> tuple[list[Fraction], list[int]]:
    """Solve a sparse rational system exactly.

    Args:
        equations: One mapping variable index -> coefficient per equation.
        rhs: Right-hand sides, aligned with `equations`.
        nvars: Number of unknowns.

    Returns:
        A particular solution with every free variable set to zero, and the
        list of free variable indices.

    Raises:
        RealizationError: If the system is inconsistent.
    """
    if not equations:
        return [Fraction(0)] * nvars, list(range(nvars))
    data: dict[int, dict[int, Any]] = {}
    for i, (equation, value) in enumerate(zip(equations, rhs, strict=True)):
        row = {j: to_qq(c) for j, c in equation.items() if c != 0}
        if value != 0:
            row[nvars] = to_qq(value)
        if row:
            data[i] = row
    if not data:
        return [Fraction(0)] * nvars, list(range(nvars))
    matrix = DomainMatrix(data, (len(equations), nvars + 1), QQ)
    reduced, pivots = matrix.rref()
    if nvars in pivots:
        raise RealizationError("linear system is inconsistent")
    solution = [Fraction(0)] * nvars
    sparse = reduced.to_sdm()
    for row_index, pivot in enumerate(pivots):
        row = sparse.get(row_index, {})
        solution[pivot] = from_qq(row[nvars]) if nvars in row else Fraction(0)
    pivot_set = set(pivots)
    return solution, [j for j in range(nvars) if j not in pivot_set]


def det2(a: Sequence[Fraction | int], b: Sequence[Fraction | int]) -> Fraction:
    """Determinant of the 2x2 matrix with rows `a` and `b`."""
    return Fraction(a[0] * b[1] - a[1] * b[0])
