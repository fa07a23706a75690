"""Plane tropical curves through marked points, tropical triangles and the type test.

Everything uses the MAX convention: a curve is the corner locus of
``max_m (c_m + <m, x>)`` and rays point along outer normals of the Newton
polygon. Points of TP^2 are written in the chart ``(0 : x : y)``; the three
coordinate points sit at infinity in the directions (-1,-1), (1,0) and (0,1).
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import cached_property

from sympy import Point2D, Polygon, Rational
from sympy.geometry import convex_hull

from tropdelpezzo.errors import ConsistencyError, DomainError, NonGenericError
from tropdelpezzo.polyhedra import Cell, PolyComplex, check_balanced
from tropdelpezzo.rational import (
    IntVector,
    Vector,
    det2,
    lattice_length,
    parse_point,
    primitive,
    sub,
    vec,
)

logger = logging.getLogger(__name__)

# Direction of each coordinate point at infinity.
INFINITE_DIRECTIONS: dict[int, IntVector] = {1: (-1, -1), 2: (1, 0), 3: (0, 1)}


@dataclass(frozen=True)
class TropPoint2:
    """A point of TP^2 in homogeneous coordinates; None stands for -infinity."""

    coords: tuple[Fraction | None, Fraction | None, Fraction | None]

    def __post_init__(self) -> None:
        if all(c is None for c in self.coords):
            raise DomainError("a tropical point needs one finite coordinate")

    @classmethod
    def finite(cls, x: Fraction | int, y: Fraction | int) -> TropPoint2:
        """The point (0 : x : y)."""
        return cls((Fraction(0), Fraction(x), Fraction(y)))

    @classmethod
    def parse(cls, text: str) -> TropPoint2:
        """Parse "x,y" into a finite point."""
        x, y = parse_point(text)
        return cls.finite(x, y)

    @property
    def is_finite(self) -> bool:
        """True when all three coordinates are finite."""
        return all(c is not None for c in self.coords)

    @property
    def xy(self) -> Vector:
        """Affine chart coordinates.

        Raises:
            DomainError: For points at infinity.
        """
        if not self.is_finite:
            raise DomainError("point at infinity has no affine coordinates")
        x0, x1, x2 = self.coords
        assert x0 is not None and x1 is not None and x2 is not None
        return (x1 - x0, x2 - x0)

    def __str__(self) -> str:
        """Render as "(0:x:y)" with -inf for missing coordinates."""
        return "(" + ":".join("-inf" if c is None else str(c) for c in self.coords) + ")"


P1 = TropPoint2((Fraction(0), None, None))
P2 = TropPoint2((None, Fraction(0), None))
P3 = TropPoint2((None, None, Fraction(0)))
P4 = TropPoint2.finite(0, 0)
COORDINATE_POINTS = {1: P1, 2: P2, 3: P3}


def support_through(degree: int, coordinate_points: Iterable[int]) -> tuple[IntVector, ...]:
    """Exponents (in the chart) of a curve of `degree` through coordinate points.

    Passing through the k-th coordinate point kills the monomial X_k^degree.
    """
    killed = set(coordinate_points)
    result = []
    for a in range(degree + 1):
        for b in range(degree + 1 - a):
            c = degree - a - b
            exponents = (c, a, b)
            if any(exponents[k - 1] == degree for k in killed):
                continue
            result.append((a, b))
    return tuple(sorted(result))


@dataclass(frozen=True)
class CurveEdge:
    """An edge or ray of a plane tropical curve."""

    start: Vector
    end: Vector | None
    direction: IntVector
    weight: int
    dual: tuple[IntVector, IntVector]

    @property
    def bounded(self) -> bool:
        """True for segments."""
        return self.end is not None

    def length(self) -> Fraction:
        """Parameter length along the primitive direction (segments only)."""
        if self.end is None:
            raise DomainError("rays have infinite length")
        return lattice_length(sub(self.end, self.start))

    @property
    def slope(self) -> Fraction | None:
        """dy/dx of the direction, None for vertical edges."""
        dx, dy = self.direction
        return None if dx == 0 else Fraction(dy, dx)


def _dot(m: Sequence[int], x: Sequence[Fraction]) -> Fraction:
    return Fraction(m[0]) * x[0] + Fraction(m[1]) * x[1]


@dataclass(frozen=True)
class PlaneCurve:
    """The tropical curve of ``max_m (c_m + <m, x>)`` over a finite support."""

    support: tuple[IntVector, ...]
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.support) != len(self.coefficients) or len(self.support) < 2:
            raise DomainError("a curve needs at least two monomials with coefficients")

    def terms(self, x: Sequence[Fraction]) -> list[Fraction]:
        """Values c_m + <m, x>."""
        return [c + _dot(m, x) for m, c in zip(self.support, self.coefficients, strict=True)]

    def value(self, x: Sequence[Fraction]) -> Fraction:
        """The tropical polynomial at `x`."""
        return max(self.terms(x))

    def active(self, x: Sequence[Fraction]) -> tuple[IntVector, ...]:
        """Monomials attaining the maximum at `x`."""
        values = self.terms(x)
        top = max(values)
        return tuple(m for m, v in zip(self.support, values, strict=True) if v == top)

    def contains(self, x: Sequence[Fraction] | TropPoint2) -> bool:
        """True when the maximum is attained at least twice at a finite point."""
        point = x.xy if isinstance(x, TropPoint2) else vec(x)
        return len(self.active(point)) >= 2

    @cached_property
    def vertices(self) -> tuple[Vector, ...]:
        """Points where three non-collinear monomials tie at the maximum."""
        found: set[Vector] = set()
        for a, b, c in itertools.combinations(range(len(self.support)), 3):
            ma, mb, mc = self.support[a], self.support[b], self.support[c]
            d1, d2 = sub(vec(ma), vec(mb)), sub(vec(ma), vec(mc))
            det = det2(d1, d2)
            if det == 0:
                continue
            r1 = self.coefficients[b] - self.coefficients[a]
            r2 = self.coefficients[c] - self.coefficients[a]
            x = (
                (r1 * d2[1] - r2 * d1[1]) / det,
                (d1[0] * r2 - d2[0] * r1) / det,
            )
            active = self.active(x)
            if ma in active and mb in active and mc in active:
                found.add(x)
        return tuple(sorted(found))

    @cached_property
    def edges(self) -> tuple[CurveEdge, ...]:
        """Bounded edges and rays with weights and dual lattice segments."""
        if not self.vertices:
            return self._line_edges()
        result: dict[tuple[object, ...], CurveEdge] = {}
        for x in self.vertices:
            active = self.active(x)
            for m, n, normal in _hull_edges(active):
                weight = _lattice_gcd(sub(vec(n), vec(m)))
                end = self._next_vertex(x, normal, (m, n))
                dual = tuple(sorted((m, n)))
                if end is None:
                    edge = CurveEdge(x, None, normal, weight, dual)  # type: ignore[arg-type]
                    result[("ray", x, normal)] = edge
                else:
                    a, b = sorted((x, end))
                    direction = primitive(sub(b, a))
                    result[("seg", a, b)] = CurveEdge(a, b, direction, weight, dual)  # type: ignore[arg-type]
        return tuple(result[k] for k in sorted(result, key=repr))

    def _next_vertex(
        self, x: Vector, direction: IntVector, pair: tuple[IntVector, IntVector]
    ) -> Vector | None:
        best: tuple[Fraction, Vector] | None = None
        for y in self.vertices:
            if y == x:
                continue
            delta = sub(y, x)
            if det2(delta, direction) != 0 or _dot(direction, delta) <= 0:
                continue
            active = self.active(y)
            if pair[0] not in active or pair[1] not in active:
                continue
            t = _dot(direction, delta)
            if best is None or t < best[0]:
                best = (t, y)
        return None if best is None else best[1]

    def _line_edges(self) -> tuple[CurveEdge, ...]:
        """Curves with collinear support: a family of parallel classical lines."""
        base = self.support[0]
        axis = primitive(sub(vec(self.support[-1]), vec(base)))
        ordered = sorted(
            zip(self.support, self.coefficients, strict=True),
            key=lambda item: _dot(axis, sub(vec(item[0]), vec(base))),
        )
        for m, _ in ordered:
            if det2(sub(vec(m), vec(base)), axis) != 0:
                raise DomainError("support is neither collinear nor two-dimensional")
        hull = _upper_hull_1d(
            [(_dot(axis, sub(vec(m), vec(base))), c, m) for m, c in ordered]
        )
        edges = []
        normal = (-axis[1], axis[0])
        for (_, ca, ma), (_, cb, mb) in itertools.pairwise(hull):
            delta = sub(vec(ma), vec(mb))
            rhs = cb - ca
            point = (rhs / delta[0], Fraction(0)) if delta[0] != 0 else (Fraction(0), rhs / delta[1])
            weight = _lattice_gcd(sub(vec(mb), vec(ma)))
            dual = tuple(sorted((ma, mb)))
            for sign in (1, -1):
                direction = (sign * normal[0], sign * normal[1])
                edges.append(CurveEdge(point, None, direction, weight, dual))  # type: ignore[arg-type]
        return tuple(edges)

    def bounded_edges(self) -> list[CurveEdge]:
        """Segments only."""
        return [e for e in self.edges if e.bounded]

    def rays(self) -> list[CurveEdge]:
        """Rays only."""
        return [e for e in self.edges if not e.bounded]

    def to_complex(self) -> PolyComplex:
        """The curve as a weighted one-dimensional complex."""
        cells = []
        for edge in self.edges:
            if edge.end is None:
                cells.append(Cell.make(1, [edge.start], [edge.direction], edge.weight))
            else:
                cells.append(Cell.make(1, [edge.start, edge.end], (), edge.weight))
        return PolyComplex.from_cells(2, cells)

    def is_balanced(self) -> bool:
        """Balancing at every vertex."""
        return check_balanced(self.to_complex())[0]


def _upper_hull_1d(
    points: list[tuple[Fraction, Fraction, IntVector]],
) -> list[tuple[Fraction, Fraction, IntVector]]:
    hull: list[tuple[Fraction, Fraction, IntVector]] = []
    for p in points:
        while len(hull) >= 2:
            (t1, c1, _), (t2, c2, _) = hull[-2], hull[-1]
            if (c2 - c1) * (p[0] - t1) <= (p[1] - c1) * (t2 - t1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _lattice_gcd(v: Sequence[Fraction]) -> int:
    return int(lattice_length(v))


def _hull_edges(
    points: Sequence[IntVector],
) -> list[tuple[IntVector, IntVector, IntVector]]:
    """Edges of conv(points) as (m, n, outward primitive normal)."""
    edges = []
    for m, n in itertools.combinations(points, 2):
        d = (n[0] - m[0], n[1] - m[1])
        sides = [d[0] * (p[1] - m[1]) - d[1] * (p[0] - m[0]) for p in points]
        if any(s > 0 for s in sides) and any(s < 0 for s in sides):
            continue
        on_line = [p for p, s in zip(points, sides, strict=True) if s == 0]
        ends = sorted(on_line, key=lambda p: d[0] * p[0] + d[1] * p[1])
        if (ends[0], ends[-1]) not in ((m, n), (n, m)):
            continue
        normal = primitive((d[1], -d[0]))
        if any(s < 0 for s in sides):
            normal = (-normal[0], -normal[1])
        edges.append((m, n, normal))
    return edges


# --- Curves through points ---


def _tropical_det(matrix: Sequence[Sequence[Fraction]]) -> tuple[Fraction, int]:
    """Max-plus determinant and the number of permutations attaining it."""
    n = len(matrix)
    if n == 0:
        return Fraction(0), 1
    best: Fraction | None = None
    count = 0
    for perm in itertools.permutations(range(n)):
        value = sum((matrix[i][perm[i]] for i in range(n)), Fraction(0))
        if best is None or value > best:
            best, count = value, 1
        elif value == best:
            count += 1
    assert best is not None
    return best, count


def curve_through(
    points: Sequence[TropPoint2], support: Sequence[IntVector]
) -> PlaneCurve:
    """The tropical curve with the given support through finite points.

    Coefficients are the maximal minors of the matrix ``<m, p_i>`` (tropical
    Cramer rule).

    Raises:
        DomainError: If the number of points is not ``len(support) - 1``.
        NonGenericError: If some tropical minor is attained twice.
    """
    if len(points) != len(support) - 1:
        raise DomainError(
            f"{len(support)} monomials need {len(support) - 1} points, got {len(points)}"
        )
    coords = [p.xy for p in points]
    matrix = [[_dot(m, x) for m in support] for x in coords]
    coefficients = []
    for j, m in enumerate(support):
        minor = [[row[k] for k in range(len(support)) if k != j] for row in matrix]
        value, ties = _tropical_det(minor)
        if ties > 1:
            raise NonGenericError(f"tropical minor omitting monomial {m} is singular")
        coefficients.append(value)
    curve = PlaneCurve(tuple(support), tuple(coefficients))
    for point in points:
        if not curve.contains(point):  # pragma: no cover
            raise ConsistencyError(f"curve misses {point}")
    return curve


def trop_line_through(p: TropPoint2, q: TropPoint2) -> PlaneCurve:
    """Tropical line through two points, either of which may be a coordinate point."""
    killed = [k for k, point in COORDINATE_POINTS.items() if point in (p, q)]
    finite = [x for x in (p, q) if x.is_finite]
    return curve_through(finite, support_through(1, killed))


def plane_arrangement(points: Sequence[TropPoint2]) -> dict[str, PlaneCurve | None]:
    """Tropical lines F_ij and conics of the blow-up points P1..Pn (n = 5 or 6).

    Curves at infinity (F12, F13, F23) map to None.
    """
    n = len(points)
    if n not in (5, 6):
        raise DomainError("arrangements are built from five or six points")
    result: dict[str, PlaneCurve | None] = {}
    for i, j in itertools.combinations(range(1, n + 1), 2):
        if j <= 3:
            result[f"F{i}{j}"] = None
            continue
        result[f"F{i}{j}"] = trop_line_through(points[i - 1], points[j - 1])
    conic_sets = (
        {"G": list(range(1, 6))}
        if n == 5
        else {f"G{j}": [k for k in range(1, 7) if k != j] for j in range(1, 7)}
    )
    for name, members in conic_sets.items():
        killed = [k for k in members if k <= 3]
        finite = [points[k - 1] for k in members if k > 3]
        result[name] = curve_through(finite, support_through(2, killed))
    return result


def _curve_members(name: str, n: int) -> set[int]:
    if name.startswith("F"):
        return {int(name[1]), int(name[2])}
    if name == "G":
        return set(range(1, 6))
    return set(range(1, n + 1)) - {int(name[1:])}


def check_general_position(points: Sequence[TropPoint2]) -> dict[str, PlaneCurve | None]:
    """The arrangement of P1..Pn, after checking that the points are in general position.

    Conditions, in the order they are tested:

    * no two finite points share x, y or x - y (the lines to a coordinate
      point would coincide);
    * every tropical minor of every Cramer solve is attained once;
    * the finite curves are pairwise distinct;
    * each finite point lies on exactly the curves through it, and never
      at one of their vertices.

    Raises:
        NonGenericError: Naming the first violated condition.
    """
    n = len(points)
    finite = {k: points[k - 1].xy for k in range(4, n + 1)}
    invariants = {"x": lambda p: p[0], "y": lambda p: p[1], "x - y": lambda p: p[0] - p[1]}
    for (i, p), (j, q) in itertools.combinations(finite.items(), 2):
        for name, value in invariants.items():
            if value(p) == value(q):
                raise NonGenericError(f"P{i} and P{j} have the same {name}")
    arrangement = plane_arrangement(points)
    curves = {name: c for name, c in arrangement.items() if c is not None}
    seen: dict[tuple[tuple[IntVector, Fraction], ...], str] = {}
    for name, curve in curves.items():
        key = _normalized(curve)
        if key in seen:
            raise NonGenericError(f"{seen[key]} and {name} coincide")
        seen[key] = name
    for name, curve in curves.items():
        members = _curve_members(name, n)
        for k, p in finite.items():
            if curve.contains(p) != (k in members):
                relation = "lies on" if k not in members else "misses"
                raise NonGenericError(f"P{k} {relation} {name}")
            if k in members and p in curve.vertices:
                raise NonGenericError(f"P{k} is a vertex of {name}")
    return arrangement


# --- Stable intersection ---

_PERTURBATION = (Fraction(997), Fraction(1009))


def _inside(p0: Fraction, p1: Fraction, length: Fraction | None) -> bool:
    after_start = p0 > 0 or (p0 == 0 and p1 > 0)
    if length is None:
        return after_start
    return after_start and (p0 < length or (p0 == length and p1 < 0))


def stable_intersect(c1: PlaneCurve, c2: PlaneCurve) -> list[tuple[Vector, int]]:
    """Stable intersection points with multiplicities.

    The second curve is translated by a small generic vector and the
    limiting transverse intersections are collected.

    Raises:
        DomainError: If the curves coincide.
    """
    if _normalized(c1) == _normalized(c2):
        raise DomainError("stable self-intersection is not computed")
    totals: dict[Vector, int] = {}
    for e1 in c1.edges:
        for e2 in c2.edges:
            u1, u2 = e1.direction, e2.direction
            det = det2(u1, u2)
            if det == 0:
                continue
            offset = sub(e2.start, e1.start)
            neg_u2 = (-u2[0], -u2[1])
            denominator = det2(u1, neg_u2)
            t0 = det2(offset, neg_u2) / denominator
            t1 = det2(_PERTURBATION, neg_u2) / denominator
            s0 = det2(u1, offset) / denominator
            s1 = det2(u1, _PERTURBATION) / denominator
            l1 = e1.length() if e1.bounded else None
            l2 = e2.length() if e2.bounded else None
            if _inside(t0, t1, l1) and _inside(s0, s1, l2):
                point = (e1.start[0] + t0 * u1[0], e1.start[1] + t0 * u1[1])
                totals[point] = totals.get(point, 0) + e1.weight * e2.weight * abs(int(det))
    return sorted(totals.items())


def _normalized(c: PlaneCurve) -> tuple[tuple[IntVector, Fraction], ...]:
    shift = c.coefficients[0]
    return tuple(sorted(zip(c.support, (x - shift for x in c.coefficients), strict=True)))


def _area(points: Sequence[Sequence[Fraction | int]]) -> Fraction:
    hull = convex_hull(*(Point2D(Rational(str(x)), Rational(str(y))) for x, y in points))
    if not isinstance(hull, Polygon):
        return Fraction(0)
    return abs(Fraction(str(hull.area)))


def mixed_volume(p: Sequence[IntVector], q: Sequence[IntVector]) -> Fraction:
    """Mixed area ``vol(P + Q) - vol(P) - vol(Q)`` of two lattice polygons."""
    minkowski = {(a[0] + b[0], a[1] + b[1]) for a in p for b in q}
    return _area(sorted(minkowski)) - _area(p) - _area(q)


# --- Tropical triangles ---


class Shape(StrEnum):
    """Shape tags of the 2-cell of a tropical triangle."""

    TRIANGLE = "triangle3"
    PARALLELOGRAM = "parallelogram4"
    TRAPEZOID = "trapezoid4"
    PENTAGON = "pentagon5"
    HEXAGON = "hexagon6"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class TropTriangleCell:
    """The two-dimensional cell of a tropical triangle."""

    vertices: tuple[Vector, ...]
    shape: Shape


Halfplane = tuple[Fraction, Fraction, Fraction]


def _sector(point: Vector, k: int) -> list[Halfplane]:
    """Halfplanes ``a x + b y <= c`` of the k-th max-plus sector of `point`."""
    a, b = point
    if k == 0:
        return [(Fraction(-1), Fraction(0), -a), (Fraction(0), Fraction(-1), -b)]
    if k == 1:
        return [(Fraction(1), Fraction(0), a), (Fraction(1), Fraction(-1), a - b)]
    return [(Fraction(0), Fraction(1), b), (Fraction(-1), Fraction(1), b - a)]


def _region(halfplanes: list[Halfplane]) -> list[Vector]:
    candidates: set[Vector] = set()
    for (a1, b1, c1), (a2, b2, c2) in itertools.combinations(halfplanes, 2):
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        x = ((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)
        if all(a * x[0] + b * x[1] <= c for a, b, c in halfplanes):
            candidates.add(x)
    if len(candidates) < 3:
        return []
    hull = convex_hull(*(Point2D(Rational(str(x)), Rational(str(y))) for x, y in candidates))
    if not isinstance(hull, Polygon):
        return []
    return [(Fraction(str(v.x)), Fraction(str(v.y))) for v in hull.vertices]


def _shape(vertices: Sequence[Vector]) -> Shape:
    n = len(vertices)
    if n == 3:
        return Shape.TRIANGLE
    if n == 5:
        return Shape.PENTAGON
    if n == 6:
        return Shape.HEXAGON
    if n == 4:
        sides = [sub(vertices[(i + 1) % 4], vertices[i]) for i in range(4)]
        parallel_pairs = sum(det2(sides[i], sides[i + 2]) == 0 for i in range(2))
        return Shape.PARALLELOGRAM if parallel_pairs == 2 else Shape.TRAPEZOID
    return Shape.DEGENERATE


def trop_triangle(a: TropPoint2, b: TropPoint2, c: TropPoint2) -> TropTriangleCell:
    """The 2-cell of the max-plus tropical convex hull of three finite points.

    A point lies in the interior of the 2-cell when each generator sits in
    a different sector of it; the cell is the union of those regions.
    """
    pts = [a.xy, b.xy, c.xy]
    if len(set(pts)) < 3:
        return TropTriangleCell(tuple(sorted(set(pts))), Shape.DEGENERATE)
    regions = []
    for sigma in itertools.permutations(range(3)):
        halfplanes = [h for p, k in zip(pts, sigma, strict=True) for h in _sector(p, k)]
        region = _region(halfplanes)
        if region:
            regions.append(region)
    if not regions:
        return TropTriangleCell((), Shape.DEGENERATE)
    if len(regions) > 1:
        raise ConsistencyError(f"tropical triangle has {len(regions)} two-cells")
    vertices = tuple(regions[0])
    return TropTriangleCell(vertices, _shape(vertices))


# --- Classification ---


class TypeVerdict(StrEnum):
    """Outcome of the parallelogram test."""

    PARALLELOGRAM = "type_parallelogram"
    OTHER = "type_other"
    NON_GENERIC = "non_generic"


def conic_criterion(p5: TropPoint2, p6: TropPoint2, p4: TropPoint2 = P4) -> bool | None:
    """Decide (aaaa) from the bounded edge of the conic G1 through P4, P5, P6.

    Returns None when the conic has no bounded edge or a marked point sits
    at an end of it.
    """
    conic = curve_through([p4, p5, p6], support_through(2, [2, 3]))
    bounded = conic.bounded_edges()
    if len(bounded) != 1:
        return None
    edge = bounded[0]
    assert edge.end is not None
    marked = [p.xy for p in (p4, p5, p6)]
    on_edge = []
    for point in marked:
        if point in (edge.start, edge.end):
            return None
        delta = sub(point, edge.start)
        if det2(delta, edge.direction) == 0 and 0 < lattice_length(delta) < edge.length() and (
            _dot(edge.direction, delta) > 0
        ):
            on_edge.append(point)
    if not on_edge:
        return False
    if edge.slope == -1:
        return True
    others = [p for p in marked if p != on_edge[0]]
    sides = [det2(edge.direction, sub(p, edge.start)) for p in others]
    return sides[0] * sides[1] < 0


def classify_type(p5: TropPoint2, p6: TropPoint2, p4: TropPoint2 = P4) -> TypeVerdict:
    """Parallelogram test on the tropical triangle of P4, P5, P6.

    Raises:
        ConsistencyError: If the triangle test and the conic test disagree.
    """
    try:
        cell = trop_triangle(p4, p5, p6)
        if cell.shape is Shape.DEGENERATE:
            return TypeVerdict.NON_GENERIC
        by_conic = conic_criterion(p5, p6, p4)
    except NonGenericError as exc:
        logger.debug("non-generic classification input: %s", exc.condition)
        return TypeVerdict.NON_GENERIC
    by_triangle = cell.shape is Shape.PARALLELOGRAM
    if by_conic is None:
        return TypeVerdict.NON_GENERIC
    if by_conic != by_triangle:
        raise ConsistencyError(
            f"triangle test ({cell.shape}) and conic test disagree for {p5}, {p6}"
        )
    return TypeVerdict.PARALLELOGRAM if by_triangle else TypeVerdict.OTHER
