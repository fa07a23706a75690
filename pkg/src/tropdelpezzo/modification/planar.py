"""Local affine frames of 2-cells and convex regions in homogeneous coordinates.

A region is a convex polygon of a cell's plane, possibly unbounded. Its
boundary is a cyclic, counter-clockwise list of homogeneous points
``(s, t, w)``: ``w = 1`` for vertices and ``w = 0`` for recession directions.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from tropdelpezzo.errors import StructuralError
from tropdelpezzo.polyhedra import Cell
from tropdelpezzo.rational import Vector, add, primitive, scale, sub, vec

HPoint = tuple[Fraction, Fraction, Fraction]
Form = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class LocalFrame:
    """Affine coordinates ``origin + s*e1 + t*e2`` on the plane of a 2-cell.

    `pivot` names two ambient coordinates on which the frame is invertible.
    """

    origin: Vector
    e1: Vector
    e2: Vector
    pivot: tuple[int, int]

    @classmethod
    def of_cell(cls, cell: Cell) -> LocalFrame:
        """The canonical frame of a cell (cached)."""
        return _frame(cell)

    @property
    def _determinant(self) -> Fraction:
        i, j = self.pivot
        return self.e1[i] * self.e2[j] - self.e2[i] * self.e1[j]

    def local_direction(self, vector: Sequence[Fraction | int]) -> tuple[Fraction, Fraction]:
        """Coordinates of an ambient vector of the plane's direction space."""
        i, j = self.pivot
        det = self._determinant
        s = (vector[i] * self.e2[j] - vector[j] * self.e2[i]) / det
        t = (self.e1[i] * vector[j] - self.e1[j] * vector[i]) / det
        return Fraction(s), Fraction(t)

    def to_local(self, point: Sequence[Fraction | int]) -> tuple[Fraction, Fraction]:
        """Local coordinates of an ambient point of the plane."""
        return self.local_direction(sub(vec(point), self.origin))

    def ambient_direction(self, s: Fraction, t: Fraction) -> Vector:
        """Ambient vector with local coordinates ``(s, t)``."""
        return add(scale(s, self.e1), scale(t, self.e2))

    def to_ambient(self, s: Fraction, t: Fraction) -> Vector:
        """Ambient point with local coordinates ``(s, t)``."""
        return add(self.origin, self.ambient_direction(s, t))


@cache
def _frame(cell: Cell) -> LocalFrame:
    if cell.dim != 2:
        raise StructuralError("local frames exist on 2-cells only")
    origin = cell.vertices[0]
    candidates = [sub(v, origin) for v in cell.vertices[1:]]
    candidates.extend(vec(r) for r in cell.rays)
    n = len(origin)
    for a_index, first in enumerate(candidates):
        for second in candidates[a_index + 1 :]:
            for i in range(n):
                for j in range(i + 1, n):
                    if first[i] * second[j] - second[i] * first[j] != 0:
                        return LocalFrame(origin, first, second, (i, j))
    raise StructuralError("2-cell does not span a plane")


def _det3(a: HPoint, b: HPoint, c: HPoint) -> Fraction:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def evaluate(form: Form, point: HPoint) -> Fraction:
    """Value of the affine form ``c + a1*s + a2*t`` at a homogeneous point."""
    c, a1, a2 = form
    return c * point[2] + a1 * point[0] + a2 * point[1]


def normalize(point: Sequence[Fraction | int]) -> HPoint:
    """Scale to ``w = 1``, or to a primitive integer direction when ``w = 0``."""
    s, t, w = (Fraction(x) for x in point)
    if w != 0:
        return s / w, t / w, Fraction(1)
    p, q = primitive((s, t))
    return Fraction(p), Fraction(q), Fraction(0)


def _clean(points: Sequence[HPoint]) -> tuple[HPoint, ...] | None:
    pts = list(points)
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        for i in range(len(pts)):
            prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if cur == prev or _det3(prev, cur, nxt) == 0:
                del pts[i]
                changed = True
                break
    if len(pts) < 3:
        return None
    return tuple(pts)


@dataclass(frozen=True)
class Region:
    """A two-dimensional convex region in local coordinates."""

    points: tuple[HPoint, ...]

    @classmethod
    def of_cell(cls, cell: Cell, frame: LocalFrame) -> Region:
        """The whole cell as a region of its own frame."""
        finite = [normalize((*frame.to_local(v), 1)) for v in cell.vertices]
        ideal = [normalize((*frame.local_direction(r), 0)) for r in cell.rays]
        if not ideal:
            boundary = finite
        elif len(ideal) == 1:
            boundary = [*finite, ideal[0]]
        else:
            boundary = [*finite, ideal[-1], ideal[0]]
        cleaned = _clean(boundary)
        if cleaned is None:
            raise StructuralError("2-cell is degenerate in its own frame")
        return cls(_counter_clockwise(cleaned))

    @property
    def finite(self) -> list[tuple[Fraction, Fraction]]:
        """Vertices in boundary order."""
        return [(p[0], p[1]) for p in self.points if p[2] != 0]

    @property
    def ideal(self) -> list[tuple[Fraction, Fraction]]:
        """Recession directions in boundary order."""
        return [(p[0], p[1]) for p in self.points if p[2] == 0]

    def clip(self, form: Form) -> Region | None:
        """Intersect with ``{form >= 0}``; None when the result is not 2-dimensional."""
        out: list[HPoint] = []
        count = len(self.points)
        for i, p in enumerate(self.points):
            q = self.points[(i + 1) % count]
            fp, fq = evaluate(form, p), evaluate(form, q)
            if fp >= 0:
                out.append(p)
            if (fp > 0 > fq) or (fp < 0 < fq):
                a, b = abs(fq), abs(fp)
                out.append(normalize(tuple(a * x + b * y for x, y in zip(p, q, strict=True))))
        cleaned = _clean(out)
        return None if cleaned is None else Region(cleaned)

    def interior_point(self) -> tuple[Fraction, Fraction]:
        """A point in the relative interior."""
        finite = self.finite
        s = sum((p[0] for p in finite), Fraction(0)) / len(finite)
        t = sum((p[1] for p in finite), Fraction(0)) / len(finite)
        for p, q in self.ideal:
            s, t = s + p, t + q
        return s, t

    def neighbours(self, index: int) -> tuple[HPoint, HPoint]:
        """The boundary points before and after position `index`."""
        count = len(self.points)
        return self.points[index - 1], self.points[(index + 1) % count]

    def to_cell(self, frame: LocalFrame, weight: int = 1) -> Cell:
        """Convert back to an ambient cell with the chain convention."""
        pts = list(self.points)
        ideal_at = [i for i, p in enumerate(pts) if p[2] == 0]
        if not ideal_at:
            vertices = [frame.to_ambient(p[0], p[1]) for p in pts]
            return Cell.make(2, vertices, (), weight)
        count = len(pts)
        start = next(
            (i + 1) % count for i in ideal_at if pts[(i + 1) % count][2] != 0
        )
        rotated = pts[start:] + pts[:start]
        finite = [p for p in rotated if p[2] != 0]
        ideal = [p for p in rotated if p[2] == 0]
        vertices = [frame.to_ambient(p[0], p[1]) for p in finite]
        directions = [primitive(frame.ambient_direction(p[0], p[1])) for p in ideal]
        rays = directions if len(directions) == 1 else [directions[-1], directions[0]]
        return Cell.make(2, vertices, rays, weight)


def _counter_clockwise(points: tuple[HPoint, ...]) -> tuple[HPoint, ...]:
    count = len(points)
    for i in range(count):
        det = _det3(points[i], points[(i + 1) % count], points[(i + 2) % count])
        if det > 0:
            return points
        if det < 0:
            return tuple(reversed(points))
    raise StructuralError("region has no orientation")  # pragma: no cover
