"""The plane arrangement of a del Pezzo surface over the valued field.

The blown-up points are realized over K = Q(s). Every (-1)-curve that is not
exceptional is a line F_ij or a conic G through the points; its equation is
computed exactly, and its tropicalization on the surface built so far is
expressed through relations with the curves that are already coordinates:
circuits of the line matroid for lines, pencils of conics for conics.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from tropdelpezzo import rootsys
from tropdelpezzo.errors import NonGenericError, UnsupportedError
from tropdelpezzo.modification.plfunction import Monomial, TropicalFunction
from tropdelpezzo.modification.valued import (
    Elem,
    HomogeneousPoint,
    Realization,
    ValuedField,
    const,
)
from tropdelpezzo.rootsys import LineKind, LineLabel
from tropdelpezzo.tropcurves import TropPoint2

logger = logging.getLogger(__name__)

MODIFICATION_ORDER: dict[int, tuple[str, ...]] = {
    5: ("F14", "F24", "F34"),
    4: ("F14", "F15", "F24", "F25", "F34", "F35", "F45", "G"),
    3: (
        "F14", "F15", "F16", "F24", "F25", "F26", "F34", "F35", "F36",
        "F45", "F46", "F56", "G1", "G2", "G3", "G4", "G5", "G6",
    ),
}

ConicTerm = tuple[Elem, LineLabel, LineLabel]


def point_count(degree: int) -> int:
    """Number of blown-up points."""
    if degree not in (3, 4, 5):
        raise UnsupportedError(f"degree {degree} is not supported")
    return 9 - degree


def curve_label(name: str, degree: int) -> LineLabel:
    """A blow-up label (E_i, F_ij, G_j or G) in the context of `degree`."""
    kind = LineKind(name[0])
    indices = tuple(int(c) for c in name[1:])
    return LineLabel(kind, indices, degree)


def blowup_lines(degree: int) -> list[LineLabel]:
    """The lines of the surface under their blow-up names."""
    n = point_count(degree)
    labels = [curve_label(f"E{i}", degree) for i in range(1, n + 1)]
    labels += [curve_label(f"F{a}{b}", degree) for a, b in itertools.combinations(range(1, n + 1), 2)]
    if degree == 4:
        labels.append(curve_label("G", 4))
    if degree == 3:
        labels += [curve_label(f"G{j}", 3) for j in range(1, 7)]
    return labels


def _cross(a: HomogeneousPoint, b: HomogeneousPoint) -> HomogeneousPoint:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a: HomogeneousPoint, b: HomogeneousPoint) -> Elem:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _det(a: HomogeneousPoint, b: HomogeneousPoint, c: HomogeneousPoint) -> Elem:
    return _dot(a, _cross(b, c))


_TRIAL_POINTS = (
    (1, Fraction(3, 7), Fraction(11, 13)),
    (1, Fraction(5, 3), Fraction(-2, 9)),
    (1, Fraction(-7, 4), Fraction(13, 5)),
)


@dataclass
class Arrangement:
    """Exact equations of the lines and conics through the marked points."""

    degree: int
    realization: Realization
    lines: dict[LineLabel, HomogeneousPoint] = field(default_factory=dict)
    conics: dict[LineLabel, tuple[ConicTerm, ...]] = field(default_factory=dict)
    _plucker: dict[frozenset[LineLabel], Fraction | None] = field(default_factory=dict, repr=False)

    @classmethod
    def realize(
        cls, degree: int, extra: Sequence[TropPoint2] = (), *, seed: int = 0, attempts: int = 8
    ) -> Arrangement:
        """Realize P1..P4 and `extra` generically over K.

        Raises:
            NonGenericError: If no seed among `attempts` gives points in
                general position over K.
        """
        n = point_count(degree)
        if len(extra) != n - 4:
            raise UnsupportedError(f"degree {degree} takes {n - 4} extra points")
        failure = "no attempt made"
        for attempt in range(attempts):
            realization = Realization.from_tropical(extra, seed=seed + attempt)
            arrangement = cls(degree, realization)
            failure = arrangement._build()
            if not failure:
                return arrangement
            logger.debug("realization seed %d rejected: %s", seed + attempt, failure)
        raise NonGenericError(failure)

    @property
    def field_(self) -> ValuedField:
        """The valued field of the realization."""
        return self.realization.field

    @property
    def points(self) -> list[HomogeneousPoint]:
        """Homogeneous coordinates of P1..Pn."""
        return self.realization.points

    def _build(self) -> str:
        n = point_count(self.degree)
        pts = self.points
        for a, b, c in itertools.combinations(range(n), 3):
            if not _det(pts[a], pts[b], pts[c]):
                return f"P{a + 1}, P{b + 1}, P{c + 1} are collinear"
        one, zero = const(1), const(0)
        fixed = {"F23": (one, zero, zero), "F13": (zero, one, zero), "F12": (zero, zero, one)}
        for a, b in itertools.combinations(range(1, n + 1), 2):
            name = f"F{a}{b}"
            self.lines[curve_label(name, self.degree)] = fixed.get(name) or _cross(pts[a - 1], pts[b - 1])
        if self.degree == 4:
            self.conics[curve_label("G", 4)] = self._conic_through(range(1, 6))
        if self.degree == 3:
            for j in range(1, 7):
                label = curve_label(f"G{j}", 3)
                self.conics[label] = self._conic_through([i for i in range(1, 7) if i != j])
                if not self.conic_at(label, pts[j - 1]):
                    return "the six points lie on a conic"
        return ""

    def line(self, a: int, b: int) -> LineLabel:
        """Label of the line through P_a and P_b."""
        return curve_label(f"F{min(a, b)}{max(a, b)}", self.degree)

    def line_at(self, label: LineLabel, point: HomogeneousPoint) -> Elem:
        """Value of a line's equation at a point."""
        return _dot(self.lines[label], point)

    def _product_at(self, a: LineLabel, b: LineLabel, point: HomogeneousPoint) -> Elem:
        return self.line_at(a, point) * self.line_at(b, point)

    def conic_at(self, label: LineLabel, point: HomogeneousPoint) -> Elem:
        """Value of a conic's equation at a point."""
        return sum(
            (c * self._product_at(a, b, point) for c, a, b in self.conics[label]), const(0)
        )

    def _pairings(self, four: Sequence[int]) -> list[tuple[LineLabel, LineLabel]]:
        a, b, c, d = four
        return [
            (self.line(a, b), self.line(c, d)),
            (self.line(a, c), self.line(b, d)),
            (self.line(a, d), self.line(b, c)),
        ]

    def _conic_through(self, five: Sequence[int]) -> tuple[ConicTerm, ...]:
        five = list(five)
        *four, m = five
        (p1, p2), (q1, q2) = self._pairings(four)[:2]
        pm = self.points[m - 1]
        return (
            (self._product_at(q1, q2, pm), p1, p2),
            (-self._product_at(p1, p2, pm), q1, q2),
        )

    # --- tropical data ---

    def plucker(self, a: LineLabel, b: LineLabel, c: LineLabel) -> Fraction | None:
        """Tropicalized determinant of three lines; None when they are concurrent."""
        key = frozenset((a, b, c))
        if len(key) < 3:
            return None
        if key not in self._plucker:
            det = _det(self.lines[a], self.lines[b], self.lines[c])
            self._plucker[key] = self.field_.trop(det) if det else None
        return self._plucker[key]

    def _term(self, coefficient: Fraction, label: LineLabel, index: dict[LineLabel, int]) -> Monomial:
        if label == self._x0:
            return Monomial(coefficient)
        return Monomial(coefficient, ((index[label], 1),))

    @property
    def _x0(self) -> LineLabel:
        return curve_label("F23", self.degree)

    def line_function(self, target: LineLabel, coordinates: Sequence[LineLabel]) -> TropicalFunction:
        """trop(target / x0) on the surface whose coordinates are `coordinates`."""
        index = {label: i for i, label in enumerate(coordinates)}
        available = [self._x0] + [c for c in coordinates if c in self.lines]
        reps: list[tuple[Monomial, ...]] = []
        basis = [curve_label(x, self.degree) for x in ("F23", "F13", "F12")]
        for a, b in itertools.combinations(available, 2):
            if self.plucker(a, b, target) is not None:
                continue
            x = next(e for e in basis if self.plucker(a, b, e) is not None)
            pab = self.plucker(a, b, x)
            pfb, paf = self.plucker(target, b, x), self.plucker(a, target, x)
            assert pab is not None and pfb is not None and paf is not None
            reps.append((self._term(pfb - pab, a, index), self._term(paf - pab, b, index)))
        for a, b, c in itertools.combinations(available, 3):
            dets = (
                self.plucker(a, b, c),
                self.plucker(target, b, c),
                self.plucker(a, target, c),
                self.plucker(a, b, target),
            )
            if any(d is None for d in dets):
                continue
            pabc, pf_a, pf_b, pf_c = dets  # type: ignore[misc]
            reps.append(
                (
                    self._term(pf_a - pabc, a, index),
                    self._term(pf_b - pabc, b, index),
                    self._term(pf_c - pabc, c, index),
                )
            )
        return TropicalFunction(tuple(reps), str(target))

    def _separating_point(self, *forms: Callable[[HomogeneousPoint], Elem]) -> HomogeneousPoint:
        for x, y, z in _TRIAL_POINTS:
            point = (const(x), const(y), const(z))
            if all(f(point) for f in forms):
                return point
        raise NonGenericError("no trial point separates the pencil")

    def conic_function(self, target: LineLabel, coordinates: Sequence[LineLabel]) -> TropicalFunction:
        """trop(target / x0^2) on the surface whose coordinates are `coordinates`."""
        index = {label: i for i, label in enumerate(coordinates)}
        trop = self.field_.trop
        through = [i for i in range(1, point_count(self.degree) + 1) if self.degree == 4 or i != target.indices[0]]

        def conic(point: HomogeneousPoint) -> Elem:
            return self.conic_at(target, point)

        def monomials(coefficient: Elem, factors: Sequence[LineLabel]) -> Monomial:
            powers: dict[int, int] = {}
            for f in factors:
                if f != self._x0:
                    powers[index[f]] = powers.get(index[f], 0) + 1
            return Monomial(trop(coefficient), tuple(sorted(powers.items())))

        reps: list[tuple[Monomial, ...]] = []
        for m in through:
            four = [i for i in through if i != m]
            pm = self.points[m - 1]
            for (p1, p2), (q1, q2) in itertools.combinations(self._pairings(four), 2):

                def pencil(point: HomogeneousPoint, p1=p1, p2=p2, q1=q1, q2=q2, pm=pm) -> Elem:
                    return self._product_at(q1, q2, pm) * self._product_at(p1, p2, point) - self._product_at(p1, p2, pm) * self._product_at(q1, q2, point)

                z0 = self._separating_point(conic, pencil)
                lam = conic(z0) / pencil(z0)
                alpha = lam * self._product_at(q1, q2, pm)
                beta = -lam * self._product_at(p1, p2, pm)
                reps.append((monomials(alpha, (p1, p2)), monomials(beta, (q1, q2))))
        if self.degree == 3:
            j = target.indices[0]
            for earlier in coordinates:
                if earlier.kind is not LineKind.G or earlier == target:
                    continue
                i = earlier.indices[0]
                four = [k for k in range(1, 7) if k not in (i, j)]
                pi = self.points[i - 1]
                for p1, p2 in self._pairings(four):

                    def pencil(point: HomogeneousPoint, p1=p1, p2=p2, pi=pi, earlier=earlier) -> Elem:
                        return self._product_at(p1, p2, pi) * self.conic_at(earlier, point) - self.conic_at(earlier, pi) * self._product_at(p1, p2, point)

                    z0 = self._separating_point(conic, pencil)
                    lam = conic(z0) / pencil(z0)
                    alpha = lam * self._product_at(p1, p2, pi)
                    beta = -lam * self.conic_at(earlier, pi)
                    reps.append(
                        (
                            Monomial(trop(alpha), ((index[earlier], 1),)),
                            monomials(beta, (p1, p2)),
                        )
                    )
        return TropicalFunction(tuple(reps), str(target))

    def function(self, target: LineLabel, coordinates: Sequence[LineLabel]) -> TropicalFunction:
        """The tropical function of a line or conic on the current surface."""
        if target.kind is LineKind.G:
            return self.conic_function(target, coordinates)
        return self.line_function(target, coordinates)


def ord_along(boundary: LineLabel, form: LineLabel) -> int:
    """Vanishing order of a line or conic equation along a (-1)-curve of the blow-up."""
    if boundary.kind is LineKind.E:
        i = boundary.indices[0]
        if form.kind is LineKind.F:
            return int(i in form.indices)
        if form.kind is LineKind.G:
            return 1 if not form.indices else int(form.indices[0] != i)
        return 0
    return int(boundary == form)


def form_degree(form: LineLabel) -> int:
    """Degree of the plane curve behind a label."""
    return 2 if form.kind is LineKind.G else 1


def expected_direction(boundary: LineLabel, coordinates: Sequence[LineLabel]) -> tuple[int, ...]:
    """The ray of the tropical surface pointing toward a boundary curve."""
    x0 = curve_label("F23", boundary.degree)
    at_x0 = ord_along(boundary, x0)
    return tuple(-(ord_along(boundary, c) - form_degree(c) * at_x0) for c in coordinates)


def display_label(label: LineLabel) -> LineLabel:
    """The label used in reports: Plücker names in degree five."""
    if label.degree == 5:
        return rootsys.plucker_label(label)
    return label
