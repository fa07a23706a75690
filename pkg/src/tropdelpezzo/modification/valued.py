"""The valued field Q(s) with s = t^(1/N), and K-points realizing tropical points."""

from __future__ import annotations

import math
import random
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from sympy import QQ
from sympy.polys.fields import field as frac_field

from tropdelpezzo.errors import DomainError
from tropdelpezzo.tropcurves import P1, P2, P3, P4, TropPoint2

FIELD, S = frac_field("s", QQ)

Elem = Any
HomogeneousPoint = tuple[Elem, Elem, Elem]


def const(value: Fraction | int) -> Elem:
    """Embed a rational number in Q(s)."""
    value = Fraction(value)
    return FIELD(QQ(value.numerator, value.denominator))


def s_power(exponent: int) -> Elem:
    """The element s^exponent (any integer exponent)."""
    if exponent >= 0:
        return S**exponent
    return 1 / S ** (-exponent)


def _lowest_degree(poly: Any) -> int:
    return min(monom[0] for monom in poly.monoms())


def order(value: Elem) -> int | None:
    """Order of vanishing at s = 0; None for zero."""
    if not value:
        return None
    return _lowest_degree(value.numer) - _lowest_degree(value.denom)


def initial_coefficient(value: Elem) -> Fraction:
    """Coefficient of the lowest power of s."""
    if not value:
        raise DomainError("zero has no initial coefficient")

    def lowest(poly: Any) -> Fraction:
        degree = _lowest_degree(poly)
        coefficient = poly.coeff(S.numer**degree if degree else 1)
        return Fraction(int(coefficient.numerator), int(coefficient.denominator))

    return lowest(value.numer) / lowest(value.denom)


@dataclass(frozen=True)
class ValuedField:
    """Valuations on Q(s) measured in units of t = s^N."""

    denominator: int = 1

    def val(self, value: Elem) -> Fraction | None:
        """Valuation of an element; None stands for +infinity."""
        k = order(value)
        return None if k is None else Fraction(k, self.denominator)

    def trop(self, value: Elem) -> Fraction:
        """Max-convention tropicalization ``-val``.

        Raises:
            DomainError: For zero.
        """
        v = self.val(value)
        if v is None:
            raise DomainError("the tropicalization of zero is -infinity")
        return -v

    def monomial(self, coefficient: Fraction | int, trop_value: Fraction | int) -> Elem:
        """An element with given unit coefficient and tropicalization."""
        exponent = -Fraction(trop_value) * self.denominator
        if exponent.denominator != 1:
            raise DomainError(f"{trop_value} is not in the value group 1/{self.denominator}")
        return const(coefficient) * s_power(int(exponent))


def common_denominator(values: Sequence[Fraction]) -> int:
    """Least N with every value in (1/N)Z."""
    return math.lcm(1, *(Fraction(v).denominator for v in values))


@dataclass
class Realization:
    """Homogeneous K-points P1..Pn over a valued field.

    P1..P3 are the coordinate points and P4 = (1:1:1); every further point
    gets seeded random unit coefficients so that it is generic over Q.
    """

    field: ValuedField
    points: list[HomogeneousPoint]
    tropical: list[TropPoint2]
    units: list[tuple[Fraction, Fraction]] = field(default_factory=list)

    @classmethod
    def from_tropical(
        cls, extra: Sequence[TropPoint2], *, seed: int = 0, refine: int = 1
    ) -> Realization:
        """Realize P1..P4 and the finite points `extra` (P5, P6, ...)."""
        coordinates = [c for p in extra for c in p.xy]
        valued = ValuedField(common_denominator(coordinates) * refine)
        rng = random.Random(seed)
        one, zero = const(1), const(0)
        points: list[HomogeneousPoint] = [
            (one, zero, zero),
            (zero, one, zero),
            (zero, zero, one),
            (one, one, one),
        ]
        units = []
        for point in extra:
            x, y = point.xy
            a = Fraction(rng.randint(2, 97), rng.randint(2, 97))
            b = Fraction(rng.randint(2, 97), rng.randint(2, 97))
            if a == b:
                b += 1
            units.append((a, b))
            points.append((one, valued.monomial(a, x), valued.monomial(b, y)))
        return cls(valued, points, [P1, P2, P3, P4, *extra], units)
