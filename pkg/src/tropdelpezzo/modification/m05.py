"""Three-step modifications of the plane along a family of line arrangements.

The arrangement consists of the coordinate lines x0, x1, x2 and

    f = x1 - x0,    g = x2 - x0,    h = a*x1 - x2,

where ``1/a - 1 = t^v``. For ``v = oo`` (``a = 1``) the lines f, g, h meet in
one point and the result is the fan of the moduli space of five marked
points; for finite ``v`` the triple point splits at scale ``v``.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from tropdelpezzo.errors import DomainError
from tropdelpezzo.modification.arrangement import Arrangement, curve_label
from tropdelpezzo.modification.pipeline import run_modifications
from tropdelpezzo.modification.valued import (
    Realization,
    ValuedField,
    const,
    s_power,
)
from tropdelpezzo.polyhedra import PolyComplex
from tropdelpezzo.printing import PipelineTracer

logger = logging.getLogger(__name__)

_STEPS = ("F14", "F24", "F34")


def m05_arrangement(v: Fraction | int | None) -> Arrangement:
    """The six lines for a valuation `v` of ``1/a - 1`` (None for infinity).

    Raises:
        DomainError: If `v` is negative.
    """
    if v is not None and Fraction(v) < 0:
        raise DomainError("the valuation v must be non-negative")
    denominator = 1 if v is None else Fraction(v).denominator
    valued = ValuedField(denominator)
    one, zero = const(1), const(0)
    if v is None:
        a = one
    else:
        a = one / (one + s_power(int(Fraction(v) * denominator)))
    arrangement = Arrangement(5, Realization(valued, [], []))
    forms = {
        "F23": (one, zero, zero),
        "F13": (zero, one, zero),
        "F12": (zero, zero, one),
        "F14": (-one, one, zero),
        "F24": (-one, zero, one),
        "F34": (zero, a, -one),
    }
    arrangement.lines = {curve_label(name, 5): form for name, form in forms.items()}
    return arrangement


def example_M05(
    v: Fraction | int | None, *, tracer: PipelineTracer | None = None
) -> PolyComplex:
    """The plane modified along f, g and h for the valuation `v`.

    Raises:
        DomainError: If `v` is negative.
    """
    arrangement = m05_arrangement(v)
    labels = [curve_label(name, 5) for name in _STEPS]
    run = run_modifications(arrangement, labels, tracer=tracer)
    logger.info("M05 example at v=%s: %d vertices", v, len(run.complex.vertices))
    return run.complex
