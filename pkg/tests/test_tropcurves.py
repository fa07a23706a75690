from fractions import Fraction

import random

import pytest

from tropdelpezzo.errors import DomainError, NonGenericError
from tropdelpezzo.tropcurves import (
    P1,
    P2,
    P3,
    P4,
    PlaneCurve,
    Shape,
    TropPoint2,
    TypeVerdict,
    check_general_position,
    classify_type,
    conic_criterion,
    curve_through,
    mixed_volume,
    plane_arrangement,
    stable_intersect,
    support_through,
    trop_line_through,
    trop_triangle,
)

LINE_SUPPORT = ((0, 0), (0, 1), (1, 0))
SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
TRIANGLE = [(0, 0), (1, 0), (0, 1)]


def _line(x, y):
    return PlaneCurve(((0, 0), (1, 0), (0, 1)), (Fraction(0), Fraction(-x), Fraction(-y)))


def test_points():
    point = TropPoint2.parse("1/2,3")
    assert point.xy == (Fraction(1, 2), Fraction(3))
    assert point.is_finite and not P1.is_finite
    assert str(P4) == "(0:0:0)"
    with pytest.raises(DomainError):
        P1.xy
    with pytest.raises(DomainError):
        TropPoint2((None, None, None))


def test_support_through_coordinate_points():
    assert support_through(1, []) == LINE_SUPPORT
    assert support_through(1, [1]) == ((0, 1), (1, 0))
    assert len(support_through(2, [1, 2, 3])) == 3


def test_tropical_line():
    line = _line(0, 0)
    assert line.vertices == ((0, 0),)
    assert {e.direction for e in line.rays()} == {(0, -1), (-1, 0), (1, 1)}
    assert line.is_balanced()
    assert line.contains((0, -3))
    assert not line.contains((0, 5))


def test_lines_meet_once():
    assert stable_intersect(_line(0, 0), _line(1, 2)) == [((1, 1), 1)]
    with pytest.raises(DomainError):
        stable_intersect(_line(0, 0), _line(0, 0))


def test_mixed_volume():
    assert mixed_volume(SQUARE, TRIANGLE) == 2
    assert mixed_volume(TRIANGLE, TRIANGLE) == 1


def test_curve_through_points():
    q = TropPoint2.finite(2, 1)
    line = trop_line_through(P4, q)
    assert line.contains(P4) and line.contains(q)
    to_infinity = trop_line_through(P1, q)
    assert len(to_infinity.support) == 2
    with pytest.raises(DomainError):
        curve_through([P4], LINE_SUPPORT)


def test_plane_arrangement_of_five_points():
    points = [P1, P2, P3, P4, TropPoint2.finite(-2, -3)]
    arrangement = plane_arrangement(points)
    assert len(arrangement) == 11
    assert arrangement["F12"] is None and arrangement["F23"] is None
    conic = arrangement["G"]
    assert conic is not None and conic.is_balanced()
    assert conic.contains(P4)
    with pytest.raises(DomainError):
        plane_arrangement(points[:4])


def test_tropical_triangle_shapes():
    cell = trop_triangle(P4, TropPoint2.finite(-2, -3), TropPoint2.finite(1, 3))
    assert cell.shape is Shape.PARALLELOGRAM
    assert len(cell.vertices) == 4
    assert trop_triangle(P4, P4, TropPoint2.finite(1, 3)).shape is Shape.DEGENERATE


@pytest.mark.parametrize(
    ("p5", "p6", "verdict"),
    [
        ("-2,-3", "1,3", TypeVerdict.PARALLELOGRAM),
        ("3,1", "2,4", TypeVerdict.OTHER),
        ("2,1", "1,2", TypeVerdict.NON_GENERIC),
        ("3,1", "1,3", TypeVerdict.NON_GENERIC),
        ("12/5,17/4", "10/3,35/6", TypeVerdict.PARALLELOGRAM),
        ("13/3,5/2", "-7/5,11/4", TypeVerdict.OTHER),
    ],
)
def test_classify_type(p5, p6, verdict):
    assert classify_type(TropPoint2.parse(p5), TropPoint2.parse(p6)) is verdict


def test_coordinate_points_are_distinct():
    assert len({P1, P2, P3}) == 3


def _six(p5, p6):
    return [P1, P2, P3, P4, TropPoint2.parse(p5), TropPoint2.parse(p6)]


@pytest.mark.parametrize(
    ("p5", "p6"), [("13/3,5/2", "-7/5,11/4"), ("12/5,17/4", "10/3,35/6")]
)
def test_general_position_accepts_generic_points(p5, p6):
    arrangement = check_general_position(_six(p5, p6))
    assert len(arrangement) == 21
    assert sum(curve is None for curve in arrangement.values()) == 3


@pytest.mark.parametrize(
    ("p5", "p6", "condition"),
    [
        ("1,2", "1,5", "P5 and P6 have the same x"),
        ("2,1", "-3,1", "P5 and P6 have the same y"),
        ("3,3", "1,5", "P4 and P5 have the same x - y"),
    ],
)
def test_general_position_names_the_violated_condition(p5, p6, condition):
    with pytest.raises(NonGenericError) as excinfo:
        check_general_position(_six(p5, p6))
    assert excinfo.value.condition == condition


def test_general_position_rejects_tropically_collinear_points():
    # P6 sits on the downward ray of the line through P4 and P5
    with pytest.raises(NonGenericError):
        check_general_position(_six("2,1", "1,-2"))


def test_triangle_and_conic_tests_agree_on_random_points():
    rng = random.Random(11)
    classified = 0
    for _ in range(1000):
        p5, p6 = (
            TropPoint2.finite(*(Fraction(rng.randint(-72, 72), 12) for _ in range(2)))
            for _ in range(2)
        )
        verdict = classify_type(p5, p6)
        if verdict is TypeVerdict.NON_GENERIC:
            continue
        assert conic_criterion(p5, p6) is (verdict is TypeVerdict.PARALLELOGRAM)
        classified += 1
        if classified == 100:
            break
    assert classified == 100
