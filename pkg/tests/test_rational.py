from fractions import Fraction

import pytest

from tropdelpezzo.errors import DomainError, RealizationError
from tropdelpezzo.rational import (
    format_rational,
    is_integral,
    lattice_length,
    nullspace,
    parse_point,
    parse_rational,
    primitive,
    rank,
    solve_sparse,
)


@pytest.mark.parametrize(
    ("text", "expected"),
    [("3/4", Fraction(3, 4)), ("-2", Fraction(-2)), (" 6/4 ", Fraction(3, 2))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["x", "1/0", "", "1.5.2"])
def test_parse_rational_rejects_garbage(text):
    with pytest.raises(DomainError):
        parse_rational(text)


def test_parse_point_and_format():
    assert parse_point("1/2, -3") == (Fraction(1, 2), Fraction(-3))
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    with pytest.raises(DomainError):
        parse_point("1,2,3")


def test_primitive_direction():
    assert primitive((2, 4, -6)) == (1, 2, -3)
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert lattice_length((2, 4)) == 2
    assert lattice_length((Fraction(1, 2), 0)) == Fraction(1, 2)
    with pytest.raises(DomainError):
        primitive((0, 0))


def test_linear_algebra_is_exact():
    assert rank([[1, 2], [2, 4]]) == 1
    kernel = nullspace([[1, 1, 1]], 3)
    assert len(kernel) == 2
    assert all(sum(v) == 0 for v in kernel)
    assert is_integral((Fraction(4, 2), 3))
    assert not is_integral((Fraction(1, 3),))


def test_solve_sparse():
    solution, free = solve_sparse(
        [{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(2)}],
        [Fraction(3), Fraction(1)],
        3,
    )
    assert solution[:2] == [Fraction(5, 2), Fraction(1, 2)]
    assert free == [2]
    with pytest.raises(RealizationError):
        solve_sparse([{0: Fraction(1)}, {0: Fraction(1)}], [Fraction(1), Fraction(2)], 1)
