import pytest

from tropdelpezzo.coxideal import (
    check_grading,
    cox_system,
    grade,
    group_of,
    groups,
    is_homogeneous,
    line_involution,
    parse_trinomial,
    plucker_d5,
    run_checks,
    term_values,
    trop_eval,
    universal_cox_d3,
    universal_cox_d4,
)
from tropdelpezzo.coxideal.grading import monomial_degree
from tropdelpezzo.coxideal.model import Trinomial
from tropdelpezzo.errors import DomainError, LookupFailure, StructuralError, UnsupportedError
from tropdelpezzo.rootsys import E, F, G, P, lines, neighbors


def test_plucker_relations():
    relations = plucker_d5()
    assert len(relations) == 5
    assert str(relations[0]) == "p12 p34 - p13 p24 + p14 p23"
    assert all(is_homogeneous(t, 5) for t in relations)


def test_degree_four_system_shape():
    system = universal_cox_d4()
    assert len(system) == 45
    table = groups(system)
    assert len(table["Base"]) == 5
    assert all(len(members) == 4 for name, members in table.items() if name != "Base")


@pytest.mark.parametrize("degree", [4, 5])
def test_small_degree_checks_pass(degree):
    report = run_checks(degree)
    assert report.passed
    assert [c.name for c in report.checks] == ["grading"]


def test_unknown_degree():
    with pytest.raises(UnsupportedError):
        cox_system(6)


def test_parse_trinomial_errors():
    with pytest.raises(DomainError):
        parse_trinomial("p12 p34 - p13 p24", 5)
    with pytest.raises(DomainError):
        parse_trinomial("p12 q34 - p13 p24 + p14 p23", 5)
    with pytest.raises(StructuralError):
        Trinomial("x", ())


def test_parse_coefficients_and_json():
    t = parse_trinomial(
        "(d3-d4)(d1+d3+d4) E2 F12 - (d2-d4)(d1+d2+d4) E3 F13 + (d2-d3)(d1+d2+d3) E4 F14",
        3,
        "G1",
    )
    payload = t.to_json()
    assert payload["group"] == "G1"
    assert payload["terms"][0]["coefficient"] == "(d3-d4)(d1+d3+d4)"
    assert payload["terms"][1]["sign"] == "-"
    assert is_homogeneous(t, 3)


def test_tropical_evaluation_of_plucker_relation():
    relation = plucker_d5()[0]
    zero = {line: 0 for line in lines(5)}
    assert trop_eval(relation, zero)
    assert trop_eval(relation, {**zero, P(1, 2): 1})
    assert not trop_eval(relation, {**zero, P(3, 4): -1})
    assert term_values(relation, {**zero, P(1, 2): 2}) == (2, 0, 0)


def test_missing_weight_is_a_lookup_failure():
    relation = universal_cox_d4()[5]
    with pytest.raises(LookupFailure):
        term_values(relation, {})


def test_gradings():
    assert grade(E(1), 3) == (0, 1, 0, 0, 0, 0, 0)
    assert grade(P(1, 2), 5) == (1, 1, 0, 0, 0)
    with pytest.raises(LookupFailure):
        grade(P(1, 2), 3)


def test_line_involution_pairs_the_neighbors():
    mapping = line_involution(E(1))
    assert sorted(mapping) == neighbors(E(1))
    assert all(mapping[mapping[x]] == x and mapping[x] != x for x in mapping)


def test_line_involution_of_a_conic_line_swaps_exceptional_and_line_classes():
    expected = {}
    for j in range(2, 7):
        expected[E(j)] = F(1, j)
        expected[F(1, j)] = E(j)
    assert line_involution(G(1)) == expected


@pytest.mark.slow
def test_cubic_cox_system():
    system = universal_cox_d3()
    assert len(system) == 270
    assert len(groups(system)) == 27
    assert len(group_of(E(1))) == 10
    assert run_checks(3).passed


def test_degree_four_groups_print_in_canonical_variable_order():
    table = groups(universal_cox_d4())
    assert str(table["1"][0]) == "F23 F45 - F24 F35 + F25 F34"
    assert str(table["1"][1]) == "F24 F35 p23 p45 - F23 F45 p24 p35 - E1 G"
    assert str(table["1'"][0]) == "E2 F12 p25 - E3 F13 p35 + E4 F14 p45"


def test_degree_four_grades_on_the_demicube():
    assert grade(E(1, 4), 4) == (1, 1, 0, 0, 0, 0)
    assert grade(G(), 4) == (1, 1, 1, 1, 1, 1)
    assert grade(F(1, 2, 4), 4) == (1, 0, 0, 1, 1, 1)
    assert grade(P(1, 2), 4) == (0,) * 6
    table = groups(universal_cox_d4())
    assert {monomial_degree(t, 0, 4) for t in table["1"][1:]} == {(2, 2, 1, 1, 1, 1)}
    assert {monomial_degree(t, 0, 4) for t in table["1'"]} == {(2, 0, 1, 1, 1, 1)}


def test_grading_check_allows_mixed_degree_groups_outside_cubics():
    base = groups(universal_cox_d4())["Base"]
    assert len({monomial_degree(t, 0, 5) for t in plucker_d5()}) > 1
    assert check_grading(base, 4).passed
    assert check_grading(plucker_d5(), 5).passed


def test_grading_check_flags_inhomogeneous_trinomials():
    broken = parse_trinomial("F23 F45 - F24 F35 + E1 G", 4, "1")
    result = check_grading([broken], 4)
    assert not result.passed
    assert result.detail.startswith("1 inhomogeneous")


def test_grading_check_flags_mixed_cubic_groups():
    first = parse_trinomial(
        "(d3-d4)(d1+d3+d4) E2 F12 - (d2-d4)(d1+d2+d4) E3 F13 + (d2-d3)(d1+d2+d3) E4 F14",
        3,
        "G1",
    )
    other = parse_trinomial(
        "(d3-d4)(d2+d3+d4) E1 F12 - (d1-d4)(d1+d2+d4) E3 F23 + (d1-d3)(d1+d2+d3) E4 F24",
        3,
        "G1",
    )
    assert is_homogeneous(first, 3) and is_homogeneous(other, 3)
    assert not check_grading([first, other], 3).passed
