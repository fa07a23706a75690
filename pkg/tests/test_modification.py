from fractions import Fraction

import networkx as nx
import pytest

from tropdelpezzo.errors import ConsistencyError, DomainError, NonGenericError, ResourceCapError
from tropdelpezzo.modification import (
    DelPezzoSurface,
    Monomial,
    TropicalFunction,
    chain_graph,
    differ_by_affine,
    divisor_of_modification,
    fiber_dichotomy,
    function_from_divisor,
    graph_along,
    hex_fan,
    linearity_subdivision,
    length_rank,
    local_irreducibility,
    round_trip,
)
from tropdelpezzo.modification.m05 import example_M05, m05_arrangement
from tropdelpezzo.modification.pipeline import (
    build_del_pezzo,
    check_generic_output,
    modification_order,
)
from tropdelpezzo.modification.valued import ValuedField, const, initial_coefficient, s_power
from tropdelpezzo.polyhedra import check_balanced, link_at_vertex, stats
from tropdelpezzo.rootsys import E, LineKind, petersen_graph
from tropdelpezzo.trees import MetricTree
from tropdelpezzo.tropcurves import TropPoint2

ZERO = Fraction(0)


def max_zero_x() -> TropicalFunction:
    return TropicalFunction(((Monomial(ZERO), Monomial(ZERO, ((0, 1),))),), label="max(0,x)")


def _rays(complex_) -> set[tuple[int, ...]]:
    return {tuple(int(x) for x in c.rays[0]) for c in complex_.cells_of_dim(1) if c.rays}


def test_hex_fan_is_a_balanced_fan():
    fan = hex_fan()
    assert fan.is_fan()
    assert stats(fan).as_tuple() == (1, 0, 6, 0, 0, 0, 0, 6)
    assert check_balanced(fan)[0]
    assert nx.is_isomorphic(link_at_vertex(fan, 0), nx.cycle_graph(6))


def test_tropical_function_value():
    h = max_zero_x()
    assert h.value((3, -7)) == 3
    assert h.value((-2, 5)) == 0


def test_tropical_function_needs_representations():
    with pytest.raises(DomainError):
        TropicalFunction(())
    with pytest.raises(DomainError):
        TropicalFunction(((),))


def test_divisor_of_max_zero_x_on_hex_fan():
    pl = linearity_subdivision(hex_fan(), max_zero_x())
    divisor = pl.divisor_complex()
    assert _rays(divisor) == {(0, 1), (0, -1)}
    assert {c.weight for c in divisor.cells_of_dim(1)} == {1}
    assert sorted(pl.divisor().values()) == [1, 1]


def test_graph_along_adds_one_coordinate():
    pl = linearity_subdivision(hex_fan(), max_zero_x())
    modified = graph_along(pl.domain, pl)
    assert modified.ambient_dim == 3
    assert stats(modified).as_tuple() == (1, 0, 7, 0, 0, 0, 0, 8)
    assert check_balanced(modified)[0]
    assert fiber_dichotomy(modified)
    assert local_irreducibility(modified)
    assert divisor_of_modification(modified) == pl.divisor()


def test_divisor_determines_function_up_to_affine():
    pl = linearity_subdivision(hex_fan(), max_zero_x())
    rebuilt = function_from_divisor(pl.domain, pl.divisor())
    assert differ_by_affine(pl, rebuilt)
    assert round_trip(pl)
    assert round_trip(pl, graph_along(pl.domain, pl))


def test_zero_divisor_gives_affine_function():
    pl = linearity_subdivision(hex_fan(), max_zero_x())
    flat = function_from_divisor(pl.domain, {})
    assert flat.divisor() == {}
    assert not differ_by_affine(pl, flat)


def test_negative_divisor_is_rejected():
    concave = TropicalFunction(
        ((Monomial(ZERO),), (Monomial(ZERO, ((0, 1),)),)), label="min(0,x)"
    )
    pl = linearity_subdivision(hex_fan(), concave)
    assert sorted(pl.divisor().values()) == [-1, -1]
    with pytest.raises(ConsistencyError):
        graph_along(pl.domain, pl)


def test_graph_along_needs_matching_ambient_space():
    pl = linearity_subdivision(hex_fan(), max_zero_x())
    lifted = graph_along(pl.domain, pl)
    with pytest.raises(DomainError):
        graph_along(lifted, pl)


def test_valued_field():
    valued = ValuedField(2)
    assert valued.val(s_power(3)) == Fraction(3, 2)
    assert valued.val(const(0)) is None
    assert valued.trop(s_power(-4)) == 2
    element = valued.monomial(Fraction(5, 3), Fraction(-1, 2))
    assert valued.trop(element) == Fraction(-1, 2)
    assert initial_coefficient(element) == Fraction(5, 3)
    with pytest.raises(DomainError):
        valued.trop(const(0))
    with pytest.raises(DomainError):
        valued.monomial(1, Fraction(1, 3))


def test_default_modification_orders():
    assert [str(c) for c in modification_order(5)] == ["F14", "F24", "F34"]
    degree4 = modification_order(4)
    assert len(degree4) == 8 and degree4[-1].kind is LineKind.G
    degree3 = modification_order(3)
    assert len(degree3) == 18
    assert [c.kind for c in degree3[12:]] == [LineKind.G] * 6


def test_reordered_lines_are_accepted():
    order = modification_order(5, ["F34", "F14", "F24"])
    assert [str(c) for c in order] == ["F34", "F14", "F24"]


@pytest.mark.parametrize(
    "order",
    [
        ["F14", "F24"],
        ["F14", "F24", "F35"],
        ["G", "F14", "F15", "F24", "F25", "F34", "F35", "F45"],
    ],
)
def test_bad_orders_are_rejected(order):
    degree = 4 if "G" in order else 5
    with pytest.raises(DomainError):
        modification_order(degree, order)


def test_build_checks_point_count():
    with pytest.raises(DomainError):
        build_del_pezzo(4)
    with pytest.raises(DomainError):
        build_del_pezzo(5, TropPoint2.parse("1,2"))
    with pytest.raises(DomainError):
        build_del_pezzo(3, TropPoint2.parse("1,2"))


def test_m05_without_splitting_is_the_moduli_fan():
    X = example_M05(None)
    assert X.is_fan()
    assert stats(X).as_tuple() == (1, 0, 10, 0, 0, 0, 0, 15)
    assert nx.is_isomorphic(link_at_vertex(X, 0), petersen_graph())


def test_m05_at_valuation_zero_is_still_a_fan():
    assert example_M05(0).is_fan()


def test_m05_splitting_creates_a_bounded_edge():
    X = example_M05(1)
    assert not X.is_fan()
    assert stats(X).bounded_edges == 1
    assert [c.dim for c in X.bounded_cells()] == [1]
    assert check_balanced(X)[0]


def test_m05_rejects_negative_valuation():
    with pytest.raises(DomainError):
        m05_arrangement(-1)
    with pytest.raises(DomainError):
        example_M05(Fraction(-1, 2))


def test_build_rejects_points_in_special_position():
    with pytest.raises(NonGenericError, match="same x - y"):
        build_del_pezzo(4, TropPoint2.parse("3,3"))
    with pytest.raises(NonGenericError, match="same y"):
        build_del_pezzo(3, TropPoint2.parse("2,1"), TropPoint2.parse("-3,1"))


def test_build_caps_the_common_denominator():
    with pytest.raises(ResourceCapError) as excinfo:
        build_del_pezzo(3, TropPoint2.parse("1/97,2"), TropPoint2.parse("3,1/89"))
    assert excinfo.value.reached == 97 * 89


def test_output_check_rejects_foreign_cell_counts():
    for degree in (3, 4):
        surface = DelPezzoSurface(degree=degree, complex=hex_fan(), ray_labels={})
        with pytest.raises(NonGenericError):
            check_generic_output(surface)
    check_generic_output(DelPezzoSurface(degree=5, complex=hex_fan(), ray_labels={}))


def test_chain_graph_joins_chains_sharing_one_vertex():
    a, b, c, d = ((Fraction(k), ZERO) for k in range(4))
    chains = {
        E(1, 4): frozenset({a, b, c}),
        E(2, 4): frozenset({c, d}),
        E(3, 4): frozenset({a, b}),
    }
    graph = chain_graph(chains)
    assert set(graph.nodes) == set(chains)
    assert {frozenset(e) for e in graph.edges} == {frozenset({E(1, 4), E(2, 4)})}


def _with_lengths(first, second):
    tree = MetricTree.caterpillar([["a", "b"], ["c"], ["d", "e"]], [first, second])
    return DelPezzoSurface(degree=4, complex=hex_fan(), ray_labels={}, trees={E(1, 4): tree})


def test_length_rank_over_samples_of_one_type():
    samples = [_with_lengths(1, 2), _with_lengths(2, 3), _with_lengths(3, 5)]
    assert length_rank(samples) == 2
    assert length_rank(samples[:1]) == 0
    assert length_rank([_with_lengths(1, 2), _with_lengths(2, 4), _with_lengths(3, 6)]) == 1
    assert length_rank([]) == 0
