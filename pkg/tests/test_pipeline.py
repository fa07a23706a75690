import itertools
import json
import random
from collections import Counter

import networkx as nx
import pytest

from tropdelpezzo.cli.commands import sample_generic_surface
from tropdelpezzo.errors import NonGenericError
from tropdelpezzo.golden import matching_rows
from tropdelpezzo.modification import (
    DelPezzoSurface,
    build_del_pezzo,
    chain_graph,
    label_rays,
    same_surface,
    tst_chains,
    vertex_kinds,
)
from tropdelpezzo.modification.pipeline import DEGREE4_STATS
from tropdelpezzo.modification.surface import boundary_tree
from tropdelpezzo.polyhedra import check_balanced, dumps, link_at_vertex
from tropdelpezzo.printing import PipelineTracer
from tropdelpezzo.rootsys import G, LineLabel, clebsch_graph, intersection_graph, petersen_graph
from tropdelpezzo.trees import (
    ArrangementType,
    classify_arrangement,
    involution_check,
    isomorphic,
    relabel_d4,
    restriction_identity,
)
from tropdelpezzo.tropcurves import TropPoint2, TypeVerdict, classify_type


GENERIC_ROWS = {
    (78, 150, 216, 31, 42, 0, 189, 135): 0,
    (77, 148, 213, 30, 42, 0, 186, 135): 3,
}


@pytest.fixture(scope="module")
def degree5() -> DelPezzoSurface:
    return build_del_pezzo(5, verify=True)


@pytest.fixture(scope="module")
def degree4() -> DelPezzoSurface:
    return build_del_pezzo(4, TropPoint2.parse("2,1"))


def test_degree5_is_the_moduli_fan(degree5):
    assert degree5.complex.is_fan()
    assert degree5.stats.as_tuple() == (1, 0, 10, 0, 0, 0, 0, 15)
    assert nx.is_isomorphic(link_at_vertex(degree5.complex, 0), petersen_graph())
    assert check_balanced(degree5.complex)[0]


def test_degree5_checks_all_pass(degree5):
    assert degree5.checks
    assert all(check.passed for check in degree5.checks)


def test_degree5_rays_and_trees(degree5):
    assert len(degree5.ray_labels) == 10
    graph = intersection_graph(5)
    for line, tree in degree5.trees.items():
        assert len(tree.leaves) == 3
        assert set(tree.leaves) == set(graph.neighbors(line))
    assert degree5.four_valent_trees() == 0


def test_degree5_tracked_curves(degree5):
    # F14, F24, F34 in Plücker labels
    assert [str(c) for c in degree5.tracked_curves] == ["p23", "p13", "p12"]
    assert all(curve.is_balanced() for curve in degree5.tracked_curves.values())


def test_degree5_vertex_is_special(degree5):
    assert list(vertex_kinds(degree5).values()) == ["S"]
    assert all(not chain for chain in tst_chains(degree5).values())


def test_label_rays_covers_every_direction(degree5):
    labels = label_rays(degree5.complex, 5, degree5.coordinates)
    assert labels == degree5.ray_labels
    assert set(labels) == degree5.complex.recession_directions()


def test_surface_json_round_trip(degree5):
    payload = json.loads(dumps(degree5.to_json()))
    assert payload["stats"]["vertices"] == 1
    restored = DelPezzoSurface.from_json(payload)
    assert same_surface(degree5, restored)


def test_surface_json_without_trees_recomputes_them(degree5):
    payload = degree5.to_json()
    payload["trees"] = {}
    restored = DelPezzoSurface.from_json(payload)
    assert set(restored.trees) == set(degree5.trees)


def test_degree4_statistics(degree4):
    assert degree4.stats.as_tuple() == (12, 20, 48, 8, 1, 0, 32, 40)
    assert check_balanced(degree4.complex)[0]


def test_degree4_trees_are_trivalent(degree4):
    assert len(degree4.trees) == 16
    for tree in degree4.trees.values():
        assert len(tree.leaves) == 5
        assert tree.is_trivalent()


def test_degree4_trees_follow_from_the_conic(degree4):
    tree_g = degree4.trees[G()]
    for line, tree in degree4.trees.items():
        assert isomorphic(relabel_d4(tree_g, line), tree, metric=True)


def test_boundary_tree_matches_stored_tree(degree4):
    for line in degree4.lines[:4]:
        assert isomorphic(boundary_tree(degree4, line), degree4.trees[line])


def test_degree4_vertex_kinds(degree4):
    assert Counter(vertex_kinds(degree4).values()) == {"S": 4, "T": 8}


def test_degree4_chains_form_the_clebsch_graph(degree4):
    chains = tst_chains(degree4)
    kinds = vertex_kinds(degree4)
    assert len(chains) == 16
    for chain in chains.values():
        assert sorted(kinds[v] for v in chain) == ["S", "T", "T"]
    graph = chain_graph(chains)
    assert all(d == 5 for _, d in graph.degree)
    assert nx.is_isomorphic(graph, clebsch_graph())


@pytest.mark.slow
def test_degree4_random_points_give_one_combinatorial_type():
    rng = random.Random(2)
    for _ in range(20):
        _, surface = sample_generic_surface(4, rng, seed=0, tracer=PipelineTracer.silent())
        assert surface.stats.as_tuple() == DEGREE4_STATS
        assert all(tree.is_trivalent() for tree in surface.trees.values())
        tree_g = surface.trees[G()]
        for line, tree in surface.trees.items():
            assert isomorphic(relabel_d4(tree_g, line), tree, metric=True)


# --- cubic surfaces ---

OTHER_POINTS = ("13/3,5/2", "-7/5,11/4")
PARALLELOGRAM_CANDIDATES = (
    ("12/5,17/4", "10/3,35/6"),
    ("7/3,13/4", "41/12,59/12"),
    ("5/4,19/6", "11/5,9/2"),
)


@pytest.fixture(scope="module")
def cubic() -> DelPezzoSurface:
    return build_del_pezzo(3, *map(TropPoint2.parse, OTHER_POINTS))


def _first_generic(candidates: tuple[tuple[str, str], ...]) -> tuple[TropPoint2, TropPoint2, DelPezzoSurface]:
    for p5, p6 in candidates:
        a, b = TropPoint2.parse(p5), TropPoint2.parse(p6)
        try:
            return a, b, build_del_pezzo(3, a, b)
        except NonGenericError:
            continue
    pytest.fail("no candidate points gave a generic cubic")


def _disjoint_pairs() -> list[tuple[LineLabel, LineLabel]]:
    graph = intersection_graph(3)
    return [
        (a, b) for a, b in itertools.permutations(graph.nodes, 2) if not graph.has_edge(a, b)
    ]


@pytest.mark.slow
def test_cubic_has_a_generic_row(cubic):
    produced = cubic.stats.as_tuple()
    assert produced in GENERIC_ROWS
    assert cubic.four_valent_trees() == GENERIC_ROWS[produced]
    assert len(matching_rows(cubic.stats)) == 1
    assert check_balanced(cubic.complex)[0]


@pytest.mark.slow
def test_cubic_trees_carry_the_line_involution(cubic):
    assert len(cubic.trees) == 27
    for line, tree in cubic.trees.items():
        assert involution_check(tree, line)


@pytest.mark.slow
def test_cubic_quotients_restrict_to_disjoint_trees(cubic):
    pairs = _disjoint_pairs()
    assert len(pairs) == 27 * 16
    for line, other in pairs:
        assert restriction_identity(cubic.trees[line], line, cubic.trees[other], other)


@pytest.mark.slow
def test_degree3_generic_types_are_separated_by_the_triangle_test(cubic):
    a, b = map(TropPoint2.parse, OTHER_POINTS)
    assert classify_type(a, b) is TypeVerdict.OTHER
    c, d, parallelogram = _first_generic(PARALLELOGRAM_CANDIDATES)
    assert classify_type(c, d) is TypeVerdict.PARALLELOGRAM
    rows = {}
    for verdict, surface in ((TypeVerdict.OTHER, cubic), (TypeVerdict.PARALLELOGRAM, parallelogram)):
        produced = surface.stats.as_tuple()
        assert produced in GENERIC_ROWS
        expected = (
            ArrangementType.ALL_TRIVALENT
            if GENERIC_ROWS[produced] == 0
            else ArrangementType.THREE_FOURVALENT
        )
        assert classify_arrangement(surface.trees) is expected
        rows[verdict] = produced
    assert rows[TypeVerdict.PARALLELOGRAM] != rows[TypeVerdict.OTHER]
