from fractions import Fraction

import pytest

from tropdelpezzo import rootsys
from tropdelpezzo.coxideal import line_involution
from tropdelpezzo.degenerate import build_type_zero
from tropdelpezzo.errors import DomainError, LabelingError, NonGenericError, StructuralError
from tropdelpezzo.rootsys import E, G
from tropdelpezzo.trees import (
    ArrangementType,
    MetricTree,
    Node,
    classify_arrangement,
    complete_line_tree,
    four_point_condition,
    from_distance_matrix,
    from_newick,
    involution_check,
    isomorphic,
    leaf_distance_matrix,
    quartet_check,
    quartet_topology,
    quotient_5leaf,
    relabel_d4,
    restrict,
    restriction_identity,
)


@pytest.fixture
def caterpillar():
    return MetricTree.caterpillar([["a", "b"], ["c"], ["d", "e"]], [1, 2])


def _pairs(line):
    mapping = line_involution(line)
    return sorted({tuple(sorted((a, b))) for a, b in mapping.items()})


def test_caterpillar_structure(caterpillar):
    assert caterpillar.leaves == ["a", "b", "c", "d", "e"]
    assert len(caterpillar.internal) == 3
    assert caterpillar.is_trivalent()
    assert caterpillar.total_length() == 3
    assert caterpillar.splits() == {
        frozenset({"c", "d", "e"}): Fraction(1),
        frozenset({"d", "e"}): Fraction(2),
    }
    assert caterpillar.distance("a", "e") == 3
    assert caterpillar.distance("a", "b") == 0


def test_build_normalizes():
    tree = MetricTree.build(
        [
            (Node(0), "a", None),
            (Node(0), "b", None),
            (Node(0), Node(1), 0),
            (Node(1), "c", None),
            (Node(1), "d", None),
        ]
    )
    assert tree.max_valence() == 4
    assert tree.splits() == {}
    with pytest.raises(StructuralError):
        MetricTree.build([(Node(0), "a", None), (Node(0), Node(1), None), (Node(1), "b", None)])
    with pytest.raises(DomainError):
        MetricTree.caterpillar([["a"], ["b"]], [])


def test_newick_and_json(caterpillar):
    text = caterpillar.to_newick()
    assert text.endswith(";")
    assert isomorphic(from_newick(text), caterpillar)
    assert isomorphic(MetricTree.from_json(caterpillar.to_json()), caterpillar)
    assert "--" in caterpillar.to_dot()
    with pytest.raises(DomainError):
        from_newick("(a,b")


def test_tree_metric_reconstruction(caterpillar):
    distances = leaf_distance_matrix(caterpillar)
    assert four_point_condition(distances, caterpillar.leaves)
    rebuilt = from_distance_matrix(distances, caterpillar.leaves)
    assert isomorphic(rebuilt, caterpillar)
    bad = dict(distances)
    bad["a", "c"] = bad["c", "a"] = Fraction(5)
    with pytest.raises(DomainError):
        from_distance_matrix(bad, caterpillar.leaves)


def test_restriction_and_quartets(caterpillar):
    smaller = restrict(caterpillar, ["a", "c", "d", "e"])
    assert smaller.total_length() == 2
    assert quartet_topology(caterpillar, ("a", "b", "d", "e")) == frozenset(
        {frozenset({"a", "b"}), frozenset({"d", "e"})}
    )
    with pytest.raises(DomainError):
        restrict(caterpillar, ["a"])


def test_isomorphism_respects_metric(caterpillar):
    longer = MetricTree.caterpillar([["a", "b"], ["c"], ["d", "e"]], [1, 3])
    assert not isomorphic(caterpillar, longer)
    assert isomorphic(caterpillar, longer, metric=False)


def test_involution_on_symmetric_tree():
    pairs = _pairs(E(1))
    (a1, b1), (a2, b2), (a3, b3), (a4, b4), (a5, b5) = pairs
    symmetric = MetricTree.caterpillar([[a1, b1, a2, b2], [a3, b3], [a4, b4, a5, b5]], [1, 1])
    assert involution_check(symmetric, E(1))
    quotient = quotient_5leaf(symmetric, E(1))
    assert len(quotient.leaves) == 5
    assert quotient.total_length() == 2
    assert quotient.is_trivalent()
    skewed = MetricTree.caterpillar([[a1, a2], [b1, b2, a3, b3, a4, b4, a5, b5]], [1])
    assert not involution_check(skewed, E(1))


def test_relabel_d4_gives_neighbor_leaves():
    conic_tree = MetricTree.caterpillar(
        [[E(1, 4), E(2, 4)], [E(3, 4)], [E(4, 4), E(5, 4)]], [1, 1]
    )
    for target in rootsys.lines(4):
        tree = relabel_d4(conic_tree, target)
        assert set(tree.leaves) == set(rootsys.neighbors(target))
    assert relabel_d4(conic_tree, G()).leaves == conic_tree.leaves
    with pytest.raises(DomainError):
        relabel_d4(MetricTree.star(["x", "y", "z"]), G())


def test_classify_arrangement():
    trivalent = [
        MetricTree.caterpillar([["a", "b"], ["c"], ["d", "e"]], [1, 1]) for _ in range(27)
    ]
    assert classify_arrangement(trivalent) is ArrangementType.ALL_TRIVALENT
    four = MetricTree.caterpillar([["a", "b", "c"], ["d", "e"]], [1])
    assert classify_arrangement(trivalent[:24] + [four] * 3) is ArrangementType.THREE_FOURVALENT
    stars = [MetricTree.star(["a", "b", "c", "d", "e"]) for _ in range(27)]
    assert classify_arrangement(stars) is ArrangementType.DEGENERATE
    with pytest.raises(StructuralError):
        classify_arrangement(trivalent[:5])


def test_quartet_check(caterpillar):
    assert quartet_check(caterpillar, restrict(caterpillar, ["a", "b", "d", "e"]))
    swapped = MetricTree.caterpillar([["a", "d"], ["c"], ["b", "e"]], [1, 2])
    assert not quartet_check(caterpillar, swapped)
    assert quartet_check(caterpillar, swapped, common=["a", "c", "d"])


def test_restriction_identity_on_star_trees():
    trees = build_type_zero().trees
    assert restriction_identity(trees[E(1)], E(1), trees[E(2)], E(2))
    with pytest.raises(LabelingError):
        restriction_identity(trees[E(1)], E(1), trees[rootsys.F(1, 2)], rootsys.F(1, 2))


def test_complete_line_tree_restores_a_hidden_leaf():
    pairs = line_involution(E(1))
    (a1, b1), (a2, b2), (a3, b3), (a4, b4), (a5, b5) = _pairs(E(1))
    symmetric = MetricTree.caterpillar([[a1, b1, a2, b2], [a3, b3], [a4, b4, a5, b5]], [1, 1])
    partial = restrict(symmetric, [x for x in symmetric.leaves if x != b1])
    assert isomorphic(complete_line_tree(partial, pairs), symmetric)
    assert isomorphic(complete_line_tree(symmetric, pairs), symmetric)
    hidden_pair = restrict(symmetric, [x for x in symmetric.leaves if x not in (a1, b1)])
    with pytest.raises(NonGenericError):
        complete_line_tree(hidden_pair, pairs)
