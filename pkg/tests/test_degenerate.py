import pytest

from tropdelpezzo.degenerate import (
    DegenerateKind,
    DegenerateSpec,
    build_degenerate,
    build_type_a,
    build_type_b,
    build_type_zero,
    cubic_coordinates,
    line_directions,
    system_by_index,
)
from tropdelpezzo.errors import DomainError
from tropdelpezzo.golden import golden_compare, load_golden_table, matching_rows
from tropdelpezzo.polyhedra import check_balanced
from tropdelpezzo.rootsys import double_six, lines, roots, weyl_generators
from tropdelpezzo.trees import ArrangementType, classify_arrangement, is_leaf, isomorphic


@pytest.fixture(scope="module")
def type_a():
    return build_type_a(roots(6)[0])


@pytest.fixture(scope="module")
def type_b():
    return build_type_b(system_by_index(0))


def test_every_line_gets_its_own_direction():
    directions = line_directions()
    assert set(directions) == set(lines(3))
    assert len(set(directions.values())) == 27
    assert len(cubic_coordinates()) == len(next(iter(directions.values())))


def test_type_zero_is_the_cone_over_the_schlafli_graph():
    surface = build_type_zero()
    assert surface.stats.as_tuple() == (1, 0, 27, 0, 0, 0, 0, 135)
    assert surface.complex.is_fan()
    for tree in surface.trees.values():
        assert len(tree.leaves) == 10
        assert tree.max_valence() == 10
    assert classify_arrangement(surface.trees) is ArrangementType.DEGENERATE


def test_type_a_statistics(type_a):
    assert type_a.stats.as_tuple() == (8, 13, 69, 6, 0, 0, 42, 135)
    assert [row.type for row in matching_rows(type_a.stats)] == ["a"]


def test_type_b_statistics(type_b):
    assert type_b.stats.as_tuple() == (12, 21, 81, 10, 0, 0, 54, 135)
    assert [row.type for row in matching_rows(type_b.stats)] == ["b"]


def test_type_b_differs_from_row_a(type_b):
    diff = golden_compare(type_b.stats, load_golden_table().row("a"))
    assert not diff.matches
    assert len(diff.mismatches) == 5


def test_degenerate_trees_have_unit_lengths(type_a):
    for tree in type_a.trees.values():
        assert set(tree.splits().values()) <= {1}


@pytest.mark.parametrize("index", [0, 17, 39])
def test_type_b_for_several_systems(index):
    surface = build_type_b(system_by_index(index))
    assert surface.stats.vertices == 12
    assert surface.stats.triangles == 10


def test_spec_dispatch(type_a):
    spec = DegenerateSpec(DegenerateKind.A, root=roots(6)[0])
    assert build_degenerate(spec).stats == type_a.stats
    zero = build_degenerate(DegenerateSpec(DegenerateKind.ZERO))
    assert zero.stats.vertices == 1


def test_spec_requires_its_datum():
    with pytest.raises(DomainError):
        DegenerateSpec(DegenerateKind.A)
    with pytest.raises(DomainError):
        DegenerateSpec(DegenerateKind.B)


def test_bad_inputs_are_rejected():
    with pytest.raises(DomainError):
        build_type_a((1, 1, 0, 0, 0, 0))
    with pytest.raises(DomainError):
        system_by_index(40)
    with pytest.raises(DomainError):
        system_by_index(-1)
    a, b, c = system_by_index(0)
    with pytest.raises(DomainError):
        build_type_b((a, a, c))


def _leaf_counts(tree):
    return sorted(sum(is_leaf(n) for n in tree.graph.neighbors(v)) for v in tree.internal)


def test_degenerate_surfaces_are_balanced(type_a, type_b):
    for surface in (build_type_zero(), type_a, type_b):
        balanced, violations = check_balanced(surface.complex)
        assert balanced, violations


def test_type_b_trees_split_ten_as_four_three_three(type_b):
    first = type_b.trees[lines(3)[0]]
    for tree in type_b.trees.values():
        assert _leaf_counts(tree) == [3, 3, 4]
        assert isomorphic(tree, first, labels=False)


def test_type_a_trees_come_in_two_shapes(type_a):
    root = roots(6)[0]
    six = {line for pair in double_six(root) for line in pair}
    assert len(six) == 12
    classes: list[list] = []
    for line, tree in type_a.trees.items():
        for members in classes:
            if isomorphic(tree, type_a.trees[members[0]], labels=False):
                members.append(line)
                break
        else:
            classes.append([line])
    assert sorted(len(members) for members in classes) == [12, 15]
    assert any(set(members) == six for members in classes)


def test_type_a_surfaces_of_related_roots_are_related(type_a):
    root = roots(6)[0]
    reflection = next(s for s in weyl_generators(6) if s.on_root(root)[0] != root)
    image, _ = reflection.on_root(root)
    other = build_type_a(image)
    assert other.stats == type_a.stats
    mapping = {line: reflection.on_line(line) for line in lines(3)}
    for line, tree in type_a.trees.items():
        assert isomorphic(tree.relabel(mapping), other.trees[mapping[line]])
