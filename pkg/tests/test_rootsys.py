import itertools

import networkx as nx
import pytest

from tropdelpezzo.coxideal.grading import grade
from tropdelpezzo.errors import DomainError, ResourceCapError, UnsupportedError
from tropdelpezzo.rootsys import (
    E,
    F,
    G,
    LineLabel,
    Reflection,
    a2_cubed_systems,
    a2_subsystems,
    bilinear,
    clebsch_graph,
    demicube_generators,
    double_six,
    intersection_graph,
    is_root,
    line_of_root,
    line_root,
    lines,
    orthogonal_lines,
    parse_root,
    petersen_graph,
    positive_part,
    reflect,
    root_str,
    roots,
    schlafli_graph,
    tritangent_planes,
    weyl_generators,
    weyl_orbit,
)

ROOT = (1, 0, 1, 0, 1, 0)


@pytest.mark.parametrize(("m", "count"), [(6, 36), (7, 63)])
def test_root_counts_and_norms(m, count):
    positive = roots(m)
    assert len(positive) == count
    assert all(bilinear(r, r) == 2 for r in positive)


def test_roots_only_for_e6_e7():
    with pytest.raises(UnsupportedError):
        roots(5)


def test_parse_and_render_roots():
    assert parse_root("d1+d3+d5") == ROOT
    assert parse_root("d1 - d7") == (1, 0, 0, 0, 0, 0, -1)
    assert root_str((1, 0, -1, 0, 0, 0)) == "d1-d3"
    assert root_str(ROOT) == "d1+d3+d5"
    with pytest.raises(DomainError):
        parse_root("x1+d2")


def test_positive_part():
    assert positive_part((-1, 0, 1, 0, 0, 0)) == ((1, 0, -1, 0, 0, 0), -1)
    assert positive_part(ROOT) == (ROOT, 1)
    assert is_root((0, -1, 0, -1, 0, -1))
    assert not is_root((1, 1, 0, 0, 0, 0))
    with pytest.raises(DomainError):
        positive_part((1, 1, 0, 0, 0, 0))


@pytest.mark.parametrize(("degree", "count"), [(3, 27), (4, 16), (5, 10)])
def test_line_counts(degree, count):
    assert len(lines(degree)) == count


def test_line_labels_parse():
    assert LineLabel.parse("F12") == F(1, 2)
    assert LineLabel.parse("G", degree=4) == G()
    assert str(G(3)) == "G3"
    with pytest.raises(DomainError):
        LineLabel.parse("F17")
    with pytest.raises(DomainError):
        LineLabel.parse("H1")


def test_lines_and_roots_correspond():
    for line in lines(3):
        assert line_of_root(line_root(line)) == line
    with pytest.raises(DomainError):
        line_of_root((1, 0, 0, 0, 0, 0, 0))


def test_meeting_lines_are_orthogonal_roots():
    graph = intersection_graph(3)
    for a, b in itertools.combinations(lines(3), 2):
        assert graph.has_edge(a, b) == (bilinear(line_root(a), line_root(b)) == 0)


def test_intersection_graphs_match_reference_graphs():
    cubic = intersection_graph(3)
    assert cubic.number_of_edges() == 135
    assert all(d == 10 for _, d in cubic.degree)
    assert nx.is_isomorphic(cubic, schlafli_graph())
    assert nx.is_isomorphic(intersection_graph(4), clebsch_graph())
    assert nx.is_isomorphic(intersection_graph(5), petersen_graph())
    assert len(tritangent_planes()) == 45


def test_double_six_and_orthogonal_lines_partition_the_lines():
    pairs = double_six(ROOT)
    assert len(pairs) == 6
    orthogonal = orthogonal_lines(ROOT)
    assert len(orthogonal) == 15
    covered = {line for pair in pairs for line in pair} | set(orthogonal)
    assert covered == set(lines(3))
    graph = intersection_graph(3)
    assert not any(graph.has_edge(a, b) for a, b in pairs)
    with pytest.raises(DomainError):
        double_six((1, 1, 0, 0, 0, 0))


def test_a2_systems():
    assert len(a2_subsystems()) == 120
    systems = a2_cubed_systems()
    assert len(systems) == 40
    for system in systems:
        for x, y in itertools.combinations(system, 2):
            assert all(bilinear(a, b) == 0 for a in x for b in y)


def test_reflections_act_on_lines():
    reflection = Reflection(ROOT)
    graph = intersection_graph(3)
    image = {line: reflection.on_line(line) for line in lines(3)}
    assert all(reflection.on_line(image[line]) == line for line in lines(3))
    for a, b in graph.edges:
        assert graph.has_edge(image[a], image[b])


def test_weyl_orbit_of_a_line():
    generators = [g.on_line for g in weyl_generators(6)]
    orbit = weyl_orbit(generators, E(1))
    assert len(orbit) == 27
    with pytest.raises(ResourceCapError):
        weyl_orbit(generators, E(1), cap=5)


def test_reflection_in_a_root():
    assert reflect(ROOT, ROOT) == tuple(-x for x in ROOT)
    for s in roots(6):
        image = reflect(ROOT, s)
        assert reflect(ROOT, image) == s
        if bilinear(ROOT, s) == 0:
            assert image == s
    with pytest.raises(DomainError):
        reflect((0,) * 6, ROOT)
    with pytest.raises(DomainError):
        reflect(ROOT, (1, 0))


def test_demicube_orbit_is_the_degree4_grading():
    orbit = weyl_orbit(demicube_generators(), grade(E(1, 4), 4))
    assert len(orbit) == 16
    assert set(orbit) == {grade(line, 4) for line in lines(4)}


@pytest.mark.parametrize(("m", "count"), [(6, 72), (7, 126)])
def test_weyl_orbit_of_a_root_is_every_root(m, count):
    orbit = weyl_orbit(weyl_generators(m), roots(m)[0])
    assert len(orbit) == count
    assert {positive_part(r)[0] for r in orbit} == set(roots(m))
