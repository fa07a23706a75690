import networkx as nx
import pytest

from tropdelpezzo.errors import LookupFailure, StructuralError
from tropdelpezzo.polyhedra import (
    Cell,
    CellClass,
    PolyComplex,
    check_balanced,
    classify_cell,
    complex_from_json,
    complex_to_json,
    dumps,
    fan_of,
    link_at_vertex,
    stats,
    to_dot,
    unimodular_equivalent,
)
from tropdelpezzo.rational import vec

ORIGIN = (0, 0)
E1, E2, E0 = (1, 0), (0, 1), (-1, -1)


def test_cell_classes():
    assert classify_cell(Cell.make(0, [ORIGIN])) is CellClass.VERTEX
    assert classify_cell(Cell.make(1, [ORIGIN, (1, 1)])) is CellClass.BOUNDED_EDGE
    assert classify_cell(Cell.make(1, [ORIGIN], [(2, 0)])) is CellClass.RAY
    assert classify_cell(Cell.make(2, [ORIGIN, E1, E2])) is CellClass.TRIANGLE
    assert classify_cell(Cell.make(2, [ORIGIN, E1, (1, 1), E2])) is CellClass.SQUARE
    assert classify_cell(Cell.make(2, [ORIGIN, E1], [E2])) is CellClass.FLAP
    assert classify_cell(Cell.make(2, [ORIGIN], [E1, E2])) is CellClass.CONE


def test_cells_are_canonical():
    a = Cell.make(2, [ORIGIN, E1, E2])
    b = Cell.make(2, [E1, E2, ORIGIN])
    assert a == b
    assert Cell.make(2, [ORIGIN], [E1, E2]) == Cell.make(2, [ORIGIN], [E2, E1])


def test_malformed_cells_are_rejected():
    with pytest.raises(StructuralError):
        Cell(1, (vec(ORIGIN),), ((2, 0),)).validate()
    with pytest.raises(StructuralError):
        classify_cell(Cell(2, (vec(ORIGIN), vec(E1), vec((2, 0)))))


def test_tropical_line_is_balanced(tropical_line):
    ok, violations = check_balanced(tropical_line)
    assert ok and violations == []
    assert tropical_line.dim == 1
    assert tropical_line.is_fan()
    assert tropical_line.bounded_cells() == []


def test_plane_fan_stats_and_balancing(plane_fan):
    counts = stats(plane_fan)
    assert counts.as_tuple() == (1, 0, 3, 0, 0, 0, 0, 3)
    assert check_balanced(plane_fan)[0]


def test_single_cone_is_unbalanced():
    X = PolyComplex.from_cells(2, [Cell.make(2, [ORIGIN], [E1, E2])])
    ok, violations = check_balanced(X)
    assert not ok
    assert len(violations) == 2


def test_link_of_plane_fan_is_a_triangle(plane_fan):
    link = link_at_vertex(plane_fan, 0)
    assert nx.is_isomorphic(link, nx.cycle_graph(3))
    assert "graph link {" in to_dot(link)
    with pytest.raises(LookupFailure):
        link_at_vertex(plane_fan, 5)
    with pytest.raises(LookupFailure):
        plane_fan.star(vec((1, 1)))


def test_json_round_trip_is_deterministic(plane_fan):
    payload = complex_to_json(plane_fan)
    assert complex_from_json(payload) == plane_fan
    assert dumps(payload) == dumps(complex_to_json(complex_from_json(payload)))
    with pytest.raises(StructuralError):
        complex_from_json({"ambient_dim": 2})


def test_unimodular_equivalence(plane_fan):
    rays, cones = fan_of(plane_fan)
    assert len(rays) == 3 and len(cones) == 3
    all_pairs = [(0, 1), (0, 2), (1, 2)]
    sheared = [(1, 1), (0, 1), (-1, -2)]
    assert unimodular_equivalent(rays, cones, sheared, all_pairs)
    other = [(1, 0), (0, 1), (-1, -2)]
    assert not unimodular_equivalent(rays, cones, other, all_pairs)
