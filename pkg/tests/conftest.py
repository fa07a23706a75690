import pytest

from tropdelpezzo.polyhedra import Cell, PolyComplex

ORIGIN = (0, 0)


@pytest.fixture
def tropical_line() -> PolyComplex:
    rays = [(1, 0), (0, 1), (-1, -1)]
    return PolyComplex.from_cells(2, [Cell.make(1, [ORIGIN], [r]) for r in rays])


@pytest.fixture
def plane_fan() -> PolyComplex:
    rays = [(1, 0), (0, 1), (-1, -1)]
    cones = [Cell.make(2, [ORIGIN], [a, b]) for i, a in enumerate(rays) for b in rays[i + 1 :]]
    return PolyComplex.from_cells(2, cones)
