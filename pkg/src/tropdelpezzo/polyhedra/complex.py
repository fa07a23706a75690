"""Cells and polyhedral complexes of dimension at most two in Q^n."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import cached_property

from tropdelpezzo.errors import LookupFailure, StructuralError
from tropdelpezzo.rational import IntVector, Vector, primitive, rank, sub, vec
from tropdelpezzo.schemas.models import SurfaceStats

Point = Vector
CellKey = tuple[int, tuple[Point, ...], tuple[IntVector, ...]]


class CellClass(StrEnum):
    """Classification tags of cells."""

    VERTEX = "vertex"
    BOUNDED_EDGE = "bounded_edge"
    RAY = "ray"
    TRIANGLE = "triangle"
    SQUARE = "square"
    OTHER_BOUNDED = "other_bounded"
    FLAP = "flap"
    CONE = "cone"
    OTHER_UNBOUNDED = "other_unbounded"


@dataclass(frozen=True)
class Cell:
    """A pointed polyhedron of dimension 0, 1 or 2.

    Two-dimensional cells list their vertices in boundary order. A bounded
    polygon is a cycle. An unbounded cell is a chain ``v0 .. vm``; with one
    ray the ray emanates from both ends, with two rays ``rays[0]`` sits at
    ``v0`` and ``rays[-1]`` at ``vm``.
    """

    dim: int
    vertices: tuple[Point, ...]
    rays: tuple[IntVector, ...] = ()
    weight: int = 1

    @classmethod
    def make(
        cls,
        dim: int,
        vertices: Iterable[Sequence[Fraction | int]],
        rays: Iterable[Sequence[Fraction | int]] = (),
        weight: int = 1,
    ) -> Cell:
        """Build a cell from loose coordinates, making rays primitive."""
        return cls(
            dim=dim,
            vertices=tuple(vec(v) for v in vertices),
            rays=tuple(primitive(r) for r in rays),
            weight=weight,
        ).canonical()

    @property
    def bounded(self) -> bool:
        """True when the cell has no recession rays."""
        return not self.rays

    @property
    def key(self) -> CellKey:
        """Order-independent identity of the underlying polyhedron."""
        return (self.dim, tuple(sorted(set(self.vertices))), tuple(sorted(self.rays)))

    def affine_dim(self) -> int:
        """Dimension of conv(vertices) + cone(rays)."""
        if not self.vertices:
            raise StructuralError("a cell needs at least one vertex")
        base = self.vertices[0]
        spanning = [sub(v, base) for v in self.vertices[1:]]
        spanning.extend(vec(r) for r in self.rays)
        return rank(spanning) if spanning else 0

    def validate(self) -> None:
        """Check dimension, primitivity and ray distinctness."""
        if self.affine_dim() != self.dim:
            raise StructuralError(
                f"cell claims dimension {self.dim} but spans {self.affine_dim()}"
            )
        for ray in self.rays:
            if primitive(ray) != ray:
                raise StructuralError(f"ray {ray} is not primitive")
        if len(set(self.rays)) != len(self.rays):
            raise StructuralError("repeated recession ray")
        if self.weight <= 0:
            raise StructuralError("cell weights must be positive")

    def canonical(self) -> Cell:
        """Normalize the boundary order so equal cells compare equal."""
        verts = self.vertices
        rays = self.rays
        if self.dim == 0:
            return self
        if self.dim == 1:
            return Cell(1, tuple(sorted(verts)), rays, self.weight)
        if not rays:
            start = verts.index(min(verts))
            cycle = verts[start:] + verts[:start]
            if len(cycle) > 2 and cycle[-1] < cycle[1]:
                cycle = (cycle[0],) + tuple(reversed(cycle[1:]))
            return Cell(2, cycle, rays, self.weight)
        if len(rays) == 1:
            if verts[-1] < verts[0]:
                verts = tuple(reversed(verts))
            return Cell(2, verts, rays, self.weight)
        if len(rays) == 2:
            if rays[1] < rays[0]:
                return Cell(2, tuple(reversed(verts)), (rays[1], rays[0]), self.weight)
            return self
        raise StructuralError("a pointed 2-cell has at most two extremal rays")

    def faces(self) -> list[Cell]:
        """Proper faces: vertices, edges and rays on the boundary."""
        if self.dim == 0:
            return []
        points = [Cell(0, (v,)) for v in self.vertices]
        if self.dim == 1:
            return points
        verts = self.vertices
        edges: list[Cell] = []
        if not self.rays:
            for i, v in enumerate(verts):
                edges.append(Cell(1, tuple(sorted((v, verts[(i + 1) % len(verts)])))))
            return edges + points
        for a, b in zip(verts, verts[1:], strict=False):
            edges.append(Cell(1, tuple(sorted((a, b)))))
        edges.append(Cell(1, (verts[0],), (self.rays[0],)))
        edges.append(Cell(1, (verts[-1],), (self.rays[-1],)))
        unique = {e.key: e for e in edges}
        return list(unique.values()) + points


def classify_cell(c: Cell) -> CellClass:
    """Return the class tag of a cell."""
    if c.affine_dim() != c.dim:
        raise StructuralError(
            f"malformed cell: dimension {c.dim} but affine span {c.affine_dim()}"
        )
    nverts = len(set(c.vertices))
    if c.dim == 0:
        return CellClass.VERTEX
    if c.dim == 1:
        return CellClass.BOUNDED_EDGE if c.bounded else CellClass.RAY
    if c.bounded:
        if nverts == 3:
            return CellClass.TRIANGLE
        if nverts == 4:
            return CellClass.SQUARE
        return CellClass.OTHER_BOUNDED
    if len(c.rays) == 1 and nverts == 2:
        return CellClass.FLAP
    if len(c.rays) == 2 and nverts == 1:
        return CellClass.CONE
    return CellClass.OTHER_UNBOUNDED


@dataclass(frozen=True)
class PolyComplex:
    """A weighted rational polyhedral complex closed under taking faces."""

    ambient_dim: int
    cells: tuple[Cell, ...]

    @classmethod
    def from_cells(cls, ambient_dim: int, cells: Iterable[Cell]) -> PolyComplex:
        """Close a family of cells under faces and sort it canonically."""
        by_key: dict[CellKey, Cell] = {}
        pending = [c.canonical() for c in cells]
        for cell in pending:
            for coord in cell.vertices:
                if len(coord) != ambient_dim:
                    raise StructuralError("vertex outside the ambient dimension")
            by_key.setdefault(cell.key, cell)
        for cell in pending:
            for face in cell.faces():
                by_key.setdefault(face.key, face)
        return cls(ambient_dim, tuple(sorted(by_key.values(), key=_sort_key)))

    @cached_property
    def _index(self) -> dict[CellKey, int]:
        return {c.key: i for i, c in enumerate(self.cells)}

    @property
    def dim(self) -> int:
        """Maximal cell dimension."""
        return max((c.dim for c in self.cells), default=-1)

    @cached_property
    def vertices(self) -> tuple[Point, ...]:
        """Sorted vertex coordinates."""
        return tuple(c.vertices[0] for c in self.cells if c.dim == 0)

    def cells_of_dim(self, dim: int) -> list[Cell]:
        """Cells of one dimension, in canonical order."""
        return [c for c in self.cells if c.dim == dim]

    @cached_property
    def cofaces(self) -> dict[CellKey, tuple[Cell, ...]]:
        """Inverse face relation restricted to cells one dimension up."""
        table: dict[CellKey, list[Cell]] = defaultdict(list)
        for cell in self.cells:
            for face in cell.faces():
                if face.dim == cell.dim - 1:
                    table[face.key].append(cell)
        return {k: tuple(v) for k, v in table.items()}

    def cell(self, key: CellKey) -> Cell:
        """Look up a cell by key."""
        if key not in self._index:
            raise LookupFailure(f"no cell {key}")
        return self.cells[self._index[key]]

    def star(self, point: Point) -> list[Cell]:
        """All cells having `point` as a vertex."""
        if (0, (point,), ()) not in self._index:
            raise LookupFailure(f"{point} is not a vertex")
        return [c for c in self.cells if c.dim > 0 and point in c.vertices]

    def recession_directions(self) -> set[IntVector]:
        """Primitive directions of all rays of the complex."""
        return {c.rays[0] for c in self.cells if c.dim == 1 and c.rays}

    def is_fan(self) -> bool:
        """True for a single vertex and no bounded cells of positive dimension."""
        return len(self.vertices) == 1 and all(
            not c.bounded for c in self.cells if c.dim > 0
        )

    def bounded_cells(self) -> list[Cell]:
        """Bounded cells of positive dimension."""
        return [c for c in self.cells if c.dim > 0 and c.bounded]

    def validate(self) -> None:
        """Validate every cell."""
        for cell in self.cells:
            cell.validate()


def _sort_key(cell: Cell) -> tuple[int, tuple[Point, ...], tuple[IntVector, ...]]:
    return cell.key


def stats(X: PolyComplex) -> SurfaceStats:
    """Count the cells of a two-dimensional complex by class."""
    counts: dict[CellClass, int] = defaultdict(int)
    for cell in X.cells:
        counts[classify_cell(cell)] += 1
    return SurfaceStats(
        vertices=counts[CellClass.VERTEX],
        bounded_edges=counts[CellClass.BOUNDED_EDGE],
        rays=counts[CellClass.RAY],
        triangles=counts[CellClass.TRIANGLE],
        squares=counts[CellClass.SQUARE],
        other_bounded_2cells=counts[CellClass.OTHER_BOUNDED],
        flaps=counts[CellClass.FLAP],
        cones=counts[CellClass.CONE],
        other_unbounded=counts[CellClass.OTHER_UNBOUNDED],
    )
