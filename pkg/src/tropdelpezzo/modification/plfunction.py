"""Piecewise integer affine functions on tropical surfaces and their graphs.

Two kinds of function appear. A `TropicalFunction` is a global expression,
the minimum over several representations of a maximum of affine monomials in
the ambient coordinates; it is what tropicalizing a polynomial on a linear
space produces. A `PLFunction` is a refined complex together with one affine
piece per 2-cell; `linearity_subdivision` turns the first into the second.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from tropdelpezzo.errors import ConsistencyError, DomainError, RealizationError
from tropdelpezzo.modification.planar import LocalFrame, Region
from tropdelpezzo.polyhedra import Cell, PolyComplex, lattice_normal
from tropdelpezzo.polyhedra.balancing import face_direction, inward_vector
from tropdelpezzo.polyhedra.complex import CellKey
from tropdelpezzo.rational import Vector, solve_sparse, vec

logger = logging.getLogger(__name__)

Point2 = tuple[Fraction, Fraction]


@dataclass(frozen=True, order=True)
class LocalAffine:
    """The affine function ``constant + slope1*s + slope2*t`` of a local frame."""

    constant: Fraction
    slope1: Fraction
    slope2: Fraction

    @classmethod
    def zero(cls) -> LocalAffine:
        """The zero function."""
        return cls(Fraction(0), Fraction(0), Fraction(0))

    @property
    def form(self) -> tuple[Fraction, Fraction, Fraction]:
        """Coefficients in the order used by region clipping."""
        return self.constant, self.slope1, self.slope2

    def at(self, s: Fraction, t: Fraction) -> Fraction:
        """Value at a local point."""
        return self.constant + self.slope1 * s + self.slope2 * t

    def along(self, p: Fraction, q: Fraction) -> Fraction:
        """Derivative along a local direction."""
        return self.slope1 * p + self.slope2 * q

    def __sub__(self, other: LocalAffine) -> LocalAffine:
        return LocalAffine(
            self.constant - other.constant,
            self.slope1 - other.slope1,
            self.slope2 - other.slope2,
        )

    def transport(self, source: LocalFrame, target: LocalFrame) -> LocalAffine:
        """Re-express a piece given in `source` coordinates in `target` coordinates."""
        origin = source.to_local(target.origin)
        return LocalAffine(
            self.at(*origin),
            self.along(*source.local_direction(target.e1)),
            self.along(*source.local_direction(target.e2)),
        )


@dataclass(frozen=True)
class Monomial:
    """The affine function ``constant + sum(power * w[index])`` on the ambient space."""

    constant: Fraction
    powers: tuple[tuple[int, int], ...] = ()

    def value(self, point: Sequence[Fraction]) -> Fraction:
        """Evaluate at an ambient point."""
        return self.constant + sum((p * point[i] for i, p in self.powers), Fraction(0))

    def restrict(self, frame: LocalFrame) -> LocalAffine:
        """The restriction to the plane of a frame."""
        return LocalAffine(
            self.value(frame.origin),
            sum((p * frame.e1[i] for i, p in self.powers), Fraction(0)),
            sum((p * frame.e2[i] for i, p in self.powers), Fraction(0)),
        )

    def __str__(self) -> str:
        parts = [str(self.constant)] if self.constant or not self.powers else []
        parts.extend(f"{p}*w{i}" if p != 1 else f"w{i}" for i, p in self.powers)
        return " + ".join(parts)


@dataclass(frozen=True)
class LocalTropicalFunction:
    """A tropical function restricted to one 2-cell."""

    representations: tuple[tuple[LocalAffine, ...], ...]

    def value(self, s: Fraction, t: Fraction) -> Fraction:
        """Value at a local point."""
        return min(max(a.at(s, t) for a in rep) for rep in self.representations)

    def _pick(self, key: Callable[[LocalAffine], tuple[Fraction, ...]]) -> LocalAffine:
        best: LocalAffine | None = None
        best_key: tuple[Fraction, ...] | None = None
        for rep in self.representations:
            top = max(rep, key=key)
            top_key = key(top)
            if best_key is None or top_key < best_key:
                best, best_key = top, top_key
        assert best is not None
        return best

    def germ(self, point: Point2, first: Point2, second: Point2) -> LocalAffine:
        """The piece active at `point` in the sector leaving along `first`, then `second`."""
        return self._pick(lambda a: (a.at(*point), a.along(*first), a.along(*second)))

    def asymptotic(self, start: Point2, direction: Point2, side: Point2) -> LocalAffine:
        """The piece active far out on the ray from `start`, on the side of `side`."""
        return self._pick(lambda a: (a.along(*direction), a.at(*start), a.along(*side)))


@dataclass(frozen=True)
class TropicalFunction:
    """``min`` over representations of ``max`` over monomials."""

    representations: tuple[tuple[Monomial, ...], ...]
    label: str = ""

    def __post_init__(self) -> None:
        if not self.representations or not all(self.representations):
            raise DomainError("a tropical function needs non-empty representations")

    def value(self, point: Sequence[Fraction | int]) -> Fraction:
        """Evaluate at an ambient point."""
        w = vec(point)
        return min(max(m.value(w) for m in rep) for rep in self.representations)

    def restrict(self, frame: LocalFrame) -> LocalTropicalFunction:
        """Restrict to a plane, merging duplicate monomials and representations."""
        cache: dict[Monomial, LocalAffine] = {}
        reps: set[frozenset[LocalAffine]] = set()
        for rep in self.representations:
            local = []
            for monomial in rep:
                if monomial not in cache:
                    cache[monomial] = monomial.restrict(frame)
                local.append(cache[monomial])
            reps.add(frozenset(local))
        return LocalTropicalFunction(tuple(tuple(sorted(r)) for r in sorted(reps, key=sorted)))


def _rot90(v: Point2) -> Point2:
    return -v[1], v[0]


def _linear_pieces(
    h: LocalTropicalFunction, region: Region
) -> list[tuple[LocalAffine, Region]]:
    """Split a cell into the domains of linearity of a convex tropical function."""
    start = region.interior_point()
    pieces = [h.germ(start, (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))]
    while True:
        found: LocalAffine | None = None
        result: list[tuple[LocalAffine, Region]] = []
        for piece in pieces:
            part: Region | None = region
            for other in pieces:
                if other == piece or part is None:
                    continue
                part = part.clip((piece - other).form)
            if part is None:
                continue
            result.append((piece, part))
            found = _missing_piece(h, piece, part)
            if found is not None:
                break
        if found is None:
            return result
        if found in pieces:
            raise ConsistencyError("tropical function is not convex on a cell")
        pieces.append(found)


def _missing_piece(
    h: LocalTropicalFunction, piece: LocalAffine, part: Region
) -> LocalAffine | None:
    centre = part.interior_point()
    for point in part.points:
        if point[2] == 0:
            continue
        v = (point[0], point[1])
        if h.value(*v) != piece.at(*v):
            inward = (centre[0] - v[0], centre[1] - v[1])
            return h.germ(v, inward, _rot90(inward))
    for index, point in enumerate(part.points):
        if point[2] != 0:
            continue
        direction = (point[0], point[1])
        for neighbour in part.neighbours(index):
            if neighbour[2] == 0:
                continue
            v = (neighbour[0], neighbour[1])
            side = (centre[0] - v[0], centre[1] - v[1])
            far = h.asymptotic(v, direction, side)
            if far.along(*direction) != piece.along(*direction):
                return far
    return None


@dataclass
class PLFunction:
    """A piecewise affine function: one local piece per 2-cell of `domain`."""

    domain: PolyComplex
    pieces: dict[CellKey, LocalAffine]
    label: str = ""
    _cells: dict[CellKey, Cell] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._cells = {c.key: c for c in self.domain.cells_of_dim(2)}
        missing = set(self._cells) - set(self.pieces)
        if missing:
            raise DomainError(f"{len(missing)} cells carry no affine piece")

    def cell_of(self, key: CellKey) -> Cell:
        """The 2-cell with a key."""
        return self._cells[key]

    def value(self, point: Sequence[Fraction | int], key: CellKey) -> Fraction:
        """Value at a point of the cell `key`."""
        frame = LocalFrame.of_cell(self._cells[key])
        return self.pieces[key].at(*frame.to_local(vec(point)))

    def slope(self, key: CellKey, vector: Sequence[Fraction | int]) -> Fraction:
        """Derivative of the piece of cell `key` along an ambient vector of its plane."""
        frame = LocalFrame.of_cell(self._cells[key])
        return self.pieces[key].along(*frame.local_direction(vec(vector)))

    def order_along(self, edge: Cell) -> Fraction:
        """Weight of the divisor on a 1-cell."""
        u = face_direction(edge)
        cofaces = [c for c in self.domain.cofaces.get(edge.key, ()) if c.dim == 2]
        if not cofaces:
            raise DomainError("1-cell is not a face of a 2-cell")
        total = [0] * self.domain.ambient_dim
        order = Fraction(0)
        for cell in cofaces:
            normal = lattice_normal(u, inward_vector(cell, edge))
            for i, n in enumerate(normal):
                total[i] += cell.weight * n
            order += cell.weight * self.slope(cell.key, normal)
        pivot = next(i for i, x in enumerate(u) if x != 0)
        lam = Fraction(total[pivot], u[pivot])
        if any(t != lam * x for t, x in zip(total, u, strict=True)):
            raise ConsistencyError("domain is not balanced along a 1-cell")
        return order - lam * self.slope(cofaces[0].key, u)

    def divisor(self) -> dict[CellKey, int]:
        """Non-zero divisor weights by 1-cell key.

        Raises:
            DomainError: If a weight is not an integer.
        """
        weights: dict[CellKey, int] = {}
        for edge in self.domain.cells_of_dim(1):
            order = self.order_along(edge)
            if order.denominator != 1:
                raise DomainError("divisor weight is not an integer")
            if order:
                weights[edge.key] = int(order)
        return weights

    def divisor_complex(self) -> PolyComplex:
        """The divisor as a weighted 1-dimensional complex."""
        weights = self.divisor()
        cells = [
            Cell(1, edge.vertices, edge.rays, weights[edge.key])
            for edge in self.domain.cells_of_dim(1)
            if edge.key in weights
        ]
        return PolyComplex.from_cells(self.domain.ambient_dim, cells)


def linearity_subdivision(Y: PolyComplex, h: TropicalFunction) -> PLFunction:
    """Refine `Y` into the domains of linearity of `h`.

    `h` must be convex on every 2-cell, which holds whenever it tropicalizes
    a polynomial on the surface.

    Raises:
        ConsistencyError: If `h` fails to be convex on some cell.
    """
    cells: list[Cell] = []
    pieces: dict[CellKey, LocalAffine] = {}
    for cell in Y.cells_of_dim(2):
        frame = LocalFrame.of_cell(cell)
        local = h.restrict(frame)
        parts = _linear_pieces(local, Region.of_cell(cell, frame))
        for piece, part in parts:
            refined = part.to_cell(frame, cell.weight)
            cells.append(refined)
            pieces[refined.key] = piece.transport(frame, LocalFrame.of_cell(refined))
    domain = PolyComplex.from_cells(Y.ambient_dim, cells)
    logger.debug(
        "linearity subdivision of %s: %d -> %d two-cells",
        h.label or "function",
        len(Y.cells_of_dim(2)),
        len(cells),
    )
    return PLFunction(domain, pieces, h.label)


def graph_along(Y: PolyComplex, g: PLFunction) -> PolyComplex:
    """The open modification of `Y` along `g`: its graph plus downward facets.

    Raises:
        DomainError: If `g` lives in another ambient space or has non-integral
            slopes along rays.
        ConsistencyError: If the divisor of `g` has a negative weight.
    """
    if Y.ambient_dim != g.domain.ambient_dim:
        raise DomainError("function and complex live in different ambient spaces")
    n = Y.ambient_dim
    down = (0,) * n + (-1,)
    cells: list[Cell] = []
    for cell in g.domain.cells_of_dim(2):
        vertices = [(*v, g.value(v, cell.key)) for v in cell.vertices]
        rays = []
        for ray in cell.rays:
            slope = g.slope(cell.key, ray)
            if slope.denominator != 1:
                raise DomainError(f"non-integral slope {slope} along ray {ray}")
            rays.append((*ray, slope))
        cells.append(Cell.make(2, vertices, rays, cell.weight))
    for key, weight in sorted(g.divisor().items()):
        if weight < 0:
            raise ConsistencyError("divisor of the modifying function is not effective")
        edge = g.domain.cell(key)
        owner = next(c for c in g.domain.cofaces[key] if c.dim == 2)
        lifted = [(*v, g.value(v, owner.key)) for v in edge.vertices]
        if edge.rays:
            ray = edge.rays[0]
            cells.append(
                Cell.make(2, lifted, [(*ray, g.slope(owner.key, ray)), down], weight)
            )
        else:
            cells.append(Cell.make(2, lifted, [down], weight))
    return PolyComplex.from_cells(n + 1, cells)


def _as_weights(Y: PolyComplex, D: PolyComplex | Mapping[CellKey, int]) -> dict[CellKey, int]:
    if isinstance(D, PolyComplex):
        weights = {c.key: c.weight for c in D.cells_of_dim(1)}
    else:
        weights = dict(D)
    known = {c.key for c in Y.cells_of_dim(1)}
    for key in weights:
        if key not in known:
            raise DomainError("divisor edge is not a 1-cell of the complex; refine first")
    return weights


def base_cell(Y: PolyComplex, point: Sequence[Fraction | int] | None = None) -> Cell:
    """The first 2-cell containing `point` (default: the origin) as a vertex."""
    target = vec(point) if point is not None else tuple(Fraction(0) for _ in range(Y.ambient_dim))
    for cell in Y.cells_of_dim(2):
        if target in cell.vertices:
            return cell
    return Y.cells_of_dim(2)[0]


def function_from_divisor(
    Y: PolyComplex,
    D: PolyComplex | Mapping[CellKey, int],
    *,
    base: Cell | None = None,
) -> PLFunction:
    """A piecewise affine function with divisor `D`, vanishing on a base cell.

    Raises:
        DomainError: If `D` is not supported on the 1-skeleton of `Y`.
        RealizationError: If no slope assignment realizes `D`.
    """
    weights = _as_weights(Y, D)
    two_cells = Y.cells_of_dim(2)
    index = {c.key: i for i, c in enumerate(two_cells)}
    frames = {c.key: LocalFrame.of_cell(c) for c in two_cells}
    equations: list[dict[int, Fraction]] = []
    rhs: list[Fraction] = []

    def value_terms(cell: Cell, point: Vector, sign: int) -> dict[int, Fraction]:
        s, t = frames[cell.key].to_local(point)
        k = 3 * index[cell.key]
        return {k: Fraction(sign), k + 1: sign * s, k + 2: sign * t}

    def slope_terms(cell: Cell, vector: Sequence[Fraction | int], scale: Fraction) -> dict[int, Fraction]:
        p, q = frames[cell.key].local_direction(vec(vector))
        k = 3 * index[cell.key]
        return {k + 1: scale * p, k + 2: scale * q}

    def merged(*parts: dict[int, Fraction]) -> dict[int, Fraction]:
        total: dict[int, Fraction] = {}
        for part in parts:
            for j, c in part.items():
                total[j] = total.get(j, Fraction(0)) + c
        return total

    for edge in Y.cells_of_dim(1):
        cofaces = [c for c in Y.cofaces.get(edge.key, ()) if c.dim == 2]
        if not cofaces:
            continue
        first = cofaces[0]
        for other in cofaces[1:]:
            for v in edge.vertices:
                equations.append(merged(value_terms(first, v, 1), value_terms(other, v, -1)))
                rhs.append(Fraction(0))
            if edge.rays:
                ray = edge.rays[0]
                equations.append(
                    merged(slope_terms(first, ray, Fraction(1)), slope_terms(other, ray, Fraction(-1)))
                )
                rhs.append(Fraction(0))
        u = face_direction(edge)
        total = [0] * Y.ambient_dim
        parts = []
        for cell in cofaces:
            normal = lattice_normal(u, inward_vector(cell, edge))
            for i, n in enumerate(normal):
                total[i] += cell.weight * n
            parts.append(slope_terms(cell, normal, Fraction(cell.weight)))
        pivot = next(i for i, x in enumerate(u) if x != 0)
        lam = Fraction(total[pivot], u[pivot])
        parts.append(slope_terms(first, u, -lam))
        equations.append(merged(*parts))
        rhs.append(Fraction(weights.get(edge.key, 0)))
    anchor = base if base is not None else base_cell(Y)
    k = 3 * index[anchor.key]
    for j in range(3):
        equations.append({k + j: Fraction(1)})
        rhs.append(Fraction(0))
    solution, free = solve_sparse(equations, rhs, 3 * len(two_cells))
    if free:
        logger.warning("function_from_divisor: %d free parameters set to zero", len(free))
    pieces = {
        c.key: LocalAffine(*solution[3 * i : 3 * i + 3]) for i, c in enumerate(two_cells)
    }
    return PLFunction(Y, pieces)


def differ_by_affine(g1: PLFunction, g2: PLFunction) -> bool:
    """True when ``g1 - g2`` is the restriction of one affine function on the ambient space."""
    if set(g1.pieces) != set(g2.pieces):
        raise DomainError("functions live on different complexes")
    n = g1.domain.ambient_dim
    equations: list[dict[int, Fraction]] = []
    rhs: list[Fraction] = []
    for key, piece in g1.pieces.items():
        difference = piece - g2.pieces[key]
        frame = LocalFrame.of_cell(g1.cell_of(key))
        row = {0: Fraction(1)}
        row.update({i + 1: c for i, c in enumerate(frame.origin) if c})
        equations.append(row)
        rhs.append(difference.constant)
        for vector, slope in ((frame.e1, difference.slope1), (frame.e2, difference.slope2)):
            equations.append({i + 1: c for i, c in enumerate(vector) if c})
            rhs.append(slope)
    try:
        solve_sparse(equations, rhs, n + 1)
    except RealizationError:
        return False
    return True

