"""Degenerate tropical cubic surfaces built directly from root-system data.

All three constructions live in the coordinates of the cubic pipeline, where
the ray of a line L is the image of L under the map sending a line to minus
the divisors of the twenty coordinate units. In these coordinates
``sum(D.L * u_L) = 0`` for every divisor class D, which is what makes the
vertex positions below balanced:

* type 0: the cone over the Schläfli graph;
* type (a), for a root r: P = 0 carries the 15 lines orthogonal to r, and
  Q = sum of the twelve double-six lines carries those twelve; each double-six
  pair {L, L'} gives an outer vertex R = 2(u_L + u_L') carrying L, L' and the
  five lines meeting both;
* type (b), for an A2^3 system: P_i = sum of the nine lines orthogonal to the
  i-th block; the lines of blocks i and j pair up into three triples A, B
  with every line of A meeting every line of B, and each pair gives a pendant
  vertex ``P_i + 3 * sum(B) = P_j + 3 * sum(A)`` on the edge P_iP_j.

Flaps join a bounded edge to every line attached at both endpoints; cones
join two meeting lines attached at the same vertex.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from tropdelpezzo import rootsys
from tropdelpezzo.errors import DomainError, StructuralError
from tropdelpezzo.modification.arrangement import (
    MODIFICATION_ORDER,
    curve_label,
    expected_direction,
)
from tropdelpezzo.modification.surface import DelPezzoSurface, check_cones, check_leaf_sets
from tropdelpezzo.polyhedra import Cell, PolyComplex
from tropdelpezzo.rational import IntVector, primitive
from tropdelpezzo.rootsys import LineLabel, RootVector
from tropdelpezzo.trees import MetricTree, is_leaf

logger = logging.getLogger(__name__)


class DegenerateKind(StrEnum):
    """Families of degenerate cubic surfaces."""

    ZERO = "0"
    A = "a"
    B = "b"


@dataclass(frozen=True)
class DegenerateSpec:
    """A degenerate type together with its root-system datum."""

    kind: DegenerateKind
    root: RootVector | None = None
    system: tuple[tuple[RootVector, ...], ...] | None = None

    def __post_init__(self) -> None:
        if self.kind is DegenerateKind.A and self.root is None:
            raise DomainError("type (a) needs a root")
        if self.kind is DegenerateKind.B and self.system is None:
            raise DomainError("type (b) needs an A2^3 system")


def cubic_coordinates() -> list[LineLabel]:
    """Coordinate labels of the cubic pipeline, in order."""
    return [curve_label(name, 3) for name in ("F13", "F12", *MODIFICATION_ORDER[3])]


def line_directions() -> dict[LineLabel, IntVector]:
    """Ray vector of every line of the cubic surface."""
    coordinates = cubic_coordinates()
    return {line: expected_direction(line, coordinates) for line in rootsys.lines(3)}


def _sum(vectors: Iterable[IntVector], dim: int) -> IntVector:
    total = [0] * dim
    for v in vectors:
        for i, x in enumerate(v):
            total[i] += x
    return tuple(total)


def _scaled(c: int, v: IntVector) -> IntVector:
    return tuple(c * x for x in v)


def _plus(a: IntVector, b: IntVector) -> IntVector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def _assemble(
    positions: dict[str, IntVector],
    attached: dict[str, Sequence[LineLabel]],
    triangles: Sequence[tuple[str, str, str]],
) -> DelPezzoSurface:
    u = line_directions()
    graph = rootsys.intersection_graph(3)
    dim = len(next(iter(u.values())))
    cells: list[Cell] = []
    edges: set[tuple[str, str]] = set()
    for triangle in triangles:
        cells.append(Cell.make(2, [positions[n] for n in triangle]))
        for a, b in itertools.combinations(triangle, 2):
            edges.add((min(a, b), max(a, b)))
    for a, b in sorted(edges):
        for line in sorted(set(attached.get(a, ())) & set(attached.get(b, ()))):
            cells.append(Cell.make(2, [positions[a], positions[b]], [u[line]]))
    for name, lines in attached.items():
        apex = positions[name]
        cells.extend(Cell.make(1, [apex], [u[line]]) for line in lines)
        for first, second in itertools.combinations(sorted(lines), 2):
            if graph.has_edge(first, second):
                cells.append(Cell.make(2, [apex], [u[first], u[second]]))
    X = PolyComplex.from_cells(dim, cells)
    labels = {primitive(u[line]): line for line in rootsys.lines(3)}
    surface = DelPezzoSurface(3, X, labels, coordinates=tuple(cubic_coordinates()))
    surface.compute_trees()
    surface.trees = {line: _unit_lengths(tree) for line, tree in surface.trees.items()}
    check_leaf_sets(surface)
    check_cones(surface)
    return surface


def _unit_lengths(tree: MetricTree) -> MetricTree:
    graph = tree.graph.copy()
    for u, v in graph.edges:
        if not is_leaf(u) and not is_leaf(v):
            graph.edges[u, v]["length"] = Fraction(1)
    return MetricTree(graph)


def build_type_zero() -> DelPezzoSurface:
    """The cone over the Schläfli graph."""
    u = line_directions()
    origin = tuple(0 for _ in next(iter(u.values())))
    surface = _assemble({"O": origin}, {"O": rootsys.lines(3)}, [])
    logger.info("type 0 surface: %s", surface.stats.as_tuple())
    return surface


def build_type_a(r: Sequence[int]) -> DelPezzoSurface:
    """Six triangles on a common edge, from a root of E6.

    Raises:
        DomainError: If `r` is not a root of E6.
    """
    root = tuple(int(x) for x in r)
    if len(root) != 6 or not rootsys.is_root(root):
        raise DomainError(f"{rootsys.root_str(root)} is not a root of E6")
    u = line_directions()
    dim = len(next(iter(u.values())))
    graph = rootsys.intersection_graph(3)
    orthogonal = rootsys.orthogonal_lines(root)
    pairs = rootsys.double_six(root)
    positions: dict[str, IntVector] = {"P": tuple(0 for _ in range(dim))}
    attached: dict[str, Sequence[LineLabel]] = {
        "P": orthogonal,
        "Q": [line for pair in pairs for line in pair],
    }
    sums = [_plus(u[a], u[b]) for a, b in pairs]
    positions["Q"] = _sum(sums, dim)
    triangles: list[tuple[str, str, str]] = []
    for k, ((a, b), s) in enumerate(zip(pairs, sums, strict=True)):
        name = f"R{k}"
        positions[name] = _scaled(2, s)
        common = sorted(set(graph.neighbors(a)) & set(graph.neighbors(b)))
        if len(common) != 5 or not set(common) <= set(orthogonal):
            raise StructuralError(f"double-six pair {a}, {b} has unexpected common neighbors")
        attached[name] = [a, b, *common]
        triangles.append(("P", "Q", name))
    surface = _assemble(positions, attached, triangles)
    logger.info("type (a) surface for %s: %s", rootsys.root_str(root), surface.stats.as_tuple())
    return surface


def _normalized_system(system: Sequence[Sequence[Sequence[int]]]) -> tuple[tuple[RootVector, ...], ...]:
    blocks = []
    for block in system:
        roots = []
        for r in block:
            positive, _ = rootsys.positive_part(tuple(int(x) for x in r))
            roots.append(positive)
        blocks.append(tuple(sorted(roots)))
    return tuple(sorted(blocks))


def _orthogonal_to_block(block: Sequence[RootVector]) -> list[LineLabel]:
    return [
        line
        for line in rootsys.lines(3)
        if all(rootsys.bilinear(rootsys.line_root(line), (*r, 0)) == 0 for r in block)
    ]


def build_type_b(system: Sequence[Sequence[Sequence[int]]]) -> DelPezzoSurface:
    """Ten triangles around a central one, from an A2^3 subsystem of E6.

    Raises:
        DomainError: If `system` is not one of the 40 A2^3 subsystems.
    """
    try:
        blocks = _normalized_system(system)
    except DomainError as exc:
        raise DomainError(f"malformed A2^3 system: {exc}") from exc
    if blocks not in set(rootsys.a2_cubed_systems()):
        raise DomainError("not an A2^3 subsystem of E6")
    u = line_directions()
    dim = len(next(iter(u.values())))
    graph = rootsys.intersection_graph(3)
    families = [_orthogonal_to_block(block) for block in blocks]
    positions = {f"P{i + 1}": _sum((u[line] for line in f), dim) for i, f in enumerate(families)}
    attached: dict[str, Sequence[LineLabel]] = {
        f"P{i + 1}": f for i, f in enumerate(families)
    }
    triangles: list[tuple[str, str, str]] = [("P1", "P2", "P3")]
    for i, j in itertools.combinations(range(3), 2):
        k = 3 - i - j
        groups: dict[frozenset[LineLabel], list[LineLabel]] = {}
        for line in families[i]:
            partners = frozenset(set(graph.neighbors(line)) & set(families[j]))
            groups.setdefault(partners, []).append(line)
        if len(groups) != 3:
            raise StructuralError(f"blocks {i + 1}, {j + 1} do not pair into three triples")
        for partners, group in groups.items():
            everything = [*group, *partners]
            label = next(
                (
                    r
                    for r in blocks[k]
                    if all(
                        rootsys.bilinear(rootsys.line_root(line), (*r, 0)) == 0
                        for line in everything
                    )
                ),
                None,
            )
            if label is None:
                raise StructuralError("pendant vertex has no root label")
            name = rootsys.root_str(label)
            positions[name] = _plus(
                positions[f"P{i + 1}"], _scaled(3, _sum((u[x] for x in partners), dim))
            )
            attached[name] = sorted(everything)
            triangles.append((f"P{i + 1}", f"P{j + 1}", name))
    surface = _assemble(positions, attached, triangles)
    logger.info("type (b) surface: %s", surface.stats.as_tuple())
    return surface


def build_degenerate(spec: DegenerateSpec) -> DelPezzoSurface:
    """Dispatch on the kind of a degenerate surface request."""
    if spec.kind is DegenerateKind.ZERO:
        return build_type_zero()
    if spec.kind is DegenerateKind.A:
        assert spec.root is not None
        return build_type_a(spec.root)
    assert spec.system is not None
    return build_type_b(spec.system)


def system_by_index(index: int) -> tuple[tuple[RootVector, ...], ...]:
    """The A2^3 subsystem at a position of the canonical list.

    Raises:
        DomainError: If the index is outside 0..39.
    """
    systems = rootsys.a2_cubed_systems()
    if not 0 <= index < len(systems):
        raise DomainError(f"system index must lie in 0..{len(systems) - 1}")
    return systems[index]
