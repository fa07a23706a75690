"""Structural checks on modified surfaces and on finished del Pezzo surfaces."""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from collections.abc import Mapping, Sequence
from fractions import Fraction

import networkx as nx

from tropdelpezzo.modification.plfunction import (
    PLFunction,
    differ_by_affine,
    function_from_divisor,
)
from tropdelpezzo.modification.surface import DelPezzoSurface
from tropdelpezzo.polyhedra import Point, PolyComplex, lattice_normal, link_at_vertex
from tropdelpezzo.polyhedra.balancing import face_direction, inward_vector
from tropdelpezzo.polyhedra.complex import CellKey
from tropdelpezzo.rational import nullspace, rank, sub
from tropdelpezzo.rootsys import LineLabel, petersen_graph
from tropdelpezzo.trees import isomorphic as trees_isomorphic

logger = logging.getLogger(__name__)


def _down(n: int) -> tuple[int, ...]:
    return (0,) * (n - 1) + (-1,)


def fiber_dichotomy(X: PolyComplex) -> bool:
    """Fibers of the projection forgetting the last coordinate are points or half-lines.

    Every 2-cell either projects onto a 2-dimensional cell or is a vertical
    cell containing the downward ray.
    """
    down = _down(X.ambient_dim)
    for cell in X.cells_of_dim(2):
        if down in cell.rays:
            continue
        base = cell.vertices[0]
        spanning = [sub(v, base)[:-1] for v in cell.vertices[1:]]
        spanning.extend(tuple(Fraction(x) for x in r[:-1]) for r in cell.rays)
        if rank(spanning) != 2:
            logger.debug("cell over %s collapses under projection", base)
            return False
    return True


def locally_irreducible(X: PolyComplex, vertex: Point) -> bool:
    """True when the balanced weightings of the star at `vertex` form a line."""
    star = X.star(vertex)
    facets = [c for c in star if c.dim == 2]
    column = {c.key: i for i, c in enumerate(facets)}
    rows: list[list[int]] = []
    for edge in (c for c in star if c.dim == 1):
        u = face_direction(edge)
        cofaces = [c for c in X.cofaces.get(edge.key, ()) if c.dim == 2]
        normals = {c.key: lattice_normal(u, inward_vector(c, edge)) for c in cofaces}
        for i, j in itertools.combinations(range(X.ambient_dim), 2):
            row = [0] * len(facets)
            for key, n in normals.items():
                row[column[key]] = u[i] * n[j] - u[j] * n[i]
            if any(row):
                rows.append(row)
    return len(nullspace(rows, len(facets))) == 1


def local_irreducibility(X: PolyComplex) -> bool:
    """Local irreducibility at every vertex."""
    return all(locally_irreducible(X, v) for v in X.vertices)


def divisor_of_modification(X: PolyComplex) -> dict[CellKey, int]:
    """Recover the modifying divisor from the vertical cells of a modification."""
    down = _down(X.ambient_dim)
    recovered: dict[CellKey, int] = defaultdict(int)
    for cell in X.cells_of_dim(2):
        if down not in cell.rays:
            continue
        vertices = tuple(sorted({v[:-1] for v in cell.vertices}))
        rays = tuple(sorted(tuple(r[:-1]) for r in cell.rays if r != down))
        recovered[(1, vertices, rays)] += cell.weight
    return dict(recovered)


def round_trip(g: PLFunction, modified: PolyComplex | None = None) -> bool:
    """The divisor of `g` determines `g` up to an affine function.

    With `modified` given, the divisor read back from its vertical cells must
    also equal the divisor of `g`.
    """
    divisor = g.divisor()
    rebuilt = function_from_divisor(g.domain, divisor)
    if not differ_by_affine(g, rebuilt):
        return False
    return modified is None or divisor_of_modification(modified) == divisor


def same_surface(a: DelPezzoSurface, b: DelPezzoSurface) -> bool:
    """Equal statistics, equal line sets and metrically isomorphic trees."""
    if a.stats != b.stats or set(a.trees) != set(b.trees):
        return False
    return all(trees_isomorphic(a.trees[line], b.trees[line]) for line in a.trees)


def tst_chains(S: DelPezzoSurface) -> dict[LineLabel, frozenset[Point]]:
    """Vertices of the bounded edges lying under the flaps of each line."""
    chains: dict[LineLabel, frozenset[Point]] = {}
    for line in S.lines:
        direction = S.direction(line)
        vertices: set[Point] = set()
        for cell in S.complex.cells_of_dim(2):
            if cell.rays == (direction,):
                vertices.update(cell.vertices)
        chains[line] = frozenset(vertices)
    return chains


def chain_graph(chains: Mapping[LineLabel, frozenset[Point]]) -> nx.Graph:
    """Chains as nodes, adjacent when they share exactly one vertex."""
    graph = nx.Graph()
    graph.add_nodes_from(chains)
    for a, b in itertools.combinations(sorted(chains), 2):
        if len(chains[a] & chains[b]) == 1:
            graph.add_edge(a, b)
    return graph


def vertex_kinds(S: DelPezzoSurface) -> dict[Point, str]:
    """Tag vertices whose link is the Petersen graph "S", and K3,3 "T"."""
    petersen = petersen_graph()
    k33 = nx.complete_bipartite_graph(3, 3)
    kinds: dict[Point, str] = {}
    for v in S.complex.vertices:
        link = link_at_vertex(S.complex, v)
        if nx.is_isomorphic(link, petersen):
            kinds[v] = "S"
        elif nx.is_isomorphic(link, k33):
            kinds[v] = "T"
        else:
            kinds[v] = "other"
    return kinds


def length_vector(S: DelPezzoSurface) -> dict[tuple[LineLabel, frozenset], Fraction]:
    """All internal edge lengths of all trees, keyed by line and split."""
    return {
        (line, split): length
        for line, tree in S.trees.items()
        for split, length in tree.splits().items()
    }


def length_rank(surfaces: Sequence[DelPezzoSurface]) -> int:
    """Dimension of the affine span of the tree lengths of same-type samples.

    Samples are grouped by the set of splits they carry; the largest group is
    used.
    """
    groups: dict[frozenset, list[dict]] = defaultdict(list)
    for S in surfaces:
        vector = length_vector(S)
        groups[frozenset(vector)].append(vector)
    if not groups:
        return 0
    largest = max(groups.values(), key=len)
    keys = sorted(largest[0], key=lambda k: (k[0], sorted(map(str, k[1]))))
    rows = [[vector[k] for k in keys] for vector in largest]
    differences = [[x - y for x, y in zip(row, rows[0], strict=True)] for row in rows[1:]]
    result = rank(differences) if differences else 0
    logger.info("length rank %d over %d samples of one type", result, len(largest))
    return result
