"""Links of vertices, small-graph isomorphism and fan equivalence."""

from __future__ import annotations

import math
from collections.abc import Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from tropdelpezzo.errors import LookupFailure
from tropdelpezzo.polyhedra.complex import Cell, Point, PolyComplex
from tropdelpezzo.rational import IntVector, nullspace, primitive, sub


def _link_node(cell: Cell, v: Point) -> str:
    if cell.rays:
        return "ray" + str(list(cell.rays[0]))
    a, b = cell.vertices
    other = b if a == v else a
    return "edge" + str(list(primitive(sub(other, v))))


def link_at_vertex(X: PolyComplex, v: Point | int) -> nx.Graph:
    """Link graph at a vertex.

    Nodes are the edges and rays at `v` (labeled by their primitive
    direction); graph edges are the 2-cells at `v`.

    Raises:
        LookupFailure: If `v` is not a vertex of `X`.
    """
    if isinstance(v, int):
        if not 0 <= v < len(X.vertices):
            raise LookupFailure(f"no vertex with index {v}")
        v = X.vertices[v]
    star = X.star(v)
    graph = nx.Graph()
    for cell in star:
        if cell.dim == 1:
            graph.add_node(_link_node(cell, v), cell=cell.key)
    for cell in star:
        if cell.dim != 2:
            continue
        ends = [f for f in cell.faces() if f.dim == 1 and v in f.vertices]
        if len(ends) == 2:
            graph.add_edge(
                _link_node(ends[0], v), _link_node(ends[1], v), weight=cell.weight
            )
    return graph


def isomorphic(g: nx.Graph, h: nx.Graph) -> bool:
    """Graph isomorphism ignoring labels."""
    return bool(nx.is_isomorphic(g, h))


def to_dot(graph: nx.Graph, name: str = "link") -> str:
    """Render an undirected graph in DOT with stable node and edge order."""
    lines = [f"graph {name} {{"]
    for node in sorted(graph.nodes, key=str):
        lines.append(f'  "{node}";')
    edges = sorted((tuple(sorted((str(a), str(b)))) for a, b in graph.edges))
    for a, b in edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def fan_graph(
    rays: Sequence[IntVector], cones: Sequence[tuple[int, int]]
) -> nx.Graph:
    """Graph on ray indices with one edge per 2-dimensional cone."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(rays)))
    graph.add_edges_from(cones)
    return graph


def fan_of(X: PolyComplex) -> tuple[list[IntVector], list[tuple[int, int]]]:
    """Rays and 2-cones of a two-dimensional fan."""
    rays = sorted(X.recession_directions())
    index = {r: i for i, r in enumerate(rays)}
    cones = sorted(
        tuple(sorted((index[c.rays[0]], index[c.rays[1]])))
        for c in X.cells_of_dim(2)
        if len(c.rays) == 2
    )
    return rays, [(a, b) for a, b in cones]


def _lattice_index(rows: Sequence[IntVector]) -> int:
    snf = smith_normal_form(Matrix([list(r) for r in rows]), domain=ZZ)
    diagonal = [snf[i, i] for i in range(min(snf.shape)) if snf[i, i] != 0]
    return abs(math.prod(int(d) for d in diagonal))


def unimodular_equivalent(
    rays_a: Sequence[IntVector],
    cones_a: Sequence[tuple[int, int]],
    rays_b: Sequence[IntVector],
    cones_b: Sequence[tuple[int, int]],
) -> bool:
    """Decide whether two 2-dimensional fans agree up to a lattice isomorphism.

    A matching of rays must be a graph isomorphism of the cone graphs such
    that the rays satisfy the same rational linear relations and generate
    sublattices of the same index in their saturations.
    """
    if len(rays_a) != len(rays_b) or len(cones_a) != len(cones_b):
        return False
    ga, gb = fan_graph(rays_a, cones_a), fan_graph(rays_b, cones_b)
    index_a = _lattice_index(rays_a)
    if index_a != _lattice_index(rays_b):
        return False
    columns_a = [[r[i] for r in rays_a] for i in range(len(rays_a[0]))]
    kernel_a = nullspace(columns_a, len(rays_a))
    for mapping in GraphMatcher(ga, gb).isomorphisms_iter():
        ordered_b = [rays_b[mapping[i]] for i in range(len(rays_a))]
        columns_b = [[r[i] for r in ordered_b] for i in range(len(ordered_b[0]))]
        if len(nullspace(columns_b, len(ordered_b))) != len(kernel_a):
            continue
        if all(_is_relation(k, ordered_b) for k in kernel_a):
            return True
    return False


def _is_relation(coefficients: Sequence, rows: Sequence[IntVector]) -> bool:
    width = len(rows[0])
    return all(
        sum(c * r[i] for c, r in zip(coefficients, rows, strict=True)) == 0
        for i in range(width)
    )
