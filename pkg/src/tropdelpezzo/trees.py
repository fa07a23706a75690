"""Leaf-labeled metric trees and the identities they satisfy on del Pezzo surfaces.

Leaves sit at infinity: only internal edges carry lengths. Trees are stored as
`networkx` graphs whose internal vertices are `Node` objects and whose leaves
are their labels (line labels, strings, or label pairs after a quotient).
"""

from __future__ import annotations

import itertools
import logging
import re
from collections.abc import Callable, Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Any

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from tropdelpezzo import rootsys
from tropdelpezzo.coxideal import line_involution
from tropdelpezzo.errors import (
    ConsistencyError,
    DomainError,
    LabelingError,
    NonGenericError,
    StructuralError,
)
from tropdelpezzo.rational import format_rational, parse_rational
from tropdelpezzo.rootsys import LineKind, LineLabel

logger = logging.getLogger(__name__)

Leaf = Hashable
Distances = Mapping[tuple[Leaf, Leaf], Fraction]


@dataclass(frozen=True, order=True)
class Node:
    """An internal vertex."""

    index: int

    def __str__(self) -> str:
        return f"#{self.index}"


def is_leaf(node: Hashable) -> bool:
    """True for leaf vertices."""
    return not isinstance(node, Node)


def leaf_name(leaf: Leaf) -> str:
    """Display name of a leaf; label pairs render as ``a|b``."""
    if isinstance(leaf, tuple):
        return "|".join(str(x) for x in leaf)
    return str(leaf)


@dataclass
class MetricTree:
    """A tree whose leaves are labeled and whose internal edges have lengths."""

    graph: nx.Graph

    # --- construction ---

    @classmethod
    def build(cls, edges: Iterable[tuple[Hashable, Hashable, Fraction | int | None]]) -> MetricTree:
        """Build from ``(u, v, length)`` triples; leaf edges drop their length.

        Raises:
            StructuralError: If the result is not a valid metric tree.
        """
        graph = nx.Graph()
        for u, v, length in edges:
            internal = not is_leaf(u) and not is_leaf(v)
            if internal and length is None:
                raise StructuralError(f"internal edge {u}-{v} needs a length")
            graph.add_edge(u, v, length=Fraction(length) if internal else None)
        tree = cls(graph).normalized()
        tree.validate()
        return tree

    @classmethod
    def star(cls, leaves: Iterable[Leaf]) -> MetricTree:
        """The tree with a single internal vertex."""
        hub = Node(0)
        return cls.build((hub, leaf, None) for leaf in leaves)

    @classmethod
    def caterpillar(
        cls, groups: Sequence[Sequence[Leaf]], lengths: Sequence[Fraction | int]
    ) -> MetricTree:
        """A caterpillar: group ``i`` hangs at spine vertex ``i``.

        `lengths` has one entry per spine edge.
        """
        if len(lengths) != len(groups) - 1:
            raise DomainError("a caterpillar needs one length per spine edge")
        edges: list[tuple[Hashable, Hashable, Fraction | int | None]] = []
        for i, group in enumerate(groups):
            edges.extend((Node(i), leaf, None) for leaf in group)
        for i, length in enumerate(lengths):
            edges.append((Node(i), Node(i + 1), length))
        return cls.build(edges)

    def copy(self) -> MetricTree:
        """Independent copy."""
        return MetricTree(self.graph.copy())

    # --- structure ---

    @property
    def leaves(self) -> list[Leaf]:
        """Leaf labels in display order."""
        return sorted((n for n in self.graph if is_leaf(n)), key=leaf_name)

    @property
    def internal(self) -> list[Node]:
        """Internal vertices."""
        return sorted(n for n in self.graph if not is_leaf(n))

    def internal_edges(self) -> list[tuple[Node, Node, Fraction]]:
        """Bounded edges with their lengths."""
        return sorted(
            (min(u, v), max(u, v), data["length"])
            for u, v, data in self.graph.edges(data=True)
            if not is_leaf(u) and not is_leaf(v)
        )

    def valences(self) -> dict[Node, int]:
        """Degree of every internal vertex."""
        return {n: self.graph.degree[n] for n in self.internal}

    def max_valence(self) -> int:
        """Largest internal degree (0 for a tree without internal vertices)."""
        return max(self.valences().values(), default=0)

    def is_trivalent(self) -> bool:
        """True when every internal vertex has degree three."""
        return all(d == 3 for d in self.valences().values())

    def total_length(self) -> Fraction:
        """Sum of the internal edge lengths."""
        return sum((length for _, _, length in self.internal_edges()), Fraction(0))

    def splits(self) -> dict[frozenset[Leaf], Fraction]:
        """Internal edges keyed by the leaf set on the side without the first leaf."""
        leaves = self.leaves
        if not leaves:
            return {}
        first = leaves[0]
        result: dict[frozenset[Leaf], Fraction] = {}
        for u, v, length in self.internal_edges():
            g = self.graph.copy()
            g.remove_edge(u, v)
            side = frozenset(x for x in nx.node_connected_component(g, v) if is_leaf(x))
            if first in side:
                side = frozenset(leaves) - side
            result[side] = length
        return result

    def validate(self) -> None:
        """Check acyclicity, degrees and lengths."""
        if self.graph.number_of_nodes() and not nx.is_tree(self.graph):
            raise StructuralError("metric trees must be connected and acyclic")
        many = len(self.leaves) >= 3
        for node, degree in self.valences().items():
            if many and degree < 3:
                raise StructuralError(f"internal vertex {node} has degree {degree}")
        for u, v, length in self.internal_edges():
            if length <= 0:
                raise StructuralError(f"edge {u}-{v} has non-positive length {length}")

    def normalized(self) -> MetricTree:
        """Prune dead ends, contract zero edges, suppress degree-two vertices."""
        g = self.graph.copy()
        changed = True
        while changed:
            changed = False
            for node in list(g):
                if is_leaf(node) or node not in g:
                    continue
                degree = g.degree[node]
                if degree <= 1 and g.number_of_nodes() > 1:
                    g.remove_node(node)
                    changed = True
                    continue
                zero = [
                    w
                    for w in g.neighbors(node)
                    if not is_leaf(w) and g.edges[node, w]["length"] == 0
                ]
                if zero:
                    _merge_into(g, zero[0], node)
                    changed = True
                    continue
                if degree == 2:
                    a, b = g.neighbors(node)
                    if is_leaf(a) and is_leaf(b):
                        continue
                    la, lb = g.edges[node, a]["length"], g.edges[node, b]["length"]
                    length = None if is_leaf(a) or is_leaf(b) else la + lb
                    g.remove_node(node)
                    g.add_edge(a, b, length=length)
                    changed = True
        return MetricTree(_renumber(g))

    # --- metric ---

    def distance(self, a: Leaf, b: Leaf) -> Fraction:
        """Internal length of the path between two leaves."""
        path = nx.shortest_path(self.graph, a, b)
        total = Fraction(0)
        for u, v in itertools.pairwise(path):
            length = self.graph.edges[u, v]["length"]
            if length is not None:
                total += length
        return total

    def relabel(self, mapping: Mapping[Leaf, Leaf]) -> MetricTree:
        """Rename leaves; labels missing from `mapping` stay."""
        renamed = {leaf: mapping.get(leaf, leaf) for leaf in self.leaves}
        if len(set(renamed.values())) != len(renamed):
            raise DomainError("relabeling must be injective on leaves")
        return MetricTree(nx.relabel_nodes(self.graph, renamed, copy=True))

    # --- formats ---

    def to_json(self) -> dict[str, Any]:
        """Leaves and edges with lengths as "p/q" strings."""
        return {
            "leaves": [leaf_name(x) for x in self.leaves],
            "edges": sorted(
                [
                    _node_name(u),
                    _node_name(v),
                    None if data["length"] is None else format_rational(data["length"]),
                ]
                for u, v, data in self.graph.edges(data=True)
            ),
            "newick": self.to_newick(),
        }

    @classmethod
    def from_json(
        cls, payload: Mapping[str, Any], parse_label: Callable[[str], Leaf] = str
    ) -> MetricTree:
        """Inverse of `to_json`."""

        def node(name: str) -> Hashable:
            if name.startswith("#"):
                return Node(int(name[1:]))
            return parse_label(name)

        return cls.build(
            (node(u), node(v), None if length is None else parse_rational(length))
            for u, v, length in payload["edges"]
        )

    def to_newick(self) -> str:
        """Newick text rooted at the internal vertex next to the first leaf."""
        if not self.internal:
            return "(" + ",".join(leaf_name(x) for x in self.leaves) + ");"
        root = next(iter(self.graph.neighbors(self.leaves[0])))

        def render(node: Hashable, parent: Hashable | None) -> str:
            if is_leaf(node):
                return leaf_name(node)
            children = sorted(
                (c for c in self.graph.neighbors(node) if c != parent), key=_child_key
            )
            parts = []
            for child in children:
                text = render(child, node)
                length = self.graph.edges[node, child]["length"]
                if length is not None:
                    text += ":" + format_rational(length)
                parts.append(text)
            return "(" + ",".join(parts) + ")"

        return render(root, None) + ";"

    def to_dot(self, name: str = "tree") -> str:
        """Graphviz text with edge lengths as labels."""
        lines = [f"graph {name} {{"]
        for node in sorted(self.graph, key=_node_name):
            shape = "plaintext" if is_leaf(node) else "point"
            lines.append(f'  "{_node_name(node)}" [shape={shape}];')
        for u, v, data in sorted(
            self.graph.edges(data=True), key=lambda e: (_node_name(e[0]), _node_name(e[1]))
        ):
            label = "" if data["length"] is None else f' [label="{format_rational(data["length"])}"]'
            lines.append(f'  "{_node_name(u)}" -- "{_node_name(v)}"{label};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _node_name(node: Hashable) -> str:
    return str(node) if isinstance(node, Node) else leaf_name(node)


def _child_key(node: Hashable) -> tuple[int, str]:
    return (0, leaf_name(node)) if is_leaf(node) else (1, str(node))


def _merge_into(g: nx.Graph, source: Node, target: Node) -> None:
    for w in list(g.neighbors(source)):
        if w != target:
            g.add_edge(target, w, length=g.edges[source, w]["length"])
    g.remove_node(source)


def _renumber(g: nx.Graph) -> nx.Graph:
    leaves = sorted((n for n in g if is_leaf(n)), key=leaf_name)
    if not leaves:
        return g
    order: dict[Node, Node] = {}
    for node in nx.bfs_tree(g, leaves[0]):
        if not is_leaf(node):
            order[node] = Node(len(order))
    return nx.relabel_nodes(g, order, copy=True)


_NEWICK_TOKEN = re.compile(r"\s*([(),;:])\s*|([^(),;:]+)")


def from_newick(text: str, parse_label: Callable[[str], Leaf] = str) -> MetricTree:
    """Parse the Newick dialect written by `MetricTree.to_newick`."""
    tokens = [m.group(1) or m.group(2).strip() for m in _NEWICK_TOKEN.finditer(text)]
    edges: list[tuple[Hashable, Hashable, Fraction | None]] = []
    counter = itertools.count()
    position = 0

    def parse_node() -> Hashable:
        nonlocal position
        if tokens[position] != "(":
            label = parse_label(tokens[position])
            position += 1
            return label
        position += 1
        node = Node(next(counter))
        while True:
            child = parse_node()
            length = None
            if tokens[position] == ":":
                length = parse_rational(tokens[position + 1])
                position += 2
            edges.append((node, child, length))
            if tokens[position] == ",":
                position += 1
                continue
            if tokens[position] == ")":
                position += 1
                return node
            raise DomainError(f"unexpected token {tokens[position]!r} in Newick text")

    try:
        parse_node()
    except IndexError as exc:
        raise DomainError("truncated Newick text") from exc
    return MetricTree.build(edges)


# --- comparisons ---


def _labeled(tree: MetricTree, labels: bool) -> nx.Graph:
    g = tree.graph.copy()
    for node in g:
        g.nodes[node]["label"] = node if labels and is_leaf(node) else None
        g.nodes[node]["leaf"] = is_leaf(node)
    return g


def isomorphic(
    t1: MetricTree, t2: MetricTree, *, metric: bool = True, labels: bool = True
) -> bool:
    """Isomorphism preserving leaf labels and, optionally, edge lengths."""
    edge_match = (lambda a, b: a["length"] == b["length"]) if metric else None
    return nx.is_isomorphic(
        _labeled(t1, labels),
        _labeled(t2, labels),
        node_match=lambda a, b: a["leaf"] == b["leaf"] and a["label"] == b["label"],
        edge_match=edge_match,
    )


def leaf_distance_matrix(tree: MetricTree) -> dict[tuple[Leaf, Leaf], Fraction]:
    """Distances between all ordered pairs of distinct leaves."""
    leaves = tree.leaves
    table: dict[tuple[Leaf, Leaf], Fraction] = {}
    for a, b in itertools.combinations(leaves, 2):
        d = tree.distance(a, b)
        table[a, b] = d
        table[b, a] = d
    return table


def four_point_condition(distances: Distances, leaves: Sequence[Leaf]) -> bool:
    """True when the two largest of the three pair sums agree for every quartet."""
    for a, b, c, d in itertools.combinations(leaves, 4):
        sums = sorted(
            (
                distances[a, b] + distances[c, d],
                distances[a, c] + distances[b, d],
                distances[a, d] + distances[b, c],
            )
        )
        if sums[1] != sums[2]:
            return False
    return True


def from_distance_matrix(distances: Distances, leaves: Sequence[Leaf]) -> MetricTree:
    """Reconstruct the metric tree of a tree metric on leaves at infinity.

    Raises:
        DomainError: If fewer than two leaves are given or the metric is not a
            tree metric.
    """
    order = list(leaves)
    if len(order) < 2:
        raise DomainError("reconstruction needs at least two leaves")
    if not four_point_condition(distances, order):
        raise DomainError("distances violate the four-point condition")
    g = nx.Graph()
    fresh = itertools.count(10_000)
    a = order[0]
    g.add_edge(a, order[1], length=distances[a, order[1]])
    placed = [a, order[1]]
    for c in order[2:]:
        pendant, target = min(
            (((distances[a, c] + distances[x, c] - distances[a, x]) / 2, x) for x in placed[1:]),
            key=lambda item: item[0],
        )
        offset = distances[a, c] - pendant
        anchor = _point_on_path(g, a, target, offset, fresh)
        g.add_edge(anchor, c, length=pendant)
        placed.append(c)
    for leaf in placed:
        if g.degree[leaf] > 1:
            hub = Node(next(fresh))
            _merge_into_leaf_hub(g, leaf, hub)
    for u, v in g.edges:
        if is_leaf(u) or is_leaf(v):
            g.edges[u, v]["length"] = None
    tree = MetricTree(g).normalized()
    tree.validate()
    return tree


def _point_on_path(
    g: nx.Graph, start: Hashable, end: Hashable, offset: Fraction, fresh: Iterable[int]
) -> Hashable:
    path = nx.shortest_path(g, start, end)
    walked = Fraction(0)
    for u, v in itertools.pairwise(path):
        if walked == offset:
            return u
        length = g.edges[u, v]["length"]
        if walked + length > offset:
            middle = Node(next(iter(fresh)))
            g.remove_edge(u, v)
            g.add_edge(u, middle, length=offset - walked)
            g.add_edge(middle, v, length=walked + length - offset)
            return middle
        walked += length
    return end


def _merge_into_leaf_hub(g: nx.Graph, leaf: Hashable, hub: Node) -> None:
    for w in list(g.neighbors(leaf)):
        g.add_edge(hub, w, length=g.edges[leaf, w]["length"])
        g.remove_edge(leaf, w)
    g.add_edge(hub, leaf, length=Fraction(0))


def quartet_topology(tree: MetricTree, quartet: Sequence[Leaf]) -> frozenset[frozenset[Leaf]] | None:
    """The split ``ab|cd`` displayed by four leaves, or None for a star quartet."""
    a, b, c, d = quartet
    pairings = (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c)))
    sums = [tree.distance(*p) + tree.distance(*q) for p, q in pairings]
    low = min(sums)
    if sums.count(low) > 1 or max(sums) == low:
        return None
    p, q = pairings[sums.index(low)]
    return frozenset((frozenset(p), frozenset(q)))


def quartet_check(tree: MetricTree, reference: MetricTree, common: Iterable[Leaf] | None = None) -> bool:
    """True when both trees display the same quartets on their common leaves."""
    shared = sorted(set(common) if common is not None else set(tree.leaves) & set(reference.leaves), key=leaf_name)
    for quartet in itertools.combinations(shared, 4):
        if quartet_topology(tree, quartet) != quartet_topology(reference, quartet):
            return False
    return True


# --- restriction, involutions and quotients ---


def restrict(tree: MetricTree, subset: Iterable[Leaf]) -> MetricTree:
    """The subtree spanned by a leaf subset, degree-two vertices suppressed.

    Raises:
        DomainError: If fewer than two leaves are kept or a label is unknown.
    """
    keep = set(subset)
    if len(keep) < 2:
        raise DomainError("restriction needs at least two leaves")
    if not keep <= set(tree.leaves):
        raise DomainError("restriction to labels that are not leaves")
    g = tree.graph.copy()
    g.remove_nodes_from([x for x in tree.leaves if x not in keep])
    result = MetricTree(g).normalized()
    result.validate()
    return result


def _check_leaves(tree: MetricTree, line: LineLabel) -> None:
    if set(tree.leaves) != set(rootsys.neighbors(line)):
        raise LabelingError(f"leaves of the tree do not match the neighbors of {line}")


def involution_automorphism(tree: MetricTree, line: LineLabel) -> dict[Hashable, Hashable] | None:
    """An isometry of `tree` extending the tritangent involution of `line`."""
    _check_leaves(tree, line)
    mapping = line_involution(line)
    swapped = tree.relabel(mapping)
    matcher = GraphMatcher(
        _labeled(tree, True),
        _labeled(swapped, True),
        node_match=lambda a, b: a["leaf"] == b["leaf"] and a["label"] == b["label"],
        edge_match=lambda a, b: a["length"] == b["length"],
    )
    for iso in matcher.isomorphisms_iter():
        return {n: mapping[m] if is_leaf(m) else m for n, m in iso.items()}
    return None


def involution_check(tree: MetricTree, line: LineLabel) -> bool:
    """True iff the line's involution extends to a metric automorphism of the tree.

    Raises:
        LabelingError: If the leaves are not the neighbors of `line`.
    """
    return involution_automorphism(tree, line) is not None


def quotient_5leaf(tree: MetricTree, line: LineLabel) -> MetricTree:
    """Quotient of a 10-leaf tree by the involution; leaves become label pairs.

    Raises:
        DomainError: If the involution does not act on the tree.
        ConsistencyError: If the double cover violates the local
            Riemann-Hurwitz inequality.
    """
    phi = involution_automorphism(tree, line)
    if phi is None:
        raise DomainError(f"the involution of {line} is not an automorphism of the tree")
    g = tree.graph.copy()
    fresh = itertools.count(len(tree.internal))
    for u, v, data in list(g.edges(data=True)):
        if phi[u] == v and phi[v] == u:
            middle = Node(10_000 + next(fresh))
            half = data["length"] / 2
            g.remove_edge(u, v)
            g.add_edge(u, middle, length=half)
            g.add_edge(middle, v, length=half)
            phi[middle] = middle

    def orbit(node: Hashable) -> Hashable:
        if is_leaf(node):
            return tuple(sorted((node, phi[node]), key=leaf_name))
        return min(node, phi[node])

    q = nx.Graph()
    for u, v, data in g.edges(data=True):
        length = data["length"]
        if length is not None and phi[u] == u and phi[v] == v:
            # pointwise fixed edges double in the quotient metric
            length = 2 * length
        q.add_edge(orbit(u), orbit(v), length=length)
    for node in g:
        if is_leaf(node):
            continue
        local = 2 if phi[node] == node else 1
        if g.degree[node] - local * (q.degree[orbit(node)] - 2) - 2 < 0:
            raise ConsistencyError(f"Riemann-Hurwitz fails at a vertex of the tree of {line}")
    for u, v in q.edges:
        if is_leaf(u) or is_leaf(v):
            q.edges[u, v]["length"] = None
    result = MetricTree(q).normalized()
    result.validate()
    return result


def restriction_identity(tree: MetricTree, line: LineLabel, other: MetricTree, other_line: LineLabel) -> bool:
    """For disjoint lines: the quotient of one tree equals the other restricted.

    The quotient's pair labels are renamed by their member meeting `other_line`.
    """
    common = set(rootsys.neighbors(line)) & set(rootsys.neighbors(other_line))
    quotient = quotient_5leaf(tree, line)
    renaming: dict[Leaf, Leaf] = {}
    for pair in quotient.leaves:
        members = [x for x in pair if x in common]  # type: ignore[union-attr]
        if len(members) != 1:
            raise LabelingError(f"pair {leaf_name(pair)} does not meet {other_line} once")
        renaming[pair] = members[0]
    return isomorphic(quotient.relabel(renaming), restrict(other, common))


# --- degree four relabeling ---


def relabel_d4(tree_g: MetricTree, target: LineLabel) -> MetricTree:
    """The tree of `target` obtained from the tree of the conic by relabeling.

    Raises:
        DomainError: If the conic tree's leaves are not E1..E5 or the target
            is not a line of the degree-four surface.
    """
    es = [rootsys.E(i, 4) for i in range(1, 6)]
    if set(tree_g.leaves) != set(es):
        raise DomainError("the conic tree must have leaves E1..E5")
    if target.degree != 4 or target not in set(rootsys.lines(4)):
        raise DomainError(f"{target} is not a line of the degree-four surface")
    if target.kind is LineKind.G:
        return tree_g.copy()
    if target.kind is LineKind.E:
        i = target.indices[0]
        mapping = {
            rootsys.E(j, 4): rootsys.G() if j == i else rootsys.F(i, j, 4) for j in range(1, 6)
        }
        return tree_g.relabel(mapping)
    i, j = target.indices
    k, l, m = sorted(set(range(1, 6)) - {i, j})
    mapping = {
        rootsys.E(i, 4): rootsys.E(j, 4),
        rootsys.E(j, 4): rootsys.E(i, 4),
        rootsys.E(k, 4): rootsys.F(l, m, 4),
        rootsys.E(l, 4): rootsys.F(k, m, 4),
        rootsys.E(m, 4): rootsys.F(k, l, 4),
    }
    return tree_g.relabel(mapping)


# --- arrangements ---


class ArrangementType(StrEnum):
    """Valence pattern of the 27 trees of a cubic surface."""

    ALL_TRIVALENT = "all_trivalent"
    THREE_FOURVALENT = "three_fourvalent"
    DEGENERATE = "degenerate"


def classify_arrangement(trees: Mapping[LineLabel, MetricTree] | Sequence[MetricTree]) -> ArrangementType:
    """Count trees with a vertex of valence at least four.

    Raises:
        StructuralError: If the family does not have 27 trees.
    """
    family = list(trees.values()) if isinstance(trees, Mapping) else list(trees)
    if len(family) != 27:
        raise StructuralError(f"expected 27 trees, got {len(family)}")
    valences = [t.max_valence() for t in family]
    high = [v for v in valences if v >= 4]
    if not high:
        return ArrangementType.ALL_TRIVALENT
    if len(high) == 3 and all(v == 4 for v in high):
        return ArrangementType.THREE_FOURVALENT
    return ArrangementType.DEGENERATE


# --- completing a line tree from its visible part ---


def _attachment(
    d: Callable[[Leaf, Leaf], Fraction], anchors: Sequence[Leaf], x: Leaf
) -> tuple[tuple[Leaf, Leaf, Fraction], Fraction]:
    """Foot point of `x` on the span of `anchors` as (a, b, offset), and the gap."""
    best: tuple[tuple[Leaf, Leaf, Fraction], Fraction] | None = None
    for a, b in itertools.combinations(anchors, 2):
        gap = (d(x, a) + d(x, b) - d(a, b)) / 2
        if best is None or gap < best[1]:
            best = ((a, b, d(x, a) - gap), gap)
    assert best is not None
    return best


def _point_to_leaf(
    d: Callable[[Leaf, Leaf], Fraction], point: tuple[Leaf, Leaf, Fraction], z: Leaf
) -> Fraction:
    a, b, t = point
    branch = (d(a, z) + d(a, b) - d(b, z)) / 2
    if t <= branch:
        return d(a, z) - t
    return d(a, z) - 2 * branch + t


def _point_distance(
    d: Callable[[Leaf, Leaf], Fraction],
    p: tuple[Leaf, Leaf, Fraction],
    q: tuple[Leaf, Leaf, Fraction],
) -> Fraction:
    c, e, u = q
    length = d(c, e)
    pc, pe = _point_to_leaf(d, p, c), _point_to_leaf(d, p, e)
    foot = (pc - pe + length) / 2
    return (pc + pe - length) / 2 + abs(u - foot)


def complete_line_tree(partial: MetricTree, pairs: Mapping[Leaf, Leaf]) -> MetricTree:
    """Insert the leaves missing from `partial` using the involution `pairs`.

    `pairs` is the full involution on the ten leaves. Each missing leaf must be
    paired with a visible one; missing leaves are placed at the mirror image
    of their partners, hanging off the involution-invariant core.

    Raises:
        NonGenericError: If the visible pairs cannot anchor the involution or
            the completed tree is not symmetric.
    """
    involution = dict(pairs)
    for a, b in list(involution.items()):
        involution.setdefault(b, a)
    known = list(partial.leaves)
    known_set = set(known)
    missing = sorted({x for x in involution if x not in known_set}, key=leaf_name)
    if not missing:
        return partial.copy()
    for m in missing:
        if involution[m] not in known_set:
            raise NonGenericError(f"{leaf_name(m)} is paired with another missing leaf")
    anchors = [x for x in known if involution.get(x) in known_set]
    if len(anchors) < 2:
        raise NonGenericError("too few visible pairs to anchor the involution")
    base = leaf_distance_matrix(partial)

    def dk(a: Leaf, b: Leaf) -> Fraction:
        return Fraction(0) if a == b else base[a, b]

    def mirror(point: tuple[Leaf, Leaf, Fraction]) -> tuple[Leaf, Leaf, Fraction]:
        a, b, t = point
        return involution[a], involution[b], t

    feet = {x: _attachment(dk, anchors, x) for x in known if x not in anchors}
    full: dict[tuple[Leaf, Leaf], Fraction] = dict(base)

    def put(a: Leaf, b: Leaf, value: Fraction) -> None:
        full[a, b] = value
        full[b, a] = value

    for i, m in enumerate(missing):
        k = involution[m]
        for a in anchors:
            put(m, a, dk(k, involution[a]))
        for other in missing[i + 1 :]:
            put(m, other, dk(k, involution[other]))
        foot, gap = feet[k]
        image = mirror(foot)
        for x, (x_foot, x_gap) in feet.items():
            put(m, x, gap + _point_distance(dk, image, x_foot) + x_gap)
    tree = from_distance_matrix(full, known + missing)
    mapping = {leaf: involution[leaf] for leaf in tree.leaves}
    if not isomorphic(tree, tree.relabel(mapping)):
        raise NonGenericError("the involution is inconsistent with the visible metric")
    logger.debug("completed a tree with %d missing leaves", len(missing))
    return tree
