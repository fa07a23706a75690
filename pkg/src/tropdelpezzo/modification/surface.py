"""Tropical del Pezzo surfaces: the complex, its labeled rays and boundary trees.

A line L of the surface corresponds to one primitive ray direction r_L. Its
boundary tree is the link of the point at infinity in direction r_L: every
ray with direction r_L becomes a tree vertex, every flap over a bounded edge
with recession ray r_L becomes a tree edge whose length is the lattice length
of the bounded edge modulo r_L, and every cone spanned by r_L and r_M becomes
the leaf M.
"""

from __future__ import annotations

import logging
from collections.abc import Hashable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any

from tropdelpezzo import rootsys
from tropdelpezzo.errors import LabelingError, LookupFailure, StructuralError
from tropdelpezzo.polyhedra import (
    Cell,
    PolyComplex,
    check_balanced,
    complex_from_json,
    complex_to_json,
    lattice_normal,
    stats,
)
from tropdelpezzo.polyhedra.balancing import minors2
from tropdelpezzo.rational import IntVector, Vector, sub
from tropdelpezzo.rootsys import LineLabel
from tropdelpezzo.schemas.models import CheckResult, SurfaceStats
from tropdelpezzo.trees import MetricTree, Node
from tropdelpezzo.tropcurves import TropPoint2

logger = logging.getLogger(__name__)


@dataclass
class TrackedCurve:
    """The tropicalization of a curve inside the surface it modifies.

    `step` is the number of modifications already performed, so `curve`
    lives in ambient dimension ``2 + step``.
    """

    label: LineLabel
    step: int
    curve: PolyComplex

    def is_balanced(self) -> bool:
        """True when the weighted 1-cycle is balanced."""
        return check_balanced(self.curve)[0]

    @property
    def directions(self) -> set[IntVector]:
        """Primitive directions of the unbounded ends."""
        return self.curve.recession_directions()

    def to_json(self) -> dict[str, Any]:
        """Step and embedded complex."""
        return {"step": self.step, "complex": complex_to_json(self.curve)}


def lattice_length_modulo(w: Vector, r: IntVector) -> Fraction:
    """Lattice length of the image of `w` in ``Z^n / Z r``."""
    if all(m == 0 for m in minors2(r, w)):
        return Fraction(0)
    normal = lattice_normal(r, w)
    for a, b in zip(minors2(r, w), minors2(r, normal), strict=True):
        if b != 0:
            return abs(Fraction(a) / b)
    raise StructuralError("lattice normal is parallel to the direction")  # pragma: no cover


def boundary_tree_of(
    X: PolyComplex, direction: IntVector, labels: Mapping[IntVector, LineLabel]
) -> MetricTree:
    """The metric tree at infinity of `X` in one ray direction.

    Raises:
        LabelingError: If no ray has the direction, or a cone's second ray
            carries no label.
    """
    rays = [c for c in X.cells_of_dim(1) if c.rays and c.rays[0] == direction]
    if not rays:
        raise LabelingError(f"no ray with direction {list(direction)}")
    node = {c.vertices[0]: Node(i) for i, c in enumerate(rays)}
    edges: list[tuple[Hashable, Hashable, Fraction | None]] = []
    for cell in X.cells_of_dim(2):
        if direction not in cell.rays:
            continue
        if cell.rays == (direction,):
            a, b = cell.vertices[0], cell.vertices[-1]
            edges.append((node[a], node[b], lattice_length_modulo(sub(b, a), direction)))
            continue
        other = cell.rays[1] if cell.rays[0] == direction else cell.rays[0]
        apex = cell.vertices[0] if cell.rays[0] == direction else cell.vertices[-1]
        if other not in labels:
            raise LabelingError(f"ray {list(other)} carries no line label")
        edges.append((node[apex], labels[other], None))
    return MetricTree.build(edges)


@dataclass
class DelPezzoSurface:
    """A tropical del Pezzo surface with its lines attached to ray directions."""

    degree: int
    complex: PolyComplex
    ray_labels: dict[IntVector, LineLabel]
    trees: dict[LineLabel, MetricTree] = field(default_factory=dict)
    points: tuple[TropPoint2, ...] = ()
    coordinates: tuple[LineLabel, ...] = ()
    tracked_curves: dict[LineLabel, TrackedCurve] = field(default_factory=dict)
    checks: list[CheckResult] = field(default_factory=list)

    @cached_property
    def stats(self) -> SurfaceStats:
        """Cell counters of the complex."""
        return stats(self.complex)

    @property
    def lines(self) -> list[LineLabel]:
        """The labels carried by rays, sorted."""
        return sorted(self.ray_labels.values())

    def direction(self, label: LineLabel) -> IntVector:
        """The ray direction of a line.

        Raises:
            LookupFailure: If no ray carries the label.
        """
        for direction, line in self.ray_labels.items():
            if line == label:
                return direction
        raise LookupFailure(f"no ray is labeled {label}")

    def compute_trees(self) -> None:
        """Fill `trees` with the boundary tree of every labeled line."""
        self.trees = {line: boundary_tree(self, line) for line in self.lines}

    def four_valent_trees(self) -> int:
        """Number of trees with a vertex of valence at least four."""
        return sum(1 for t in self.trees.values() if t.max_valence() >= 4)

    def to_json(self) -> dict[str, Any]:
        """The surface record: complex, labels, trees, stats and tracked curves."""
        return {
            "degree": self.degree,
            "points": [str(p) for p in self.points],
            "coordinates": [str(c) for c in self.coordinates],
            "complex": complex_to_json(self.complex),
            "ray_labels": [
                {"direction": list(d), "line": str(line)}
                for d, line in sorted(self.ray_labels.items(), key=lambda item: item[1])
            ],
            "trees": {str(line): tree.to_json() for line, tree in sorted(self.trees.items())},
            "stats": self.stats.model_dump(),
            "tracked_curves": {
                str(line): curve.to_json() for line, curve in sorted(self.tracked_curves.items())
            },
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> DelPezzoSurface:
        """Decode a surface record; trees are recomputed when absent.

        Raises:
            StructuralError: If required keys are missing.
        """
        try:
            degree = int(payload["degree"])
            complex_ = complex_from_json(payload["complex"])
            entries = payload["ray_labels"]
        except (KeyError, TypeError, ValueError) as exc:
            raise StructuralError(f"malformed surface JSON: {exc}") from exc

        def parse(text: str) -> LineLabel:
            return LineLabel.parse(text, degree)

        labels = {tuple(int(x) for x in e["direction"]): parse(e["line"]) for e in entries}
        surface = cls(degree, complex_, labels)
        trees = payload.get("trees") or {}
        if trees:
            surface.trees = {
                parse(name): MetricTree.from_json(data, parse) for name, data in trees.items()
            }
        else:
            surface.compute_trees()
        return surface


def boundary_tree(S: DelPezzoSurface, L: LineLabel) -> MetricTree:
    """The metric tree of a line: the link of its point at infinity.

    Raises:
        LabelingError: If `L` labels no ray of the surface.
    """
    try:
        direction = S.direction(L)
    except LookupFailure as exc:
        raise LabelingError(str(exc)) from exc
    return boundary_tree_of(S.complex, direction, S.ray_labels)


def check_leaf_sets(S: DelPezzoSurface) -> None:
    """Every tree's leaves must be the lines meeting its own line.

    Raises:
        LabelingError: On the first mismatch.
    """
    graph = rootsys.intersection_graph(S.degree)
    for line, tree in S.trees.items():
        expected = set(graph.neighbors(line))
        if set(tree.leaves) != expected:
            raise LabelingError(
                f"tree {line} has leaves {sorted(map(str, tree.leaves))}, "
                f"expected {sorted(map(str, expected))}"
            )


def check_cones(S: DelPezzoSurface) -> None:
    """Every cone must be spanned by the rays of two meeting lines.

    Raises:
        LabelingError: If a cone pairs non-meeting or unlabeled lines.
    """
    graph = rootsys.intersection_graph(S.degree)
    for cell in S.complex.cells_of_dim(2):
        if len(cell.rays) != 2 or len(cell.vertices) != 1:
            continue
        a, b = (S.ray_labels.get(r) for r in cell.rays)
        if a is None or b is None or not graph.has_edge(a, b):
            raise LabelingError(f"cone {[list(r) for r in cell.rays]} pairs {a} and {b}")


def flap(u: Vector, v: Vector, ray: IntVector) -> Cell:
    """The flap ``[u, v] + R>=0 ray``."""
    return Cell.make(2, [u, v], [ray])
