"""SVG pictures of plane tropical arrangements, tropical triangles and trees.

Presentation only: coordinates are converted to floats here and nowhere else.
"""

from __future__ import annotations

import math
from collections.abc import Hashable, Iterable, Mapping, Sequence

import networkx as nx

from tropdelpezzo.trees import MetricTree, is_leaf, leaf_name
from tropdelpezzo.tropcurves import PlaneCurve, TropPoint2, TropTriangleCell

_SCALE = 40.0
_PAD = 1.5
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2")

Segment = tuple[tuple[float, float], tuple[float, float]]


def _xy(v: Sequence) -> tuple[float, float]:
    return float(v[0]), float(v[1])


def _document(body: list[str], box: tuple[float, float, float, float]) -> str:
    min_x, min_y, max_x, max_y = box
    view_w = max(1.0, (max_x - min_x) * _SCALE)
    view_h = max(1.0, (max_y - min_y) * _SCALE)
    rows = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg width="{math.ceil(view_w)}" height="{math.ceil(view_h)}" '
            f'viewBox="{min_x * _SCALE:.3f} {-max_y * _SCALE:.3f} {view_w:.3f} {view_h:.3f}" '
            'fill="none" xmlns="http://www.w3.org/2000/svg">'
        ),
        *body,
        "</svg>",
    ]
    return "\n".join(rows) + "\n"


def _line(a: tuple[float, float], b: tuple[float, float], color: str, width: float) -> str:
    # y is flipped so that the picture uses the usual orientation
    return (
        f'<line x1="{a[0] * _SCALE:.3f}" y1="{-a[1] * _SCALE:.3f}" '
        f'x2="{b[0] * _SCALE:.3f}" y2="{-b[1] * _SCALE:.3f}" '
        f'stroke="{color}" stroke-width="{width:.2f}"/>'
    )


def _dot(p: tuple[float, float], label: str, color: str = "black") -> list[str]:
    x, y = p[0] * _SCALE, -p[1] * _SCALE
    return [
        f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3" fill="{color}"/>',
        f'<text x="{x + 5:.3f}" y="{y - 5:.3f}" font-size="10" fill="{color}">{label}</text>',
    ]


def _bounds(points: Iterable[tuple[float, float]]) -> tuple[float, float, float, float]:
    pts = list(points) or [(0.0, 0.0)]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return min(xs) - _PAD, min(ys) - _PAD, max(xs) + _PAD, max(ys) + _PAD


def _curve_segments(curve: PlaneCurve, reach: float) -> list[Segment]:
    segments: list[Segment] = []
    for edge in curve.edges:
        start = _xy(edge.start)
        if edge.end is not None:
            segments.append((start, _xy(edge.end)))
            continue
        dx, dy = edge.direction
        norm = math.hypot(dx, dy)
        segments.append((start, (start[0] + reach * dx / norm, start[1] + reach * dy / norm)))
    return segments


def arrangement_svg(
    points: Sequence[TropPoint2], curves: Mapping[str, PlaneCurve | None]
) -> str:
    """The finite marked points and the tropical curves through them.

    Curves at infinity (None values) are skipped; rays are cut off a fixed
    distance past the outermost vertex.
    """
    finite = [_xy(p.xy) for p in points if p.is_finite]
    anchors = list(finite)
    for curve in curves.values():
        if curve is not None:
            anchors.extend(_xy(v) for v in curve.vertices)
            anchors.extend(_xy(e.start) for e in curve.edges)
    spread = max((max(abs(x), abs(y)) for x, y in anchors), default=1.0)
    reach = spread + 2.0
    body: list[str] = []
    drawn: list[tuple[float, float]] = list(finite)
    for index, (name, curve) in enumerate(sorted(curves.items())):
        if curve is None:
            continue
        color = _PALETTE[index % len(_PALETTE)]
        body.append(f"<g><title>{name}</title>")
        for a, b in _curve_segments(curve, reach):
            body.append(_line(a, b, color, 1.5))
            drawn.extend((a, b))
        body.append("</g>")
    for point in points:
        if point.is_finite:
            body.extend(_dot(_xy(point.xy), str(point)))
    return _document(body, _bounds(drawn))


def triangle_svg(cell: TropTriangleCell, generators: Sequence[TropPoint2]) -> str:
    """The two-cell of a tropical triangle with its generators."""
    polygon = [_xy(v) for v in cell.vertices]
    generator_points = [_xy(p.xy) for p in generators if p.is_finite]
    body: list[str] = []
    if polygon:
        path = " ".join(f"{x * _SCALE:.3f},{-y * _SCALE:.3f}" for x, y in polygon)
        body.append(f'<polygon points="{path}" fill="#c6dbef" stroke="#08519c"/>')
    for p, q in zip(generator_points, generator_points[1:] + generator_points[:1], strict=True):
        body.append(_line(p, q, "#999999", 0.8))
    for index, point in enumerate(generator_points):
        body.extend(_dot(point, f"P{index + 4}"))
    body.append(f'<text x="0" y="0" font-size="11" fill="#08519c">{cell.shape}</text>')
    return _document(body, _bounds([*polygon, *generator_points]))


def _tree_layout(tree: MetricTree) -> dict[Hashable, tuple[float, float]]:
    positions: dict[Hashable, tuple[float, float]] = {}
    if not tree.internal:
        leaves = tree.leaves
        for i, leaf in enumerate(leaves):
            angle = 2 * math.pi * i / max(1, len(leaves))
            positions[leaf] = (2 * math.cos(angle), 2 * math.sin(angle))
        return positions
    layers = list(nx.bfs_layers(tree.graph, [tree.internal[0]]))
    for depth, layer in enumerate(layers):
        ordered = sorted(layer, key=lambda n: (is_leaf(n), str(n)))
        for i, node in enumerate(ordered):
            positions[node] = (i - (len(ordered) - 1) / 2, -1.5 * depth)
    return positions


def tree_svg(tree: MetricTree, title: str = "") -> str:
    """A layered drawing of a metric tree with edge lengths."""
    positions = _tree_layout(tree)
    body: list[str] = [f"<title>{title}</title>"] if title else []
    if not tree.internal:
        for leaf in tree.leaves:
            body.append(_line((0.0, 0.0), positions[leaf], "black", 1.0))
    for u, v, data in sorted(tree.graph.edges(data=True), key=lambda e: (str(e[0]), str(e[1]))):
        a, b = positions[u], positions[v]
        body.append(_line(a, b, "black", 1.0))
        if data["length"] is not None:
            mid_x, mid_y = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
            body.append(
                f'<text x="{mid_x * _SCALE + 3:.3f}" y="{-mid_y * _SCALE:.3f}" '
                f'font-size="9" fill="#555555">{data["length"]}</text>'
            )
    for node, point in positions.items():
        if is_leaf(node):
            body.extend(_dot(point, leaf_name(node), "#d62728"))
    return _document(body, _bounds([(0.0, 0.0), *positions.values()]))
