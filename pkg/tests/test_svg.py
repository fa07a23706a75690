import xml.etree.ElementTree as ET

from tropdelpezzo.svg import arrangement_svg, triangle_svg, tree_svg
from tropdelpezzo.trees import MetricTree
from tropdelpezzo.tropcurves import P1, P2, P3, P4, TropPoint2, plane_arrangement, trop_triangle

SVG = "{http://www.w3.org/2000/svg}"


def _parse(text: str) -> ET.Element:
    root = ET.fromstring(text.split("\n", 1)[1])
    assert root.tag == f"{SVG}svg"
    return root


def test_arrangement_svg_draws_every_finite_curve():
    points = [P1, P2, P3, P4, TropPoint2.finite(-2, -3)]
    curves = plane_arrangement(points)
    root = _parse(arrangement_svg(points, curves))
    groups = root.findall(f"{SVG}g")
    assert len(groups) == sum(1 for c in curves.values() if c is not None)
    assert len(root.findall(f"{SVG}circle")) == 2


def test_triangle_svg_has_cell_and_generators():
    generators = [P4, TropPoint2.finite(-2, -3), TropPoint2.finite(1, 3)]
    cell = trop_triangle(*generators)
    root = _parse(triangle_svg(cell, generators))
    assert len(root.findall(f"{SVG}circle")) == 3
    labels = [t.text for t in root.findall(f"{SVG}text")]
    assert str(cell.shape) in labels


def test_tree_svg_labels_leaves_and_lengths():
    tree = MetricTree.caterpillar([["a", "b"], ["c"], ["d", "e"]], [1, 2])
    root = _parse(tree_svg(tree, title="caterpillar"))
    labels = [t.text for t in root.findall(f"{SVG}text")]
    for leaf in ("a", "b", "c", "d", "e"):
        assert leaf in labels
    assert "1" in labels and "2" in labels
    assert root.find(f"{SVG}title").text == "caterpillar"
