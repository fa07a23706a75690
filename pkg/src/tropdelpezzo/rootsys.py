"""Root systems E6 and E7 in d-coordinates, lines, reflections and orbits.

Roots live in Z^6 (E6) or Z^7 (E7) with the invariant form
``B(x, y) = x.y - (sum x)(sum y) / 9`` under which every root has norm 2.
A line of the cubic surface is identified with the E7 root involving d7
whose d7-coefficient is +1; lines meet exactly when that form vanishes.
"""

from __future__ import annotations

import itertools
import logging
import re
from collections import deque
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import TypeVar

import networkx as nx

from tropdelpezzo.config import DEFAULT_ORBIT_CAP
from tropdelpezzo.errors import DomainError, ResourceCapError, UnsupportedError

logger = logging.getLogger(__name__)

RootVector = tuple[int, ...]
T = TypeVar("T")


def bilinear(a: Sequence[int | Fraction], b: Sequence[int | Fraction]) -> Fraction:
    """The W-invariant form on d-coordinates."""
    return Fraction(sum(x * y for x, y in zip(a, b, strict=True))) - Fraction(
        sum(a) * sum(b), 9
    )


def _unit(m: int, *indices: int, sign: int = 1) -> list[int]:
    v = [0] * m
    for i in indices:
        v[i - 1] += sign
    return v


def roots(m: int) -> list[RootVector]:
    """Positive roots of E_m in canonical order: d_i-d_j, d_i+d_j+d_k, six-sums."""
    if m not in (6, 7):
        raise UnsupportedError(f"roots are available for m = 6, 7 (got {m})")
    result: list[RootVector] = []
    for i, j in itertools.combinations(range(1, m + 1), 2):
        v = _unit(m, i)
        v[j - 1] = -1
        result.append(tuple(v))
    for triple in itertools.combinations(range(1, m + 1), 3):
        result.append(tuple(_unit(m, *triple)))
    for six in itertools.combinations(range(1, m + 1), 6):
        result.append(tuple(_unit(m, *six)))
    return result


def is_root(v: Sequence[int | Fraction]) -> bool:
    """True when `v` is a root of E6 or E7 (either sign)."""
    if len(v) not in (6, 7) or any(Fraction(x).denominator != 1 for x in v):
        return False
    ints = tuple(int(x) for x in v)
    neg = tuple(-x for x in ints)
    positive = _positive_index(len(v))
    return ints in positive or neg in positive


def positive_part(v: RootVector) -> tuple[RootVector, int]:
    """Return (positive root, sign) with ``v = sign * root``."""
    m = len(v)
    if v in _positive_index(m):
        return v, 1
    neg = tuple(-x for x in v)
    if neg in _positive_index(m):
        return neg, -1
    raise DomainError(f"{root_str(v)} is not a root")


_POSITIVE_CACHE: dict[int, dict[RootVector, int]] = {}


def _positive_index(m: int) -> dict[RootVector, int]:
    if m not in _POSITIVE_CACHE:
        _POSITIVE_CACHE[m] = {r: i for i, r in enumerate(roots(m))}
    return _POSITIVE_CACHE[m]


_TERM = re.compile(r"([+-]?)\s*d(\d)")


def parse_root(text: str, m: int | None = None) -> RootVector:
    """Parse strings such as "d1-d3" or "d1+d2+d3+d4+d5+d6+d7-d2"."""
    compact = text.replace(" ", "").replace("−", "-")
    if not compact or _TERM.sub("", compact):
        raise DomainError(f"cannot parse root {text!r}")
    terms = [(sign, int(idx)) for sign, idx in _TERM.findall(compact)]
    width = m or (7 if any(i == 7 for _, i in terms) else 6)
    v = [0] * width
    for sign, idx in terms:
        if not 1 <= idx <= width:
            raise DomainError(f"index d{idx} outside 1..{width}")
        v[idx - 1] += -1 if sign == "-" else 1
    return tuple(v)


def root_str(v: Sequence[int]) -> str:
    """Render a root as "d1+d3+d5" or "d1-d3"."""
    parts: list[str] = []
    for i, c in enumerate(v, start=1):
        token = "+" if c > 0 else "-"
        parts.extend([f"{token}d{i}"] * abs(c))
    text = "".join(sorted(parts, key=lambda t: t[0] == "-"))
    return text[1:] if text.startswith("+") else text or "0"


# --- Lines ---


class LineKind(StrEnum):
    """Families of (-1)-curves."""

    E = "E"
    F = "F"
    G = "G"
    P = "p"


_KIND_ORDER = {LineKind.E: 0, LineKind.F: 1, LineKind.G: 2, LineKind.P: 3}


@dataclass(frozen=True)
class LineLabel:
    """A (-1)-curve label in the context of a given degree."""

    kind: LineKind
    indices: tuple[int, ...]
    degree: int = 3

    def __str__(self) -> str:
        """Render as E1, F12, G2, G or p12."""
        return self.kind.value + "".join(str(i) for i in self.indices)

    def __lt__(self, other: LineLabel) -> bool:
        """Canonical order: E < F < G < p, then by indices."""
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        """Key used for canonical ordering."""
        return (self.degree, _KIND_ORDER[self.kind], self.indices)

    @classmethod
    def parse(cls, text: str, degree: int = 3) -> LineLabel:
        """Parse "E1", "F12", "G2", "G" or "p12"."""
        match = re.fullmatch(r"([EFGp])(\d*)", text.strip())
        if not match:
            raise DomainError(f"not a line label: {text!r}")
        indices = tuple(int(c) for c in match.group(2))
        label = cls(LineKind(match.group(1)), indices, degree)
        if label not in set(lines(degree)):
            raise DomainError(f"{text!r} is not a line in degree {degree}")
        return label


def E(i: int, degree: int = 3) -> LineLabel:
    """Exceptional curve over the i-th point."""
    return LineLabel(LineKind.E, (i,), degree)


def F(i: int, j: int, degree: int = 3) -> LineLabel:
    """Strict transform of the line through the i-th and j-th points."""
    a, b = sorted((i, j))
    return LineLabel(LineKind.F, (a, b), degree)


def G(j: int | None = None, degree: int = 3) -> LineLabel:
    """Conic through all points but the j-th (degree 3), or the conic (degree 4)."""
    if j is None:
        return LineLabel(LineKind.G, (), 4)
    return LineLabel(LineKind.G, (j,), degree)


def P(i: int, j: int) -> LineLabel:
    """Plucker label of a line of the degree-5 surface."""
    a, b = sorted((i, j))
    return LineLabel(LineKind.P, (a, b), 5)


def lines(d: int) -> list[LineLabel]:
    """All lines of the del Pezzo surface of degree `d`, canonically ordered."""
    if d == 3:
        return (
            [E(i) for i in range(1, 7)]
            + [F(i, j) for i, j in itertools.combinations(range(1, 7), 2)]
            + [G(j) for j in range(1, 7)]
        )
    if d == 4:
        return (
            [E(i, 4) for i in range(1, 6)]
            + [F(i, j, 4) for i, j in itertools.combinations(range(1, 6), 2)]
            + [G()]
        )
    if d == 5:
        return [P(i, j) for i, j in itertools.combinations(range(1, 6), 2)]
    raise UnsupportedError(f"degree {d} is not supported")


def plucker_label(line: LineLabel) -> LineLabel:
    """Degree-5 translation from blow-up labels (points 1..4) to p_ij."""
    if line.kind is LineKind.E:
        return P(line.indices[0], 5)
    if line.kind is LineKind.F:
        rest = sorted(set(range(1, 5)) - set(line.indices))
        return P(rest[0], rest[1])
    raise DomainError(f"{line} is not a degree-5 blow-up label")


def root_of_line(line: LineLabel) -> RootVector:
    """E7 root of a line of the cubic surface, with the printed sign."""
    if line.degree != 3:
        raise DomainError("the root dictionary is defined for cubic surfaces")
    if line.kind is LineKind.E:
        v = _unit(7, line.indices[0])
        v[6] = -1
        return tuple(v)
    if line.kind is LineKind.F:
        return tuple(_unit(7, *line.indices, 7))
    if line.kind is LineKind.G:
        v = [1] * 7
        v[line.indices[0] - 1] = 0
        return tuple(v)
    raise DomainError(f"{line} has no root")


def line_root(line: LineLabel) -> RootVector:
    """The representative with d7-coefficient +1 used for the W(E6) action."""
    v = root_of_line(line)
    return v if v[6] == 1 else tuple(-x for x in v)


def line_of_root(r: Sequence[int]) -> LineLabel:
    """Line attached to an E7 root involving d7 (either sign)."""
    v = tuple(int(x) for x in r)
    if len(v) != 7 or v[6] == 0:
        raise DomainError(f"{root_str(v)} is not a line root")
    if v[6] < 0:
        v = tuple(-x for x in v)
    support = [i + 1 for i, c in enumerate(v[:6]) if c != 0]
    coeffs = sorted(c for c in v[:6] if c != 0)
    if v[6] == 1 and coeffs == [-1]:
        return E(support[0])
    if v[6] == 1 and coeffs == [1, 1]:
        return F(support[0], support[1])
    if v[6] == 1 and coeffs == [1] * 5:
        missing = next(i for i in range(1, 7) if i not in support)
        return G(missing)
    raise DomainError(f"{root_str(v)} is not a line root")


# --- Reflections and orbits ---


@dataclass(frozen=True)
class Reflection:
    """Reflection in the hyperplane orthogonal to a root."""

    root: RootVector

    def __call__(self, v: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
        """Apply the reflection (roots shorter than `v` are padded by zeros)."""
        return reflect(self.root, v)

    def on_line(self, line: LineLabel) -> LineLabel:
        """Induced permutation of the 27 lines."""
        image = self(line_root(line))
        return line_of_root(tuple(int(x) for x in image))

    def on_root(self, r: RootVector) -> tuple[RootVector, int]:
        """Image of a root as (positive root, sign)."""
        image = tuple(int(x) for x in self(r))
        return positive_part(image)

    def permutation(self, table: Sequence[RootVector]) -> tuple[int, ...]:
        """The action on a list of signed roots, as a permutation of indices."""
        index = {r: i for i, r in enumerate(table)}
        return tuple(index[tuple(int(x) for x in self(r))] for r in table)


def reflect(r: Sequence[int], v: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
    """``v - 2 B(v, r) / B(r, r) * r`` computed exactly."""
    root = list(r) + [0] * (len(v) - len(r))
    if len(root) != len(v):
        raise DomainError("root and vector have incompatible lengths")
    norm = bilinear(root, root)
    if norm == 0:
        raise DomainError("cannot reflect in a null vector")
    c = 2 * bilinear(v, root) / norm
    result = tuple(Fraction(x) - c * y for x, y in zip(v, root, strict=True))
    return tuple(int(x) if x.denominator == 1 else x for x in result)  # type: ignore[misc]


def simple_roots(m: int) -> list[RootVector]:
    """d_i - d_{i+1} (i < 6) and -(d1+d2+d3); E7 adds d6 - d7."""
    if m not in (6, 7):
        raise UnsupportedError(f"simple roots are available for m = 6, 7 (got {m})")
    result: list[RootVector] = []
    for i in range(1, 6):
        v = _unit(m, i)
        v[i] = -1
        result.append(tuple(v))
    result.append(tuple(_unit(m, 1, 2, 3, sign=-1)))
    if m == 7:
        result.append(tuple(_unit(7, 6)[:6] + [-1]))
    return result


def weyl_generators(m: int) -> list[Reflection]:
    """Simple reflections generating W(E_m)."""
    return [Reflection(r) for r in simple_roots(m)]


def weyl_orbit(
    generators: Sequence[Callable[[T], T]],
    seed: T,
    *,
    key: Callable[[T], Hashable] | None = None,
    cap: int = DEFAULT_ORBIT_CAP,
) -> list[T]:
    """Breadth-first orbit closure, deduplicated by `key`, sorted by key.

    Raises:
        ResourceCapError: If the orbit grows beyond `cap` elements.
    """
    canon = key or (lambda x: x)  # type: ignore[assignment, return-value]
    seen: dict[Hashable, T] = {canon(seed): seed}
    frontier = deque([seed])
    while frontier:
        item = frontier.popleft()
        for g in generators:
            image = g(item)
            k = canon(image)
            if k in seen:
                continue
            seen[k] = image
            if len(seen) > cap:
                raise ResourceCapError("orbit", cap, len(seen))
            frontier.append(image)
    logger.debug("orbit of %s has %d elements", seed, len(seen))
    try:
        order = sorted(seen)  # type: ignore[type-var]
    except TypeError:
        order = sorted(seen, key=repr)
    return [seen[k] for k in order]


@dataclass(frozen=True)
class LinearMap:
    """Integer linear map given by its matrix rows."""

    rows: tuple[tuple[int, ...], ...]

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        """Apply the map."""
        return tuple(sum(a * b for a, b in zip(row, v, strict=True)) for row in self.rows)


def demicube_generators() -> list[LinearMap]:
    """W(D5) on degree vectors (h, x1..x5): adjacent swaps and the flip x4, x5 -> h - x5, h - x4."""
    maps: list[LinearMap] = []
    for i in range(1, 5):
        rows = [_unit(6, k + 1) for k in range(6)]
        rows[i], rows[i + 1] = rows[i + 1], rows[i]
        maps.append(LinearMap(tuple(tuple(r) for r in rows)))
    rows = [_unit(6, k + 1) for k in range(6)]
    rows[4] = [1, 0, 0, 0, 0, -1]
    rows[5] = [1, 0, 0, 0, -1, 0]
    maps.append(LinearMap(tuple(tuple(r) for r in rows)))
    return maps


# --- Graphs and configurations ---


def _meets(a: LineLabel, b: LineLabel) -> bool:
    ka, kb = a.kind, b.kind
    if a == b:
        return False
    if a.degree == 5:
        return not set(a.indices) & set(b.indices)
    if {ka, kb} == {LineKind.E, LineKind.F}:
        e, f = (a, b) if ka is LineKind.E else (b, a)
        return e.indices[0] in f.indices
    if ka is LineKind.F and kb is LineKind.F:
        return not set(a.indices) & set(b.indices)
    if {ka, kb} == {LineKind.E, LineKind.G}:
        e, g = (a, b) if ka is LineKind.E else (b, a)
        return a.degree == 4 or e.indices[0] != g.indices[0]
    if {ka, kb} == {LineKind.F, LineKind.G} and a.degree == 3:
        f, g = (a, b) if ka is LineKind.F else (b, a)
        return g.indices[0] in f.indices
    return False


def intersection_graph(d: int) -> nx.Graph:
    """Intersection graph of the lines of the degree-`d` surface."""
    nodes = lines(d)
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    for a, b in itertools.combinations(nodes, 2):
        if _meets(a, b):
            graph.add_edge(a, b)
    return graph


def neighbors(line: LineLabel) -> list[LineLabel]:
    """Lines meeting `line`, sorted."""
    return sorted(intersection_graph(line.degree).neighbors(line))


def tritangent_planes() -> list[tuple[LineLabel, LineLabel, LineLabel]]:
    """The 45 triples of pairwise meeting lines on a cubic surface."""
    graph = intersection_graph(3)
    triples = {
        tuple(sorted(c)) for c in nx.enumerate_all_cliques(graph) if len(c) == 3
    }
    return sorted(triples)  # type: ignore[arg-type]


def double_six(r: Sequence[int]) -> list[tuple[LineLabel, LineLabel]]:
    """The six pairs {L, s_r(L)} of lines not orthogonal to a root of E6.

    Raises:
        DomainError: If `r` is not a root of E6.
    """
    root = tuple(int(x) for x in r)
    if len(root) != 6 or not is_root(root):
        raise DomainError(f"{root_str(root)} is not a root of E6")
    reflection = Reflection(root)
    pairs: set[tuple[LineLabel, LineLabel]] = set()
    for line in lines(3):
        if bilinear(line_root(line), root + (0,)) == 0:
            continue
        pairs.add(tuple(sorted((line, reflection.on_line(line)))))  # type: ignore[arg-type]
    return sorted(pairs)


def orthogonal_lines(r: Sequence[int]) -> list[LineLabel]:
    """The 15 lines orthogonal to a root of E6."""
    root = tuple(int(x) for x in r) + (0,)
    return [line for line in lines(3) if bilinear(line_root(line), root) == 0]


def a2_subsystems() -> list[tuple[RootVector, RootVector, RootVector]]:
    """Positive A2 subsystems {a, b, a+b} of E6, each sorted."""
    positive = roots(6)
    index = set(positive)
    found: set[tuple[RootVector, ...]] = set()
    for a, b in itertools.combinations(positive, 2):
        c = tuple(x + y for x, y in zip(a, b, strict=True))
        if c in index:
            found.add(tuple(sorted((a, b, c))))
    return sorted(found)  # type: ignore[arg-type]


def a2_cubed_systems() -> list[tuple[tuple[RootVector, ...], ...]]:
    """The 40 triples of mutually orthogonal A2 subsystems of E6."""
    blocks = a2_subsystems()

    def orthogonal(x: Iterable[RootVector], y: Iterable[RootVector]) -> bool:
        return all(bilinear(a, b) == 0 for a in x for b in y)

    systems: set[tuple[tuple[RootVector, ...], ...]] = set()
    for i, first in enumerate(blocks):
        partners = [b for b in blocks[i + 1 :] if orthogonal(first, b)]
        for second, third in itertools.combinations(partners, 2):
            if orthogonal(second, third):
                systems.add(tuple(sorted((first, second, third))))
    result = sorted(systems)
    logger.debug("found %d A2^3 subsystems", len(result))
    return result


# --- Independent reference graphs ---


def schlafli_graph() -> nx.Graph:
    """Meeting graph of the 27 lines built from the Picard lattice of P2 blown up."""
    classes: dict[str, tuple[int, ...]] = {}
    for i in range(1, 7):
        classes[f"e{i}"] = tuple(int(k == i) for k in range(7))
    for i, j in itertools.combinations(range(1, 7), 2):
        classes[f"f{i}{j}"] = tuple(
            1 if k == 0 else -int(k in (i, j)) for k in range(7)
        )
    for j in range(1, 7):
        classes[f"g{j}"] = tuple(2 if k == 0 else -int(k != j) for k in range(7))

    def product(a: tuple[int, ...], b: tuple[int, ...]) -> int:
        return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:], strict=True))

    graph = nx.Graph()
    graph.add_nodes_from(classes)
    for (na, a), (nb, b) in itertools.combinations(classes.items(), 2):
        if product(a, b) == 1:
            graph.add_edge(na, nb)
    return graph


def clebsch_graph() -> nx.Graph:
    """Folded 5-cube: binary 4-tuples adjacent at Hamming distance 1 or 4."""
    graph = nx.Graph()
    words = list(itertools.product((0, 1), repeat=4))
    graph.add_nodes_from(words)
    for a, b in itertools.combinations(words, 2):
        if sum(x != y for x, y in zip(a, b, strict=True)) in (1, 4):
            graph.add_edge(a, b)
    return graph


def petersen_graph() -> nx.Graph:
    """The Petersen graph."""
    return nx.petersen_graph()
