"""Picard gradings of the Cox variables and the line involutions."""

from __future__ import annotations

from tropdelpezzo import rootsys
from tropdelpezzo.coxideal.model import Term, Trinomial
from tropdelpezzo.errors import DomainError, LookupFailure
from tropdelpezzo.rootsys import LineKind, LineLabel

PicardDegree = tuple[int, ...]


def _unit(n: int, *indices: int) -> list[int]:
    v = [0] * n
    for i in indices:
        v[i] += 1
    return v


def grade(v: LineLabel, d: int) -> PicardDegree:
    """Picard degree of a Cox variable in the context of degree `d`.

    Degree 5: ``deg p_ij = e_i + e_j`` in Z^5. Degree 4: the vertex of the
    five-dimensional demicube in Z^6, with the p_ij of degree 0. Degree 3:
    the class in Pic = Z^7 with basis (line class, E1, .., E6).

    Raises:
        LookupFailure: If `v` is not a variable of the context.
    """
    kind, idx = v.kind, v.indices
    if d == 5:
        if kind is not LineKind.P:
            raise LookupFailure(f"{v} is not a variable in degree 5")
        return tuple(_unit(5, idx[0] - 1, idx[1] - 1))
    if d == 4:
        if kind is LineKind.P:
            return (0,) * 6
        if v.degree != 4:
            raise LookupFailure(f"{v} is not a variable in degree 4")
        if kind is LineKind.E:
            return tuple(_unit(6, 0, idx[0]))
        if kind is LineKind.F:
            return tuple(1 if k == 0 or k not in idx else 0 for k in range(6))
        return (1,) * 6
    if d == 3:
        if v.degree != 3 or kind is LineKind.P:
            raise LookupFailure(f"{v} is not a variable in degree 3")
        if kind is LineKind.E:
            return tuple(_unit(7, idx[0]))
        if kind is LineKind.F:
            return tuple(1 if k == 0 else -int(k in idx) for k in range(7))
        return tuple(2 if k == 0 else -int(k != idx[0]) for k in range(7))
    raise LookupFailure(f"no grading in degree {d}")


def monomial_degree(trinomial: Trinomial, term: int, d: int) -> PicardDegree:
    """Picard degree of one term's monomial."""
    width = {5: 5, 4: 6, 3: 7}[d]
    total = [0] * width
    for label, power in trinomial.terms[term].monomial:
        for k, g in enumerate(grade(label, d)):
            total[k] += power * g
    return tuple(total)


def is_homogeneous(trinomial: Trinomial, d: int) -> bool:
    """True when the three terms have equal Picard degree."""
    return len({monomial_degree(trinomial, i, d) for i in range(3)}) == 1


_ANTICANONICAL = (3, -1, -1, -1, -1, -1, -1)


def group_line(trinomial: Trinomial) -> LineLabel:
    """The line L whose class is -K minus the degree of a cubic relation."""
    degree = monomial_degree(trinomial, 0, 3)
    target = tuple(a - b for a, b in zip(_ANTICANONICAL, degree, strict=True))
    for line in rootsys.lines(3):
        if grade(line, 3) == target:
            return line
    raise LookupFailure(f"no line in degree {target}")


def tritangent_pairs(line: LineLabel) -> list[tuple[LineLabel, LineLabel]]:
    """The five pairs {a, b} with {line, a, b} a tritangent plane."""
    pairs = []
    for plane in rootsys.tritangent_planes():
        if line in plane:
            a, b = (x for x in plane if x != line)
            pairs.append((a, b))
    return sorted(pairs)


def line_involution(line: LineLabel) -> dict[LineLabel, LineLabel]:
    """The involution on the ten lines meeting `line`, from tritangent planes.

    Raises:
        DomainError: If the pairing is not a perfect matching of the neighbors.
    """
    if line.degree != 3:
        raise DomainError("the line involution is defined on cubic surfaces")
    mapping: dict[LineLabel, LineLabel] = {}
    for a, b in tritangent_pairs(line):
        mapping[a] = b
        mapping[b] = a
    if sorted(mapping) != rootsys.neighbors(line):
        raise DomainError(f"tritangent pairing of {line} is not a perfect matching")
    return mapping


def apply_involution(trinomial: Trinomial, mapping: dict[LineLabel, LineLabel]) -> Trinomial:
    """Substitute variables through a pairing of lines (coefficients unchanged)."""
    terms = tuple(
        Term.make(
            t.sign,
            t.coefficient,
            [(mapping.get(label, label), power) for label, power in t.monomial],
        )
        for t in trinomial.terms
    )
    return Trinomial(trinomial.group, terms).canonical()  # type: ignore[arg-type]
