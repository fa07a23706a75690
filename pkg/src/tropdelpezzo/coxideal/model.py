"""Trinomials with formal root-product coefficients."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from tropdelpezzo.errors import DomainError, LookupFailure, StructuralError
from tropdelpezzo.rootsys import (
    LineKind,
    LineLabel,
    Reflection,
    RootVector,
    parse_root,
    positive_part,
    root_str,
)

Monomial = tuple[tuple[LineLabel, int], ...]

_VARIABLE = re.compile(r"([EFGp]\d*)(?:\^(\d+))?")


def _monomial(factors: Iterable[tuple[LineLabel, int]]) -> Monomial:
    exponents: dict[LineLabel, int] = {}
    for label, power in factors:
        exponents[label] = exponents.get(label, 0) + power
    return tuple(sorted(exponents.items(), key=lambda item: item[0].sort_key()))


@dataclass(frozen=True)
class Term:
    """``sign * prod(coefficient roots) * monomial``.

    Coefficient roots are stored as positive roots; their signs are folded
    into `sign`.
    """

    sign: int
    coefficient: tuple[RootVector, ...]
    monomial: Monomial

    @classmethod
    def make(
        cls, sign: int, roots: Iterable[RootVector], factors: Iterable[tuple[LineLabel, int]]
    ) -> Term:
        """Normalize root signs into the term sign."""
        positive: list[RootVector] = []
        for root in roots:
            base, s = positive_part(root)
            sign *= s
            positive.append(base)
        return cls(sign, tuple(sorted(positive)), _monomial(factors))

    @property
    def variables(self) -> tuple[LineLabel, ...]:
        """Variables appearing with positive exponent."""
        return tuple(label for label, _ in self.monomial)

    def coefficient_str(self) -> str:
        """Coefficient as "(d3-d4)(d1+d3+d4)" (empty for 1)."""
        return "".join(f"({root_str(r)})" for r in self.coefficient)

    def monomial_str(self) -> str:
        """Monomial as "E2 F12" or "p12^2"."""
        return " ".join(
            str(label) if power == 1 else f"{label}^{power}" for label, power in self.monomial
        )

    def body(self) -> str:
        """Coefficient and monomial without the sign."""
        return " ".join(part for part in (self.coefficient_str(), self.monomial_str()) if part)

    def unsigned_key(self) -> tuple[object, ...]:
        """Identity of the term ignoring its sign."""
        return (tuple((lbl.sort_key(), p) for lbl, p in self.monomial), self.coefficient)


@dataclass(frozen=True)
class Trinomial:
    """Exactly three signed terms, tagged with the group they belong to."""

    group: str
    terms: tuple[Term, Term, Term]

    def __post_init__(self) -> None:
        if len(self.terms) != 3:
            raise StructuralError(f"a trinomial has three terms, got {len(self.terms)}")

    def __str__(self) -> str:
        """Render as "p12 p34 - p13 p24 + p14 p23"."""
        pieces: list[str] = []
        for i, term in enumerate(self.terms):
            if i == 0:
                pieces.append(term.body() if term.sign > 0 else f"-{term.body()}")
            else:
                pieces.append(("+ " if term.sign > 0 else "- ") + term.body())
        return " ".join(pieces)

    @property
    def variables(self) -> frozenset[LineLabel]:
        """All variables of the trinomial."""
        return frozenset(v for term in self.terms for v in term.variables)

    def canonical(self) -> Trinomial:
        """Terms sorted by monomial, the first carrying a plus sign."""
        ordered = sorted(self.terms, key=Term.unsigned_key)
        flip = -1 if ordered[0].sign < 0 else 1
        return Trinomial(
            self.group,
            tuple(Term(flip * t.sign, t.coefficient, t.monomial) for t in ordered),  # type: ignore[arg-type]
        )

    def key(self) -> tuple[object, ...]:
        """Sign-free identity used to deduplicate orbits."""
        return tuple(sorted(t.unsigned_key() for t in self.terms))

    def act(self, reflection: Reflection, group: str | None = None) -> Trinomial:
        """Apply a reflection of W(E6) to roots and line variables together."""
        terms = []
        for term in self.terms:
            sign = term.sign
            roots: list[RootVector] = []
            for root in term.coefficient:
                image, s = reflection.on_root(root)
                sign *= s
                roots.append(image)
            factors = [
                (label if label.kind is LineKind.P else reflection.on_line(label), power)
                for label, power in term.monomial
            ]
            terms.append(Term.make(sign, roots, factors))
        return Trinomial(group or self.group, tuple(terms)).canonical()  # type: ignore[arg-type]

    def to_json(self) -> dict[str, object]:
        """Serialize with human-readable coefficient strings."""
        return {
            "group": self.group,
            "terms": [
                {
                    "sign": "+" if t.sign > 0 else "-",
                    "coefficient": t.coefficient_str(),
                    "monomial": t.monomial_str(),
                }
                for t in self.terms
            ],
        }


_SPLIT = re.compile(r"\s*([+-])\s*")


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Split on top-level + and - (outside parentheses)."""
    pieces: list[tuple[int, str]] = []
    depth = 0
    sign = 1
    current: list[str] = []
    for ch in text.replace("−", "-").strip():
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-":
            if "".join(current).strip():
                pieces.append((sign, "".join(current).strip()))
                current = []
                sign = 1 if ch == "+" else -1
            else:
                sign *= 1 if ch == "+" else -1
            continue
        current.append(ch)
    if "".join(current).strip():
        pieces.append((sign, "".join(current).strip()))
    return pieces


def parse_trinomial(text: str, degree: int, group: str = "") -> Trinomial:
    """Parse "(d3-d4)(d1+d3+d4) E2 F12 - ..." in the variable context of `degree`.

    Plücker variables p_ij are always read as degree-5 labels.

    Raises:
        DomainError: If a factor cannot be parsed or the term count is not three.
    """
    terms: list[Term] = []
    for sign, body in _split_terms(text):
        roots = [parse_root(inner, 6) for inner in re.findall(r"\(([^()]*)\)", body)]
        rest = re.sub(r"\([^()]*\)", " ", body)
        factors: list[tuple[LineLabel, int]] = []
        for token in rest.replace("*", " ").split():
            for match in _VARIABLE.finditer(token):
                name, power = match.group(1), int(match.group(2) or 1)
                context = 5 if name.startswith("p") else degree
                factors.append((LineLabel.parse(name, context), power))
            if _VARIABLE.sub("", token):
                raise DomainError(f"cannot parse factor {token!r}")
        terms.append(Term.make(sign, roots, factors))
    if len(terms) != 3:
        raise DomainError(f"expected three terms in {text!r}")
    return Trinomial(group, tuple(terms))  # type: ignore[arg-type]


def term_values(
    T: Trinomial,
    w: Mapping[LineLabel, Fraction | int],
    dval: Mapping[RootVector, Fraction | int] | None = None,
) -> tuple[Fraction, Fraction, Fraction]:
    """Valuations of the three terms: coefficient valuation plus <exponents, w>.

    Plücker scalars missing from `w` have valuation 0.

    Raises:
        LookupFailure: If a line variable or a coefficient root has no value.
    """
    values = []
    for term in T.terms:
        total = Fraction(0)
        for root in term.coefficient:
            if dval is None:
                continue
            if root not in dval:
                raise LookupFailure(f"no valuation for ({root_str(root)})")
            total += Fraction(dval[root])
        for label, power in term.monomial:
            if label in w:
                total += power * Fraction(w[label])
            elif label.kind is not LineKind.P:
                raise LookupFailure(f"no weight for {label}")
        values.append(total)
    return values[0], values[1], values[2]


def trop_eval(
    T: Trinomial,
    w: Mapping[LineLabel, Fraction | int],
    dval: Mapping[RootVector, Fraction | int] | None = None,
) -> bool:
    """True iff the minimum term valuation is attained at least twice."""
    values = term_values(T, w, dval)
    low = min(values)
    return sum(1 for v in values if v == low) >= 2
