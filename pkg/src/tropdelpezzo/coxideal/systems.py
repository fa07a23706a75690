"""The trinomial systems of the Cox ideals in degrees 5, 4 and 3."""

from __future__ import annotations

import logging
from functools import cache

from tropdelpezzo import rootsys
from tropdelpezzo.coxideal.grading import group_line
from tropdelpezzo.coxideal.model import Trinomial, parse_trinomial
from tropdelpezzo.errors import ConsistencyError, UnsupportedError

logger = logging.getLogger(__name__)

PLUCKER_RELATIONS: tuple[str, ...] = (
    "p12 p34 - p13 p24 + p14 p23",
    "p12 p35 - p13 p25 + p15 p23",
    "p12 p45 - p14 p25 + p15 p24",
    "p13 p45 - p14 p35 + p15 p34",
    "p23 p45 - p24 p35 + p25 p34",
)

# Universal degree-4 Cox ideal, grouped as Base, Groups 1..5 and Groups 1'..5'.
DEGREE4_GROUPS: dict[str, tuple[str, ...]] = {
    "Base": PLUCKER_RELATIONS,
    "1": (
        "F23 F45 - F24 F35 + F25 F34",
        "p23 p45 F24 F35 - p24 p35 F23 F45 - G E1",
        "p23 p45 F25 F34 - p25 p34 F23 F45 - G E1",
        "p24 p35 F25 F34 - p25 p34 F24 F35 - G E1",
    ),
    "2": (
        "F13 F45 - F14 F35 + F15 F34",
        "p13 p45 F14 F35 - p14 p35 F13 F45 - G E2",
        "p13 p45 F15 F34 - p15 p34 F13 F45 - G E2",
        "p14 p35 F15 F34 - p15 p34 F14 F35 - G E2",
    ),
    "3": (
        "F12 F45 - F14 F25 + F15 F24",
        "p12 p45 F14 F25 - p14 p25 F12 F45 - G E3",
        "p12 p45 F15 F24 - p15 p24 F12 F45 - G E3",
        "p14 p25 F15 F24 - p15 p24 F14 F25 - G E3",
    ),
    "4": (
        "F12 F35 - F13 F25 + F15 F23",
        "p12 p35 F13 F25 - p13 p25 F12 F35 - G E4",
        "p12 p35 F15 F23 - p15 p23 F12 F35 - G E4",
        "p13 p25 F15 F23 - p15 p23 F13 F25 - G E4",
    ),
    "5": (
        "F12 F34 - F13 F24 + F14 F23",
        "p12 p34 F13 F24 - p13 p24 F12 F34 - G E5",
        "p12 p34 F14 F23 - p14 p23 F12 F34 - G E5",
        "p13 p24 F14 F23 - p14 p23 F13 F24 - G E5",
    ),
    "1'": (
        "p25 F12 E2 - p35 F13 E3 + p45 F14 E4",
        "p24 F12 E2 - p34 F13 E3 + p45 F15 E5",
        "p23 F12 E2 - p34 F14 E4 + p35 F15 E5",
        "p23 F13 E3 - p24 F14 E4 + p25 F15 E5",
    ),
    "2'": (
        "p15 F12 E1 - p35 F23 E3 + p45 F24 E4",
        "p14 F12 E1 - p34 F23 E3 + p45 F25 E5",
        "p13 F12 E1 - p34 F24 E4 + p35 F25 E5",
        "p13 F23 E3 - p14 F24 E4 + p15 F25 E5",
    ),
    "3'": (
        "p15 F13 E1 - p25 F23 E2 + p45 F34 E4",
        "p14 F13 E1 - p24 F23 E2 + p45 F35 E5",
        "p12 F13 E1 - p24 F34 E4 + p25 F35 E5",
        "p12 F23 E2 - p14 F34 E4 + p15 F35 E5",
    ),
    "4'": (
        "p15 F14 E1 - p25 F24 E2 + p35 F34 E3",
        "p13 F14 E1 - p23 F24 E2 + p35 F45 E5",
        "p12 F14 E1 - p23 F34 E3 + p25 F45 E5",
        "p12 F24 E2 - p13 F34 E3 + p15 F45 E5",
    ),
    "5'": (
        "p14 F15 E1 - p24 F25 E2 + p34 F35 E3",
        "p13 F15 E1 - p23 F25 E2 + p34 F45 E4",
        "p12 F15 E1 - p23 F35 E3 + p24 F45 E4",
        "p12 F25 E2 - p13 F35 E3 + p14 F45 E4",
    ),
}


def _g1_seed() -> tuple[str, ...]:
    """The ten relations in the degree of the conic G1."""
    seed = []
    for a, b, c in (
        (a, b, c) for a in range(2, 7) for b in range(a + 1, 7) for c in range(b + 1, 7)
    ):
        seed.append(
            f"(d{b}-d{c})(d1+d{b}+d{c}) E{a} F1{a}"
            f" - (d{a}-d{c})(d1+d{a}+d{c}) E{b} F1{b}"
            f" + (d{a}-d{b})(d1+d{a}+d{b}) E{c} F1{c}"
        )
    return tuple(seed)


G1_SEED: tuple[str, ...] = _g1_seed()


def plucker_d5() -> list[Trinomial]:
    """The five Plücker relations of M_{0,5}."""
    return [parse_trinomial(text, 5, "Base") for text in PLUCKER_RELATIONS]


@cache
def universal_cox_d4() -> tuple[Trinomial, ...]:
    """The 45 trinomials of the universal degree-4 Cox ideal, group by group."""
    return tuple(
        parse_trinomial(text, 4, group)
        for group, texts in DEGREE4_GROUPS.items()
        for text in texts
    )


@cache
def universal_cox_d3() -> tuple[Trinomial, ...]:
    """The 270 trinomials of the universal cubic Cox ideal.

    The ten relations of the group of G1 are closed under the simple reflections
    of W(E6), acting on coefficient roots and line variables together.

    Raises:
        ConsistencyError: If the orbit does not consist of 27 groups of 10.
    """
    seed = [parse_trinomial(text, 3, "G1").canonical() for text in G1_SEED]
    generators = [
        (lambda t, s=s: _relabel(t.act(s))) for s in rootsys.weyl_generators(6)
    ]
    found: dict[tuple[object, ...], Trinomial] = {}
    for trinomial in seed:
        if trinomial.key() in found:
            continue
        for image in rootsys.weyl_orbit(generators, trinomial, key=Trinomial.key):
            found.setdefault(image.key(), image)
    groups: dict[str, int] = {}
    for trinomial in found.values():
        groups[trinomial.group] = groups.get(trinomial.group, 0) + 1
    if len(found) != 270 or len(groups) != 27 or set(groups.values()) != {10}:
        raise ConsistencyError(
            f"cubic Cox orbit has {len(found)} trinomials in {len(groups)} groups"
        )
    logger.info("universal cubic Cox ideal: %d trinomials", len(found))
    order = {str(line): i for i, line in enumerate(rootsys.lines(3))}
    return tuple(sorted(found.values(), key=lambda t: (order[t.group], t.key())))


def _relabel(trinomial: Trinomial) -> Trinomial:
    return Trinomial(str(group_line(trinomial)), trinomial.terms)


def cox_system(degree: int) -> tuple[Trinomial, ...]:
    """Trinomial system of a degree context.

    Raises:
        UnsupportedError: Outside degrees 3, 4, 5.
    """
    if degree == 5:
        return tuple(plucker_d5())
    if degree == 4:
        return universal_cox_d4()
    if degree == 3:
        return universal_cox_d3()
    raise UnsupportedError(f"no Cox system for degree {degree}")


def groups(system: tuple[Trinomial, ...]) -> dict[str, list[Trinomial]]:
    """Trinomials keyed by group name, preserving order."""
    table: dict[str, list[Trinomial]] = {}
    for trinomial in system:
        table.setdefault(trinomial.group, []).append(trinomial)
    return table


def group_of(line: rootsys.LineLabel) -> list[Trinomial]:
    """The ten cubic relations in the degree attached to `line`."""
    return groups(universal_cox_d3()).get(str(line), [])
