"""Vector matroids, circuits, flats and Bergman fans.

Membership follows the MIN convention: ``w`` lies in the Bergman fan when
the minimum of ``w`` over every circuit is attained at least twice. The
surface modules use the MAX convention; the bridge is global negation.
"""

from __future__ import annotations

import itertools
import json
import logging
import time
from collections import deque
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from pydantic import ValidationError

from tropdelpezzo import rootsys
from tropdelpezzo.errors import RealizationError, StructuralError, UnsupportedError
from tropdelpezzo.rational import (
    Vector,
    from_qq,
    domain_matrix,
    rank,
    solve_sparse,
    vec,
)
from tropdelpezzo.schemas.models import BergmanCheckpoint, FanRecord

logger = logging.getLogger(__name__)

Circuit = tuple[int, ...]
Permutation = tuple[int, ...]


@dataclass(frozen=True)
class VectorMatroid:
    """The matroid of a finite family of rational vectors."""

    name: str
    labels: tuple[str, ...]
    vectors: tuple[Vector, ...]

    @property
    def size(self) -> int:
        """Number of ground-set elements."""
        return len(self.vectors)

    @cached_property
    def rank(self) -> int:
        """Rank of the whole ground set."""
        return self.rank_of(range(self.size))

    def rank_of(self, subset: Iterable[int]) -> int:
        """Rank of a subset of the ground set."""
        rows = [self.vectors[i] for i in subset]
        return rank(rows) if rows else 0

    def basis_of(self, subset: Iterable[int]) -> list[int]:
        """Lexicographically first basis of a subset (pivot columns of its rref)."""
        elements = sorted(set(subset))
        if not elements:
            return []
        dim = len(self.vectors[0])
        rows = [[self.vectors[e][row] for e in elements] for row in range(dim)]
        _, pivots = domain_matrix(rows, len(elements)).rref()
        return [elements[p] for p in pivots]

    def closure(self, subset: Iterable[int]) -> frozenset[int]:
        """Smallest flat containing `subset`."""
        base = self.basis_of(subset)
        loops = frozenset(e for e in range(self.size) if not any(self.vectors[e]))
        if not base:
            return loops
        return frozenset(base) | frozenset(_span_table(self, base)) | loops

    @cached_property
    def circuits(self) -> list[Circuit]:
        """All circuits (computed on first access)."""
        return circuits(self)


def graphic_matroid(n: int = 4) -> VectorMatroid:
    """Graphic matroid of the complete graph K_n with edge vectors e_i - e_j."""
    edges = list(itertools.combinations(range(n), 2))
    vectors = []
    for i, j in edges:
        v = [0] * n
        v[i], v[j] = 1, -1
        vectors.append(vec(v))
    return VectorMatroid(f"k{n}", tuple(f"{i + 1}{j + 1}" for i, j in edges), tuple(vectors))


def uniform_matroid(r: int, n: int) -> VectorMatroid:
    """U_{r,n} realized on the moment curve: (1, k, k^2, ...) for k = 0..n-1."""
    vectors = tuple(vec(k**p for p in range(r)) for k in range(n))
    return VectorMatroid(f"u{r}_{n}", tuple(str(k) for k in range(n)), vectors)


def root_matroid(m: int) -> VectorMatroid:
    """Matroid of the positive roots of E_m."""
    positive = rootsys.roots(m)
    return VectorMatroid(
        f"e{m}", tuple(rootsys.root_str(r) for r in positive), tuple(vec(r) for r in positive)
    )


def matroid_by_name(name: str) -> VectorMatroid:
    """Resolve the CLI names k4, e6 and e7.

    Raises:
        UnsupportedError: For any other name.
    """
    if name == "k4":
        return graphic_matroid(4)
    if name in ("e6", "e7"):
        return root_matroid(int(name[1:]))
    raise UnsupportedError(f"unknown matroid {name!r}")


def root_symmetry(m: int) -> list[Permutation]:
    """Simple reflections of W(E_m) as permutations of the positive roots."""
    positive = rootsys.roots(m)
    index = {r: i for i, r in enumerate(positive)}
    perms = []
    for reflection in rootsys.weyl_generators(m):
        perms.append(tuple(index[reflection.on_root(r)[0]] for r in positive))
    return perms


# --- Circuits ---


def _span_table(M: VectorMatroid, basis: Sequence[int]) -> dict[int, list[Fraction]]:
    """Coordinates of every element lying in the span of an independent set."""
    dim = len(M.vectors[0])
    columns = [M.vectors[b] for b in basis]
    others = [e for e in range(M.size) if e not in basis]
    rows = [
        [c[row] for c in columns] + [M.vectors[e][row] for e in others]
        for row in range(dim)
    ]
    reduced, pivots = domain_matrix(rows, len(basis) + len(others)).rref()
    sparse = reduced.to_sdm()
    table: dict[int, list[Fraction]] = {}
    k = len(basis)
    for offset, e in enumerate(others):
        column = k + offset
        if column in pivots or any(
            column in sparse.get(r, {}) for r in range(k, len(pivots))
        ):
            continue
        row_of = [sparse.get(r, {}) for r in range(k)]
        table[e] = [
            from_qq(row[column]) if column in row else Fraction(0) for row in row_of
        ]
    return table


def circuits_through(M: VectorMatroid, x: int) -> list[Circuit]:
    """All circuits containing the element `x`."""
    found: set[Circuit] = set()
    if M.rank_of([x]) == 0:
        return [(x,)]
    others = [e for e in range(M.size) if e != x]

    def extend(independent: list[int], start: int) -> None:
        table = _span_table(M, independent)
        for e, coords in table.items():
            if e == x or e in independent:
                continue
            if independent[1:] and e < independent[-1]:
                continue
            if all(c != 0 for c in coords):
                found.add(tuple(sorted(independent + [e])))
        if len(independent) >= M.rank:
            return
        for position in range(start, len(others)):
            e = others[position]
            if e in table:
                continue
            extend(independent + [e], position + 1)

    extend([x], 0)
    return sorted(found)


def circuits(
    M: VectorMatroid, symmetry: Sequence[Permutation] = ()
) -> list[Circuit]:
    """All circuits of `M`, canonically sorted.

    With `symmetry`, circuits are only searched through one representative
    of each element orbit and then expanded by the group action.
    """
    if M.size == 0 or M.rank == 0:
        logger.warning("matroid %s has rank 0; no circuits reported", M.name)
        return []
    representatives = _element_representatives(M.size, symmetry)
    seeds: set[Circuit] = set()
    for x in representatives:
        seeds.update(circuits_through(M, x))
    if not symmetry:
        return sorted(seeds)
    result: set[Circuit] = set()
    for seed in sorted(seeds):
        if seed in result:
            continue
        result.update(
            rootsys.weyl_orbit(
                [_set_action(p) for p in symmetry], seed, key=lambda c: c
            )
        )
    logger.info("%s: %d circuits", M.name, len(result))
    return sorted(result)


def _set_action(perm: Permutation):  # noqa: ANN202
    def act(subset: Circuit) -> Circuit:
        return tuple(sorted(perm[i] for i in subset))

    return act


def _element_representatives(n: int, symmetry: Sequence[Permutation]) -> list[int]:
    if not symmetry:
        return list(range(n))
    seen: set[int] = set()
    reps = []
    for e in range(n):
        if e in seen:
            continue
        reps.append(e)
        frontier = deque([e])
        seen.add(e)
        while frontier:
            item = frontier.popleft()
            for perm in symmetry:
                if perm[item] not in seen:
                    seen.add(perm[item])
                    frontier.append(perm[item])
    return reps


def circuits_cached(M: VectorMatroid, cache_dir: Path | None) -> list[Circuit]:
    """Circuits of a root matroid, read from or written to the cache directory."""
    symmetry = root_symmetry(int(M.name[1:])) if M.name in ("e6", "e7") else []
    if cache_dir is None:
        return circuits(M, symmetry)
    path = cache_dir / f"circuits_{M.name}.json"
    if path.exists():
        logger.info("loading circuits from %s", path)
        return [tuple(c) for c in json.loads(path.read_text(encoding="utf-8"))]
    result = circuits(M, symmetry)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps([list(c) for c in result]), encoding="utf-8")
    return result


# --- Membership ---


def in_bergman(
    w: Sequence[Fraction | int],
    circuit_list: Iterable[Circuit],
    ground_size: int | None = None,
) -> bool:
    """True iff on every circuit the minimum of `w` is attained at least twice.

    Raises:
        StructuralError: If `w` does not match the ground set.
    """
    if ground_size is not None and len(w) != ground_size:
        raise StructuralError(f"weight vector has {len(w)} entries, expected {ground_size}")
    for circuit in circuit_list:
        if circuit and max(circuit) >= len(w):
            raise StructuralError("circuit index outside the weight vector")
        values = [w[i] for i in circuit]
        low = min(values)
        if sum(1 for v in values if v == low) < 2:
            return False
    return True


# --- Flats ---


def flats(M: VectorMatroid) -> dict[int, list[frozenset[int]]]:
    """All nonempty flats by rank (rank >= 1)."""
    by_rank: dict[int, set[frozenset[int]]] = {
        1: {M.closure([e]) for e in range(M.size) if M.rank_of([e]) == 1}
    }
    for r in range(1, M.rank):
        nxt: set[frozenset[int]] = set()
        for flat in by_rank[r]:
            covered: set[int] = set(flat)
            for e in range(M.size):
                if e in covered:
                    continue
                bigger = M.closure(list(flat) + [e])
                covered |= bigger
                nxt.add(bigger)
        by_rank[r + 1] = nxt
    return {r: sorted(fs, key=lambda f: sorted(f)) for r, fs in by_rank.items()}


def is_connected(M: VectorMatroid, subset: frozenset[int]) -> bool:
    """Connectivity of the restriction, via fundamental circuits of a basis."""
    elements = sorted(subset)
    basis = M.basis_of(elements)
    parent = {e: e for e in elements}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    table = _span_table(M, basis) if basis else {}
    for e in elements:
        if e in basis:
            continue
        for b, c in zip(basis, table.get(e, []), strict=False):
            if c != 0:
                parent[find(b)] = find(e)
    return len({find(e) for e in elements}) == 1


def connected_flats(M: VectorMatroid) -> list[frozenset[int]]:
    """Connected flats of rank 1 .. rank-1: the rays of the fine fan structure."""
    result: list[frozenset[int]] = []
    for r, fs in sorted(flats(M).items()):
        if r >= M.rank:
            continue
        result.extend(f for f in fs if is_connected(M, f))
    return result


# --- Fan enumeration ---

Cone = tuple[int, ...]

# Rays and circuits installed once per worker process.
_worker_state: dict[str, list] = {}


def _init_worker(rays: list[Cone], circuit_list: list[Circuit]) -> None:
    _worker_state["rays"] = rays
    _worker_state["circuits"] = circuit_list


def _spans(cone: Cone, rays: Sequence[Cone], circuit_list: Sequence[Circuit]) -> bool:
    size = len(rays[0])
    point = [sum(rays[i][e] for i in cone) for e in range(size)]
    return in_bergman(point, circuit_list)


def _worker_spans(cone: Cone) -> bool:
    return _spans(cone, _worker_state["rays"], _worker_state["circuits"])


def _verdicts(
    candidates: list[Cone], rays: list[Cone], circuit_list: list[Circuit], workers: int
) -> list[bool]:
    if workers <= 1 or len(candidates) < 2 * workers:
        return [_spans(c, rays, circuit_list) for c in candidates]
    chunk = max(1, len(candidates) // (8 * workers))
    with ProcessPoolExecutor(
        max_workers=workers, initializer=_init_worker, initargs=(rays, circuit_list)
    ) as pool:
        return list(pool.map(_worker_spans, candidates, chunksize=chunk))


def _ray_action(
    flat_list: Sequence[frozenset[int]], symmetry: Sequence[Permutation]
) -> list[Permutation]:
    index = {f: i for i, f in enumerate(flat_list)}
    return [
        tuple(index[frozenset(p[e] for e in f)] for f in flat_list) for p in symmetry
    ]


def _resume(
    path: Path | None, M: VectorMatroid, rays: list[Cone]
) -> BergmanCheckpoint | None:
    if path is None or not path.exists():
        return None
    try:
        state = BergmanCheckpoint.model_validate_json(path.read_text(encoding="utf-8"))
    except (OSError, ValidationError) as exc:
        raise StructuralError(f"unreadable checkpoint {path}: {exc}") from exc
    if state.matroid != M.name or state.record.rays != rays:
        raise StructuralError(f"checkpoint {path} belongs to another enumeration")
    logger.info("resuming %s after dimension %d from %s", M.name, state.dim, path)
    return state


def _save(path: Path | None, state: BergmanCheckpoint) -> None:
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    partial = path.with_suffix(path.suffix + ".tmp")
    partial.write_text(state.model_dump_json(), encoding="utf-8")
    partial.replace(path)


def enumerate_bergman(
    M: VectorMatroid,
    symmetry: Sequence[Permutation] = (),
    max_dim: int | None = None,
    *,
    circuit_list: Sequence[Circuit] | None = None,
    coarse: bool = False,
    workers: int = 1,
    cone_cap: int | None = None,
    time_budget: float | None = None,
    checkpoint: Path | None = None,
) -> FanRecord:
    """Enumerate the Bergman fan by extending orbit representatives one ray at a time.

    Rays are indicator vectors of connected proper flats. A set of rays
    spans a cone when the sum of its rays passes `in_bergman`. Each new cone
    is expanded to its full orbit, so later candidates are checked by a set
    lookup. Exceeding `cone_cap` or `time_budget` returns a partial record
    with ``complete=False``.

    Candidate cones of one dimension are tested in `workers` processes. With
    `checkpoint`, the state is written after every finished dimension and an
    existing file is resumed from.

    Raises:
        StructuralError: If the checkpoint is unreadable or belongs to
            another matroid.
    """
    started = time.monotonic()
    circ = list(circuit_list) if circuit_list is not None else circuits(M, symmetry)
    flat_list = connected_flats(M)
    rays = [tuple(int(e in f) for e in range(M.size)) for f in flat_list]
    top = max_dim or (M.rank - 1)
    ray_perms = _ray_action(flat_list, symmetry)

    def orbit(cone: Cone) -> list[Cone]:
        if not ray_perms:
            return [cone]
        return rootsys.weyl_orbit([_set_action(p) for p in ray_perms], cone)

    state = _resume(checkpoint, M, rays)
    if state is None:
        record = FanRecord(rays=rays)
        representatives = sorted({min(orbit((i,))) for i in range(len(rays))})
        record.cones[1] = [(i,) for i in range(len(rays))]
        record.orbits[1] = len(representatives)
        first = 2
    else:
        record, representatives, first = state.record, state.representatives, state.dim + 1
    for dim in range(first, top + 1):
        candidates = sorted(
            {tuple(sorted(rep + (j,))) for rep in representatives for j in range(len(rays)) if j not in rep}
        )
        verdicts = _verdicts(candidates, rays, circ, workers)
        nxt: set[Cone] = set()
        reps: list[Cone] = []
        for cone, ok in zip(candidates, verdicts, strict=True):
            if not ok or cone in nxt:
                continue
            members = orbit(cone)
            reps.append(min(members))
            nxt.update(members)
            if cone_cap is not None and len(nxt) > cone_cap:
                record.complete = False
                break
        if time_budget is not None and time.monotonic() - started > time_budget:
            record.complete = False
        if not nxt:
            break
        record.cones[dim] = sorted(nxt)
        record.orbits[dim] = len(reps)
        representatives = sorted(set(reps))
        logger.info("dimension %d: %d cones in %d orbits", dim, len(nxt), len(reps))
        if not record.complete:
            logger.warning("enumeration stopped early at dimension %d", dim)
            break
        _save(
            checkpoint,
            BergmanCheckpoint(
                matroid=M.name, dim=dim, record=record, representatives=representatives
            ),
        )
    if coarse:
        record = coarsen(record, M)
    return record


def coarsen(record: FanRecord, M: VectorMatroid) -> FanRecord:
    """Merge pairs of maximal cones across a ray that lies in exactly those two.

    The merge happens when the ray is a positive combination of the remaining
    rays of the two cones, modulo the all-ones lineality.
    """
    top = max(record.cones)
    maximal = set(record.cones[top])
    changed = True
    while changed:
        changed = False
        usage: dict[int, list[tuple[int, ...]]] = {}
        for cone in sorted(maximal):
            for r in cone:
                usage.setdefault(r, []).append(cone)
        for r, holders in sorted(usage.items()):
            if len(holders) != 2:
                continue
            union = tuple(sorted((set(holders[0]) | set(holders[1])) - {r}))
            if len(union) != top:
                continue
            if _positive_combination(record.rays[r], [record.rays[u] for u in union]):
                maximal -= set(holders)
                maximal.add(union)
                changed = True
                break
    faces: dict[int, set[tuple[int, ...]]] = {}
    for cone in maximal:
        for k in range(1, len(cone) + 1):
            faces.setdefault(k, set()).update(itertools.combinations(cone, k))
    used = sorted({r for cone in maximal for r in cone})
    renumber = {r: i for i, r in enumerate(used)}
    return FanRecord(
        rays=[record.rays[r] for r in used],
        cones={
            k: sorted(tuple(sorted(renumber[r] for r in c)) for c in cs)
            for k, cs in sorted(faces.items())
        },
        orbits={},
        complete=record.complete,
    )


def _positive_combination(target: Sequence[int], generators: Sequence[Sequence[int]]) -> bool:
    """True when target = sum c_i g_i + c * ones with every c_i > 0."""
    n = len(target)
    unknowns = len(generators) + 1
    equations = [
        {**{i: Fraction(g[row]) for i, g in enumerate(generators)}, len(generators): Fraction(1)}
        for row in range(n)
    ]
    try:
        solution, free = solve_sparse(equations, [Fraction(t) for t in target], unknowns)
    except RealizationError:
        return False
    return not free and all(c > 0 for c in solution[: len(generators)])
