import itertools

import networkx as nx
import pytest

from tropdelpezzo.errors import StructuralError, UnsupportedError
from tropdelpezzo.matroid import (
    circuits,
    circuits_cached,
    circuits_through,
    connected_flats,
    enumerate_bergman,
    flats,
    graphic_matroid,
    in_bergman,
    matroid_by_name,
    root_matroid,
    root_symmetry,
    uniform_matroid,
)
from tropdelpezzo.schemas import BergmanCheckpoint, FanRecord


@pytest.fixture(scope="module")
def k4():
    return graphic_matroid(4)


def test_graphic_matroid_of_k4(k4):
    assert k4.size == 6
    assert k4.rank == 3
    assert len(circuits(k4)) == 7
    by_rank = flats(k4)
    assert len(by_rank[1]) == 6
    assert len(by_rank[2]) == 7
    assert len(connected_flats(k4)) == 10


def test_uniform_matroid_circuits():
    assert circuits(uniform_matroid(2, 4)) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_matroid_names():
    assert matroid_by_name("e6").size == 36
    assert matroid_by_name("e7").size == 63
    with pytest.raises(UnsupportedError):
        matroid_by_name("e8")


def test_root_symmetry_permutes_positive_roots():
    perms = root_symmetry(6)
    assert len(perms) == 6
    assert all(sorted(p) == list(range(36)) for p in perms)


def test_bergman_membership(k4):
    circ = circuits(k4)
    assert in_bergman([0] * 6, circ)
    assert in_bergman([1, 0, 0, 0, 0, 0], circ)
    assert not in_bergman([1, 1, 0, 0, 0, 0], circ)
    with pytest.raises(StructuralError):
        in_bergman([0, 0], circ, ground_size=6)


@pytest.mark.parametrize("coarse", [False, True])
def test_bergman_fan_of_k4_is_the_petersen_fan(k4, coarse):
    record = enumerate_bergman(k4, coarse=coarse)
    assert record.complete
    assert record.f_vector == [1, 10, 15]
    assert record.euler_characteristic == 6
    link = nx.Graph(record.cones[2])
    assert nx.is_isomorphic(link, nx.petersen_graph())
    assert record.to_json()["f_vector"] == [1, 10, 15]


def test_cone_cap_gives_partial_record(k4):
    record = enumerate_bergman(k4, cone_cap=3)
    assert not record.complete


def test_circuits_are_cached(k4, tmp_path):
    first = circuits_cached(k4, tmp_path)
    assert (tmp_path / "circuits_k4.json").exists()
    assert circuits_cached(k4, tmp_path) == first


def _vertex_permutations():
    edges = list(itertools.combinations(range(4), 2))
    for sigma in itertools.permutations(range(4)):
        yield [edges.index(tuple(sorted((sigma[i], sigma[j])))) for i, j in edges]


def _brute_circuits(M):
    dependent = [
        frozenset(s)
        for k in range(1, M.size + 1)
        for s in itertools.combinations(range(M.size), k)
        if M.rank_of(s) < k
    ]
    return [tuple(sorted(d)) for d in dependent if not any(o < d for o in dependent)]


def test_brute_force_circuits_agree(k4):
    assert sorted(_brute_circuits(k4)) == circuits(k4)


def test_bergman_membership_of_zero_one_vectors_marks_flats(k4):
    circ = _brute_circuits(k4)
    for pattern in itertools.product((0, 1), repeat=6):
        support = frozenset(i for i, x in enumerate(pattern) if x)
        assert in_bergman(pattern, circ) == (k4.closure(support) == support), pattern


def test_bergman_membership_is_invariant(k4):
    circ = circuits(k4)
    weights = [(0, 1, 3, 0, 2, 2), (5, 1, 1, 2, 0, 0), (1, 1, 0, 0, 2, 4), (3, 1, 1, 0, 0, 1)]
    for w in weights:
        verdict = in_bergman(w, circ)
        assert in_bergman([x + 7 for x in w], circ) == verdict
        assert in_bergman([x - 2 for x in w], circ) == verdict
        for perm in _vertex_permutations():
            moved = [0] * 6
            for e, image in enumerate(perm):
                moved[image] = w[e]
            assert in_bergman(moved, circ) == verdict


def test_parallel_verdicts_match_serial(k4):
    serial = enumerate_bergman(k4)
    parallel = enumerate_bergman(k4, workers=2)
    assert parallel.cones == serial.cones
    assert parallel.f_vector == [1, 10, 15]


def test_checkpoint_is_written_and_resumed(k4, tmp_path):
    path = tmp_path / "bergman_k4.checkpoint.json"
    first = enumerate_bergman(k4, checkpoint=path)
    state = BergmanCheckpoint.model_validate_json(path.read_text(encoding="utf-8"))
    assert state.matroid == "k4" and state.dim == 2
    assert state.record.f_vector == [1, 10, 15]
    resumed = enumerate_bergman(k4, checkpoint=path)
    assert resumed.f_vector == first.f_vector
    assert resumed.cones == first.cones


def test_foreign_checkpoint_is_rejected(k4, tmp_path):
    path = tmp_path / "other.checkpoint.json"
    enumerate_bergman(uniform_matroid(3, 6), checkpoint=path)
    with pytest.raises(StructuralError, match="another enumeration"):
        enumerate_bergman(k4, checkpoint=path)
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(StructuralError, match="unreadable"):
        enumerate_bergman(k4, checkpoint=path)


def test_fan_record_json_round_trip(k4):
    record = enumerate_bergman(k4)
    restored = FanRecord.model_validate_json(record.model_dump_json())
    assert restored == record
    assert restored.euler_characteristic == 6


@pytest.mark.slow
def test_e7_circuit_sizes():
    sizes = {len(c) for c in circuits_through(root_matroid(7), 0)}
    assert sizes == set(range(3, 9))
