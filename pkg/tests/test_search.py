import json
import random

import networkx as nx
import pytest

from dtuples import search
from dtuples.errors import CacheError, InputError
from dtuples.search import (
    _adjacency,
    cn_scan,
    compatibility_pairs,
    core_order,
    load_cache,
    max_tuple,
    roots_table,
)
from dtuples.tuples import verify

from oracles import max_clique_scan, pairs_scan, sqrtmod_scan


def test_pairs_n1():
    # brute force over all 45 pairs in [1, 10]
    assert list(compatibility_pairs(1, 10)) == [
        (1, 3, 2), (1, 8, 3), (2, 4, 3), (3, 5, 4), (3, 8, 5),
        (4, 6, 5), (5, 7, 6), (6, 8, 7), (7, 9, 8), (8, 10, 9),
    ]


def test_pairs_negative_n_includes_zero_square():
    assert list(compatibility_pairs(-3, 4)) == [(1, 3, 0), (1, 4, 1), (3, 4, 3)]


def test_pairs_diophantus():
    pairs = set(compatibility_pairs(256, 110))
    assert {(1, 33, 17), (1, 68, 18), (1, 105, 19), (33, 68, 50), (33, 105, 61), (68, 105, 86)} <= pairs


def test_pairs_random_against_scan():
    rng = random.Random(99)
    for _ in range(40):
        n = rng.choice([v for v in range(-500, 501) if v])
        N = rng.randint(2, 160)
        assert list(compatibility_pairs(n, N)) == pairs_scan(n, N), (n, N)


def test_pairs_preconditions():
    with pytest.raises(InputError):
        list(compatibility_pairs(0, 10))
    with pytest.raises(InputError):
        list(compatibility_pairs(1, 1))


@pytest.mark.parametrize("n", [1, -1, 4, -7, 12, 256, -299, 400])
def test_roots_table(n):
    roots = roots_table(n, 300)
    for a in range(1, 301):
        assert roots[a] == sqrtmod_scan(n, a), a


@pytest.mark.parametrize("n", [1, -15, 256])
def test_core_numbers_match_networkx(n):
    adj, _ = _adjacency(n, 3000)
    order, core = core_order(adj)
    g = nx.Graph()
    g.add_edges_from((a, b) for a, nb in adj.items() for b in nb)
    assert core == nx.core_number(g)
    # smallest-last order: each vertex has at most core[v] later neighbours
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        assert sum(pos[u] > pos[v] for u in adj[v]) <= core[v]


@pytest.mark.parametrize(
    "n, N, size, witness",
    [(1, 10, 3, (1, 3, 8)), (2, 100, 3, (1, 2, 7)), (-3, 4, 3, (1, 3, 4)), (5, 1, 1, (1,)), (3, 2, 1, (1,))],
)
def test_max_tuple_small(n, N, size, witness):
    rep = max_tuple(n, N)
    assert (rep.max_size, rep.witness.elements) == (size, witness)


def test_max_tuple_d256_quintuple():
    rep = max_tuple(256, 65536)
    assert rep.max_size == 5
    assert rep.witness.elements == (1, 33, 105, 320, 18240)
    assert rep.pairs_found > 0 and rep.nodes_explored > 0


def test_max_tuple_random_against_oracle():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.choice([v for v in range(-20, 21) if v])
        N = rng.randint(1, 60)
        rep = max_tuple(n, N)
        size, witness = max_clique_scan(n, N)
        assert (rep.max_size, list(rep.witness.elements)) == (size, witness), (n, N)
        assert verify(n, rep.witness.elements).valid


def test_max_tuple_deterministic():
    a = max_tuple(-255, 65025).to_json(timing=False)
    b = max_tuple(-255, 65025).to_json(timing=False)
    assert a == b


def test_scan_singleton():
    (rec,) = cn_scan(1, 1)
    assert (rec.n, rec.N, rec.c, rec.witness) == (1, 1, 1, (1,))


def test_scan_skips_zero_and_sorts():
    recs = cn_scan(-3, 3)
    assert [r.n for r in recs] == [-3, -2, -1, 1, 2, 3]


def test_scan_around_256():
    recs = {r.n: r for r in cn_scan(255, 257)}
    assert recs[256].c == 5
    assert recs[255].c <= 4 and recs[257].c <= 4


def test_scan_cache_resume(tmp_path, monkeypatch):
    cache = tmp_path / "scan.jsonl"
    first = cn_scan(-12, 12, cache)
    lines = cache.read_text().splitlines()
    assert len(lines) == 24
    obj = json.loads(lines[0])
    assert set(obj) == {"n", "N", "c", "witness", "nodes", "pairs", "ms"}

    def boom(n):
        raise AssertionError("cached n was recomputed")

    monkeypatch.setattr(search, "_scan_one", boom)
    again = cn_scan(-12, 12, cache)
    assert again == first
    assert cache.read_text().splitlines() == lines


def test_scan_cache_truncated_tail(tmp_path):
    cache = tmp_path / "scan.jsonl"
    cn_scan(1, 6, cache)
    text = cache.read_text()
    cache.write_text(text + '{"n": 7, "N": 49, "c"')
    recs = cn_scan(1, 8, cache)
    assert [r.n for r in recs] == list(range(1, 9))
    parsed = [json.loads(line) for line in cache.read_text().splitlines()]
    assert sorted(o["n"] for o in parsed) == list(range(1, 9))


def test_scan_cache_unterminated_complete_tail(tmp_path):
    cache = tmp_path / "scan.jsonl"
    cn_scan(1, 3, cache)
    cache.write_text(cache.read_text().rstrip("\n"))
    cn_scan(1, 4, cache)
    assert len(cache.read_text().splitlines()) == 4


def test_scan_cache_corrupt_line(tmp_path):
    cache = tmp_path / "scan.jsonl"
    cn_scan(1, 4, cache)
    lines = cache.read_text().splitlines()
    lines[1] = "not json"
    cache.write_text("\n".join(lines) + "\n")
    with pytest.raises(CacheError, match="line 2"):
        load_cache(cache)


def test_scan_cache_bad_witness(tmp_path):
    cache = tmp_path / "scan.jsonl"
    cache.write_text('{"n": 1, "N": 1, "c": 2, "witness": [1, 2], "nodes": 0, "pairs": 0, "ms": 0}\n')
    with pytest.raises(CacheError, match="line 1"):
        load_cache(cache)


def test_scan_unwritable_cache(tmp_path):
    with pytest.raises(CacheError):
        cn_scan(1, 2, tmp_path / "missing-dir" / "scan.jsonl")


def test_scan_parallel_matches_serial(tmp_path):
    serial = cn_scan(-9, 9)
    parallel = cn_scan(-9, 9, tmp_path / "p.jsonl", jobs=2)
    strip = lambda recs: [(r.n, r.c, r.witness, r.nodes, r.pairs) for r in recs]
    assert strip(serial) == strip(parallel)


def test_default_jobs(monkeypatch):
    monkeypatch.setenv("DTUPLE_JOBS", "3")
    assert search.default_jobs() == 3
    monkeypatch.setenv("DTUPLE_JOBS", "zero")
    with pytest.raises(InputError):
        search.default_jobs()
