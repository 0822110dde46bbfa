import random

import pytest

from htdecomp import build_hypergraph, covers
from htdecomp.hypergraph import members

import corpus
from oracles import covers_oracle


def listed(h, stream):
    return [set(h.edge_names_of(s)) for s in stream]


def test_empty_conn_yields_empty_cover(h_tri):
    assert list(covers(0, h_tri.all_edges, 1, h_tri)) == [0]


def test_triangle_pair(h_tri):
    conn = h_tri.vertex_set("bc")
    got = listed(h_tri, covers(conn, h_tri.all_edges, 2, h_tri))
    assert got == [{"e2"}, {"e1", "e3"}]
    assert list(covers(conn, h_tri.all_edges, 2, h_tri)) == covers_oracle(h_tri, conn, h_tri.all_edges, 2)


def test_uncoverable_is_empty(h_tri):
    conn = h_tri.vertex_set("abc")
    pool = h_tri.edge_set(["e1", "e2"])
    assert list(covers(conn, pool, 1, h_tri)) == []
    assert covers_oracle(h_tri, conn, pool, 1) == []


def test_k_must_be_positive(h_tri):
    with pytest.raises(ValueError):
        list(covers(0, 0, 0, h_tri))


def test_redundant_excluded_unless_all_covers():
    h = build_hypergraph([("big", ["a", "b"]), ("s1", ["a"]), ("s2", ["b"])])
    conn = h.vertex_set("ab")
    assert listed(h, covers(conn, h.all_edges, 3, h)) == [{"big"}, {"s1", "s2"}]
    everything = listed(h, covers(conn, h.all_edges, 3, h, all_covers=True))
    assert everything == [{"big"}, {"big", "s1"}, {"big", "s2"}, {"s1", "s2"}, {"big", "s1", "s2"}]
    assert list(covers(conn, h.all_edges, 3, h, all_covers=True)) == covers_oracle(
        h, conn, h.all_edges, 3, irredundant=False)


def _random_triple(rng):
    h = corpus.random_hypergraph(rng, max_edges=10, max_arity=4, max_vertices=8)
    pool = rng.getrandbits(h.edge_count)
    conn = rng.getrandbits(h.vertex_count) & rng.getrandbits(h.vertex_count)
    return h, conn, pool, rng.randint(1, 3)


def test_sound_irredundant_unique():
    rng = random.Random(12)
    for _ in range(300):
        h, conn, pool, k = _random_triple(rng)
        seen = set()
        for s in covers(conn, pool, k, h):
            assert s not in seen
            seen.add(s)
            assert s & ~pool == 0
            assert len(list(members(s))) <= k
            assert conn & ~h.vertex_union(s) == 0
            for e in members(s):
                assert conn & ~h.vertex_union(s & ~(1 << e)) != 0 or not conn


def test_matches_brute_force_both_modes():
    rng = random.Random(99)
    for _ in range(300):
        h, conn, pool, k = _random_triple(rng)
        assert list(covers(conn, pool, k, h)) == covers_oracle(h, conn, pool, k)
        assert list(covers(conn, pool, k, h, all_covers=True)) == covers_oracle(
            h, conn, pool, k, irredundant=False)


def test_deterministic():
    h = corpus.grid2(4)
    conn = h.vertex_set(["x0_1", "x1_2"])
    first = list(covers(conn, h.bound_edges(conn), 3, h))
    assert first == list(covers(conn, h.bound_edges(conn), 3, h))
