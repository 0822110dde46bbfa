import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from htdecomp import (
    DuplicateEdgeName,
    EmptyEdge,
    bound_edges,
    build_hypergraph,
    gyo_reduce,
    separate,
    vertex_union,
)
from htdecomp.hypergraph import mask_of, members

import corpus
from oracles import edge_sets, separate_oracle


def names(h, vs):
    return set(h.vertex_names_of(vs))


def enames(h, es):
    return set(h.edge_names_of(es))


# construction


def test_build_single_edge():
    h = build_hypergraph([("e1", ["a", "b"])])
    assert h.edge_count == 1
    assert h.vertex_count == 2


def test_build_triangle(h_tri):
    assert h_tri.edge_count == 3
    assert h_tri.vertex_count == 3
    assert h_tri.edge_names == ("e1", "e2", "e3")


def test_duplicate_edge_name():
    with pytest.raises(DuplicateEdgeName):
        build_hypergraph([("e1", ["a"]), ("e1", ["b"])])


def test_empty_edge():
    with pytest.raises(EmptyEdge):
        build_hypergraph([("e1", ["a"]), ("e2", [])])


def test_empty_hypergraph_allowed():
    h = build_hypergraph([])
    assert h.edge_count == 0 and h.vertex_count == 0
    assert h.all_edges == 0


def test_indices_follow_first_occurrence():
    h = build_hypergraph([("x", ["q", "p", "q"]), ("y", ["r", "p"])])
    assert h.vertex_names == ("q", "p", "r")
    assert h.edge_vertices(0) == (0, 1)
    assert h.edge_vertices(1) == (1, 2)


def test_members_ascending():
    assert list(members(0b101001)) == [0, 3, 5]
    assert mask_of([5, 0, 3, 3]) == 0b101001


# vertex union / bound edges


def test_vertex_union_examples(h_chain, h_cyc4):
    assert names(h_chain, vertex_union(h_chain.edge_set(["e1", "e2"]), h_chain)) == {"a", "b", "c"}
    assert vertex_union(0, h_chain) == 0
    assert names(h_cyc4, vertex_union(h_cyc4.edge_set(["e1", "e3"]), h_cyc4)) == set("abcd")


def test_bound_edges_examples(h_tri, h_cyc4):
    assert bound_edges(0, h_tri) == 0
    assert enames(h_tri, bound_edges(h_tri.vertex_set("b"), h_tri)) == {"e1", "e2"}
    # a lies in e1 and e4, c lies in e2 and e3
    assert enames(h_cyc4, bound_edges(h_cyc4.vertex_set("ac"), h_cyc4)) == {"e1", "e2", "e3", "e4"}


def test_bound_edges_matches_naive_scan():
    rng = random.Random(4)
    for _ in range(300):
        h = corpus.random_hypergraph(rng)
        conn = rng.getrandbits(h.vertex_count)
        expected = {i for i, e in enumerate(edge_sets(h)) if e & set(members(conn))}
        assert set(members(bound_edges(conn, h))) == expected


# separate


def test_separate_triangle(h_tri):
    r = separate(h_tri.all_edges, h_tri.edge_set(["e1"]), h_tri)
    assert [enames(h_tri, c) for c in r.components] == [{"e2", "e3"}]
    assert r.covered_edges == 0


def test_separate_cycle4_all_covered(h_cyc4):
    edges, sep = h_cyc4.edge_set(["e2", "e3", "e4"]), h_cyc4.edge_set(["e1", "e3"])
    r = separate(edges, sep, h_cyc4)
    assert r.components == []
    assert enames(h_cyc4, r.covered_edges) == {"e2", "e4"}
    assert (r.components, r.covered_edges) == separate_oracle(h_cyc4, edges, sep)


def test_separate_cycle4_one_component(h_cyc4):
    edges, sep = h_cyc4.edge_set(["e2", "e3", "e4"]), h_cyc4.edge_set(["e1", "e2"])
    r = separate(edges, sep, h_cyc4)
    assert [enames(h_cyc4, c) for c in r.components] == [{"e3", "e4"}]
    assert r.covered_edges == 0
    assert (r.components, r.covered_edges) == separate_oracle(h_cyc4, edges, sep)


def test_separator_outside_edges_is_legal(h_chain):
    # only the vertices of the separator matter
    r = separate(h_chain.edge_set(["e1", "e3"]), h_chain.edge_set(["e2"]), h_chain)
    assert [enames(h_chain, c) for c in r.components] == [{"e1"}, {"e3"}]


@st.composite
def hypergraph_and_sets(draw, max_edges=6, max_vertices=8):
    nv = draw(st.integers(1, max_vertices))
    ne = draw(st.integers(0, max_edges))
    edges = [(f"e{i}", draw(st.lists(st.integers(0, nv - 1), min_size=1, max_size=4)))
             for i in range(ne)]
    h = build_hypergraph([(n, [f"v{v}" for v in vs]) for n, vs in edges])
    full = h.all_edges
    edge_subset = draw(st.integers(0, full))
    separator = draw(st.integers(0, full))
    return h, edge_subset, separator


@settings(max_examples=300, deadline=None)
@given(hypergraph_and_sets())
def test_separate_partition(args):
    h, edges, sep = args
    r = separate(edges, sep, h)
    parts = r.components + [r.covered_edges, edges & sep]
    union = 0
    for p in parts:
        assert union & p == 0
        union |= p
    assert union == edges
    assert all(c for c in r.components)
    sep_v = vertex_union(sep, h)
    for e in members(r.covered_edges):
        assert h.edge_masks[e] & ~sep_v == 0


@settings(max_examples=300, deadline=None)
@given(hypergraph_and_sets())
def test_separate_components_maximal(args):
    h, edges, sep = args
    r = separate(edges, sep, h)
    sep_v = vertex_union(sep, h)
    outside = [vertex_union(c, h) & ~sep_v for c in r.components]
    for a, b in itertools.combinations(range(len(outside)), 2):
        assert outside[a] & outside[b] == 0
    mins = [next(members(c)) for c in r.components]
    assert mins == sorted(mins)


@settings(max_examples=300, deadline=None)
@given(hypergraph_and_sets())
def test_separate_matches_union_find(args):
    h, edges, sep = args
    r = separate(edges, sep, h)
    assert (r.components, r.covered_edges) == separate_oracle(h, edges, sep)


# GYO


def test_gyo_examples(h_chain, h_tri):
    assert gyo_reduce(h_chain) is True
    assert gyo_reduce(h_tri) is False
    assert gyo_reduce(build_hypergraph([])) is True


@pytest.mark.parametrize("name,h", corpus.corpus(), ids=[n for n, _ in corpus.corpus()])
def test_gyo_order_independent(name, h):
    rng = random.Random(name)
    answers = {gyo_reduce(h, random.Random(rng.random())) for _ in range(20)}
    assert answers == {gyo_reduce(h)}


def test_gyo_known_shapes():
    assert gyo_reduce(corpus.path(12))
    assert gyo_reduce(corpus.star(6))
    assert not gyo_reduce(corpus.cycle(7))
    assert not gyo_reduce(corpus.grid2(2))
    # a big edge swallowing a cycle makes it acyclic
    h = build_hypergraph([("e1", ["a", "b"]), ("e2", ["b", "c"]), ("e3", ["c", "a"]),
                          ("big", ["a", "b", "c"])])
    assert gyo_reduce(h)
