"""Enumeration of candidate cover separators.

A cover of ``conn`` is a set of edges whose vertex union contains ``conn``.
Candidates are emitted by size, then lexicographically on their sorted edge
indices. By default only irredundant covers are produced: every edge must
cover some vertex of ``conn`` that no other chosen edge covers.
"""

from __future__ import annotations

from typing import Iterator

from htdecomp.hypergraph import EdgeSet, Hypergraph, VertexSet, members


def covers(conn: VertexSet, bound_edges: EdgeSet, k: int, h: Hypergraph,
           all_covers: bool = False) -> Iterator[EdgeSet]:
    """Yield covers of ``conn`` drawn from ``bound_edges`` with at most ``k`` edges.

    An uncoverable ``conn`` yields nothing. With ``all_covers`` every cover of
    size <= k is produced, redundant ones included.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    pool = list(members(bound_edges))
    # restricting each edge to conn is all coverage depends on
    hits = [h.edge_masks[e] & conn for e in pool]
    if not all_covers and not conn:
        yield 0
        return
    reach = 0
    for m in hits:
        reach |= m
    if reach & conn != conn:
        return
    start_size = 0 if all_covers else 1
    for size in range(start_size, min(k, len(pool)) + 1):
        if all_covers:
            yield from _all_of_size(conn, pool, hits, size)
        else:
            yield from _irredundant_of_size(conn, pool, hits, size)


def _suffix_unions(hits: list[int]) -> list[int]:
    suffix = [0] * (len(hits) + 1)
    for i in range(len(hits) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | hits[i]
    return suffix


def _irredundant_of_size(conn, pool, hits, size):
    n = len(pool)
    suffix = _suffix_unions(hits)
    chosen: list[int] = []

    def extend(start, covered, slots):
        if slots == 0:
            if covered == conn and _irredundant(chosen, hits):
                yield sum(1 << pool[i] for i in chosen)
            return
        for i in range(start, n - slots + 1):
            gain = hits[i] & ~covered
            if not gain:
                # contributes nothing now, so it can never be irredundant
                continue
            now = covered | gain
            if slots > 1 and now == conn:
                # any further edge would be redundant
                continue
            if (now | suffix[i + 1]) != conn and slots > 1:
                continue
            if slots == 1 and now != conn:
                continue
            chosen.append(i)
            yield from extend(i + 1, now, slots - 1)
            chosen.pop()

    yield from extend(0, 0, size)


def _irredundant(chosen, hits):
    for i in chosen:
        others = 0
        for j in chosen:
            if j != i:
                others |= hits[j]
        if not hits[i] & ~others:
            return False
    return True


def _all_of_size(conn, pool, hits, size):
    n = len(pool)
    suffix = _suffix_unions(hits)
    chosen: list[int] = []

    def extend(start, covered, slots):
        if slots == 0:
            if covered == conn:
                yield sum(1 << pool[i] for i in chosen)
            return
        for i in range(start, n - slots + 1):
            if (covered | suffix[i]) != conn:
                break
            chosen.append(i)
            yield from extend(i + 1, covered | hits[i], slots - 1)
            chosen.pop()

    yield from extend(0, 0, size)
