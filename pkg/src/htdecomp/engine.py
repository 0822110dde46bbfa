"""Backtracking search for hypertree decompositions of width at most k.

The search memoizes separator/component pairs: pairs whose component could
not be decomposed below the separator are never retried, and pairs already
decomposed once are answered by a placeholder node that :meth:`Decomposer.expand`
rebuilds after the search succeeds.
"""

from __future__ import annotations

import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass, field, fields
from typing import Iterator, NamedTuple

from htdecomp.cover import covers
from htdecomp.hypergraph import EdgeSet, Hypergraph, VertexSet, members, popcount

ACCEPT = "accept"
REJECT = "reject"


class DecompositionTimeout(Exception):
    """The cooperative deadline passed before the search finished."""


class ExpansionFailure(RuntimeError):
    """A cached success could not be re-derived. Indicates an engine bug."""


class Placeholder(NamedTuple):
    component: EdgeSet
    child_conn: VertexSet


@dataclass
class HTNode:
    """Decomposition tree node.

    ``lambda_`` is the edge label and ``chi`` the vertex label, both bitmasks.
    A placeholder node has no labels or children of its own; it stands for a
    component that is known to decompose below its parent.
    """

    lambda_: EdgeSet
    chi: VertexSet
    children: list[HTNode] = field(default_factory=list)
    placeholder: Placeholder | None = None

    @classmethod
    def make_placeholder(cls, component: EdgeSet, child_conn: VertexSet) -> HTNode:
        return cls(0, 0, [], Placeholder(component, child_conn))

    @property
    def is_placeholder(self) -> bool:
        return self.placeholder is not None

    def walk(self) -> Iterator[HTNode]:
        """Pre-order traversal without recursion."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def node_count(self) -> int:
        return sum(1 for _ in self.walk())

    def placeholder_count(self) -> int:
        return sum(1 for n in self.walk() if n.is_placeholder)

    def width(self) -> int:
        return max(popcount(n.lambda_) for n in self.walk())


class SepCompKey(NamedTuple):
    separator: tuple[int, ...]
    component: tuple[int, ...]


def cache_key(separator, comp) -> SepCompKey:
    """Canonical key for a separator/component pair.

    Accepts edge bitmasks or iterables of edge indices.
    """
    return SepCompKey(_canonical(separator), _canonical(comp))


def _canonical(es) -> tuple[int, ...]:
    if isinstance(es, int):
        return tuple(members(es))
    return tuple(sorted(set(es)))


@dataclass(frozen=True)
class EngineConfig:
    use_fail_cache: bool = True
    use_succ_cache: bool = True
    all_covers: bool = False
    empty_components: str = ACCEPT
    # extra internal assertions, used by the test suite
    check_invariants: bool = False

    def __post_init__(self):
        if self.empty_components not in (ACCEPT, REJECT):
            raise ValueError(f"empty_components must be {ACCEPT!r} or {REJECT!r}")


@dataclass
class EngineStats:
    decomp_cov_calls: int = 0
    decomp_add_calls: int = 0
    cover_candidates: int = 0
    fail_cache_hits: int = 0
    succ_cache_hits: int = 0
    placeholders: int = 0

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


class Decomposer:
    """One decomposition run: caches, configuration and counters.

    >>> from htdecomp.hypergraph import build_hypergraph
    >>> h = build_hypergraph([("e1", "ab"), ("e2", "bc"), ("e3", "ca")])
    >>> Decomposer(h, 1).run() is None
    True
    >>> Decomposer(h, 2).run().width()
    2
    """

    def __init__(self, h: Hypergraph, k: int, config: EngineConfig | None = None,
                 deadline: float | None = None):
        if k < 1:
            raise ValueError("k must be at least 1")
        self.h = h
        self.k = k
        self.config = config or EngineConfig()
        self.deadline = deadline
        self.stats = EngineStats()
        # keyed by (separator mask, component mask); masks are already canonical
        self.fail_seps: set[tuple[int, int]] = set()
        self.succ_seps: set[tuple[int, int]] = set()

    def failed_keys(self) -> set[SepCompKey]:
        return {cache_key(s, c) for s, c in self.fail_seps}

    def succeeded_keys(self) -> set[SepCompKey]:
        return {cache_key(s, c) for s, c in self.succ_seps}

    def run(self) -> HTNode | None:
        self.fail_seps = set()
        self.succ_seps = set()
        with _recursion_headroom(self.h.edge_count):
            tree = self.decomp_cov(self.h.all_edges, 0)
            if tree is not None:
                tree = self.expand(tree)
        return tree

    def _check_deadline(self):
        if self.deadline is not None and time.monotonic() >= self.deadline:
            raise DecompositionTimeout()

    def decomp_cov(self, edges: EdgeSet, conn: VertexSet) -> HTNode | None:
        self._check_deadline()
        self.stats.decomp_cov_calls += 1
        h = self.h
        if popcount(edges) <= self.k:
            return HTNode(edges, h.vertex_union(edges))
        candidates = covers(conn, h.bound_edges(conn), self.k, h, self.config.all_covers)
        for cov_sep in candidates:
            self.stats.cover_candidates += 1
            tree = self.decomp_add(edges, conn, cov_sep)
            if tree is not None:
                return tree
        return None

    def decomp_add(self, edges: EdgeSet, conn: VertexSet, cov_sep: EdgeSet) -> HTNode | None:
        self.stats.decomp_add_calls += 1
        h = self.h
        in_cov_sep = cov_sep & edges
        if not in_cov_sep and self.k - popcount(cov_sep) <= 0:
            return None
        if in_cov_sep:
            additions = [0]
        else:
            additions = [1 << e for e in members(edges)]
        for add_sep in additions:
            separator = cov_sep | add_sep
            split = h.separate(edges, separator)
            if self.config.use_fail_cache and any(
                    (separator, comp) in self.fail_seps for comp in split.components):
                self.stats.fail_cache_hits += 1
                continue
            subtrees = self.decomp_sub(split.components, separator, edges)
            if subtrees is None:
                continue
            if not subtrees and self.config.empty_components == REJECT:
                continue
            chi = conn | h.vertex_union(in_cov_sep | add_sep)
            if self.config.check_invariants:
                support = h.vertex_union(separator) & h.vertex_union(edges)
                assert support & ~chi == 0, "chi misses separator vertices inside edges"
            return HTNode(separator, chi, subtrees)
        return None

    def decomp_sub(self, components: list[EdgeSet], separator: EdgeSet,
                   parent_edges: EdgeSet | None = None) -> list[HTNode] | None:
        """Decompose every component below ``separator``.

        Returns the subtrees, possibly an empty list, or None if some
        component fails.
        """
        h = self.h
        sep_vertices = h.vertex_union(separator)
        subtrees = []
        for comp in components:
            if self.config.check_invariants and parent_edges is not None:
                assert comp & ~parent_edges == 0 and popcount(comp) < popcount(parent_edges)
            child_conn = h.vertex_union(comp) & sep_vertices
            pair = (separator, comp)
            if self.config.use_succ_cache and pair in self.succ_seps:
                self.stats.succ_cache_hits += 1
                self.stats.placeholders += 1
                subtrees.append(HTNode.make_placeholder(comp, child_conn))
                continue
            tree = self.decomp_cov(comp, child_conn)
            if tree is None:
                if self.config.use_fail_cache:
                    self.fail_seps.add(pair)
                    if self.config.check_invariants:
                        assert pair not in self.succ_seps
                return None
            if self.config.use_succ_cache:
                self.succ_seps.add(pair)
                if self.config.check_invariants:
                    assert pair not in self.fail_seps
            subtrees.append(tree)
        return subtrees

    def expand(self, root: HTNode) -> HTNode:
        """Replace every placeholder by a re-derived subtree, in place."""
        if root.is_placeholder:
            root = self._rederive(root)
        stack = [root]
        while stack:
            node = stack.pop()
            for i, child in enumerate(node.children):
                if child.is_placeholder:
                    child = node.children[i] = self._rederive(child)
                stack.append(child)
        return root

    def _rederive(self, node: HTNode) -> HTNode:
        comp, child_conn = node.placeholder
        with _recursion_headroom(self.h.edge_count):
            tree = self.decomp_cov(comp, child_conn)
        if tree is None:
            raise ExpansionFailure(f"cached component {list(members(comp))} did not decompose")
        return tree


@contextmanager
def _recursion_headroom(depth: int):
    # three frames per search level plus the cover generator
    needed = 5 * depth + 200
    old = sys.getrecursionlimit()
    if needed > old:
        sys.setrecursionlimit(needed)
    try:
        yield
    finally:
        if needed > old:
            sys.setrecursionlimit(old)


def det_k_decomp(h: Hypergraph, k: int, config: EngineConfig | None = None,
                 timeout: float | None = None) -> HTNode | None:
    """Hypertree decomposition of ``h`` with width <= k, or None if none exists.

    Raises :class:`DecompositionTimeout` once ``timeout`` seconds have passed.
    """
    deadline = None if timeout is None else time.monotonic() + timeout
    return Decomposer(h, k, config, deadline).run()
