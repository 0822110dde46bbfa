"""Hypergraph representation and set algebra over dense indices.

Vertex sets and edge sets are plain ``int`` bitmasks: bit ``i`` set means
index ``i`` is a member. Iteration is always in ascending index order, which
makes every enumeration in the search (and every cache key) deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from htdecomp import kernels

VertexSet = int
EdgeSet = int


class HypergraphError(ValueError):
    """Base class for malformed hypergraph input."""


class DuplicateEdgeName(HypergraphError):
    pass


class EmptyEdge(HypergraphError):
    pass


def members(mask: int) -> Iterator[int]:
    """Yield the indices set in ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class SeparationResult:
    components: list[EdgeSet]
    covered_edges: EdgeSet


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """Immutable hypergraph with interned vertex and edge names.

    ``edge_masks[i]`` is the vertex bitmask of edge ``i``. Use
    :func:`build_hypergraph` rather than constructing this directly.
    """

    edge_masks: tuple[int, ...]
    vertex_names: tuple[str, ...]
    edge_names: tuple[str, ...]
    backend: str | None = None
    _table: object = field(init=False, repr=False)
    _vertex_index: dict = field(init=False, repr=False)
    _edge_index: dict = field(init=False, repr=False)

    def __post_init__(self):
        table = kernels.edge_table(self.edge_masks, len(self.vertex_names), self.backend)
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_vertex_index", {n: i for i, n in enumerate(self.vertex_names)})
        object.__setattr__(self, "_edge_index", {n: i for i, n in enumerate(self.edge_names)})

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_names)

    @property
    def edge_count(self) -> int:
        return len(self.edge_masks)

    @property
    def all_edges(self) -> EdgeSet:
        return (1 << len(self.edge_masks)) - 1

    @property
    def kernel_backend(self) -> str:
        return self._table.backend

    def with_backend(self, backend: str) -> Hypergraph:
        """Return the same hypergraph bound to another kernel backend."""
        return Hypergraph(self.edge_masks, self.vertex_names, self.edge_names, backend)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.edge_masks, self.vertex_names, self.edge_names) == (
            other.edge_masks, other.vertex_names, other.edge_names)

    def __hash__(self):
        return hash((self.edge_masks, self.vertex_names, self.edge_names))

    def __repr__(self):
        return f"Hypergraph({self.edge_count} edges, {self.vertex_count} vertices)"

    # name <-> index helpers

    def vertex_set(self, names: Iterable[str]) -> VertexSet:
        return mask_of(self._vertex_index[n] for n in names)

    def edge_set(self, names: Iterable[str]) -> EdgeSet:
        return mask_of(self._edge_index[n] for n in names)

    def vertex_names_of(self, vs: VertexSet) -> list[str]:
        return [self.vertex_names[i] for i in members(vs)]

    def edge_names_of(self, es: EdgeSet) -> list[str]:
        return [self.edge_names[i] for i in members(es)]

    def edge_vertices(self, edge: int) -> tuple[int, ...]:
        return tuple(members(self.edge_masks[edge]))

    # set algebra (kernel-backed)

    def vertex_union(self, es: EdgeSet) -> VertexSet:
        return self._table.vertex_union(es)

    def bound_edges(self, conn: VertexSet) -> EdgeSet:
        return self._table.bound_edges(conn)

    def separate(self, edges: EdgeSet, separator: EdgeSet) -> SeparationResult:
        components, covered = self._table.separate(edges, separator)
        return SeparationResult(components, covered)


def build_hypergraph(edge_list: Sequence[tuple[str, Sequence[str]]],
                     backend: str | None = None) -> Hypergraph:
    """Intern names and build a :class:`Hypergraph`.

    Edge indices follow input order; vertex indices are assigned at first
    occurrence. Repeated vertices inside one edge collapse.
    """
    vertex_index: dict[str, int] = {}
    edge_names: list[str] = []
    seen: set[str] = set()
    masks: list[int] = []
    for name, vertices in edge_list:
        if name in seen:
            raise DuplicateEdgeName(f"duplicate edge name {name!r}")
        if not vertices:
            raise EmptyEdge(f"edge {name!r} has no vertices")
        seen.add(name)
        mask = 0
        for v in vertices:
            mask |= 1 << vertex_index.setdefault(v, len(vertex_index))
        edge_names.append(name)
        masks.append(mask)
    return Hypergraph(tuple(masks), tuple(vertex_index), tuple(edge_names), backend)


def vertex_union(es: EdgeSet, h: Hypergraph) -> VertexSet:
    return h.vertex_union(es)


def bound_edges(conn: VertexSet, h: Hypergraph) -> EdgeSet:
    """Edges of ``h`` sharing at least one vertex with ``conn``."""
    return h.bound_edges(conn)


def separate(edges: EdgeSet, separator: EdgeSet, h: Hypergraph) -> SeparationResult:
    """Split ``edges`` into [vertexUnion(separator)]-components.

    Edges outside the separator whose vertices all lie in the separator's
    vertex union belong to no component and are reported as covered edges.
    Components come out ordered by their smallest edge index.
    """
    return h.separate(edges, separator)


def gyo_reduce(h: Hypergraph, rng: random.Random | None = None) -> bool:
    """GYO reduction: True iff ``h`` is alpha-acyclic.

    With ``rng`` given, reduction steps are applied in a random order; the
    answer does not depend on it.
    """
    edges = [set(h.edge_vertices(i)) for i in range(h.edge_count)]
    changed = True
    while changed and edges:
        changed = False
        order = list(range(len(edges)))
        if rng is not None:
            rng.shuffle(order)
        occurrences: dict[int, int] = {}
        for e in edges:
            for v in e:
                occurrences[v] = occurrences.get(v, 0) + 1
        for i in order:
            lonely = {v for v in edges[i] if occurrences[v] == 1}
            if lonely:
                edges[i] -= lonely
                changed = True
                break
        if changed:
            edges = [e for e in edges if e]
            continue
        for i in order:
            if any(j != i and edges[i] <= edges[j] for j in range(len(edges))):
                del edges[i]
                changed = True
                break
    return not edges
