"""Bounded-width hypertree decompositions.

>>> from htdecomp import build_hypergraph, det_k_decomp, validate
>>> h = build_hypergraph([("e1", ["a", "b"]), ("e2", ["b", "c"]), ("e3", ["c", "a"])])
>>> det_k_decomp(h, 1) is None
True
>>> validate(h, det_k_decomp(h, 2), 2).ok
True
"""

from htdecomp.cover import covers
from htdecomp.engine import (
    Decomposer,
    DecompositionTimeout,
    EngineConfig,
    EngineStats,
    ExpansionFailure,
    HTNode,
    SepCompKey,
    cache_key,
    det_k_decomp,
)
from htdecomp.formats import (
    parse_hypergraph,
    read_hypergraph,
    serialize_decomposition,
    tree_from_json,
)
from htdecomp.hypergraph import (
    DuplicateEdgeName,
    EmptyEdge,
    Hypergraph,
    SeparationResult,
    bound_edges,
    build_hypergraph,
    gyo_reduce,
    separate,
    vertex_union,
)
from htdecomp.kernels import DEFAULT_BACKEND, available_backends
from htdecomp.validator import ValidationReport, validate

__all__ = [
    "DEFAULT_BACKEND", "Decomposer", "DecompositionTimeout", "DuplicateEdgeName",
    "EmptyEdge", "EngineConfig", "EngineStats", "ExpansionFailure", "HTNode",
    "Hypergraph", "SepCompKey", "SeparationResult", "ValidationReport",
    "available_backends", "bound_edges", "build_hypergraph", "cache_key", "covers",
    "det_k_decomp", "gyo_reduce", "parse_hypergraph", "read_hypergraph", "separate",
    "serialize_decomposition", "tree_from_json", "validate", "vertex_union",
]
