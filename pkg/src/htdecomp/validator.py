"""Independent checks that a tree is a hypertree decomposition.

Only the hypergraph and the tree are consulted. Labels are converted to plain
Python sets of indices so that nothing here shares code with the search
kernels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from htdecomp.hypergraph import Hypergraph

EDGE_COVERAGE = "edge_coverage"
CONNECTEDNESS = "connectedness"
CHI_SUBSET = "chi_subset_lambda"
SPECIAL = "special_condition"
STRUCTURE = "structure"


@dataclass(frozen=True)
class Violation:
    condition: str
    path: tuple[int, ...]
    detail: str


@dataclass
class ValidationReport:
    edge_coverage_ok: bool
    connectedness_ok: bool
    chi_subset_ok: bool
    special_condition_ok: bool
    width: int
    k: int | None = None
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return (self.edge_coverage_ok and self.connectedness_ok
                and self.chi_subset_ok and self.special_condition_ok)

    @property
    def within_width(self) -> bool:
        return self.k is None or self.width <= self.k

    @property
    def ok(self) -> bool:
        return self.valid and self.within_width


def _to_set(mask: int) -> set[int]:
    return {i for i, bit in enumerate(reversed(bin(mask)[2:])) if bit == "1"}


class _Flat:
    """Tree flattened into pre-order arrays of parents, paths and label sets."""

    def __init__(self, h: Hypergraph, tree):
        self.parent: list[int] = []
        self.paths: list[tuple[int, ...]] = []
        self.chi: list[set[int]] = []
        self.lam: list[set[int]] = []
        self.lam_vertices: list[set[int]] = []
        self.placeholders: list[int] = []
        self.edges = edges = [_to_set(m) for m in h.edge_masks]
        stack = [(tree, -1, ())]
        while stack:
            node, parent, path = stack.pop()
            idx = len(self.parent)
            self.parent.append(parent)
            self.paths.append(path)
            if node.placeholder is not None:
                self.placeholders.append(idx)
            self.chi.append(_to_set(node.chi))
            lam = _to_set(node.lambda_)
            self.lam.append(lam)
            self.lam_vertices.append(set().union(*(edges[e] for e in lam)) if lam else set())
            for i in range(len(node.children) - 1, -1, -1):
                stack.append((node.children[i], idx, path + (i,)))

    def __len__(self):
        return len(self.parent)


def _names(h: Hypergraph, indices, kind: str) -> str:
    table = h.vertex_names if kind == "v" else h.edge_names
    return ",".join(table[i] for i in sorted(indices))


def _edge_coverage(h: Hypergraph, flat: _Flat) -> list[Violation]:
    holders: dict[int, list[int]] = {}
    for i, chi in enumerate(flat.chi):
        for v in chi:
            holders.setdefault(v, []).append(i)
    missing = []
    for e, verts in enumerate(flat.edges):
        probe = min(verts)
        if not any(verts <= flat.chi[i] for i in holders.get(probe, ())):
            missing.append(e)
    if not missing:
        return []
    return [Violation(EDGE_COVERAGE, (), f"edges not covered by any chi: {_names(h, missing, 'e')}")]


def _connectedness(h: Hypergraph, flat: _Flat) -> list[Violation]:
    # nodes holding v form a connected subtree iff exactly one of them has a
    # parent that does not hold v (or is the root)
    tops: dict[int, list[int]] = {}
    for i in range(len(flat)):
        p = flat.parent[i]
        for v in flat.chi[i]:
            if p < 0 or v not in flat.chi[p]:
                tops.setdefault(v, []).append(i)
    out = []
    for v in sorted(tops):
        if len(tops[v]) > 1:
            paths = "; ".join(str(list(flat.paths[i])) for i in tops[v])
            out.append(Violation(CONNECTEDNESS, flat.paths[tops[v][1]],
                                 f"vertex {h.vertex_names[v]} occurs in disconnected parts rooted at {paths}"))
    return out


def _chi_subset(h: Hypergraph, flat: _Flat) -> list[Violation]:
    out = []
    for i in range(len(flat)):
        extra = flat.chi[i] - flat.lam_vertices[i]
        if extra:
            out.append(Violation(CHI_SUBSET, flat.paths[i],
                                 f"chi vertices outside lambda: {_names(h, extra, 'v')}"))
    return out


def _special(h: Hypergraph, flat: _Flat) -> list[Violation]:
    below = [set(c) for c in flat.chi]
    # children come after their parent in pre-order
    for i in range(len(flat) - 1, 0, -1):
        below[flat.parent[i]] |= below[i]
    out = []
    for i in range(len(flat)):
        bad = (flat.lam_vertices[i] & below[i]) - flat.chi[i]
        if bad:
            out.append(Violation(SPECIAL, flat.paths[i],
                                 f"lambda vertices used below but missing from chi: {_names(h, bad, 'v')}"))
    return out


def _checked(h, tree, check):
    flat = _Flat(h, tree)
    return not flat.placeholders and not check(h, flat)


def check_edge_coverage(h: Hypergraph, tree) -> bool:
    return _checked(h, tree, _edge_coverage)


def check_connectedness(h: Hypergraph, tree) -> bool:
    return _checked(h, tree, _connectedness)


def check_chi_subset_lambda(h: Hypergraph, tree) -> bool:
    return _checked(h, tree, _chi_subset)


def check_special_condition(h: Hypergraph, tree) -> bool:
    return _checked(h, tree, _special)


def validate(h: Hypergraph, tree, k: int | None = None) -> ValidationReport:
    """Run all four conditions and compute the width of ``tree``.

    Placeholder nodes are reported as structural violations and fail every
    condition.
    """
    flat = _Flat(h, tree)
    width = max((len(lam) for lam in flat.lam), default=0)
    if flat.placeholders:
        violations = [Violation(STRUCTURE, flat.paths[i], "unexpanded placeholder")
                      for i in flat.placeholders]
        return ValidationReport(False, False, False, False, width, k, violations)
    cov = _edge_coverage(h, flat)
    conn = _connectedness(h, flat)
    sub = _chi_subset(h, flat)
    special = _special(h, flat)
    return ValidationReport(not cov, not conn, not sub, not special, width, k,
                            cov + conn + sub + special)
