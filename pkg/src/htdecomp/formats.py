"""Hypergraph text format and decomposition output formats.

Input is the usual benchmark notation::

    % comment
    e1(a, b),
    e2(b, c).

Output is one of ``text``, ``gml`` or ``json``.
"""

from __future__ import annotations

import json
import re

from htdecomp.engine import HTNode
from htdecomp.hypergraph import Hypergraph, HypergraphError, build_hypergraph, members

FORMATS = ("text", "gml", "json")

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<name>[A-Za-z0-9_:]+)
  | (?P<punct>[(),.])
""", re.VERBOSE)


class HypergraphSyntaxError(HypergraphError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MissingTerminator(HypergraphSyntaxError):
    pass


class PlaceholderPresent(ValueError):
    pass


def _tokens(text: str):
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise HypergraphSyntaxError(f"unexpected character {text[pos]!r}",
                                        line, pos - line_start + 1)
        kind = m.lastgroup
        if kind in ("name", "punct"):
            yield m.group(), line, pos - line_start + 1
        chunk = m.group()
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    yield None, line, pos - line_start + 1


def parse_hypergraph(text: str, backend: str | None = None) -> Hypergraph:
    """Parse the edge-term format into a :class:`Hypergraph`.

    A lone ``.`` denotes the empty hypergraph.
    """
    tokens = _tokens(text)
    edges: list[tuple[str, list[str]]] = []

    def expect_name(tok, line, col, what):
        if tok is None:
            raise MissingTerminator(f"input ended while expecting {what}", line, col)
        if not _is_name(tok):
            raise HypergraphSyntaxError(f"expected {what}, found {tok!r}", line, col)

    tok, line, col = next(tokens)
    if tok == ".":
        _expect_end(tokens)
        return build_hypergraph([], backend)
    while True:
        expect_name(tok, line, col, "edge name")
        name = tok
        tok, line, col = next(tokens)
        if tok != "(":
            if tok is None:
                raise MissingTerminator("input ended inside an edge", line, col)
            raise HypergraphSyntaxError(f"expected '(' after {name!r}, found {tok!r}", line, col)
        vertices: list[str] = []
        tok, line, col = next(tokens)
        if tok != ")":
            while True:
                expect_name(tok, line, col, "vertex name")
                vertices.append(tok)
                tok, line, col = next(tokens)
                if tok == ")":
                    break
                if tok != ",":
                    if tok is None:
                        raise MissingTerminator("input ended inside an edge", line, col)
                    raise HypergraphSyntaxError(f"expected ',' or ')', found {tok!r}", line, col)
                tok, line, col = next(tokens)
        edges.append((name, vertices))
        tok, line, col = next(tokens)
        if tok == ".":
            _expect_end(tokens)
            break
        if tok is None:
            raise MissingTerminator("missing final '.'", line, col)
        if tok != ",":
            raise HypergraphSyntaxError(f"expected ',' or '.', found {tok!r}", line, col)
        tok, line, col = next(tokens)
    return build_hypergraph(edges, backend)


def _is_name(tok: str) -> bool:
    return tok not in ("(", ")", ",", ".")


def _expect_end(tokens):
    tok, line, col = next(tokens)
    if tok is not None:
        raise HypergraphSyntaxError(f"unexpected {tok!r} after final '.'", line, col)


def read_hypergraph(path, backend: str | None = None) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph(fh.read(), backend)


def format_hypergraph(h: Hypergraph) -> str:
    """Inverse of :func:`parse_hypergraph`."""
    if not h.edge_count:
        return ".\n"
    terms = [f"{h.edge_names[i]}({','.join(h.vertex_names_of(m))})"
             for i, m in enumerate(h.edge_masks)]
    return ",\n".join(terms) + ".\n"


# decomposition output

def _sorted_names(table, mask):
    return sorted(table[i] for i in members(mask))


def node_label(h: Hypergraph, node: HTNode) -> str:
    lam = ",".join(_sorted_names(h.edge_names, node.lambda_))
    chi = ",".join(_sorted_names(h.vertex_names, node.chi))
    return f"lambda: {{{lam}}} chi: {{{chi}}}"


def _preorder_with_depth(tree: HTNode):
    stack = [(tree, 0, -1)]
    index = 0
    while stack:
        node, depth, parent = stack.pop()
        if node.is_placeholder:
            raise PlaceholderPresent("tree still contains placeholder nodes")
        yield index, node, depth, parent
        me = index
        index += 1
        stack.extend((c, depth + 1, me) for c in reversed(node.children))


def to_text(h: Hypergraph, tree: HTNode) -> str:
    return "".join("  " * depth + node_label(h, node) + "\n"
                   for _, node, depth, _ in _preorder_with_depth(tree))


def to_gml(h: Hypergraph, tree: HTNode) -> str:
    nodes, arcs = [], []
    for idx, node, _, parent in _preorder_with_depth(tree):
        nodes.append(f'  node [\n    id {idx}\n    label "{node_label(h, node)}"\n  ]\n')
        if parent >= 0:
            arcs.append(f"  edge [\n    source {parent}\n    target {idx}\n  ]\n")
    return "graph [\n  directed 1\n" + "".join(nodes) + "".join(arcs) + "]\n"


def to_json_obj(h: Hypergraph, tree: HTNode) -> dict:
    objs: dict[int, dict] = {}
    root = None
    for idx, node, _, parent in _preorder_with_depth(tree):
        obj = {"lambda": _sorted_names(h.edge_names, node.lambda_),
               "chi": _sorted_names(h.vertex_names, node.chi),
               "children": []}
        objs[idx] = obj
        if parent < 0:
            root = obj
        else:
            objs[parent]["children"].append(obj)
    return root


def to_json(h: Hypergraph, tree: HTNode) -> str:
    return json.dumps(to_json_obj(h, tree), indent=2) + "\n"


def serialize_decomposition(h: Hypergraph, tree: HTNode, fmt: str = "text") -> str:
    if fmt == "text":
        return to_text(h, tree)
    if fmt == "gml":
        return to_gml(h, tree)
    if fmt == "json":
        return to_json(h, tree)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def tree_from_json(h: Hypergraph, data) -> HTNode:
    """Rebuild a tree from :func:`to_json` output (a string or parsed object)."""
    if isinstance(data, str):
        data = json.loads(data)

    def build(obj):
        return HTNode(h.edge_set(obj["lambda"]), h.vertex_set(obj["chi"]))

    root = build(data)
    stack = [(data, root)]
    while stack:
        obj, node = stack.pop()
        for child_obj in obj["children"]:
            child = build(child_obj)
            node.children.append(child)
            stack.append((child_obj, child))
    return root
