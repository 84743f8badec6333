"""JSON interchange documents and DOT export.

Hypergraph documents look like ``{"ground": [...], "edges": [[...], ...]}``
with an optional ``"labels"`` dictionary mapping names to vertices.  Graph
documents look like ``{"vertices": p, "edges": [[u, v], ...]}`` with
optional ``"vertex_colors"``, ``"edge_colors"`` and ``"X"`` entries.
Vertex color keys are vertex indices and edge color keys are ``"u,v"``.
"""
from __future__ import annotations

import dataclasses
import json
import math
from typing import Any, Optional

from .core import Hypergraph, Verdict, format_edge
from .errors import HypertopoError
from .graph import Graph, make_pair
from .intersected import SetColoredGraph


class DocumentError(HypertopoError):
    """A document failed to parse or does not match its schema.

    JSON syntax errors carry ``line`` and ``column``; schema errors carry a
    ``path`` such as ``$.edges[2][0]``.
    """

    def __init__(self, message: str, source: str = "<input>", line: Optional[int] = None,
                 column: Optional[int] = None, path: Optional[str] = None):
        self.message = message
        self.source = source
        self.line = line
        self.column = column
        self.path = path
        where = source
        if line is not None:
            where += f":{line}:{column}"
        if path is not None:
            where += f": at {path}"
        super().__init__(f"{where}: {message}")

    def to_dict(self) -> dict:
        out = {"kind": "document", "message": self.message, "source": self.source}
        if self.line is not None:
            out["line"] = self.line
            out["column"] = self.column
        if self.path is not None:
            out["path"] = self.path
        return out


# --------------------------------------------------------------------------
# serialization


def to_jsonable(value: Any) -> Any:
    """Convert library values (dataclasses, tuples, sets, tuple-keyed dicts)
    to plain JSON values."""
    if isinstance(value, Hypergraph):
        return hypergraph_to_dict(value)
    if isinstance(value, Verdict):
        return {"ok": value.ok, "witness": to_jsonable(value.witness),
                "violations": to_jsonable(value.violations)}
    if hasattr(value, "to_dict") and not isinstance(value, type):
        return to_jsonable(value.to_dict())
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {_key(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((to_jsonable(v) for v in value), key=_sort_key)
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return value


def _key(k: Any) -> str:
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)


def _sort_key(v: Any):
    return json.dumps(v, sort_keys=True)


def dumps(value: Any) -> str:
    """Deterministic JSON: sorted keys, two-space indent, scalar-only lists
    on one line, trailing newline."""
    return _render(to_jsonable(value), 0) + "\n"


def _render(v: Any, depth: int) -> str:
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_render(v[k], depth + 1)}" for k in sorted(v)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(v, list):
        if all(not isinstance(x, (dict, list)) for x in v):
            return "[" + ", ".join(json.dumps(x) for x in v) + "]"
        return "[\n" + ",\n".join(inner + _render(x, depth + 1) for x in v) + "\n" + pad + "]"
    return json.dumps(v)


def hypergraph_to_dict(h: Hypergraph, labels: Optional[dict] = None) -> dict:
    out: dict = {"ground": list(h.ground), "edges": [list(e) for e in h.edges]}
    if labels:
        out["labels"] = dict(sorted(labels.items()))
    return out


def serialize_hypergraph(h: Hypergraph, labels: Optional[dict] = None) -> str:
    return dumps(hypergraph_to_dict(h, labels))


def graph_to_dict(g: Graph, vertex_colors=None, edge_colors=None, X=None) -> dict:
    out: dict = {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}
    if vertex_colors is not None:
        out["vertex_colors"] = {str(v): _color_out(c) for v, c in sorted(dict(vertex_colors).items())}
    if edge_colors is not None:
        out["edge_colors"] = {_key(e): _color_out(c) for e, c in sorted(dict(edge_colors).items())}
    if X is not None:
        out["X"] = sorted(X)
    return out


def set_colored_to_dict(g: SetColoredGraph) -> dict:
    return graph_to_dict(g.graph, dict(enumerate(g.vertex_labels)), g.edge_labels)


def _color_out(c: Any) -> Any:
    return list(c) if isinstance(c, tuple) else c


# --------------------------------------------------------------------------
# parsing


def load_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, source, exc.lineno, exc.colno) from None


def _fail(source: str, path: str, message: str) -> DocumentError:
    return DocumentError(message, source, path=path)


def _require_keys(doc: Any, source: str, required: tuple, optional: tuple) -> None:
    if not isinstance(doc, dict):
        raise _fail(source, "$", "expected a JSON object")
    for k in required:
        if k not in doc:
            raise _fail(source, "$", f"missing key {k!r}")
    extra = sorted(set(doc) - set(required) - set(optional))
    if extra:
        raise _fail(source, f"$.{extra[0]}", "unknown key")


def _int(v: Any, source: str, path: str, minimum: int = 0) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise _fail(source, path, f"expected an integer, got {json.dumps(v)}")
    if v < minimum:
        raise _fail(source, path, f"expected an integer >= {minimum}, got {v}")
    return v


def _list(v: Any, source: str, path: str) -> list:
    if not isinstance(v, list):
        raise _fail(source, path, "expected an array")
    return v


def parse_hypergraph(text: str, source: str = "<input>") -> tuple[Hypergraph, Optional[dict]]:
    """Parse a hypergraph document; returns the hypergraph and its label
    dictionary (or None).  With a label dictionary, members may be given by
    name."""
    doc = load_json(text, source)
    return hypergraph_from_doc(doc, source)


def hypergraph_from_doc(doc: Any, source: str = "<input>") -> tuple[Hypergraph, Optional[dict]]:
    _require_keys(doc, source, ("edges",), ("ground", "labels"))
    labels = None
    if "labels" in doc:
        raw = doc["labels"]
        if not isinstance(raw, dict):
            raise _fail(source, "$.labels", "expected an object mapping names to integers")
        labels = {name: _int(v, source, f"$.labels.{name}") for name, v in raw.items()}
        if len(set(labels.values())) != len(labels):
            raise _fail(source, "$.labels", "two names map to the same vertex")

    def member(v: Any, path: str) -> int:
        if isinstance(v, str):
            if labels is None or v not in labels:
                raise _fail(source, path, f"unknown label {v!r}")
            return labels[v]
        return _int(v, source, path)

    edges = []
    for i, e in enumerate(_list(doc["edges"], source, "$.edges")):
        path = f"$.edges[{i}]"
        members = [member(x, f"{path}[{j}]") for j, x in enumerate(_list(e, source, path))]
        if not members:
            raise _fail(source, path, "hyperedges must be nonempty")
        edges.append(members)
    ground = None
    if "ground" in doc:
        ground = [member(x, f"$.ground[{j}]") for j, x in enumerate(_list(doc["ground"], source, "$.ground"))]
    try:
        return Hypergraph(tuple(edges), None if ground is None else tuple(ground)), labels
    except HypertopoError as exc:
        raise _fail(source, "$", str(exc)) from None


def parse_graph(text: str, source: str = "<input>") -> dict:
    """Parse a graph document into ``{"graph", "vertex_colors",
    "edge_colors", "X"}`` (absent entries are None)."""
    doc = load_json(text, source)
    _require_keys(doc, source, ("vertices", "edges"), ("vertex_colors", "edge_colors", "X"))
    p = _int(doc["vertices"], source, "$.vertices")
    pairs = []
    for i, e in enumerate(_list(doc["edges"], source, "$.edges")):
        path = f"$.edges[{i}]"
        e = _list(e, source, path)
        if len(e) != 2:
            raise _fail(source, path, "an edge needs exactly two endpoints")
        u, v = (_int(x, source, f"{path}[{j}]") for j, x in enumerate(e))
        if u >= p or v >= p:
            raise _fail(source, path, f"endpoint outside 0..{p - 1}")
        if u == v:
            raise _fail(source, path, "loops are not allowed")
        pairs.append(make_pair(u, v))
    try:
        graph = Graph(p, tuple(pairs))
    except HypertopoError as exc:
        raise _fail(source, "$.edges", str(exc)) from None

    def color(v: Any, path: str):
        if isinstance(v, list):
            return tuple(_int(x, source, f"{path}[{j}]") for j, x in enumerate(v))
        return _int(v, source, path, minimum=-(10 ** 18))

    vc = ec = X = None
    if "vertex_colors" in doc:
        raw = doc["vertex_colors"]
        if not isinstance(raw, dict):
            raise _fail(source, "$.vertex_colors", "expected an object")
        vc = {}
        for key, val in raw.items():
            path = f"$.vertex_colors.{key}"
            if not key.isdigit() or int(key) >= p:
                raise _fail(source, path, "key must be a vertex index")
            vc[int(key)] = color(val, path)
    if "edge_colors" in doc:
        raw = doc["edge_colors"]
        if not isinstance(raw, dict):
            raise _fail(source, "$.edge_colors", "expected an object")
        ec = {}
        for key, val in raw.items():
            path = f"$.edge_colors.{key}"
            ends = key.split(",")
            if len(ends) != 2 or not all(x.strip().isdigit() for x in ends):
                raise _fail(source, path, "key must be 'u,v'")
            pair = make_pair(int(ends[0]), int(ends[1]))
            if pair not in graph.edge_set:
                raise _fail(source, path, "not an edge of the graph")
            ec[pair] = color(val, path)
    if "X" in doc:
        X = [_int(x, source, f"$.X[{j}]") for j, x in enumerate(_list(doc["X"], source, "$.X"))]
    return {"graph": graph, "vertex_colors": vc, "edge_colors": ec, "X": X}


# --------------------------------------------------------------------------
# DOT


def to_dot(g: SetColoredGraph, name: str = "G") -> str:
    """Undirected DOT with vertices ``v<i>`` labeled by their sets and
    edges labeled by their set labels (or the endpoint intersection)."""
    lines = [f"graph {name} {{"]
    for i, lab in enumerate(g.vertex_labels):
        lines.append(f'  v{i} [label="{format_edge(lab)}"];')
    for u, v in g.graph.edges:
        if g.edge_labels is not None:
            lab = g.edge_labels[(u, v)]
        else:
            lab = tuple(sorted(set(g.vertex_labels[u]) & set(g.vertex_labels[v])))
        lines.append(f'  v{u} -- v{v} [label="{format_edge(lab)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
