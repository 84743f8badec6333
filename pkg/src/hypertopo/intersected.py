"""Intersection graphs of hyperedge families and operations on them."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .core import (
    Hyperedge,
    HyperedgeSet,
    Hypergraph,
    Verdict,
    degree_series,
    format_edge,
    hyperedge_degrees,
    make_edge,
)
from .errors import PreconditionError, SizeLimitError
from .graph import (
    Edge,
    Graph,
    bfs_order,
    components,
    diameter,
    induced_without,
    is_connected,
    is_tree,
    make_pair,
)

EXHAUSTIVE_CUT_LIMIT = 16
CONNECTIVITY_LIMIT = 64
HAMILTONIAN_LIMIT = 12
ISOMORPHISM_LIMIT = 8
INDUCE_LIMIT = 200
DOMINATION_LIMIT = 24


@dataclass(frozen=True)
class SetColoredGraph:
    """A graph whose vertices (and optionally edges) carry set labels."""

    graph: Graph
    vertex_labels: tuple[Hyperedge, ...]
    edge_labels: Optional[Mapping[Edge, Hyperedge]] = None

    def __post_init__(self):
        labels = tuple(make_edge(x) for x in self.vertex_labels)
        if len(labels) != self.graph.vertex_count:
            raise PreconditionError(
                f"{len(labels)} vertex labels for {self.graph.vertex_count} vertices"
            )
        object.__setattr__(self, "vertex_labels", labels)
        if self.edge_labels is not None:
            fixed = {}
            for e, lab in self.edge_labels.items():
                pair = make_pair(*e)
                if pair not in self.graph.edge_set:
                    raise PreconditionError(f"edge label given for non-edge {pair}")
                fixed[pair] = make_edge(lab)
            missing = [e for e in self.graph.edges if e not in fixed]
            if missing:
                raise PreconditionError(f"edge {missing[0]} has no label")
            object.__setattr__(self, "edge_labels", dict(sorted(fixed.items())))

    def label_hypergraph(self, ground: Optional[Iterable[int]] = None) -> Hypergraph:
        """The family of all vertex and edge labels."""
        labels = list(self.vertex_labels)
        if self.edge_labels:
            labels.extend(self.edge_labels.values())
        return Hypergraph(tuple(labels), None if ground is None else tuple(ground))


@dataclass(frozen=True)
class CheckReport:
    """Named verdicts with an overall pass flag."""

    checks: dict
    passed: bool
    notes: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def failed(self) -> list[str]:
        return [name for name, v in self.checks.items() if not v.ok]


def _report(checks: dict, notes: Optional[dict] = None) -> CheckReport:
    return CheckReport(checks, all(v.ok for v in checks.values()), notes or {})


# --------------------------------------------------------------------------
# builders and verifiers


def build_v_intersected(h: Hypergraph) -> SetColoredGraph:
    """One vertex per hyperedge, adjacent when the edges meet; each graph edge
    is labeled with the intersection."""
    sets = h.edge_sets
    pairs, labels = [], {}
    for i, j in itertools.combinations(range(len(sets)), 2):
        common = sets[i] & sets[j]
        if common:
            pairs.append((i, j))
            labels[(i, j)] = tuple(sorted(common))
    return SetColoredGraph(Graph(len(sets), tuple(pairs)), h.edges, labels)


def verify_v_intersected(
    g: SetColoredGraph, h: Hypergraph, allow_equal_endpoint_labels: bool = False
) -> CheckReport:
    """Vertex labels are exactly the family, adjacent labels meet, and every
    meeting pair of vertex labels is joined by some edge."""
    vl = g.vertex_labels
    checks = {}
    bad = [e for e in g.graph.edges if vl[e[0]] == vl[e[1]]]
    checks["distinct_endpoints"] = (
        Verdict(True) if allow_equal_endpoint_labels or not bad else Verdict(False, bad[0], tuple(bad))
    )
    bad = [e for e in g.graph.edges if not set(vl[e[0]]) & set(vl[e[1]])]
    checks["adjacent_meet"] = Verdict(not bad, bad[0] if bad else None, tuple(bad))
    have, want = set(vl), set(h.edges)
    diff = sorted(have ^ want)
    checks["label_set"] = Verdict(not diff, diff[0] if diff else None, tuple(diff))
    checks["converse"] = _converse(g)
    return _report(checks)


def _converse(g: SetColoredGraph) -> Verdict:
    vl = g.vertex_labels
    realized = {frozenset((vl[u], vl[v])) for u, v in g.graph.edges}
    distinct = sorted(set(vl))
    bad = [
        (a, b)
        for a, b in itertools.combinations(distinct, 2)
        if set(a) & set(b) and frozenset((a, b)) not in realized
    ]
    return Verdict(not bad, bad[0] if bad else None, tuple(bad))


def verify_ve_intersected(
    g: SetColoredGraph, h: Hypergraph, allow_equal_endpoint_labels: bool = False
) -> CheckReport:
    """Check the ve-intersected conditions against the family ``h``.

    Edge labels may be any superset of the endpoint intersection.  The label
    set check compares all vertex and edge labels with the edges of ``h``.
    """
    if g.edge_labels is None:
        raise PreconditionError("ve-intersected verification needs edge labels")
    vl, el = g.vertex_labels, g.edge_labels
    checks = {}
    bad = [e for e in g.graph.edges if vl[e[0]] == vl[e[1]]]
    checks["distinct_endpoints"] = (
        Verdict(True) if allow_equal_endpoint_labels or not bad else Verdict(False, bad[0], tuple(bad))
    )
    bad = []
    for e in g.graph.edges:
        common = set(vl[e[0]]) & set(vl[e[1]])
        if not common:
            bad.append((e, None))
        else:
            lacking = sorted(common - set(el[e]))
            if lacking:
                bad.append((e, lacking[0]))
    checks["containment"] = Verdict(not bad, bad[0] if bad else None, tuple(bad))
    have = set(vl) | set(el.values())
    diff = sorted(have ^ set(h.edges))
    checks["label_set"] = Verdict(not diff, diff[0] if diff else None, tuple(diff))
    checks["converse"] = _converse(g)
    return _report(checks)


# --------------------------------------------------------------------------
# connectivity


@dataclass(frozen=True)
class Connectivity:
    value: int
    cut: HyperedgeSet
    cut_indices: tuple[int, ...]
    components: tuple[HyperedgeSet, ...] = ()
    method: str = ""


def _disconnects(g: Graph, removed: Sequence[int]) -> bool:
    rest = induced_without(g, removed)
    return rest.vertex_count >= 2 and not is_connected(rest)


def min_vertex_cut_exhaustive(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Smallest vertex set whose removal disconnects ``g``, first in
    canonical order.  Complete graphs report ``n-1`` with vertices
    ``0..n-2``."""
    n = g.vertex_count
    if n > EXHAUSTIVE_CUT_LIMIT:
        raise SizeLimitError(f"exhaustive cut search limited to {EXHAUSTIVE_CUT_LIMIT} vertices")
    if n <= 1:
        return 0, ()
    for size in range(0, n - 1):
        for cut in itertools.combinations(range(n), size):
            if _disconnects(g, cut):
                return size, cut
    return n - 1, tuple(range(n - 1))


def _local_cut(g: Graph, s: int, t: int) -> tuple[int, tuple[int, ...]]:
    """Max number of internally disjoint s-t paths and a matching cut, by
    unit-capacity max-flow on the vertex-split digraph."""
    n = g.vertex_count
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    adj: list[set] = [set() for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        adj[a].add(b)
        adj[b].add(a)

    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges:
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in sorted(adj[a]):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    reach = set(prev)
    cut = tuple(v for v in range(n) if 2 * v in reach and 2 * v + 1 not in reach)
    return flow, cut


def min_vertex_cut_flow(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Vertex connectivity via max-flow over all non-adjacent pairs."""
    n = g.vertex_count
    if n <= 1:
        return 0, ()
    if not is_connected(g):
        return 0, ()
    best: Optional[tuple[int, tuple[int, ...]]] = None
    for s, t in itertools.combinations(range(n), 2):
        if g.has_edge(s, t):
            continue
        value, cut = _local_cut(g, s, t)
        if best is None or value < best[0]:
            best = (value, cut)
    if best is None:
        return n - 1, tuple(range(n - 1))
    return best


def hyperedge_connectivity(h: Hypergraph, method: str = "auto") -> Connectivity:
    """Minimum vertex cut of the v-intersected graph, as a set of hyperedges."""
    if len(h.edges) > CONNECTIVITY_LIMIT:
        raise SizeLimitError(f"connectivity limited to {CONNECTIVITY_LIMIT} hyperedges")
    g = build_v_intersected(h).graph
    if g.vertex_count > 1 and not is_connected(g):
        comps = tuple(tuple(h.edges[i] for i in c) for c in components(g))
        return Connectivity(0, (), (), comps, "components")
    if method == "auto":
        method = "exhaustive" if g.vertex_count <= EXHAUSTIVE_CUT_LIMIT else "flow"
    if method == "exhaustive":
        value, cut = min_vertex_cut_exhaustive(g)
    elif method == "flow":
        value, cut = min_vertex_cut_flow(g)
    else:
        raise PreconditionError(f"unknown cut method {method!r}")
    return Connectivity(value, tuple(h.edges[i] for i in cut), cut, (), method)


# --------------------------------------------------------------------------
# metrics


@dataclass(frozen=True)
class IntersectedMetrics:
    hyperedge_degrees: tuple[int, ...]
    hyperdiameter: float
    dominating_set: HyperedgeSet


def minimum_dominating_set(g: Graph) -> tuple[int, ...]:
    """Smallest dominating vertex set, first in canonical order."""
    n = g.vertex_count
    if n > DOMINATION_LIMIT:
        raise SizeLimitError(f"exact domination limited to {DOMINATION_LIMIT} vertices")
    closed = [g.adjacency[v] | {v} for v in range(n)]
    everyone = set(range(n))
    for size in range(0, n + 1):
        for cand in itertools.combinations(range(n), size):
            covered = set().union(*(closed[v] for v in cand)) if cand else set()
            if covered == everyone:
                return cand
    return tuple(range(n))


def intersected_metrics(h: Hypergraph) -> IntersectedMetrics:
    if len(h.edges) > DOMINATION_LIMIT:
        raise SizeLimitError(f"exact domination limited to {DOMINATION_LIMIT} hyperedges")
    g = build_v_intersected(h).graph
    dom = minimum_dominating_set(g)
    return IntersectedMetrics(
        hyperedge_degrees(h),
        diameter(g) if g.vertex_count else 0,
        tuple(h.edges[i] for i in dom),
    )


# --------------------------------------------------------------------------
# hamiltonian hyperedge cycles


@dataclass(frozen=True)
class HyperCycle:
    """Cyclic edge order (indices into the canonical edge list) and one
    representative per consecutive pair: representatives[j] lies in
    edge_order[j] and edge_order[j+1] (cyclically)."""

    edge_order: tuple[int, ...]
    representatives: tuple[int, ...]


def _matching(options: Sequence[Sequence[int]]) -> Optional[list[int]]:
    """A system of distinct representatives via augmenting paths."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set) -> bool:
        for x in options[i]:
            if x in seen:
                continue
            seen.add(x)
            if x not in owner or augment(owner[x], seen):
                owner[x] = i
                return True
        return False

    for i in range(len(options)):
        if not augment(i, set()):
            return None
    rep = [0] * len(options)
    for x, i in owner.items():
        rep[i] = x
    return rep


def _smallest_sdr(options: Sequence[Sequence[int]]) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest system of distinct representatives."""
    if _matching(options) is None:
        return None
    chosen: list[int] = []
    for i in range(len(options)):
        used = set(chosen)
        for x in options[i]:
            if x in used:
                continue
            rest = [[y for y in opt if y not in used and y != x] for opt in options[i + 1:]]
            if _matching(rest) is not None:
                chosen.append(x)
                break
    return tuple(chosen)


def find_proper_hamiltonian_cycle(
    h: Hypergraph, priority: Optional[Sequence[Sequence[int]]] = None
) -> Optional[HyperCycle]:
    """Backtracking search over cyclic edge orders; the representatives are
    the smallest SDR.

    Edges are tried in canonical order, or in the order of ``priority`` (a
    listing of all edges) when given; the cycle starts at the first edge
    tried.  Indices in the result always refer to ``h.edges``.
    """
    n = len(h.edges)
    if n != len(h.ground):
        raise PreconditionError(
            f"proper hamiltonian cycles need |E| = |ground|, got {n} and {len(h.ground)}"
        )
    if n > HAMILTONIAN_LIMIT:
        raise SizeLimitError(f"hamiltonian search limited to {HAMILTONIAN_LIMIT} hyperedges")
    if n < 2:
        return None
    if priority is None:
        rank = list(range(n))
    else:
        rank = [h.index(tuple(sorted(e))) for e in priority]
        if sorted(rank) != list(range(n)):
            raise PreconditionError("priority must list every hyperedge exactly once")
    sets = h.edge_sets
    meet = [[sorted(sets[i] & sets[j]) for j in range(n)] for i in range(n)]
    order = [rank[0]]
    used = [False] * n
    used[rank[0]] = True

    def search() -> Optional[HyperCycle]:
        if len(order) == n:
            last = meet[order[-1]][order[0]]
            if not last:
                return None
            options = [meet[order[j]][order[j + 1]] for j in range(n - 1)] + [last]
            reps = _smallest_sdr(options)
            if reps is None:
                return None
            return HyperCycle(tuple(order), reps)
        for j in rank:
            if used[j] or not meet[order[-1]][j]:
                continue
            order.append(j)
            used[j] = True
            partial = [meet[order[t]][order[t + 1]] for t in range(len(order) - 1)]
            if _matching(partial) is not None:
                found = search()
                if found:
                    return found
            order.pop()
            used[j] = False
        return None

    return search()


def verify_hyper_cycle(h: Hypergraph, cycle: HyperCycle) -> CheckReport:
    n = len(h.edges)
    order, reps = cycle.edge_order, cycle.representatives
    checks = {}
    checks["permutation"] = Verdict(sorted(order) == list(range(n)), tuple(order))
    checks["distinct_cover"] = Verdict(
        len(reps) == len(set(reps)) and sorted(reps) == list(h.ground), tuple(reps)
    )
    bad = []
    if checks["permutation"].ok and len(reps) == n:
        for j in range(n):
            a, b = h.edge_sets[order[j]], h.edge_sets[order[(j + 1) % n]]
            if reps[j] not in (a & b):
                bad.append(j)
    else:
        bad.append(None)
    checks["consecutive"] = Verdict(not bad, bad[0] if bad else None, tuple(bad))
    return _report(checks)


def verify_uniform_cycle(h: Hypergraph, order: Sequence[int]) -> CheckReport:
    """Check a cyclic order of a k-uniform family.

    ``sizes``: consecutive intersections have size k-1.  ``coverage``: each
    vertex lies in some consecutive intersection.  ``multiplicity``: each
    vertex lies in exactly k-1 of them.  ``literal`` records the word-for-word
    reading (every vertex in every consecutive intersection), which cannot
    hold for distinct edges and is reported without affecting the verdict.
    """
    sizes = {len(e) for e in h.edges}
    if len(sizes) != 1:
        raise PreconditionError("family is not uniform")
    k = sizes.pop()
    n = len(order)
    checks = {}
    checks["permutation"] = Verdict(sorted(order) == list(range(len(h.edges))), tuple(order))
    meets = [h.edge_sets[order[j]] & h.edge_sets[order[(j + 1) % n]] for j in range(n)]
    bad = [
        (h.edges[order[j]], h.edges[order[(j + 1) % n]])
        for j in range(n)
        if len(meets[j]) != k - 1
    ]
    checks["sizes"] = Verdict(not bad, bad[0] if bad else None, tuple(bad))
    count = {x: sum(1 for m in meets if x in m) for x in h.ground}
    bad = [x for x in h.ground if count[x] == 0]
    checks["coverage"] = Verdict(not bad, bad[0] if bad else None, tuple(bad))
    bad = [x for x in h.ground if count[x] != k - 1]
    checks["multiplicity"] = Verdict(not bad, bad[0] if bad else None, tuple(bad))
    literal = all(m == set(h.ground) for m in meets)
    report = _report(checks, {"k": k, "literal": literal, "literal_satisfiable": k - 1 >= len(h.ground)})
    return report


# --------------------------------------------------------------------------
# constructive colorings


def induce_3i_coloring(g: Graph) -> tuple[Hypergraph, SetColoredGraph]:
    """Set-color a connected graph so that every edge label is the
    intersection of its endpoint labels.

    Vertices are added in breadth-first order, so each new vertex is a leaf of
    the BFS spanning tree of the vertices placed so far.  A vertex with ``m``
    earlier neighbors receives ``m`` fresh integers, one shared with each of
    those neighbors, and that shared integer labels the connecting edge.
    """
    n = g.vertex_count
    if n == 0 or not is_connected(g):
        raise PreconditionError("induce_3i_coloring needs a connected graph")
    if n > INDUCE_LIMIT:
        raise SizeLimitError(f"induce_3i_coloring limited to {INDUCE_LIMIT} vertices")
    order = bfs_order(g, 0)
    labels: dict[int, set] = {order[0]: {1}}
    edge_labels: dict[Edge, Hyperedge] = {}
    top = 1
    placed = {order[0]}
    for x in order[1:]:
        earlier = sorted(y for y in g.adjacency[x] if y in placed)
        labels[x] = set()
        for i, y in enumerate(earlier, start=1):
            c = top + i
            labels[x].add(c)
            labels[y].add(c)
            edge_labels[make_pair(x, y)] = (c,)
        top += len(earlier)
        placed.add(x)
    colored = SetColoredGraph(g, tuple(tuple(sorted(labels[v])) for v in range(n)), edge_labels)
    return colored.label_hypergraph(range(1, top + 1)), colored


def _tree_label_map(t: Graph) -> tuple[dict[int, set], int, list[int]]:
    if not is_tree(t):
        raise PreconditionError("grow_tree_hyperedge_set needs a tree")
    if t.vertex_count == 1:
        return {0: {1}}, 1, [0]
    degs = t.degrees()
    root = min(range(t.vertex_count), key=lambda v: (-degs[v], v))
    labels: dict[int, set] = {root: set() if degs[root] >= 2 else {1}}
    top = max(labels[root], default=0)
    order = bfs_order(t, root)
    seen = {root}
    for v in order[1:]:
        parent = next(u for u in sorted(t.adjacency[v]) if u in seen)
        top += 1
        labels[v] = {top}
        labels[parent].add(top)
        seen.add(v)
    return labels, top, order


def grow_tree_hyperedge_set(t: Graph) -> Hypergraph:
    """Hyperedge family whose intersection graph is the tree ``t``.

    The root is the highest-degree vertex (lowest index on ties).  Each
    vertex, in breadth-first order, gets a fresh integer that it shares with
    its parent.  The root starts empty when it has at least two children so
    that a star reproduces ``{[1,m], {1}, ..., {m}}``.
    """
    labels, top, order = _tree_label_map(t)
    return Hypergraph(tuple(labels[v] for v in order), tuple(range(1, top + 1)))


def tree_labels(t: Graph) -> tuple[Hyperedge, ...]:
    """Per-vertex labels used by grow_tree_hyperedge_set, by vertex index."""
    labels, _, _ = _tree_label_map(t)
    return tuple(tuple(sorted(labels[v])) for v in range(t.vertex_count))


def double_graph(g: SetColoredGraph) -> SetColoredGraph:
    """Join ``g`` with a copy of itself.

    Copy vertex ``u'`` is ``u + p``.  Added edges: ``u u'``, ``u v'`` and
    ``u' v`` for every edge ``uv``.  Copies inherit the original labels and
    every edge is labeled with the intersection of its endpoint labels.
    """
    family = Hypergraph(tuple(g.vertex_labels))
    pre = verify_v_intersected(g, family, allow_equal_endpoint_labels=True)
    if not pre.passed:
        raise PreconditionError(f"input is not a v-intersected graph: fails {pre.failed()}")
    p = g.graph.vertex_count
    pairs = set(g.graph.edges)
    pairs |= {(u + p, v + p) for u, v in g.graph.edges}
    pairs |= {(u, u + p) for u in range(p)}
    for u, v in g.graph.edges:
        pairs.add(make_pair(u, v + p))
        pairs.add(make_pair(v, u + p))
    labels = tuple(g.vertex_labels) * 2
    graph = Graph(2 * p, tuple(pairs))
    edge_labels = {
        (a, b): tuple(sorted(set(labels[a]) & set(labels[b]))) for a, b in graph.edges
    }
    return SetColoredGraph(graph, labels, edge_labels)


# --------------------------------------------------------------------------
# coinciding, splitting, isomorphism, homomorphism


def hyperedge_coincide(h: Hypergraph, i: int, j: int) -> Hypergraph:
    """Replace edges i and j (canonical indices) by their union."""
    n = len(h.edges)
    if not (0 <= i < n and 0 <= j < n):
        raise PreconditionError(f"edge index out of range 0..{n - 1}")
    if i == j:
        raise PreconditionError("coinciding needs two distinct edges")
    merged = set(h.edges[i]) | set(h.edges[j])
    rest = [e for t, e in enumerate(h.edges) if t not in (i, j)]
    return h.with_edges(rest + [merged])


def hyperedge_split(
    h: Hypergraph, i: int, parts: tuple[Iterable[int], Iterable[int]]
) -> tuple[Hypergraph, int]:
    """Replace edge i by two nonempty parts whose union is the edge.

    Returns the new family and the number of edges lost to deduplication.
    """
    n = len(h.edges)
    if not 0 <= i < n:
        raise PreconditionError(f"edge index out of range 0..{n - 1}")
    a, b = (make_edge(p) for p in parts)
    if set(a) | set(b) != set(h.edges[i]):
        raise PreconditionError(f"parts do not cover hyperedge {format_edge(h.edges[i])} exactly")
    rest = [e for t, e in enumerate(h.edges) if t != i]
    out = h.with_edges(rest + [a, b])
    return out, len(rest) + 2 - len(out.edges)


def isomorphism_obstruction(a: Hypergraph, b: Hypergraph) -> Optional[str]:
    """A cheap reason why no isomorphism exists, or None."""
    if len(a.ground) != len(b.ground):
        return "ground sets differ in size"
    if len(a.edges) != len(b.edges):
        return "families differ in size"
    if sorted(map(len, a.edges)) != sorted(map(len, b.edges)):
        return "edge size profiles differ"
    if degree_series(a) != degree_series(b):
        return "degree series differ"
    return None


def hypergraph_isomorphic(a: Hypergraph, b: Hypergraph) -> Optional[dict[int, int]]:
    """Vertex bijection mapping the edges of ``a`` onto those of ``b``."""
    if isomorphism_obstruction(a, b) is not None:
        return None
    if len(a.ground) > ISOMORPHISM_LIMIT:
        raise SizeLimitError(f"isomorphism search limited to {ISOMORPHISM_LIMIT} vertices")
    target = set(b.edge_sets)
    da = {x: a.degree(x) for x in a.ground}
    db = {y: b.degree(y) for y in b.ground}
    mapping: dict[int, int] = {}
    used: set[int] = set()
    verts = list(a.ground)

    def extend(pos: int) -> bool:
        if pos == len(verts):
            return all(frozenset(mapping[x] for x in e) in target for e in a.edges)
        x = verts[pos]
        for y in b.ground:
            if y in used or da[x] != db[y]:
                continue
            mapping[x] = y
            used.add(y)
            if extend(pos + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return dict(mapping) if extend(0) else None


SET_OPERATIONS: dict[str, Callable[[set, set, set], bool]] = {
    "intersection": lambda e, a, b: e == a & b,
    "union": lambda e, a, b: e == a | b,
    "symmetric-difference": lambda e, a, b: e == a ^ b,
    "contains-intersection": lambda e, a, b: bool(a & b) and (a & b) <= e,
}


def check_colored_homomorphism(
    ga: SetColoredGraph,
    gb: SetColoredGraph,
    f: Mapping[int, int],
    op: str = "intersection",
    allow_collapse: bool = False,
) -> CheckReport:
    """Check that ``f`` maps edges to edges and that the labelled relation
    ``F(uv) = F(u) op F(v)`` holds on an edge of ``ga`` exactly when it holds
    on its image.

    With ``allow_collapse`` an edge whose endpoints share an image is
    accepted as a loop and skipped by the label check.
    """
    if op not in SET_OPERATIONS:
        raise PreconditionError(f"unknown set operation {op!r}")
    missing = [v for v in range(ga.graph.vertex_count) if v not in f]
    if missing:
        raise PreconditionError(f"map is undefined on vertex {missing[0]}")
    rel = SET_OPERATIONS[op]
    bad_edges, bad_labels = [], []
    for u, v in ga.graph.edges:
        fu, fv = f[u], f[v]
        if fu == fv:
            if not allow_collapse:
                bad_edges.append((u, v))
            continue
        if not gb.graph.has_edge(fu, fv):
            bad_edges.append((u, v))
            continue
        if ga.edge_labels is not None and gb.edge_labels is not None:
            ra = rel(set(ga.edge_labels[(u, v)]), set(ga.vertex_labels[u]), set(ga.vertex_labels[v]))
            pair = make_pair(fu, fv)
            rb = rel(set(gb.edge_labels[pair]), set(gb.vertex_labels[fu]), set(gb.vertex_labels[fv]))
            if ra != rb:
                bad_labels.append((u, v))
    checks = {
        "edges": Verdict(not bad_edges, bad_edges[0] if bad_edges else None, tuple(bad_edges)),
        "labels": Verdict(not bad_labels, bad_labels[0] if bad_labels else None, tuple(bad_labels)),
    }
    return _report(checks)
