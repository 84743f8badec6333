"""Simple undirected graphs on vertices 0..p-1 and small exact algorithms."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import PreconditionError

Edge = tuple[int, int]


def make_pair(u: int, v: int) -> Edge:
    if u == v:
        raise PreconditionError(f"loop at vertex {u} is not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple graph.  Edges are stored smaller endpoint first, sorted."""

    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise PreconditionError("vertex count must be nonnegative")
        pairs = set()
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise PreconditionError(f"edge {tuple(e)} has an endpoint outside 0..{self.vertex_count - 1}")
            pair = make_pair(u, v)
            if pair in pairs:
                raise PreconditionError(f"duplicate edge {pair}")
            pairs.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(pairs)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(itertools.combinations(range(n), 2)))

    @classmethod
    def complete_bipartite(cls, m: int, n: int) -> "Graph":
        return cls(m + n, tuple((i, m + j) for i in range(m) for j in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, tuple((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        adj: list[set] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and make_pair(u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adjacency[v]))

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    out = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in sorted(g.adjacency[u]):
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.vertex_count <= 1 or len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.vertex_count >= 1 and len(g.edges) == g.vertex_count - 1 and is_connected(g)


def is_forest(g: Graph) -> bool:
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def bfs_distances(g: Graph, s: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * g.vertex_count
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1  # type: ignore[operator]
                queue.append(v)
    return dist


def bfs_order(g: Graph, root: int = 0) -> list[int]:
    """Breadth-first order with neighbors visited in increasing index."""
    order, seen = [root], {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in sorted(g.adjacency[u]):
            if v not in seen:
                seen.add(v)
                order.append(v)
                queue.append(v)
    return order


def diameter(g: Graph) -> float:
    """Longest shortest path; ``inf`` when the graph is disconnected."""
    best = 0
    for s in range(g.vertex_count):
        for d in bfs_distances(g, s):
            if d is None:
                return float("inf")
            best = max(best, d)
    return best


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    return False
    return True


def is_proper_coloring(g: Graph, colors: list[int]) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges)


def k_colorable(g: Graph, k: int) -> Optional[list[int]]:
    """Backtracking search for a proper k-coloring, vertices in index order."""
    n = g.vertex_count
    if n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))

    def place(pos: int, used: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        taken = {colors[w] for w in g.adjacency[v] if colors[w] >= 0}
        # trying one unused color is enough by symmetry
        for c in range(min(used + 1, k)):
            if c not in taken:
                colors[v] = c
                if place(pos + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
        return False

    return colors if place(0, 0) else None


def chromatic_number(g: Graph) -> int:
    if g.vertex_count == 0:
        return 0
    for k in range(1, g.vertex_count + 1):
        if k_colorable(g, k) is not None:
            return k
    return g.vertex_count


def greedy_coloring(g: Graph) -> list[int]:
    colors = [-1] * g.vertex_count
    for v in sorted(range(g.vertex_count), key=lambda v: (-g.degree(v), v)):
        taken = {colors[w] for w in g.adjacency[v]}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def graph_isomorphism(a: Graph, b: Graph) -> Optional[dict[int, int]]:
    """Brute-force isomorphism for small graphs, pruned by degree."""
    if a.vertex_count != b.vertex_count or len(a.edges) != len(b.edges):
        return None
    if sorted(a.degrees()) != sorted(b.degrees()):
        return None
    n = a.vertex_count
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(u: int) -> bool:
        if u == n:
            return True
        for w in range(n):
            if w in used or a.degree(u) != b.degree(w):
                continue
            if all(b.has_edge(mapping[x], w) == a.has_edge(x, u) for x in range(u)):
                mapping[u] = w
                used.add(w)
                if extend(u + 1):
                    return True
                del mapping[u]
                used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def induced_without(g: Graph, removed: Iterable[int]) -> Graph:
    """Subgraph on the remaining vertices, relabeled 0..p'-1 in order."""
    gone = set(removed)
    keep = [v for v in range(g.vertex_count) if v not in gone]
    index = {v: i for i, v in enumerate(keep)}
    return Graph(
        len(keep),
        tuple((index[u], index[v]) for u, v in g.edges if u in index and v in index),
    )
