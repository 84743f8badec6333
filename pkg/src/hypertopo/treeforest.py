"""Vertex splitting and coinciding, tree edge exchange, and exact counts of
spanning trees and labeled forests."""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable

from .errors import PreconditionError, SizeLimitError
from .graph import Graph, is_tree, make_pair

SPANNING_LIMIT = 64
FOREST_LIMIT = 30


def vertex_split(g: Graph, u: int, parts: tuple[Iterable[int], Iterable[int]]) -> Graph:
    """Split ``u`` in two.  ``u`` keeps the first neighbor part and a new
    vertex with index ``p`` takes the second."""
    first, second = (frozenset(part) for part in parts)
    nbrs = g.adjacency[u]
    if g.degree(u) < 2:
        raise PreconditionError(f"vertex {u} has degree {g.degree(u)}; splitting needs at least 2")
    if not first or not second or first & second or first | second != nbrs:
        raise PreconditionError(f"parts must partition the neighbors {sorted(nbrs)} of {u}")
    new = g.vertex_count
    edges = [e for e in g.edges if u not in e]
    edges += [make_pair(u, w) for w in first]
    edges += [make_pair(new, w) for w in second]
    return Graph(g.vertex_count + 1, tuple(edges))


def vertex_coincide(g: Graph, a: int, b: int) -> Graph:
    """Merge ``b`` into ``a``; vertices above ``b`` move down by one."""
    if a == b:
        raise PreconditionError("cannot coincide a vertex with itself")
    if g.has_edge(a, b):
        raise PreconditionError(f"vertices {a} and {b} are adjacent")
    common = sorted(g.adjacency[a] & g.adjacency[b])
    if common:
        raise PreconditionError(f"vertices {a} and {b} share neighbor {common[0]}")

    def relabel(v: int) -> int:
        v = a if v == b else v
        return v - 1 if v > b else v

    edges = [make_pair(relabel(x), relabel(y)) for x, y in g.edges]
    return Graph(g.vertex_count - 1, tuple(edges))


def adding_edge_removing(t: Graph, add: tuple[int, int], remove: tuple[int, int]) -> Graph:
    """``t + add - remove``, which must again be a tree."""
    if not is_tree(t):
        raise PreconditionError("input is not a tree")
    add_e, rem_e = make_pair(*add), make_pair(*remove)
    if add_e in t.edge_set:
        raise PreconditionError(f"{add_e} is already an edge")
    if rem_e not in t.edge_set:
        raise PreconditionError(f"{rem_e} is not an edge")
    out = Graph(t.vertex_count, tuple(e for e in t.edges if e != rem_e) + (add_e,))
    if not is_tree(out):
        raise PreconditionError(f"adding {add_e} and removing {rem_e} does not give a tree")
    return out


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [row[:] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees via a Laplacian cofactor."""
    n = g.vertex_count
    if n > SPANNING_LIMIT:
        raise SizeLimitError(f"spanning tree count limited to {SPANNING_LIMIT} vertices")
    if n == 0:
        return 0
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    minor = [row[1:] for row in lap[1:]]
    return bareiss_determinant(minor)


def forest_terms(n: int) -> list[Fraction]:
    """Summands of the closed form for labeled forests on ``n`` vertices,
    each already multiplied by ``n!/(n+1)``."""
    lead = Fraction(factorial(n), n + 1)
    return [
        lead
        * Fraction(
            (-1) ** k * (2 * k + 1) * (n + 1) ** (n - 2 * k),
            2 ** k * factorial(k) * factorial(n - 2 * k),
        )
        for k in range(n // 2 + 1)
    ]


def forest_count(n: int) -> int:
    """Number of labeled forests (acyclic graphs) on ``n`` vertices."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if n > FOREST_LIMIT:
        raise SizeLimitError(f"forest count limited to n <= {FOREST_LIMIT}")
    total = sum(forest_terms(n), Fraction(0))
    if total.denominator != 1:
        raise ArithmeticError(f"forest sum for n={n} is not an integer: {total}")
    return int(total)
