"""Worked examples used as pinned fixtures.

Each value is transcribed by hand and is deliberately not produced by the
generators it is compared against.
"""
from __future__ import annotations

from .core import Hypergraph


def _iv(a: int, b: int) -> tuple[int, ...]:
    return tuple(range(a, b + 1))


def _u(*parts) -> tuple[int, ...]:
    return tuple(sorted({x for p in parts for x in p}))


# FIX-A: eight cyclic 4-sets over [1,8], listed in index order e_1..e_8.
FIX_A_EDGES: tuple[tuple[int, ...], ...] = (
    (1, 2, 3, 4), (2, 3, 4, 5), (3, 4, 5, 6), (4, 5, 6, 7),
    (5, 6, 7, 8), (6, 7, 8, 1), (7, 8, 1, 2), (8, 1, 2, 3),
)


def fix_a() -> Hypergraph:
    return Hypergraph(FIX_A_EDGES, _iv(1, 8))


# FIX-B: the E_{1,i} chain over [1,10] as listed, plus E_{2,1}.
FIX_B_CHAIN: tuple[tuple[tuple[int, ...], ...], ...] = (
    ((1, 2), (3, 4), (5, 6), _u(_iv(1, 4), _iv(7, 10)), _u((1, 2), _iv(5, 10)), _iv(8, 10)),
    ((2, 3), (4, 5), (6, 7), _u(_iv(2, 5), _iv(8, 10), (1,)), _u((2, 3), _iv(6, 10), (1,)), _u(_iv(9, 10), (1,))),
    ((3, 4), (5, 6), (7, 8), _u(_iv(3, 6), _iv(9, 10), (1, 2)), _u((3, 4), _iv(7, 10), (1, 2)), (1, 2, 10)),
    ((4, 5), (6, 7), (8, 9), _u(_iv(4, 7), (10,), (1, 2, 3)), _u((4, 5), _iv(8, 10), (1, 2, 3)), (1, 2, 3)),
    ((5, 6), (7, 8), (9, 10), _iv(1, 8), _u((5, 6), _iv(9, 10), _iv(1, 4)), _iv(2, 4)),
    ((6, 7), (8, 9), (1, 10), _iv(2, 9), _u((10,), _iv(1, 7)), _iv(3, 5)),
    ((7, 8), (9, 10), (1, 2), _iv(3, 10), _iv(1, 8), _iv(4, 6)),
    ((8, 9), (1, 10), (2, 3), _u(_iv(4, 10), (1,)), _iv(2, 9), _iv(5, 7)),
    ((9, 10), (1, 2), (3, 4), _u(_iv(5, 10), (1, 2)), _iv(3, 10), _iv(6, 8)),
    ((1, 10), (2, 3), (4, 5), _u(_iv(6, 10), _iv(1, 3)), _u(_iv(4, 10), (1,)), _iv(7, 9)),
)

FIX_B_E21: tuple[tuple[int, ...], ...] = (
    (1, 6, 7), (2, 4, 5, 6, 10), (1, 3, 5, 7, 9), (2, 4, 6, 8, 10), (1, 3, 7, 8, 9), (2, 3, 4, 5, 8, 9, 10),
)


def fix_b(i: int = 1) -> Hypergraph:
    """Listed member ``E_{1,i}`` for ``i`` in 1..11 (11 repeats 1)."""
    return Hypergraph(FIX_B_CHAIN[(i - 1) % 10], _iv(1, 10))


def fix_b_e21() -> Hypergraph:
    return Hypergraph(FIX_B_E21, _iv(1, 10))


# FIX-C: K_4 on e_1..e_4 with edge labels u_12..u_34 over [1,15].
FIX_C_VERTICES: tuple[tuple[int, ...], ...] = (
    (1, 2, 6, 7, 9, 11, 12, 15),
    (2, 3, 5, 6, 7, 10, 11, 13),
    (4, 5, 6, 8, 9, 10, 11, 12),
    (7, 8, 9, 10, 11, 13, 14, 15),
)
FIX_C_EDGES: dict = {
    (0, 1): (2, 6, 7, 11, 12, 15),
    (0, 2): (2, 3, 6, 7, 9, 11, 12, 13),
    (0, 3): (4, 5, 6, 7, 9, 11, 12, 15),
    (1, 2): (4, 5, 6, 7, 9, 11, 15),
    (1, 3): (1, 3, 6, 7, 9, 10, 11, 13),
    (2, 3): (1, 2, 3, 4, 8, 9, 10, 11, 13),
}
FIX_C_NAMES = ("e1", "e2", "e3", "e4")
FIX_C_EDGE_NAMES = {(0, 1): "u12", (0, 2): "u13", (0, 3): "u14", (1, 2): "u23", (1, 3): "u24", (2, 3): "u34"}
FIX_C_TOPCODE_NAMES = (
    ("e1", "e1", "e1", "e2", "e2", "e3"),
    ("u12", "u13", "u14", "u23", "u24", "u34"),
    ("e2", "e3", "e4", "e3", "e4", "e4"),
)


def fix_c():
    from .graph import Graph
    from .intersected import SetColoredGraph

    g = Graph.complete(4)
    return SetColoredGraph(g, FIX_C_VERTICES, dict(FIX_C_EDGES))


# FIX-D: strong sets keyed by (m, t), as listed.
FIX_D: dict = {
    (4, 1): ((1, 2), (1, 3), (1, 4), (2, 3, 4)),
    (4, 2): ((1, 2, 3), (1, 2, 4), (2, 3, 4)),
    (6, 1): ((1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3, 4, 5, 6)),
    (6, 2): (
        (1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 2, 6),
        (2, 3, 4), (2, 3, 5), (2, 3, 6), (2, 4, 5), (2, 4, 6), (2, 5, 6),
    ),
    (6, 3): (
        (1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 3, 6),
        (2, 3, 4, 5), (2, 3, 4, 6), (2, 3, 5, 6), (3, 4, 5, 6),
    ),
    (8, 1): ((1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (2, 3, 4, 5, 6, 7, 8)),
}


def _listed(prefix: tuple, tails: str) -> tuple:
    return tuple(prefix + tuple(int(c) for c in t) for t in tails.split())


# Larger m=8 listings, written as prefix plus tail digits to keep them legible.
FIX_D[(8, 2)] = (
    _listed((1, 2), "3 4 5 6 7 8")
    + _listed((2,), "34 35 36 37 38 45 46 47 48 56 57 58 67 68 78")
)
FIX_D[(8, 3)] = (
    _listed((1, 2, 3), "4 5 6 7 8")
    + _listed((2, 3), "45 46 47 48 56 57 58 67 68 78")
    + _listed((3,), "456 457 458 467 468 478 567 568 578 678")
)
FIX_D[(8, 4)] = (
    _listed((1, 2, 3, 4), "5 6 7 8")
    + _listed((2, 3, 4), "56 57 58 67 68 78")
    + _listed((3, 4), "567 568 578 678")
    + _listed((4,), "5678")
)
FIX_D[(8, 5)] = (
    _listed((1, 2, 3, 4, 5), "6 7 8")
    + _listed((2, 3, 4, 5), "67 68 78")
    + _listed((3, 4, 5), "678")
)

FIX_D_SIZES = {
    (4, 1): 4, (4, 2): 3, (6, 1): 6, (6, 2): 10, (6, 3): 7,
    (8, 1): 8, (8, 2): 21, (8, 3): 25, (8, 4): 15, (8, 5): 7,
}


def fix_d(m: int, t: int) -> Hypergraph:
    return Hypergraph(FIX_D[(m, t)], _iv(1, m))


# FIX-E: U_1..U_4 of the nonempty subsets of [1,4].
FIX_E: tuple[tuple[tuple[int, ...], ...], ...] = (
    ((1,), (2,), (3,), (4,)),
    ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)),
    ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)),
    ((1, 2, 3, 4),),
)


def fix_e(k: int) -> Hypergraph:
    return Hypergraph(FIX_E[k - 1], _iv(1, 4))


def fix_f(M: int) -> Hypergraph:
    """The M-star family ``{i, M}`` for ``i < M`` plus ``[1, M-1]``."""
    return Hypergraph(tuple((i, M) for i in range(1, M)) + (_iv(1, M - 1),), _iv(1, M))


# FIX-G: three set-ordered graceful hyperedge sets over [0,9], as
# (X-side parts, middle parts, Y-side parts).
FIX_G: tuple = (
    (((0, 2, 3, 4),), (_iv(1, 9),), ((5, 7, 8, 9),)),
    (((0, 2), (3, 4)), (_iv(1, 9),), ((5, 7), (8, 9))),
    (((0, 2), (0, 3), (0, 4)), (_iv(1, 5), _iv(6, 9)), ((5, 7), (5, 8), (5, 9))),
)


def fix_g(i: int) -> tuple[Hypergraph, tuple]:
    """Hyperedge set ``E_i`` over [0,9] and its ``(X, E, Y)`` parts."""
    x, mid, y = FIX_G[i - 1]
    return Hypergraph(x + mid + y, _iv(0, 9)), (x, mid, y)
