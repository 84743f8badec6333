"""Constructive families: strong sets, cyclic uniform sets, exhaustive
enumeration and complementary key matchings."""
from __future__ import annotations

import itertools
import random
from math import comb
from typing import Optional

from .core import Hypergraph, complement_set, power_set, verify_3i
from .errors import PreconditionError, SizeLimitError

STRONG_LIMIT = 16
CYCLIC_LIMIT = 64
ENUMERATE_LIMIT = 4
KEY_LIMIT = 10


def strong_cardinality(m: int, t: int) -> int:
    """Size of ``strong_hyperedge_set(m, t)``."""
    total = sum(comb(m - t, k) for k in range(1, t + 1))
    return total + 1 if t == 1 else total


def strong_hyperedge_set(m: int, t: int) -> Hypergraph:
    """Pairwise intersecting antichain over [1, m].

    For ``t >= 2`` the edges are ``[k, t] + A`` with ``A`` a ``k``-subset of
    ``[t+1, m]``.  For ``t = 1`` they are the pairs ``{1, a}`` plus ``[2, m]``.
    """
    if not 1 <= t <= m - 1:
        raise PreconditionError(f"need 1 <= t <= m-1, got m={m}, t={t}")
    if m > STRONG_LIMIT:
        raise SizeLimitError(f"strong sets limited to m <= {STRONG_LIMIT}")
    ground = tuple(range(1, m + 1))
    if t == 1:
        edges = [(1, a) for a in range(2, m + 1)] + [tuple(range(2, m + 1))]
        return Hypergraph(tuple(edges), ground)
    tail = range(t + 1, m + 1)
    edges = [
        tuple(range(k, t + 1)) + A for k in range(1, t + 1) for A in itertools.combinations(tail, k)
    ]
    return Hypergraph(tuple(edges), ground)


def cyclic_k_uniform(n: int, k: int) -> Hypergraph:
    """The ``n`` windows of ``k`` consecutive residues over [1, n]."""
    if not 2 <= k <= n - 1:
        raise PreconditionError(f"need 2 <= k <= n-1, got n={n}, k={k}")
    if n > CYCLIC_LIMIT:
        raise SizeLimitError(f"cyclic families limited to n <= {CYCLIC_LIMIT}")
    edges = [tuple((j + i) % n + 1 for i in range(k)) for j in range(n)]
    return Hypergraph(tuple(edges), tuple(range(1, n + 1)))


def enumerate_3i(n: int, strict: bool = True) -> list[Hypergraph]:
    """Every family over [1, n] that passes verify_3i, in canonical order.

    Families are grown one subset at a time in canonical order and a subset
    comparable with one already chosen is never added.
    """
    if n > ENUMERATE_LIMIT:
        raise SizeLimitError(f"exhaustive enumeration limited to n <= {ENUMERATE_LIMIT}")
    if n < 1:
        raise PreconditionError("ground set must be nonempty")
    ground = tuple(range(1, n + 1))
    subsets = [frozenset(s) for s in power_set(ground)]
    found: list[Hypergraph] = []

    def grow(start: int, chosen: list) -> None:
        if chosen:
            h = Hypergraph(tuple(chosen), ground)
            if verify_3i(h, strict=strict).passed:
                found.append(h)
        for i in range(start, len(subsets)):
            s = subsets[i]
            if any(s < c or c < s for c in chosen):
                continue
            chosen.append(s)
            grow(i + 1, chosen)
            chosen.pop()

    grow(0, [])
    return sorted(found, key=lambda h: h.edges)


def is_key_matching(h: Hypergraph) -> bool:
    """Both ``h`` and its complement pass strict 3I."""
    if any(e == h.ground for e in h.edges):
        return False
    return verify_3i(h).passed and verify_3i(complement_set(h)).passed


def key_matchings(
    n: int, limit: int = 10, seed: int = 0, attempts: int = 20_000
) -> list[tuple[Hypergraph, Hypergraph]]:
    """Pairs ``(E, complement(E))`` that both pass strict 3I.

    Exhaustive for ``n <= 4``; above that a seeded random search over
    antichains.  Output is sorted canonically and truncated to ``limit``.
    """
    if n > KEY_LIMIT:
        raise SizeLimitError(f"key matchings limited to n <= {KEY_LIMIT}")
    if n < 2:
        return []
    ground = tuple(range(1, n + 1))
    found: dict = {}
    if n <= ENUMERATE_LIMIT:
        for h in enumerate_3i(n):
            if is_key_matching(h):
                found[h.edges] = h
    else:
        rng = random.Random(seed)
        for _ in range(attempts):
            if len(found) >= limit:
                break
            h = _random_antichain(rng, ground)
            if h is not None and h.edges not in found and is_key_matching(h):
                found[h.edges] = h
    pairs = [(h, complement_set(h)) for _, h in sorted(found.items())]
    return pairs[:limit]


def _random_antichain(rng: random.Random, ground: tuple) -> Optional[Hypergraph]:
    n = len(ground)
    if rng.random() < 0.5:
        k = rng.randint(1, n - 1)
        pool = list(itertools.combinations(ground, k))
        size = rng.randint(2, min(len(pool), 2 * n))
        edges = rng.sample(pool, size)
    else:
        edges = []
        for _ in range(rng.randint(2, 2 * n)):
            k = rng.randint(1, n - 1)
            cand = frozenset(rng.sample(ground, k))
            if not any(cand <= e or e <= cand for e in edges):
                edges.append(cand)
        if len(edges) < 2:
            return None
    return Hypergraph(tuple(edges), ground)


def fixed_point_union(h: Hypergraph) -> Hypergraph:
    """``E`` together with its complement; complement-invariant."""
    return h.with_edges(h.edges + complement_set(h).edges)
