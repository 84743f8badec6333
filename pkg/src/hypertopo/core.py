"""Canonical set-system values and family-level predicates.

A hyperedge is a sorted tuple of nonnegative integers.  A hypergraph pairs a
ground set with a deduplicated family of hyperedges kept in lexicographic
order, so two families compare equal exactly when they are equal as sets.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Any, Iterable, Optional, Sequence

from .errors import PreconditionError, SizeLimitError

Hyperedge = tuple[int, ...]
HyperedgeSet = tuple[Hyperedge, ...]

POWER_SET_LIMIT = 20
PERMUTATION_SEARCH_LIMIT = 8
HYPERMATCHING_LIMIT = 20


def make_edge(members: Iterable[int]) -> Hyperedge:
    """Return the canonical form of a hyperedge (sorted, no duplicates)."""
    edge = tuple(sorted(set(members)))
    if not edge:
        raise PreconditionError("hyperedges must be nonempty")
    for x in edge:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise PreconditionError(f"vertex {x!r} is not a nonnegative integer")
    return edge


def canonical_family(edges: Iterable[Iterable[int]]) -> HyperedgeSet:
    """Canonicalize every edge, drop duplicates and sort lexicographically."""
    return tuple(sorted({make_edge(e) for e in edges}))


def format_edge(edge: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in edge) + "}"


@dataclass(frozen=True)
class Hypergraph:
    """A ground set together with a family of nonempty subsets of it.

    Both fields are canonicalized on construction.  When ``ground`` is
    omitted it defaults to the union of the edges.
    """

    edges: HyperedgeSet
    ground: tuple[int, ...] = None  # type: ignore[assignment]

    def __post_init__(self):
        edges = canonical_family(self.edges)
        if self.ground is None:
            ground = tuple(sorted({x for e in edges for x in e}))
        else:
            ground = tuple(sorted(set(self.ground)))
            for x in ground:
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise PreconditionError(f"vertex {x!r} is not a nonnegative integer")
        gset = set(ground)
        for e in edges:
            outside = [x for x in e if x not in gset]
            if outside:
                raise PreconditionError(
                    f"hyperedge {format_edge(e)} has vertex {outside[0]} outside the ground set"
                )
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "ground", ground)

    @classmethod
    def interval(cls, edges: Iterable[Iterable[int]], n: int, start: int = 1) -> "Hypergraph":
        """Family over the ground set [start, n]."""
        return cls(tuple(edges), tuple(range(start, n + 1)))

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(e) for e in self.edges)

    @cached_property
    def norm(self) -> int:
        """Total size of all hyperedges."""
        return sum(len(e) for e in self.edges)

    def degree(self, x: int) -> int:
        """Number of hyperedges containing ``x``."""
        return sum(1 for s in self.edge_sets if x in s)

    def index(self, edge: Iterable[int]) -> int:
        return self.edges.index(make_edge(edge))

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return Hypergraph(tuple(edges), self.ground)


# --------------------------------------------------------------------------
# verdicts and reports


@dataclass(frozen=True)
class Verdict:
    """Outcome of a single check.

    ``witness`` is the first violation in canonical order and ``violations``
    lists every violation found.
    """

    ok: bool
    witness: Any = None
    violations: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class StructureReport:
    independence: Verdict
    intersection: Verdict
    integrity: Verdict
    strict: bool = True
    passed: bool = False
    uniform_k: Optional[int] = None
    equitable: Optional[bool] = None
    full: Optional[bool] = None
    degree_series: Optional[tuple[int, ...]] = None
    norm: Optional[int] = None
    ears: Optional[HyperedgeSet] = None
    isolated: Optional[tuple[int, ...]] = None
    euler: Optional[bool] = None
    bipartite_split: Optional[tuple[HyperedgeSet, HyperedgeSet]] = None
    self_complementary: Optional[bool] = None
    perfect_hypermatchings: Optional[tuple[HyperedgeSet, ...]] = None
    extra: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        def verdict(v: Verdict) -> dict:
            return {"ok": v.ok, "witness": _jsonable(v.witness), "violations": _jsonable(v.violations)}

        out: dict[str, Any] = {
            "independence": verdict(self.independence),
            "intersection": verdict(self.intersection),
            "integrity": verdict(self.integrity),
            "strict": self.strict,
            "passed": self.passed,
        }
        for name in (
            "uniform_k", "equitable", "full", "degree_series", "norm", "ears", "isolated",
            "euler", "bipartite_split", "self_complementary", "perfect_hypermatchings",
        ):
            value = getattr(self, name)
            if value is not None:
                out[name] = _jsonable(value)
        return out


def _jsonable(value: Any) -> Any:
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    return value


# --------------------------------------------------------------------------
# basic operations


def power_set(ground: Iterable[int]) -> HyperedgeSet:
    """All nonempty subsets of ``ground`` in canonical order."""
    g = tuple(sorted(set(ground)))
    if len(g) > POWER_SET_LIMIT:
        raise SizeLimitError(f"power set of {len(g)} elements exceeds limit {POWER_SET_LIMIT}")
    subsets = (c for r in range(1, len(g) + 1) for c in itertools.combinations(g, r))
    return tuple(sorted(subsets))


def check_independence(h: Hypergraph) -> Verdict:
    sets = h.edge_sets
    bad = []
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if i != j and a < b:
                bad.append((h.edges[i], h.edges[j]))
    return Verdict(not bad, bad[0] if bad else None, tuple(bad))


def check_intersection(h: Hypergraph) -> Verdict:
    """Every edge meets another edge; ``{ground}`` alone passes vacuously."""
    sets = h.edge_sets
    if len(sets) == 1:
        if h.edges[0] == h.ground:
            return Verdict(True)
        return Verdict(False, h.edges[0], (h.edges[0],))
    bad = []
    for i, a in enumerate(sets):
        if not any(j != i and a & b for j, b in enumerate(sets)):
            bad.append(h.edges[i])
    return Verdict(not bad, bad[0] if bad else None, tuple(bad))


def check_integrity(h: Hypergraph) -> Verdict:
    covered = set().union(*h.edge_sets) if h.edges else set()
    missing = tuple(x for x in h.ground if x not in covered)
    return Verdict(not missing, missing[0] if missing else None, missing)


def verify_3i(h: Hypergraph, strict: bool = True) -> StructureReport:
    """Check Independence, Intersection and Integrity.

    In strict mode all three must hold.  Otherwise Integrity is reported but
    only Independence and Intersection decide the overall verdict.
    """
    ind = check_independence(h)
    inter = check_intersection(h)
    integ = check_integrity(h)
    passed = ind.ok and inter.ok and (integ.ok or not strict)
    return StructureReport(ind, inter, integ, strict=strict, passed=passed)


def complement_set(h: Hypergraph) -> Hypergraph:
    """The family ``{ground - e}``."""
    g = set(h.ground)
    out = []
    for e in h.edges:
        rest = g.difference(e)
        if not rest:
            raise PreconditionError(
                f"hyperedge {format_edge(e)} equals the ground set; its complement is empty"
            )
        out.append(rest)
    return Hypergraph(tuple(out), h.ground)


def is_uniform(h: Hypergraph) -> Optional[int]:
    sizes = {len(e) for e in h.edges}
    return sizes.pop() if len(sizes) == 1 else None


def is_equitable(h: Hypergraph) -> bool:
    sizes = [len(e) for e in h.edges]
    return not sizes or max(sizes) - min(sizes) <= 1


def degree_series(h: Hypergraph) -> tuple[int, ...]:
    return tuple(sorted(h.degree(x) for x in h.ground))


def isolated_vertices(h: Hypergraph) -> tuple[int, ...]:
    """Vertices lying in exactly one hyperedge."""
    return tuple(x for x in h.ground if h.degree(x) == 1)


def hyperedge_degrees(h: Hypergraph) -> tuple[int, ...]:
    """For each edge, the number of other edges it meets."""
    sets = h.edge_sets
    return tuple(sum(1 for j, b in enumerate(sets) if j != i and a & b) for i, a in enumerate(sets))


def ears(h: Hypergraph) -> HyperedgeSet:
    """Edges that are disjoint from the rest, or whose private part is all of
    ``e`` minus some other edge ``e*``."""
    sets = h.edge_sets
    out = []
    for i, e in enumerate(sets):
        others = [s for j, s in enumerate(sets) if j != i]
        if not others:
            continue
        shared = set().union(*others) & e
        if not shared:
            out.append(h.edges[i])
            continue
        if any(shared <= star for star in others):
            out.append(h.edges[i])
    return tuple(out)


def bipartite_split(h: Hypergraph) -> Optional[tuple[HyperedgeSet, HyperedgeSet]]:
    """Split into two internally disjoint parts where every edge meets the
    other part.  The lowest-index edge of each component goes to the first
    part."""
    sets = h.edge_sets
    n = len(sets)
    adj = [[j for j in range(n) if j != i and sets[i] & sets[j]] for i in range(n)]
    if any(not a for a in adj):
        return None
    side = [-1] * n
    for start in range(n):
        if side[start] >= 0:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    stack.append(v)
                elif side[v] == side[u]:
                    return None
    s1 = tuple(h.edges[i] for i in range(n) if side[i] == 0)
    s2 = tuple(h.edges[i] for i in range(n) if side[i] == 1)
    return s1, s2


def perfect_hypermatchings(h: Hypergraph) -> tuple[HyperedgeSet, ...]:
    """All sets of pairwise disjoint edges whose union is the ground set."""
    if len(h.edges) > HYPERMATCHING_LIMIT:
        raise SizeLimitError(f"hypermatching enumeration limited to {HYPERMATCHING_LIMIT} edges")
    ground = set(h.ground)
    if not ground:
        return ()
    results: list[HyperedgeSet] = []

    def extend(uncovered: set, chosen: list[int]) -> None:
        if not uncovered:
            results.append(tuple(h.edges[i] for i in sorted(chosen)))
            return
        x = min(uncovered)
        for i, e in enumerate(h.edge_sets):
            if x in e and e <= uncovered:
                chosen.append(i)
                extend(uncovered - e, chosen)
                chosen.pop()

    extend(ground, [])
    return tuple(sorted(results))


def is_self_complementary(h: Hypergraph) -> bool:
    try:
        return complement_set(h) == h
    except PreconditionError:
        return False


def structure_report(h: Hypergraph) -> StructureReport:
    """Every structural field of the family, with strict 3I verdicts."""
    base = verify_3i(h, strict=True)
    degs = hyperedge_degrees(h)
    matchings = perfect_hypermatchings(h) if len(h.edges) <= HYPERMATCHING_LIMIT else None
    return StructureReport(
        base.independence,
        base.intersection,
        base.integrity,
        strict=True,
        passed=base.passed,
        uniform_k=is_uniform(h),
        equitable=is_equitable(h),
        full=all(d >= 1 for d in degree_series(h)),
        degree_series=degree_series(h),
        norm=h.norm,
        ears=ears(h),
        isolated=isolated_vertices(h),
        euler=all(d % 2 == 0 for d in degs),
        bipartite_split=bipartite_split(h),
        self_complementary=is_self_complementary(h),
        perfect_hypermatchings=matchings,
    )


def graham_reduction(h: Hypergraph) -> Hypergraph:
    """Apply GR-1 (drop vertices in a unique edge) and GR-2 (drop edges
    contained in another edge) until nothing changes.  Edges emptied by
    vertex deletion disappear."""
    edges = [set(e) for e in h.edges]
    ground = set(h.ground)
    changed = True
    while changed:
        changed = False
        counts: dict[int, int] = {}
        for e in edges:
            for x in e:
                counts[x] = counts.get(x, 0) + 1
        lonely = {x for x, c in counts.items() if c == 1}
        # uncovered vertices are dropped along with the isolated ones
        lonely |= ground - set(counts)
        if lonely:
            ground -= lonely
            edges = [e - lonely for e in edges]
            changed = True
        kept: list[set] = []
        for i, e in enumerate(edges):
            if not e:
                changed = True
                continue
            contained = any(
                (j != i and e < f) or (j < i and e == f) for j, f in enumerate(edges)
            )
            if contained:
                changed = True
            else:
                kept.append(e)
        edges = kept
    return Hypergraph(tuple(edges), tuple(ground))


def dual_incidence(h: Hypergraph) -> tuple[Hyperedge, ...]:
    """Incidence set of every ground vertex, indexing edges from 1."""
    out = []
    for x in h.ground:
        inc = tuple(i + 1 for i, s in enumerate(h.edge_sets) if x in s)
        if not inc:
            raise PreconditionError(f"vertex {x} lies in no hyperedge; the dual is undefined")
        out.append(inc)
    return tuple(out)


def dual_hypergraph(h: Hypergraph) -> tuple[Hypergraph, int]:
    """Transpose the incidence relation.

    Returns the dual over ``[1, |E|]`` and the number of duplicate incidence
    sets that were merged.
    """
    inc = dual_incidence(h)
    dual = Hypergraph(inc, tuple(range(1, len(h.edges) + 1)))
    return dual, len(inc) - len(dual.edges)


def self_complementing_permutation(h: Hypergraph, k: int) -> Optional[dict[int, int]]:
    """A permutation of the ground set moving every k-subset in the family
    outside it and every k-subset outside it into it, or None."""
    if any(len(e) != k for e in h.edges):
        raise PreconditionError(f"family is not {k}-uniform")
    n = len(h.ground)
    if n > PERMUTATION_SEARCH_LIMIT:
        raise SizeLimitError(f"permutation search limited to {PERMUTATION_SEARCH_LIMIT} vertices")
    total = comb(n, k)
    if 2 * len(h.edges) != total:
        return None
    family = set(h.edge_sets)
    subsets = [frozenset(c) for c in itertools.combinations(h.ground, k)]
    for image in itertools.permutations(h.ground):
        sigma = dict(zip(h.ground, image))
        if all((s in family) != (frozenset(sigma[x] for x in s) in family) for s in subsets):
            return sigma
    return None


def is_self_complementing(h: Hypergraph, k: int, sigma: dict[int, int]) -> bool:
    family = set(h.edge_sets)
    return all(
        (frozenset(s) in family) != (frozenset(sigma[x] for x in s) in family)
        for s in itertools.combinations(h.ground, k)
    )


def relabel(h: Hypergraph, mapping: dict[int, int]) -> Hypergraph:
    return Hypergraph(
        tuple(tuple(mapping[x] for x in e) for e in h.edges),
        tuple(mapping[x] for x in h.ground),
    )


def subsets_of_size(ground: Sequence[int], k: int) -> HyperedgeSet:
    return tuple(itertools.combinations(sorted(ground), k))
