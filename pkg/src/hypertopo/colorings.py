"""Total colorings of graphs and the verifiers built on them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .core import Hyperedge, Hypergraph, Verdict, make_edge, verify_3i
from .errors import PreconditionError
from .graph import Edge, Graph, chromatic_number, greedy_coloring, make_pair
from .intersected import CheckReport, SetColoredGraph, _matching, _report, build_v_intersected

Color = Union[int, Hyperedge]

CHROMATIC_EDGE_LIMIT = 16
CHROMATIC_VERTEX_LIMIT = 12


def S(m: int, k: int, a: int, d: int) -> list[int]:
    """The progression ``k + a d, k + (a+1) d, ..., k + (a+m) d``."""
    return [k + (a + i) * d for i in range(m + 1)]


def O(q: int, k: int, d: int) -> list[int]:
    """The odd progression ``k + d, k + 3d, ..., k + (2q-1) d``."""
    return [k + (2 * i + 1) * d for i in range(q)]


@dataclass(frozen=True)
class TotalColoring:
    """Colors on every vertex and edge, with an optional bipartition."""

    graph: Graph
    vertex_colors: Mapping[int, Color]
    edge_colors: Mapping[Edge, Color]
    bipartition: Optional[tuple[frozenset, frozenset]] = None

    def __post_init__(self):
        vc = {}
        for v, col in self.vertex_colors.items():
            if not 0 <= v < self.graph.vertex_count:
                raise PreconditionError(f"vertex {v} is not in the graph")
            vc[v] = _color(col)
        ec = {}
        for e, col in self.edge_colors.items():
            pair = make_pair(*e)
            if pair not in self.graph.edge_set:
                raise PreconditionError(f"{pair} is not an edge of the graph")
            ec[pair] = _color(col)
        object.__setattr__(self, "vertex_colors", dict(sorted(vc.items())))
        object.__setattr__(self, "edge_colors", dict(sorted(ec.items())))
        if self.bipartition is not None:
            X, Y = (frozenset(part) for part in self.bipartition)
            if X & Y or X | Y != set(range(self.graph.vertex_count)):
                raise PreconditionError("bipartition must split the vertex set")
            for u, v in self.graph.edges:
                if (u in X) == (v in X):
                    raise PreconditionError(f"edge {(u, v)} does not cross the bipartition")
            object.__setattr__(self, "bipartition", (X, Y))

    @classmethod
    def from_lists(cls, graph: Graph, vertex_colors: Sequence[Color], edge_colors: Sequence[Color],
                   X: Optional[Iterable[int]] = None) -> "TotalColoring":
        """Colors listed in vertex index order and canonical edge order."""
        bip = None
        if X is not None:
            xs = frozenset(X)
            bip = (xs, frozenset(range(graph.vertex_count)) - xs)
        return cls(graph, dict(enumerate(vertex_colors)), dict(zip(graph.edges, edge_colors)), bip)

    def is_complete(self) -> bool:
        return len(self.vertex_colors) == self.graph.vertex_count and len(self.edge_colors) == len(
            self.graph.edges
        )

    def require_complete(self) -> None:
        for v in range(self.graph.vertex_count):
            if v not in self.vertex_colors:
                raise PreconditionError(f"vertex {v} is uncolored")
        for e in self.graph.edges:
            if e not in self.edge_colors:
                raise PreconditionError(f"edge {e} is uncolored")

    def oriented(self, e: Edge) -> tuple[int, int]:
        """Endpoints of ``e`` with the X-side vertex first when known."""
        u, v = e
        if self.bipartition is not None and v in self.bipartition[0]:
            return v, u
        return u, v

    def require_integer(self) -> None:
        for col in itertools.chain(self.vertex_colors.values(), self.edge_colors.values()):
            if not isinstance(col, int):
                raise PreconditionError("this check needs integer colors")

    def require_bipartition(self) -> tuple[frozenset, frozenset]:
        if self.bipartition is None:
            raise PreconditionError("this check needs a bipartition (X, Y)")
        return self.bipartition


def _color(col) -> Color:
    if isinstance(col, bool):
        raise PreconditionError("boolean is not a color")
    if isinstance(col, int):
        return col
    return make_edge(col)


# --------------------------------------------------------------------------
# Topcode matrices


@dataclass(frozen=True)
class TopcodeMatrix:
    """Columns ``(f(x), f(xy), f(y))``, one per edge."""

    columns: tuple[tuple[Color, Color, Color], ...]

    @property
    def rows(self) -> tuple[tuple, tuple, tuple]:
        return tuple(tuple(col[r] for col in self.columns) for r in range(3))  # type: ignore[return-value]

    def split(self) -> list["TopcodeMatrix"]:
        return [TopcodeMatrix((col,)) for col in self.columns]

    @staticmethod
    def union(parts: Iterable["TopcodeMatrix"]) -> "TopcodeMatrix":
        return TopcodeMatrix(tuple(col for p in parts for col in p.columns))


def build_topcode_matrix(c: TotalColoring) -> TopcodeMatrix:
    """Columns follow the graph's canonical edge order, X endpoint on top."""
    c.require_complete()
    cols = []
    for e in c.graph.edges:
        x, y = c.oriented(e)
        cols.append((c.vertex_colors[x], c.edge_colors[e], c.vertex_colors[y]))
    return TopcodeMatrix(tuple(cols))


# --------------------------------------------------------------------------
# (k,d) colorings

KINDS = (
    "graceful",
    "odd-graceful",
    "edge-antimagic",
    "harmonious",
    "odd-elegant",
    "edge-magic",
    "edge-difference",
    "felicitous-difference",
    "graceful-difference",
)

CONSTANT_RULES: dict[str, Callable[[int, int, int], int]] = {
    "edge-magic": lambda a, e, b: a + e + b,
    "edge-difference": lambda a, e, b: e + abs(a - b),
    "felicitous-difference": lambda a, e, b: abs(a + b - e),
    "graceful-difference": lambda a, e, b: abs(abs(a - b) - e),
}


@dataclass(frozen=True)
class KdParams:
    kind: str
    k: int
    d: int
    strong: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PreconditionError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.d < 1 or self.k < 0:
            raise PreconditionError("need d >= 1 and k >= 0")


def _first_bad(items: list) -> Verdict:
    return Verdict(not items, items[0] if items else None, tuple(items))


def _has_perfect_matching(graph: Graph, edges: Sequence[Edge], X: frozenset) -> bool:
    if graph.vertex_count % 2:
        return False
    xs = sorted(X)
    options = [[v for e in edges for v in e if u in e and v != u] for u in xs]
    if len(xs) * 2 != graph.vertex_count:
        return False
    return _matching(options) is not None


def verify_kd_total_coloring(c: TotalColoring, p: KdParams) -> CheckReport:
    """Check a (k,d) total coloring of the given kind.

    Checks: ``rule`` (the per-edge relation), ``edge_set`` (the required edge
    color set), ``ranges`` (X colors are multiples of d, Y and edge colors
    lie in k + dN) and, when ``p.strong`` is set for a graceful kind, a
    perfect matching whose color sums are constant.
    """
    X, Y = c.require_bipartition()
    c.require_complete()
    c.require_integer()
    k, d = p.k, p.d
    q = len(c.graph.edges)
    f, fe = c.vertex_colors, c.edge_colors
    checks: dict[str, Verdict] = {}
    notes: dict = {}

    if p.kind in ("graceful", "odd-graceful"):
        checks["rule"] = _first_bad([e for e in c.graph.edges if fe[e] != abs(f[e[0]] - f[e[1]])])
    elif p.kind in ("harmonious", "odd-elegant"):
        # odd-elegant colors run up to k+(2q-1)d, so its residues are taken mod 2qd
        mod = q * d if p.kind == "harmonious" else 2 * q * d
        checks["rule"] = _first_bad(
            [e for e in c.graph.edges if fe[e] - k != (f[e[0]] + f[e[1]] - k) % mod]
        )
        notes["modulus"] = mod
    elif p.kind == "edge-antimagic":
        sums = sorted(f[u] + fe[(u, v)] + f[v] for u, v in c.graph.edges)
        base = sums[0] - 2 * k if sums else 0
        ok = bool(sums) and base >= 0 and base % (2 * d) == 0
        a = base // (2 * d) if ok else None
        if ok:
            ok = sums == [2 * k + 2 * (a + i) * d for i in range(q)]
        bad = [] if ok else list(c.graph.edges[:1])
        checks["rule"] = _first_bad(bad)
        notes["a"] = a
    else:
        rule = CONSTANT_RULES[p.kind]
        values = {e: rule(f[e[0]], fe[e], f[e[1]]) for e in c.graph.edges}
        const = values[c.graph.edges[0]] if q else None
        checks["rule"] = _first_bad([e for e in c.graph.edges if values[e] != const])
        notes["constant"] = const

    edge_colors = sorted(set(fe.values()))
    if p.kind in ("odd-graceful", "odd-elegant"):
        target = O(q, k, d)
        checks["edge_set"] = Verdict(edge_colors == target, sorted(set(edge_colors) ^ set(target))[:1] or None)
    elif p.kind == "edge-antimagic":
        checks["edge_set"] = Verdict(True)
    elif p.kind in CONSTANT_RULES and not p.strong:
        checks["edge_set"] = Verdict(len(edge_colors) <= q, len(edge_colors))
    else:
        target = S(q - 1, k, 0, d)
        checks["edge_set"] = Verdict(edge_colors == target, sorted(set(edge_colors) ^ set(target))[:1] or None)

    bad = [("X", v) for v in sorted(X) if f[v] < 0 or f[v] % d]
    bad += [("Y", v) for v in sorted(Y) if f[v] < k or (f[v] - k) % d]
    bad += [("E", e) for e in c.graph.edges if fe[e] < k or (fe[e] - k) % d]
    checks["ranges"] = _first_bad(bad)

    if p.strong and p.kind in ("graceful", "odd-graceful"):
        total = k + (q - 1) * d if p.kind == "graceful" else k + (2 * q - 1) * d
        good = [e for e in c.graph.edges if f[e[0]] + f[e[1]] == total]
        checks["strong"] = Verdict(_has_perfect_matching(c.graph, good, X), total)
    notes["kind"] = p.kind
    return _report(checks, notes)


def verify_set_ordered_graceful(c: TotalColoring) -> CheckReport:
    """Injective vertex colors in [0, q], max f(X) < min f(Y),
    f(xy) = f(y) - f(x) and f(E) = [1, q]."""
    X, Y = c.require_bipartition()
    c.require_complete()
    c.require_integer()
    f, fe = c.vertex_colors, c.edge_colors
    q = len(c.graph.edges)
    checks = {}
    values = [f[v] for v in range(c.graph.vertex_count)]
    dup = sorted({x for x in values if values.count(x) > 1})
    out = [x for x in values if not 0 <= x <= q]
    checks["labeling"] = Verdict(not dup and not out, (dup or out or [None])[0])
    mx = max((f[v] for v in X), default=None)
    mn = min((f[v] for v in Y), default=None)
    checks["set_ordered"] = Verdict(mx is None or mn is None or mx < mn, (mx, mn))
    bad = []
    for e in c.graph.edges:
        x, y = c.oriented(e)
        if fe[e] != f[y] - f[x]:
            bad.append(e)
    checks["rule"] = _first_bad(bad)
    checks["edge_set"] = Verdict(sorted(fe.values()) == list(range(1, q + 1)))
    return _report(checks)


# --------------------------------------------------------------------------
# 6C labelings


def verify_6c_labeling(c: TotalColoring) -> CheckReport:
    """Evaluate the eight clauses of an odd-even separable 6C-labeling.

    Matching clauses are existential: an edge may be matched with itself.
    ``notes["ev_ordered"]`` lists which EV-ordered alternatives hold.
    """
    c.require_complete()
    c.require_integer()
    g = c.graph
    p, q = g.vertex_count, len(g.edges)
    n = p + q
    f, fe = c.vertex_colors, c.edge_colors
    vcol = [f[v] for v in range(p)]
    ecol = [fe[e] for e in g.edges]
    checks: dict[str, Verdict] = {}
    notes: dict = {}

    everything = sorted(vcol + ecol)
    wrong = sorted(set(range(1, n + 1)).symmetric_difference(everything))
    dups = sorted({x for x in everything if everything.count(x) > 1})
    checks["total_set"] = Verdict(not wrong and not dups, (wrong or dups or [None])[0])

    magic = [fe[e] + abs(f[e[0]] - f[e[1]]) for e in g.edges]
    notes["k"] = magic[0] if magic else None
    checks["e_magic"] = _first_bad([e for e, m in zip(g.edges, magic) if m != magic[0]])

    diffs = {abs(f[u] - f[v]) for u, v in g.edges}
    checks["ee_difference"] = _first_bad(
        [e for e in g.edges if fe[e] not in diffs and 2 * n - fe[e] not in diffs]
    )

    s = {e: abs(f[e[0]] - f[e[1]]) - fe[e] for e in g.edges}
    candidates = sorted({s[g.edges[0]] + t for t in s.values()} | {2 * n + s[g.edges[0]] + t for t in s.values()}) if q else []
    balanced = None
    for kk in candidates:
        if all(any(s[e] + t == kk or 2 * n + s[e] + t == kk for t in s.values()) for e in g.edges):
            balanced = kk
            break
    checks["ee_balanced"] = Verdict(q == 0 or balanced is not None, balanced)
    notes["k_balanced"] = balanced

    alternatives = []
    if vcol and ecol:
        if min(vcol) > max(ecol):
            alternatives.append("vertices-above-edges")
        if max(vcol) < min(ecol):
            alternatives.append("vertices-below-edges")
        if set(vcol) <= set(ecol):
            alternatives.append("vertices-within-edges")
        if set(ecol) <= set(vcol):
            alternatives.append("edges-within-vertices")
        if all(x % 2 for x in vcol) and all(x % 2 == 0 for x in ecol):
            alternatives.append("odd-even")
    notes["ev_ordered"] = alternatives
    checks["ev_ordered"] = Verdict(bool(alternatives), tuple(alternatives))

    singular = (n + 1) // 2
    cands = sorted({ecol[0] + x for x in vcol}) if ecol else []
    matched = None
    for kk in cands:
        edges_ok = all(any(x + y == kk for y in vcol) for x in ecol)
        verts_ok = all(x == singular or any(x + y == kk for y in ecol) for x in vcol)
        if edges_ok and verts_ok:
            matched = kk
            break
    checks["ve_matching"] = Verdict(q == 0 or matched is not None, matched)
    notes["singularity"] = singular

    if c.bipartition is None:
        checks["set_ordered"] = Verdict(False, "no bipartition")
    else:
        X, Y = c.bipartition
        fx, fy = [f[v] for v in X], [f[v] for v in Y]
        ok = not fx or not fy or max(fx) < min(fy) or min(fx) > max(fy)
        checks["set_ordered"] = Verdict(ok)

    bad = [("vertex", v) for v in range(p) if f[v] % 2 == 0]
    bad += [("edge", e) for e in g.edges if fe[e] % 2]
    checks["odd_even"] = _first_bad(bad)
    return _report(checks, notes)


# --------------------------------------------------------------------------
# compound colorings


@dataclass(frozen=True)
class CompoundColoring:
    """Composite colors keyed by ``("v", vertex)`` or ``("e", edge)``."""

    string: dict
    vector: dict
    set: dict
    lattice: Optional[dict]
    uniform: bool


def compound_colorings(
    base: Sequence[TotalColoring],
    perms: Sequence[Sequence[int]],
    coefficients: Optional[Sequence[int]] = None,
) -> CompoundColoring:
    """Combine ``B`` integer colorings of one graph.

    ``perms`` holds three permutations of ``range(B)``: for X vertices, for
    edges and for Y vertices.  Without a bipartition every vertex uses the
    first permutation.
    """
    if len(base) < 2:
        raise PreconditionError("compound colorings need at least two base colorings")
    graph = base[0].graph
    B = len(base)
    for b in base:
        if b.graph != graph:
            raise PreconditionError("all base colorings must share one graph")
        b.require_complete()
        b.require_integer()
    if len(perms) != 3 or any(sorted(pm) != list(range(B)) for pm in perms):
        raise PreconditionError(f"need three permutations of 0..{B - 1}")
    if coefficients is not None:
        if len(coefficients) != B or any(a < 0 for a in coefficients) or sum(coefficients) < 1:
            raise PreconditionError("coefficients must be nonnegative with positive sum")
    Y = base[0].bipartition[1] if base[0].bipartition is not None else frozenset()

    items: list[tuple[tuple, Sequence[int], Callable[[TotalColoring], int]]] = []
    for v in range(graph.vertex_count):
        pm = perms[2] if v in Y else perms[0]
        items.append((("v", v), pm, lambda b, v=v: b.vertex_colors[v]))
    for e in graph.edges:
        items.append((("e", e), perms[1], lambda b, e=e: b.edge_colors[e]))

    string, vector, sets, lattice = {}, {}, {}, ({} if coefficients is not None else None)
    for key, pm, get in items:
        seq = tuple(get(base[i]) for i in pm)
        string[key] = "".join(str(x) for x in seq)
        vector[key] = seq
        sets[key] = frozenset(seq)
        if lattice is not None:
            lattice[key] = sum(a * x for a, x in zip(coefficients, seq))  # type: ignore[arg-type]
    uniform = list(perms[0]) == list(perms[1]) == list(perms[2])
    return CompoundColoring(string, vector, sets, lattice, uniform)


# --------------------------------------------------------------------------
# neighbor sets


@dataclass(frozen=True)
class DneiRecord:
    cv_open: frozenset
    cv_closed: frozenset
    ce_open: frozenset
    ce_closed: frozenset


def derive_dnei_sets(c: TotalColoring) -> tuple[Hypergraph, dict[int, DneiRecord]]:
    """Neighbor color sets of every vertex and the family they form over the
    total color set (empty sets are dropped)."""
    c.require_complete()
    c.require_integer()
    g = c.graph
    f, fe = c.vertex_colors, c.edge_colors
    records = {}
    family = []
    for u in range(g.vertex_count):
        cv = frozenset(f[w] for w in g.adjacency[u])
        ce = frozenset(fe[make_pair(u, w)] for w in g.adjacency[u])
        rec = DneiRecord(cv, cv | {f[u]}, ce, ce | {f[u]})
        records[u] = rec
        family.extend(s for s in (rec.cv_open, rec.cv_closed, rec.ce_open, rec.ce_closed) if s)
    ground = set(f.values()) | set(fe.values())
    return Hypergraph(tuple(family), tuple(ground)), records


# --------------------------------------------------------------------------
# distinguishing set colorings

VARIANTS = ("v", "closed-v", "e", "closed-e", "ve", "closed-ve", "closed-4")


def neighbor_set_sets(g: SetColoredGraph, x: int) -> dict[str, frozenset]:
    F = g.vertex_labels
    nbrs = g.graph.adjacency[x]
    cv = frozenset(F[y] for y in nbrs)
    out = {"v": cv, "closed-v": cv | {F[x]}}
    if g.edge_labels is not None:
        ce = frozenset(g.edge_labels[make_pair(x, y)] for y in nbrs)
        out["e"] = ce
        out["closed-e"] = ce | {F[x]}
        out["ve"] = cv | ce
        out["closed-ve"] = cv | ce | {F[x]}
        out["closed-4"] = frozenset([out["e"], out["closed-e"], out["closed-v"], out["closed-ve"]])
    return out


def verify_distinguishing(g: SetColoredGraph, variant: str) -> Verdict:
    """Adjacent vertices must have different set-sets of the given variant."""
    if variant not in VARIANTS:
        raise PreconditionError(f"unknown variant {variant!r}")
    if variant not in ("v", "closed-v") and g.edge_labels is None:
        raise PreconditionError(f"variant {variant!r} needs edge labels")
    sets = [neighbor_set_sets(g, x)[variant] for x in range(g.graph.vertex_count)]
    return _first_bad([e for e in g.graph.edges if sets[e[0]] == sets[e[1]]])


# --------------------------------------------------------------------------
# W-constraint hyperedge sets

W_RULES: dict[str, Callable[[int, int, int, Optional[int]], bool]] = {
    "graceful": lambda a, g, b, c: b - a == g,
    "edge-magic": lambda a, g, b, c: a + g + b == c,
    "edge-difference": lambda a, g, b, c: g + abs(a - b) == c,
    "felicitous-difference": lambda a, g, b, c: abs(a + b - g) == c,
    "graceful-difference": lambda a, g, b, c: abs(abs(a - b) - g) == c,
}


def verify_w_constraint_hyperedge_set(
    h: Hypergraph,
    parts: tuple[Iterable, Iterable, Iterable],
    W: str = "graceful",
    constant: Optional[int] = None,
) -> CheckReport:
    """Check a set-ordered W-constraint hyperedge set.

    ``parts`` splits the edges of ``h`` into x-edges, E-edges and y-edges.
    Checks: ``hyperedge_set`` (the edges cover the ground set, which must be
    an integer interval), ``set_ordered``, ``w_constraint`` (every gamma is
    realized) and ``full`` (every alpha and beta take part).  The realized
    gammas and the strict 3I verdict are recorded in the notes.
    """
    if W not in W_RULES:
        raise PreconditionError(f"unknown W-constraint {W!r}")
    if W != "graceful" and constant is None:
        raise PreconditionError(f"W-constraint {W!r} needs a constant")
    xs, es, ys = (tuple(make_edge(e) for e in part) for part in parts)
    listed = xs + es + ys
    if len(set(listed)) != len(listed) or set(listed) != set(h.edges):
        raise PreconditionError("parts must partition the hyperedge set")
    rule = W_RULES[W]
    alphas = sorted({x for e in xs for x in e})
    betas = sorted({x for e in ys for x in e})
    gammas = sorted({x for e in es for x in e})
    checks: dict[str, Verdict] = {}

    g = h.ground
    interval = bool(g) and list(g) == list(range(g[0], g[-1] + 1))
    covered = set().union(*map(set, h.edges)) if h.edges else set()
    missing = [x for x in g if x not in covered]
    checks["hyperedge_set"] = Verdict(interval and not missing, missing[0] if missing else (None if interval else "ground set is not an interval"))

    ordered = bool(alphas) and bool(betas) and max(alphas) < min(betas)
    checks["set_ordered"] = Verdict(ordered, (max(alphas, default=None), min(betas, default=None)))

    triples = [(a, c, b) for a in alphas for c in gammas for b in betas if rule(a, c, b, constant)]
    hit_g = {t[1] for t in triples}
    hit_a = {t[0] for t in triples}
    hit_b = {t[2] for t in triples}
    checks["w_constraint"] = _first_bad([c for c in gammas if c not in hit_g])
    unused = [("alpha", a) for a in alphas if a not in hit_a] + [("beta", b) for b in betas if b not in hit_b]
    checks["full"] = _first_bad(unused)
    notes = {"realized": sorted(hit_g), "strict_3i": verify_3i(h).passed}
    return _report(checks, notes)


# --------------------------------------------------------------------------
# chromatic parameters


@dataclass(frozen=True)
class Chromatics:
    chi_edge: int
    chi_vertex: int
    chi_total: int
    exact: bool
    any_two: bool = False


def _hypervertex_colorable(h: Hypergraph, k: int, any_two: bool) -> bool:
    """Color the ground set with ``k`` colors so that no edge of size >= 2
    is monochromatic (or, with ``any_two``, every such edge is rainbow)."""
    verts = list(h.ground)
    pos = {x: i for i, x in enumerate(verts)}
    big = [e for e in h.edges if len(e) >= 2]
    # edges checked once their last vertex is colored
    closing: dict[int, list] = {}
    for e in big:
        closing.setdefault(max(pos[x] for x in e), []).append(e)
    colors: dict[int, int] = {}

    def ok_at(i: int) -> bool:
        for e in closing.get(i, []):
            cs = [colors[x] for x in e]
            if any_two and len(set(cs)) != len(cs):
                return False
            if not any_two and len(set(cs)) == 1:
                return False
        return True

    def place(i: int, used: int) -> bool:
        if i == len(verts):
            return True
        for col in range(min(used + 1, k)):
            colors[verts[i]] = col
            if ok_at(i) and place(i + 1, max(used, col + 1)):
                return True
        del colors[verts[i]]
        return False

    return place(0, 0)


def hypervertex_chromatic_number(h: Hypergraph, any_two: bool = False) -> int:
    if not h.ground:
        return 0
    for k in range(1, len(h.ground) + 1):
        if _hypervertex_colorable(h, k, any_two):
            return k
    return len(h.ground)


def hypergraph_chromatics(h: Hypergraph, any_two: bool = False) -> Chromatics:
    """Hyperedge chromatic index, hypervertex chromatic number and the
    hyper-total chromatic number.

    The hyper-total conditions on edges and on vertices are independent, so
    the total value is the larger of the two.  ``any_two`` switches the
    vertex clause from "some two vertices differ" to "all vertices differ".
    Above the exact limits greedy upper bounds are returned with
    ``exact=False``.
    """
    graph = build_v_intersected(h).graph
    exact = len(h.edges) <= CHROMATIC_EDGE_LIMIT and len(h.ground) <= CHROMATIC_VERTEX_LIMIT
    if exact:
        chi_edge = chromatic_number(graph)
        chi_vertex = hypervertex_chromatic_number(h, False)
        clause = hypervertex_chromatic_number(h, True) if any_two else chi_vertex
    else:
        chi_edge = max(greedy_coloring(graph), default=-1) + 1
        chi_vertex = _greedy_hypervertex(h, False)
        clause = _greedy_hypervertex(h, True) if any_two else chi_vertex
    chi_total = max(chi_edge, clause) if h.edges else 0
    return Chromatics(chi_edge, chi_vertex, chi_total, exact, any_two)


def _greedy_hypervertex(h: Hypergraph, any_two: bool) -> int:
    colors: dict[int, int] = {}
    for x in h.ground:
        col = 0
        while True:
            colors[x] = col
            ok = True
            for e in h.edges:
                if x not in e or len(e) < 2 or any(y not in colors for y in e):
                    continue
                cs = [colors[y] for y in e]
                if (any_two and len(set(cs)) != len(cs)) or (not any_two and len(set(cs)) == 1):
                    ok = False
                    break
            if ok:
                break
            col += 1
    return max(colors.values(), default=-1) + 1


# --------------------------------------------------------------------------
# dual labelling


def dual_labelling(c: TotalColoring, part: str = "total") -> TotalColoring:
    """Reflect the integer colors of ``part`` (``"vertex"``, ``"edge"`` or
    ``"total"``) via ``h'(z) = max + min - h(z)``."""
    if part not in ("vertex", "edge", "total"):
        raise PreconditionError(f"unknown part {part!r}")
    c.require_integer()
    vc, ec = dict(c.vertex_colors), dict(c.edge_colors)
    chosen = []
    if part in ("vertex", "total"):
        chosen += list(vc.values())
    if part in ("edge", "total"):
        chosen += list(ec.values())
    if not chosen:
        return c
    top = max(chosen) + min(chosen)
    if part in ("vertex", "total"):
        vc = {v: top - x for v, x in vc.items()}
    if part in ("edge", "total"):
        ec = {e: top - x for e, x in ec.items()}
    return TotalColoring(c.graph, vc, ec, c.bipartition)


def swap_sides(c: TotalColoring) -> TotalColoring:
    """Exchange the roles of X and Y."""
    X, Y = c.require_bipartition()
    return TotalColoring(c.graph, c.vertex_colors, c.edge_colors, (Y, X))
