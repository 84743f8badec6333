"""Shift families over [1, M] and their every-zero group law.

Member ``i`` of a shift family is the seed with every element moved by
``i - 1`` modulo ``M``, residues taken in ``1..M``.  Members are stored
*aligned*: edge ``j``, position ``t`` of every member descends from the same
seed element, which is what makes the elementwise law
``x_i + x_j - x_k = x_lambda`` meaningful.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence, Union

from .core import Hypergraph, Verdict, complement_set, power_set
from .errors import InconsistentFamilyError, PreconditionError, SizeLimitError
from .intersected import CheckReport, SetColoredGraph, _report

Aligned = tuple[tuple[int, ...], ...]

EXHAUSTIVE_ASSOCIATIVITY = 12
GROUP_LIMIT = 64
PARTITION_LIMIT = 10


def residue(x: int, M: int) -> int:
    """Representative of ``x`` modulo ``M`` in ``1..M``."""
    return (x - 1) % M + 1


def index_law(i: int, j: int, k: int, M: int, offset: int = 0) -> int:
    """Index of ``E_i + E_j - E_k``; ``offset=1`` gives the variant
    ``i + j - k - 1``."""
    return residue(i + j - k - offset, M)


def _check_range(edges, M: int) -> None:
    for e in edges:
        for x in e:
            if not 1 <= x <= M:
                raise PreconditionError(f"element {x} lies outside [1,{M}]")


def shift_set(edges: Union[Hypergraph, Sequence[Sequence[int]]], r: int, M: int) -> Hypergraph:
    """Add ``r`` to every element modulo ``M`` and re-canonicalize."""
    family = edges.edges if isinstance(edges, Hypergraph) else edges
    _check_range(family, M)
    return Hypergraph(
        tuple(tuple(residue(x + r, M) for x in e) for e in family), tuple(range(1, M + 1))
    )


@dataclass(frozen=True)
class ShiftFamily:
    """``members[i-1]`` is the aligned form of member ``i``.

    The constructor does not check the shift law so that malformed families
    can be built and then diagnosed by :func:`verify_every_zero`.
    """

    modulus: int
    members: tuple[Aligned, ...]

    @classmethod
    def generate(cls, seed: Union[Hypergraph, Sequence[Sequence[int]]], M: int) -> "ShiftFamily":
        family = seed.edges if isinstance(seed, Hypergraph) else tuple(tuple(e) for e in seed)
        _check_range(family, M)
        members = tuple(
            tuple(tuple(residue(x + r, M) for x in e) for e in family) for r in range(M)
        )
        return cls(M, members)

    def __len__(self) -> int:
        return len(self.members)

    def member(self, i: int) -> Hypergraph:
        """Canonical form of member ``i``; indices are residues, so ``M + 1``
        is member 1."""
        return Hypergraph(self.members[residue(i, self.modulus) - 1], tuple(range(1, self.modulus + 1)))

    def replace(self, i: int, aligned: Aligned) -> "ShiftFamily":
        members = list(self.members)
        members[i - 1] = tuple(tuple(e) for e in aligned)
        return ShiftFamily(self.modulus, tuple(members))

    def elementwise(self, i: int, j: int, k: int) -> Aligned:
        M = self.modulus
        a, b, c = self.members[i - 1], self.members[j - 1], self.members[k - 1]
        return tuple(
            tuple(residue(x + y - z, M) for x, y, z in zip(ea, eb, ec))
            for ea, eb, ec in zip(a, b, c)
        )


def combine(fam: ShiftFamily, i: int, j: int, k: int, offset: int = 0) -> int:
    """Return ``lambda`` with ``E_i + E_j - E_k = E_lambda``.

    The elementwise sum is computed and must coincide with the member given
    by the index law, otherwise the family is inconsistent.
    """
    M = fam.modulus
    for idx in (i, j, k):
        if not 1 <= idx <= M:
            raise PreconditionError(f"index {idx} outside [1,{M}]")
    lam = index_law(i, j, k, M, offset)
    if fam.elementwise(i, j, k) != fam.members[lam - 1]:
        raise InconsistentFamilyError(
            f"elementwise E_{i}+E_{j}-E_{k} differs from member {lam}"
        )
    return lam


@dataclass(frozen=True)
class GroupTable:
    zero_index: int
    table: dict

    def row(self, i: int) -> list:
        M = max(a for a, _ in self.table)
        return [self.table[(i, j)] for j in range(1, M + 1)]


def group_table(M: int, k: int, offset: int = 0) -> GroupTable:
    return GroupTable(
        k,
        {(i, j): index_law(i, j, k, M, offset) for i in range(1, M + 1) for j in range(1, M + 1)},
    )


def _observed_table(fam: ShiftFamily, k: int, lookup: dict) -> dict:
    """Table of member indices actually produced by elementwise combination;
    ``None`` where the result is not a member."""
    M = fam.modulus
    return {
        (i, j): lookup.get(fam.elementwise(i, j, k))
        for i in range(1, M + 1)
        for j in range(1, M + 1)
    }


def verify_every_zero(
    fam: ShiftFamily, offset: int = 0, samples: int = 10_000, seed: int = 0
) -> CheckReport:
    """Check the group axioms for every choice of zero member.

    Every witness is a tuple of 1-based indices ending with the zero ``k``.
    """
    M = fam.modulus
    if M > GROUP_LIMIT:
        raise SizeLimitError(f"group verification limited to M <= {GROUP_LIMIT}")
    lookup: dict = {}
    for idx, m in enumerate(fam.members, start=1):
        lookup.setdefault(m, idx)
    rng = random.Random(seed)
    bad: dict[str, list] = {
        name: [] for name in ("closure", "law", "latin", "zero", "inverse", "associative", "commutative")
    }
    idx = range(1, M + 1)
    for k in idx:
        t = _observed_table(fam, k, lookup)
        for (i, j), lam in t.items():
            if lam is None:
                bad["closure"].append((i, j, k))
            elif fam.members[lam - 1] != fam.members[index_law(i, j, k, M, offset) - 1]:
                bad["law"].append((i, j, k))
        for i in idx:
            row = [t[(i, j)] for j in idx]
            col = [t[(j, i)] for j in idx]
            if None in row or len(set(row)) != M or None in col or len(set(col)) != M:
                bad["latin"].append((i, k))
            if t[(i, k)] != i or t[(k, i)] != i:
                bad["zero"].append((i, k))
            if not any(t[(i, j)] == k for j in idx):
                bad["inverse"].append((i, k))
            for j in idx:
                if t[(i, j)] != t[(j, i)]:
                    bad["commutative"].append((i, j, k))
        if M <= EXHAUSTIVE_ASSOCIATIVITY:
            triples = itertools.product(idx, repeat=3)
        else:
            per_zero = -(-samples // M)
            triples = (
                (rng.randint(1, M), rng.randint(1, M), rng.randint(1, M)) for _ in range(per_zero)
            )
        for a, b, c in triples:
            ab, bc = t[(a, b)], t[(b, c)]
            left = None if ab is None else t[(ab, c)]
            right = None if bc is None else t[(a, bc)]
            if left is None or left != right:
                bad["associative"].append((a, b, c, k))
    checks = {
        name: Verdict(not found, found[0] if found else None, tuple(found[:50]))
        for name, found in bad.items()
    }
    return _report(checks, {"modulus": M, "offset": offset})


def generate_hypergraph_group(seed: Hypergraph, N: int) -> ShiftFamily:
    """Shift family ``E_1..E_N`` generated by ``seed``."""
    if seed.ground and not (1 <= seed.ground[0] and seed.ground[-1] <= N):
        raise PreconditionError(f"seed ground set is not inside [1,{N}]")
    return ShiftFamily.generate(seed, N)


@dataclass(frozen=True)
class PowerSetPartition:
    modulus: int
    classes: tuple[Hypergraph, ...]
    orbits: tuple[tuple[ShiftFamily, ...], ...] = field(repr=False)

    def U(self, k: int) -> Hypergraph:
        return self.classes[k - 1]


def partition_power_set(M: int) -> PowerSetPartition:
    """Split the nonempty subsets of [1, M] by size into ``U_1..U_M`` and
    each class into shift orbits."""
    if M > PARTITION_LIMIT:
        raise SizeLimitError(f"power-set partition limited to M <= {PARTITION_LIMIT}")
    subsets = power_set(range(1, M + 1))
    ground = tuple(range(1, M + 1))
    classes, orbits = [], []
    for k in range(1, M + 1):
        members = [s for s in subsets if len(s) == k]
        classes.append(Hypergraph(tuple(members), ground))
        seen: set = set()
        fams = []
        for s in members:
            if s in seen:
                continue
            fam = ShiftFamily.generate([s], M)
            for r in range(1, M + 1):
                seen.update(fam.member(r).edges)
            fams.append(fam)
        orbits.append(tuple(fams))
    return PowerSetPartition(M, tuple(classes), tuple(orbits))


def fixed_point_check(h: Hypergraph, transform: Union[str, tuple]) -> Verdict:
    """Apply ``"complement"`` or ``("shift", r)`` and compare with ``h``.

    The shift uses ``M = max(ground)`` and needs the ground set to be [1, M].
    The witness is the first edge of ``h`` missing from the image.
    """
    if transform == "complement":
        try:
            image = complement_set(h)
        except PreconditionError as exc:
            return Verdict(False, str(exc))
    elif isinstance(transform, tuple) and transform and transform[0] == "shift":
        M = max(h.ground) if h.ground else 0
        if h.ground != tuple(range(1, M + 1)):
            raise PreconditionError("shift fixed points need the ground set [1, M]")
        image = shift_set(h, transform[1], M)
    else:
        raise PreconditionError(f"unknown transform {transform!r}")
    missing = [e for e in h.edges if e not in set(image.edges)]
    return Verdict(image == h, missing[0] if missing else None, tuple(missing))


@dataclass(frozen=True)
class ColoredGroup:
    """Shifted copies of a set-colored graph plus their aligned label vectors
    (vertex labels then edge labels, each in the base graph's element order)."""

    modulus: int
    copies: tuple[SetColoredGraph, ...]
    vectors: tuple[tuple[int, ...], ...]


def _base_vector(g: SetColoredGraph) -> tuple[int, ...]:
    flat = [x for lab in g.vertex_labels for x in lab]
    if g.edge_labels:
        flat += [x for e in g.graph.edges for x in g.edge_labels[e]]
    return tuple(flat)


def verify_colored_group(group: ColoredGroup) -> CheckReport:
    """Elementwise law ``b_i + b_j - b_k = b_lambda`` at every position."""
    M = group.modulus
    bad = []
    for i, j, k in itertools.product(range(1, M + 1), repeat=3):
        lam = index_law(i, j, k, M)
        a, b, c, d = (group.vectors[t - 1] for t in (i, j, k, lam))
        for pos, (x, y, z, w) in enumerate(zip(a, b, c, d)):
            if residue(x + y - z, M) != w:
                bad.append((i, j, k, pos))
                break
    return _report({"law": Verdict(not bad, bad[0] if bad else None, tuple(bad[:50]))})


def set_colored_graph_group(g: SetColoredGraph, M: int) -> tuple[ColoredGroup, CheckReport]:
    """Build the ``M`` copies of ``g`` with labels shifted by ``i - 1`` and
    verify the finite-module addition law."""
    base = _base_vector(g)
    for x in base:
        if not 1 <= x <= M:
            raise PreconditionError(f"label element {x} lies outside [1,{M}]")

    def shifted(lab, r):
        return tuple(residue(x + r, M) for x in lab)

    copies, vectors = [], []
    for r in range(M):
        edge_labels = None
        if g.edge_labels is not None:
            edge_labels = {e: shifted(lab, r) for e, lab in g.edge_labels.items()}
        copies.append(SetColoredGraph(g.graph, tuple(shifted(l, r) for l in g.vertex_labels), edge_labels))
        vectors.append(shifted(base, r))
    group = ColoredGroup(M, tuple(copies), tuple(vectors))
    return group, verify_colored_group(group)
