import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import proper_families
from hypertopo.core import Hypergraph, complement_set, power_set
from hypertopo.errors import InconsistentFamilyError, PreconditionError
from hypertopo.fixtures import FIX_A_EDGES, FIX_E, fix_a, fix_b, fix_b_e21, fix_e, fix_f
from hypertopo.generators import fixed_point_union
from hypertopo.graph import Graph
from hypertopo.groups import (
    ShiftFamily,
    combine,
    fixed_point_check,
    generate_hypergraph_group,
    group_table,
    index_law,
    partition_power_set,
    residue,
    set_colored_graph_group,
    shift_set,
    verify_every_zero,
)
from hypertopo.intersected import SetColoredGraph


def test_residue_convention():
    assert residue(0, 8) == 8 and residue(8, 8) == 8 and residue(9, 8) == 1 and residue(-1, 8) == 7


# --- shift_set ----------------------------------------------------------------


def test_shift_e11_by_one_gives_listed_e12():
    assert shift_set(fix_b(1), 1, 10) == fix_b(2)


@pytest.mark.parametrize("i", range(2, 11))
def test_shift_e11_matches_every_listing(i):
    assert shift_set(fix_b(1), i - 1, 10) == fix_b(i)


def test_ten_shifts_return_to_start():
    h = fix_b(1)
    for _ in range(10):
        h = shift_set(h, 1, 10)
    assert h == fix_b(11) == fix_b(1)


@given(proper_families(), st.integers(-20, 20))
def test_shift_by_modulus_is_identity_and_shifts_compose(h, r):
    M = max(h.ground)
    assert shift_set(h, M, M) == shift_set(h, 0, M)
    assert shift_set(shift_set(h, r, M), -r, M).edges == h.edges


def test_shift_rejects_out_of_range():
    with pytest.raises(PreconditionError):
        shift_set(Hypergraph(((1, 9),)), 1, 8)


# --- combine ------------------------------------------------------------------


def test_fix_a_combine_2_3_1():
    fam = ShiftFamily.generate(FIX_A_EDGES, 8)
    # members are e_i themselves, shifted one element at a time
    assert fam.member(1) == fix_a()
    lam = combine(fam, 2, 3, 1)
    assert lam == 4
    assert fam.elementwise(2, 3, 1) == fam.members[3]


def test_fix_a_single_edges_follow_index_law():
    e = {i + 1: set(x) for i, x in enumerate(FIX_A_EDGES)}
    a, b, c = sorted(e[2]), sorted(e[3]), sorted(e[1])
    assert {residue(x + y - z, 8) for x, y, z in zip(a, b, c)} == e[4]


@given(st.integers(1, 8), st.integers(1, 8))
def test_zero_cancels(i, k):
    fam = ShiftFamily.generate(FIX_A_EDGES, 8)
    assert combine(fam, i, k, k) == i


def test_combine_is_commutative_on_all_triples():
    fam = ShiftFamily.generate(fix_b(1), 10)
    for i, j, k in itertools.product(range(1, 11), repeat=3):
        assert combine(fam, i, j, k) == combine(fam, j, i, k)


def test_offset_one_law_is_inconsistent():
    fam = ShiftFamily.generate(FIX_A_EDGES, 8)
    with pytest.raises(InconsistentFamilyError):
        combine(fam, 2, 3, 1, offset=1)
    assert not verify_every_zero(fam, offset=1).checks["law"].ok


def test_combine_index_range():
    fam = ShiftFamily.generate(FIX_A_EDGES, 8)
    with pytest.raises(PreconditionError):
        combine(fam, 9, 1, 1)


# --- every-zero verification --------------------------------------------------


@pytest.mark.parametrize("seed", [fix_a(), fix_b(1), fix_b_e21()], ids=["A", "B11", "B21"])
def test_every_zero_passes(seed):
    M = max(seed.ground)
    r = verify_every_zero(ShiftFamily.generate(seed, M))
    assert r.passed, r.failed()


def test_corrupted_member_fails_closure():
    fam = ShiftFamily.generate(FIX_A_EDGES, 8)
    bad = list(map(list, fam.members[2]))
    bad[0][0] = residue(bad[0][0] + 1, 8)
    r = verify_every_zero(fam.replace(3, bad))
    assert not r.checks["closure"].ok
    i, j, k = r.checks["closure"].witness
    assert fam.replace(3, bad).elementwise(i, j, k) not in fam.replace(3, bad).members


def test_group_table_is_latin_for_every_zero():
    for M in range(1, 13):
        for k in range(1, M + 1):
            t = group_table(M, k)
            for i in range(1, M + 1):
                assert sorted(t.row(i)) == list(range(1, M + 1))
                assert sorted(t.table[(j, i)] for j in range(1, M + 1)) == list(range(1, M + 1))
            assert all(t.table[(i, k)] == i for i in range(1, M + 1))


def test_index_law_offsets():
    assert index_law(2, 3, 1, 8) == 4
    assert index_law(2, 3, 1, 8, offset=1) == 3


def test_associativity_sampled_above_threshold():
    seed = Hypergraph(((1, 2, 3),), tuple(range(1, 14)))
    r = verify_every_zero(ShiftFamily.generate(seed, 13), samples=2000, seed=7)
    assert r.passed


# --- generate -----------------------------------------------------------------


def test_generate_from_e11_gives_listings():
    fam = generate_hypergraph_group(fix_b(1), 10)
    assert [fam.member(i) for i in range(1, 11)] == [fix_b(i) for i in range(1, 11)]


def test_generate_from_fix_a_seed():
    fam = generate_hypergraph_group(Hypergraph(((1, 2, 3, 4),), tuple(range(1, 9))), 8)
    assert Hypergraph(tuple(e for m in fam.members for e in m), tuple(range(1, 9))) == fix_a()


@given(proper_families())
def test_member_one_is_seed(h):
    M = max(h.ground)
    assert generate_hypergraph_group(h, M).member(1).edges == h.edges


def test_generate_rejects_seed_outside():
    with pytest.raises(PreconditionError):
        generate_hypergraph_group(Hypergraph(((1, 12),)), 10)


# --- power-set partition ------------------------------------------------------


def test_partition_four_matches_listing():
    p = partition_power_set(4)
    for k in range(1, 5):
        assert p.U(k) == fix_e(k)
    assert len(p.U(2).edges) == 6


def test_partition_complements():
    p = partition_power_set(4)
    assert complement_set(p.U(1)) == p.U(3)
    for k in range(1, 4):
        assert complement_set(p.U(k)) == p.U(4 - k)


@pytest.mark.parametrize("M", range(1, 8))
def test_partition_is_exact_cover_of_power_set(M):
    p = partition_power_set(M)
    flat = [e for u in p.classes for e in u.edges]
    assert sorted(flat) == sorted(power_set(range(1, M + 1)))
    assert len(flat) == len(set(flat))
    for k in range(1, M + 1):
        assert fixed_point_check(p.U(k), ("shift", 1)).ok
        for fam in p.orbits[k - 1]:
            assert verify_every_zero(fam).passed


def test_partition_listing_constant_matches():
    assert FIX_E[1] == tuple(itertools.combinations(range(1, 5), 2))


# --- fixed points -------------------------------------------------------------


def test_e11_is_not_a_complement_fixed_point():
    v = fixed_point_check(fix_b(1), "complement")
    assert not v.ok
    assert v.violations == ((1, 2), (8, 9, 10))


def test_e21_is_a_complement_fixed_point():
    assert fixed_point_check(fix_b_e21(), "complement").ok


@settings(max_examples=100)
@given(proper_families())
def test_union_with_complement_is_fixed(h):
    assert fixed_point_check(fixed_point_union(h), "complement").ok


@pytest.mark.parametrize("M", range(3, 9))
def test_m_star_not_complement_fixed(M):
    assert not fixed_point_check(fix_f(M), "complement").ok


def test_fixed_point_full_edge_reports_reason():
    v = fixed_point_check(Hypergraph(((1, 2),)), "complement")
    assert not v.ok
    assert "{1,2}" in v.witness


def test_fixed_point_unknown_transform():
    with pytest.raises(PreconditionError):
        fixed_point_check(fix_a(), "mirror")


# --- set-colored graph groups -------------------------------------------------


def test_one_edge_graph_group():
    sc = SetColoredGraph(Graph.path(2), ((1,), (2,)))
    group, report = set_colored_graph_group(sc, 3)
    assert len(group.copies) == 3 and report.passed
    for i, copy in enumerate(group.copies):
        assert copy.vertex_labels == ((residue(1 + i, 3),), (residue(2 + i, 3),))


def test_group_copies_differ_by_constant():
    sc = SetColoredGraph(Graph.path(3), ((1, 4), (4, 5), (5, 6)), {(0, 1): (4,), (1, 2): (5,)})
    group, report = set_colored_graph_group(sc, 6)
    assert report.passed
    for i, vec in enumerate(group.vectors):
        assert all(residue(b - a, 6) == residue(i, 6) for a, b in zip(group.vectors[0], vec))


def test_corrupted_group_copy_fails():
    from hypertopo.groups import ColoredGroup, verify_colored_group

    sc = SetColoredGraph(Graph.path(2), ((1,), (2,)))
    group, _ = set_colored_graph_group(sc, 3)
    vectors = list(group.vectors)
    vectors[1] = (vectors[1][0], residue(vectors[1][1] + 1, 3))
    assert not verify_colored_group(ColoredGroup(3, group.copies, tuple(vectors))).passed


def test_group_labels_out_of_range():
    sc = SetColoredGraph(Graph.path(2), ((1,), (5,)))
    with pytest.raises(PreconditionError):
        set_colored_graph_group(sc, 3)
