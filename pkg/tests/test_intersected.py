import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import connected_graphs, families, random_connected_graph, random_tree, trees
from hypertopo.core import Hypergraph, complement_set, graham_reduction, hyperedge_degrees, relabel
from hypertopo.errors import PreconditionError
from hypertopo.fixtures import FIX_A_EDGES, FIX_C_EDGES, FIX_C_VERTICES, fix_a, fix_b, fix_c, fix_d, fix_f
from hypertopo.generators import cyclic_k_uniform, enumerate_3i
from hypertopo.graph import Graph, graph_isomorphism, is_tree
from hypertopo.intersected import (
    SetColoredGraph,
    build_v_intersected,
    check_colored_homomorphism,
    double_graph,
    find_proper_hamiltonian_cycle,
    grow_tree_hyperedge_set,
    hyperedge_coincide,
    hyperedge_connectivity,
    hyperedge_split,
    hypergraph_isomorphic,
    induce_3i_coloring,
    intersected_metrics,
    min_vertex_cut_exhaustive,
    min_vertex_cut_flow,
    verify_hyper_cycle,
    verify_uniform_cycle,
    verify_v_intersected,
    verify_ve_intersected,
)


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.vertex_count))
    out.add_edges_from(g.edges)
    return out


def paper_order(h, listing):
    return [h.index(e) for e in listing]


# --- builder ------------------------------------------------------------------


@pytest.mark.parametrize("M", range(3, 9))
def test_m_star_gives_complete_graph(M):
    g = build_v_intersected(fix_f(M)).graph
    assert g == Graph.complete(M)


def test_strong_6_2_gives_k10():
    assert build_v_intersected(fix_d(6, 2)).graph == Graph.complete(10)


def test_disjoint_edges_give_isolated_vertices():
    g = build_v_intersected(Hypergraph(((1, 2), (3, 4)))).graph
    assert g.vertex_count == 2 and g.edges == ()


@given(families())
def test_builder_adjacency_is_pairwise_intersection(h):
    sc = build_v_intersected(h)
    assert sc.graph.vertex_count == len(h.edges)
    for i, j in itertools.combinations(range(len(h.edges)), 2):
        meet = set(h.edges[i]) & set(h.edges[j])
        assert sc.graph.has_edge(i, j) == bool(meet)
        if meet:
            assert set(sc.edge_labels[(i, j)]) == meet
    assert hyperedge_degrees(h) == sc.graph.degrees()


@given(families())
def test_builder_output_verifies(h):
    sc = build_v_intersected(h)
    assert verify_ve_intersected(sc, sc.label_hypergraph(h.ground), True).checks["containment"].ok
    assert verify_v_intersected(sc, h).passed


# --- ve verifier --------------------------------------------------------------


def test_fix_c_fails_containment_on_u23():
    # u_23 as printed omits 10, which lies in e_2 and e_3
    c = fix_c()
    r = verify_ve_intersected(c, c.label_hypergraph())
    assert r.failed() == ["containment"]
    assert r.checks["containment"].witness == ((1, 2), 10)


def test_fix_c_with_ten_restored_passes():
    labels = dict(FIX_C_EDGES)
    labels[(1, 2)] = labels[(1, 2)] + (10,)
    c = SetColoredGraph(Graph.complete(4), FIX_C_VERTICES, labels)
    assert verify_ve_intersected(c, c.label_hypergraph()).passed


def test_fix_c_u12_contains_e1_e2_meet():
    assert {2, 6, 7, 11} <= set(FIX_C_EDGES[(0, 1)])
    assert set(FIX_C_VERTICES[0]) & set(FIX_C_VERTICES[1]) == {2, 6, 7, 11}


def test_fix_c_u12_replaced_by_one_fails_at_e1_e2():
    labels = dict(FIX_C_EDGES)
    labels[(0, 1)] = (1,)
    c = SetColoredGraph(Graph.complete(4), FIX_C_VERTICES, labels)
    r = verify_ve_intersected(c, c.label_hypergraph())
    assert r.checks["containment"].witness == ((0, 1), 2)


def test_ve_verifier_needs_edge_labels():
    sc = SetColoredGraph(Graph.path(2), ((1, 2), (2, 3)))
    with pytest.raises(PreconditionError):
        verify_ve_intersected(sc, Hypergraph(((1, 2), (2, 3))))


def test_equal_endpoint_labels_rejected_by_default():
    sc = SetColoredGraph(Graph.path(2), ((1, 2), (1, 2)), {(0, 1): (1, 2)})
    h = Hypergraph(((1, 2),))
    assert not verify_ve_intersected(sc, h).checks["distinct_endpoints"].ok
    assert verify_ve_intersected(sc, h, allow_equal_endpoint_labels=True).checks["distinct_endpoints"].ok


# --- connectivity -------------------------------------------------------------


@pytest.mark.parametrize("M", range(3, 9))
def test_m_star_connectivity(M):
    assert hyperedge_connectivity(fix_f(M)).value == M - 1


def test_path_family_cut():
    c = hyperedge_connectivity(Hypergraph(((1, 2), (2, 3), (3, 4))))
    assert c.value == 1 and c.cut == ((2, 3),)


def test_fix_a_connectivity_is_six():
    # e_i and e_{i+4} are disjoint, so the intersected graph is K_8 minus a perfect matching
    g = build_v_intersected(fix_a()).graph
    assert len(g.edges) == 28 - 4
    assert nx.node_connectivity(to_nx(g)) == 6
    assert hyperedge_connectivity(fix_a()).value == 6


def test_disconnected_family_reports_components():
    c = hyperedge_connectivity(Hypergraph(((1, 2), (3, 4))))
    assert c.value == 0 and c.components == (((1, 2),), ((3, 4),))


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=9))
def test_cut_methods_agree_with_networkx(g):
    if g.vertex_count < 2:
        return
    ex_val, ex_cut = min_vertex_cut_exhaustive(g)
    fl_val, fl_cut = min_vertex_cut_flow(g)
    assert ex_val == fl_val == nx.node_connectivity(to_nx(g))
    assert len(ex_cut) == ex_val and len(fl_cut) == fl_val


# --- metrics ------------------------------------------------------------------


def test_fix_a_metrics():
    m = intersected_metrics(fix_a())
    assert m.hyperedge_degrees == (6,) * 8
    assert m.hyperdiameter == 2
    assert m.hyperdiameter == nx.diameter(to_nx(build_v_intersected(fix_a()).graph))


def test_path_family_metrics():
    m = intersected_metrics(Hypergraph(((1, 2), (2, 3), (3, 4))))
    assert m.hyperedge_degrees == (1, 2, 1)
    assert m.hyperdiameter == 2
    assert m.dominating_set == ((2, 3),)


def test_single_edge_metrics():
    m = intersected_metrics(Hypergraph(((1, 2, 3),)))
    assert m.hyperedge_degrees == (0,)
    assert m.dominating_set == ((1, 2, 3),)


def test_disconnected_diameter_is_infinite():
    assert intersected_metrics(Hypergraph(((1,), (2,)))).hyperdiameter == float("inf")


# --- hamiltonian cycles -------------------------------------------------------


def test_fix_a_cycle_in_listed_order():
    a = fix_a()
    c = find_proper_hamiltonian_cycle(a, FIX_A_EDGES)
    assert [a.edges[i] for i in c.edge_order] == [tuple(sorted(e)) for e in FIX_A_EDGES]
    assert c.representatives == (2, 3, 4, 5, 6, 7, 8, 1)
    assert verify_hyper_cycle(a, c).passed


def test_fix_a_cycle_in_canonical_order_verifies():
    a = fix_a()
    c = find_proper_hamiltonian_cycle(a)
    assert c.edge_order[0] == 0
    assert verify_hyper_cycle(a, c).passed


def test_disjoint_family_has_no_cycle():
    assert find_proper_hamiltonian_cycle(Hypergraph(((1,), (2,), (3,)))) is None


def test_cycle_needs_square_family():
    with pytest.raises(PreconditionError):
        find_proper_hamiltonian_cycle(Hypergraph(((1, 2), (2, 3))))


@pytest.mark.parametrize("n", range(3, 11))
def test_cyclic_families_have_cycles(n):
    for k in range(2, n):
        h = cyclic_k_uniform(n, k)
        c = find_proper_hamiltonian_cycle(h)
        assert c is not None and verify_hyper_cycle(h, c).passed


def test_uniform_cycle_fix_a_identity():
    a = fix_a()
    r = verify_uniform_cycle(a, paper_order(a, FIX_A_EDGES))
    assert r.passed and r.notes["k"] == 4


def test_uniform_cycle_fix_a_swap_fails():
    a = fix_a()
    listing = list(FIX_A_EDGES)
    listing[1], listing[5] = listing[5], listing[1]
    r = verify_uniform_cycle(a, paper_order(a, listing))
    assert not r.checks["sizes"].ok
    first = r.checks["sizes"].witness
    assert first == ((1, 2, 3, 4), (1, 6, 7, 8))
    assert len(set(first[0]) & set(first[1])) == 1


def test_uniform_cycle_triangle():
    h = Hypergraph(((1, 2), (2, 3), (1, 3)))
    assert verify_uniform_cycle(h, [0, 1, 2]).passed


def test_uniform_cycle_literal_reading_is_flagged():
    r = verify_uniform_cycle(fix_a(), paper_order(fix_a(), FIX_A_EDGES))
    assert r.notes["literal"] is False and r.notes["literal_satisfiable"] is False


def test_uniform_cycle_non_uniform_rejected():
    with pytest.raises(PreconditionError):
        verify_uniform_cycle(Hypergraph(((1, 2), (2, 3, 4))), [0, 1])


# --- constructive colorings ---------------------------------------------------


def test_induce_k2():
    h, c = induce_3i_coloring(Graph.complete(2))
    assert c.vertex_labels[0] != c.vertex_labels[1]
    assert set(c.vertex_labels[0]) & set(c.vertex_labels[1]) == set(c.edge_labels[(0, 1)])
    assert verify_ve_intersected(c, h).passed


def test_induce_star_edge_labels_distinct_singletons():
    h, c = induce_3i_coloring(Graph.star(3))
    labels = list(c.edge_labels.values())
    assert all(len(x) == 1 for x in labels) and len(set(labels)) == 3


def test_induce_rejects_disconnected():
    with pytest.raises(PreconditionError):
        induce_3i_coloring(Graph(3, ((0, 1),)))


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=12))
def test_induce_output_verifies(g):
    h, c = induce_3i_coloring(g)
    for (u, v), lab in c.edge_labels.items():
        assert set(lab) == set(c.vertex_labels[u]) & set(c.vertex_labels[v]) != set()
    for x in range(g.vertex_count):
        incident = [c.edge_labels[tuple(sorted((x, y)))] for y in g.adjacency[x]]
        assert len(set(incident)) == len(incident)
    assert verify_ve_intersected(c, h).passed


def test_grow_tree_star():
    h = grow_tree_hyperedge_set(Graph.star(3))
    assert h.edges == ((1,), (1, 2, 3), (2,), (3,))
    assert graph_isomorphism(build_v_intersected(h).graph, Graph.star(3)) is not None


def test_grow_tree_single_edge():
    h = grow_tree_hyperedge_set(Graph.path(2))
    assert len(h.edges) == 2
    assert build_v_intersected(h).graph == Graph.path(2)


def test_grow_tree_rejects_cycle():
    with pytest.raises(PreconditionError):
        grow_tree_hyperedge_set(Graph.cycle(4))


@settings(max_examples=50, deadline=None)
@given(trees(max_n=10))
def test_grow_tree_round_trip(t):
    h = grow_tree_hyperedge_set(t)
    g = build_v_intersected(h).graph
    assert nx.is_isomorphic(to_nx(g), to_nx(t))


def test_double_k2():
    base = build_v_intersected(Hypergraph(((1, 2), (2, 3))))
    d = double_graph(base)
    assert d.graph.vertex_count == 4
    # E, its copy, u u', and the two cross joins
    assert len(d.graph.edges) == 1 + 1 + 2 + 2
    assert verify_v_intersected(d, Hypergraph(((1, 2), (2, 3))), allow_equal_endpoint_labels=True).passed


@settings(max_examples=30, deadline=None)
@given(families(max_ground=5))
def test_double_graph_vertex_count_and_repeat(h):
    base = build_v_intersected(h)
    d = double_graph(base)
    assert d.graph.vertex_count == 2 * base.graph.vertex_count
    assert len(d.graph.edges) == 4 * len(base.graph.edges) + base.graph.vertex_count
    dd = double_graph(d)
    assert verify_v_intersected(dd, h, allow_equal_endpoint_labels=True).passed


def test_double_graph_rejects_bad_input():
    bad = SetColoredGraph(Graph(2, ()), ((1,), (1, 2)))
    with pytest.raises(PreconditionError):
        double_graph(bad)


# --- coincide / split ---------------------------------------------------------


def test_coincide_singletons():
    h = Hypergraph(((1,), (2,), (3,)))
    assert hyperedge_coincide(h, 0, 1).edges == ((1, 2), (3,))


@given(families())
def test_coincide_reduces_count_by_at_most_one(h):
    if len(h.edges) < 2:
        return
    out = hyperedge_coincide(h, 0, 1)
    merged = tuple(sorted(set(h.edges[0]) | set(h.edges[1])))
    expected = len(h.edges) - 1 - (1 if merged in h.edges[2:] else 0)
    assert len(out.edges) == expected


def test_coincide_index_out_of_range():
    with pytest.raises(PreconditionError):
        hyperedge_coincide(Hypergraph(((1,), (2,))), 0, 5)


def test_split_and_overlap():
    h = Hypergraph(((1, 2, 3),))
    assert hyperedge_split(h, 0, ((1, 2), (3,)))[0].edges == ((1, 2), (3,))
    out, dup = hyperedge_split(h, 0, ((1, 2), (2, 3)))
    assert out.edges == ((1, 2), (2, 3)) and dup == 0


def test_split_reports_dedup():
    out, dup = hyperedge_split(Hypergraph(((1, 2), (1, 2, 3))), 1, ((1, 2), (3,)))
    assert out.edges == ((1, 2), (3,)) and dup == 1


def test_split_must_cover():
    with pytest.raises(PreconditionError):
        hyperedge_split(Hypergraph(((1, 2, 3),)), 0, ((1,), (2,)))


def test_coincide_split_round_trip():
    h = Hypergraph(((1, 2), (3,), (4, 5)))
    merged = hyperedge_coincide(h, 0, 1)
    i = merged.index((1, 2, 3))
    assert hyperedge_split(merged, i, ((1, 2), (3,)))[0] == h


# --- isomorphism --------------------------------------------------------------


def test_fix_a_shift_isomorphism():
    shift = {x: x % 8 + 1 for x in range(1, 9)}
    theta = hypergraph_isomorphic(fix_a(), relabel(fix_a(), shift))
    assert theta is not None
    assert relabel(fix_a(), theta) == relabel(fix_a(), shift)


def test_degree_series_mismatch_is_absent():
    a = Hypergraph(((1, 2), (2, 3)))
    b = Hypergraph(((1, 2), (1, 3)), (1, 2, 3))
    assert hypergraph_isomorphic(a, b) is not None
    c = Hypergraph(((1, 2, 3),))
    assert hypergraph_isomorphic(a, c) is None


def test_fix_b_e11_is_not_isomorphic_to_its_complement():
    # the complement changes the edge size profile
    b = fix_b(1)
    assert sorted(map(len, b.edges)) != sorted(map(len, complement_set(b).edges))
    assert hypergraph_isomorphic(b, complement_set(b)) is None


@settings(max_examples=40, deadline=None)
@given(families(max_ground=5))
def test_random_relabel_is_isomorphic(h):
    rng = random.Random(len(h.edges))
    image = list(h.ground)
    rng.shuffle(image)
    mapping = dict(zip(h.ground, image))
    theta = hypergraph_isomorphic(h, relabel(h, mapping))
    assert theta is not None and relabel(h, theta) == relabel(h, mapping)


# --- homomorphism -------------------------------------------------------------


def test_identity_homomorphism():
    sc = build_v_intersected(fix_a())
    ident = {v: v for v in range(sc.graph.vertex_count)}
    assert check_colored_homomorphism(sc, sc, ident).passed


def test_collapse_of_double_graph():
    base = build_v_intersected(Hypergraph(((1, 2), (2, 3), (3, 4))))
    d = double_graph(base)
    p = base.graph.vertex_count
    collapse = {v: v % p for v in range(2 * p)}
    assert not check_colored_homomorphism(d, base, collapse).passed
    assert check_colored_homomorphism(d, base, collapse, allow_collapse=True).passed


def test_non_edge_image_fails():
    sc = build_v_intersected(Hypergraph(((1, 2), (2, 3), (3, 4))))
    f = {0: 0, 1: 2, 2: 1}
    r = check_colored_homomorphism(sc, sc, f)
    assert r.checks["edges"].witness == (0, 1)


def test_partial_map_rejected():
    sc = build_v_intersected(Hypergraph(((1, 2), (2, 3))))
    with pytest.raises(PreconditionError):
        check_colored_homomorphism(sc, sc, {0: 0})


# --- cross-module property ----------------------------------------------------


def test_tree_intersected_graph_reduces_to_empty():
    checked = 0
    for h in enumerate_3i(4):
        g = build_v_intersected(h).graph
        if is_tree(g):
            checked += 1
            assert graham_reduction(h).edges == ()
    assert checked > 0


def test_random_trees_and_graphs_helpers():
    rng = random.Random(1)
    assert is_tree(random_tree(rng, 7))
    assert nx.is_connected(to_nx(random_connected_graph(rng, 7)))


def test_domination_size_guard():
    from hypertopo.errors import SizeLimitError
    from hypertopo.intersected import minimum_dominating_set

    with pytest.raises(SizeLimitError):
        minimum_dominating_set(Graph.path(25))
