import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_graphs, random_tree, trees
from hypertopo.errors import PreconditionError, SizeLimitError
from hypertopo.graph import Graph, is_forest, is_tree
from hypertopo.treeforest import (
    adding_edge_removing,
    bareiss_determinant,
    forest_count,
    forest_terms,
    spanning_tree_count,
    vertex_coincide,
    vertex_split,
)


def prufer_tree_count(n):
    """Count distinct labeled trees by decoding every Prüfer sequence."""
    if n <= 2:
        return 1
    seen = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        t = nx.from_prufer_sequence(list(seq))
        seen.add(frozenset(tuple(sorted(e)) for e in t.edges))
    return len(seen)


def brute_forest_count(n):
    pairs = list(itertools.combinations(range(n), 2))
    total = 0
    for r in range(max(n, 1)):
        for es in itertools.combinations(pairs, r):
            if is_forest(Graph(n, es)):
                total += 1
    return total


def brute_spanning_trees(g):
    n = g.vertex_count
    return sum(1 for es in itertools.combinations(g.edges, n - 1) if is_tree(Graph(n, es)))


# --- determinant --------------------------------------------------------------


def test_bareiss_small():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[2, 1], [1, 3]]) == 5
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_leibniz(m):
    def leibniz(a):
        n = len(a)
        total = 0
        for p in itertools.permutations(range(n)):
            inv = sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))
            prod = 1
            for i in range(n):
                prod *= a[i][p[i]]
            total += (-1) ** inv * prod
        return total

    assert bareiss_determinant(m) == leibniz(m)


# --- spanning trees -----------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 8))
def test_complete_graph_matches_prufer_oracle(n):
    assert spanning_tree_count(Graph.complete(n)) == prufer_tree_count(n)


def test_complete_bipartite_k23():
    g = Graph(5, tuple((a, b) for a in range(2) for b in range(2, 5)))
    assert spanning_tree_count(g) == 12


@pytest.mark.parametrize("m,n", [(1, 1), (2, 2), (2, 4), (3, 3), (3, 5)])
def test_complete_bipartite_matches_brute(m, n):
    g = Graph(m + n, tuple((a, m + b) for a in range(m) for b in range(n)))
    assert spanning_tree_count(g) == brute_spanning_trees(g)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=7))
def test_spanning_count_matches_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.vertex_count))
    nxg.add_edges_from(g.edges)
    expected = round(nx.number_of_spanning_trees(nxg)) if g.vertex_count > 1 else 1
    assert spanning_tree_count(g) == expected


def test_disconnected_has_no_spanning_tree():
    assert spanning_tree_count(Graph(4, ((0, 1), (2, 3)))) == 0


def test_spanning_size_guard():
    with pytest.raises(SizeLimitError):
        spanning_tree_count(Graph.path(65))


# --- forests ------------------------------------------------------------------


@pytest.mark.parametrize("n", range(0, 7))
def test_forest_count_matches_brute_force(n):
    assert forest_count(n) == brute_forest_count(n)


def test_forest_values_frozen():
    # frozen from brute_forest_count for n <= 6
    assert [forest_count(n) for n in range(1, 7)] == [1, 2, 7, 38, 291, 2932]


@pytest.mark.parametrize("n", range(1, 20))
def test_forest_leading_term(n):
    assert forest_terms(n)[0] == (n + 1) ** (n - 1)


def test_forest_count_exceeds_tree_count():
    for n in range(2, 20):
        assert forest_count(n) > n ** (n - 2)


def test_forest_guards():
    with pytest.raises(PreconditionError):
        forest_count(-1)
    with pytest.raises(SizeLimitError):
        forest_count(31)


# --- split and coincide -------------------------------------------------------


def test_split_then_coincide_round_trip():
    g = Graph(4, ((0, 1), (0, 2), (0, 3)))
    s = vertex_split(g, 0, ({1}, {2, 3}))
    assert s.vertex_count == 5 and len(s.edges) == 3
    assert vertex_coincide(s, 0, 4).edge_set == g.edge_set


@settings(max_examples=60)
@given(trees(max_n=10), st.data())
def test_split_tree_gives_forest_of_two(t, data):
    high = [v for v in range(t.vertex_count) if t.degree(v) >= 2]
    if not high:
        return
    u = data.draw(st.sampled_from(high))
    nbrs = sorted(t.adjacency[u])
    cut = data.draw(st.integers(1, len(nbrs) - 1))
    s = vertex_split(t, u, (nbrs[:cut], nbrs[cut:]))
    assert is_forest(s) and not is_tree(s)
    assert vertex_coincide(s, u, t.vertex_count).edge_set == t.edge_set


def test_split_rejects_bad_parts():
    g = Graph.path(3)
    with pytest.raises(PreconditionError):
        vertex_split(g, 1, ({0}, {0, 2}))
    with pytest.raises(PreconditionError):
        vertex_split(g, 0, ({1}, set()))


def test_coincide_rejects_adjacent_and_common_neighbor():
    g = Graph.path(3)
    with pytest.raises(PreconditionError):
        vertex_coincide(g, 0, 1)
    with pytest.raises(PreconditionError):
        vertex_coincide(g, 0, 2)


# --- edge exchange ------------------------------------------------------------


def test_adding_edge_removing_on_path():
    t = adding_edge_removing(Graph.path(4), (0, 3), (1, 2))
    assert is_tree(t) and (0, 3) in t.edge_set and (1, 2) not in t.edge_set


def test_adding_edge_removing_rejects_cycle_left_over():
    with pytest.raises(PreconditionError):
        adding_edge_removing(Graph.path(4), (0, 2), (2, 3))


def test_exchange_walk_stays_among_trees(rng):
    t = random_tree(rng, 8)
    for _ in range(50):
        missing = [e for e in itertools.combinations(range(8), 2) if e not in t.edge_set]
        add = rng.choice(missing)
        options = [e for e in t.edges if is_tree(Graph(8, tuple(x for x in t.edges if x != e) + (add,)))]
        t = adding_edge_removing(t, add, rng.choice(options))
        assert is_tree(t)
