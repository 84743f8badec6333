import itertools
import random

import pytest
from hypothesis import strategies as st

from hypertopo.core import Hypergraph
from hypertopo.graph import Graph


@st.composite
def proper_families(draw, max_ground=8, min_ground=2):
    """Families over [1, n] with no edge equal to the ground set."""
    n = draw(st.integers(min_ground, max_ground))
    ground = tuple(range(1, n + 1))
    proper = st.frozensets(st.sampled_from(ground), min_size=1, max_size=n - 1)
    edges = draw(st.lists(proper, min_size=1, max_size=8))
    return Hypergraph(tuple(edges), ground)


@st.composite
def families(draw, max_ground=6):
    n = draw(st.integers(1, max_ground))
    ground = tuple(range(1, n + 1))
    edges = draw(st.lists(st.frozensets(st.sampled_from(ground), min_size=1), min_size=1, max_size=7))
    return Hypergraph(tuple(edges), ground)


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < extra:
            edges.add((u, v))
    return Graph(n, tuple(edges))


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph(n, tuple((rng.randrange(v), v) for v in range(1, n)))


@st.composite
def connected_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_connected_graph(random.Random(seed), n)


@st.composite
def trees(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_tree(random.Random(seed), n)


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, 12):
        terminalreporter.write_line(f"CRITERION {n}: {results.get(n, 'NOT RUN')}")
