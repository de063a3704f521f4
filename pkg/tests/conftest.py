import os
import random

import networkx as nx
import pytest

from pattern_lister.cli import run_lister
from pattern_lister.graph import Graph, read_graph

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fixture_graph(name: str) -> Graph:
    return read_graph(os.path.join(FIXTURES, name))


def collect(g: Graph, kind: str, **kw) -> list:
    out = []
    run_lister(g, kind, lambda key, es: out.append(key), **kw)
    return out


def random_graphs(count: int, max_n: int, seed: int, connected: bool = False):
    """Seeded gnp graphs as (networkx graph, Graph) pairs."""
    rnd = random.Random(seed)
    made = 0
    while made < count:
        n = rnd.randint(2, max_n)
        G = nx.gnp_random_graph(n, rnd.uniform(0.2, 0.8), seed=rnd.randrange(10**9))
        if G.number_of_edges() == 0 or (connected and not nx.is_connected(G)):
            continue
        made += 1
        yield G, Graph(n, list(G.edges()))


@pytest.fixture
def g_tree():
    return fixture_graph("g_tree.txt")


@pytest.fixture
def g_sub():
    return fixture_graph("g_sub.txt")


@pytest.fixture
def g_path():
    return fixture_graph("g_path.txt")
