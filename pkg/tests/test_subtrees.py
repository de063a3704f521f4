import pytest

from pattern_lister.corpus import complete, cycle, small_connected
from pattern_lister.graph import Graph, KOutOfRange, OpCounter
from pattern_lister.instrument import Tally
from pattern_lister.oracle import brute_subtrees
from pattern_lister.subtrees import list_k_subtrees

from conftest import collect, random_graphs


def test_g_tree(g_tree):
    assert list_k_subtrees(g_tree, 3) == 9


def test_star():
    assert list_k_subtrees(Graph(5, [(0, i) for i in range(1, 5)]), 3) == 6


def test_cycle_graph():
    # a k-subtree of C_n is a path of k vertices, one per start
    assert list_k_subtrees(cycle(9), 4) == 9
    assert list_k_subtrees(cycle(5), 5) == 5


def test_spanning_trees_of_k5():
    assert list_k_subtrees(complete(5), 5) == 125


def test_k_out_of_range():
    g = cycle(4)
    with pytest.raises(KOutOfRange):
        list_k_subtrees(g, 1)
    with pytest.raises(KOutOfRange):
        list_k_subtrees(g, 5)


def test_disconnected_graph():
    g = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)])
    assert set(collect(g, "subtrees", k=3)) == brute_subtrees(g, 3)


@pytest.mark.parametrize("delay", [False, True])
def test_small_corpus_exhaustive(delay):
    for g in small_connected(6):
        for k in range(2, g.n + 1):
            before = g.serialize()
            out = collect(g, "subtrees", k=k, delay=delay)
            assert g.serialize() == before
            assert len(out) == len(set(out))
            assert set(out) == brute_subtrees(g, k)


@pytest.mark.parametrize("seed", range(4))
def test_random_with_debug_checks(seed):
    for G, g in random_graphs(15, 7, seed):
        for k in range(2, g.n + 1):
            tally = Tally(k=k)
            out = []
            list_k_subtrees(g, k, out.append, tally=tally, debug=True, delay=seed % 2 == 1)
            assert tally.ok, tally.summary()
            keys = {tuple(sorted(tuple(sorted((g.eu[e], g.ev[e]))) for e in es)) for es in out}
            assert len(keys) == len(out) and keys == brute_subtrees(g, k)


def test_counter_moves():
    c = OpCounter()
    list_k_subtrees(complete(5), 3, counter=c)
    assert c.n > 0
