import itertools
import sys

import networkx as nx
import pytest

from pattern_lister.corpus import diamond
from pattern_lister.graph import Graph, KOutOfRange, OpCounter
from pattern_lister.oracle import (DEFAULT_CAP, TooLarge, baseline_subtrees, brute_cycles,
                                   brute_paths, brute_subgraphs, brute_subtrees,
                                   canon_cycle, canon_edges)

from conftest import random_graphs


def test_canon_cycle_rotation_and_reflection():
    assert canon_cycle([3, 1, 2]) == (1, 2, 3)
    assert canon_cycle([2, 1, 3]) == (1, 2, 3)
    assert canon_cycle(["e", "a", "s"]) == ("a", "e", "s")
    assert canon_cycle([]) == ()


def test_canon_edges():
    assert canon_edges([(2, 1), (0, 3)]) == ((0, 3), (1, 2))


def test_star_subtrees():
    g = Graph(5, [(0, i) for i in range(1, 5)])
    assert len(brute_subtrees(g, 3)) == 6


def test_diamond_cycles():
    assert len(brute_cycles(diamond(2))) == 6


def test_cap():
    g = Graph(DEFAULT_CAP + 1, [(i, i + 1) for i in range(DEFAULT_CAP)])
    with pytest.raises(TooLarge):
        brute_cycles(g)
    assert brute_cycles(g, cap=None) == set()


def test_k_range():
    with pytest.raises(KOutOfRange):
        brute_subtrees(Graph(2, [(0, 1)]), 1)


def nx_subtrees(G, k):
    out = set()
    for es in itertools.combinations(sorted(tuple(sorted(e)) for e in G.edges()), k - 1):
        H = nx.Graph(list(es))
        if H.number_of_nodes() == k and nx.is_tree(H):
            out.add(es)
    return out


@pytest.mark.parametrize("seed", range(3))
def test_against_networkx(seed):
    for G, g in random_graphs(25, 7, seed):
        for k in range(2, g.n + 1):
            assert brute_subtrees(g, k) == nx_subtrees(G, k)
            want = {vs for vs in itertools.combinations(range(g.n), k)
                    if nx.is_connected(G.subgraph(vs))}
            assert brute_subgraphs(g, k) == want
        cyc = {canon_cycle(c) for c in nx.simple_cycles(G) if len(c) >= 3}
        assert brute_cycles(g) == cyc
        for s, t in [(0, g.n - 1), (g.n - 1, 0)]:
            assert brute_paths(g, s, t) == {tuple(p) for p in nx.all_simple_paths(G, s, t)}


def test_baseline_matches_brute():
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))
    for G, g in random_graphs(30, 7, 5):
        for k in range(2, g.n + 1):
            out = []
            before = g.serialize()
            c = OpCounter()
            n = baseline_subtrees(g, k, out.append, counter=c)
            assert g.serialize() == before
            keys = {tuple(sorted(tuple(sorted((g.eu[e], g.ev[e]))) for e in es)) for es in out}
            assert n == len(out) == len(keys)
            assert keys == brute_subtrees(g, k)


def test_oracle_closure_over_reduction_schedule():
    from pattern_lister.paths import list_cycles
    for G, g in random_graphs(40, 8, 21):
        sched = []
        list_cycles(g, schedule=sched)
        union = set()
        for comp, b, count in sched:
            rest = [e for e in comp if e != b]
            h = Graph(g.n, [(g.eu[e], g.ev[e]) for e in rest])
            paths = brute_paths(h, g.eu[b], g.ev[b])
            assert len(paths) == count
            union |= {canon_cycle(p) for p in paths}
        assert union == brute_cycles(g)
