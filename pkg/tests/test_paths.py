import pytest

from pattern_lister.corpus import complete, cycle, diamond, small_connected
from pattern_lister.graph import Disconnected, Graph, OpCounter, SameVertex
from pattern_lister.instrument import Tally
from pattern_lister.oracle import brute_cycles, brute_paths, canon_cycle
from pattern_lister.paths import list_cycles, list_st_paths

from conftest import random_graphs


def test_g_path(g_path):
    g = g_path
    s, t = g.vertex("s"), g.vertex("t")
    out = []
    assert list_st_paths(g, s, t, lambda vs, es: out.append(vs)) == 3
    named = sorted(" ".join(g.names[x] for x in p) for p in out)
    assert named == ["s a e t", "s c t", "s e t"]
    assert list_cycles(g) == 3


def test_path_edges_follow_vertices(g_path):
    g = g_path
    got = []
    list_st_paths(g, 1, 3, lambda vs, es: got.append((vs, es)))
    for vs, es in got:
        assert len(es) == len(vs) - 1
        for i, e in enumerate(es):
            assert {g.eu[e], g.ev[e]} == {vs[i], vs[i + 1]}


def test_cycle_edges_close_the_cycle():
    g = diamond(3)
    for vs, es in collect_cycles(g):
        assert len(vs) == len(es)
        ends = sorted(x for e in es for x in (g.eu[e], g.ev[e]))
        assert ends == sorted(vs + vs)


def collect_cycles(g):
    out = []
    list_cycles(g, lambda vs, es: out.append((list(vs), es)))
    return out


def test_errors():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(SameVertex):
        list_st_paths(g, 0, 0)
    with pytest.raises(Disconnected):
        list_st_paths(g, 0, 3)


def test_small_families():
    assert list_st_paths(complete(5), 0, 1) == 16
    assert list_cycles(cycle(6)) == 1
    assert list_cycles(Graph(4, [(0, 1), (1, 2), (2, 3)])) == 0
    assert list_cycles(complete(5)) == 37


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_diamond_cycle_formula(k):
    assert list_cycles(diamond(k)) == 2 * k * k - k


def test_small_corpus_exhaustive():
    for g in small_connected(6):
        for s in range(g.n):
            for t in range(g.n):
                if s == t:
                    continue
                out = []
                before = g.serialize()
                list_st_paths(g, s, t, lambda vs, es: out.append(vs))
                assert g.serialize() == before
                assert len(out) == len(set(out)) and set(out) == brute_paths(g, s, t)
        out = []
        list_cycles(g, lambda vs, es: out.append(canon_cycle(vs)))
        assert len(out) == len(set(out)) and set(out) == brute_cycles(g)


@pytest.mark.parametrize("seed", range(4))
def test_random_with_debug_checks(seed):
    for G, g in random_graphs(25, 8, seed):
        for s in range(g.n):
            for t in range(s + 1, g.n):
                if brute_paths(g, s, t) == set():
                    continue
                tally = Tally()
                out = []
                list_st_paths(g, s, t, lambda vs, es: out.append(vs), tally=tally, debug=True)
                assert tally.ok, tally.summary()
                assert len(out) == len(set(out)) and set(out) == brute_paths(g, s, t)
        tally = Tally()
        out = []
        list_cycles(g, lambda vs, es: out.append(canon_cycle(vs)), tally=tally, debug=True)
        assert tally.ok, tally.summary()
        assert len(out) == len(set(out)) and set(out) == brute_cycles(g)


def test_schedule_sums_to_cycle_count():
    for G, g in random_graphs(30, 9, 8):
        sched = []
        total = list_cycles(g, schedule=sched)
        assert sum(c for _, _, c in sched) == total == len(brute_cycles(g))


def test_counter_linear_on_diamonds():
    ratios = []
    for k in (4, 16):
        g = diamond(k)
        c = OpCounter()
        size = [0]
        list_cycles(g, lambda vs, es: size.__setitem__(0, size[0] + len(es)), counter=c)
        ratios.append(c.n / (g.m + size[0]))
    assert ratios[1] < 1.5 * ratios[0]
