import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pattern_lister.graph import (DELETED, PARKED, Chains, EdgeNotLive, EmptyInput,
                                  Graph, GraphError, Journal, NotDeleted, OpCounter,
                                  ParallelEdge, SelfLoop, VertexNotLive, load_graph,
                                  parse_edge_list)


def square():
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_parse_skips_comments_and_blanks():
    assert parse_edge_list("# hi\na b\n\n b  c # tail\n") == [("a", "b"), ("b", "c")]


def test_parse_rejects_bad_line():
    with pytest.raises(GraphError, match="line 2"):
        parse_edge_list("a b\na b c\n")


def test_load_orders_by_first_appearance():
    g = load_graph([("x", "y"), ("z", "x")])
    assert g.names == ["x", "y", "z"]
    assert g.vertex("z") == 2
    with pytest.raises(KeyError):
        g.vertex("w")


def test_load_rejects_bad_input():
    with pytest.raises(SelfLoop):
        load_graph([("a", "a")])
    with pytest.raises(ParallelEdge):
        load_graph([("a", "b"), ("b", "a")])
    with pytest.raises(EmptyInput):
        load_graph([])


def test_del_and_undel_edge():
    g = square()
    g.del_edge(0)
    assert g.deg[0] == 1 and g.m == 3 and g.state[0] == DELETED
    assert [y for _, y in g.neighbors(0)] == [3]
    with pytest.raises(EdgeNotLive):
        g.del_edge(0)
    g.undel_edge(0)
    assert g.deg[0] == 2 and g.m == 4
    with pytest.raises(NotDeleted):
        g.undel_edge(0)


def test_del_vertex_with_journal():
    g = square()
    before = g.serialize()
    j = Journal()
    g.del_vertex(1, j)
    assert not g.alive[1] and g.deg[0] == 1 and g.deg[2] == 1
    with pytest.raises(VertexNotLive):
        g.del_vertex(1)
    j.rollback()
    assert g.serialize() == before


def test_parked_edges_hidden_from_adjacency():
    g = square()
    j = Journal()
    g.park_edge(0, j)
    assert g.state[0] == PARKED and g.npark[0] == 1 and g.deg[0] == 1
    assert 0 not in g.adj_edges(0) and g.parked_edges(1) == [0]
    with pytest.raises(GraphError):
        g.del_vertex(0)
    g.check()
    assert g.unpark_all(0, j) == 1
    g.check()
    assert g.state[0] != PARKED
    j.rollback()
    assert g.serialize() == square().serialize()


def test_rollback_counts_undone_records():
    c = OpCounter()
    g = square()
    j = Journal(c)
    g.del_edge(1, j)
    g.park_edge(2, j)
    before = c.n
    j.rollback()
    assert c.n > before


def test_chains_clear_and_cut():
    ch = Chains(5, 1)
    for x in range(5):
        ch.link_tail(0, x)
    j = Journal()
    ch.cut_after(2, 0, j)
    assert ch.to_list(0) == [0, 1, 2]
    ch.clear(0, j)
    assert ch.empty(0)
    ch.link_tail(0, 4, j)
    assert ch.to_list(0) == [4]
    j.rollback()
    assert ch.to_list(0) == [0, 1, 2, 3, 4]


def test_copy_drops_deleted_edges():
    g = square()
    g.del_edge(2)
    h = g.copy()
    assert h.m == 3 and h.n == 4


ops = st.lists(st.tuples(st.sampled_from(["del", "park", "unpark", "delv", "mark"]),
                         st.integers(0, 1000)), max_size=40)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), ops)
def test_journal_round_trip(seed, script):
    rnd = random.Random(seed)
    n = rnd.randint(2, 9)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if rnd.random() < 0.5]
    g = Graph(n, pairs)
    before = g.serialize()
    j = Journal()
    marks = []
    for op, r in script:
        if op == "mark":
            marks.append((j.mark(), g.serialize()))
            continue
        if op == "delv":
            cands = [v for v in range(n) if g.alive[v] and not g.npark[v]]
            if cands:
                g.del_vertex(cands[r % len(cands)], j)
            continue
        want = PARKED if op == "unpark" else 0
        cands = [e for e in range(g.m_total) if g.state[e] == want]
        if not cands:
            continue
        e = cands[r % len(cands)]
        {"del": g.del_edge, "park": g.park_edge, "unpark": g.unpark_edge}[op](e, j)
        g.check()
    for mark, snap in reversed(marks):
        j.rollback(mark)
        assert g.serialize() == snap
    j.rollback()
    assert g.serialize() == before
