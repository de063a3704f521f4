"""Brute-force reference enumerators and canonical forms.

These work on a plain adjacency dict built from the edge list and share no
code with the listers. ``baseline_subtrees`` is the simple binary-partition
lister with a truncated-DFS feasibility probe at every node.
"""
from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable, Sequence

from .graph import DELETED, Graph, GraphError, Journal, KOutOfRange, OpCounter

DEFAULT_CAP = 14


class TooLarge(GraphError):
    pass


def _adjacency(g: Graph, cap: int | None) -> tuple[int, list[set[int]], list[tuple[int, int]]]:
    if cap is not None and g.n > cap:
        raise TooLarge(f"oracle refuses n={g.n} > {cap}")
    adj: list[set[int]] = [set() for _ in range(g.n)]
    edges = []
    for e in range(g.m_total):
        if g.state[e] == DELETED:
            continue
        u, v = g.eu[e], g.ev[e]
        adj[u].add(v)
        adj[v].add(u)
        edges.append((min(u, v), max(u, v)))
    return g.n, adj, edges


# -- canonical forms ------------------------------------------------------

def canon_edges(pairs: Iterable[tuple], key=None) -> tuple:
    """Sorted tuple of sorted pairs."""
    if key is None:
        return tuple(sorted(tuple(sorted(p)) for p in pairs))
    return tuple(sorted(tuple(sorted(p, key=key)) for p in pairs))


def canon_cycle(seq: Sequence, key=None) -> tuple:
    """Rotate and reflect so the least vertex is first and its smaller neighbor second."""
    seq = list(seq)
    if not seq:
        return ()
    k = key if key is not None else (lambda x: x)
    i = min(range(len(seq)), key=lambda j: k(seq[j]))
    rot = seq[i:] + seq[:i]
    if len(rot) > 2 and k(rot[-1]) < k(rot[1]):
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def canon_path(seq: Sequence) -> tuple:
    return tuple(seq)


# -- brute force ------------------------------------------------------------

def brute_subtrees(g: Graph, k: int, cap: int | None = DEFAULT_CAP) -> set[tuple]:
    """All acyclic connected edge sets spanning k vertices."""
    n, adj, edges = _adjacency(g, cap)
    if k < 2:
        raise KOutOfRange("k-subtrees need k >= 2")
    level = {frozenset([e]) for e in edges}
    for _ in range(k - 2):
        nxt = set()
        for tree in level:
            verts = {x for e in tree for x in e}
            for x in verts:
                for y in adj[x]:
                    if y not in verts:
                        nxt.add(tree | {(min(x, y), max(x, y))})
        level = nxt
    return {tuple(sorted(t)) for t in level}


def _connected(vs: Sequence[int], adj: list[set[int]]) -> bool:
    inside = set(vs)
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in inside and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(inside)


def brute_subgraphs(g: Graph, k: int, cap: int | None = DEFAULT_CAP) -> set[tuple]:
    """Vertex sets of all connected induced k-subgraphs."""
    n, adj, _ = _adjacency(g, cap)
    if k < 1:
        raise KOutOfRange("k must be positive")
    live = [v for v in range(n) if g.alive[v]]
    return {vs for vs in combinations(live, k) if _connected(vs, adj)}


def brute_paths(g: Graph, s: int, t: int, cap: int | None = DEFAULT_CAP) -> set[tuple]:
    n, adj, _ = _adjacency(g, cap)
    out = set()
    path = [s]
    on = {s}

    def walk(x):
        if x == t:
            out.add(tuple(path))
            return
        for y in sorted(adj[x]):
            if y not in on:
                on.add(y)
                path.append(y)
                walk(y)
                path.pop()
                on.discard(y)

    walk(s)
    return out


def brute_cycles(g: Graph, cap: int | None = DEFAULT_CAP) -> set[tuple]:
    """Simple cycles as canonical vertex tuples; each cycle found from its least vertex."""
    n, adj, _ = _adjacency(g, cap)
    out = set()
    for r in range(n):
        path = [r]
        on = {r}

        def walk(x):
            for y in adj[x]:
                if y == r and len(path) >= 3:
                    if path[1] < path[-1]:
                        out.add(tuple(path))
                elif y > r and y not in on:
                    on.add(y)
                    path.append(y)
                    walk(y)
                    path.pop()
                    on.discard(y)

        walk(r)
    return out


# -- simple binary partition baseline --------------------------------------

def baseline_subtrees(g: Graph, k: int, sink: Callable | None = None,
                      counter: OpCounter | None = None) -> int:
    """Binary partition with a truncated DFS probe at each right branch.

    Emits tuples of edge ids. The graph is restored on return.
    """
    if not 2 <= k <= g.n:
        raise KOutOfRange(f"k={k} outside [2, {g.n}]")
    ctr = counter if counter is not None else OpCounter()
    j = Journal(ctr)
    n = g.n
    eu, ev = g.eu, g.ev
    adj = g.adj
    nxt = adj.nxt
    base = adj.nodes
    inS = [False] * n
    Sv: list[int] = []
    Se: list[int] = []
    count = 0

    def dfs_k() -> int:
        seen = set(Sv)
        stack = list(Sv)
        steps = 0
        while stack and len(seen) < k:
            x = stack.pop()
            s = nxt[base + x]
            while s != base + x:
                steps += 1
                y = eu[s >> 1] ^ ev[s >> 1] ^ x
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
                    if len(seen) >= k:
                        break
                s = nxt[s]
        ctr.n += steps + len(Sv)
        return len(seen)

    def choose() -> int:
        steps = 0
        for x in Sv:
            s = nxt[base + x]
            while s != base + x:
                steps += 1
                e = s >> 1
                if not inS[eu[e] ^ ev[e] ^ x]:
                    ctr.n += steps
                    return e
                s = nxt[s]
        ctr.n += steps
        return -1

    def rec() -> None:
        nonlocal count
        ctr.n += 1
        if len(Sv) == k:
            count += 1
            ctr.n += k
            if sink is not None:
                sink(tuple(Se))
            return
        e = choose()
        x = eu[e] if inS[eu[e]] else ev[e]
        y = eu[e] ^ ev[e] ^ x
        Sv.append(y)
        Se.append(e)
        inS[y] = True
        rec()
        inS[y] = False
        Sv.pop()
        Se.pop()
        g.del_edge(e)
        ctr.n += 1
        if dfs_k() >= k:
            rec()
        g.undel_edge(e)
        ctr.n += 1

    mark = j.mark()
    for v in range(n):
        if not g.alive[v]:
            continue
        Sv.append(v)
        inS[v] = True
        if dfs_k() >= k:
            rec()
        Sv.pop()
        inS[v] = False
        g.del_vertex(v, j)
    j.rollback(mark)
    return count
