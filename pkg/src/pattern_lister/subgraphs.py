"""Connected induced k-subgraph listing by binary partition on vertices.

The certificate is a vertex set C = S ∪ F with |C| = k, where F is a forest
grown by a truncated DFS from S. Vertices of F are kept in discovery order so
the last leaf is always the last F vertex in that order.
"""
from __future__ import annotations

from typing import Callable

from .graph import Graph, Journal, KOutOfRange, OpCounter
from .instrument import Tally
from .subtrees import drive

EXTERNAL, INTERNAL = "external", "internal"


class SubgraphLister:
    def __init__(self, g: Graph, k: int, sink: Callable | None = None,
                 counter: OpCounter | None = None, tally: Tally | None = None,
                 debug: bool = False) -> None:
        if not 1 <= k <= g.n:
            raise KOutOfRange(f"k={k} outside [1, {g.n}]")
        n = g.n
        self.g = g
        self.k = k
        self.sink = sink
        self.ctr = counter if counter is not None else OpCounter()
        self.j = Journal(self.ctr)
        self.tally = tally
        self.debug = debug
        self.inS = [False] * n
        self.B = [False] * n
        self.par = [-1] * n
        self.ch: list = [None] * n
        self.roots: list[int] = []
        self.order: list[int] = []   # F vertices (and promoted ones) in discovery order
        self.Sv: list[int] = []
        self.Eind: list[int] = []    # edges of G[S]
        self.size = [0]              # |C|
        self.count = 0
        self.source = -1

    # -- helpers ---------------------------------------------------------------

    def _incident(self, x: int):
        """Live then parked (edge, neighbor) pairs of x."""
        g = self.g
        eu, ev = g.eu, g.ev
        for lst in (g.adj, g.park):
            for s in lst.items(x):
                e = s >> 1
                yield e, eu[e] ^ ev[e] ^ x

    def _add_to_S(self, v: int) -> None:
        g, j = self.g, self.j
        inS = self.inS
        if g.deg[v] + g.npark[v] <= len(self.Sv):
            steps = 0
            for e, y in self._incident(v):
                steps += 1
                if inS[y]:
                    j.append(self.Eind, e)
        else:
            steps = len(self.Sv)
            for u in self.Sv:
                e = g.edge_between(u, v)
                if e >= 0 and g.state[e] != 1:
                    j.append(self.Eind, e)
        self.ctr.n += steps + 1
        j.append(self.Sv, v)
        j.set(inS, v, True)

    def _evict(self, x: int) -> None:
        """x leaves C: clear its flag and release parked edges."""
        j = self.j
        j.set(self.B, x, False)
        if self.g.npark[x]:
            self.ctr.n += self.g.unpark_all(x, j)

    def _grow(self, x: int, stack_root: bool) -> bool:
        """DFS from x (in C) adding new F vertices until |C| = k; True if full."""
        j, k = self.j, self.k
        B, inS, par, ch = self.B, self.inS, self.par, self.ch
        steps = 0
        stack = [(x, self._incident(x))]
        while stack:
            y, it = stack[-1]
            for e, z in it:
                steps += 1
                if B[z]:
                    continue
                j.set(B, z, True)
                j.set(par, z, y)
                j.set(ch, z, [])
                if inS[y]:
                    j.append(self.roots, z)
                else:
                    ch[y].append(z)
                j.append(self.order, z)
                self.size[0] += 1
                if self.size[0] >= k:
                    self.ctr.n += steps
                    return True
                stack.append((z, self._incident(z)))
                break
            else:
                stack.pop()
        self.ctr.n += steps
        return False

    def _set_size(self, value: int) -> None:
        self.j.set(self.size, 0, value)

    # -- certificate operations -----------------------------------------------

    def certificate(self, v: int) -> bool:
        """S = <v>; truncated DFS from v. True iff |C| = k."""
        j = self.j
        self.source = v
        j.set(self.B, v, True)
        self._add_to_S(v)
        self._set_size(1)
        if self.k == 1:
            return True
        return self._grow(v, True)

    def component(self) -> list[int]:
        return self.Sv + [x for x in self.order if not self.inS[x]]

    def choose(self) -> tuple[int, str]:
        g, j = self.g, self.j
        B = self.B
        eu, ev = g.eu, g.ev
        nxt = g.adj.nxt
        base = g.adj.nodes
        steps = 0
        for u in self.Sv:
            s = nxt[base + u]
            while s != base + u:
                s2 = nxt[s]
                steps += 1
                e = s >> 1
                y = eu[e] ^ ev[e] ^ u
                if not B[y]:
                    self.ctr.n += steps
                    return y, EXTERNAL
                g.park_edge(e, j)
                s = s2
        self.ctr.n += steps
        return self.roots[-1], INTERNAL

    def remove_last_leaf(self) -> None:
        j = self.j
        order, inS = self.order, self.inS
        while inS[order[-1]]:
            j.pop(order)
        x = j.pop(order)
        p = self.par[x]
        if inS[p]:
            j.pop(self.roots)
        else:
            j.pop(self.ch[p])
        self._evict(x)

    def promote(self) -> None:
        j = self.j
        v = j.pop(self.roots)
        for c in self.ch[v]:
            j.append(self.roots, c)
        self._add_to_S(v)

    def update_left(self, v: int, kind: str) -> None:
        if kind == EXTERNAL:
            self.j.set(self.B, v, True)
            self._add_to_S(v)
            self.remove_last_leaf()
        else:
            self.promote()

    def update_right(self, v: int, kind: str) -> bool:
        """Delete v from the graph and repair C; True iff |C| = k."""
        g, j = self.g, self.j
        if kind == EXTERNAL:
            g.del_vertex(v, j)
            return True
        if g.npark[v]:
            self.ctr.n += g.unpark_all(v, j)
        g.del_vertex(v, j)
        # drop the last tree; its vertices may be recaptured below
        tree = []
        order = self.order
        while True:
            x = j.pop(order)
            if self.inS[x]:
                continue
            tree.append(x)
            j.set(self.B, x, False)
            if x == v:
                break
        j.pop(self.roots)
        self._set_size(self.size[0] - len(tree))
        self.ctr.n += len(tree)
        full = False
        for u in self.Sv:
            if self._grow(u, True):
                full = True
                break
        for x in tree:
            if x != v and not self.B[x] and g.npark[x]:
                self.ctr.n += g.unpark_all(x, j)
        return full

    # -- checks -------------------------------------------------------------

    def validate(self) -> None:
        """Debug check: C is a connected k-set grown as a forest from S."""
        g = self.g
        C = self.component()
        assert len(C) == self.size[0] == self.k, (len(C), self.size[0])
        assert all(self.B[x] for x in C) and sum(self.B) == len(C)
        for x in C:
            if not self.inS[x]:
                p = self.par[x]
                assert self.B[p] and g.edge_between(p, x) >= 0
                assert g.state[g.edge_between(p, x)] != 1
        want = sorted(e for e in range(g.m_total) if g.state[e] != 1
                      and self.inS[g.eu[e]] and self.inS[g.ev[e]])
        assert sorted(self.Eind) == want
        for v in range(g.n):
            for s in g.park.items(v):
                e = s >> 1
                assert self.B[g.eu[e]] and self.B[g.ev[e]]

    # -- recursion -------------------------------------------------------------

    def _emit(self) -> None:
        self.count += 1
        self.ctr.n += self.k + len(self.Eind)
        if self.sink is not None:
            self.sink(tuple(self.Sv), tuple(self.Eind))

    def _node(self):
        self.ctr.n += 1
        tally = self.tally
        if self.debug:
            self.validate()
        if len(self.Sv) == self.k:
            self._emit()
            return 1
        if tally is not None:
            tally.node(self.source, "internal")
        v, kind = self.choose()
        j = self.j
        mark = j.mark()
        self.update_left(v, kind)
        left = yield self._node()
        if tally is not None:
            tally.check("subgraph_left_branch_productive", left >= 1)
        j.rollback(mark)
        right = 0
        if self.update_right(v, kind):
            right = yield self._node()
        j.rollback(mark)
        return left + right

    def run(self) -> int:
        g, j = self.g, self.j
        top = j.mark()
        for v in range(g.n):
            if not g.alive[v]:
                continue
            mark = j.mark()
            if not self.certificate(v):
                comp = self.component()
                j.rollback(mark)
                for u in comp:
                    g.del_vertex(u, j)
                continue
            leaves = drive(self._node())
            if self.tally is not None:
                c = self.tally.nodes[v]
                self.tally.check("subgraph_internal_at_most_k_per_leaf",
                                 c["internal"] <= self.k * leaves, (v, c["internal"], leaves))
            j.rollback(mark)
            g.del_vertex(v, j)
        j.rollback(top)
        return self.count


def list_k_subgraphs(g: Graph, k: int, sink: Callable | None = None, *,
                     counter: OpCounter | None = None, tally: Tally | None = None,
                     debug: bool = False) -> int:
    """Emit (vertices, induced edges) for every connected induced k-subgraph."""
    return SubgraphLister(g, k, sink, counter, tally, debug).run()
