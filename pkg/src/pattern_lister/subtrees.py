"""k-subtree listing by binary partition over a truncated multi-source DFS certificate.

The certificate of a partial subtree S is the truncated DFS ``D`` grown from
the vertices of S in order. It is split into S itself, the list L of tree
edges leaving S (one per root of the forest F) and the forest F. Internal
edges met while scanning are parked so later scans skip them.
"""
from __future__ import annotations

from typing import Callable

from .graph import Graph, Journal, KOutOfRange, OpCounter
from .instrument import Tally

EXTERNAL, BACK, TREE = "external", "back", "tree"


def drive(gen):
    """Run a generator-based recursion on an explicit stack."""
    stack = [gen]
    val = None
    while stack:
        try:
            req = stack[-1].send(val)
        except StopIteration as stop:
            stack.pop()
            val = stop.value
            continue
        stack.append(req)
        val = None
    return val


class SubtreeLister:
    def __init__(self, g: Graph, k: int, sink: Callable | None = None,
                 counter: OpCounter | None = None, delay: bool = False,
                 tally: Tally | None = None, debug: bool = False) -> None:
        if not 2 <= k <= g.n:
            raise KOutOfRange(f"k={k} outside [2, {g.n}]")
        n = g.n
        self.g = g
        self.k = k
        self.sink = sink
        self.ctr = counter if counter is not None else OpCounter()
        self.j = Journal(self.ctr)
        self.delay = delay
        self.tally = tally
        self.debug = debug
        self.inS = [False] * n
        self.inD = [False] * n
        self.par = [-1] * n
        self.pe = [-1] * n
        self.ch: list = [None] * n
        self.eta = [0] * n
        self.R: list = [[]]          # R[0]: F roots, i.e. the L order
        self.Sv: list[int] = []
        self.Se: list[int] = []
        self.st = [False, 0]         # is_unary, |V[D]|
        self.count = 0
        self.source = -1

    # -- certificate -------------------------------------------------------

    def forest(self) -> list[int]:
        """F vertices in DFS preorder."""
        out = []
        ch = self.ch
        stack = list(reversed(self.R[0]))
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(reversed(ch[x]))
        return out

    def d_edges(self) -> list[int]:
        return self.Se[1:] + [self.pe[x] for x in self.forest()]

    def mdfs(self) -> None:
        """Recompute D from scratch for the current S."""
        g, j, k = self.g, self.j, self.k
        inS, inD, par, pe, ch, eta = self.inS, self.inD, self.par, self.pe, self.ch, self.eta
        steps = 0
        for x in self.forest():
            steps += 1
            if not inS[x]:
                j.set(inD, x, False)
        for u in self.Sv:
            if eta[u]:
                j.set(eta, u, 0)
        roots: list[int] = []
        j.set(self.R, 0, roots)
        eu, ev = g.eu, g.ev
        nxt = g.adj.nxt
        base = g.adj.nodes
        count = len(self.Sv)
        for u in self.Sv:
            if count >= k:
                break
            stack = [u]
            cur = [nxt[base + u]]
            while stack:
                x = stack[-1]
                s = cur[-1]
                if s == base + x:
                    stack.pop()
                    cur.pop()
                    continue
                cur[-1] = nxt[s]
                steps += 1
                e = s >> 1
                y = eu[e] ^ ev[e] ^ x
                if inS[y]:
                    if inS[x]:
                        g.park_edge(e, j)
                    continue
                if inD[y]:
                    continue
                j.set(inD, y, True)
                j.set(par, y, x)
                j.set(pe, y, e)
                j.set(ch, y, [])
                if inS[x]:
                    roots.append(y)
                    j.set(eta, x, eta[x] + 1)
                else:
                    ch[x].append(y)
                count += 1
                if count >= k:
                    break
                stack.append(y)
                cur.append(nxt[base + y])
        self.ctr.n += steps
        j.set(self.st, 1, count)
        j.set(self.st, 0, self.scan_unary())

    def scan_unary(self) -> bool:
        """True iff every cut edge of S is a tree edge of D."""
        g, j = self.g, self.j
        inS, inD, par, pe = self.inS, self.inD, self.par, self.pe
        eu, ev = g.eu, g.ev
        nxt = g.adj.nxt
        base = g.adj.nodes
        steps = 0
        result = True
        for u in self.Sv:
            s = nxt[base + u]
            while s != base + u:
                s2 = nxt[s]
                steps += 1
                e = s >> 1
                y = eu[e] ^ ev[e] ^ u
                if inS[y]:
                    g.park_edge(e, j)
                elif not (inD[y] and pe[y] == e and par[y] == u):
                    result = False
                    break
                s = s2
            if not result:
                break
        self.ctr.n += steps
        return result

    def choose(self) -> tuple[int, str]:
        if self.st[0]:
            return self.pe[self.R[0][-1]], TREE
        g, j = self.g, self.j
        inS, inD, par, pe = self.inS, self.inD, self.par, self.pe
        eu, ev = g.eu, g.ev
        nxt = g.adj.nxt
        base = g.adj.nodes
        cap = 2 * self.k
        back = -1
        steps = 0
        for u in self.Sv:
            s = nxt[base + u]
            seen = 0
            while s != base + u and seen < cap:
                s2 = nxt[s]
                seen += 1
                e = s >> 1
                y = eu[e] ^ ev[e] ^ u
                if inS[y]:
                    g.park_edge(e, j)
                elif not inD[y]:
                    self.ctr.n += steps + seen
                    return e, EXTERNAL
                elif back < 0 and not (pe[y] == e and par[y] == u):
                    back = e
                s = s2
            steps += seen
        self.ctr.n += steps
        if back < 0:
            raise AssertionError("binary node without external or back edge")
        return back, BACK

    def promote(self) -> None:
        j = self.j
        r = j.pop(self.R[0])
        u = self.par[r]
        j.append(self.Se, self.pe[r])
        j.append(self.Sv, r)
        j.set(self.inS, r, True)
        j.set(self.eta, u, self.eta[u] - 1)
        kids = self.ch[r]
        j.set(self.eta, r, len(kids))
        roots = self.R[0]
        for c in kids:
            j.append(roots, c)
        j.set(self.st, 0, not (self.g.deg[r] > len(kids) + 1))
        self.ctr.n += 1 + len(kids)

    def extend(self, e: int) -> None:
        """S := S + e followed by a fresh certificate."""
        g, j = self.g, self.j
        y = g.eu[e] if not self.inS[g.eu[e]] else g.ev[e]
        j.append(self.Se, e)
        j.append(self.Sv, y)
        j.set(self.inS, y, True)
        if not self.inD[y]:
            j.set(self.inD, y, True)
        self.mdfs()

    def exclude(self, e: int) -> None:
        """Delete e (not in D) and refresh is_unary."""
        self.g.del_edge(e, self.j)
        self.j.set(self.st, 0, self.scan_unary())

    # -- pure recomputation for debug checks -------------------------------

    def snapshot(self) -> tuple:
        return (tuple(self.Sv), tuple(self.Se), tuple(self.R[0]),
                tuple((x, self.par[x], self.pe[x], tuple(self.ch[x])) for x in self.forest()),
                tuple(self.eta[u] for u in self.Sv), self.st[0], self.st[1])

    def fresh_snapshot(self) -> tuple:
        """What mdfs would build now, computed without side effects."""
        g, k = self.g, self.k
        inS = self.inS
        seen = set(self.Sv)
        par, pe, ch = {}, {}, {}
        roots = []
        eta = {u: 0 for u in self.Sv}
        count = len(self.Sv)
        done = count >= k
        for u in self.Sv:
            if done:
                break
            stack = [(u, iter(list(g.neighbors(u))))]
            while stack and not done:
                x, it = stack[-1]
                for e, y in it:
                    if y in seen:
                        continue
                    seen.add(y)
                    par[y], pe[y], ch[y] = x, e, []
                    if inS[x]:
                        roots.append(y)
                        eta[x] += 1
                    else:
                        ch[x].append(y)
                    count += 1
                    if count >= k:
                        done = True
                        break
                    stack.append((y, iter(list(g.neighbors(y)))))
                    break
                else:
                    stack.pop()
        order = []
        st = list(reversed(roots))
        while st:
            x = st.pop()
            order.append(x)
            st.extend(reversed(ch[x]))
        unary = True
        for u in self.Sv:
            for e, y in g.neighbors(u):
                if y in self.Sv:
                    continue
                if not (y in par and pe[y] == e and par[y] == u):
                    unary = False
        return (tuple(self.Sv), tuple(self.Se), tuple(roots),
                tuple((x, par[x], pe[x], tuple(ch[x])) for x in order),
                tuple(eta[u] for u in self.Sv), unary, count)

    # -- recursion -----------------------------------------------------------

    def _emit(self, edges) -> None:
        self.count += 1
        self.ctr.n += self.k
        if self.sink is not None:
            self.sink(tuple(edges))

    def _node(self, lefts: int, nbin: int, suppress: bool):
        """Yields child generators; returns the number of leaves below."""
        self.ctr.n += 1
        tally = self.tally
        if self.debug:
            assert self.snapshot() == self.fresh_snapshot(), "certificate drift"
        if len(self.Sv) == self.k:
            if tally is not None:
                tally.check("subtree_left_branches", lefts == self.k - 1)
            if not suppress:
                self._emit(self.Se[1:])
            return 1
        j = self.j
        if tally is not None:
            tally.node(self.source, "internal")
        if self.st[0]:
            mark = j.mark()
            self.promote()
            leaves = yield self._node(lefts + 1, nbin, suppress)
            j.rollback(mark)
            return leaves
        e, kind = self.choose()
        if tally is not None:
            tally.node(self.source, "binary")
        mark = j.mark()
        self.extend(e)
        early = self.delay and nbin % 2 == 0
        late = self.delay and not early
        if self.delay:
            dprime = self.d_edges()
            if early:
                self._emit(dprime)
        if tally is not None:
            nu = self.cyclomatic()
        left = yield self._node(lefts + 1, nbin + 1, self.delay)
        if tally is not None:
            tally.check("subtree_cyclomatic", left >= nu)
        j.rollback(mark)
        self.exclude(e)
        right = yield self._node(lefts, nbin + 1, suppress)
        j.rollback(mark)
        if late:
            self._emit(dprime)
        return left + right

    def cyclomatic(self) -> int:
        """Non-tree edges of G[V[D]] that are not internal to S.

        Each one yields a distinct k-subtree of G[V[D]] containing S, so the
        count bounds the leaves below this node.
        """
        g = self.g
        sv = set(self.Sv)
        verts = sv | set(self.forest())
        m = ms = 0
        for x in verts:
            for e in g.adj_edges(x) + g.parked_edges(x):
                y = g.other(e, x)
                if y in verts:
                    m += 1
                    if x in sv and y in sv:
                        ms += 1
        return (m - ms) // 2 - (len(verts) - len(sv))

    def start(self, v: int) -> bool:
        """Set S = <(., v)> and build D; False when |D| < k."""
        j = self.j
        self.source = v
        j.append(self.Sv, v)
        j.append(self.Se, -1)
        j.set(self.inS, v, True)
        j.set(self.inD, v, True)
        self.mdfs()
        return self.st[1] >= self.k

    def run(self) -> int:
        g, j = self.g, self.j
        top = j.mark()
        for v in range(g.n):
            if not g.alive[v]:
                continue
            mark = j.mark()
            if not self.start(v):
                comp = self.Sv + self.forest()
                j.rollback(mark)
                for u in comp:
                    g.del_vertex(u, j)
                continue
            leaves = drive(self._node(0, 0, False))
            if self.tally is not None:
                self.tally.finish_source(v, leaves)
            j.rollback(mark)
            g.del_vertex(v, j)
        j.rollback(top)
        return self.count


def list_k_subtrees(g: Graph, k: int, sink: Callable | None = None, *,
                    counter: OpCounter | None = None, delay: bool = False,
                    tally: Tally | None = None, debug: bool = False) -> int:
    """Emit every k-subtree once as a tuple of edge ids; returns the count."""
    return SubtreeLister(g, k, sink, counter, delay, tally, debug).run()
