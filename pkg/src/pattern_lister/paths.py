"""st-path and cycle listing by binary partition on the edges leaving u.

The certificate is a DFS tree of the bead string B_{u,t} rooted at the
current endpoint u, built so that t sits on its leftmost path. Each vertex
keeps its lowpoint, a rank ``gam`` that grows from ancestor to descendant,
the back edges arriving from below (``lb``, in postorder of the lower end)
and the back edges leaving upwards (``ab``, in preorder of the upper end).
Every write goes through the journal, so a branch is undone by rollback.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable

from .blocktree import biconnected_components
from .graph import (DELETED, Chains, Disconnected, Graph, Journal, OpCounter,
                    SameVertex)
from .instrument import Tally
from .subtrees import drive


@dataclass
class Spine:
    tp: int                      # first articulation point below u on the path
    keep: int                    # its path child, or -1 when tp is t
    toward: dict[int, int]       # vertex -> its block on the way to tp
    pa: list[int]                # block -> its articulation towards tp
    bverts: list[list[int]]
    bedges: list[list[int]]
    lastkeep: int                # last back edge of lb(tp) from below keep


class PathLister:
    def __init__(self, g: Graph, s: int, t: int, sink: Callable | None = None,
                 counter: OpCounter | None = None, tally: Tally | None = None,
                 debug: bool = False) -> None:
        if s == t:
            raise SameVertex("s and t coincide")
        n, m = g.n, g.m_total
        self.g = g
        self.s, self.t = s, t
        self.sink = sink
        self.ctr = counter if counter is not None else OpCounter()
        self.j = Journal(self.ctr)
        self.tally = tally
        self.debug = debug
        self.par = [-1] * n
        self.pe = [-1] * n
        self.gam = [0] * n
        self.low = [0] * n
        self.onp = [False] * n
        self.kids = Chains(n, n)
        self.lb = Chains(m, n)
        self.ab = Chains(m, n)
        self.ba = [-1] * m       # upper end of a back edge
        self.bd = [-1] * m       # lower end
        self.stamp = [0] * n
        self.clock = 0
        self.pv: list[int] = [s]
        self.pedges: list[int] = []
        self.count = 0
        self.touched: list[set] = []

    # -- construction ----------------------------------------------------------

    def _tick(self) -> int:
        self.clock += 1
        return self.clock

    def _find_path(self, root: int, target: int, nbrs) -> list[tuple[int, int]]:
        """Any root-target path as (vertex, edge from previous) pairs."""
        prev = {root: (-1, -1)}
        queue = deque([root])
        steps = 0
        while queue:
            x = queue.popleft()
            if x == target:
                break
            for e, y in nbrs(x):
                steps += 1
                if y not in prev:
                    prev[y] = (x, e)
                    queue.append(y)
        self.ctr.n += steps
        if target not in prev:
            raise Disconnected("no path between the endpoints")
        out = []
        x = target
        while x != -1:
            p, e = prev[x]
            out.append((x, e))
            x = p
        out.reverse()
        return out

    def _build(self, root: int, target: int, nbrs, keep: int = -1, lastkeep: int = -1) -> None:
        """DFS certificate of the region reachable through ``nbrs``.

        The root-target path is explored first. ``keep`` is the child of
        ``target`` whose subtree is reused unchanged, and ``lastkeep`` the
        last back edge of lb(target) that comes from that subtree.
        """
        j = self.j
        par, pe, gam, low, onp = self.par, self.pe, self.gam, self.low, self.onp
        kids, lb, ab = self.kids, self.lb, self.ab
        path = self._find_path(root, target, nbrs)
        last = len(path) - 1
        step = {path[i][0]: path[i + 1] for i in range(last)}
        depth = {x: i for i, (x, _) in enumerate(path)}
        base = gam[target] if keep >= 0 else last
        seen = self._tick()
        vis, onstack = self.vis, self.onstack
        pre: list[int] = []
        post: list[int] = []
        backs_to: dict[int, list] = {}
        backs_from: dict[int, list] = {}
        steps = 0

        def enter(x, p, e, gx):
            vis[x] = seen
            onstack[x] = True
            j.set(par, x, p)
            j.set(pe, x, e)
            j.set(gam, x, gx)
            j.set(onp, x, x in depth)
            pre.append(x)

        def frame(x):
            nxt = step.get(x)
            if nxt is not None:
                yield nxt[1], nxt[0]
            yield from nbrs(x)

        enter(root, -1, -1, base - last)
        stack = [(root, frame(root))]
        while stack:
            x, it = stack[-1]
            for e, y in it:
                steps += 1
                if e == pe[x]:
                    continue
                if vis[y] != seen:
                    gy = base - last + depth[y] if y in depth else gam[x] + 1
                    enter(y, x, e, gy)
                    stack.append((y, frame(y)))
                    break
                if onstack[y] and e != step.get(y, (-1, -1))[1]:
                    backs_to.setdefault(y, []).append((x, e))
                    backs_from.setdefault(x, []).append((y, e))
            else:
                stack.pop()
                onstack[x] = False
                post.append(x)
        self.ctr.n += steps
        for x in post:
            lo = gam[x]
            for a, _ in backs_from.get(x, ()):
                if gam[a] < lo:
                    lo = gam[a]
            j.set(low, x, lo)
        if keep >= 0 and low[keep] < low[target]:
            j.set(low, target, low[keep])
        for x in post:
            p = par[x]
            if p >= 0 and low[x] < low[p]:
                j.set(low, p, low[x])
        # subtrees hanging off an articulation point leave the bead string
        alive = {root}
        for x in pre[1:]:
            p = par[x]
            if p in alive and (onp[x] or low[x] < gam[p]):
                alive.add(x)
        for x in pre:
            kids.clear(x, j)
            ab.clear(x, j)
            if x == target and lastkeep >= 0:
                lb.cut_after(lastkeep, x, j)
            else:
                lb.clear(x, j)
        if keep >= 0:
            kids.link_tail(target, keep, j)
        for x in pre[1:]:
            if x in alive:
                kids.link_tail(par[x], x, j)
        for a in pre:
            if a in alive:
                for d, e in backs_to.get(a, ()):
                    if d in alive:
                        j.set(self.ba, e, a)
                        j.set(self.bd, e, d)
                        ab.link_tail(d, e, j)
        for d in post:
            if d in alive:
                for a, e in backs_from.get(d, ()):
                    lb.link_tail(a, e, j)
        self.ctr.n += 4 * len(pre)

    # -- pruning --------------------------------------------------------------

    def _subtree(self, w: int) -> list[int]:
        out = [w]
        kids = self.kids
        i = 0
        while i < len(out):
            out.extend(kids.items(out[i]))
            i += 1
        return out

    def prune(self, w: int) -> None:
        """Detach the subtree of w, which hangs off its parent by an articulation."""
        j = self.j
        p = self.par[w]
        sub = self._subtree(w)
        for x in sub:
            for e in self.ab.to_list(x):
                if self.ba[e] == p:
                    self.lb.unlink(e, j)
        self.kids.unlink(w, j)
        self.ctr.n += len(sub)

    # -- operations -------------------------------------------------------------

    def choose(self, u: int) -> tuple[int, bool]:
        e = self.lb.last(u)
        if e >= 0:
            return e, True
        v = self.kids.first(u)
        return self.pe[v], False

    def right_update(self, e: int) -> None:
        j = self.j
        u, z = self.ba[e], self.bd[e]
        self.lb.unlink(e, j)
        self.ab.unlink(e, j)
        self.g.del_edge(e, j)
        gam, low, par, onp = self.gam, self.low, self.par, self.onp
        kids, ab, ba = self.kids, self.ab, self.ba
        touched = self.touched[-1] if self.touched else None
        w = z
        steps = 0
        while w != u:
            steps += 1
            lo = gam[w]
            f = ab.first(w)
            if f >= 0 and gam[ba[f]] < lo:
                lo = gam[ba[f]]
            for c in kids.items(w):
                steps += 1
                if low[c] < lo:
                    lo = low[c]
            if lo == low[w]:
                break
            j.set(low, w, lo)
            p = par[w]
            if touched is not None:
                if self.tally is not None:
                    self.tally.check("path_walk_edge_once", w not in touched, w)
                touched.add(w)
            if not onp[w] and lo >= gam[p]:
                self.prune(w)
            w = p
        self.ctr.n += steps

    def head_target(self, u: int) -> tuple[int, int]:
        """First articulation point below u on the path, and its path child."""
        kids, low, gam = self.kids, self.low, self.gam
        x = kids.first(u)
        steps = 1
        while x != self.t:
            c = kids.first(x)
            steps += 1
            if low[c] >= gam[x]:
                self.ctr.n += steps
                return x, c
            x = c
        self.ctr.n += steps
        return x, -1

    def spine(self, u: int) -> Spine:
        """Block structure of the head minus u, shared by a spine's left children."""
        tp, keep = self.head_target(u)
        kids, ab, ba, lb, bd = self.kids, self.ab, self.ba, self.lb, self.bd
        c = kids.first(u)
        region = []
        stack = [c]
        while stack:
            x = stack.pop()
            region.append(x)
            for y in kids.items(x):
                if y != keep:
                    stack.append(y)
        mark = self._tick()
        stamp = self.stamp
        for x in region:
            stamp[x] = mark
        idx = {x: i for i, x in enumerate(region)}
        ids: list[int] = []
        pairs = []
        for x in region:
            if x != c:
                ids.append(self.pe[x])
                pairs.append((idx[x], idx[self.par[x]]))
            for e in ab.items(x):
                if stamp[ba[e]] == mark:
                    ids.append(e)
                    pairs.append((idx[x], idx[ba[e]]))
        bt = biconnected_components(Graph(len(region), pairs))
        nb = len(bt.components)
        bverts = [[region[i] for i in vs] for vs in bt.comp_vertices]
        bedges = [[ids[e] for e in comp] for comp in bt.components]
        toward: dict[int, int] = {}
        pa = [-1] * nb
        done = [False] * nb
        queue = deque([idx[tp]])
        while queue:
            a = queue.popleft()
            for b in bt.vertex_comps.get(a, ()):
                if done[b]:
                    continue
                done[b] = True
                pa[b] = region[a]
                for y in bt.comp_vertices[b]:
                    if y != a and region[y] not in toward:
                        toward[region[y]] = b
                        if y in bt.cut_vertices:
                            queue.append(y)
        lastkeep = -1
        if keep >= 0:
            e = lb.last(tp)
            while e >= 0 and stamp[bd[e]] == mark:
                e = lb.prv[e]
                if e >= lb.nodes:
                    e = -1
            lastkeep = e
        self.ctr.n += 2 * len(region) + 2 * len(ids)
        return Spine(tp, keep, toward, pa, bverts, bedges, lastkeep)

    def left_update(self, u: int, e: int, back: bool, sp: Spine | None) -> int:
        """Move the root along e; returns the new root."""
        j = self.j
        j.set(self.onp, u, False)
        if not back:
            v = self.kids.first(u)
            self.ctr.n += 1
            return v
        z = self.bd[e]
        eu, ev = self.g.eu, self.g.ev
        local: dict[int, list] = {sp.tp: []}
        x = z
        while x != sp.tp:
            b = sp.toward[x]
            for f in sp.bedges[b]:
                p, q = eu[f], ev[f]
                local.setdefault(p, []).append((f, q))
                local.setdefault(q, []).append((f, p))
            x = sp.pa[b]
        self.ctr.n += len(local)
        self.kids.unlink(self.kids.first(u), j)
        self._build(z, sp.tp, local.__getitem__, sp.keep, sp.lastkeep)
        return z

    # -- head statistics --------------------------------------------------------

    def head_stats(self, u: int) -> tuple[int, int]:
        """(|V_X|, |E_X|) of the compacted head at root u."""
        tp, keep = self.head_target(u)
        verts = [u]
        stack = [self.kids.first(u)]
        while stack:
            x = stack.pop()
            verts.append(x)
            if x == tp:
                stack.extend(c for c in self.kids.items(x) if c != keep)
            else:
                stack.extend(self.kids.items(x))
        inside = set(verts)
        deg = dict.fromkeys(verts, 0)
        edges = 0
        for x in verts:
            if x != u:
                deg[x] += 1
                deg[self.par[x]] += 1
                edges += 1
            for e in self.ab.to_list(x):
                if self.ba[e] in inside:
                    deg[x] += 1
                    deg[self.ba[e]] += 1
                    edges += 1
        if edges == len(verts):
            return 2, (1 if edges == 1 else 2)
        if len(verts) == 2:
            return 2, edges
        leaves = {x for x in verts if self.kids.empty(x)}
        gone = sum(1 for x in verts if deg[x] == 2 and x not in (u, tp) and x not in leaves)
        return len(verts) - gone, edges - gone

    # -- recursion ---------------------------------------------------------------

    def _emit(self) -> None:
        self.count += 1
        self.ctr.n += len(self.pedges)
        if self.sink is not None:
            self.sink(tuple(self.pv), tuple(self.pedges))

    def _node(self, u: int, lefts: int, top: bool, sp: Spine | None = None):
        self.ctr.n += 1
        tally = self.tally
        if u == self.t:
            if tally is not None:
                tally.check("path_left_branches", lefts == len(self.pedges))
            self._emit()
            return 1
        if self.debug:
            self.validate(u)
        if top and tally is not None:
            vx, ex = self.head_stats(u)
            if vx >= 3:
                tally.check("path_head_density", 10 * ex >= 11 * vx, (vx, ex))
            self.touched.append(set())
        e, back = self.choose(u)
        j = self.j
        leaves = 0
        if back:
            if tally is not None:
                tally.node(self.s, "binary")
            if sp is None:
                sp = self.spine(u)
            mark = j.mark()
            self.right_update(e)
            leaves += yield self._node(u, lefts, False, sp)
            j.rollback(mark)
        mark = j.mark()
        v = self.left_update(u, e, back, sp)
        self.pv.append(v)
        self.pedges.append(e)
        leaves += yield self._node(v, lefts + 1, True)
        self.pv.pop()
        self.pedges.pop()
        j.rollback(mark)
        if top and tally is not None:
            self.touched.pop()
            if ex >= 2:
                tally.check("path_spine_leaves", leaves >= ex - vx + 1, (leaves, vx, ex))
        return leaves

    def validate(self, u: int) -> None:
        """Debug check against a certificate rebuilt from scratch."""
        g = self.g
        verts = self._subtree(u)
        inside = set(verts)
        for x in verts:
            if x != u:
                p = self.par[x]
                assert self.gam[p] < self.gam[x]
                assert g.state[self.pe[x]] != DELETED
            lo = self.gam[x]
            for e in self.ab.to_list(x):
                assert self.bd[e] == x and self.ba[e] in inside
                lo = min(lo, self.gam[self.ba[e]])
            for c in self.kids.items(x):
                lo = min(lo, self.low[c])
            assert lo == self.low[x], (x, lo, self.low[x])
            if x != u and not self.onp[x]:
                assert self.low[x] < self.gam[self.par[x]], x
        assert self.t in inside

    def run(self) -> int:
        g = self.g
        if not (g.alive[self.s] and g.alive[self.t]):
            raise Disconnected("endpoint is not live")
        self.vis = [0] * g.n
        self.onstack = [False] * g.n
        j = self.j
        top = j.mark()
        self._build(self.s, self.t, g.neighbors)
        self.touched = []
        drive(self._node(self.s, 0, True))
        if self.tally is not None:
            c = self.tally.nodes[self.s]
            self.tally.check("path_binary_is_paths_minus_one",
                             c["binary"] == self.count - 1, (c["binary"], self.count))
            c["binary"] = 0
        j.rollback(top)
        return self.count


def list_st_paths(g: Graph, s: int, t: int, sink: Callable | None = None, *,
                  counter: OpCounter | None = None, tally: Tally | None = None,
                  debug: bool = False) -> int:
    """Emit (vertices, edges) of every simple s-t path; returns the count."""
    return PathLister(g, s, t, sink, counter, tally, debug).run()


def _first_back_edge(h: Graph) -> int:
    """First non-tree edge met by an iterative DFS from vertex 0."""
    seen = [False] * h.n
    root = next(v for v in range(h.n) if h.deg[v])
    seen[root] = True
    stack = [(root, -1, h.neighbors(root))]
    while stack:
        x, pe, it = stack[-1]
        for e, y in it:
            if e == pe:
                continue
            if seen[y]:
                return e
            seen[y] = True
            stack.append((y, e, h.neighbors(y)))
            break
        else:
            stack.pop()
    raise AssertionError("component without a cycle")


def list_cycles(g: Graph, sink: Callable | None = None, *,
                counter: OpCounter | None = None, tally: Tally | None = None,
                debug: bool = False, schedule: list | None = None) -> int:
    """Emit (vertices, edges) of every simple cycle once; returns the count.

    Biconnected components are processed from a FIFO worklist. For each one a
    back edge b = (s, t) is fixed, the s-t paths of the component minus b are
    listed, and the component minus b is split again.
    """
    ctr = counter if counter is not None else OpCounter()
    bt = biconnected_components(g)
    ctr.n += g.n + g.m
    work = deque(c for c in bt.components if len(c) >= 3)
    total = 0
    while work:
        comp = work.popleft()
        verts: dict[int, int] = {}
        for e in comp:
            for x in (g.eu[e], g.ev[e]):
                if x not in verts:
                    verts[x] = len(verts)
        back = list(verts)
        h = Graph(len(verts), [(verts[g.eu[e]], verts[g.ev[e]]) for e in comp])
        ctr.n += len(comp)
        b = _first_back_edge(h)
        s, t = h.eu[b], h.ev[b]
        h.del_edge(b)

        def emit(vs, es, b=b, comp=comp, back=back):
            if sink is not None:
                sink(tuple(back[x] for x in vs), tuple(comp[e] for e in es) + (comp[b],))

        got = PathLister(h, s, t, emit, ctr, tally, debug).run()
        total += got
        if schedule is not None:
            schedule.append((tuple(comp), comp[b], got))
        sub = biconnected_components(h)
        ctr.n += len(comp)
        for c in sub.components:
            if len(c) >= 3:
                work.append([comp[e] for e in c])
    return total
