"""Biconnected components, articulation points and bead strings."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Disconnected, Graph, SameVertex


@dataclass
class BlockTree:
    components: list[list[int]]          # edge ids per block
    comp_vertices: list[list[int]]
    cut_vertices: set[int]
    vertex_comps: dict[int, list[int]] = field(default_factory=dict)

    def neighbors(self, c: int) -> list[int]:
        """Blocks sharing an articulation point with block c."""
        out = []
        for v in self.comp_vertices[c]:
            if v in self.cut_vertices:
                out.extend(d for d in self.vertex_comps[v] if d != c)
        return out


@dataclass
class BeadString:
    beads: list[int]
    articulations: list[int]


def biconnected_components(g: Graph) -> BlockTree:
    """Edge-stack lowpoint DFS over the live edges of g.

    Blocks are numbered in the order the DFS completes them.
    """
    n = g.n
    pre = [-1] * n
    low = [0] * n
    comps: list[list[int]] = []
    cuts: set[int] = set()
    clock = 0
    eu, ev = g.eu, g.ev
    for root in range(n):
        if pre[root] != -1 or not g.alive[root]:
            continue
        pre[root] = low[root] = clock
        clock += 1
        root_children = 0
        estack: list[int] = []
        # frames: (vertex, parent edge, iterator over live adjacency)
        stack = [(root, -1, iter(g.adj_edges(root)))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for e in it:
                if e == pe:
                    continue
                w = eu[e] ^ ev[e] ^ v
                if pre[w] == -1:
                    pre[w] = low[w] = clock
                    clock += 1
                    estack.append(e)
                    if v == root:
                        root_children += 1
                    stack.append((w, e, iter(g.adj_edges(w))))
                    advanced = True
                    break
                if pre[w] < pre[v]:
                    estack.append(e)
                    if pre[w] < low[v]:
                        low[v] = pre[w]
            if advanced:
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= pre[p]:
                if p != root:
                    cuts.add(p)
                comp = []
                while True:
                    f = estack.pop()
                    comp.append(f)
                    if f == pe:
                        break
                comp.reverse()
                comps.append(comp)
        if root_children > 1:
            cuts.add(root)
    comp_vertices = []
    vertex_comps: dict[int, list[int]] = {}
    for c, comp in enumerate(comps):
        seen: list[int] = []
        mark = set()
        for e in comp:
            for x in (eu[e], ev[e]):
                if x not in mark:
                    mark.add(x)
                    seen.append(x)
                    vertex_comps.setdefault(x, []).append(c)
        comp_vertices.append(seen)
    return BlockTree(comps, comp_vertices, cuts, vertex_comps)


def bead_string(bt: BlockTree, s: int, t: int) -> BeadString:
    """Blocks on the block-tree path from s to t, with the joints between them."""
    if s == t:
        raise SameVertex("s and t coincide")
    if s not in bt.vertex_comps or t not in bt.vertex_comps:
        raise Disconnected("s or t has no incident edge")
    # search the block-cut tree: nodes ('v', x) for cut vertices, ('b', c) for blocks
    def start_nodes(x):
        if x in bt.cut_vertices:
            return [("v", x)]
        return [("b", bt.vertex_comps[x][0])]

    src = start_nodes(s)[0]
    goal = start_nodes(t)[0]
    prev = {src: None}
    queue = deque([src])
    while queue:
        node = queue.popleft()
        if node == goal:
            break
        kind, x = node
        if kind == "v":
            nxt = [("b", c) for c in bt.vertex_comps[x]]
        else:
            nxt = [("v", y) for y in bt.comp_vertices[x] if y in bt.cut_vertices]
        for y in nxt:
            if y not in prev:
                prev[y] = node
                queue.append(y)
    if goal not in prev:
        raise Disconnected("s and t lie in different components")
    path = []
    node = goal
    while node is not None:
        path.append(node)
        node = prev[node]
    path.reverse()
    beads = [x for kind, x in path if kind == "b"]
    joints = [x for kind, x in path if kind == "v" and x not in (s, t)]
    return BeadString(beads, joints)
