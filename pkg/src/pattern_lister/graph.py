"""Mutable undirected graph with journaled edits.

Adjacency and parking lists are circular doubly linked lists living in a
shared arena. Every edit can be recorded in a :class:`Journal`; rolling the
journal back to a mark restores all touched structures exactly, including
the order of every list.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


class SelfLoop(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class EmptyInput(GraphError):
    pass


class EdgeNotLive(GraphError):
    pass


class NotDeleted(GraphError):
    pass


class VertexNotLive(GraphError):
    pass


class KOutOfRange(GraphError):
    pass


class Disconnected(GraphError):
    pass


class SameVertex(GraphError):
    pass


class OpCounter:
    """Elementary-operation counter shared by a listing run."""

    __slots__ = ("n",)

    def __init__(self) -> None:
        self.n = 0

    def tick(self, k: int = 1) -> None:
        self.n += k


class Journal:
    """Stack of undo records. Each record is ``(fn, args)``."""

    __slots__ = ("rec", "counter")

    def __init__(self, counter: OpCounter | None = None) -> None:
        self.rec: list = []
        self.counter = counter if counter is not None else OpCounter()

    def __len__(self) -> int:
        return len(self.rec)

    def mark(self) -> int:
        return len(self.rec)

    def push(self, fn, *args) -> None:
        self.rec.append((fn, args))

    def set(self, arr, i, value) -> None:
        """Journaled ``arr[i] = value``."""
        self.rec.append((arr.__setitem__, (i, arr[i])))
        arr[i] = value

    def append(self, lst: list, value) -> None:
        lst.append(value)
        self.rec.append((lst.pop, ()))

    def pop(self, lst: list):
        value = lst.pop()
        self.rec.append((lst.append, (value,)))
        return value

    def rollback(self, mark: int = 0) -> None:
        rec = self.rec
        undone = len(rec) - mark
        if undone < 0:
            raise ValueError("journal mark is ahead of the journal")
        while len(rec) > mark:
            fn, args = rec.pop()
            fn(*args)
        self.counter.n += undone


class Chains:
    """Arena of circular doubly linked lists.

    Nodes ``0..nodes-1`` may sit in at most one list at a time; list ``i``
    has sentinel ``nodes + i``. An unlinked node keeps its stale pointers,
    which is what lets a journaled unlink be undone in O(1).
    """

    __slots__ = ("nodes", "nxt", "prv")

    def __init__(self, nodes: int, lists: int) -> None:
        total = nodes + lists
        self.nodes = nodes
        self.nxt = list(range(total))
        self.prv = list(range(total))

    def head(self, lst: int) -> int:
        return self.nodes + lst

    def first(self, lst: int) -> int:
        """First node of ``lst``, or -1 when empty."""
        s = self.nodes + lst
        x = self.nxt[s]
        return -1 if x == s else x

    def last(self, lst: int) -> int:
        s = self.nodes + lst
        x = self.prv[s]
        return -1 if x == s else x

    def empty(self, lst: int) -> bool:
        s = self.nodes + lst
        return self.nxt[s] == s

    def items(self, lst: int) -> Iterator[int]:
        s = self.nodes + lst
        nxt = self.nxt
        x = nxt[s]
        while x != s:
            y = nxt[x]
            yield x
            x = y

    def to_list(self, lst: int) -> list[int]:
        return list(self.items(lst))

    def unlink(self, x: int, j: Journal | None = None) -> None:
        nxt, prv = self.nxt, self.prv
        p, q = prv[x], nxt[x]
        nxt[p] = q
        prv[q] = p
        if j is not None:
            j.rec.append((self.relink, (x,)))

    def relink(self, x: int) -> None:
        """Undo of :meth:`unlink`; valid only in stack order."""
        self.nxt[self.prv[x]] = x
        self.prv[self.nxt[x]] = x

    def link_tail(self, lst: int, x: int, j: Journal | None = None) -> None:
        nxt, prv = self.nxt, self.prv
        s = self.nodes + lst
        p = prv[s]
        if j is not None:
            j.rec.append((self._cut_restore, (x, prv[x], nxt[x])))
        prv[x] = p
        nxt[x] = s
        nxt[p] = x
        prv[s] = x

    def clear(self, lst: int, j: Journal | None = None) -> None:
        """Empty ``lst`` in O(1); members keep stale pointers."""
        self.cut_after(self.nodes + lst, lst, j)

    def cut_after(self, x: int, lst: int, j: Journal | None = None) -> None:
        """Drop every node after ``x`` (a member or the sentinel of ``lst``)."""
        nxt, prv = self.nxt, self.prv
        s = self.nodes + lst
        if j is not None:
            j.rec.append((self._uncut, (x, s, nxt[x], prv[s])))
        nxt[x] = s
        prv[s] = x

    def _uncut(self, x: int, s: int, old_next: int, old_last: int) -> None:
        self.nxt[x] = old_next
        self.prv[s] = old_last

    def _cut_restore(self, x: int, op: int, on: int) -> None:
        nxt, prv = self.nxt, self.prv
        p, q = prv[x], nxt[x]
        nxt[p] = q
        prv[q] = p
        prv[x] = op
        nxt[x] = on


LIVE, DELETED, PARKED = 0, 1, 2


class Graph:
    """Simple undirected graph over dense vertex ids.

    Edge ``e`` owns arena slots ``2e`` (in the list of ``eu[e]``) and
    ``2e+1`` (in the list of ``ev[e]``), both in the adjacency arena and in
    the parking arena.
    """

    def __init__(self, n: int, edges: Sequence[tuple[int, int]],
                 names: Sequence[str] | None = None) -> None:
        self.n = n
        self.names = list(names) if names is not None else [str(i) for i in range(n)]
        self.eu: list[int] = []
        self.ev: list[int] = []
        self.eid: dict[tuple[int, int], int] = {}
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop at {self.names[u]}")
            key = (u, v) if u < v else (v, u)
            if key in self.eid:
                raise ParallelEdge(f"parallel edge {self.names[u]} {self.names[v]}")
            self.eid[key] = len(self.eu)
            self.eu.append(u)
            self.ev.append(v)
        m = self.m_total = len(self.eu)
        self.adj = Chains(2 * m, n)
        self.park = Chains(2 * m, n)
        self.deg = [0] * n
        self.npark = [0] * n
        self.alive = [True] * n
        self.state = [LIVE] * m
        for e in range(m):
            u, v = self.eu[e], self.ev[e]
            self.adj.link_tail(u, 2 * e)
            self.adj.link_tail(v, 2 * e + 1)
            self.deg[u] += 1
            self.deg[v] += 1
        self.m = m
        self._index: dict[str, int] | None = None

    # -- queries ---------------------------------------------------------

    def other(self, e: int, v: int) -> int:
        return self.eu[e] ^ self.ev[e] ^ v

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.eu[e], self.ev[e]

    def edge_between(self, u: int, v: int) -> int:
        """Edge id joining u and v (live or not), or -1."""
        return self.eid.get((u, v) if u < v else (v, u), -1)

    def neighbors(self, v: int) -> Iterator[tuple[int, int]]:
        """Live ``(edge, neighbor)`` pairs of v in adjacency order."""
        eu, ev = self.eu, self.ev
        for s in self.adj.items(v):
            e = s >> 1
            yield e, eu[e] ^ ev[e] ^ v

    def adj_edges(self, v: int) -> list[int]:
        return [s >> 1 for s in self.adj.items(v)]

    def parked_edges(self, v: int) -> list[int]:
        return [s >> 1 for s in self.park.items(v)]

    def live_edges(self) -> list[int]:
        return [e for e in range(self.m_total) if self.state[e] == LIVE]

    def vertex(self, name: str) -> int:
        if self._index is None:
            self._index = {x: i for i, x in enumerate(self.names)}
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown vertex {name!r}") from None

    # -- edits -----------------------------------------------------------

    def del_edge(self, e: int, j: Journal | None = None) -> None:
        if self.state[e] != LIVE:
            raise EdgeNotLive(f"edge {e} is not live")
        self._cut(e)
        self.state[e] = DELETED
        self.m -= 1
        if j is not None:
            j.rec.append((self._restore_deleted, (e,)))

    def _cut(self, e: int) -> None:
        adj = self.adj
        adj.unlink(2 * e)
        adj.unlink(2 * e + 1)
        self.deg[self.eu[e]] -= 1
        self.deg[self.ev[e]] -= 1

    def _restore_deleted(self, e: int) -> None:
        adj = self.adj
        adj.relink(2 * e + 1)
        adj.relink(2 * e)
        self.deg[self.eu[e]] += 1
        self.deg[self.ev[e]] += 1
        self.state[e] = LIVE
        self.m += 1

    def undel_edge(self, e: int) -> None:
        if self.state[e] != DELETED:
            raise NotDeleted(f"edge {e} is not deleted")
        self._restore_deleted(e)

    def del_vertex(self, u: int, j: Journal | None = None) -> None:
        if not self.alive[u]:
            raise VertexNotLive(f"vertex {self.names[u]} is not live")
        if self.npark[u]:
            raise GraphError(f"vertex {self.names[u]} has parked edges")
        adj = self.adj
        s = adj.nodes + u
        nxt = adj.nxt
        x = nxt[s]
        while x != s:
            y = nxt[x]
            self.del_edge(x >> 1, j)
            x = y
        self.alive[u] = False
        if j is not None:
            j.rec.append((self.alive.__setitem__, (u, True)))

    def park_edge(self, e: int, j: Journal | None = None) -> None:
        """Hide a live edge from adjacency and append it to both parking lists."""
        if self.state[e] != LIVE:
            raise EdgeNotLive(f"edge {e} is not live")
        u, v = self.eu[e], self.ev[e]
        adj, park = self.adj, self.park
        adj.unlink(2 * e, j)
        adj.unlink(2 * e + 1, j)
        park.link_tail(u, 2 * e, j)
        park.link_tail(v, 2 * e + 1, j)
        self._shift(e, -1, PARKED)
        if j is not None:
            j.rec.append((self._shift, (e, 1, LIVE)))

    def _shift(self, e: int, d: int, state: int) -> None:
        # move one unit between live degree and parked count at both ends
        u, v = self.eu[e], self.ev[e]
        self.deg[u] += d
        self.deg[v] += d
        self.npark[u] -= d
        self.npark[v] -= d
        self.state[e] = state

    def unpark_edge(self, e: int, j: Journal | None = None) -> None:
        """Return a parked edge to the tail of both adjacency lists.

        Works out of stack order: positions are not remembered, the edge is
        appended instead. The journal record undoes it exactly.
        """
        if self.state[e] != PARKED:
            raise NotDeleted(f"edge {e} is not parked")
        u, v = self.eu[e], self.ev[e]
        adj, park = self.adj, self.park
        park.unlink(2 * e, j)
        park.unlink(2 * e + 1, j)
        adj.link_tail(u, 2 * e, j)
        adj.link_tail(v, 2 * e + 1, j)
        self._shift(e, 1, LIVE)
        if j is not None:
            j.rec.append((self._shift, (e, -1, PARKED)))

    def unpark_all(self, u: int, j: Journal | None = None) -> int:
        """Unpark every edge in P[u]; returns how many were moved."""
        count = 0
        for s in self.park.to_list(u):
            self.unpark_edge(s >> 1, j)
            count += 1
        return count

    # -- snapshots -------------------------------------------------------

    def serialize(self) -> bytes:
        parts = (self.n, self.m, self.adj.nxt, self.adj.prv, self.park.nxt,
                 self.park.prv, self.deg, self.npark, self.alive, self.state)
        return repr(parts).encode()

    def check(self) -> None:
        """Debug consistency check of degree counters and list membership."""
        for v in range(self.n):
            live = [s >> 1 for s in self.adj.items(v)]
            assert len(live) == self.deg[v], (v, live, self.deg[v])
            assert all(self.state[e] == LIVE for e in live)
            parked = [s >> 1 for s in self.park.items(v)]
            assert len(parked) == self.npark[v]
            assert all(self.state[e] == PARKED for e in parked)

    def copy(self) -> "Graph":
        """Fresh graph over the edges not deleted (ids renumbered)."""
        edges = [(self.eu[e], self.ev[e]) for e in range(self.m_total)
                 if self.state[e] != DELETED]
        return Graph(self.n, edges, self.names)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str) -> list[tuple[str, str]]:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise GraphError(f"line {lineno}: expected two vertex names, got {raw!r}")
        pairs.append((toks[0], toks[1]))
    return pairs


def load_graph(edge_list: Iterable[tuple[str, str]]) -> Graph:
    """Build a graph from name pairs; ids follow first appearance."""
    index: dict[str, int] = {}
    names: list[str] = []
    edges = []
    for a, b in edge_list:
        for x in (a, b):
            if x not in index:
                index[x] = len(names)
                names.append(x)
        edges.append((index[a], index[b]))
    if not edges:
        raise EmptyInput("edge list is empty")
    return Graph(len(names), edges, names)


def read_graph(path: str) -> Graph:
    with open(path) as fh:
        return load_graph(parse_edge_list(fh.read()))


def graph_from_edges(n: int, edges: Sequence[tuple[int, int]]) -> Graph:
    return Graph(n, edges)
