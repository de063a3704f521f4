"""Graph families and the bundled corpus of small connected graphs."""
from __future__ import annotations

import os
import random
from importlib import resources
from typing import Iterator

from .graph import Graph, GraphError

DEFAULT_SEED = 20240601
CORPUS_FILE = "connected_le8.g6"


def default_seed() -> int:
    env = os.environ.get("PATTERN_LISTER_SEED")
    if env is None or env == "":
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise GraphError(f"PATTERN_LISTER_SEED must be an integer, got {env!r}") from None


def diamond(k: int) -> Graph:
    """a, b, c plus v_i on a-b and u_i on b-c, and the chord a-c. n = 2k + 3."""
    if k < 1:
        raise GraphError("diamond needs k >= 1")
    names = ["a", "b", "c"] + [f"v{i}" for i in range(1, k + 1)] + [f"u{i}" for i in range(1, k + 1)]
    edges = [(0, 2)]
    for i in range(k):
        v, u = 3 + i, 3 + k + i
        edges += [(0, v), (v, 1), (1, u), (u, 2)]
    return Graph(2 * k + 3, edges, names)


def complete(n: int) -> Graph:
    if n < 2:
        raise GraphError("complete graph needs n >= 2")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def random_connected(n: int, m: int, seed: int | None = None) -> Graph:
    """Uniform spanning-tree scaffold on a shuffled order, then m - n + 1 extra edges."""
    if n < 2:
        raise GraphError("random graph needs n >= 2")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise GraphError(f"m={m} outside [{n - 1}, {n * (n - 1) // 2}]")
    rnd = random.Random(default_seed() if seed is None else seed)
    order = list(range(n))
    rnd.shuffle(order)
    edges = set()
    for i in range(1, n):
        a, b = order[i], order[rnd.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    if m - len(edges) > (n * (n - 1) // 2 - len(edges)) // 2:
        rest = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
        edges.update(rnd.sample(rest, m - len(edges)))
    else:
        while len(edges) < m:
            a, b = rnd.sample(range(n), 2)
            edges.add((min(a, b), max(a, b)))
    return Graph(n, sorted(edges))


def to_edge_list(g: Graph) -> str:
    names = g.names
    return "".join(f"{names[g.eu[e]]} {names[g.ev[e]]}\n" for e in range(g.m_total)
                   if g.state[e] != 1)


def _decode_graph6(line: bytes) -> tuple[int, list[tuple[int, int]]]:
    data = [c - 63 for c in line.strip()]
    if data[0] == 63:
        raise GraphError("graph6 input with n > 62 is not supported")
    n = data[0]
    bits = []
    for c in data[1:]:
        bits.extend((c >> s) & 1 for s in range(5, -1, -1))
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return n, edges


def small_connected(max_n: int = 8, min_edges: int = 1) -> Iterator[Graph]:
    """Every connected graph on 1..max_n vertices up to isomorphism (max_n <= 8)."""
    if max_n > 8:
        raise GraphError("the bundled corpus stops at 8 vertices")
    text = resources.files("pattern_lister").joinpath("data", CORPUS_FILE).read_bytes()
    for line in text.split():
        n, edges = _decode_graph6(line)
        if n <= max_n and len(edges) >= min_edges:
            yield Graph(n, edges)
