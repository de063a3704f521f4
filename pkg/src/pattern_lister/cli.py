"""Command-line front end: list, gen and bench."""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable

from . import corpus
from .graph import Graph, GraphError, OpCounter, read_graph
from .instrument import Tally
from .oracle import (TooLarge, baseline_subtrees, brute_cycles, brute_paths,
                     brute_subgraphs, brute_subtrees, canon_cycle)
from .paths import list_cycles, list_st_paths
from .subgraphs import list_k_subgraphs
from .subtrees import list_k_subtrees

KINDS = ("subtrees", "subgraphs", "paths", "cycles")


class UsageError(Exception):
    pass


# -- pattern plumbing -----------------------------------------------------------

def run_lister(g: Graph, kind: str, sink: Callable, *, k: int | None = None,
               s: int | None = None, t: int | None = None,
               counter: OpCounter | None = None, tally: Tally | None = None,
               delay: bool = False) -> int:
    """Run one lister; ``sink`` gets (id key, edge ids) for every pattern."""
    eu, ev = g.eu, g.ev
    if kind == "subtrees":
        def emit(es):
            sink(tuple(sorted((min(eu[e], ev[e]), max(eu[e], ev[e])) for e in es)), es)
        return list_k_subtrees(g, k, emit, counter=counter, delay=delay, tally=tally)
    if kind == "subgraphs":
        return list_k_subgraphs(g, k, lambda vs, es: sink(tuple(sorted(vs)), es),
                                counter=counter, tally=tally)
    if kind == "paths":
        return list_st_paths(g, s, t, lambda vs, es: sink(vs, es), counter=counter, tally=tally)
    if kind == "cycles":
        return list_cycles(g, lambda vs, es: sink(canon_cycle(vs), es),
                           counter=counter, tally=tally)
    raise UsageError(f"unknown pattern {kind!r}")


def oracle_set(g: Graph, kind: str, k: int | None = None, s: int | None = None,
               t: int | None = None) -> set:
    """Brute-force reference in the same id keys that ``run_lister`` produces."""
    if kind == "subtrees":
        return brute_subtrees(g, k)
    if kind == "subgraphs":
        return brute_subgraphs(g, k)
    if kind == "paths":
        return brute_paths(g, s, t)
    return brute_cycles(g)


def render(g: Graph, kind: str, key: tuple, es: tuple) -> list:
    """Pattern as vertex names, canonical per kind."""
    names = g.names
    if kind == "cycles":
        return list(canon_cycle([names[x] for x in key]))
    if kind == "paths":
        return [names[x] for x in key]
    if kind == "subgraphs":
        return sorted(names[x] for x in key)
    return sorted(sorted((names[g.eu[e]], names[g.ev[e]])) for e in es)


def render_line(g: Graph, kind: str, key: tuple, es: tuple) -> str:
    pat = render(g, kind, key, es)
    if kind == "subtrees":
        return " ".join(f"{a}-{b}" for a, b in pat)
    if kind == "subgraphs":
        induced = sorted(sorted((g.names[g.eu[e]], g.names[g.ev[e]])) for e in es)
        return " ".join(pat) + " | " + " ".join(f"{a}-{b}" for a, b in induced)
    return " ".join(pat)


def render_json(g: Graph, kind: str, key: tuple, es: tuple):
    pat = render(g, kind, key, es)
    if kind == "subgraphs":
        induced = sorted(sorted((g.names[g.eu[e]], g.names[g.ev[e]])) for e in es)
        return {"vertices": pat, "edges": induced}
    return pat


# -- list -----------------------------------------------------------------------

def cmd_list(args, out, err) -> int:
    g = read_graph(args.file)
    kind = args.pattern
    if kind in ("subtrees", "subgraphs") and args.k is None:
        raise UsageError(f"list {kind} needs -k")
    if kind == "paths" and (args.s is None or args.t is None):
        raise UsageError("list paths needs -s and -t")
    if args.delay_mode and kind != "subtrees":
        raise UsageError("--delay-mode applies to subtrees only")
    s = g.vertex(args.s) if args.s is not None else None
    t = g.vertex(args.t) if args.t is not None else None
    counter = OpCounter()
    tally = Tally(k=args.k or 0) if args.instrument else None
    keys = set() if args.check_oracle else None
    total = [0, 0]
    first = [True]
    if args.format == "json" and not args.count_only:
        out.write("[")

    def sink(key, es):
        total[0] += 1
        total[1] += len(es)
        if keys is not None:
            keys.add(key)
        if args.count_only:
            return
        if args.format == "json":
            out.write(("\n" if first[0] else ",\n") + json.dumps(render_json(g, kind, key, es)))
            first[0] = False
        else:
            out.write(render_line(g, kind, key, es) + "\n")

    start = time.perf_counter()
    count = run_lister(g, kind, sink, k=args.k, s=s, t=t, counter=counter,
                       tally=tally, delay=args.delay_mode)
    wall = time.perf_counter() - start
    if args.count_only:
        out.write(f"{count}\n")
    elif args.format == "json":
        out.write("\n]\n")
    status = 0
    if keys is not None:
        try:
            ref = oracle_set(g, kind, args.k, s, t)
        except TooLarge as exc:
            raise UsageError(str(exc)) from None
        if ref == keys and len(keys) == count:
            out.write("oracle: MATCH\n")
        else:
            out.write(f"oracle: MISMATCH missing={len(ref - keys)} extra={len(keys - ref)} "
                      f"duplicates={count - len(keys)}\n")
            status = 1
    report = {
        "pattern": kind, "n": g.n, "m": g.m, "k": args.k, "s": args.s, "t": args.t,
        "count": count, "output_size": total[1], "ops": counter.n,
        "wall_time": round(wall, 6),
    }
    if tally is not None:
        report["invariants"] = tally.summary()
        if not tally.ok:
            status = status or 3
    text = json.dumps(report)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text + "\n")
    else:
        err.write(text + "\n")
    return status


# -- gen ------------------------------------------------------------------------

def make_family(family: str, size: int, m: int | None = None, seed: int | None = None) -> Graph:
    if family == "diamond":
        return corpus.diamond(size)
    if family == "complete":
        return corpus.complete(size)
    if family == "cycle":
        return corpus.cycle(size)
    if family == "random":
        return corpus.random_connected(size, m if m is not None else size + size // 2, seed)
    raise UsageError(f"unknown family {family!r}")


def cmd_gen(args, out, err) -> int:
    if args.family == "diamond":
        g = corpus.diamond(args.k)
    elif args.family == "random":
        g = corpus.random_connected(args.n, args.m, args.seed)
    else:
        g = make_family(args.family, args.n)
    out.write(corpus.to_edge_list(g))
    return 0


# -- bench ----------------------------------------------------------------------

def _endpoints(g: Graph, family: str) -> tuple[int, int]:
    if family == "diamond":
        return g.vertex("a"), g.vertex("c")
    return 0, g.n - 1


def bench_rows(family: str, pattern: str, sizes, k: int | None = None,
               extra: float = 0.5, seed: int | None = None, baseline: bool = False,
               graph_size: int | None = None):
    """Yield dict rows (variant, size, n, m, count, output_size, ops, ratio).

    With ``graph_size`` set the graph is fixed and each size is used as k.
    """
    for size in sizes:
        gs = size if graph_size is None else graph_size
        if graph_size is not None:
            k = size
        m = None
        if family == "random":
            m = min(gs * (gs - 1) // 2, gs - 1 + max(1, int(extra * gs)))
        g = make_family(family, gs, m, seed)
        s, t = _endpoints(g, family)
        variants = ["optimal"] + (["baseline"] if baseline and pattern == "subtrees" else [])
        for variant in variants:
            counter = OpCounter()
            acc = [0]
            if variant == "optimal":
                def sink(key, es):
                    acc[0] += len(es)
                count = run_lister(g, pattern, sink, k=k, s=s, t=t, counter=counter)
            else:
                count = baseline_subtrees(g, k, counter=counter)
                acc[0] = count * (k - 1)
            yield {"variant": variant, "size": size, "n": g.n, "m": g.m, "count": count,
                   "output_size": acc[0], "ops": counter.n,
                   "ratio": round(counter.n / (g.m + acc[0]), 4)}


def cmd_bench(args, out, err) -> int:
    if args.pattern in ("subtrees", "subgraphs") and args.k is None and args.sweep_k is None:
        raise UsageError(f"bench {args.pattern} needs -k or --sweep-k")
    sizes = [int(x) for x in args.sizes.split(",") if x]
    fields = ["variant", "size", "n", "m", "count", "output_size", "ops", "ratio"]
    out.write(",".join(fields) + "\n")
    for row in bench_rows(args.family, args.pattern, sizes, args.k, args.extra,
                          args.seed, args.baseline, args.sweep_k):
        out.write(",".join(str(row[f]) for f in fields) + "\n")
        out.flush()
    return 0


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pattern-lister",
                                description="List k-subtrees, k-subgraphs, st-paths and cycles.")
    sub = p.add_subparsers(dest="cmd", required=True)

    pl = sub.add_parser("list", help="list patterns of an edge-list graph")
    pl.add_argument("pattern", choices=KINDS)
    pl.add_argument("-k", type=int)
    pl.add_argument("-s", metavar="NAME")
    pl.add_argument("-t", metavar="NAME")
    pl.add_argument("file", metavar="FILE")
    pl.add_argument("--count-only", action="store_true")
    pl.add_argument("--format", choices=("lines", "json"), default="lines")
    pl.add_argument("--check-oracle", action="store_true")
    pl.add_argument("--instrument", action="store_true")
    pl.add_argument("--delay-mode", action="store_true")
    pl.add_argument("--report", metavar="PATH", help="write the run report here instead of stderr")

    pg = sub.add_parser("gen", help="print a generated graph as an edge list")
    fam = pg.add_subparsers(dest="family", required=True)
    fam.add_parser("diamond").add_argument("-k", type=int, required=True)
    fam.add_parser("complete").add_argument("-n", type=int, required=True)
    fam.add_parser("cycle").add_argument("-n", type=int, required=True)
    pr = fam.add_parser("random")
    pr.add_argument("-n", type=int, required=True)
    pr.add_argument("-m", type=int, required=True)
    pr.add_argument("--seed", type=int)

    pb = sub.add_parser("bench", help="CSV of operation counts over a size sweep")
    pb.add_argument("family", choices=("diamond", "complete", "cycle", "random"))
    pb.add_argument("--pattern", choices=KINDS, default="cycles")
    pb.add_argument("--sizes", default="2,4,8,16,32,64")
    pb.add_argument("-k", type=int)
    pb.add_argument("--extra", type=float, default=0.5,
                    help="random family: extra edges per vertex beyond a tree")
    pb.add_argument("--seed", type=int)
    pb.add_argument("--sweep-k", type=int, metavar="SIZE",
                    help="fix the graph at SIZE and read --sizes as k values")
    pb.add_argument("--baseline", action="store_true",
                    help="also run the simple baseline (subtrees only)")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    args = build_parser().parse_args(argv)
    handler = {"list": cmd_list, "gen": cmd_gen, "bench": cmd_bench}[args.cmd]
    try:
        return handler(args, out, err)
    except (UsageError, GraphError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"pattern-lister: error: {msg}\n")
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
