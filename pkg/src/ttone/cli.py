"""Command-line front end: generate, color, verify, solve, bound, measure.

Exit codes: 0 success, 1 verification violations, 2 usage or structural
error, 3 search budget exhausted, 4 class precondition failed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import constructions, instances
from .coloring import Coloring, StructuralError, verify
from .exact import SearchBudget, tau
from .graphs import (Graph, GraphError, gen_cycle, gen_fat_triangle, gen_grid,
                     gen_path, gen_star, mad, read_edge_list, write_edge_list)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_CLASS = 4


class UsageError(Exception):
    pass


def _emit(text: str, path=None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_graph(path) -> Graph:
    try:
        if path is None or path == "-":
            return read_edge_list(sys.stdin.read())
        with open(path) as fh:
            return read_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read graph: {exc}") from exc


def _json_line(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    if args.path is not None:
        g = gen_path(args.path)
    elif args.cycle is not None:
        g = gen_cycle(args.cycle)
    elif args.grid is not None:
        g = gen_grid(args.grid[0], args.grid[1])
    elif args.star is not None:
        g = gen_star(args.star)
    elif args.fat_triangle is not None:
        g = gen_fat_triangle(args.fat_triangle)
    elif args.random == "subdivided":
        g = instances.random_subdivided(rng)
    elif args.random == "outerplanar":
        g = instances.random_maximal_outerplanar(rng, args.size)
    elif args.random == "apollonian":
        g = instances.random_apollonian(rng, args.size)
    else:
        raise UsageError("gen: choose a family")
    _emit(write_edge_list(g), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# color
# ---------------------------------------------------------------------------

def _as_path_order(g: Graph):
    if g.n == 1:
        return [0]
    ends = [v for v in range(g.n) if g.degree(v) == 1]
    if len(ends) != 2 or any(g.degree(v) > 2 for v in range(g.n)):
        return None
    order, prev, cur = [ends[0]], -1, ends[0]
    while len(order) < g.n:
        nxts = [w for w in g.adj[cur] if w != prev]
        if not nxts:
            return None
        prev, cur = cur, nxts[0]
        order.append(cur)
    return order if cur == ends[1] else None


def _as_cycle_order(g: Graph):
    if not bounds_mod.is_cycle_graph(g):
        return None
    order, prev, cur = [0], -1, 0
    while True:
        nxt = min(w for w in g.adj[cur] if w != prev) if prev < 0 else \
            next(w for w in g.adj[cur] if w != prev)
        if nxt == 0:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _as_grid_dims(g: Graph):
    for m in range(1, g.n + 1):
        if g.n % m:
            continue
        n = g.n // m
        if m >= 2 and n >= 2 and g == gen_grid(m, n):
            return m, n
    return None


def _as_fat_triangle_param(g: Graph):
    if g.n < 6 or (g.n - 3) % 3:
        return None
    t = (g.n - 3) // 3
    return t if g == gen_fat_triangle(t) else None


def _remap(coloring: Coloring, order) -> Coloring:
    labels = {order[i]: coloring.labels[i] for i in range(len(order))}
    return Coloring(coloring.t, coloring.k, labels)


def _color_family(g: Graph, family: str, t: int) -> Coloring:
    if family in ("fat-triangle", "sparse", "outerplanar", "planar") and t != 2:
        raise UsageError(f"family {family} colors tone 2 only")
    if family == "path":
        order = _as_path_order(g)
        if order is None:
            raise UsageError("input graph is not a path")
        return _remap(constructions.color_path(g.n, t), order)
    if family == "cycle":
        order = _as_cycle_order(g)
        if order is None:
            raise UsageError("input graph is not a cycle")
        return _remap(constructions.color_cycle(g.n, t), order)
    if family == "grid":
        dims = _as_grid_dims(g)
        if dims is None:
            raise UsageError("input graph is not a generator-layout grid")
        return constructions.color_grid(dims[0], dims[1], t)
    if family == "fat-triangle":
        param = _as_fat_triangle_param(g)
        if param is None:
            raise UsageError("input graph is not a generator-layout fat triangle")
        return constructions.color_fat_triangle(param)
    if family == "sparse":
        return constructions.color_sparse(g)
    if family == "outerplanar":
        return constructions.color_outerplanar(g)
    if family == "planar":
        return constructions.color_planar(g)
    raise UsageError(f"unknown family {family}")


def _color_auto(g: Graph, t: int) -> Coloring:
    if _as_path_order(g) is not None:
        return _color_family(g, "path", t)
    if _as_cycle_order(g) is not None and t in (2, 3, 4, 5):
        return _color_family(g, "cycle", t)
    if _as_grid_dims(g) is not None and t in (2, 3, 4, 5):
        return _color_family(g, "grid", t)
    if t == 2:
        if _as_fat_triangle_param(g) is not None:
            return _color_family(g, "fat-triangle", t)
        if mad(g).fraction < Fraction(12, 5):
            return constructions.color_sparse(g)
        try:
            return constructions.color_outerplanar(g)
        except constructions.ClassPreconditionError:
            return constructions.color_planar(g)
    raise constructions.ClassPreconditionError(
        f"no construction applies to this graph at tone {t}")


def cmd_color(args) -> int:
    g = _load_graph(args.input)
    if args.family == "auto":
        coloring = _color_auto(g, args.t)
    else:
        coloring = _color_family(g, args.family, args.t)
    bad = verify(g, coloring)
    assert not bad, f"construction emitted an invalid coloring: {bad[0]}"
    _emit(coloring.to_json(), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        if args.input is None or args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input) as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read coloring: {exc}") from exc
    coloring = Coloring.from_json(text)
    violations = verify(g, coloring)
    if not violations:
        _emit(_json_line({"ok": True}))
        return EXIT_OK
    for v in violations:
        _emit(_json_line({"u": v.u, "v": v.v, "distance": v.distance,
                          "shared": v.shared}))
    return EXIT_VIOLATIONS


# ---------------------------------------------------------------------------
# tau / bounds / mad
# ---------------------------------------------------------------------------

def cmd_tau(args) -> int:
    g = _load_graph(args.input)
    budget = SearchBudget(max_nodes=args.max_nodes, wall_limit=args.wall_limit)
    result = tau(g, args.t, budget, jobs=args.jobs)
    if result.status == "timeout":
        _emit(_json_line({"status": "timeout", "lower_bound": result.lower_bound,
                          "nodes": result.nodes}))
        return EXIT_BUDGET
    payload = {"status": "resolved", "value": result.value, "t": args.t,
               "nodes": result.nodes}
    _emit(_json_line(payload))
    if args.emit_witness:
        _emit(result.coloring.to_json(), args.emit_witness)
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _load_graph(args.input)
    for cert in bounds_mod.certificates(g, args.t):
        _emit(cert.to_json_line() + "\n")
    return EXIT_OK


def cmd_mad(args) -> int:
    g = _load_graph(args.input)
    dens = mad(g)
    frac = dens.fraction
    _emit(_json_line({"numerator": dens.numerator,
                      "denominator": dens.denominator,
                      "reduced": [frac.numerator, frac.denominator]}))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ttone",
        description="multi-tone graph coloring toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="emit an edge list for a generator family")
    p.add_argument("--path", type=int, metavar="N")
    p.add_argument("--cycle", type=int, metavar="N")
    p.add_argument("--grid", type=int, nargs=2, metavar=("M", "N"))
    p.add_argument("--star", type=int, metavar="D")
    p.add_argument("--fat-triangle", type=int, metavar="T")
    p.add_argument("--random", choices=["subdivided", "outerplanar", "apollonian"])
    p.add_argument("--size", type=int, default=12,
                   help="size parameter for random families")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for random families (others are deterministic)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="color a graph read from stdin or --in")
    p.add_argument("--family", default="auto",
                   choices=["path", "cycle", "grid", "fat-triangle", "sparse",
                            "outerplanar", "planar", "auto"])
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--in", dest="input", default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring JSON against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--in", dest="input", default=None,
                   help="coloring JSON (default stdin)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tau", help="exact tone chromatic number")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--in", dest="input", default=None)
    p.add_argument("--max-nodes", type=int, default=200_000_000)
    p.add_argument("--wall-limit", type=float, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--emit-witness", default=None, metavar="PATH")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("bounds", help="print applicable lower-bound certificates")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--in", dest="input", default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("mad", help="exact maximum average degree")
    p.add_argument("--in", dest="input", default=None)
    p.set_defaults(func=cmd_mad)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphError, StructuralError, ValueError) as exc:
        if isinstance(exc, constructions.ClassPreconditionError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CLASS
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
