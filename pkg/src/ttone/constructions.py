"""Constructive colorers: paths, cycles by block concatenation, grids by
modular formulas, fat triangles, and the reduce-and-extend algorithms for
bounded-density, outerplanar, and planar graphs."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .blocks import BLOCK_TABLES, cycle_value, ensure_validated, exceptional_witness
from .bounds import _least_k, h_t_bounds, path_tau, star_lower
from .coloring import (Coloring, available_labels, greedy_color, greedy_extend,
                       verify)
from .graphs import (Graph, contract, find_outerplanar_edge,
                     find_planar_reducible, find_thread_config, gen_cycle,
                     gen_fat_triangle, gen_path, mad)


class ClassPreconditionError(ValueError):
    """Input graph is outside the class a colorer is guaranteed for."""


def _checked(g: Graph, coloring: Coloring) -> Coloring:
    bad = verify(g, coloring)
    assert not bad, f"construction produced an invalid coloring: {bad[0]}"
    return coloring


# ---------------------------------------------------------------------------
# Paths
# ---------------------------------------------------------------------------

def color_path(n: int, t: int) -> Coloring:
    """Color the n-vertex path with exactly path_tau(n, t) colors.

    Walks the path assigning each vertex the lexicographically least label
    that fits, against the formula palette: the least label reuses colors of
    earlier vertices up to each pair's sharing cap and only then touches
    fresh colors, so the palette is consumed exactly when the formula says a
    fresh color is due.  Color count and validity are asserted on the way
    out; checked for n <= 50, t <= 8 in the suite.
    """
    if n < 1 or t < 1:
        raise ValueError("need n, t >= 1")
    k = path_tau(n, t)
    g = gen_path(n)
    coloring = Coloring(t, k)
    for v in range(n):
        if greedy_extend(g, coloring, v) is None:
            raise AssertionError(f"path palette {k} stalled at vertex {v}")
    assert len(coloring.colors_used()) == k
    return _checked(g, coloring)


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------

def decompose(n: int, lengths):
    """Write n as a nonnegative combination of the given lengths.

    Dynamic program over partial sums; ties prefer fewer blocks, then the
    lexicographically smallest sorted multiset.  Returns a sorted tuple of
    block lengths, or None.
    """
    lengths = sorted(set(lengths))
    if any(x < 1 for x in lengths):
        raise ValueError("lengths must be positive")
    best = [None] * (n + 1)
    best[0] = ()
    for total in range(1, n + 1):
        choice = None
        for piece in lengths:
            if piece > total or best[total - piece] is None:
                continue
            cand = tuple(sorted(best[total - piece] + (piece,)))
            if choice is None or (len(cand), cand) < (len(choice), choice):
                choice = cand
        best[total] = choice
    return best[n]


def color_cycle(n: int, t: int) -> Coloring:
    """Optimal cycle coloring for tones 2..5.

    Exceptional lengths come from stored witnesses; all other lengths are a
    concatenation of table blocks laid around the cycle in sorted order.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if t not in BLOCK_TABLES:
        raise ValueError("cycle construction covers tones 2..5")
    ensure_validated()
    stored = exceptional_witness(n, t)
    if stored is not None:
        coloring = Coloring(t, cycle_value(n, t), dict(enumerate(stored)))
        return _checked(gen_cycle(n), coloring)
    table = BLOCK_TABLES[t]
    parts = decompose(n, table.lengths)
    if parts is None:
        raise AssertionError(f"n={n} not representable over {table.lengths}")
    labels = {}
    v = 0
    for piece in parts:
        for lab in table.blocks[piece]:
            labels[v] = lab
            v += 1
    coloring = Coloring(t, table.k, labels)
    return _checked(gen_cycle(n), coloring)


# ---------------------------------------------------------------------------
# Grids
# ---------------------------------------------------------------------------

def _grid_label(i: int, j: int, t: int) -> tuple:
    parts = [(i - j) % 3,
             (i + j) % 3 + 3,
             (2 * i + j) % 4 + 6,
             (i + 2 * j) % 4 + 10,
             (i + 3 * j) % 8 + 14]
    return tuple(c + 1 for c in parts[:t])


def color_grid(m: int, n: int, t: int) -> Coloring:
    """Modular-formula grid coloring: 6, 10, 14, or at most 22 colors for
    tones 2..5.  Rows i in 1..m, columns j in 1..n, id (i-1)*n + (j-1)."""
    if m < 2 or n < 2:
        raise ValueError("need m, n >= 2")
    if t not in (2, 3, 4, 5):
        raise ValueError("grid construction covers tones 2..5")
    k = {2: 6, 3: 10, 4: 14, 5: 22}[t]
    labels = {}
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            v = (i - 1) * n + (j - 1)
            if t == 2:
                labels[v] = ((i - j) % 3 + 1, (i + j) % 3 + 4)
            else:
                labels[v] = _grid_label(i, j, t)
    return Coloring(t, k, labels)


# ---------------------------------------------------------------------------
# Fat triangles
# ---------------------------------------------------------------------------

def color_fat_triangle(t: int) -> Coloring:
    """2-tone coloring of the fat triangle with the upper-bound palette.

    Hubs take (1,2), (3,4), (5,6).  Each degree-2 vertex gets a distinct
    2-set avoiding all pairs from the six hub colors, except that labels
    meeting a hub's pair go only on the side not adjacent to that hub.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    g = gen_fat_triangle(t)
    if t == 1:
        ring = color_cycle(6, 2)
        order = [0, 3, 1, 4, 2, 5]   # hub/middle ids around the hexagon
        labels = {order[p]: ring.labels[p] for p in range(6)}
        return _checked(g, Coloring(2, ring.k, labels))
    k = h_t_bounds(t)[1]
    labels = {0: (1, 2), 1: (3, 4), 2: (5, 6)}
    shared = iter(combinations(range(7, k + 1), 2))
    # middle ids 3..3t-1 by side; side s lies between hubs s and (s+1)%3,
    # so its dedicated labels reuse the colors of the opposite hub
    for side, far_hub in ((0, 2), (1, 0), (2, 1)):
        far = (2 * far_hub + 1, 2 * far_hub + 2)
        dedicated = iter((a, c) for a in far for c in range(7, k + 1))
        for idx in range(t):
            v = 3 + side * t + idx
            lab = next(dedicated, None)
            if lab is None:
                lab = next(shared)
            labels[v] = lab
    return _checked(g, Coloring(2, k, labels))


# ---------------------------------------------------------------------------
# Reduce-and-extend colorers
# ---------------------------------------------------------------------------

def _lift(colored: Coloring, pre_n: int, mapping, skip) -> Coloring:
    """Pull a coloring back through a delete/contract mapping, leaving the
    vertices in skip unassigned."""
    out = Coloring(colored.t, colored.k)
    for u in range(pre_n):
        if u in skip or mapping[u] < 0:
            continue
        out.assign(u, colored.labels[mapping[u]])
    return out


def _must_extend(g: Graph, partial: Coloring, v: int) -> None:
    if greedy_extend(g, partial, v) is None:
        raise AssertionError(f"guaranteed extension failed at vertex {v}")


def color_sparse(g: Graph) -> Coloring:
    """2-tone coloring of a graph with maximum average degree below 12/5,
    using max(7, star_lower(max_degree)) colors.

    Strips vertices of degree at most 1, otherwise removes a reducible
    thread, colors the rest, and extends back; a 2-thread may force one
    recoloring round on its surviving interior vertex.
    """
    if g.n == 0:
        return Coloring(2, 7)
    if mad(g).fraction >= Fraction(12, 5):
        raise ClassPreconditionError("maximum average degree is not below 12/5")
    k = max(7, star_lower(g.max_degree()))

    steps = []
    cur = g
    while cur.n > 0:
        low = next((v for v in range(cur.n) if cur.degree(v) <= 1), None)
        if low is not None:
            h, mp = cur.delete_vertices([low])
            steps.append(("extend", cur, mp, [low]))
            cur = h
            continue
        cfg = find_thread_config(cur)
        assert cfg is not None, "no reducible thread despite the density gate"
        if cfg.kind == "FourThread":
            doomed = [cfg.internal[1], cfg.internal[2]]
            h, mp = cur.delete_vertices(doomed)
            steps.append(("extend", cur, mp, doomed))
        elif cfg.kind == "ThreeThread":
            doomed = [cfg.internal[1], cfg.internal[2]]
            h, mp = cur.delete_vertices(doomed)
            steps.append(("extend", cur, mp, [cfg.internal[2], cfg.internal[1]]))
        else:
            v1, v2 = cfg.internal
            h, mp = cur.delete_vertices([v1])
            steps.append(("two_thread", cur, mp, (v1, v2)))
        cur = h

    colored = Coloring(2, k)
    for step in reversed(steps):
        kind, pre, mp, data = step
        if kind == "extend":
            partial = _lift(colored, pre.n, mp, set(data))
            for v in data:
                _must_extend(pre, partial, v)
            colored = partial
        else:
            v1, v2 = data
            partial = _lift(colored, pre.n, mp, {v1})
            colored = _finish_two_thread(pre, partial, v1, v2)
    return _checked(g, colored)


def _finish_two_thread(g: Graph, partial: Coloring, v1: int, v2: int) -> Coloring:
    """Extend across a deleted 2-thread interior vertex.

    v2 kept its label from the reduced graph, but may now clash with the far
    endpoint at distance 2 through v1; recolor it if so, and retry its other
    valid labels until v1 can also be colored (the palette analysis
    guarantees some choice works)."""
    current = partial.labels.pop(v2)
    options = available_labels(g, partial, v2)
    assert options, "no valid label for the surviving thread vertex"
    if current in options:
        options.remove(current)
        options.insert(0, current)
    for lab in options:
        partial.assign(v2, lab)
        if greedy_extend(g, partial, v1) is not None:
            return partial
        del partial.labels[v2]
    raise AssertionError("2-thread extension exhausted its guaranteed options")


def _reduce_and_lift(g: Graph, k: int, pick, stop, base) -> Coloring:
    """Shared loop for the contraction-based colorers.

    pick(cur) returns (v, w): contract vw, later extending v (w = None means
    v is isolated and is deleted instead).  stop(cur) switches to base(cur),
    which must color the remaining graph with palette k.
    """
    steps = []
    cur = g
    while not stop(cur):
        v, w = pick(cur)
        if w is None:
            h, mp = cur.delete_vertices([v])
        else:
            h, mp = contract(cur, v, w)
        steps.append((cur, mp, v))
        cur = h
    colored = base(cur)
    for pre, mp, v in reversed(steps):
        partial = _lift(colored, pre.n, mp, {v})
        _must_extend(pre, partial, v)
        colored = partial
    return _checked(g, colored)


def outerplanar_palette(max_degree: int) -> int:
    """Least k with C(k-4, 2) > max_degree + 2."""
    return _least_k(lambda k: comb(max(k - 4, 0), 2) > max_degree + 2, lo=4)


def color_outerplanar(g: Graph) -> Coloring:
    """2-tone coloring of an outerplanar graph by repeated edge contraction.

    Contracts an edge xy with d(x) = 1, or d(x) = 2 and d(y) <= 4, colors
    the contraction, and extends back to x.  Raises when no such edge exists
    (the input is then not outerplanar).
    """
    if g.n == 0:
        return Coloring(2, 7)
    k = outerplanar_palette(g.max_degree())

    def pick(cur):
        iso = next((v for v in range(cur.n) if cur.degree(v) == 0), None)
        if iso is not None:
            return iso, None
        edge = find_outerplanar_edge(cur)
        if edge is None:
            raise ClassPreconditionError(
                "input not outerplanar: no reducible edge")
        return edge

    def base(cur):
        col = Coloring(2, k)
        col.assign(0, (1, 2))
        return col

    return _reduce_and_lift(g, k, pick, lambda cur: cur.n <= 1, base)


def planar_palette(max_degree: int) -> int:
    """max(41, least k with C(k-10, 2) > 2*max_degree + 25)."""
    return max(41, _least_k(
        lambda k: comb(max(k - 10, 0), 2) > 2 * max_degree + 25, lo=10))


def color_planar(g: Graph) -> Coloring:
    """2-tone coloring of a planar graph within max(41, planar_palette).

    While the maximum degree is at least 13, contracts a low-degree vertex
    with few high-degree neighbors into a degree-at-most-10 partner; the
    remaining graph is colored greedily (41 colors always suffice at
    maximum degree 12).  Raises when no reducible vertex exists.
    """
    if g.n == 0:
        return Coloring(2, 41)
    k = planar_palette(g.max_degree())

    def pick(cur):
        found = find_planar_reducible(cur)
        if found is None:
            raise ClassPreconditionError(
                "input not planar: no reducible vertex")
        return found

    def base(cur):
        if cur.n == 0:
            return Coloring(2, k)
        return greedy_color(cur, 2, k)

    return _reduce_and_lift(g, k, pick,
                            lambda cur: cur.max_degree() <= 12, base)
