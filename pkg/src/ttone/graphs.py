"""Simple undirected graphs: builders, generators, distances, contraction,
exact maximum average degree, and searches for reducible configurations."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

INF = math.inf


class GraphError(ValueError):
    """Malformed graph input: bad vertex id, self-loop, unreadable file."""


class Graph:
    """Immutable simple graph on vertex ids 0..n-1 with sorted adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def neighbors(self, v: int) -> tuple:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def edges(self) -> list:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def delete_vertices(self, doomed) -> tuple:
        """Remove a set of vertices; returns (graph, old-id -> new-id list).

        Deleted vertices map to -1.
        """
        doomed = set(doomed)
        mapping = [-1] * self.n
        new_id = 0
        for u in range(self.n):
            if u not in doomed:
                mapping[u] = new_id
                new_id += 1
        edges = [
            (mapping[u], mapping[v])
            for u, v in self.edges()
            if u not in doomed and v not in doomed
        ]
        return Graph(new_id, edges), mapping

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)


def build_graph(n: int, edges) -> Graph:
    """Build a simple graph, collapsing duplicate edges; rejects loops."""
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_grid(m: int, n: int) -> Graph:
    """Grid with rows 1..m, columns 1..n; (i,j) has id (i-1)*n + (j-1)."""
    if m < 1 or n < 1:
        raise GraphError("grid needs m, n >= 1")
    edges = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            if j + 1 < n:
                edges.append((v, v + 1))
            if i + 1 < m:
                edges.append((v, v + n))
    return Graph(m * n, edges)


def gen_star(d: int) -> Graph:
    """Star with center 0 and d leaves."""
    if d < 1:
        raise GraphError("star needs d >= 1")
    return Graph(d + 1, [(0, i) for i in range(1, d + 1)])


def gen_fat_triangle(t: int) -> Graph:
    """Three hubs (ids 0,1,2), each hub pair joined through t degree-2 vertices.

    The result has 3t+3 vertices, 6t edges, and maximum degree 2t.
    """
    if t < 1:
        raise GraphError("fat triangle needs t >= 1")
    edges = []
    mid = 3
    for a, b in ((0, 1), (1, 2), (2, 0)):
        for _ in range(t):
            edges.append((a, mid))
            edges.append((mid, b))
            mid += 1
    return Graph(3 * t + 3, edges)


# ---------------------------------------------------------------------------
# Distances
# ---------------------------------------------------------------------------

def bfs_distances(g: Graph, v: int) -> list:
    """Exact shortest-path distances from v; math.inf for unreachable."""
    dist = [INF] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] is INF or dist[w] > du:
                dist[w] = du
                queue.append(w)
    return dist


def distances_within(g: Graph, v: int, radius: int) -> dict:
    """Vertices at distance <= radius from v (v itself excluded), with distances."""
    dist = {v: 0}
    frontier = [v]
    d = 0
    while frontier and d < radius:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    del dist[v]
    return dist


def constraint_pairs(g: Graph, t: int) -> list:
    """All unordered pairs (u, v, d) with u < v and 1 <= d = d(u,v) <= t."""
    pairs = []
    for u in range(g.n):
        for v, d in sorted(distances_within(g, u, t).items()):
            if v > u:
                pairs.append((u, v, d))
    return pairs


def effective_diameter(g: Graph, cap: int) -> int:
    """max over vertices of min(eccentricity, cap), ignoring unreachable pairs."""
    best = 0
    for v in range(g.n):
        reach = distances_within(g, v, cap)
        ecc = max(reach.values(), default=0)
        best = max(best, ecc)
        if best >= cap:
            return cap
    return best


# ---------------------------------------------------------------------------
# Contraction
# ---------------------------------------------------------------------------

def contract(g: Graph, v: int, w: int) -> tuple:
    """Contract edge vw; the merged vertex keeps the lower id, ids compact.

    Returns (graph, mapping) where mapping[old] = new id; v and w map to
    the same id.  Parallel edges collapse (result stays simple).
    """
    if not g.has_edge(v, w):
        raise GraphError(f"({v},{w}) is not an edge")
    keep, drop = min(v, w), max(v, w)
    mapping = [u - (1 if u > drop else 0) for u in range(g.n)]
    mapping[drop] = mapping[keep]
    edges = []
    for a, b in g.edges():
        na, nb = mapping[a], mapping[b]
        if na != nb:
            edges.append((na, nb))
    return Graph(g.n - 1, edges), mapping


# ---------------------------------------------------------------------------
# Maximum average degree, exactly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Density:
    """Exact density 2|E(H)|/|V(H)| of a witness subgraph H."""

    numerator: int
    denominator: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __float__(self):
        return self.numerator / self.denominator


class _Dinic:
    """Max-flow with arbitrary integer capacities (Python ints stay exact)."""

    def __init__(self, size: int):
        self.size = size
        self.head = [[] for _ in range(size)]
        # edge arrays: to, capacity; reverse edge is index ^ 1
        self.to = []
        self.cap = []

    def add(self, u: int, v: int, c: int):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.size
            level[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for e in self.head[u]:
                    if self.cap[e] > 0 and level[self.to[e]] < 0:
                        level[self.to[e]] = level[u] + 1
                        queue.append(self.to[e])
            if level[t] < 0:
                return flow
            it = [0] * self.size
            while True:
                pushed = self._dfs(s, t, None, level, it)
                if pushed == 0:
                    break
                flow += pushed

    def _dfs(self, u, t, limit, level, it):
        if u == t:
            return limit
        while it[u] < len(self.head[u]):
            e = self.head[u][it[u]]
            v = self.to[e]
            if self.cap[e] > 0 and level[v] == level[u] + 1:
                cap = self.cap[e] if limit is None else min(limit, self.cap[e])
                pushed = self._dfs(v, t, cap, level, it)
                if pushed:
                    self.cap[e] -= pushed
                    self.cap[e ^ 1] += pushed
                    return pushed
            it[u] += 1
        return 0

    def source_side(self, s: int) -> set:
        """Vertices reachable from s in the residual network (a min cut side)."""
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                if self.cap[e] > 0 and self.to[e] not in seen:
                    seen.add(self.to[e])
                    queue.append(self.to[e])
        return seen


def _density_exceeds(g: Graph, threshold: Fraction):
    """Does some nonempty subgraph H satisfy |E(H)|/|V(H)| > threshold?

    Returns the witness vertex set (possibly empty when the answer is no).
    Standard source / edge-node / vertex-node / sink construction: with
    threshold p/q, cut capacity q*m - max_S (q|E(S)| - p|S|), so the strict
    test is max_flow < q*m.
    """
    p, q = threshold.numerator, threshold.denominator
    m, n = g.m, g.n
    src, snk = 0, 1 + m + n
    net = _Dinic(m + n + 2)
    big = q * m + abs(p) * n + 1
    for i, (u, v) in enumerate(g.edges()):
        net.add(src, 1 + i, q)
        net.add(1 + i, 1 + m + u, big)
        net.add(1 + i, 1 + m + v, big)
    for v in range(n):
        net.add(1 + m + v, snk, p)
    flow = net.max_flow(src, snk)
    if flow >= q * m:
        return None
    side = net.source_side(src)
    return {v for v in range(n) if 1 + m + v in side}


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Smallest-denominator rational in the closed interval [lo, hi]."""
    fl = lo.numerator // lo.denominator
    if lo == fl:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    inner = _simplest_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / inner


def mad(g: Graph) -> Density:
    """Exact maximum average degree, max over subgraphs H of 2|E(H)|/|V(H)|.

    Binary search with the flow-based strict density test narrows the value
    to an interval shorter than 1/n^2; since subgraph densities are rationals
    with denominator at most n, the Stern-Brocot descent to the simplest
    rational in that interval pins the exact optimum.  The returned Density
    carries the (unreduced) edge and vertex counts of a witness subgraph.
    """
    if g.n < 1:
        raise GraphError("mad needs a nonempty graph")
    if g.m == 0:
        return Density(0, 1)
    n = g.n
    lo = Fraction(g.m, n)          # achieved by G itself
    hi = Fraction(n - 1, 2)        # |E(S)| <= C(|S|, 2)
    gap = Fraction(1, n * n)
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        if _density_exceeds(g, mid) is not None:
            lo = mid
        else:
            hi = mid
    opt = _simplest_between(lo, hi)
    # re-run just below the optimum to extract a witness subgraph
    witness = _density_exceeds(g, opt - Fraction(1, n * n + 1))
    sub = set(witness)
    edges_in = sum(1 for u, v in g.edges() if u in sub and v in sub)
    assert Fraction(edges_in, len(sub)) == opt
    return Density(2 * edges_in, len(sub))


# ---------------------------------------------------------------------------
# Reducible configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThreadConfig:
    """A degree-2 chain with its two (possibly equal) endpoint vertices.

    internal lists the chain in path order; endpoints[0] is adjacent to
    internal[0] and endpoints[1] to internal[-1].  For ThreeThread the
    second endpoint has degree <= 5; for TwoThread the first endpoint has
    degree <= 3 and the second degree <= 5.
    """

    kind: str
    internal: tuple
    endpoints: tuple


_THREAD_LEN = {"FourThread": 4, "ThreeThread": 3, "TwoThread": 2}


def check_thread_config(g: Graph, cfg: ThreadConfig) -> None:
    """Re-verify the kind-specific degree conditions; raises on breach."""
    want = _THREAD_LEN[cfg.kind]
    if len(cfg.internal) != want:
        raise ValueError(f"{cfg.kind} needs {want} internal vertices")
    for v in cfg.internal:
        if g.degree(v) != 2:
            raise ValueError(f"internal vertex {v} has degree {g.degree(v)}")
    chain = [cfg.endpoints[0], *cfg.internal, cfg.endpoints[1]]
    for a, b in zip(chain, chain[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"({a},{b}) missing from thread")
    d0, d1 = g.degree(cfg.endpoints[0]), g.degree(cfg.endpoints[1])
    if cfg.kind == "ThreeThread" and d1 > 5:
        raise ValueError("ThreeThread needs an endpoint of degree <= 5")
    if cfg.kind == "TwoThread" and (d0 > 3 or d1 > 5):
        raise ValueError("TwoThread needs endpoints of degree <= 3 and <= 5")


def _maximal_chains(g: Graph):
    """Maximal degree-2 chains anchored at vertices of degree >= 3."""
    chains = []
    seen = set()
    for s in range(g.n):
        if g.degree(s) < 3:
            continue
        for w in g.adj[s]:
            if g.degree(w) != 2:
                continue
            chain = [w]
            prev, cur = s, w
            while True:
                nxt = next(x for x in g.adj[cur] if x != prev)
                if g.degree(nxt) != 2 or nxt == s:
                    break
                chain.append(nxt)
                prev, cur = cur, nxt
            key = frozenset(chain)
            if key not in seen:
                seen.add(key)
                chains.append((s, chain, nxt))
    return chains


def _oriented(kind, internal, endpoints, degs):
    """Orientations of a window satisfying the kind's endpoint conditions."""
    outs = []
    for seq, ends in ((internal, endpoints),
                      (tuple(reversed(internal)), (endpoints[1], endpoints[0]))):
        d0, d1 = degs[ends[0]], degs[ends[1]]
        if kind == "FourThread":
            ok = True
        elif kind == "ThreeThread":
            ok = d1 <= 5
        else:
            ok = d0 <= 3 and d1 <= 5
        if ok:
            outs.append(ThreadConfig(kind, tuple(seq), tuple(ends)))
    return outs


def find_thread_config(g: Graph):
    """Find a reducible thread: a 4-thread, a 3-thread ending at a vertex of
    degree <= 5, or a 2-thread with endpoint degrees <= 3 and <= 5.

    Requires minimum degree 2.  Candidates are windows of maximal degree-2
    chains walked from each vertex of degree >= 3; a 2-regular component
    always yields a 2-thread whose endpoints coincide.  Preference order is
    FourThread, ThreeThread, TwoThread, ties broken by the smallest internal
    vertex tuple.  Returns None when no configuration exists.
    """
    if g.n == 0:
        return None
    if g.min_degree() < 2:
        raise ValueError("find_thread_config requires minimum degree 2")
    degs = [g.degree(v) for v in range(g.n)]
    pools = {"FourThread": [], "ThreeThread": [], "TwoThread": []}

    for e1, chain, e2 in _maximal_chains(g):
        walk = [e1, *chain, e2]
        for kind, width in (("FourThread", 4), ("ThreeThread", 3), ("TwoThread", 2)):
            for i in range(1, len(walk) - width):
                internal = tuple(walk[i:i + width])
                ends = (walk[i - 1], walk[i + width])
                pools[kind].extend(_oriented(kind, internal, ends, degs))

    # 2-regular components: pick the lex-least adjacent pair as the chain
    visited = [False] * g.n
    for s in range(g.n):
        if visited[s] or degs[s] != 2:
            continue
        comp, queue, regular = [], deque([s]), True
        visited[s] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.adj[u]:
                if not visited[w]:
                    visited[w] = True
                    queue.append(w)
                if degs[w] != 2:
                    regular = False
        if not regular:
            continue
        u = min(comp)
        a, b = g.adj[u]
        other = next(x for x in g.adj[a] if x != u)
        pools["TwoThread"].append(
            ThreadConfig("TwoThread", (u, a), (b, other)))

    for kind in ("FourThread", "ThreeThread", "TwoThread"):
        if pools[kind]:
            best = min(pools[kind], key=lambda c: c.internal)
            check_thread_config(g, best)
            return best
    return None


def find_planar_reducible(g: Graph):
    """A vertex v with d(v) <= 5 and at most two neighbors of degree >= 11,
    paired with a contraction partner w (None for isolated v).

    For d(v) >= 3 the partner has degree <= 10, so contraction cannot raise
    the maximum degree.  Returns None when no such vertex exists, which
    signals non-planar input.
    """
    for v in range(g.n):
        if g.degree(v) > 5:
            continue
        if sum(1 for u in g.adj[v] if g.degree(u) >= 11) > 2:
            continue
        if g.degree(v) == 0:
            return v, None
        if g.degree(v) >= 3:
            w = next(u for u in g.adj[v] if g.degree(u) <= 10)
            return v, w
        return v, g.adj[v][0]
    return None


def find_outerplanar_edge(g: Graph):
    """An edge xy with d(x) = 1, or with d(x) = 2 and d(y) <= 4; None if
    absent (signals non-outerplanar input)."""
    for x in range(g.n):
        if g.degree(x) == 1:
            return x, g.adj[x][0]
        if g.degree(x) == 2:
            for y in g.adj[x]:
                if g.degree(y) <= 4:
                    return x, y
    return None


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------

def write_edge_list(g: Graph) -> str:
    """First line "n m", then one sorted "u v" line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list format; lines starting with 'c' are comments."""
    rows = [ln for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith("c")]
    if not rows:
        raise GraphError("empty edge-list input")
    try:
        n, m = map(int, rows[0].split())
    except ValueError as exc:
        raise GraphError(f"bad header line: {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        try:
            u, v = map(int, ln.split())
        except ValueError as exc:
            raise GraphError(f"bad edge line: {ln!r}") from exc
        edges.append((u, v))
    return Graph(n, edges)
