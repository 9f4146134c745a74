"""Exact decision and tone chromatic number by canonicalized backtracking."""

from __future__ import annotations

import sys
import time
from collections import deque
from dataclasses import dataclass

from .bounds import best_lower_bound
from .coloring import Coloring, label_mask, verify
from .graphs import Graph, constraint_pairs


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one search subtree: node count and optional wall clock."""

    max_nodes: int = 200_000_000
    wall_limit: float = None

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.wall_limit is not None and self.wall_limit <= 0:
            raise ValueError("wall_limit must be positive")


@dataclass(frozen=True)
class ExhaustionProof:
    """k was refuted by exhausting the canonicalized search tree."""

    k: int
    nodes: int


@dataclass
class DecideResult:
    status: str                 # "colored" | "infeasible" | "timeout"
    coloring: Coloring = None
    nodes: int = 0


@dataclass
class TauResult:
    status: str                 # "resolved" | "timeout"
    value: int = None
    coloring: Coloring = None
    lower_certificate: object = None   # Certificate | ExhaustionProof
    lower_bound: int = 0
    nodes: int = 0


def search_order(g: Graph) -> list:
    """Breadth-first order from a maximum-degree vertex; further components
    are appended the same way (max degree first, ties by smallest id)."""
    seen = [False] * g.n
    order = []
    while len(order) < g.n:
        start = max((v for v in range(g.n) if not seen[v]),
                    key=lambda v: (g.degree(v), -v))
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


class _Timeout(Exception):
    pass


class _Searcher:
    """Backtracking over label assignments in a fixed vertex order.

    Symmetry breaking: the first vertex gets colors 1..t, and any label may
    introduce new colors only as the next unused ones in increasing order
    (color-introduction canonicalization), tested with one shift/popcount.
    """

    def __init__(self, g: Graph, t: int, k: int):
        self.g = g
        self.t = t
        self.k = k
        self.order = search_order(g)
        pos = {v: i for i, v in enumerate(self.order)}
        self.cons = [[] for _ in range(g.n)]
        for u, v, d in constraint_pairs(g, t):
            i, j = pos[u], pos[v]
            lo, hi = min(i, j), max(i, j)
            self.cons[hi].append((lo, d - 1))
        for lst in self.cons:
            lst.sort(key=lambda jc: jc[1])
        self.assigned = [0] * g.n
        self.nodes = 0
        self.max_nodes = 0
        self.deadline = None

    def _check_time(self):
        if self.nodes > self.max_nodes:
            raise _Timeout
        if self.deadline is not None and self.nodes % 2048 == 0:
            if time.monotonic() > self.deadline:
                raise _Timeout

    def candidates(self, i: int, mx: int) -> list:
        """Labels allowed at position i given current assignments, lex order.

        Colors are chosen in increasing order with running sharing counters,
        pruning any prefix that exceeds a cap.  Canonical color introduction
        becomes a reach bound: the next color may exceed the current maximum
        mx by at most one more than the new colors already in this label.
        Which constraints each color touches is computed once up front, so
        the recursion only decrements counters.
        """
        zero = 0
        masks = []
        caps = []
        for j, cap in self.cons[i]:
            a = self.assigned[j]
            if cap == 0:
                zero |= a
            else:
                masks.append(a)
                caps.append(cap)
        k, t = self.k, self.t
        ncons = len(masks)
        hits = []
        for c in range(1, k + 1):
            if (zero >> (c - 1)) & 1:
                hits.append(None)
            else:
                bit = 1 << (c - 1)
                hits.append(tuple(ci for ci in range(ncons) if masks[ci] & bit))
        rem = caps[:]
        out = []
        chosen = []

        def walk(prev, above, mask):
            if len(chosen) == t:
                out.append((mask, tuple(chosen), mx + above))
                return
            reach = mx + above + 1
            if reach > k:
                reach = k
            for c in range(prev + 1, reach + 1):
                h = hits[c - 1]
                if h is None:
                    continue
                for ci in h:
                    if not rem[ci]:
                        break
                else:
                    for ci in h:
                        rem[ci] -= 1
                    chosen.append(c)
                    walk(c, above + (c > mx), mask | (1 << (c - 1)))
                    chosen.pop()
                    for ci in h:
                        rem[ci] += 1

        walk(0, 0, 0)
        return out

    def dfs(self, i: int, mx: int, out: list) -> bool:
        if i == self.g.n:
            return True
        for m, combo, mx2 in self.candidates(i, mx):
            self.nodes += 1
            self._check_time()
            self.assigned[i] = m
            out.append(combo)
            if self.dfs(i + 1, mx2, out):
                return True
            out.pop()
        self.assigned[i] = 0
        return False


def _run_subtree(searcher: _Searcher, first: tuple, budget: SearchBudget) -> DecideResult:
    """Search positions >= 2 under a fixed assignment of the first two."""
    searcher.nodes = 0
    searcher.max_nodes = budget.max_nodes
    if budget.wall_limit is not None:
        searcher.deadline = time.monotonic() + budget.wall_limit
    t = searcher.t
    base = tuple(range(1, t + 1))
    searcher.assigned[0] = label_mask(base)
    out = [base]
    mx = t
    if first is not None:
        m, combo, mx = first
        searcher.assigned[1] = m
        out.append(combo)
    start = len(out)
    try:
        found = searcher.dfs(start, mx, out)
    except _Timeout:
        return DecideResult("timeout", nodes=searcher.nodes)
    if not found:
        return DecideResult("infeasible", nodes=searcher.nodes)
    coloring = Coloring(t, searcher.k,
                        {searcher.order[i]: out[i] for i in range(len(out))})
    return DecideResult("colored", coloring, searcher.nodes)


def exact_decide(g: Graph, t: int, k: int, budget: SearchBudget = None,
                 jobs: int = 1) -> DecideResult:
    """Complete search for a tone-t coloring of g with k colors.

    Returns a verified coloring, "infeasible" after exhausting the
    canonicalized tree, or "timeout".  The search fans out over the second
    vertex's candidate labels; each branch gets its own budget and branches
    are merged in candidate order, so the outcome does not depend on jobs.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    if k < t:
        return DecideResult("infeasible")
    if budget is None:
        budget = SearchBudget()
    if g.n == 0:
        return DecideResult("colored", Coloring(t, k))
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * g.n + 100))
    searcher = _Searcher(g, t, k)
    base = tuple(range(1, t + 1))
    if g.n == 1:
        coloring = Coloring(t, k, {0: base})
        return DecideResult("colored", coloring, 1)

    searcher.assigned[0] = label_mask(base)
    firsts = list(searcher.candidates(1, t))
    searcher.assigned[0] = 0

    if jobs > 1 and len(firsts) > 1:
        results = _parallel_subtrees(g, t, k, firsts, budget, jobs)
    else:
        results = (_run_subtree(searcher, first, budget) for first in firsts)

    total = 0
    timed_out = False
    for res in results:
        total += res.nodes
        if res.status == "colored":
            bad = verify(g, res.coloring)
            assert not bad, f"search produced an invalid coloring: {bad[0]}"
            return DecideResult("colored", res.coloring, total)
        if res.status == "timeout":
            timed_out = True
    return DecideResult("timeout" if timed_out else "infeasible", nodes=total)


def _subtree_task(args):
    n, edges, t, k, first_index, max_nodes, wall_limit = args
    g = Graph(n, edges)
    searcher = _Searcher(g, t, k)
    base = tuple(range(1, t + 1))
    searcher.assigned[0] = label_mask(base)
    firsts = list(searcher.candidates(1, t))
    searcher.assigned[0] = 0
    res = _run_subtree(searcher, firsts[first_index],
                       SearchBudget(max_nodes, wall_limit))
    labels = dict(res.coloring.labels) if res.coloring else None
    return res.status, labels, res.nodes


def _parallel_subtrees(g, t, k, firsts, budget, jobs):
    from multiprocessing import Pool

    args = [(g.n, g.edges(), t, k, i, budget.max_nodes, budget.wall_limit)
            for i in range(len(firsts))]
    with Pool(processes=jobs) as pool:
        for status, labels, nodes in pool.imap(_subtree_task, args):
            coloring = Coloring(t, k, labels) if labels is not None else None
            yield DecideResult(status, coloring, nodes)


def tau(g: Graph, t: int, budget: SearchBudget = None, jobs: int = 1) -> TauResult:
    """The tone chromatic number by upward search from the best certificate.

    Starts at the largest applicable lower bound and increments k until the
    decision search succeeds; the infeasibility evidence for value-1 is the
    starting certificate (when the first k works) or the exhausted search.
    """
    if g.n == 0:
        return TauResult("resolved", value=0, coloring=Coloring(t, 0))
    cert = best_lower_bound(g, t)
    k0 = max(t, cert.bound)
    total = 0
    last_refuted = None
    for k in range(k0, g.n * t + 1):
        res = exact_decide(g, t, k, budget, jobs)
        total += res.nodes
        if res.status == "colored":
            if last_refuted is None:
                lower = cert
            else:
                lower = ExhaustionProof(k - 1, last_refuted)
            return TauResult("resolved", value=k, coloring=res.coloring,
                             lower_certificate=lower, lower_bound=k, nodes=total)
        if res.status == "timeout":
            return TauResult("timeout", lower_bound=k, nodes=total)
        last_refuted = res.nodes
    raise AssertionError("search exceeded the trivial palette n*t")
