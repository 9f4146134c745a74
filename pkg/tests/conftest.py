"""Shared strategies and brute-force oracles for the suite."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from ttone.graphs import Graph


@st.composite
def graphs(draw, max_n=8, min_n=1):
    """Random simple graph with edge density drawn uniformly."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    p = draw(st.floats(0.0, 1.0))
    picks = draw(st.lists(st.floats(0.0, 1.0), min_size=len(pairs),
                          max_size=len(pairs)))
    edges = [e for e, r in zip(pairs, picks) if r < p]
    return Graph(n, edges)


def brute_mad(g: Graph) -> Fraction:
    """Exhaustive max over nonempty vertex subsets of 2|E(S)|/|S|."""
    best = Fraction(0)
    edges = g.edges()
    for r in range(1, g.n + 1):
        for sub in combinations(range(g.n), r):
            s = set(sub)
            inside = sum(1 for u, v in edges if u in s and v in s)
            best = max(best, Fraction(2 * inside, r))
    return best


def sample_small_graphs(target=500, seed=20250810, max_n=7, reps=25):
    """Deterministic sample of distinct small graphs, one per degree
    sequence first, then filled with further distinct graphs."""
    rng = random.Random(seed)
    by_seq = {}
    extras = []
    seen = set()
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for m in range(len(pairs) + 1):
            for _ in range(reps):
                rng.shuffle(pairs)
                edges = tuple(sorted(pairs[:m]))
                if (n, edges) in seen:
                    continue
                seen.add((n, edges))
                g = Graph(n, edges)
                seq = (n, tuple(sorted(g.degree(v) for v in range(n))))
                if seq not in by_seq:
                    by_seq[seq] = g
                else:
                    extras.append(g)
    out = list(by_seq.values())
    for g in extras:
        if len(out) >= target:
            break
        out.append(g)
    return out
