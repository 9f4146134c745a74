"""Seeded random instance generators for the sparse-class colorers and tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .graphs import Graph, mad


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph(n, edges)


def subdivide(g: Graph, times) -> Graph:
    """Replace each edge uv with a path of times(u, v) interior vertices."""
    edges = []
    nid = g.n
    for u, v in g.edges():
        prev = u
        for _ in range(times(u, v)):
            edges.append((prev, nid))
            prev = nid
            nid += 1
        edges.append((prev, v))
    return Graph(nid, edges)


def random_subdivided(rng: random.Random, n_base: int = 8,
                      extra_edges: int = 3) -> Graph:
    """A sparse graph with maximum average degree provably below 12/5.

    A random tree plus a few extra edges, subdivided in one of three modes:
    per-edge 2..6 interior vertices (long threads dominate), uniformly 3
    (every maximal thread has exactly three interior vertices), or uniformly
    2 (all short threads).  The uniform modes keep the density below 12/5
    for these bases; the mixed mode resamples with 5+ subdivisions in the
    rare case the exact check fails.
    """
    base = random_tree(rng, n_base)
    edges = set(base.edges())
    for _ in range(extra_edges):
        u, v = rng.randrange(n_base), rng.randrange(n_base)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    base = Graph(n_base, sorted(edges))
    mode = rng.random()
    if mode < 0.2:
        return subdivide(base, lambda u, v: 3)
    if mode < 0.4 and n_base >= 4:
        return subdivide(base, lambda u, v: 2)
    g = subdivide(base, lambda u, v: rng.randint(2, 6))
    if mad(g).fraction >= Fraction(12, 5):
        g = subdivide(base, lambda u, v: rng.randint(5, 7))
    return g


def random_maximal_outerplanar(rng: random.Random, n: int) -> Graph:
    """A random triangulation of an n-gon (maximal outerplanar graph)."""
    if n < 3:
        raise ValueError("need n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]

    def fill(lo, hi):
        if hi - lo < 2:
            return
        mid = rng.randint(lo + 1, hi - 1)
        if mid - lo > 1:
            edges.append((lo, mid))
        if hi - mid > 1:
            edges.append((mid, hi))
        fill(lo, mid)
        fill(mid, hi)

    fill(0, n - 1)
    return Graph(n, edges)


def random_apollonian(rng: random.Random, inserts: int) -> Graph:
    """A stacked triangulation: repeatedly subdivide a face with a new vertex."""
    edges = [(0, 1), (1, 2), (0, 2)]
    faces = [(0, 1, 2)]
    nid = 3
    for _ in range(inserts):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges.extend([(a, nid), (b, nid), (c, nid)])
        faces.extend([(a, b, nid), (a, c, nid), (b, c, nid)])
        nid += 1
    return Graph(nid, edges)
