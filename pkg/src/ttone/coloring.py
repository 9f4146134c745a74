"""Labels, colorings, the multi-tone distance verifier, and greedy extension."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb

from .graphs import Graph, distances_within


class StructuralError(ValueError):
    """Coloring is malformed (bad label size, color out of palette, bad id)."""


class ColoringError(RuntimeError):
    """Greedy coloring got stuck; .vertex names the blocked vertex."""

    def __init__(self, vertex: int):
        super().__init__(f"no label available for vertex {vertex}")
        self.vertex = vertex


def label_mask(label) -> int:
    """Bitmask of a label; color c occupies bit c-1."""
    m = 0
    for c in label:
        m |= 1 << (c - 1)
    return m


@dataclass
class Coloring:
    """A (possibly partial) assignment of t-sets from [1..k] to vertices."""

    t: int
    k: int
    labels: dict = field(default_factory=dict)

    def assign(self, v: int, label) -> None:
        self.labels[v] = tuple(sorted(label))

    def colors_used(self) -> set:
        used = set()
        for lab in self.labels.values():
            used.update(lab)
        return used

    def is_total(self, g: Graph) -> bool:
        return all(v in self.labels for v in range(g.n))

    def copy(self) -> "Coloring":
        return Coloring(self.t, self.k, dict(self.labels))

    def to_json(self) -> str:
        payload = {
            "t": self.t,
            "k": self.k,
            "labels": {str(v): list(lab) for v, lab in sorted(self.labels.items())},
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        try:
            payload = json.loads(text)
            t = int(payload["t"])
            k = int(payload["k"])
            labels = {int(v): tuple(sorted(map(int, lab)))
                      for v, lab in payload["labels"].items()}
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise StructuralError(f"bad coloring JSON: {exc}") from exc
        return cls(t, k, labels)


@dataclass(frozen=True)
class Violation:
    """A pair sharing at least as many colors as its distance allows."""

    u: int
    v: int
    distance: int
    shared: int


def check_structure(g: Graph, coloring: Coloring) -> None:
    """Raise StructuralError unless every assigned label is a valid t-set."""
    t, k = coloring.t, coloring.k
    if t < 1 or k < t:
        raise StructuralError(f"need k >= t >= 1, got t={t}, k={k}")
    for v, lab in coloring.labels.items():
        if not (0 <= v < g.n):
            raise StructuralError(f"label on unknown vertex {v}")
        if len(lab) != t or len(set(lab)) != t:
            raise StructuralError(f"vertex {v}: label {lab} is not a {t}-set")
        if lab[0] < 1 or lab[-1] > k:
            raise StructuralError(f"vertex {v}: label {lab} outside [1,{k}]")


def verify_partial(g: Graph, coloring: Coloring) -> list:
    """Violations among assigned pairs at distance <= t; empty list means ok."""
    check_structure(g, coloring)
    t = coloring.t
    masks = {v: label_mask(lab) for v, lab in coloring.labels.items()}
    bad = []
    for u in sorted(masks):
        mu = masks[u]
        for v, d in sorted(distances_within(g, u, t).items()):
            if v > u and v in masks:
                shared = (mu & masks[v]).bit_count()
                if shared >= d:
                    bad.append(Violation(u, v, d, shared))
    return bad


def verify(g: Graph, coloring: Coloring) -> list:
    """Violations of a total coloring; raises StructuralError if not total."""
    if not coloring.is_total(g):
        missing = next(v for v in range(g.n) if v not in coloring.labels)
        raise StructuralError(f"coloring is not total (vertex {missing} unassigned)")
    return verify_partial(g, coloring)


def is_valid(g: Graph, coloring: Coloring) -> bool:
    return not verify(g, coloring)


# ---------------------------------------------------------------------------
# Extension
# ---------------------------------------------------------------------------

def _constraints_at(g: Graph, partial: Coloring, v: int):
    """(mask, cap) pairs the label at v must respect: popcount(mask & L) <= cap."""
    cons = []
    for u, d in distances_within(g, v, partial.t).items():
        lab = partial.labels.get(u)
        if lab is not None:
            cons.append((label_mask(lab), d - 1))
    cons.sort(key=lambda mc: mc[1])
    return cons


def iter_available_labels(g: Graph, partial: Coloring, v: int, k=None):
    """Lexicographic stream of labels assignable to v without any violation.

    Depth-first over the colors not blocked by adjacent vertices, pruning a
    branch as soon as some distance constraint's sharing cap is exceeded.
    """
    if v in partial.labels:
        raise StructuralError(f"vertex {v} already assigned")
    if k is None:
        k = partial.k
    t = partial.t
    cons = _constraints_at(g, partial, v)
    forbidden = 0
    for mask, cap in cons:
        if cap == 0:
            forbidden |= mask
    allowed = [c for c in range(1, k + 1) if not (forbidden >> (c - 1)) & 1]
    tight = [(m, c) for m, c in cons if c > 0]
    caps = [c for _, c in tight]
    touches = []
    for c in allowed:
        bit = 1 << (c - 1)
        touches.append([i for i, (m, _) in enumerate(tight) if m & bit])
    counts = [0] * len(tight)
    chosen = []

    def walk(start):
        if len(chosen) == t:
            yield tuple(chosen)
            return
        for idx in range(start, len(allowed) - (t - len(chosen)) + 1):
            hit = touches[idx]
            if any(counts[i] >= caps[i] for i in hit):
                continue
            for i in hit:
                counts[i] += 1
            chosen.append(allowed[idx])
            yield from walk(idx + 1)
            chosen.pop()
            for i in hit:
                counts[i] -= 1

    yield from walk(0)


def available_labels(g: Graph, partial: Coloring, v: int, k=None) -> list:
    """All labels assignable to v, in lexicographic order."""
    return list(iter_available_labels(g, partial, v, k))


def can_extend_2tone(k: int, deg: int, second_count: int) -> bool:
    """Extension test for tone 2: C(k - 2*deg, 2) > second_count."""
    free = k - 2 * deg
    return (comb(free, 2) if free >= 2 else 0) > second_count


def greedy_extend(g: Graph, partial: Coloring, v: int, k=None):
    """Assign the lexicographically least available label to v.

    Returns the label, or None when no label is available (the partial
    coloring is left untouched in that case).
    """
    label = next(iter_available_labels(g, partial, v, k), None)
    if label is not None:
        partial.assign(v, label)
    return label


def greedy_color(g: Graph, t: int, k: int, order=None) -> Coloring:
    """Color vertices in the given order by greedy extension.

    Raises ColoringError naming the first stuck vertex.  For t=2 this always
    succeeds when k >= ceil((2+sqrt(2)) * max_degree).
    """
    if order is None:
        order = range(g.n)
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    coloring = Coloring(t, k)
    for v in order:
        if greedy_extend(g, coloring, v) is None:
            raise ColoringError(v)
    return coloring


def degeneracy_order(g: Graph) -> tuple:
    """(order, degeneracy): repeatedly strip a minimum-degree vertex and
    output the reverse removal order, so each vertex has at most
    `degeneracy` earlier neighbors."""
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    removal = []
    degeneracy = 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        degeneracy = max(degeneracy, deg[v])
        removal.append(v)
        alive.discard(v)
        for u in g.adj[v]:
            if u in alive:
                deg[u] -= 1
    return removal[::-1], degeneracy
