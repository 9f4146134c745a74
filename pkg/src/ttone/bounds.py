"""Closed-form lower bounds and counting-argument infeasibility certificates."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb, isqrt

from .graphs import Graph, effective_diameter


@dataclass(frozen=True)
class Certificate:
    """A machine-checkable lower-bound witness for the tone chromatic number."""

    kind: str
    parameters: dict
    bound: int

    def to_json_line(self) -> str:
        payload = {"kind": self.kind, "parameters": self.parameters, "bound": self.bound}
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _least_k(pred, lo: int = 0) -> int:
    """Smallest k >= lo with pred(k), for predicates monotone in k."""
    k = lo
    step = 1
    while not pred(k):
        k += step
        step *= 2
    hi, lo2 = k, max(lo, k - step // 2)
    while lo2 < hi:
        mid = (lo2 + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo2 = mid + 1
    return hi


def star_lower(max_degree: int) -> int:
    """Least k with C(k-2, 2) >= max_degree; the 2-tone star lower bound.

    Integer arithmetic only: the square-root form of this bound is exactly
    the positive root of the binomial inequality.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    return _least_k(lambda k: comb(max(k - 2, 0), 2) >= max_degree, lo=2)


def path_tau(n: int, t: int) -> int:
    """Tone chromatic number of the n-vertex path: sum of max(0, t - C(i,2))."""
    if n < 1 or t < 1:
        raise ValueError("need n, t >= 1")
    return sum(max(0, t - comb(i, 2)) for i in range(n))


def c4_lower(t: int) -> int:
    """Tone chromatic number of the 4-cycle: 4t - 2."""
    if t < 1:
        raise ValueError("need t >= 1")
    return 4 * t - 2


def p2p3_lower(t: int) -> int:
    """Tone chromatic number of the 2x3 grid, 6t - 10, valid for t >= 5."""
    if t < 5:
        raise ValueError("formula only holds for t >= 5")
    return 6 * t - 10


def cycle_counting_t3(n: int):
    """Counting certificate that the n-cycle needs 9 colors at tone 3.

    Applies in the long-cycle regime (n >= 8) when n = 3s+1: an 8-coloring
    would force at least 2s+6 monochromatic distance-2 pairs, but the cycle
    has only 3s+1 such pairs, each able to host one shared color.  Fires
    exactly for n in {10, 13}; returns None otherwise.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if n < 8 or (n - 1) % 3 != 0:
        return None
    s = (n - 1) // 3
    forced = 2 * s + 6
    pairs = 3 * s + 1
    if forced <= pairs:
        return None
    return Certificate(
        "CycleCountingT3",
        {"n": n, "s": s, "forced_pairs": forced, "distance2_pairs": pairs},
        9,
    )


def c9_t5_feasible_tuple(distance2_cap: int = 9):
    """Search for color-multiplicity counts compatible with a 16-color,
    tone-5 coloring of the 9-cycle.

    Unknowns (s1, s2, s3', s3'', s4) count colors used on exactly i vertices,
    with the 3-vertex colors split by whether some pair sits at distance 2.
    Constraints: 16 colors total, 45 label slots, distance-2 pair capacity
    (3*s4 + s3' <= cap, default 9), distance-3 pair capacity
    (s3' + 3*s3'' <= 18).  Returns a satisfying tuple or None.
    """
    for s4 in range(17):
        for s3p in range(17 - s4):
            if 3 * s4 + s3p > distance2_cap:
                continue
            for s3pp in range(17 - s4 - s3p):
                if s3p + 3 * s3pp > 18:
                    continue
                for s2 in range(17 - s4 - s3p - s3pp):
                    s1 = 16 - s4 - s3p - s3pp - s2
                    if s1 + 2 * s2 + 3 * (s3p + s3pp) + 4 * s4 == 45:
                        return (s1, s2, s3p, s3pp, s4)
    return None


def c9_t5_counting() -> Certificate:
    """Certificate that the 9-cycle needs 17 colors at tone 5.

    Exhaustively confirms that no nonnegative multiplicity tuple satisfies
    the counting constraints a 16-color coloring would impose.
    """
    witness = c9_t5_feasible_tuple()
    if witness is not None:
        raise AssertionError(f"counting system unexpectedly feasible: {witness}")
    return Certificate(
        "C9T5Counting",
        {"colors": 16, "label_slots": 45, "distance2_cap": 9, "distance3_cap": 18},
        17,
    )


def h_t_bounds(t: int) -> tuple:
    """2-tone bounds for the fat triangle: (lower, upper) palette sizes.

    lower: least k with C(k,2) >= 3t (the 3t degree-2 vertices need distinct
    2-sets); upper: least k with C(k,2) - C(6,2) >= 3t (degree-2 vertices
    additionally avoid all 2-sets drawn from the six hub colors).
    """
    if t < 1:
        raise ValueError("need t >= 1")
    lower = _least_k(lambda k: comb(k, 2) >= 3 * t, lo=2)
    upper = _least_k(lambda k: comb(k, 2) - comb(6, 2) >= 3 * t, lo=6)
    return lower, upper


def greedy_2tone_palette(delta: int) -> int:
    """ceil((2 + sqrt 2) * delta), exactly: greedy always succeeds here."""
    sq = isqrt(2 * delta * delta)
    return 2 * delta + (sq if sq * sq == 2 * delta * delta else sq + 1)


def _iroot(x: int, r: int) -> int:
    """Floor r-th root of a nonnegative integer."""
    if x == 0:
        return 0
    guess = max(1, int(round(x ** (1.0 / r))))
    while guess ** r > x:
        guess -= 1
    while (guess + 1) ** r <= x:
        guess += 1
    return guess


def degenerate_palette(degeneracy: int, t: int, delta: int) -> int:
    """k*t + ceil(k*t^2 * delta^(1 - 1/t)) for a k-degenerate graph, exactly."""
    k = degeneracy
    power = (k * t * t) ** t * delta ** (t - 1)
    root = _iroot(power, t)
    if root ** t < power:
        root += 1
    return k * t + root


# ---------------------------------------------------------------------------
# Dispatch over a graph
# ---------------------------------------------------------------------------

def contains_c4(g: Graph) -> bool:
    """Exact 4-cycle detection: two vertices with two common neighbors."""
    rows = [0] * g.n
    for u in range(g.n):
        for v in g.adj[u]:
            rows[u] |= 1 << v
    for u in range(g.n):
        ru = rows[u]
        for v in range(u + 1, g.n):
            if (ru & rows[v]).bit_count() >= 2:
                return True
    return False


def is_cycle_graph(g: Graph) -> bool:
    """Connected and 2-regular."""
    if g.n < 3 or any(g.degree(v) != 2 for v in range(g.n)):
        return False
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def certificates(g: Graph, t: int) -> list:
    """Every applicable lower-bound certificate for (g, t)."""
    if g.n < 1 or t < 1:
        raise ValueError("need a nonempty graph and t >= 1")
    out = []
    if t == 2:
        delta = g.max_degree()
        out.append(Certificate("Star", {"max_degree": delta}, star_lower(delta)))
    if contains_c4(g):
        out.append(Certificate("C4Subgraph", {"t": t}, c4_lower(t)))
    # a longest shortest path is a path subgraph; its formula value stabilizes
    # once C(i,2) >= t, so a capped eccentricity scan suffices
    cap = _least_k(lambda i: comb(i, 2) >= t)
    n_path = effective_diameter(g, cap) + 1
    out.append(Certificate(
        "PathFormula", {"path_vertices": n_path, "t": t}, path_tau(n_path, t)))
    if is_cycle_graph(g):
        if t == 3:
            cert = cycle_counting_t3(g.n)
            if cert is not None:
                out.append(cert)
        if t == 5 and g.n == 9:
            out.append(c9_t5_counting())
    return out


def best_lower_bound(g: Graph, t: int) -> Certificate:
    """The certificate with the largest bound (first of that bound wins)."""
    certs = certificates(g, t)
    return max(certs, key=lambda c: c.bound)
