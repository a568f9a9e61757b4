"""Deliberately naive reference implementations used only by the tests."""

from __future__ import annotations

from itertools import combinations, product

from ordram.graphs import OrderedGraph


def brute_contains(host_edges: set, host_n: int, pat_edges: set, pat_n: int):
    """First strictly increasing map (lexicographic) sending every pattern edge to a host edge."""
    for f in combinations(range(host_n), pat_n):
        if all(tuple(f[x] for x in e) in host_edges for e in pat_edges):
            return f
    return None


def brute_interval_chromatic(g: OrderedGraph) -> int:
    """Try every cut set, smallest number of intervals first."""
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for cuts in combinations(range(1, g.n), k - 1):
            bounds = (0, *cuts, g.n)
            part = {}
            for i in range(k):
                for v in range(bounds[i], bounds[i + 1]):
                    part[v] = i
            if all(part[u] != part[v] for u, v in g.edges):
                return k
    raise AssertionError("unreachable")


def brute_mat_contains(host_ones: set, host_dims, pat_ones: set, pat_dims):
    """First tuple of per-axis index selections (lexicographic) realising the pattern."""
    for sel in product(*(combinations(range(h), s) for h, s in zip(host_dims, pat_dims))):
        if all(tuple(sel[a][o[a]] for a in range(len(o))) in host_ones for o in pat_ones):
            return sel
    return None


def brute_has_free_coloring(n: int, d: int, pat_edges: set, pat_n: int) -> bool:
    """Enumerate every 2-colouring of the d-subsets of ``0..n-1``."""
    subsets = list(combinations(range(n), d))
    for mask in range(1 << len(subsets)):
        red = {e for i, e in enumerate(subsets) if not mask >> i & 1}
        blue = set(subsets) - red
        if brute_contains(red, n, pat_edges, pat_n) is None and brute_contains(blue, n, pat_edges, pat_n) is None:
            return True
    return False


def brute_ramsey(pat_edges: set, pat_n: int, d: int = 2, max_n: int = 6) -> int | None:
    for n in range(pat_n, max_n + 1):
        if not brute_has_free_coloring(n, d, pat_edges, pat_n):
            return n
    return None


def reverse_bits(i: int, bits: int) -> int:
    s = bin(i)[2:].zfill(bits)
    return int(s[::-1], 2)


def brute_discrepancy(perm) -> float:
    """Direct count over every pair of nonempty intervals (one membership table per I)."""
    n = len(perm)
    best = 0.0
    for a in range(n):
        inside = [0] * n
        for b in range(a + 1, n + 1):
            inside[perm[b - 1]] = 1
            for c in range(n):
                hit = 0
                for e in range(c + 1, n + 1):
                    hit += inside[e - 1]
                    best = max(best, abs(hit - (b - a) * (e - c) / n))
    return best
