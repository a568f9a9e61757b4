"""Named ordered graphs, hypergraphs and lower-bound colourings.

Every colouring generator re-checks its output with ``is_free`` before
returning it, so each construction doubles as a machine-checked proof of
the lower bound it is meant to give.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from .graphs import (
    OrderedGraph,
    OrderedHypergraph,
    StructureError,
    append_pendant_edge,
    graph_of_matrix,
    ordered_sum,
    uniform_spread,
)
from .patterns import PatternND
from .ramsey import BLUE, RED, Certificate, EdgeColoring, is_free_both, verify_certificate


class ConstructionError(ValueError):
    pass


# --------------------------------------------------------------------------
# graphs


def monotone_path(n: int) -> OrderedGraph:
    if n < 1:
        raise ConstructionError("monotone path needs n >= 1")
    return OrderedGraph.from_edges(n, [(j, j + 1) for j in range(n - 1)])


def alternating_cycle(size: int) -> OrderedGraph:
    """Interval 2-chromatic cycle: ``a_1 < ... < a_k < b_k < ... < b_1``.

    ``a_i`` joins ``b_j`` when ``|i - j| = 1``, plus ``a_1 b_1`` and ``a_k b_k``.
    """
    if size % 2 or size < 4:
        raise ConstructionError("alternating cycle needs an even size >= 4")
    k = size // 2

    def a(i: int) -> int:
        return i - 1

    def b(j: int) -> int:
        return 2 * k - j

    edges = {(a(1), b(1)), (a(k), b(k))}
    for i in range(1, k + 1):
        for j in (i - 1, i + 1):
            if 1 <= j <= k:
                edges.add((a(i), b(j)))
    g = OrderedGraph.from_edges(size, sorted(edges))
    if not _is_cycle(g):
        raise AssertionError("alternating cycle construction is not a cycle")
    return g


def _is_cycle(g: OrderedGraph) -> bool:
    if any(deg != 2 for deg in g.degrees()) or len(g.edges) != g.n:
        return False
    adj = g.adjacency()
    seen, stack = {0}, [0]
    while stack:
        v = stack.pop()
        for w in range(g.n):
            if adj[v] >> w & 1 and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def nested_matching(m: int) -> OrderedGraph:
    """``m`` nested edges ``(j, 2m-1-j)`` on ``2m`` vertices."""
    if m < 1:
        raise ConstructionError("nested matching needs m >= 1")
    return OrderedGraph.from_edges(2 * m, [(j, 2 * m - 1 - j) for j in range(m)])


def centered_matching(n: int) -> OrderedGraph:
    """Edges ``(i, n - i)`` for ``i = 1..(n-1)/2`` on vertices ``0..n`` (vertex 0 stays isolated)."""
    if n < 3 or n % 2 == 0:
        raise ConstructionError("centered matching needs an odd n >= 3")
    return OrderedGraph.from_edges(n + 1, [(i, n - i) for i in range(1, (n - 1) // 2 + 1)])


def _log2_exact(n: int) -> int:
    if n < 1 or n & (n - 1):
        raise ConstructionError(f"van der Corput permutation is only defined here for powers of two, got {n}")
    return n.bit_length() - 1


def vdc_permutation(n: int) -> tuple[int, ...]:
    """Bit reversal on ``log2(n)`` bits."""
    bits = _log2_exact(n)
    return tuple(int(format(i, f"0{bits}b")[::-1], 2) if bits else 0 for i in range(n))


def vdc_matching(n: int) -> OrderedGraph:
    """Left vertex ``i`` joined to right vertex ``n + pi(i)``."""
    pi = vdc_permutation(n)
    return OrderedGraph.from_edges(2 * n, [(i, n + pi[i]) for i in range(n)])


def discrepancy(perm: tuple[int, ...] | list[int]) -> float:
    """``max | |pi(I) & J| - |I||J|/n |`` over all pairs of intervals ``I, J``."""
    n = len(perm)
    counts = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i, p in enumerate(perm):
        counts[i + 1, p + 1] = 1
    counts = counts.cumsum(0).cumsum(1)  # counts[a, c] = #{i < a : pi(i) < c}
    idx = np.arange(n + 1)
    best = 0.0
    for a in range(n + 1):
        for b in range(a + 1, n + 1):
            # all J = [c, e) at once
            row = counts[b] - counts[a]
            inside = row[None, :] - row[:, None]  # [c, e]
            length = idx[None, :] - idx[:, None]
            mask = length > 0
            dev = np.abs(inside - (b - a) * length / n)[mask]
            if dev.size:
                best = max(best, float(dev.max()))
    return best


def blowup_matching(m: OrderedGraph, b: int) -> OrderedGraph:
    """Each vertex becomes an interval of ``b`` vertices, each edge ``b`` nested edges."""
    if b < 1:
        raise ConstructionError("blow-up factor must be positive")
    if any(deg != 1 for deg in m.degrees()):
        raise ConstructionError("blowup_matching needs a perfect matching")
    edges = [(u * b + i, v * b + b - 1 - i) for u, v in m.sorted_edges() for i in range(b)]
    return OrderedGraph.from_edges(m.n * b, edges)


def staircase_path(k: int) -> OrderedGraph:
    """Alternating path taken from outside sources: graph of the ``k x k`` staircase matrix.

    Ones at ``(i, i)`` and ``(i + 1, i)``.  Not defined in the source
    material of this package; kept for comparison experiments only.
    """
    if k < 1:
        raise ConstructionError("staircase needs k >= 1")
    ones = {(i, i) for i in range(k)} | {(i + 1, i) for i in range(k - 1)}
    return graph_of_matrix(PatternND((k, k), frozenset(ones)))


# --------------------------------------------------------------------------
# hypergraphs


def tight_hyperpath(n: int, d: int) -> OrderedHypergraph:
    if d < 2 or n < d:
        raise ConstructionError("tight hyperpath needs d >= 2 and n >= d")
    return OrderedHypergraph.from_edges(n, d, [tuple(range(j, j + d)) for j in range(n - d + 1)])


def alternating_order(n: int, d: int) -> tuple[int, ...]:
    """Path vertices listed left to right: ``0, d, 2d, ..., 1, d+1, ...``."""
    if d < 2 or n % d:
        raise ConstructionError("alternating ordering needs d >= 2 dividing n")
    return tuple(r + d * q for r in range(d) for q in range(n // d))


def alternating_hyperpath(n: int, d: int) -> OrderedHypergraph:
    """The tight hyperpath laid out in the alternating d-partite order."""
    order = alternating_order(n, d)
    pos = {v: p for p, v in enumerate(order)}
    path = tight_hyperpath(n, d)
    return OrderedHypergraph.from_edges(n, d, [tuple(sorted(pos[v] for v in e)) for e in path.sorted_edges()])


def hyperpath_tensor(n: int, d: int) -> PatternND:
    """Staircase walk in ``[n/d]^d`` from the origin, step ``j`` advancing axis ``(j-1) mod d``.

    It stops at the far corner, which takes ``n - d`` steps, so the walk
    has ``n - d + 1`` ones (one per hyperedge of the path).
    """
    if d < 2 or n % d or n < d:
        raise ConstructionError("hyperpath tensor needs d >= 2 dividing n")
    m = n // d
    x = [0] * d
    ones = [tuple(x)]
    for j in range(1, n - d + 1):
        x[(j - 1) % d] += 1
        ones.append(tuple(x))
    assert ones[-1] == (m - 1,) * d
    return PatternND((m,) * d, frozenset(ones))


# --------------------------------------------------------------------------
# colourings


def _checked(col: EdgeColoring, target: Any, what: str) -> EdgeColoring:
    v = is_free_both(col, target)
    if not v.free:
        raise ConstructionError(f"{what}: color {v.color} contains the target at {v.embedding}")
    return col


FIG1_TARGET_EDGES = ((1, 2), (3, 4))
FIG2_TARGET_EDGES = ((0, 1), (4, 5))


def fig1_target() -> OrderedGraph:
    return OrderedGraph.from_edges(6, FIG1_TARGET_EDGES)


def fig2_target() -> OrderedGraph:
    return OrderedGraph.from_edges(6, FIG2_TARGET_EDGES)


def fig1_coloring() -> EdgeColoring:
    """K_7: red triangle on {1,2,3}, blue triangle on {3,4,5}; every other edge red."""
    blue = {(3, 4), (3, 5), (4, 5)}
    col = EdgeColoring.from_function(7, 2, lambda e: BLUE if e in blue else RED)
    return _checked(col, fig1_target(), "fig1")


def fig2_coloring() -> EdgeColoring:
    """K_9: red clique on 0..4, blue clique on 4..8; every other edge red."""
    col = EdgeColoring.from_function(9, 2, lambda e: BLUE if e[0] >= 4 else RED)
    return _checked(col, fig2_target(), "fig2")


def block_product_coloring(blocks: int, blocksize: int, target: OrderedGraph | None = None) -> EdgeColoring:
    """``blocks`` consecutive intervals of ``blocksize``: red inside an interval, blue across."""
    if blocks < 1 or blocksize < 1:
        raise ConstructionError("blocks and blocksize must be positive")
    col = EdgeColoring.from_function(
        blocks * blocksize, 2, lambda e: RED if e[0] // blocksize == e[1] // blocksize else BLUE
    )
    return _checked(col, target, "block product") if target is not None else col


def _verified(cert: Certificate) -> EdgeColoring:
    if cert.kind not in ("lower-bound", "verified-coloring"):
        raise ConstructionError("need a coloring certificate")
    v = verify_certificate(cert)
    if not v.ok:
        raise ConstructionError(f"input certificate fails: {v.reason}")
    assert cert.coloring is not None
    return cert.coloring


def disjoint_union_coloring(cert_g: Certificate, cert_h: Certificate) -> EdgeColoring:
    """``G``-free colouring, one free vertex, then ``H``-free colouring; free of ``G + H``."""
    cg, ch = _verified(cert_g), _verified(cert_h)
    k, l = cg.n, ch.n
    gmap = dict(cg.items())
    hmap = dict(ch.items())

    def color(e: tuple[int, ...]) -> int:
        u, v = e
        if v < k:
            return gmap[(u, v)]
        if u > k:
            return hmap[(u - k - 1, v - k - 1)]
        return RED

    col = EdgeColoring.from_function(k + 1 + l, 2, color)
    return _checked(col, ordered_sum(cert_g.target, cert_h.target), "disjoint union")


def spread_blowup_coloring(cert_g: Certificate, k: int) -> EdgeColoring:
    """Vertex ``i`` of a ``G``-free colouring becomes an interval of ``k - 1`` vertices.

    Edges between intervals ``i < j`` take colour ``c(ij)``; edges inside an
    interval are red.  Free of the graph with ``k`` isolated vertices
    inserted between consecutive vertices of ``G``.
    """
    if k < 2:
        raise ConstructionError("spread blow-up needs k >= 2")
    c = _verified(cert_g)
    cmap = dict(c.items())
    s = k - 1

    def color(e: tuple[int, ...]) -> int:
        a, b = e[0] // s, e[1] // s
        return RED if a == b else cmap[(a, b)]

    col = EdgeColoring.from_function(c.n * s, 2, color)
    return _checked(col, uniform_spread(cert_g.target, k), "spread blow-up")


def pendant_lower_coloring(cert_g: Certificate, n: int | None = None) -> EdgeColoring:
    """``G``-free colouring on A, then ``n = v(G)`` more vertices B: red inside B, blue between A and B.

    Meant to be free of ``G`` plus a pendant edge at its right end.  The
    output is always re-checked; a ``ConstructionError`` reports graphs for
    which the construction does not work (it needs the copy's second-last
    vertex neighbour to land in A, which fails for some disconnected ``G``).
    """
    g = cert_g.target
    if n is None:
        n = g.n
    if n != g.n:
        raise ConstructionError("the B block must have v(G) vertices")
    if n < 2 or not any(v == g.n - 1 for _, v in g.edges):
        raise ConstructionError("needs v(G) >= 2 and a non-isolated last vertex")
    c = _verified(cert_g)
    cmap = dict(c.items())
    a = c.n

    def color(e: tuple[int, ...]) -> int:
        u, v = e
        if v < a:
            return cmap[(u, v)]
        return RED if u >= a else BLUE

    col = EdgeColoring.from_function(a + n, 2, color)
    return _checked(col, append_pendant_edge(g), "pendant edge")


# --------------------------------------------------------------------------
# registry for the command line


@dataclass(frozen=True)
class Generator:
    fn: Callable[..., Any]
    params: tuple[str, ...]
    help: str


GENERATORS: dict[str, Generator] = {
    "monotone-path": Generator(monotone_path, ("n",), "monotone path on n vertices"),
    "alternating-cycle": Generator(alternating_cycle, ("n",), "alternating cycle on n (even) vertices"),
    "nested-matching": Generator(nested_matching, ("m",), "m nested edges"),
    "centered-matching": Generator(centered_matching, ("n",), "edges (i, n-i) on 0..n, n odd"),
    "vdc-matching": Generator(vdc_matching, ("n",), "bit-reversal matching on 2n vertices"),
    "staircase-path": Generator(staircase_path, ("k",), "alternating path from the k x k staircase (external definition)"),
    "tight-hyperpath": Generator(tight_hyperpath, ("n", "d"), "tight d-uniform path"),
    "alternating-hyperpath": Generator(alternating_hyperpath, ("n", "d"), "tight path in alternating d-partite order"),
    "hyperpath-tensor": Generator(hyperpath_tensor, ("n", "d"), "d-dimensional matrix of the alternating hyperpath"),
    "fig1-coloring": Generator(fig1_coloring, (), "free coloring of K_7 for the first figure target"),
    "fig2-coloring": Generator(fig2_coloring, (), "free coloring of K_9 for the second figure target"),
    "fig1-target": Generator(fig1_target, (), "6-vertex graph with edges (1,2),(3,4)"),
    "fig2-target": Generator(fig2_target, (), "6-vertex graph with edges (0,1),(4,5)"),
    "block-product": Generator(block_product_coloring, ("blocks", "blocksize"), "red inside blocks, blue across"),
}


def generate(name: str, **params: int) -> Any:
    if name not in GENERATORS:
        raise ConstructionError(f"unknown construction {name!r}; choose from {', '.join(sorted(GENERATORS))}")
    gen = GENERATORS[name]
    missing = [p for p in gen.params if p not in params]
    if missing:
        raise ConstructionError(f"{name} needs parameters: {', '.join(missing)}")
    try:
        return gen.fn(*(int(params[p]) for p in gen.params))
    except StructureError as exc:
        raise ConstructionError(str(exc)) from exc
