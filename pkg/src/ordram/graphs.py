"""Ordered graphs and hypergraphs, order-preserving containment, graph operations.

Vertices are always ``0..n-1`` in their linear order.  Edges of an
:class:`OrderedGraph` are pairs ``(u, v)`` with ``u < v``; edges of an
:class:`OrderedHypergraph` are strictly increasing ``d``-tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from .patterns import PatternND


class StructureError(ValueError):
    """Raised when an ordered structure or an operation argument is malformed."""


@dataclass(frozen=True)
class OrderedGraph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise StructureError(f"vertex count must be nonnegative, got {self.n}")
        norm = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if not 0 <= u < v <= self.n - 1:
                raise StructureError(f"edge {e!r} is not a pair u < v inside 0..{self.n - 1}")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> OrderedGraph:
        pairs = [tuple(e) for e in edges]
        if len(set(pairs)) != len(pairs):
            raise StructureError("duplicate edges")
        return cls(n, frozenset(pairs))  # type: ignore[arg-type]

    @classmethod
    def empty(cls, n: int) -> OrderedGraph:
        return cls(n)

    @property
    def d(self) -> int:
        return 2

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> list[int]:
        """Neighbourhoods as bitmasks."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, obj: dict) -> OrderedGraph:
        if "d" in obj and obj["d"] != 2:
            raise StructureError("graph file has d != 2; load it as a hypergraph")
        return cls.from_edges(int(obj["n"]), obj.get("edges", []))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __repr__(self) -> str:
        return f"OrderedGraph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class OrderedHypergraph:
    n: int
    d: int
    edges: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.d < 2:
            raise StructureError(f"uniformity must be at least 2, got {self.d}")
        if self.n < 0:
            raise StructureError("vertex count must be nonnegative")
        norm = set()
        for e in self.edges:
            t = tuple(int(x) for x in e)
            if len(t) != self.d or any(a >= b for a, b in zip(t, t[1:])):
                raise StructureError(f"edge {e!r} is not a strictly increasing {self.d}-tuple")
            if t[0] < 0 or t[-1] >= self.n:
                raise StructureError(f"edge {e!r} out of range 0..{self.n - 1}")
            norm.add(t)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, d: int, edges: Iterable[Sequence[int]]) -> OrderedHypergraph:
        tuples = [tuple(e) for e in edges]
        if len(set(tuples)) != len(tuples):
            raise StructureError("duplicate edges")
        return cls(n, d, frozenset(tuples))

    @classmethod
    def from_graph(cls, g: OrderedGraph) -> OrderedHypergraph:
        return cls(g.n, 2, frozenset(g.edges))

    def sorted_edges(self) -> list[tuple[int, ...]]:
        return sorted(self.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, obj: dict) -> OrderedHypergraph:
        return cls.from_edges(int(obj["n"]), int(obj["d"]), obj.get("edges", []))

    def __repr__(self) -> str:
        return f"OrderedHypergraph(n={self.n}, d={self.d}, edges={self.sorted_edges()})"


def load_structure(obj: dict) -> OrderedGraph | OrderedHypergraph:
    """Parse a graph or hypergraph JSON object (hypergraphs carry ``d``)."""
    if obj.get("d", 2) == 2:
        return OrderedGraph.from_json(obj)
    return OrderedHypergraph.from_json(obj)


@dataclass(frozen=True)
class SpreadSpec:
    gaps: tuple[int, ...]

    def __post_init__(self) -> None:
        gaps = tuple(int(k) for k in self.gaps)
        if any(k < 0 for k in gaps):
            raise StructureError("spread gaps must be nonnegative")
        object.__setattr__(self, "gaps", gaps)

    def head(self) -> int:
        h = 1
        while h - 1 < len(self.gaps) and self.gaps[h - 1] == 0:
            h += 1
        return h

    def tail(self) -> int:
        t = 1
        while t - 1 < len(self.gaps) and self.gaps[len(self.gaps) - t] == 0:
            t += 1
        return t


# --------------------------------------------------------------------------
# containment


def _embed_graph(
    host_adj: Sequence[int],
    host_n: int,
    pattern: OrderedGraph,
    pins: dict[int, int] | None = None,
) -> tuple[int, ...] | None:
    """Lexicographically smallest increasing embedding of ``pattern`` into the host.

    ``pins`` forces selected pattern vertices onto given host vertices.
    """
    k = pattern.n
    if k > host_n:
        return None
    if k == 0:
        return ()
    earlier: list[list[int]] = [[] for _ in range(k)]
    for u, v in pattern.edges:
        earlier[v].append(u)
    pins = pins or {}
    # upper limit for each pattern vertex given later pins and the host size
    hi = [0] * k
    nxt = host_n
    for i in range(k - 1, -1, -1):
        if i in pins:
            if pins[i] >= nxt:
                return None
            hi[i] = pins[i]
            nxt = pins[i]
        else:
            hi[i] = nxt - 1
            nxt = nxt - 1
    f = [0] * k

    def rec(i: int, lo: int) -> bool:
        if i == k:
            return True
        mask = ((1 << (hi[i] + 1)) - 1) & ~((1 << lo) - 1)
        for j in earlier[i]:
            mask &= host_adj[f[j]]
        if i in pins:
            mask &= 1 << pins[i]
        while mask:
            low = mask & -mask
            x = low.bit_length() - 1
            f[i] = x
            if rec(i + 1, x + 1):
                return True
            mask ^= low
        return False

    return tuple(f) if rec(0, 0) else None


def _embed_hyper(
    host_edges: frozenset | set,
    host_n: int,
    pattern: OrderedHypergraph,
    pins: dict[int, int] | None = None,
) -> tuple[int, ...] | None:
    k = pattern.n
    if k > host_n:
        return None
    if k == 0:
        return ()
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(k)]
    for e in pattern.edges:
        closing[e[-1]].append(e)
    pins = pins or {}
    hi = [0] * k
    nxt = host_n
    for i in range(k - 1, -1, -1):
        if i in pins:
            if pins[i] >= nxt:
                return None
            hi[i] = nxt = pins[i]
        else:
            hi[i] = nxt = nxt - 1
    f = [0] * k

    def rec(i: int, lo: int) -> bool:
        if i == k:
            return True
        cands = (pins[i],) if i in pins else range(lo, hi[i] + 1)
        for x in cands:
            if x < lo or x > hi[i]:
                continue
            f[i] = x
            if all(tuple(f[y] for y in e) in host_edges for e in closing[i]):
                if rec(i + 1, x + 1):
                    return True
        return False

    return tuple(f) if rec(0, 0) else None


def contains(host: OrderedGraph, pattern: OrderedGraph) -> tuple[bool, tuple[int, ...] | None]:
    """Order-preserving containment of ``pattern`` in ``host``.

    Returns ``(True, witness)`` with the lexicographically smallest strictly
    increasing vertex map, or ``(False, None)``.
    """
    if isinstance(host, OrderedHypergraph) or isinstance(pattern, OrderedHypergraph):
        return contains_hyper(_as_hyper(host), _as_hyper(pattern))
    w = _embed_graph(host.adjacency(), host.n, pattern)
    return (w is not None, w)


def contains_hyper(
    host: OrderedHypergraph, pattern: OrderedHypergraph
) -> tuple[bool, tuple[int, ...] | None]:
    if host.d != pattern.d:
        raise StructureError(f"uniformity mismatch: host d={host.d}, pattern d={pattern.d}")
    w = _embed_hyper(host.edges, host.n, pattern)
    return (w is not None, w)


def _as_hyper(s: OrderedGraph | OrderedHypergraph) -> OrderedHypergraph:
    return s if isinstance(s, OrderedHypergraph) else OrderedHypergraph.from_graph(s)


# --------------------------------------------------------------------------
# operations


def mirror(g: OrderedGraph | OrderedHypergraph) -> OrderedGraph | OrderedHypergraph:
    n = g.n
    if isinstance(g, OrderedHypergraph):
        return OrderedHypergraph(n, g.d, frozenset(tuple(sorted(n - 1 - x for x in e)) for e in g.edges))
    return OrderedGraph(n, frozenset((n - 1 - v, n - 1 - u) for u, v in g.edges))


def ordered_sum(g: OrderedGraph, h: OrderedGraph) -> OrderedGraph:
    """``g + h``: a copy of ``g`` followed by a copy of ``h``."""
    s = g.n
    return OrderedGraph(g.n + h.n, g.edges | {(u + s, v + s) for u, v in h.edges})


def add_isolated(g: OrderedGraph, side: str = "right") -> OrderedGraph:
    if side == "right":
        return OrderedGraph(g.n + 1, g.edges)
    if side == "left":
        return OrderedGraph(g.n + 1, frozenset((u + 1, v + 1) for u, v in g.edges))
    raise StructureError(f"side must be 'left' or 'right', got {side!r}")


def spread_positions(n: int, s: SpreadSpec) -> list[int]:
    if len(s.gaps) != max(n - 1, 0):
        raise StructureError(f"spread needs {max(n - 1, 0)} gaps, got {len(s.gaps)}")
    pos = [0] * n
    for i in range(1, n):
        pos[i] = pos[i - 1] + 1 + s.gaps[i - 1]
    return pos


def spread(g: OrderedGraph, s: SpreadSpec) -> OrderedGraph:
    """Insert ``s.gaps[i]`` isolated vertices between vertex ``i`` and ``i + 1``."""
    pos = spread_positions(g.n, s)
    return OrderedGraph(g.n + sum(s.gaps), frozenset((pos[u], pos[v]) for u, v in g.edges))


def uniform_spread(g: OrderedGraph, k: int) -> OrderedGraph:
    return spread(g, SpreadSpec((k,) * max(g.n - 1, 0)))


def append_pendant_edge(g: OrderedGraph) -> OrderedGraph:
    if g.n < 1:
        raise StructureError("cannot append a pendant edge to the empty graph")
    return OrderedGraph(g.n + 1, g.edges | {(g.n - 1, g.n)})


def interval_chromatic_number(g: OrderedGraph) -> int:
    """Fewest consecutive intervals, each independent, covering ``0..n-1``.

    Greedy: keep growing the current interval until the next vertex has a
    neighbour inside it.
    """
    if g.n == 0:
        return 0
    back = [0] * g.n
    for u, v in g.edges:
        back[v] |= 1 << u
    count, start = 1, 0
    for v in range(g.n):
        if back[v] >> start:
            count += 1
            start = v
    return count


def is_valid_split(g: OrderedGraph, split: int) -> bool:
    if not 1 <= split <= g.n - 1:
        return False
    return all(u < split <= v for u, v in g.edges)


def valid_splits(g: OrderedGraph) -> list[int]:
    return [s for s in range(1, g.n) if is_valid_split(g, s)]


def default_split(g: OrderedGraph) -> int:
    splits = valid_splits(g)
    if not splits:
        raise StructureError(f"{g!r} is not interval 2-chromatic at any split")
    return splits[0]


def matrix_of_graph(g: OrderedGraph, split: int | None = None) -> PatternND:
    """Associated 0-1 matrix: rows are the first interval, columns the second."""
    from .patterns import PatternND

    if split is None:
        split = default_split(g)
    if not is_valid_split(g, split):
        raise StructureError(f"split {split} does not separate every edge of {g!r}")
    return PatternND((split, g.n - split), frozenset((u, v - split) for u, v in g.edges))


def graph_of_matrix(p: PatternND) -> OrderedGraph:
    if p.d != 2:
        raise StructureError("graph_of_matrix needs a 2-dimensional pattern; use hypergraph_of_tensor")
    r, c = p.dims
    return OrderedGraph(r + c, frozenset((i, r + j) for i, j in p.ones))


def hypergraph_of_tensor(p: PatternND) -> OrderedHypergraph:
    """d-partite d-uniform ordered hypergraph of a d-dimensional 0-1 matrix."""
    offs = [0]
    for s in p.dims[:-1]:
        offs.append(offs[-1] + s)
    return OrderedHypergraph(
        sum(p.dims), p.d, frozenset(tuple(o + x for o, x in zip(offs, one)) for one in p.ones)
    )


def all_graphs(n: int) -> Iterable[OrderedGraph]:
    """Every ordered graph on ``n`` vertices (``2^(n choose 2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield OrderedGraph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
