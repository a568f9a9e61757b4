"""Extremal functions ``ex(dims, P)`` of forbidden 0-1 patterns.

``ex_exact`` is a deterministic branch-and-bound over cells in row-major
order (ones first).  A new one is always the lexicographically last one of
the partial host, and containment maps the pattern's ones monotonically in
lexicographic order, so the incremental check only has to look for copies
whose last one lands on the new cell.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .patterns import PatternND, mat_contains

DEFAULT_BUDGET = 20_000_000
DEFAULT_SPLIT = 6


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class ExResult:
    dims: tuple[int, ...]
    pattern: PatternND
    value: int
    witness: PatternND
    exact: bool
    nodes_explored: int = 0
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.witness.weight != self.value:
            raise ValueError(f"witness weight {self.witness.weight} != value {self.value}")
        if tuple(self.witness.dims) != tuple(self.dims):
            raise ValueError("witness dims do not match")
        if mat_contains(self.witness, self.pattern)[0]:
            raise ValueError("witness contains the forbidden pattern")

    def to_json(self) -> dict:
        return {
            "dims": list(self.dims),
            "pattern": self.pattern.to_json(),
            "value": self.value,
            "exact": self.exact,
            "witness": self.witness.to_json(),
            "nodes_explored": self.nodes_explored,
        }

    @classmethod
    def from_json(cls, obj: dict) -> ExResult:
        return cls(
            tuple(obj["dims"]),
            PatternND.from_json(obj["pattern"]),
            int(obj["value"]),
            PatternND.from_json(obj["witness"]),
            bool(obj["exact"]),
            int(obj.get("nodes_explored", 0)),
        )


# --------------------------------------------------------------------------
# incremental containment


class _PinnedChecker:
    """Finds a copy of the pattern whose lexicographically last one sits on a given cell."""

    def __init__(self, pattern: PatternND, dims: Sequence[int]):
        self.p = pattern
        self.dims = tuple(dims)
        self.d = len(dims)
        self.last = max(pattern.ones) if pattern.ones else None
        d = self.d
        last_p = pattern.dims[-1]
        self.by_last: list[list[tuple[int, ...]]] = [[] for _ in range(last_p)]
        for one in pattern.ones:
            self.by_last[one[-1]].append(one[:-1])
        if d == 2:
            self.col_rows = [[x[0] for x in self.by_last[j]] for j in range(last_p)]

    def _heads(self, h: tuple[int, ...]) -> Iterable[tuple[tuple[int, ...], ...]]:
        """Index selections for axes ``0..d-2`` with the pattern's last one pinned to ``h``."""
        L, P, H = self.last, self.p.dims, self.dims
        per_axis = []
        for a in range(self.d - 1):
            lo_cnt, hi_cnt = L[a], P[a] - 1 - L[a]
            if lo_cnt > h[a] or hi_cnt > H[a] - 1 - h[a]:
                return
            if a == 0:
                # rows past the last one's row are empty in the pattern: any choice works
                highs = [tuple(range(h[a] + 1, h[a] + 1 + hi_cnt))]
            else:
                highs = list(combinations(range(h[a] + 1, H[a]), hi_cnt))
            lows = list(combinations(range(h[a]), lo_cnt))
            per_axis.append([lo + (h[a],) + hi for lo in lows for hi in highs])
        yield from product(*per_axis)

    def hits_2d(self, rows: Sequence[int], h: tuple[int, int]) -> bool:
        L, P = self.last, self.p.dims
        ncols = self.dims[1]
        lc, hc = L[1], h[1]
        if lc > hc or P[1] - 1 - lc > ncols - 1 - hc:
            return False
        for (sel,) in self._heads(h):
            g = -1
            ok = True
            for j in range(P[1]):
                mask = (1 << ncols) - 1
                for r in self.col_rows[j]:
                    mask &= rows[sel[r]]
                if j == lc:
                    if not (mask >> hc) & 1:
                        ok = False
                        break
                    g = hc
                    continue
                limit = hc - (lc - j) if j < lc else ncols - (P[1] - j)
                mask &= ~((1 << (g + 1)) - 1)
                mask &= (1 << (limit + 1)) - 1
                if not mask:
                    ok = False
                    break
                g = (mask & -mask).bit_length() - 1
            if ok:
                return True
        return False

    def hits(self, ones: set, h: tuple[int, ...]) -> bool:
        L, P, H = self.last, self.p.dims, self.dims
        lc, hc = L[-1], h[-1]
        if lc > hc or P[-1] - 1 - lc > H[-1] - 1 - hc:
            return False
        d = self.d
        for sel in self._heads(h):
            g = -1
            ok = True
            for j in range(P[-1]):
                need = [tuple(sel[a][x[a]] for a in range(d - 1)) for x in self.by_last[j]]
                if j == lc:
                    if not all(q + (hc,) in ones for q in need):
                        ok = False
                        break
                    g = hc
                    continue
                limit = hc - (lc - j) if j < lc else H[-1] - (P[-1] - j)
                g += 1
                while g <= limit and not all(q + (g,) in ones for q in need):
                    g += 1
                if g > limit:
                    ok = False
                    break
            if ok:
                return True
        return False


# --------------------------------------------------------------------------
# branch and bound


class _Search:
    def __init__(
        self,
        dims: tuple[int, ...],
        pattern: PatternND,
        slab_bound: Sequence[int],
        rect: Sequence[Sequence[int]] | None = None,
    ):
        self.dims = dims
        self.pattern = pattern
        self.cells = list(product(*(range(s) for s in dims)))
        self.per_slab = int(np.prod(dims[1:])) if len(dims) > 1 else 1
        self.slab_bound = slab_bound  # slab_bound[r] = ex of the last r slabs (axis 0)
        self.checker = _PinnedChecker(pattern, dims)
        self.two_d = len(dims) == 2
        self.rect = rect  # rect[r][c] bounds any r x c block (2D only)
        self.rows = [0] * dims[0]
        self.slab_w = [0] * dims[0]
        self.ones: set = set()
        self.nodes = 0

    def _place(self, cell: tuple[int, ...]) -> bool:
        """Set ``cell`` to one; returns False (and undoes) if that creates a copy."""
        if not self._place_raw(cell):
            return False
        self.slab_w[cell[0]] += 1
        return True

    def _place_raw(self, cell: tuple[int, ...]) -> bool:
        if self.two_d:
            self.rows[cell[0]] |= 1 << cell[1]
            if self.checker.hits_2d(self.rows, cell):
                self.rows[cell[0]] &= ~(1 << cell[1])
                return False
        else:
            self.ones.add(cell)
            if self.checker.hits(self.ones, cell):
                self.ones.discard(cell)
                return False
        return True

    def _unplace(self, cell: tuple[int, ...]) -> None:
        self.slab_w[cell[0]] -= 1
        if self.two_d:
            self.rows[cell[0]] &= ~(1 << cell[1])
        else:
            self.ones.discard(cell)

    def bound(self, idx: int, weight: int) -> int:
        if idx >= len(self.cells):
            return weight
        slab = idx // self.per_slab
        in_slab = (slab + 1) * self.per_slab - idx
        later = self.dims[0] - slab - 1
        best = weight + in_slab + self.slab_bound[later]
        # the last k finished slabs together with everything after them avoid p too
        before = weight - self.slab_w[slab]
        for k in range(slab):
            if later + 1 + k >= len(self.slab_bound):
                break
            cand = before + self.slab_bound[later + 1 + k]
            if cand < best:
                best = cand
            before -= self.slab_w[slab - 1 - k]
        if self.rect is not None:
            best = min(best, self._rect_bound(slab, idx - slab * self.per_slab, weight))
        return best

    def _rect_bound(self, r0: int, c0: int, weight: int) -> int:
        R, C = self.dims
        rect = self.rect
        low = (1 << c0) - 1
        below_left = rect[R - r0 - 1][c0]
        top = weight - self.slab_w[r0]
        left = (self.rows[r0] & low).bit_count()
        best = 1 << 30
        for k in range(r0 + 1):
            if k:
                i = r0 - k
                top -= self.slab_w[i]
                left += (self.rows[i] & low).bit_count()
            cand = top + left + rect[R - r0 + k][C - c0] + below_left
            if cand < best:
                best = cand
        return best

    def run(self, prefix: Sequence[int], floor: int, budget: int) -> tuple[int, list[int] | None]:
        """Best completion of ``prefix`` with weight >= ``floor`` (first in DFS order among ties)."""
        weight = 0
        for i, bit in enumerate(prefix):
            if bit:
                if not self._place(self.cells[i]):
                    raise ValueError("prefix already contains the pattern")
                weight += 1
        best = floor - 1
        best_bits: list[int] | None = None
        bits = list(prefix) + [0] * (len(self.cells) - len(prefix))
        ncells = len(self.cells)

        def rec(idx: int, w: int) -> None:
            nonlocal best, best_bits
            self.nodes += 1
            if self.nodes > budget:
                raise BudgetExceeded
            if self.bound(idx, w) <= best:
                return
            if idx == ncells:
                best, best_bits = w, bits.copy()
                return
            cell = self.cells[idx]
            if self._place(cell):
                bits[idx] = 1
                rec(idx + 1, w + 1)
                bits[idx] = 0
                self._unplace(cell)
            rec(idx + 1, w)

        rec(len(prefix), weight)
        return best, best_bits


def _frontier(search: _Search, depth: int, floor: int) -> tuple[list[list[int]], int]:
    prefixes: list[list[int]] = []
    bits = [0] * depth
    count = 0

    def rec(idx: int, w: int) -> None:
        nonlocal count
        count += 1
        if search.bound(idx, w) < floor:
            return
        if idx == depth:
            prefixes.append(bits.copy())
            return
        cell = search.cells[idx]
        if search._place(cell):
            bits[idx] = 1
            rec(idx + 1, w + 1)
            bits[idx] = 0
            search._unplace(cell)
        rec(idx + 1, w)

    rec(0, 0)
    return prefixes, count


def _solve_subtree(args: tuple) -> tuple[int, list[int] | None, int, bool]:
    dims, pattern_json, bounds, prefix, floor, budget = args
    s = _Search(tuple(dims), PatternND.from_json(pattern_json), *bounds)
    try:
        best, bits = s.run(prefix, floor, budget)
    except BudgetExceeded:
        return -1, None, s.nodes, False
    return best, bits, s.nodes, True


def _bits_to_pattern(dims: tuple[int, ...], cells: list, bits: Sequence[int]) -> PatternND:
    return PatternND(dims, frozenset(c for c, b in zip(cells, bits) if b))


def ex_exact(
    dims: Sequence[int],
    p: PatternND,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    split_depth: int = DEFAULT_SPLIT,
    use_heuristic: bool = True,
    seed: int = 0,
) -> ExResult:
    """Exact maximum weight of a ``dims`` 0-1 matrix avoiding ``p``.

    The tree is cut at a fixed depth; each subtree is solved independently
    against the heuristic floor, so value, witness and node count do not
    depend on ``workers``.  Past ``budget`` nodes the best witness found so
    far is returned with ``exact=False``.  ``seed`` only drives the
    heuristic that supplies the initial floor; exact results do not depend
    on it.
    """
    dims = tuple(int(s) for s in dims)
    if len(dims) != p.d:
        raise ValueError(f"host has {len(dims)} axes, pattern has {p.d}")
    full = PatternND.full(dims)
    if any(ps > hs for ps, hs in zip(p.dims, dims)):
        return ExResult(dims, p, full.weight, full, True, 0, {"trivial": "pattern larger than host"})
    if p.weight == 0:
        raise ValueError("an all-zero pattern that fits is contained in every host")
    bounds = _bounds(dims, p, budget)
    floor_result = ex_lower_heuristic(dims, p, seed=seed, iterations=200) if use_heuristic else None
    floor = floor_result.value if floor_result else 0

    search = _Search(dims, p, *bounds)
    depth = min(split_depth, len(search.cells))
    prefixes, nodes = _frontier(search, depth, floor)
    jobs = [(dims, p.to_json(), bounds, pre, floor, budget) for pre in prefixes]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solve_subtree, jobs))
    else:
        results = []
        used = nodes
        for job in jobs:
            remaining = max(budget - used, 0)
            res = _solve_subtree(job[:-1] + (remaining,))
            results.append(res)
            used += res[2]
            if not res[3]:
                break

    best, best_bits, exact = -1, None, True
    for value, bits, sub_nodes, done in results:
        nodes += sub_nodes
        if not done or nodes > budget:
            exact = False
            break
        if bits is not None and value > best:
            best, best_bits = value, bits
    if not exact:
        nodes = min(nodes, budget)
    if best_bits is None or (floor_result is not None and floor_result.value > best):
        if floor_result is None:
            witness = PatternND.zeros(dims)
        else:
            witness = floor_result.witness
    else:
        witness = _bits_to_pattern(dims, search.cells, best_bits)
    return ExResult(dims, p, witness.weight, witness, exact, nodes, {"floor": floor, "split_depth": depth})


def _sub_ex(sub: tuple[int, ...], p: PatternND, budget: int) -> int:
    cells = int(np.prod(sub))
    return cells if cells <= 4 else _cached_ex(sub, p, budget)


def _bounds(dims: tuple[int, ...], p: PatternND, budget: int) -> tuple[list[int], list[list[int]] | None]:
    """Exact values (or trivial bounds) of ex on strictly smaller boxes.

    ``slab[r]`` covers ``r`` full axis-0 slabs; in 2D ``rect[r][c]`` covers any
    ``r x c`` block, with the full host itself bounded by its cell count.
    """
    slab = [_sub_ex((r,) + dims[1:], p, budget) for r in range(dims[0])]
    if len(dims) != 2:
        return slab, None
    R, C = dims
    rect = [[0] * (C + 1) for _ in range(R + 1)]
    for r in range(1, R + 1):
        for c in range(1, C + 1):
            rect[r][c] = r * c if (r, c) == (R, C) else _sub_ex((r, c), p, budget)
    return slab, rect


@lru_cache(maxsize=512)
def _cached_ex(dims: tuple[int, ...], p: PatternND, budget: int) -> int:
    res = ex_exact(dims, p, budget=budget, workers=1)
    if not res.exact:
        return int(np.prod(dims))
    return res.value


# --------------------------------------------------------------------------
# heuristic lower bound


def ex_lower_heuristic(dims: Sequence[int], p: PatternND, seed: int = 0, iterations: int = 200) -> ExResult:
    """Randomised greedy fill plus ruin-and-recreate; always returns a valid avoiding witness."""
    dims = tuple(int(s) for s in dims)
    rng = random.Random(seed)
    cells = list(product(*(range(s) for s in dims)))
    if any(ps > hs for ps, hs in zip(p.dims, dims)):
        full = PatternND.full(dims)
        return ExResult(dims, p, full.weight, full, False, 0)

    def greedy(start: set) -> set:
        cur = set(start)
        order = cells[:]
        rng.shuffle(order)
        for c in order:
            if c in cur:
                continue
            cur.add(c)
            if mat_contains(PatternND(dims, frozenset(cur)), p)[0]:
                cur.discard(c)
        return cur

    best = greedy(set())
    cur = set(best)
    steps = 0
    for _ in range(iterations):
        steps += 1
        if not cur:
            cur = greedy(set())
            continue
        drop = rng.randint(1, max(1, min(3, len(cur))))
        trial = set(cur)
        for c in rng.sample(sorted(trial), drop):
            trial.discard(c)
        trial = greedy(trial)
        if len(trial) >= len(cur):
            cur = trial
        if len(cur) > len(best):
            best = set(cur)
    witness = PatternND(dims, frozenset(best))
    return ExResult(dims, p, witness.weight, witness, False, steps)


# --------------------------------------------------------------------------
# naive oracle


def embedding_masks(dims: Sequence[int], p: PatternND) -> list[int]:
    """Every placement of ``p`` in a ``dims`` host as a bitmask over row-major cells."""
    dims = tuple(dims)
    if any(ps > hs for ps, hs in zip(p.dims, dims)):
        return []
    strides = [int(np.prod(dims[a + 1 :])) for a in range(len(dims))]
    masks = set()
    for sel in product(*(combinations(range(h), s) for h, s in zip(dims, p.dims))):
        m = 0
        for one in p.ones:
            m |= 1 << sum(sel[a][one[a]] * strides[a] for a in range(len(dims)))
        masks.add(m)
    return sorted(masks)


def ex_brute_force(dims: Sequence[int], p: PatternND) -> tuple[int, PatternND]:
    """Enumerate all ``2^cells`` fillings (cells <= 22).  Independent of the search code."""
    dims = tuple(dims)
    ncells = int(np.prod(dims))
    if ncells > 22:
        raise ValueError("brute force limited to 22 cells")
    masks = embedding_masks(dims, p)
    fills = np.arange(1 << ncells, dtype=np.int64)
    bad = np.zeros(fills.shape, dtype=bool)
    for m in masks:
        bad |= (fills & m) == m
    weights = np.zeros(fills.shape, dtype=np.int64)
    for b in range(ncells):
        weights += (fills >> b) & 1
    weights[bad] = -1
    best = int(weights.max())
    f = int(fills[int(np.argmax(weights))])
    cells = list(product(*(range(s) for s in dims)))
    strides = [int(np.prod(dims[a + 1 :])) for a in range(len(dims))]
    ones = frozenset(c for c in cells if f >> sum(x * s for x, s in zip(c, strides)) & 1)
    return best, PatternND(dims, ones)


# --------------------------------------------------------------------------
# inequality harness


class LemmaViolation(AssertionError):
    """An extremal inequality failed on exactly computed values."""


LEMMAS = (
    "addblanks",
    "addlast",
    "addmid",
    "addmidup",
    "diagatt",
    "superadditivity",
    "extend-a",
    "extend-b",
    "extend-c",
    "extend-d",
    "extendpettie",
)


@dataclass
class LemmaEntry:
    n: int
    values: dict[str, int]
    checks: dict[str, bool]
    status: str  # "pass" | "fail" | "inconclusive"
    note: str = ""

    def to_json(self) -> dict:
        return {"n": self.n, "values": self.values, "checks": self.checks, "status": self.status, "note": self.note}


@dataclass
class LemmaReport:
    lemma: str
    pattern: PatternND
    derived: dict[str, PatternND]
    entries: list[LemmaEntry]
    summary: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(e.status == "pass" for e in self.entries)

    @property
    def failed(self) -> bool:
        return any(e.status == "fail" for e in self.entries)

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "pattern": self.pattern.to_json(),
            "derived": {k: v.to_json() for k, v in self.derived.items()},
            "entries": [e.to_json() for e in self.entries],
            "summary": self.summary,
        }

    def to_text(self) -> str:
        lines = [f"lemma {self.lemma}"]
        for name, q in self.derived.items():
            lines.append(f"  {name} {'x'.join(map(str, q.dims))}:")
            if q.d == 2:
                lines.extend("    " + row for row in q.to_text().splitlines())
        for e in self.entries:
            vals = " ".join(f"{k}={v}" for k, v in e.values.items())
            lines.append(f"  n={e.n} {e.status} {vals} {e.note}".rstrip())
        for k, v in self.summary.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


class _ExTable:
    def __init__(self, budget: int):
        self.budget = budget
        self.memo: dict[tuple, ExResult] = {}

    def __call__(self, dims: tuple[int, ...], p: PatternND) -> ExResult:
        key = (dims, p)
        if key not in self.memo:
            self.memo[key] = ex_exact(dims, p, budget=self.budget)
        return self.memo[key]


def _derive(lemma: str, p: PatternND, params: dict) -> dict[str, PatternND]:
    from . import patterns as pt

    if lemma in ("addblanks", "extend-d"):
        k = int(params.get("k", 2))
        return {"boundary": pt.add_blanks(p, k, boundary=True), "interior": pt.add_blanks(p, k, boundary=False)}
    if lemma in ("addlast", "extend-a"):
        if "axis" in params:
            axis, end, at = int(params["axis"]), params["end"], tuple(params["at"])
        else:
            # prefer a new first column (last axis), as in the matrix statement
            cands = sorted(pt._boundary_ones(p), key=lambda c: (-c[0], c[1] != "first"))
            axis, end, at = cands[0]
        return {"P'": pt.add_boundary_one(p, axis, end, at)}
    if lemma in ("addmid", "extend-b"):
        axis = int(params.get("axis", p.d - 1))
        t = int(params.get("t", 1))
        if "after" in params:
            after, at = int(params["after"]), tuple(params["at"])
        else:
            after, at = pt._default_adjacent(p, axis)
        return {"P'": pt.add_mid(p, t, after, at, axis=axis)}
    if lemma in ("addmidup", "extendpettie"):
        line_axis = int(params.get("line_axis", 1))
        top_axis = int(params.get("top_axis", 0))
        at = tuple(params["at"]) if "at" in params else pt.default_graft_position(p, line_axis, top_axis)
        return {"P'": pt.graft(p, at, line_axis=line_axis, top_axis=top_axis)}
    if lemma in ("diagatt", "extend-c"):
        q = params.get("other", p)
        if not isinstance(q, PatternND):
            q = PatternND.from_json(q) if isinstance(q, dict) else PatternND.from_rows(q)
        return {"Q": q, "R": pt.diag_attach(p, q, params.get("corner"))}
    if lemma == "superadditivity":
        return {}
    raise ValueError(f"unknown lemma {lemma!r}; expected one of {', '.join(LEMMAS)}")


def verify_lemma_inequalities(
    lemma: str,
    p: PatternND,
    params: dict | None = None,
    n_range: Iterable[int] = range(1, 5),
    budget: int = DEFAULT_BUDGET,
    strict: bool = True,
) -> LemmaReport:
    """Evaluate both sides of an extremal inequality for each side length ``n``.

    Values come from ``ex_exact``; an entry whose values are not all exact is
    ``inconclusive``.  With ``strict`` a failing entry raises ``LemmaViolation``.
    For the lemmas with an unspecified constant (``addmidup``,
    ``extendpettie``) only the lower inequality is checked and the observed
    ratio is reported.  ``addblanks``/``extend-d`` check both the variant with
    blank boundary hyperplanes and the interior-only variant.
    """
    params = dict(params or {})
    derived = _derive(lemma, p, params)
    ex = _ExTable(budget)
    d = p.d
    entries: list[LemmaEntry] = []
    ratios: list[float] = []
    n_values = list(n_range)

    def cube(n: int) -> tuple[int, ...]:
        return (n,) * d

    if lemma == "superadditivity":
        max_sum = int(params.get("max_sum", 5))
        for m in n_values:
            for n in n_values:
                if n < m or m + n > max_sum:
                    continue
                a, b, s = ex(cube(m), p), ex(cube(n), p), ex(cube(m + n), p)
                exact = a.exact and b.exact and s.exact
                ok = s.value >= a.value + b.value
                entries.append(
                    LemmaEntry(
                        m + n,
                        {"ex(m)": a.value, "ex(n)": b.value, "ex(m+n)": s.value},
                        {"superadditive": ok},
                        "inconclusive" if not exact else ("pass" if ok else "fail"),
                        f"m={m} n={n}",
                    )
                )
        return _finish(LemmaReport(lemma, p, derived, entries), strict)

    for n in n_values:
        base = ex(cube(n), p)
        values = {"ex(P)": base.value}
        checks: dict[str, bool] = {}
        exact = base.exact
        if lemma in ("addblanks", "extend-d"):
            k = int(params.get("k", 2))
            extra = 6 * k * n if lemma == "addblanks" else 3 * d * k * n
            for name, q in derived.items():
                r = ex(cube(n), q)
                exact &= r.exact
                values[f"ex({name})"] = r.value
                checks[f"{name} lower"] = base.value <= r.value
                checks[f"{name} upper"] = r.value <= k * base.value + extra
        elif lemma in ("addlast", "extend-a"):
            r = ex(cube(n), derived["P'"])
            exact &= r.exact
            values["ex(P')"] = r.value
            checks["lower"] = base.value <= r.value
            checks["upper"] = r.value <= base.value + n ** (d - 1)
        elif lemma in ("addmid", "extend-b"):
            t = int(params.get("t", 1))
            r = ex(cube(n), derived["P'"])
            exact &= r.exact
            values["ex(P')"] = r.value
            checks["lower"] = base.value <= r.value
            checks["upper"] = r.value <= (t + 1) * base.value
        elif lemma in ("addmidup", "extendpettie"):
            r = ex(cube(n), derived["P'"])
            exact &= r.exact
            values["ex(P')"] = r.value
            checks["lower"] = base.value <= r.value
            if base.value:
                ratios.append(r.value / base.value)
        elif lemma in ("diagatt", "extend-c"):
            q = ex(cube(n), derived["Q"])
            r = ex(cube(n), derived["R"])
            exact &= q.exact and r.exact
            values.update({"ex(Q)": q.value, "ex(R)": r.value})
            checks["lower"] = max(base.value, q.value) <= r.value
            checks["upper"] = r.value <= base.value + q.value
        ok = all(checks.values())
        entries.append(LemmaEntry(n, values, checks, "inconclusive" if not exact else ("pass" if ok else "fail")))

    report = LemmaReport(lemma, p, derived, entries)
    if lemma in ("addmidup", "extendpettie"):
        report.summary["max ratio ex(P')/ex(P)"] = round(max(ratios), 4) if ratios else None
        report.summary["smallest integer c fitting all n"] = int(np.ceil(max(ratios) - 1e-12)) if ratios else None
    if lemma in ("addblanks", "extend-d"):
        both = {name: all(e.checks.get(f"{name} upper", True) for e in entries) for name in derived}
        report.summary["upper bound holds per variant"] = both
    return _finish(report, strict)


def _finish(report: LemmaReport, strict: bool) -> LemmaReport:
    if strict and report.failed:
        bad = [e for e in report.entries if e.status == "fail"]
        raise LemmaViolation(f"{report.lemma}: inequality fails at n={[e.n for e in bad]}: {bad[0].values}")
    return report


RECT_PATTERN_ROWS = ((0, 1, 1, 0), (1, 0, 0, 1))


@dataclass
class RectBoundEntry:
    b: int
    n: int
    value: int
    bound: int
    exact: bool

    @property
    def ok(self) -> bool:
        return self.exact and self.value <= self.bound


def rect_bound_check(max_side: int = 4, budget: int = DEFAULT_BUDGET) -> list[RectBoundEntry]:
    """``ex(b, n, R) <= 7b + 7n`` for the 2x4 pattern R, every ``b, n <= max_side``."""
    r = PatternND.from_rows(RECT_PATTERN_ROWS)
    out = []
    for b in range(1, max_side + 1):
        for n in range(1, max_side + 1):
            res = ex_exact((b, n), r, budget=budget)
            out.append(RectBoundEntry(b, n, res.value, 7 * b + 7 * n, res.exact))
    return out
