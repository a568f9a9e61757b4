"""d-dimensional 0-1 matrices, pattern containment and the matrix operation calculus.

Coordinates are 0-indexed; for ``d = 2`` coordinate 0 is the row counted from
the top and coordinate 1 the column counted from the left, so printed
matrices read exactly as stored.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Iterable, Sequence

import numpy as np

from .graphs import StructureError


class OperationError(StructureError):
    """An operation's precondition does not hold for the given pattern."""


@dataclass(frozen=True)
class PatternND:
    dims: tuple[int, ...]
    ones: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        dims = tuple(int(s) for s in self.dims)
        if not dims or any(s < 0 for s in dims):
            raise StructureError(f"bad dimensions {self.dims!r}")
        norm = set()
        for one in self.ones:
            t = tuple(int(x) for x in one)
            if len(t) != len(dims) or any(not 0 <= x < s for x, s in zip(t, dims)):
                raise StructureError(f"entry {one!r} outside dims {dims}")
            norm.add(t)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "ones", frozenset(norm))

    @property
    def d(self) -> int:
        return len(self.dims)

    @property
    def weight(self) -> int:
        return len(self.ones)

    @property
    def cells(self) -> int:
        return int(np.prod(self.dims)) if self.dims else 0

    def __getitem__(self, idx: tuple[int, ...]) -> int:
        return int(tuple(idx) in self.ones)

    # ---- construction / conversion

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> PatternND:
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise StructureError("ragged matrix rows")
        ones = frozenset((i, j) for i, r in enumerate(rows) for j, x in enumerate(r) if x)
        if any(x not in (0, 1) for r in rows for x in r):
            raise StructureError("entries must be 0 or 1")
        return cls((len(rows), width), ones)

    @classmethod
    def from_array(cls, arr: Any) -> PatternND:
        a = np.asarray(arr)
        return cls(a.shape, frozenset(tuple(int(x) for x in idx) for idx in np.argwhere(a)))

    @classmethod
    def from_text(cls, text: str) -> PatternND:
        rows = [[int(tok) for tok in line.split()] for line in text.strip().splitlines() if line.strip()]
        return cls.from_rows(rows)

    @classmethod
    def zeros(cls, dims: Sequence[int]) -> PatternND:
        return cls(tuple(dims))

    @classmethod
    def full(cls, dims: Sequence[int]) -> PatternND:
        return cls(tuple(dims), frozenset(product(*(range(s) for s in dims))))

    def to_array(self) -> np.ndarray:
        a = np.zeros(self.dims, dtype=np.uint8)
        for one in self.ones:
            a[one] = 1
        return a

    def rows(self) -> list[list[int]]:
        if self.d != 2:
            raise StructureError("rows() is only defined for 2-dimensional patterns")
        return self.to_array().tolist()

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows()) + "\n"

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "ones": [list(o) for o in sorted(self.ones)]}

    @classmethod
    def from_json(cls, obj: dict) -> PatternND:
        ones = [tuple(o) for o in obj.get("ones", [])]
        if len(set(ones)) != len(ones):
            raise StructureError("duplicate entries in pattern file")
        return cls(tuple(obj["dims"]), frozenset(ones))

    def canonical_hash(self) -> str:
        blob = json.dumps(self.to_json(), separators=(",", ":"), sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()

    def sorted_ones(self) -> list[tuple[int, ...]]:
        return sorted(self.ones)

    def shifted(self, offset: Sequence[int], dims: Sequence[int]) -> PatternND:
        return PatternND(tuple(dims), frozenset(tuple(x + o for x, o in zip(one, offset)) for one in self.ones))

    def transpose(self, axes: Sequence[int] | None = None) -> PatternND:
        axes = tuple(reversed(range(self.d))) if axes is None else tuple(axes)
        return PatternND(tuple(self.dims[a] for a in axes), frozenset(tuple(o[a] for a in axes) for o in self.ones))

    def flip(self, axis: int) -> PatternND:
        s = self.dims[axis]
        return PatternND(self.dims, frozenset(o[:axis] + (s - 1 - o[axis],) + o[axis + 1 :] for o in self.ones))

    def __repr__(self) -> str:
        return f"PatternND(dims={self.dims}, ones={self.sorted_ones()})"


def load_pattern(text: str) -> PatternND:
    """Parse either the JSON pattern format or the printed 0/1 text format."""
    s = text.strip()
    if s.startswith("{"):
        return PatternND.from_json(json.loads(s))
    return PatternND.from_text(s)


# --------------------------------------------------------------------------
# containment


def mat_contains(host: PatternND, pattern: PatternND) -> tuple[bool, tuple[tuple[int, ...], ...] | None]:
    """Whether ``host`` contains ``pattern`` as an order-preserving submatrix (ones may be zeroed).

    The witness lists the selected host indices per axis and is the
    lexicographically smallest one (axis 0 first).
    """
    if host.d != pattern.d:
        raise StructureError(f"dimensionality mismatch: host d={host.d}, pattern d={pattern.d}")
    if any(p > h for p, h in zip(pattern.dims, host.dims)):
        return False, None
    d = host.d
    last_p, last_h = pattern.dims[-1], host.dims[-1]
    by_last: list[list[tuple[int, ...]]] = [[] for _ in range(last_p)]
    for one in pattern.ones:
        by_last[one[-1]].append(one[:-1])
    hones = host.ones
    heads = [combinations(range(h), p) for h, p in zip(host.dims[:-1], pattern.dims[:-1])]
    for sel in product(*heads):
        cols: list[int] = []
        g = -1
        for j in range(last_p):
            need = [tuple(sel[a][x[a]] for a in range(d - 1)) for x in by_last[j]]
            g += 1
            limit = last_h - (last_p - j)
            while g <= limit and not all(q + (g,) in hones for q in need):
                g += 1
            if g > limit:
                break
            cols.append(g)
        else:
            return True, tuple(tuple(s) for s in sel) + (tuple(cols),)
    return False, None


def avoids(host: PatternND, pattern: PatternND) -> bool:
    return not mat_contains(host, pattern)[0]


# --------------------------------------------------------------------------
# operations

SIDES_2D = {"top": (0, "first"), "bottom": (0, "last"), "left": (1, "first"), "right": (1, "last")}


@dataclass(frozen=True)
class MatrixOpSpec:
    """An operation of the calculus plus its parameters.

    kinds: ``add-blanks``, ``add-boundary-one``, ``add-mid``, ``graft``,
    ``diag-attach``.  Parameter names are documented on :func:`apply_op`.
    """

    kind: str
    params: dict = field(default_factory=dict)

    def __hash__(self) -> int:  # params holds a dict
        return hash((self.kind, json.dumps(_jsonable(self.params), sort_keys=True)))


def _jsonable(x: Any) -> Any:
    if isinstance(x, PatternND):
        return x.to_json()
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _insert_gaps(p: PatternND, axis: int, gaps: Sequence[int]) -> PatternND:
    """``gaps[i]`` empty hyperplanes before index ``i`` along ``axis`` (``len = size + 1``)."""
    size = p.dims[axis]
    before = [0] * (size + 1)
    for i in range(1, size + 1):
        before[i] = before[i - 1] + gaps[i - 1]
    dims = list(p.dims)
    dims[axis] = size + sum(gaps)
    ones = frozenset(o[:axis] + (o[axis] + before[o[axis]] + gaps[o[axis]],) + o[axis + 1 :] for o in p.ones)
    return PatternND(tuple(dims), ones)


def add_blanks(p: PatternND, k: int, boundary: bool = True, axes: Sequence[int] | None = None) -> PatternND:
    """Insert ``k - 1`` empty hyperplanes between adjacent hyperplanes along every axis.

    With ``boundary`` the same number also goes before the first and after the last.
    """
    if k < 1:
        raise OperationError("add-blanks needs k >= 1")
    axes = range(p.d) if axes is None else axes
    out = p
    for a in axes:
        size = out.dims[a]
        edge = k - 1 if boundary else 0
        gaps = [edge] + [k - 1] * (size - 1) + [edge] if size else [edge * 2]
        out = _insert_gaps(out, a, gaps)
    return out


def _resolve_side(params: dict, d: int) -> tuple[int, str]:
    if "side" in params:
        if d != 2:
            raise OperationError("named sides only apply to 2-dimensional patterns; pass axis/end")
        return SIDES_2D[params["side"]]
    return int(params["axis"]), params.get("end", "first")


def add_boundary_one(p: PatternND, axis: int, end: str, at: Sequence[int]) -> PatternND:
    """New first/last hyperplane along ``axis`` holding one 1 next to a 1 of ``p``."""
    if end not in ("first", "last"):
        raise OperationError(f"end must be 'first' or 'last', got {end!r}")
    at = tuple(at)
    if len(at) != p.d - 1:
        raise OperationError(f"addlast: position needs {p.d - 1} coordinates")
    edge = 0 if end == "first" else p.dims[axis] - 1
    neighbour = at[:axis] + (edge,) + at[axis:]
    if p.dims[axis] == 0 or neighbour not in p.ones:
        raise OperationError(f"addlast: no one of P next to the new one at {neighbour}")
    dims = list(p.dims)
    dims[axis] += 1
    if end == "first":
        moved = {o[:axis] + (o[axis] + 1,) + o[axis + 1 :] for o in p.ones}
        new = at[:axis] + (0,) + at[axis:]
    else:
        moved = set(p.ones)
        new = at[:axis] + (p.dims[axis],) + at[axis:]
    return PatternND(tuple(dims), frozenset(moved | {new}))


def add_mid(p: PatternND, t: int, after: int, at: Sequence[int], axis: int = 1) -> PatternND:
    """Insert ``t`` hyperplanes along ``axis`` between ``after`` and ``after + 1``.

    Each new hyperplane carries a single one on the line through ``at`` (the
    coordinates of the remaining axes), flanked by ones of ``p``.
    """
    if t < 0:
        raise OperationError("addmid: t must be nonnegative")
    at = tuple(at)
    if len(at) != p.d - 1:
        raise OperationError(f"addmid: line position needs {p.d - 1} coordinates")
    left = at[:axis] + (after,) + at[axis:]
    right = at[:axis] + (after + 1,) + at[axis:]
    if left not in p.ones or right not in p.ones:
        raise OperationError(f"addmid: need adjacent ones at {left} and {right}")
    gaps = [0] * (p.dims[axis] + 1)
    gaps[after + 1] = t
    out = _insert_gaps(p, axis, gaps)
    new = {at[:axis] + (after + 1 + s,) + at[axis:] for s in range(t)}
    return PatternND(out.dims, out.ones | new)


def graft(p: PatternND, at: Sequence[int], line_axis: int = 1, top_axis: int = 0) -> PatternND:
    """Insert two empty hyperplanes between two adjacent top ones, then a new top hyperplane over them.

    ``at`` is the full coordinate of the first of the two adjacent ones; it
    must lie in the first hyperplane along ``top_axis``.
    """
    at = tuple(at)
    if line_axis == top_axis:
        raise OperationError("graft: line axis and top axis must differ")
    nxt = at[:line_axis] + (at[line_axis] + 1,) + at[line_axis + 1 :]
    if at[top_axis] != 0 or at not in p.ones or nxt not in p.ones:
        raise OperationError(f"addmidup: need two adjacent ones in the top line at {at} and {nxt}")
    gaps = [0] * (p.dims[line_axis] + 1)
    gaps[at[line_axis] + 1] = 2
    widened = _insert_gaps(p, line_axis, gaps)
    top_gaps = [0] * (widened.dims[top_axis] + 1)
    top_gaps[0] = 1
    lifted = _insert_gaps(widened, top_axis, top_gaps)
    new = set()
    for s in (1, 2):
        c = list(at)
        c[line_axis] = at[line_axis] + s
        c[top_axis] = 0
        new.add(tuple(c))
    return PatternND(lifted.dims, lifted.ones | new)


def default_graft_position(p: PatternND, line_axis: int = 1, top_axis: int = 0) -> tuple[int, ...]:
    for one in p.sorted_ones():
        nxt = one[:line_axis] + (one[line_axis] + 1,) + one[line_axis + 1 :]
        if one[top_axis] == 0 and nxt in p.ones:
            return one
    raise OperationError("addmidup: no two adjacent ones in a top line")


def _corner_cells(corner: Sequence[str], p: PatternND, q: PatternND) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pc = tuple(0 if c == "low" else s - 1 for c, s in zip(corner, p.dims))
    qc = tuple(s - 1 if c == "low" else 0 for c, s in zip(corner, q.dims))
    return pc, qc


def _attach_corner(p: PatternND, q: PatternND) -> tuple[str, ...]:
    preferred = ("low",) + ("high",) * (p.d - 1)
    for corner in [preferred, *product(("low", "high"), repeat=p.d)]:
        pc, qc = _corner_cells(corner, p, q)
        if pc in p.ones and qc in q.ones:
            return tuple(corner)
    return preferred


def diag_attach(p: PatternND, q: PatternND, corner: Sequence[str] | None = None) -> PatternND:
    """Glue ``q`` onto ``p`` so that a corner one of ``p`` meets the opposite corner one of ``q``.

    ``corner`` names ``p``'s corner per axis (``"low"``/``"high"``); the
    default is the top-right corner for matrices, i.e. low on axis 0 and high
    on every other axis; if that pair of ones is missing, the first corner
    (in low/high product order) that works is used.  The shared cell holds a
    single one.
    """
    if p.d != q.d:
        raise StructureError("diag-attach: dimensionality mismatch")
    if corner is None:
        corner = _attach_corner(p, q)
    corner = tuple(corner)
    pc, qc = _corner_cells(corner, p, q)
    if pc not in p.ones or qc not in q.ones:
        raise OperationError(f"diagatt: need a one at corner {pc} of P and at the opposite corner {qc} of Q")
    p_off, q_off = [], []
    for c, ps, qs in zip(corner, p.dims, q.dims):
        if c == "high":
            p_off.append(0)
            q_off.append(ps - 1)
        else:
            p_off.append(qs - 1)
            q_off.append(0)
    dims = tuple(ps + qs - 1 for ps, qs in zip(p.dims, q.dims))
    return PatternND(dims, p.shifted(p_off, dims).ones | q.shifted(q_off, dims).ones)


def apply_op(p: PatternND, spec: MatrixOpSpec) -> PatternND:
    """Apply one operation of the calculus.

    ``add-blanks``: ``k``, ``boundary`` (default True).
    ``add-boundary-one``: ``side`` in top/bottom/left/right plus ``pos`` (2-d),
    or ``axis``, ``end``, ``at``.
    ``add-mid``: ``t``, ``after``, and ``row`` (2-d, columns are inserted) or ``axis`` + ``at``.
    ``graft``: ``col`` (2-d, first of two adjacent ones in row 0) or ``at`` with
    ``line_axis``/``top_axis``.
    ``diag-attach``: ``other`` pattern, optional ``corner``.
    """
    k = spec.kind
    prm = spec.params
    if k == "add-blanks":
        return add_blanks(p, int(prm["k"]), bool(prm.get("boundary", True)))
    if k == "add-boundary-one":
        axis, end = _resolve_side(prm, p.d)
        at = (int(prm["pos"]),) if "pos" in prm else tuple(prm["at"])
        return add_boundary_one(p, axis, end, at)
    if k == "add-mid":
        axis = int(prm.get("axis", 1))
        at = (int(prm["row"]),) if "row" in prm else tuple(prm["at"])
        return add_mid(p, int(prm["t"]), int(prm["after"]), at, axis=axis)
    if k == "graft":
        line_axis = int(prm.get("line_axis", 1))
        top_axis = int(prm.get("top_axis", 0))
        if "col" in prm:
            at = (0, int(prm["col"]))
        elif "at" in prm:
            at = tuple(prm["at"])
        else:
            at = default_graft_position(p, line_axis, top_axis)
        return graft(p, at, line_axis, top_axis)
    if k == "diag-attach":
        other = prm.get("other", p)
        if isinstance(other, dict):
            other = PatternND.from_json(other)
        return diag_attach(p, other, prm.get("corner"))
    raise OperationError(f"unknown operation kind {k!r}")


# --------------------------------------------------------------------------
# direct sums and permutation matrices


def direct_sum(a: PatternND, b: PatternND) -> PatternND:
    """``[[0, B], [A, 0]]``: ``a`` bottom-left, ``b`` top-right.

    For ``d > 2`` ``a`` comes after ``b`` on axis 0 and before it on every other axis.
    """
    if a.d != b.d:
        raise StructureError("direct sum: dimensionality mismatch")
    dims = tuple(x + y for x, y in zip(a.dims, b.dims))
    a_off = (b.dims[0],) + (0,) * (a.d - 1)
    b_off = (0,) + tuple(a.dims[1:])
    return PatternND(dims, a.shifted(a_off, dims).ones | b.shifted(b_off, dims).ones)


def direct_sum_all(blocks: Iterable[PatternND]) -> PatternND:
    blocks = list(blocks)
    out = blocks[0]
    for b in blocks[1:]:
        out = direct_sum(out, b)
    return out


def identity(k: int, d: int = 2) -> PatternND:
    return PatternND((k,) * d, frozenset((i,) * d for i in range(k)))


def anti_identity(k: int) -> PatternND:
    return PatternND((k, k), frozenset((i, k - 1 - i) for i in range(k)))


def permutation_matrix(perm: Sequence[int]) -> PatternND:
    """Row ``i`` has its one in column ``perm[i]``."""
    k = len(perm)
    if sorted(perm) != list(range(k)):
        raise StructureError(f"{perm!r} is not a permutation of 0..{k - 1}")
    return PatternND((k, k), frozenset((i, int(perm[i])) for i in range(k)))


def is_permutation(p: PatternND) -> bool:
    """Exactly one 1 in every hyperplane along every axis (square in every axis)."""
    k = p.dims[0]
    if any(s != k for s in p.dims) or p.weight != k:
        return False
    return all(len({o[a] for o in p.ones}) == k for a in range(p.d))


def block_decompose(p: PatternND) -> list[PatternND]:
    """Finest split of a square matrix into ``P_1 ⊕ ... ⊕ P_m`` (left to right)."""
    if p.d != 2 or p.dims[0] != p.dims[1]:
        raise StructureError(f"block_decompose needs a square matrix, got dims {p.dims}")
    n = p.dims[0]
    cuts = [0]
    for k in range(1, n):
        ok = all((c < k) == (r >= n - k) for r, c in p.ones)
        if ok:
            cuts.append(k)
    cuts.append(n)
    blocks = []
    for lo, hi in zip(cuts, cuts[1:]):
        size = hi - lo
        r0 = n - hi
        blocks.append(
            PatternND((size, size), frozenset((r - r0, c - lo) for r, c in p.ones if lo <= c < hi))
        )
    return blocks


def j_tuple_expand(p: PatternND, j: int, axis: int = 1) -> PatternND:
    """Replace every hyperplane along ``axis`` by ``j`` adjacent copies of itself."""
    if j < 1:
        raise OperationError("j must be positive")
    dims = list(p.dims)
    dims[axis] *= j
    ones = frozenset(o[:axis] + (o[axis] * j + s,) + o[axis + 1 :] for o in p.ones for s in range(j))
    return PatternND(tuple(dims), ones)


def kron(a: PatternND, b: PatternND) -> PatternND:
    if a.d != b.d:
        raise StructureError("kron: dimensionality mismatch")
    dims = tuple(x * y for x, y in zip(a.dims, b.dims))
    ones = frozenset(
        tuple(x * s + y for x, s, y in zip(oa, b.dims, ob)) for oa in a.ones for ob in b.ones
    )
    return PatternND(dims, ones)


def layered_helper(block: PatternND) -> PatternND:
    """``I_1 ⊕ block ⊕ I_1``."""
    one = identity(1, block.d)
    return direct_sum_all([one, block, one])


# --------------------------------------------------------------------------
# families


def _boundary_ones(p: PatternND) -> list[tuple[int, str, tuple[int, ...]]]:
    found = []
    for axis in range(p.d):
        for end, edge in (("last", p.dims[axis] - 1), ("first", 0)):
            for o in p.sorted_ones():
                if o[axis] == edge:
                    found.append((axis, end, o[:axis] + o[axis + 1 :]))
    return found


def _default_corner(p: PatternND) -> tuple[str, ...]:
    for corner in product(("low", "high"), repeat=p.d):
        c = tuple(0 if x == "low" else s - 1 for x, s in zip(corner, p.dims))
        opp = tuple(s - 1 if x == "low" else 0 for x, s in zip(corner, p.dims))
        if c in p.ones and opp in p.ones and corner[0] == "low":
            return corner
    raise OperationError("thmoper 4: P needs ones in two opposite corners")


def _default_adjacent(p: PatternND, axis: int) -> tuple[int, tuple[int, ...]]:
    for o in p.sorted_ones():
        nxt = o[:axis] + (o[axis] + 1,) + o[axis + 1 :]
        if nxt in p.ones:
            return o[axis], o[:axis] + o[axis + 1 :]
    raise OperationError("thmoper 2: P needs two adjacent ones on some line")


def thmoper_family(p: PatternND, variant: int, j: int, **opts: Any) -> PatternND:
    """The ``j``-th member of one of the five linear-preserving families.

    1. ``j`` boundary one additions.  ``steps`` (list of ``(side, pos)`` for
       matrices or ``(axis, end, at)``) chooses each addition; by default
       the first boundary one found (last column, last row, first column,
       first row order) is extended ``j`` times on the same side.
    2. add-mid with ``t = j`` (``axis`` default 1; ``after``/``at`` default to
       the first adjacent pair).
    3. one graft, then add-mid with ``t = j`` on the new top pair.
    4. ``j`` copies of ``p`` glued corner to corner (``corner`` optional).
    5. ``count`` (default ``j``) empty hyperplanes between adjacent ones, no boundary.
    """
    if j < 1 and variant != 5:
        raise OperationError(f"thmoper {variant}: j must be positive")
    if variant == 1:
        steps = opts.get("steps")
        out = p
        if steps is None:
            cands = _boundary_ones(p)
            if not cands:
                raise OperationError("thmoper 1: P has no one on its boundary")
            axis, end, at = cands[0]
            for _ in range(j):
                out = add_boundary_one(out, axis, end, at)
            return out
        if len(steps) < j:
            raise OperationError(f"thmoper 1: {len(steps)} steps given for j={j}")
        for step in steps[:j]:
            if len(step) == 2:
                axis, end = SIDES_2D[step[0]]
                at: tuple[int, ...] = (int(step[1]),)
            else:
                axis, end, at = int(step[0]), step[1], tuple(step[2])
            out = add_boundary_one(out, axis, end, at)
        return out
    if variant == 2:
        axis = int(opts.get("axis", 1))
        if "after" in opts:
            after, at = int(opts["after"]), tuple(opts["at"])
        else:
            after, at = _default_adjacent(p, axis)
        return add_mid(p, j, after, at, axis=axis)
    if variant == 3:
        line_axis = int(opts.get("line_axis", 1))
        top_axis = int(opts.get("top_axis", 0))
        try:
            pos = tuple(opts["at"]) if "at" in opts else default_graft_position(p, line_axis, top_axis)
        except OperationError as exc:
            raise OperationError(f"thmoper 3: {exc}") from None
        grafted = graft(p, pos, line_axis, top_axis)
        new_at = list(pos)
        new_at[top_axis] = 0
        new_at[line_axis] = pos[line_axis] + 1
        line = tuple(new_at[:line_axis] + new_at[line_axis + 1 :])
        return add_mid(grafted, j, pos[line_axis] + 1, line, axis=line_axis)
    if variant == 4:
        corner = tuple(opts["corner"]) if "corner" in opts else _default_corner(p)
        out = p
        for _ in range(j - 1):
            out = diag_attach(out, p, corner)
        return out
    if variant == 5:
        count = int(opts.get("count", j))
        return add_blanks(p, count + 1, boundary=False)
    raise OperationError(f"unknown thmoper variant {variant}")


# the 3x4 matrix F whose extremal function is linear
F_ROWS = [[0, 1, 1, 0], [1, 0, 0, 1], [0, 0, 1, 0]]


def matrix_f() -> PatternND:
    return PatternND.from_rows(F_ROWS)


def all_patterns(dims: Sequence[int]) -> Iterable[PatternND]:
    cells = list(product(*(range(s) for s in dims)))
    for mask in range(1 << len(cells)):
        yield PatternND(tuple(dims), frozenset(c for i, c in enumerate(cells) if mask >> i & 1))
