from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import brute_mat_contains

from ordram.graphs import StructureError
from ordram.patterns import (
    MatrixOpSpec,
    OperationError,
    PatternND,
    add_blanks,
    add_boundary_one,
    add_mid,
    anti_identity,
    apply_op,
    block_decompose,
    diag_attach,
    direct_sum,
    direct_sum_all,
    graft,
    identity,
    is_permutation,
    j_tuple_expand,
    kron,
    layered_helper,
    load_pattern,
    mat_contains,
    matrix_f,
    permutation_matrix,
    thmoper_family,
)


@st.composite
def patterns(draw, max_side: int = 3, d: int = 2):
    dims = tuple(draw(st.integers(1, max_side)) for _ in range(d))
    cells = [c for c in np.ndindex(*dims)]
    ones = draw(st.lists(st.sampled_from(cells), unique=True))
    return PatternND(dims, frozenset(tuple(int(x) for x in c) for c in ones))


def random_permutation(rng: random.Random, k: int) -> PatternND:
    perm = list(range(k))
    rng.shuffle(perm)
    return permutation_matrix(perm)


def test_invariants_reject_out_of_bounds():
    with pytest.raises(StructureError):
        PatternND((2, 2), frozenset({(2, 0)}))
    with pytest.raises(StructureError):
        PatternND((-1, 2), frozenset())


def test_text_and_json_formats():
    text = "0 1 1 0\n1 0 0 1\n0 0 1 0\n"
    f = load_pattern(text)
    assert f == matrix_f()
    assert load_pattern(f.to_text()) == f
    assert PatternND.from_json(f.to_json()) == f
    cube = PatternND((2, 2, 2), frozenset({(0, 1, 1)}))
    assert PatternND.from_json(cube.to_json()) == cube


def test_contains_trivial_examples():
    assert mat_contains(PatternND.from_rows([[0, 0], [0, 1]]), PatternND.from_rows([[1]]))[0]
    assert not mat_contains(identity(3), PatternND.full((2, 2)))[0]
    with pytest.raises(StructureError):
        mat_contains(identity(2), PatternND((1, 1, 1), frozenset({(0, 0, 0)})))


def test_f_against_random_hosts_matches_oracle():
    rng = random.Random(7)
    f = matrix_f()
    verdicts = set()
    for _ in range(20):
        ones = frozenset((r, c) for r in range(5) for c in range(5) if rng.random() < 0.55)
        host = PatternND((5, 5), ones)
        found, w = mat_contains(host, f)
        assert w == brute_mat_contains(set(ones), (5, 5), set(f.ones), f.dims)
        verdicts.add(found)
    assert verdicts == {True, False}


@settings(max_examples=150, deadline=None)
@given(patterns(4), patterns(3))
def test_containment_matches_oracle_2d(host, pat):
    found, w = mat_contains(host, pat)
    assert w == brute_mat_contains(set(host.ones), host.dims, set(pat.ones), pat.dims)
    assert found == (w is not None)


@settings(max_examples=60, deadline=None)
@given(patterns(3, d=3), patterns(2, d=3))
def test_containment_matches_oracle_3d(host, pat):
    assert mat_contains(host, pat)[1] == brute_mat_contains(set(host.ones), host.dims, set(pat.ones), pat.dims)


def test_paper_operation_examples():
    f = matrix_f()
    assert diag_attach(PatternND.from_rows([[1]]), PatternND.from_rows([[1]])) == PatternND.from_rows([[1]])
    got = apply_op(f, MatrixOpSpec("add-mid", {"t": 1, "row": 0, "after": 1}))
    assert got.rows() == [[0, 1, 1, 1, 0], [1, 0, 0, 0, 1], [0, 0, 0, 1, 0]]
    blanks = apply_op(f, MatrixOpSpec("add-blanks", {"k": 2, "boundary": False}))
    assert blanks.dims == (5, 7)
    assert blanks.ones == {(0, 2), (0, 4), (2, 0), (2, 6), (4, 4)}


def test_add_blanks_boundary_variant():
    p = PatternND.from_rows([[1]])
    assert add_blanks(p, 3).dims == (5, 5) and add_blanks(p, 3).ones == {(2, 2)}
    assert add_blanks(p, 3, boundary=False) == p


def test_addlast_sides_and_precondition():
    p = PatternND.from_rows([[1, 0], [0, 0]])
    assert apply_op(p, MatrixOpSpec("add-boundary-one", {"side": "left", "pos": 0})).rows() == [[1, 1, 0], [0, 0, 0]]
    assert apply_op(p, MatrixOpSpec("add-boundary-one", {"side": "top", "pos": 0})).rows() == [[1, 0], [1, 0], [0, 0]]
    with pytest.raises(OperationError, match="addlast"):
        apply_op(p, MatrixOpSpec("add-boundary-one", {"side": "right", "pos": 0}))


def test_preconditions_name_the_operation():
    p = PatternND.from_rows([[1, 0, 1]])
    with pytest.raises(OperationError, match="addmid"):
        add_mid(p, 1, 0, (0,))
    with pytest.raises(OperationError, match="addmidup"):
        graft(p, (0, 0))
    with pytest.raises(OperationError, match="diagatt"):
        diag_attach(PatternND.from_rows([[1, 0], [0, 0]]), PatternND.from_rows([[1, 0], [0, 0]]), ("low", "high"))
    with pytest.raises(OperationError, match="thmoper 3"):
        thmoper_family(p, 3, 1)


def _strip(host: PatternND, pat: PatternND) -> bool:
    return mat_contains(host, pat)[0]


@settings(max_examples=60, deadline=None)
@given(patterns(4), st.integers(1, 3))
def test_every_operation_output_contains_its_input(p, k):
    assert _strip(add_blanks(p, k), p)
    assert _strip(add_blanks(p, k, boundary=False), p)
    for axis in range(2):
        for end, edge in (("first", 0), ("last", p.dims[axis] - 1)):
            for o in p.sorted_ones():
                if o[axis] == edge:
                    out = add_boundary_one(p, axis, end, o[:axis] + o[axis + 1 :])
                    assert out.weight == p.weight + 1 and _strip(out, p)
    for (r, c) in p.sorted_ones():
        if (r, c + 1) in p.ones:
            out = add_mid(p, k, c, (r,))
            assert out.weight == p.weight + k and _strip(out, p)
            if r == 0:
                g = graft(p, (0, c))
                assert g.dims == (p.dims[0] + 1, p.dims[1] + 2) and _strip(g, p)


def test_diag_attach_default_is_top_right_to_bottom_left():
    a = anti_identity(2)
    r = diag_attach(a, a)
    assert r == anti_identity(3)


def test_thmoper_weights():
    f = matrix_f()
    for j in range(1, 4):
        assert thmoper_family(f, 1, j).weight == f.weight + j
        assert thmoper_family(f, 2, j).weight == f.weight + j
        assert thmoper_family(f, 3, j).weight == f.weight + 2 + j
        assert thmoper_family(f, 5, j).weight == f.weight
    p = identity(3)
    for j in range(1, 5):
        assert thmoper_family(p, 4, j).weight == j * p.weight - (j - 1)
    one = PatternND.from_rows([[1]])
    assert thmoper_family(one, 4, 2) == one


def test_direct_sum_convention():
    one = PatternND.from_rows([[1]])
    assert direct_sum(one, one).rows() == [[0, 1], [1, 0]]
    a = PatternND.from_rows([[1, 1]])
    b = PatternND.from_rows([[1], [1]])
    assert direct_sum(a, b).rows() == [[0, 0, 1], [0, 0, 1], [1, 1, 0]]


def test_direct_sum_weights_random_pairs():
    rng = random.Random(3)
    for _ in range(50):
        dims_a = (rng.randint(1, 4), rng.randint(1, 4))
        dims_b = (rng.randint(1, 4), rng.randint(1, 4))
        a = PatternND(dims_a, frozenset((r, c) for r in range(dims_a[0]) for c in range(dims_a[1]) if rng.random() < 0.5))
        b = PatternND(dims_b, frozenset((r, c) for r in range(dims_b[0]) for c in range(dims_b[1]) if rng.random() < 0.5))
        assert direct_sum(a, b).weight == a.weight + b.weight


def test_block_decomposition():
    assert block_decompose(identity(3)) == [identity(3)]
    assert block_decompose(anti_identity(3)) == [identity(1)] * 3
    s = direct_sum(identity(2), identity(2))
    assert is_permutation(s) and block_decompose(s) == [identity(2), identity(2)]
    rng = random.Random(11)
    for _ in range(30):
        blocks = []
        for _ in range(rng.randint(1, 4)):
            b = random_permutation(rng, rng.randint(1, 4))
            blocks.extend(block_decompose(b))
        assert block_decompose(direct_sum_all(blocks)) == blocks
    with pytest.raises(StructureError):
        block_decompose(PatternND.from_rows([[1, 1]]))


def test_is_permutation():
    assert is_permutation(permutation_matrix([2, 0, 1]))
    assert not is_permutation(PatternND.from_rows([[1, 1], [0, 0]]))


def test_layered_helper_side():
    for k in range(1, 5):
        assert layered_helper(identity(k)).dims == (k + 2, k + 2)


def test_j_tuple_expand():
    p = identity(2)
    assert j_tuple_expand(p, 1) == p
    assert j_tuple_expand(PatternND.from_rows([[1]]), 3) == PatternND.full((1, 3))
    e = j_tuple_expand(p, 2)
    assert e.dims == (2, 4) and e.ones == {(0, 0), (0, 1), (1, 2), (1, 3)}
    assert e == kron(p, PatternND.full((1, 2)))
    assert np.array_equal(e.to_array(), np.kron(p.to_array(), np.ones((1, 2), dtype=int)))
