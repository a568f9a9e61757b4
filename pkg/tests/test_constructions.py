from __future__ import annotations

import json

import numpy as np
import pytest
from oracles import brute_discrepancy, reverse_bits

from ordram.constructions import (
    ConstructionError,
    alternating_cycle,
    alternating_hyperpath,
    alternating_order,
    block_product_coloring,
    blowup_matching,
    centered_matching,
    discrepancy,
    disjoint_union_coloring,
    fig1_coloring,
    fig2_coloring,
    generate,
    hyperpath_tensor,
    monotone_path,
    nested_matching,
    pendant_lower_coloring,
    spread_blowup_coloring,
    staircase_path,
    tight_hyperpath,
    vdc_matching,
    vdc_permutation,
)
from ordram.graphs import (
    OrderedGraph,
    append_pendant_edge,
    hypergraph_of_tensor,
    interval_chromatic_number,
    matrix_of_graph,
    ordered_sum,
    uniform_spread,
)
from ordram.patterns import PatternND
from ordram.ramsey import RED, Certificate, EdgeColoring, SearchConfig, is_free_both, ramsey_number


def test_monotone_path():
    assert monotone_path(2).edges == frozenset({(0, 1)})
    assert monotone_path(3).edges == frozenset({(0, 1), (1, 2)})
    with pytest.raises(ConstructionError):
        monotone_path(0)


def test_alternating_cycle_figure(fixtures_dir):
    arcs = json.loads((fixtures_dir / "figures.json").read_text())["alternating_cycle_8"]
    g = alternating_cycle(8)
    assert g.edges == frozenset(tuple(a) for a in arcs)
    assert interval_chromatic_number(g) == 2
    with pytest.raises(ConstructionError):
        alternating_cycle(2)
    with pytest.raises(ConstructionError):
        alternating_cycle(7)


@pytest.mark.parametrize("size", [4, 6, 8, 10, 12])
def test_alternating_cycles_are_two_regular_connected(size):
    g = alternating_cycle(size)
    assert g.degrees() == [2] * size
    assert interval_chromatic_number(g) == 2
    adj = {v: set() for v in range(size)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, todo = {0}, [0]
    while todo:
        for w in adj[todo.pop()] - seen:
            seen.add(w)
            todo.append(w)
    assert len(seen) == size


def test_alternating_cycle_four_gives_all_ones_matrix():
    assert matrix_of_graph(alternating_cycle(4)) == PatternND.full((2, 2))


def test_matchings():
    assert nested_matching(1).edges == frozenset({(0, 1)})
    assert nested_matching(2).edges == frozenset({(0, 3), (1, 2)})
    c5 = centered_matching(5)
    assert c5.edges == frozenset({(1, 4), (2, 3)})
    with pytest.raises(ConstructionError):
        centered_matching(4)


def test_centered_matching_pigeonhole_bound():
    r = ramsey_number(centered_matching(5), SearchConfig(max_n=11))
    assert r.exact and r.value <= 11


def test_van_der_corput():
    assert vdc_permutation(2) == (0, 1)
    assert vdc_permutation(4) == (0, 2, 1, 3)
    for n in (8, 16, 32):
        bits = n.bit_length() - 1
        assert vdc_permutation(n) == tuple(reverse_bits(i, bits) for i in range(n))
    assert vdc_matching(2).edges == frozenset({(0, 2), (1, 3)})
    with pytest.raises(ConstructionError):
        vdc_permutation(6)


def test_discrepancy_matches_direct_count():
    for n in (4, 8, 16):
        assert discrepancy(vdc_permutation(n)) == pytest.approx(brute_discrepancy(vdc_permutation(n)))
    rng = np.random.default_rng(0)
    perm = tuple(int(x) for x in rng.permutation(12))
    assert discrepancy(perm) == pytest.approx(brute_discrepancy(perm))
    assert discrepancy(vdc_permutation(16)) <= 8


def test_blowup_matching():
    e = OrderedGraph.from_edges(2, [(0, 1)])
    assert blowup_matching(e, 1) == e
    assert blowup_matching(e, 2) == nested_matching(2)
    m = vdc_matching(2)
    got = blowup_matching(m, 2)
    expected = {(2 * u + i, 2 * v + 1 - i) for u, v in m.edges for i in range(2)}
    assert got.n == 8 and got.edges == frozenset(expected)
    assert got.degrees() == [1] * 8
    with pytest.raises(ConstructionError):
        blowup_matching(monotone_path(3), 2)


def test_staircase_is_a_path():
    g = staircase_path(3)
    assert g.n == 6 and len(g.edges) == 5
    assert interval_chromatic_number(g) == 2


def test_hyperpaths(fixtures_dir):
    assert tight_hyperpath(4, 3).edges == frozenset({(0, 1, 2), (1, 2, 3)})
    order = json.loads((fixtures_dir / "figures.json").read_text())["alternating_order_9_3"]
    assert list(alternating_order(9, 3)) == order
    h = alternating_hyperpath(9, 3)
    assert len(h.edges) == 7
    with pytest.raises(ConstructionError):
        alternating_order(8, 3)


def test_hyperpath_tensor_walk():
    for n, d in [(9, 3), (6, 2), (8, 4), (12, 3)]:
        t = hyperpath_tensor(n, d)
        walk = [(0,) * d]
        for j in range(1, n - d + 1):
            step = [0] * d
            step[(j - 1) % d] = 1
            walk.append(tuple(a + b for a, b in zip(walk[-1], step)))
        assert t.ones == frozenset(walk)
        assert t.weight == n - d + 1
        assert walk[-1] == (n // d - 1,) * d
        assert hypergraph_of_tensor(t) == alternating_hyperpath(n, d)


def test_figure_colorings(fixtures_dir):
    figs = json.loads((fixtures_dir / "figures.json").read_text())
    for key, col in (("fig1", fig1_coloring()), ("fig2", fig2_coloring())):
        spec = figs[key]
        assert col.n == spec["n"]
        for e in spec["red"]:
            assert col.color_of(e) == 0
        for e in spec["blue"]:
            assert col.color_of(e) == 1
        drawn = {tuple(e) for e in spec["red"] + spec["blue"]}
        assert all(c == RED for e, c in col.items() if e not in drawn)


def test_block_product_lower_bounds_for_monotone_paths():
    for n in (3, 4):
        col = block_product_coloring(n - 1, n - 1, monotone_path(n))
        assert col.n == (n - 1) ** 2
        assert is_free_both(col, monotone_path(n)).free
    with pytest.raises(ConstructionError):
        block_product_coloring(2, 3, monotone_path(3))


def _cert(g: OrderedGraph) -> Certificate:
    return ramsey_number(g).lower_cert


def test_disjoint_union_coloring_size():
    e = OrderedGraph.from_edges(2, [(0, 1)])
    p3 = monotone_path(3)
    for g, h in [(e, e), (e, p3), (p3, e), (p3, p3)]:
        rg, rh = ramsey_number(g).value, ramsey_number(h).value
        col = disjoint_union_coloring(_cert(g), _cert(h))
        assert col.n == rg + rh - 1
        assert is_free_both(col, ordered_sum(g, h)).free


def test_spread_blowup_coloring():
    p3 = monotone_path(3)
    for k in (2, 3):
        col = spread_blowup_coloring(_cert(p3), k)
        assert col.n == (k - 1) * 4
        assert is_free_both(col, uniform_spread(p3, k)).free


def test_pendant_lower_coloring():
    p3 = monotone_path(3)
    col = pendant_lower_coloring(_cert(p3))
    assert col.n == 4 + 3 and is_free_both(col, append_pendant_edge(p3)).free
    g = OrderedGraph.from_edges(3, [(1, 2)])
    with pytest.raises(ConstructionError):
        pendant_lower_coloring(_cert(g))


def test_bad_input_certificate_is_rejected():
    bad = Certificate("lower-bound", monotone_path(3), 5, EdgeColoring.from_function(5, 2, lambda e: RED))
    with pytest.raises(ConstructionError):
        spread_blowup_coloring(bad, 2)


def test_generate_registry():
    assert generate("alternating-cycle", n=8) == alternating_cycle(8)
    assert generate("block-product", blocks=2, blocksize=2).n == 4
    with pytest.raises(ConstructionError):
        generate("nope")
    with pytest.raises(ConstructionError):
        generate("tight-hyperpath", n=4)
