from __future__ import annotations

import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import brute_has_free_coloring

from ordram.constructions import block_product_coloring, fig1_coloring, fig2_coloring, monotone_path, nested_matching
from ordram.extremal import ex_exact
from ordram.graphs import OrderedGraph, OrderedHypergraph, StructureError, all_graphs, contains, matrix_of_graph
from ordram.ramsey import (
    BLUE,
    RED,
    Certificate,
    CertificateError,
    EdgeColoring,
    SearchConfig,
    colex_subsets,
    exists_free_coloring,
    is_free,
    is_free_both,
    matrix_excluded_values,
    ramsey_number,
    random_blowup_probe,
    verify_certificate,
)

FIG1 = OrderedGraph.from_edges(6, [(1, 2), (3, 4)])
FIG2 = OrderedGraph.from_edges(6, [(0, 1), (4, 5)])
EDGE = OrderedGraph.from_edges(2, [(0, 1)])


def flip(col: EdgeColoring, e: tuple[int, ...]) -> EdgeColoring:
    return EdgeColoring.from_function(col.n, col.d, lambda x: 1 - col.color_of(x) if x == e else col.color_of(x))


def test_coloring_format_round_trip_and_validation():
    col = fig1_coloring()
    obj = json.loads(json.dumps(col.to_json()))
    assert EdgeColoring.from_json(obj) == col
    assert len(obj["colors"]) == 21
    bad = dict(obj, colors=obj["colors"][:-1])
    with pytest.raises(StructureError):
        EdgeColoring.from_json(bad)
    dup = dict(obj, colors=obj["colors"] + [obj["colors"][0]])
    with pytest.raises(StructureError):
        EdgeColoring.from_json(dup)


def test_colex_order_puts_early_vertices_first():
    assert colex_subsets(4, 2) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def test_is_free_examples():
    all_red = EdgeColoring.from_function(5, 2, lambda e: RED)
    assert is_free(all_red, EDGE, BLUE).free
    v = is_free(all_red, EDGE, RED)
    assert not v.free and v.embedding == (0, 1)
    assert is_free_both(fig1_coloring(), FIG1).free
    assert is_free_both(fig2_coloring(), FIG2).free
    with pytest.raises(StructureError):
        is_free(all_red, OrderedHypergraph.from_edges(3, 3, [(0, 1, 2)]), RED)


def test_figure_colorings_match_drawn_edges():
    c1 = fig1_coloring()
    assert {e for e, c in c1.items() if c == BLUE} == {(3, 4), (3, 5), (4, 5)}
    c2 = fig2_coloring()
    assert {e for e, c in c2.items() if c == BLUE} == set(combinations(range(4, 9), 2)) - {(4, 4)}


def small_targets():
    out = []
    for n in range(2, 5):
        out.extend(g for g in all_graphs(n) if g.edges)
    return out


def test_engine_agrees_with_exhaustive_colorings():
    for g in small_targets():
        for n in range(g.n, 6):
            res = exists_free_coloring(n, g)
            expected = brute_has_free_coloring(n, 2, set(g.edges), g.n)
            assert (res.status == "free") == expected, (g, n)
            if res.status == "free":
                assert is_free_both(res.coloring, g).free


def test_engine_agrees_at_six_vertices_for_three_vertex_targets():
    for g in all_graphs(3):
        if g.edges:
            res = exists_free_coloring(6, g)
            assert (res.status == "free") == brute_has_free_coloring(6, 2, set(g.edges), 3)


def test_hypergraph_engine_against_exhaustive():
    targets = [
        OrderedHypergraph.from_edges(4, 3, [(0, 1, 2), (1, 2, 3)]),
        OrderedHypergraph.from_edges(4, 3, [(0, 1, 3)]),
        OrderedHypergraph.from_edges(4, 3, [(0, 1, 2), (0, 2, 3)]),
        OrderedHypergraph.from_edges(3, 3, [(0, 1, 2)]),
    ]
    for g in targets:
        for n in range(g.n, 6):
            res = exists_free_coloring(n, g)
            assert (res.status == "free") == brute_has_free_coloring(n, 3, set(g.edges), g.n), (g, n)


def test_symmetry_breaking_is_sound_and_invisible():
    for g in small_targets():
        for n in (g.n + 1, g.n + 2):
            runs = [
                exists_free_coloring(n, g, SearchConfig(color_swap=s, mirror=m))
                for s in (False, True)
                for m in (False, True)
            ]
            assert len({r.status for r in runs}) == 1
            assert len({r.coloring for r in runs}) == 1


def test_mirror_flag_dropped_for_asymmetric_target():
    assert exists_free_coloring(7, FIG1, SearchConfig(mirror=True)).meta["mirror"] is True
    res = exists_free_coloring(4, OrderedGraph.from_edges(3, [(0, 1)]), SearchConfig(mirror=True))
    assert res.meta["mirror"] is False and "mirror_note" in res.meta
    sym = OrderedGraph.from_edges(4, [(0, 3)])
    assert exists_free_coloring(5, sym, SearchConfig(mirror=True)).meta["mirror"] is True


def test_single_edge_has_no_free_coloring():
    res = exists_free_coloring(2, EDGE)
    assert res.status == "none"


def test_p3_on_four_vertices_is_free():
    res = exists_free_coloring(4, monotone_path(3))
    assert res.status == "free"
    assert is_free_both(block_product_coloring(2, 2), monotone_path(3)).free


def test_fig1_target_free_on_seven():
    res = exists_free_coloring(7, FIG1)
    assert res.status == "free" and is_free_both(res.coloring, FIG1).free


def test_ramsey_small_values():
    for k in range(1, 5):
        assert ramsey_number(OrderedGraph.from_edges(k, [])).value == k
    assert ramsey_number(EDGE).value == 2
    assert ramsey_number(monotone_path(3)).value == 5
    r = ramsey_number(FIG1)
    assert r.exact and r.value == 8


def test_ramsey_fig2_target():
    r = ramsey_number(FIG2, SearchConfig(max_n=10))
    assert r.exact and r.value == 10


def test_budget_gives_inconclusive_bracket():
    r = ramsey_number(FIG1, SearchConfig(budget=1))
    assert not r.exact and r.upper is None and r.bracket().endswith("R <= ?")
    res = exists_free_coloring(8, FIG1, SearchConfig(budget=5))
    assert res.status == "inconclusive"


def test_max_n_gives_bracket():
    r = ramsey_number(FIG1, SearchConfig(max_n=6))
    assert not r.exact and r.lower == 7


def test_start_lower_must_be_free():
    r = ramsey_number(FIG2, SearchConfig(max_n=9), start_lower=fig2_coloring())
    assert r.lower == 10 and not r.exact
    with pytest.raises(CertificateError):
        ramsey_number(FIG1, start_lower=EdgeColoring.from_function(7, 2, lambda e: RED))


def test_certificates_round_trip_and_reverify(tmp_path):
    r = ramsey_number(monotone_path(3))
    for cert in (r.lower_cert, r.upper_cert):
        path = tmp_path / f"{cert.kind}.json"
        path.write_text(json.dumps(cert.to_json()))
        back = Certificate.from_json(json.loads(path.read_text()))
        assert back == cert
        assert verify_certificate(back).ok
    assert verify_certificate(r.upper_cert, rerun=True).ok


def test_tampered_certificates_fail():
    cert = Certificate("lower-bound", FIG2, 9, fig2_coloring())
    assert verify_certificate(cert).ok
    bad = Certificate("lower-bound", FIG2, 9, flip(fig2_coloring(), (0, 1)))
    v = verify_certificate(bad)
    assert not v.ok and v.embedding is not None
    assert not contains(bad.coloring.color_class(v.color), FIG2)[0] is False
    up = ramsey_number(monotone_path(3)).upper_cert
    forged = Certificate("upper-bound", up.target, up.n, None, dict(up.meta, transcript="0" * 64))
    assert verify_certificate(forged).ok
    assert not verify_certificate(forged, rerun=True).ok
    missing = Certificate("upper-bound", up.target, up.n, None, {"nodes": 1})
    assert not verify_certificate(missing).ok
    with pytest.raises(CertificateError):
        Certificate.from_json({"kind": "lower-bound"})


def test_determinism_across_workers_and_runs():
    for g, n in [(FIG1, 8), (FIG1, 7), (monotone_path(4), 9)]:
        runs = [exists_free_coloring(n, g, SearchConfig(workers=w, split_depth=4)) for w in (1, 4, 1)]
        keys = {(r.status, r.coloring, r.nodes, r.transcript) for r in runs}
        assert len(keys) == 1


def test_matrix_bound_degenerate_and_consistency():
    entries = matrix_excluded_values(EDGE, range(1, 6))
    assert entries[0].status == "degenerate"
    assert all(e.status == "excluded" for e in entries[1:])
    c4 = OrderedGraph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    r = ramsey_number(c4, SearchConfig(max_n=12))
    assert r.exact and r.value == 10
    entry = matrix_excluded_values(c4, [9])[0]
    assert entry.dims == (4, 5) and entry.status == "allowed"
    # the square floor reading would exclude 9 even though a free colouring of K_9 exists
    assert verify_certificate(r.lower_cert).ok and r.lower_cert.n == 9
    assert 9 * 9 > 8 * ex_exact((4, 4), matrix_of_graph(c4)).value
    with pytest.raises(StructureError):
        matrix_excluded_values(monotone_path(3), [4])


def test_blowup_probe():
    assert random_blowup_probe(1, 2, EDGE, trials=20) is None
    cert = random_blowup_probe(3, 2, nested_matching(3), seed=1, trials=100)
    if cert is not None:
        assert verify_certificate(cert).ok
    found = random_blowup_probe(3, 2, FIG1, seed=0, trials=200)
    assert found is not None and found.n == 6 and verify_certificate(found).ok
    for seed in range(5):
        assert random_blowup_probe(4, 2, FIG1, seed=seed, trials=50) is None
    with pytest.raises(ValueError):
        random_blowup_probe(0, 1, EDGE)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**10 - 1))
def test_free_verdict_matches_containment(mask):
    col = EdgeColoring(5, 2, tuple(mask >> i & 1 for i in range(10)))
    for g in (monotone_path(3), OrderedGraph.from_edges(3, [(0, 2)])):
        v = is_free_both(col, g)
        red = contains(col.color_class(RED), g)[0]
        blue = contains(col.color_class(BLUE), g)[0]
        assert v.free == (not red and not blue)
