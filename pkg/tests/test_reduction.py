import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stopset.graphs import Graph, random_graph
from stopset.oracles import is_vertex_cover
from stopset.reduction import (
    ReductionError,
    build_reduction,
    check_structure,
    cover_to_stopping_set,
    expected_sizes,
    stopping_set_to_cover,
    target_size,
    verify_corollaries,
)
from stopset.stopping import VarSet, enumerate_stopping_sets, is_stopping_set

from conftest import PATH4, SINGLE_EDGE, TRIANGLE, connected_graphs


def test_single_edge_sizes():
    inst = build_reduction(SINGLE_EDGE)
    t = inst.product
    # L0: 1, L1..L2: 2 each; R0 empty, R1: 1, R2: 2
    # edges: bullet1 2, bullet2 2, bullet3 2, bullet4 1, bullet5 0
    assert (t.n_vars, t.n_checks, t.n_edges) == (5, 3, 7)
    assert not [lab for lab in inst.check_labels if lab.layer == 0]


def test_single_edge_layout():
    inst = build_reduction(SINGLE_EDGE)
    assert [str(lab) for lab in inst.var_labels] == ["0-1@L0", "0@L1", "1@L1", "0@L2", "1@L2"]
    assert [str(lab) for lab in inst.check_labels] == ["0-1@R1", "0@R2", "1@R2"]
    # R1 check: both L1 copies and the edge variable; R2 checks: copies in L1 and L2
    assert inst.product.check_adj == ((0, 1, 2), (1, 3), (2, 4))


def test_n4_m3_sizes():
    t = build_reduction(PATH4).product
    assert (t.n_vars, t.n_checks, t.n_edges) == (19, 17, 37)


def test_triangle_sizes():
    t = build_reduction(TRIANGLE).product
    assert (t.n_vars, t.n_checks, t.n_edges) == (15, 14, 31)


def test_chain_checks_link_consecutive_edge_variables():
    inst = build_reduction(PATH4)
    chain = [inst.product.check_adj[j] for j, lab in enumerate(inst.check_labels) if lab.layer == 0]
    assert chain == [(0, 1), (1, 2)]


def test_vertex_copies_form_a_ladder():
    inst = build_reduction(TRIANGLE)
    m = inst.m
    for u in range(inst.n):
        for i in range(1, m + 2):
            checks = inst.product.var_adj[inst.var(u, i)]
            labels = [inst.check_labels[c] for c in checks]
            layers = sorted(lab.layer for lab in labels)
            if i == 1:
                assert layers == [1, 1, 2]  # two incident edges in a triangle
            elif i == m + 1:
                assert layers == [m + 1]
            else:
                assert layers == [i, i + 1]


def test_rejects_disconnected_and_edgeless():
    with pytest.raises(ReductionError, match="connected"):
        build_reduction(Graph(3, ((0, 1),)))
    with pytest.raises(ReductionError):
        build_reduction(Graph(1))


@given(connected_graphs(max_n=7, max_m=12))
def test_size_formulas(g):
    inst = build_reduction(g)
    t = inst.product
    assert (t.n_vars, t.n_checks, t.n_edges) == expected_sizes(g.n, g.m)
    assert (t.n_vars, t.n_checks, t.n_edges) == (
        g.n * (g.m + 1) + g.m,
        g.n * g.m + 2 * g.m - 1,
        2 * g.n * g.m + 5 * g.m - 2,
    )
    assert all(t.var_adj)


def test_build_is_deterministic():
    g = random_graph(5, 7, random.Random(1), connected=True)
    assert build_reduction(g).product == build_reduction(g).product


def test_target_size():
    one = build_reduction(SINGLE_EDGE)
    p4 = build_reduction(PATH4)
    assert target_size(1, one) == 3
    assert target_size(2, p4) == 11
    assert target_size(3, p4) == 15
    with pytest.raises(ValueError):
        target_size(0, p4)
    with pytest.raises(ValueError):
        target_size(4, p4)


def test_cover_to_stopping_set_single_edge():
    inst = build_reduction(SINGLE_EDGE)
    s = cover_to_stopping_set(inst, {0})
    assert s.sorted() == [0, inst.var(0, 1), inst.var(0, 2)] == [0, 1, 3]
    assert is_stopping_set(inst.product, s)


def test_cover_to_stopping_set_triangle():
    inst = build_reduction(TRIANGLE)
    s = cover_to_stopping_set(inst, {0, 1})
    assert len(s) == 11 and is_stopping_set(inst.product, s)


def test_cover_to_stopping_set_rejects_non_cover():
    inst = build_reduction(TRIANGLE)
    with pytest.raises(ReductionError, match=r"\(1, 2\) uncovered"):
        cover_to_stopping_set(inst, {0})
    with pytest.raises(ValueError):
        cover_to_stopping_set(inst, {0, 1, 2})  # size n is outside the t range


def test_stopping_set_to_cover_single_edge():
    inst = build_reduction(SINGLE_EDGE)
    assert stopping_set_to_cover(inst, [0, 1, 3]) == {0}


def test_triangle_gadget_sets_of_size_11_are_covers():
    inst = build_reduction(TRIANGLE)
    found = [s for s in enumerate_stopping_sets(inst.product) if len(s) == 11]
    assert found
    covers = {stopping_set_to_cover(inst, s) for s in found}
    assert covers == {frozenset(c) for c in combinations(range(3), 2)}


def test_l0_alone_is_rejected():
    inst = build_reduction(TRIANGLE)
    with pytest.raises(ReductionError, match="not a stopping set"):
        stopping_set_to_cover(inst, inst.layer_vars(0))


def test_large_stopping_set_outside_hypothesis():
    inst = build_reduction(TRIANGLE)
    layers = [v for i in range(1, inst.m + 2) for v in inst.layer_vars(i)]
    assert is_stopping_set(inst.product, layers)
    with pytest.raises(ReductionError, match="outside"):
        stopping_set_to_cover(inst, layers)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=6, max_m=8), st.data())
def test_round_trip_cover(g, data):
    inst = build_reduction(g)
    cover = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=g.n - 1))
    if not is_vertex_cover(g, cover):
        return
    s = cover_to_stopping_set(inst, cover)
    assert len(s) == target_size(len(cover), inst)
    assert stopping_set_to_cover(inst, s) == cover


def test_structure_of_if_image():
    inst = build_reduction(TRIANGLE)
    rep = check_structure(inst, cover_to_stopping_set(inst, {0, 1}))
    assert rep.ok and rep.l0_included
    assert rep.layer_counts == (2, 2, 2, 2)


def test_structure_of_all_vertex_layers():
    for g in (SINGLE_EDGE, TRIANGLE, PATH4):
        inst = build_reduction(g)
        s = [v for i in range(1, inst.m + 2) for v in inst.layer_vars(i)]
        rep = check_structure(inst, s)
        assert rep.ok and not rep.l0_included
        assert set(rep.layer_counts) == {g.n}


def test_structure_rejects_corrupted_set():
    inst = build_reduction(TRIANGLE)
    s = cover_to_stopping_set(inst, {0, 1})
    broken = VarSet(s.members - {inst.var(0, 3)}, s.universe_size)
    with pytest.raises(ReductionError):
        check_structure(inst, broken)


@pytest.mark.parametrize(
    "g, tau, distance, rows",
    [
        (SINGLE_EDGE, 1, 3, [(1, True, True)]),
        (TRIANGLE, 2, 11, [(1, False, False), (2, True, True)]),
        (PATH4, 2, 11, [(1, False, False), (2, True, True), (3, True, True)]),
    ],
)
def test_verify_corollaries_examples(g, tau, distance, rows):
    rep = verify_corollaries(g)
    assert rep.passed
    assert rep.tau == tau and rep.distance == distance == rep.expected_distance
    assert [(r.t, r.cover_exists, r.stopping_set_exists) for r in rep.rows] == rows
    d = rep.to_dict()
    assert d["verdict"] == "PASS" and "counterexample" not in d


def test_verify_corollaries_parallel_rows_match():
    g = random_graph(5, 6, random.Random(4), connected=True)
    assert verify_corollaries(g, workers=2) == verify_corollaries(g, workers=1)
