import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stopset.decoder import mc_failure_rate, peel, peel_random_order
from stopset.graphs import TannerGraph, incidence_graph, random_tanner
from stopset.reduction import build_reduction, cover_to_stopping_set
from stopset.stopping import VarSet, enumerate_stopping_sets, is_stopping_set

from conftest import TRIANGLE, tanner_graphs

ONE_CHECK = TannerGraph(2, ((0, 1),))


def test_peel_nothing_erased():
    r = peel(ONE_CHECK, [])
    assert r.success and len(r.residual) == 0 and r.rounds == 0


def test_peel_single_erasure_resolved():
    r = peel(ONE_CHECK, [0])
    assert r.success and r.rounds == 1


def test_peel_chain_takes_several_rounds():
    # path of checks: x0 erased alone at the left end unlocks x1, then x2
    t = TannerGraph(4, ((0, 3), (0, 1), (1, 2)))
    r = peel(t, [0, 1, 2])
    assert r.success and r.rounds == 3


def test_peel_stuck_on_stopping_set():
    inst = build_reduction(TRIANGLE)
    s = cover_to_stopping_set(inst, {0, 2})
    extra = next(v for v in range(inst.product.n_vars) if v not in s)
    r = peel(inst.product, s.sorted() + [extra])
    assert not r.success
    assert s <= r.residual and is_stopping_set(inst.product, r.residual)


def test_peel_universe_mismatch():
    with pytest.raises(ValueError):
        peel(ONE_CHECK, VarSet.of(3, [0]))


def contained_union(t, erased):
    out = set()
    for s in enumerate_stopping_sets(t):
        if s.members <= erased:
            out |= s.members
    return out


@settings(deadline=None)
@given(tanner_graphs(max_vars=10), st.data())
def test_residual_is_union_of_contained_stopping_sets(t, data):
    erased = data.draw(st.sets(st.integers(0, t.n_vars - 1)))
    r = peel(t, erased)
    assert is_stopping_set(t, r.residual)
    assert r.residual.members <= erased
    assert r.residual.members == contained_union(t, erased)


def test_confluence_500_instances():
    rng = random.Random(99)
    for _ in range(500):
        n = rng.randint(1, 16)
        t = random_tanner(n, rng.randint(0, 12), rng.uniform(0.1, 0.5), rng)
        erased = [i for i in range(n) if rng.random() < 0.6]
        fifo = peel(t, erased).residual
        for _ in range(3):
            assert peel_random_order(t, erased, rng) == fifo


def test_mc_extremes():
    t = incidence_graph(TRIANGLE)
    assert mc_failure_rate(t, 0.0, 200, seed=1).rate == 0.0
    assert mc_failure_rate(t, 1.0, 200, seed=1).rate == 1.0


def test_mc_reproducible_and_sharded():
    t = incidence_graph(TRIANGLE)
    a = mc_failure_rate(t, 0.5, 2000, seed=3, shards=4)
    b = mc_failure_rate(t, 0.5, 2000, seed=3, shards=4)
    c = mc_failure_rate(t, 0.5, 2000, seed=3, shards=4, workers=2)
    assert a == b == c
    assert a.to_dict()["shards"] == 4


def test_mc_triangle_rate():
    # failure iff all three variables erased: 0.5**3
    rep = mc_failure_rate(incidence_graph(TRIANGLE), 0.5, 10_000, seed=0)
    assert abs(rep.rate - 0.125) <= 0.02


@pytest.mark.parametrize("eps, trials", [(-0.1, 10), (1.5, 10), (0.5, 0)])
def test_mc_rejects_bad_arguments(eps, trials):
    with pytest.raises(ValueError):
        mc_failure_rate(ONE_CHECK, eps, trials, seed=0)
