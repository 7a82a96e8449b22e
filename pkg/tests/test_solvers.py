"""Exact oracles, the branching decision procedure, greedy, and subset DP."""

import math
import random
from itertools import permutations

import pytest
from conftest import K3_EDGES, hypergraphs
from hypothesis import given, settings
from hypothesis import strategies as st

from mssc.errors import BudgetExceeded, IncompleteCoverError, InputError
from mssc.generators import SimpleGraph, build_b_q, build_figure1, build_h_g, random_hypergraph
from mssc.hypergraph import Hypergraph, effective_coverage, normalize, solution_cost
from mssc.solvers import (
    Instance,
    brute_force_mssc,
    brute_force_tau,
    find_sunflower,
    fpt_decide,
    greedy_mssc,
    held_karp_order,
    min_cost_by_cover_limit,
    permutation_order,
    sunflower_threshold,
    tau_arrow,
)
from mssc.solvers import held_karp

K3 = Hypergraph(3, K3_EDGES)


def exhaustive(H):
    """phi and tau_arrow over every full permutation (tiny instances only)."""
    best, best_size = None, 0
    for perm in permutations(H.vertices):
        perm = normalize(H, perm)
        profile = effective_coverage(H, perm)
        if best is None or profile.total_cost < best:
            best, best_size = profile.total_cost, profile.cover_size
        elif profile.total_cost == best:
            best_size = max(best_size, profile.cover_size)
    return best, best_size


# ---------------------------------------------------------------- tau

def test_tau_examples():
    assert brute_force_tau(K3)[0] == 2
    H, labels = build_h_g(SimpleGraph.cycle(4))
    tau, cover = brute_force_tau(H)
    assert tau == 3
    assert {labels[v] for v in cover} == {"b1", "b2", "b3"}
    H, layout = build_b_q(2, 1)
    tau, cover = brute_force_tau(H)
    assert tau == 4 and cover == frozenset(layout.ids("L"))


def test_tau_on_h_g_with_three_vertices_ties_a_and_b():
    # for n = 3 both A and B are minimum covers; the smallest ids win
    H, labels = build_h_g(SimpleGraph.path(3))
    tau, cover = brute_force_tau(H)
    assert tau == 3
    assert {labels[v] for v in cover} == {"a1", "a2", "a3"}


# ---------------------------------------------------------------- brute force

def test_brute_force_k3():
    res = brute_force_mssc(K3, collect_optima=True)
    assert (res.phi, res.tau, res.tau_arrow) == (4, 2, 2)
    assert res.witness == (1, 2)
    assert len(res.optima) == 6


def test_brute_force_h_g_path3():
    H, labels = build_h_g(SimpleGraph.path(3))
    res = brute_force_mssc(H, collect_optima=True)
    assert res.tau_arrow == 3
    for order in res.optima:
        assert {labels[v][0] for v in order} == {"a"}


def test_brute_force_edgeless_and_budget():
    res = brute_force_mssc(Hypergraph(4))
    assert (res.phi, res.tau, res.tau_arrow, res.witness) == (0, 0, 0, ())
    assert tau_arrow(Hypergraph(2)) == 0
    H, _ = build_figure1()
    with pytest.raises(BudgetExceeded):
        brute_force_mssc(H, budget=1000)


def test_tau_arrow_h_g():
    assert tau_arrow(build_h_g(SimpleGraph.empty(3))[0]) == 3
    assert tau_arrow(build_h_g(SimpleGraph.complete(4))[0]) == 4


@given(hypergraphs(max_n=6, max_m=8))
@settings(max_examples=120, deadline=None)
def test_brute_force_matches_permutation_enumeration(H):
    res = brute_force_mssc(H)
    assert (res.phi, res.tau_arrow) == exhaustive(H)
    assert solution_cost(H, res.witness) == res.phi
    assert solution_cost(H, res.witness_min) == res.phi
    assert len(res.witness) == res.tau_arrow
    assert res.tau == brute_force_tau(H)[0] <= len(res.witness_min) <= res.tau_arrow


@given(hypergraphs(max_n=6, max_m=8))
@settings(max_examples=80, deadline=None)
def test_collected_optima_are_all_optima(H):
    res = brute_force_mssc(H, collect_optima=True)
    expected = set()
    for perm in permutations(H.vertices):
        if solution_cost(H, perm) == res.phi:
            profile = effective_coverage(H, perm)
            expected.add(perm[: profile.cover_size])
    assert set(res.optima) == expected


def test_cover_limit_table():
    g = min_cost_by_cover_limit(K3)
    assert g == [None, None, 4, 4]


# ---------------------------------------------------------------- sunflower

def test_sunflower_examples():
    star = Hypergraph(4, [(1, 2), (1, 3), (1, 4)])
    flower = find_sunflower(star, 3)
    assert flower.core == {1} and len(flower.petals) == 3 and flower.is_valid()
    matching = Hypergraph(6, [(1, 2), (3, 4), (5, 6)])
    flower = find_sunflower(matching, 3)
    assert flower.core == frozenset() and len(flower.petals) == 3
    with pytest.raises(InputError):
        find_sunflower(star, 0)


def test_sunflower_threshold_formula():
    assert sunflower_threshold(2, 3) == 2 * 2 * 4
    assert sunflower_threshold(3, 2) == 3 * 6 * 1


@given(st.integers(2, 3), st.integers(2, 4), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_sunflower_above_threshold(rank, k, seed):
    need = sunflower_threshold(rank, k) + 1
    n = 14 if rank == 2 else 22
    H = random_hypergraph(n, need, rank, seed)
    flower = find_sunflower(H, k)
    assert flower is not None and len(flower.petals) >= k and flower.is_valid()
    assert len(flower.core) <= H.rank


# ---------------------------------------------------------------- decision

def test_fpt_examples():
    yes = fpt_decide(Instance(K3, 2, 4))
    assert yes and yes.ordering == (1, 2) and yes.cost == 4
    assert not fpt_decide(Instance(K3, 1, 100))
    assert not fpt_decide(Instance(K3, 2, 3))
    assert fpt_decide(Instance(Hypergraph(2), 0, 0))


def test_fpt_instance_validation():
    with pytest.raises(InputError):
        Instance(K3, 4, 10)
    with pytest.raises(InputError):
        Instance(K3, -1, 10)


def test_fpt_takes_sunflower_steps_on_a_large_star():
    # 40 edges around vertex 1 exceed the rank-2 threshold for k = 2
    star = Hypergraph(41, [(1, v) for v in range(2, 42)])
    stats = {}
    res = fpt_decide(Instance(star, 2, 40), stats=stats)
    assert res and res.ordering == (1,)
    assert stats["sunflowers"] >= 1


@given(hypergraphs(max_n=6, max_m=10), st.data())
@settings(max_examples=120, deadline=None)
def test_fpt_agrees_with_oracle(H, data):
    g = min_cost_by_cover_limit(H)
    k = data.draw(st.integers(0, H.vertex_count))
    w = data.draw(st.integers(0, 3 * H.num_edges + 1))
    for method in ("held-karp", "permutations"):
        res = fpt_decide(Instance(H, k, w), ordering=method)
        assert res.answer == (g[k] is not None and g[k] <= w)
        if res:
            assert len(res.ordering) <= k and H.covers(res.ordering)
            assert solution_cost(H, res.ordering) == res.cost <= w


# ---------------------------------------------------------------- greedy

def test_greedy_examples():
    assert greedy_mssc(K3) == ((1, 2), 4)
    star = Hypergraph(6, [(1, v) for v in range(2, 7)])
    assert greedy_mssc(star) == ((1,), 5)
    H, _ = build_figure1()
    _, cost = greedy_mssc(H)
    assert 122 <= cost <= 4 * 122


@given(hypergraphs(max_n=6, max_m=10))
@settings(max_examples=100, deadline=None)
def test_greedy_within_factor_four(H):
    order, cost = greedy_mssc(H)
    phi = brute_force_mssc(H).phi
    assert phi <= cost <= 4 * phi
    assert normalize(H, order)[: len(order)] == order


# ---------------------------------------------------------------- ordering DP

def test_held_karp_examples():
    assert held_karp_order(K3, {1, 2}) == ((1, 2), 4)
    assert held_karp_order(Hypergraph(2, [(1, 2)]), {1}) == ((1,), 1)
    H, _ = build_h_g(SimpleGraph.path(3))
    _, cost = held_karp_order(H, H.vertices)
    assert cost < 36


def test_held_karp_errors():
    with pytest.raises(IncompleteCoverError):
        held_karp_order(K3, {1})
    with pytest.raises(BudgetExceeded):
        held_karp_order(K3, {1, 2, 3}, limit=2)
    with pytest.raises(InputError):
        held_karp_order(K3, {1, 9})


@given(hypergraphs(max_n=7, max_m=12, min_m=1), st.data())
@settings(max_examples=150, deadline=None)
def test_held_karp_matches_permutations(H, data):
    extra = data.draw(st.sets(st.sampled_from(list(H.vertices))))
    S = set(greedy_mssc(H)[0]) | extra
    order, cost = held_karp_order(H, S)
    assert sorted(order) == sorted(S)
    assert solution_cost(H, order) == cost
    if len(S) <= 6:
        best = min((solution_cost(H, p), p) for p in permutations(sorted(S)))
        assert (cost, order) == best
        assert permutation_order(H, S)[1] == cost


def test_numpy_and_python_dp_agree():
    rng = random.Random(5)
    for seed in range(20):
        H = random_hypergraph(9, rng.randint(5, 25), 3, seed)
        cover = sorted(greedy_mssc(H)[0] + tuple(rng.sample(range(1, 10), 3)))
        cover = sorted(set(cover))
        a = held_karp._dp_python(H, cover)
        b = held_karp._dp_numpy(H, cover)
        assert list(a[0]) == list(b[0])
        assert list(a[1]) == list(b[1])


def test_numpy_path_handles_large_cover():
    H = random_hypergraph(16, 60, 3, 3)
    order, cost = held_karp_order(H, H.vertices)
    assert len(order) == 16
    assert solution_cost(H, order) == cost == brute_force_mssc(H).phi
