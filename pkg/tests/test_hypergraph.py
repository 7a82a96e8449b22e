"""Hypergraph type, cost model, normalization, and the dominance relation."""

import pytest
from conftest import K3_EDGES, hypergraph_with_ordering, hypergraphs
from hypothesis import given, settings
from hypothesis import strategies as st

from mssc.errors import IncompleteCoverError, InputError, UncoverableError
from mssc.generators import build_b_q, build_h_g, SimpleGraph, pi_b_ordering
from mssc.hypergraph import (
    Dominance,
    Hypergraph,
    dominance_compare,
    effective_coverage,
    extend_ordering,
    implied_cover,
    normalize,
    remove_vertices,
    solution_cost,
)

K3 = Hypergraph(3, K3_EDGES)


def test_construction_dedupes_and_reports_rank():
    H = Hypergraph(4, [(1, 2), (2, 1), (3,), (1, 2, 4)])
    assert H.num_edges == 3
    assert H.duplicates_merged == 1
    assert H.rank == 3
    assert Hypergraph(5).rank == 0


def test_construction_rejects_bad_edges():
    with pytest.raises(UncoverableError):
        Hypergraph(3, [(1,), ()])
    with pytest.raises(InputError):
        Hypergraph(3, [(1, 4)])
    with pytest.raises(InputError):
        Hypergraph(-1)


def test_bitsets():
    H = Hypergraph(4, [(1, 3), (2, 3)])
    assert H.edge_masks == (0b101, 0b110)
    assert H.incidence[3] == 0b11
    assert H.degree(3) == 2 and H.degree(4) == 0
    assert H.covers([3]) and not H.covers([1])


def test_equality_ignores_edge_order():
    assert Hypergraph(3, [(1, 2), (2, 3)]) == Hypergraph(3, [(3, 2), (2, 1)])
    assert Hypergraph(3, [(1, 2)]) != Hypergraph(4, [(1, 2)])


def test_remove_vertices_examples():
    H = Hypergraph(3, [(1, 2), (2, 3)])
    rest, id_map = remove_vertices(H, {2})
    assert (rest.vertex_count, rest.num_edges) == (2, 0)
    assert id_map == {1: 1, 3: 2}
    same, id_map = remove_vertices(K3, set())
    assert same == K3 and id_map == {1: 1, 2: 2, 3: 3}
    with pytest.raises(InputError):
        remove_vertices(K3, {7})


def test_remove_top_class_of_b1_leaves_two_matchings():
    H, layout = build_b_q(2, 1)
    rest, _ = remove_vertices(H, layout.ids("R1"))
    assert rest.num_edges == 4
    assert rest.rank == 2
    assert all(rest.degree(v) == 1 for v in rest.vertices)


def test_effective_coverage_k3():
    profile = effective_coverage(K3, (1, 2, 3))
    assert profile.coverages == (2, 1, 0)
    assert profile.total_cost == 4
    assert profile.cover_size == 2


def test_effective_coverage_pi_b():
    G = SimpleGraph.path(4)
    H, _ = build_h_g(G)
    r = G.n + G.m + (2**4 - 1 - 4 - 6)
    assert effective_coverage(H, pi_b_ordering(4)).coverages == (r, r, r, 0, 0, 0, 0)


def test_effective_coverage_rejects_unknown_vertex():
    with pytest.raises(InputError):
        effective_coverage(K3, (1, 5))
    with pytest.raises(InputError):
        effective_coverage(K3, (1, 1))


def test_solution_cost_examples():
    H, _ = build_h_g(SimpleGraph.path(3))
    assert solution_cost(H, pi_b_ordering(3)) == 36
    assert solution_cost(K3, (1, 2)) == 4
    assert solution_cost(Hypergraph(1, [(1,)]), (1,)) == 1


def test_prefix_extends_by_ascending_id():
    assert extend_ordering(Hypergraph(5), (4, 2)) == (4, 2, 1, 3, 5)


def test_implied_cover_examples():
    assert implied_cover(K3, (1, 2, 3)) == {1, 2}
    assert implied_cover(Hypergraph(3), ()) == frozenset()
    with pytest.raises(IncompleteCoverError) as info:
        implied_cover(K3, (1,))
    assert info.value.edge == (2, 3)


def test_normalize_examples():
    H = Hypergraph(3, [(1,), (3,)])
    assert solution_cost(H, (1, 2, 3)) == 4
    assert normalize(H, (1, 2, 3)) == (1, 3, 2)
    assert solution_cost(H, (1, 3, 2)) == 3
    assert normalize(K3, (3, 1, 2)) == (3, 1, 2)
    assert normalize(K3, (1, 2, 3)) == (1, 2, 3)


def test_dominance_examples():
    res = dominance_compare((1, 1, 1), (2, 1, 0))
    assert res.relation is Dominance.STRICT and (res.weighted, res.weighted_other) == (6, 4)
    assert dominance_compare((3, 2, 1), (3, 2, 1)).relation is Dominance.EQUAL
    res = dominance_compare((2, 2, 0), (3, 1, 0))
    assert res.relation is Dominance.STRICT and (res.weighted, res.weighted_other) == (6, 5)


def test_dominance_precondition_and_errors():
    # increasing sequence: no claim is made
    assert dominance_compare((0, 1, 2), (1, 1, 1)).relation is Dominance.PRECONDITION_VIOLATED
    with pytest.raises(InputError):
        dominance_compare((1, 1), (1, 1, 0))
    with pytest.raises(InputError):
        dominance_compare((2, 1), (1, 1))


@given(hypergraph_with_ordering())
@settings(max_examples=200)
def test_two_route_cost_agreement(case):
    H, sigma = case
    profile = effective_coverage(H, sigma)
    assert sum(profile.coverages) == H.num_edges
    assert profile.total_cost == solution_cost(H, sigma)
    tail = profile.coverages[profile.cover_size:]
    assert not any(tail)


@given(hypergraph_with_ordering(), st.data())
@settings(max_examples=150)
def test_remove_vertices_drops_hit_edges(case, data):
    H, _ = case
    S = data.draw(st.sets(st.sampled_from(list(H.vertices))))
    rest, id_map = remove_vertices(H, S)
    assert rest.vertex_count == H.vertex_count - len(S)
    kept = [e for e in H.edges if not e & S]
    assert {frozenset(id_map[v] for v in e) for e in kept} == set(rest.edges)


@given(hypergraph_with_ordering())
@settings(max_examples=200)
def test_implied_cover_is_a_cover(case):
    H, sigma = case
    assert H.covers(implied_cover(H, sigma))


@given(hypergraph_with_ordering())
@settings(max_examples=200)
def test_normalize_never_increases_cost(case):
    H, sigma = case
    out = normalize(H, sigma)
    assert sorted(out) == list(H.vertices)
    assert solution_cost(H, out) <= solution_cost(H, sigma)
    profile = effective_coverage(H, out)
    assert all(profile.coverages[: profile.cover_size])


@st.composite
def crossover_pairs(draw):
    """Two non-increasing equal-sum sequences with a crossover index."""
    n = draw(st.integers(1, 6))
    s = sorted(draw(st.lists(st.integers(0, 6), min_size=n, max_size=n)), reverse=True)
    other = list(s)
    # move units toward the front: the result dominates s termwise early on
    for _ in range(draw(st.integers(0, 6))):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        i, j = min(i, j), max(i, j)
        if other[j] > 0 and i < j:
            other[j] -= 1
            other[i] += 1
            other.sort(reverse=True)
    return tuple(s), tuple(other)


@given(crossover_pairs())
@settings(max_examples=300)
def test_dominance_weighted_sum_property(pair):
    s, other = pair
    res = dominance_compare(s, other)
    if res.relation is Dominance.PRECONDITION_VIOLATED:
        return
    assert res.weighted >= res.weighted_other
    assert (res.weighted == res.weighted_other) == (s == other)


@given(hypergraph_with_ordering(min_m=1))
@settings(max_examples=200)
def test_swap_raising_coverage_lowers_cost(case):
    H, sigma = case
    before = effective_coverage(H, sigma).coverages
    cost = solution_cost(H, sigma)
    for p in range(len(sigma)):
        for q in range(p + 1, len(sigma)):
            swapped = list(sigma)
            swapped[p], swapped[q] = swapped[q], swapped[p]
            after = effective_coverage(H, swapped).coverages
            if after[p] > before[p] and all(after[i] <= before[i] for i in range(p + 1, q + 1)):
                assert solution_cost(H, swapped) < cost
