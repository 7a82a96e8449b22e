"""Exhaustive oracles: minimum set cover size and optimal orderings.

The ordering search is a depth-first branch and bound over normalized
prefixes.  A child is generated only for a vertex that covers at least one
new edge and no more than its predecessor did (every optimum has a
non-increasing coverage profile), and among vertices whose residual edge
sets coincide only the smallest id is tried.  A node is cut when its cost so
far plus an admissible completion bound cannot reach the target.

The completion bound: after ``pos`` picks with ``R`` edges uncovered, each
remaining edge pays ``pos`` plus the number of further steps it survives.
After ``j`` more steps at most ``P_j`` edges are covered, where ``P_j`` sums
the ``j`` largest residual degrees capped at the last coverage, so the
remaining edges cost at least ``pos * R + sum_j max(0, R - P_j)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import BudgetExceeded
from ..hypergraph import Hypergraph, Ordering, bits
from .greedy import greedy_mssc

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class ExactResult:
    phi: int
    tau: int
    tau_arrow: int
    witness: Ordering
    witness_min: Ordering
    tau_cover: frozenset[int]
    optima: tuple[Ordering, ...] | None = None
    nodes: int = 0


class _Counter:
    def __init__(self, budget):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"exact search exceeded {self.budget} nodes")


def brute_force_tau(H: Hypergraph, budget: int = DEFAULT_BUDGET, _counter=None) -> tuple[int, frozenset[int]]:
    """Minimum set cover size and one minimum cover.

    Branches on the vertices of a smallest uncovered edge; the lower bound
    is the size of a greedy family of pairwise disjoint uncovered edges.
    """
    counter = _counter or _Counter(budget)
    masks = H.edge_masks
    inc = H.incidence
    greedy_order, _ = greedy_mssc(H)
    best = [len(greedy_order), frozenset(greedy_order)]

    def packing(uncovered):
        used = 0
        count = 0
        for j in bits(uncovered):
            if not masks[j] & used:
                used |= masks[j]
                count += 1
        return count

    def search(uncovered, chosen):
        counter.tick()
        if not uncovered:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), frozenset(chosen)
            return
        if len(chosen) + packing(uncovered) >= best[0]:
            return
        j = min(bits(uncovered), key=lambda j: masks[j].bit_count())
        for i in bits(masks[j]):
            v = i + 1
            chosen.append(v)
            search(uncovered & ~inc[v], chosen)
            chosen.pop()

    search(H.all_edges_mask, [])
    return best[0], best[1]


def _completion_bound(degrees, uncovered, cap):
    R = uncovered.bit_count()
    capped = sorted((min(cap, (d & uncovered).bit_count()) for d in degrees), reverse=True)
    total = 0
    left = R
    for d in capped:
        if left <= 0:
            break
        total += left
        left -= d
    return total


def brute_force_mssc(H: Hypergraph, budget: int = DEFAULT_BUDGET, collect_optima: bool = False) -> ExactResult:
    """Exact optimum cost, minimum cover size, and maximum optimal cover size.

    ``tau_arrow`` is the largest cover size over normalized optimal
    orderings.  Every optimum is normalized (a zero-coverage position inside
    the cover could be deleted for a strictly cheaper ordering), so this is
    also the maximum over all optimal orderings.

    With ``collect_optima`` every optimal normalized prefix is returned in
    ``optima``; the twin reduction is then switched off.
    """
    counter = _Counter(budget)
    if H.num_edges == 0:
        return ExactResult(0, 0, 0, (), (), frozenset(), ((),) if collect_optima else None, 0)
    tau, tau_cover = brute_force_tau(H, _counter=counter)
    inc = H.incidence
    verts = [v for v in H.vertices if inc[v]]
    degrees = [inc[v] for v in verts]
    _, greedy_cost = greedy_mssc(H)

    def children(uncovered, cap, twins):
        seen = set()
        out = []
        for v in verts:
            hit = inc[v] & uncovered
            c = hit.bit_count()
            if c == 0 or c > cap:
                continue
            if twins:
                if hit in seen:
                    continue
                seen.add(hit)
            out.append((-c, v, hit))
        out.sort()
        return out

    best = [greedy_cost]
    prefix = []

    def improve(uncovered, pos, cost, cap):
        counter.tick()
        if not uncovered:
            if cost < best[0]:
                best[0] = cost
            return
        if cost + pos * uncovered.bit_count() + _completion_bound(degrees, uncovered, cap) >= best[0]:
            return
        for negc, v, hit in children(uncovered, cap, True):
            improve(uncovered ^ hit, pos + 1, cost - (pos + 1) * negc, -negc)

    improve(H.all_edges_mask, 0, 0, H.num_edges)
    phi = best[0]

    found = []

    def enumerate_optima(uncovered, pos, cost, cap, twins):
        counter.tick()
        if not uncovered:
            if cost == phi:
                found.append(tuple(prefix))
            return
        if cost + pos * uncovered.bit_count() + _completion_bound(degrees, uncovered, cap) > phi:
            return
        for negc, v, hit in children(uncovered, cap, twins):
            prefix.append(v)
            enumerate_optima(uncovered ^ hit, pos + 1, cost - (pos + 1) * negc, -negc, twins)
            prefix.pop()

    enumerate_optima(H.all_edges_mask, 0, 0, H.num_edges, not collect_optima)
    tau_arrow = max(len(o) for o in found)
    shortest = min(len(o) for o in found)
    witness = min(o for o in found if len(o) == tau_arrow)
    witness_min = min(o for o in found if len(o) == shortest)
    optima = tuple(sorted(found)) if collect_optima else None
    return ExactResult(phi, tau, tau_arrow, witness, witness_min, tau_cover, optima, counter.nodes)


def tau_arrow(H: Hypergraph, budget: int = DEFAULT_BUDGET) -> int:
    return brute_force_mssc(H, budget).tau_arrow


def min_cost_by_cover_limit(H: Hypergraph, budget: int = DEFAULT_BUDGET) -> list[int | None]:
    """``g[k]`` = least cost of an ordering whose cover has at most ``k`` vertices.

    ``None`` where no cover of that size exists.  Plain exhaustive search
    over normalized prefixes with the weak bound "every uncovered edge costs
    at least the next position"; meant as an oracle for small instances.
    """
    n = H.vertex_count
    counter = _Counter(budget)
    inc = H.incidence
    by_size = [None] * (n + 1)

    def cap_at(size):
        vals = [c for c in by_size[: size + 1] if c is not None]
        return min(vals) if vals else None

    def search(uncovered, pos, cost):
        counter.tick()
        if not uncovered:
            if by_size[pos] is None or cost < by_size[pos]:
                by_size[pos] = cost
            return
        if pos == n:
            return
        target = cap_at(pos + 1)
        if target is not None and cost + (pos + 1) * uncovered.bit_count() >= target:
            return
        for v in H.vertices:
            hit = inc[v] & uncovered
            if hit:
                search(uncovered ^ hit, pos + 1, cost + (pos + 1) * hit.bit_count())

    search(H.all_edges_mask, 0, 0)
    return [cap_at(k) for k in range(n + 1)]
