from __future__ import annotations

from ..hypergraph import Hypergraph, Ordering


def greedy_mssc(H: Hypergraph) -> tuple[Ordering, int]:
    """Max-coverage greedy; ties go to the smallest vertex id.

    Every pick covers at least one new edge, so the result is normalized.
    """
    inc = H.incidence
    uncovered = H.all_edges_mask
    order = []
    cost = 0
    while uncovered:
        best_v, best_c = 0, 0
        for v in H.vertices:
            c = (inc[v] & uncovered).bit_count()
            if c > best_c:
                best_v, best_c = v, c
        order.append(best_v)
        cost += len(order) * best_c
        uncovered &= ~inc[best_v]
    return tuple(order), cost
