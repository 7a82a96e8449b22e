"""Optimal ordering of a fixed set cover by dynamic programming over subsets.

For ``U`` a subset of the cover ``S`` placed in positions ``1..|U|``,
``togo[U]`` is the least cost of the edges ``U`` leaves uncovered:

    togo[U] = min over v not in U of togo[U + v] + (|U| + 1) * (hits(U + v) - hits(U))

where ``hits(U)`` counts edges meeting ``U``.  The answer is ``togo[{}]``;
walking forward and taking the smallest id that stays optimal yields the
lexicographically smallest optimal ordering.  Small covers run in pure
Python; larger ones use a vectorized layer-by-layer numpy version.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable

import numpy as np

from ..errors import BudgetExceeded, IncompleteCoverError, InputError
from ..hypergraph import Hypergraph, Ordering, first_uncovered_edge, solution_cost

DEFAULT_LIMIT = 24
_PURE_PYTHON_MAX = 12


def _prepare(H: Hypergraph, S: Iterable[int], limit: int) -> list[int]:
    cover = sorted(set(S))
    for v in cover:
        if not 1 <= v <= H.vertex_count:
            raise InputError(f"unknown vertex {v}")
    missing = first_uncovered_edge(H, cover)
    if missing is not None:
        raise IncompleteCoverError(f"S does not cover edge {list(missing)}", missing)
    if len(cover) > limit:
        raise BudgetExceeded(f"|S| = {len(cover)} exceeds the ordering DP limit {limit}")
    return cover


def held_karp_order(H: Hypergraph, S: Iterable[int], limit: int = DEFAULT_LIMIT) -> tuple[Ordering, int]:
    """Lexicographically smallest minimum-cost ordering of the cover ``S``."""
    cover = _prepare(H, S, limit)
    if not cover:
        return (), 0
    dp = _dp_python if len(cover) <= _PURE_PYTHON_MAX else _dp_numpy
    hits, togo = dp(H, cover)
    order = []
    U = 0
    for pos in range(1, len(cover) + 1):
        for i in range(len(cover)):
            nxt = U | (1 << i)
            if nxt != U and togo[nxt] + pos * (hits[nxt] - hits[U]) == togo[U]:
                order.append(cover[i])
                U = nxt
                break
    return tuple(order), int(togo[0])


def _dp_python(H: Hypergraph, cover: list[int]):
    s = len(cover)
    inc = [H.incidence[v] for v in cover]
    size = 1 << s
    covered = [0] * size
    hits = [0] * size
    for U in range(1, size):
        low = U & -U
        covered[U] = covered[U ^ low] | inc[low.bit_length() - 1]
        hits[U] = covered[U].bit_count()
    togo = [0] * size
    # supersets are numerically larger, so a descending sweep sees them first
    for U in range(size - 2, -1, -1):
        pos = U.bit_count() + 1
        togo[U] = min(
            togo[U | (1 << i)] + pos * (hits[U | (1 << i)] - hits[U])
            for i in range(s)
            if not U >> i & 1
        )
    return hits, togo


def _dp_numpy(H: Hypergraph, cover: list[int]):
    s = len(cover)
    size = 1 << s
    index = {v: i for i, v in enumerate(cover)}
    # outside[T] = number of edges whose trace on the cover lies inside T
    outside = np.zeros(size, dtype=np.int64)
    for e in H.edges:
        trace = 0
        for v in e:
            if v in index:
                trace |= 1 << index[v]
        outside[trace] += 1
    for i in range(s):
        view = outside.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    U = np.arange(size, dtype=np.int64)
    hits = H.num_edges - outside[(size - 1) ^ U]
    del outside
    popcount = np.zeros(size, dtype=np.int8)
    for i in range(s):
        popcount += ((U >> i) & 1).astype(np.int8)
    togo = np.zeros(size, dtype=np.int64)
    inf = np.iinfo(np.int64).max
    for k in range(s - 1, -1, -1):
        layer = np.flatnonzero(popcount == k)
        best = np.full(layer.shape, inf, dtype=np.int64)
        for i in range(s):
            free = ((layer >> i) & 1) == 0
            base = layer[free]
            nxt = base | (1 << i)
            cand = togo[nxt] + (k + 1) * (hits[nxt] - hits[base])
            best[free] = np.minimum(best[free], cand)
        togo[layer] = best
    return hits, togo


def permutation_order(H: Hypergraph, S: Iterable[int], limit: int = 8) -> tuple[Ordering, int]:
    """Exhaustive counterpart of :func:`held_karp_order` for small covers."""
    cover = _prepare(H, S, limit)
    best = None
    for perm in permutations(cover):
        cost = solution_cost(H, perm)
        if best is None or cost < best[1]:
            best = (perm, cost)
    return best if best is not None else ((), 0)
