"""Decision procedure for minimum sum set cover on bounded-rank hypergraphs.

Question: is there a set cover ``S`` with ``|S| <= k`` and an ordering of it
of cost at most ``w``?  Let ``r`` be the rank.

1. Start from ``S = {}``.
2. While ``H - S`` has more than ``r * r! * (k - |S|)**r`` edges: answer no
   on this branch if ``|S| = k``; otherwise take a sunflower of ``H - S``
   with ``k - |S| + 1`` petals, answer no if its core is empty, and branch
   on adding each core vertex to ``S``.
3. Drop the isolated vertices of ``H - S``.
4. Try every ``T`` among the remaining vertices with ``|T| <= k - |S|``.
5. Order ``S | T`` optimally (subset DP instead of all permutations).
6. Accept if ``S | T`` covers ``H`` and the ordering costs at most ``w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from ..errors import InputError
from ..hypergraph import Hypergraph, Ordering, effective_coverage, normalize
from .held_karp import held_karp_order, permutation_order
from .sunflower import find_sunflower, sunflower_threshold


@dataclass(frozen=True)
class Instance:
    hypergraph: Hypergraph
    k: int
    w: int

    def __post_init__(self):
        if not 0 <= self.k <= self.hypergraph.vertex_count:
            raise InputError(f"k must lie in 0..{self.hypergraph.vertex_count}, got {self.k}")
        if self.w < 0:
            raise InputError(f"w must be nonnegative, got {self.w}")


@dataclass(frozen=True)
class Decision:
    answer: bool
    ordering: Ordering | None = None
    cost: int | None = None

    def __bool__(self):
        return self.answer


_NO = Decision(False)


@lru_cache(maxsize=1 << 16)
def _order(H: Hypergraph, cover: frozenset, method: str):
    if method == "permutations":
        return permutation_order(H, cover)
    return held_karp_order(H, cover)


def fpt_decide(inst: Instance, ordering: str = "held-karp", stats: dict | None = None) -> Decision:
    """Run the branching algorithm; a yes comes with a normalized witness.

    If ``stats`` is given, it accumulates ``sunflowers`` (sunflower steps
    taken), ``branches`` (core vertices tried) and ``covers`` (candidate
    covers ordered).
    """
    if stats is None:
        stats = {}
    for key in ("sunflowers", "branches", "covers"):
        stats.setdefault(key, 0)
    if ordering not in ("held-karp", "permutations"):
        raise InputError(f"unknown ordering method {ordering!r}")
    H, k, w = inst.hypergraph, inst.k, inst.w
    if H.num_edges == 0:
        return Decision(True, (), 0)
    if w < H.num_edges:
        return _NO
    r = H.rank

    def branch(S: frozenset):
        residual = [e for e in H.edges if not e & S]
        room = k - len(S)
        if len(residual) > sunflower_threshold(r, room + 1):
            if room == 0:
                return None
            rest = Hypergraph(H.vertex_count, residual)
            flower = find_sunflower(rest, room + 1)
            stats["sunflowers"] += 1
            if flower is None or not flower.core:
                return None
            for v in sorted(flower.core, key=lambda u: (-rest.degree(u), u)):
                stats["branches"] += 1
                found = branch(S | {v})
                if found is not None:
                    return found
            return None
        live = sorted({v for e in residual for v in e})
        for size in range(room + 1):
            for T in combinations(live, size):
                cover = S.union(T)
                if not H.covers(cover):
                    continue
                stats["covers"] += 1
                order, cost = _order(H, cover, ordering)
                if cost <= w:
                    return order
        return None

    found = branch(frozenset())
    if found is None:
        return _NO
    full = normalize(H, found)
    profile = effective_coverage(H, full)
    return Decision(True, full[: profile.cover_size], profile.total_cost)
