"""Constructive sunflower search (Erdős–Rado recursion).

A sunflower is a family of distinct edges (petals) whose pairwise
intersections all equal one common set, the core.  A family of more than
``r * r! * (k - 1)**r`` distinct edges of rank ``r`` always contains one with
``k`` petals, and the recursion below finds it:

* take a maximal pairwise-disjoint subfamily greedily; if it has ``k``
  members it is a sunflower with empty core;
* otherwise its union is small and hits every edge, so some vertex ``v`` is
  in many edges; recurse on the link ``{e - v : v in e}`` and add ``v`` back
  to the core and to every petal.

Below the threshold the search is best effort and may return None.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial

from ..errors import InputError
from ..hypergraph import Hypergraph


@dataclass(frozen=True)
class Sunflower:
    core: frozenset[int]
    petals: tuple[frozenset[int], ...]

    def is_valid(self) -> bool:
        if len(set(self.petals)) != len(self.petals):
            return False
        if not all(self.core <= p for p in self.petals):
            return False
        return all(
            a & b == self.core
            for i, a in enumerate(self.petals)
            for b in self.petals[i + 1 :]
        )


def sunflower_threshold(rank: int, petals: int) -> int:
    """Edge count above which a ``petals``-petal sunflower must exist."""
    return rank * factorial(rank) * (petals - 1) ** rank


def find_sunflower(H: Hypergraph, petals_wanted: int) -> Sunflower | None:
    if petals_wanted < 1:
        raise InputError("petals_wanted must be positive")
    found = _search(list(H.edges), petals_wanted)
    if found is None:
        return None
    core, petals = found
    return Sunflower(frozenset(core), tuple(petals))


def _search(edges, k):
    disjoint = []
    used = set()
    for e in sorted(edges, key=lambda e: (len(e), sorted(e))):
        if used.isdisjoint(e):
            disjoint.append(e)
            used |= e
    if len(disjoint) >= k:
        return frozenset(), disjoint
    counts = Counter(v for e in edges for v in e)
    if not counts:
        return None
    v = min(counts, key=lambda u: (-counts[u], u))
    found = _search([e - {v} for e in edges if v in e], k)
    if found is None:
        return None
    core, petals = found
    return core | {v}, [p | {v} for p in petals]
