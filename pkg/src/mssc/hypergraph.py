"""Hypergraphs and the minimum sum set cover cost model.

Vertices are dense integer ids ``1..n``.  Edges are stored as frozensets in
first-seen order and, for the solver hot paths, as Python ``int`` bitsets:
``edge_masks[j]`` has bit ``v - 1`` set for every vertex ``v`` of edge ``j``
and ``incidence[v]`` has bit ``j`` set for every edge ``j`` containing ``v``.

An ordering is any sequence of distinct vertex ids.  Wherever a full
permutation is needed, a prefix is extended by the unused vertices in
ascending id order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import IncompleteCoverError, InputError, UncoverableError

Ordering = tuple[int, ...]


def bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Hypergraph:
    """Immutable hypergraph on vertices ``1..vertex_count``.

    Duplicate edges are merged (the count is kept in ``duplicates_merged``);
    an empty edge raises :class:`UncoverableError`.
    """

    def __init__(self, vertex_count: int, edges: Iterable[Iterable[int]] = ()):
        if vertex_count < 0:
            raise InputError(f"vertex_count must be nonnegative, got {vertex_count}")
        seen = set()
        kept = []
        duplicates = 0
        for raw in edges:
            edge = frozenset(int(v) for v in raw)
            if not edge:
                raise UncoverableError("empty hyperedge: instance has no set cover")
            lo, hi = min(edge), max(edge)
            if lo < 1 or hi > vertex_count:
                raise InputError(
                    f"edge {sorted(edge)} has a vertex outside 1..{vertex_count}"
                )
            if edge in seen:
                duplicates += 1
                continue
            seen.add(edge)
            kept.append(edge)
        self._n = vertex_count
        self._edges = tuple(kept)
        self.duplicates_merged = duplicates

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[frozenset[int], ...]:
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def vertices(self) -> range:
        return range(1, self._n + 1)

    @cached_property
    def rank(self) -> int:
        return max((len(e) for e in self._edges), default=0)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << (v - 1) for v in e) for e in self._edges)

    @cached_property
    def incidence(self) -> tuple[int, ...]:
        inc = [0] * (self._n + 1)
        for j, e in enumerate(self._edges):
            for v in e:
                inc[v] |= 1 << j
        return tuple(inc)

    @property
    def all_edges_mask(self) -> int:
        return (1 << len(self._edges)) - 1

    def degree(self, v: int) -> int:
        return self.incidence[v].bit_count()

    def covers(self, vertices: Iterable[int]) -> bool:
        """Return True if ``vertices`` intersects every edge."""
        hit = 0
        for v in vertices:
            hit |= self.incidence[v]
        return hit == self.all_edges_mask

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._n == other._n and set(self._edges) == set(other._edges)

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self):
        return hash((self._n, frozenset(self._edges)))

    def __repr__(self):
        return f"Hypergraph(n={self._n}, m={len(self._edges)}, rank={self.rank})"


@dataclass(frozen=True)
class CoverageProfile:
    coverages: tuple[int, ...]
    total_cost: int
    cover_size: int


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not 1 <= v <= H.vertex_count:
        raise InputError(f"unknown vertex {v} (instance has 1..{H.vertex_count})")


def check_ordering(H: Hypergraph, sigma: Sequence[int]) -> Ordering:
    """Validate ``sigma`` as a repetition-free sequence of vertices of ``H``."""
    seq = tuple(int(v) for v in sigma)
    for v in seq:
        _check_vertex(H, v)
    if len(set(seq)) != len(seq):
        raise InputError(f"ordering repeats a vertex: {list(seq)}")
    return seq


def extend_ordering(H: Hypergraph, sigma: Sequence[int]) -> Ordering:
    """Extend a prefix to a full permutation by appending unused ids ascending."""
    seq = check_ordering(H, sigma)
    used = set(seq)
    return seq + tuple(v for v in H.vertices if v not in used)


def remove_vertices(H: Hypergraph, S: Iterable[int]) -> tuple[Hypergraph, dict[int, int]]:
    """Return ``H - S`` with vertices relabeled densely, plus the id map.

    Every edge meeting ``S`` is dropped; the surviving vertices keep their
    relative order and ``id_map`` sends each original id to its new id.
    """
    removed = set()
    for v in S:
        _check_vertex(H, v)
        removed.add(v)
    id_map = {}
    for v in H.vertices:
        if v not in removed:
            id_map[v] = len(id_map) + 1
    edges = [[id_map[v] for v in e] for e in H.edges if not (e & removed)]
    return Hypergraph(len(id_map), edges), id_map


def effective_coverage(H: Hypergraph, sigma: Sequence[int]) -> CoverageProfile:
    """Coverage profile of ``sigma`` (extended to a full permutation)."""
    order = extend_ordering(H, sigma)
    inc = H.incidence
    uncovered = H.all_edges_mask
    coverages = []
    for v in order:
        hit = inc[v] & uncovered
        coverages.append(hit.bit_count())
        uncovered ^= hit
    total = sum(i * r for i, r in enumerate(coverages, start=1))
    cover_size = max((i for i, r in enumerate(coverages, start=1) if r), default=0)
    return CoverageProfile(tuple(coverages), total, cover_size)


def solution_cost(H: Hypergraph, sigma: Sequence[int]) -> int:
    """Total cost: the sum over edges of the position of the first hit."""
    order = extend_ordering(H, sigma)
    position = {v: i for i, v in enumerate(order, start=1)}
    return sum(min(position[v] for v in e) for e in H.edges)


def first_uncovered_edge(H: Hypergraph, prefix: Sequence[int]):
    """Return an edge (as a sorted tuple) missed by ``prefix``, or None."""
    hit = 0
    for v in check_ordering(H, prefix):
        hit |= H.incidence[v]
    missing = H.all_edges_mask & ~hit
    if not missing:
        return None
    j = next(bits(missing))
    return tuple(sorted(H.edges[j]))


def implied_cover(H: Hypergraph, sigma: Sequence[int]) -> frozenset[int]:
    """The first ``max_e min_{v in e} position(v)`` vertices of ``sigma``.

    ``sigma`` may be a prefix, but then it must already cover every edge.
    """
    seq = check_ordering(H, sigma)
    missing = first_uncovered_edge(H, seq)
    if missing is not None:
        raise IncompleteCoverError(f"edge {list(missing)} is not covered", missing)
    profile = effective_coverage(H, seq)
    return frozenset(seq[: profile.cover_size])


def normalize(H: Hypergraph, sigma: Sequence[int]) -> Ordering:
    """Move every zero-coverage vertex inside the cover after the cover end.

    The result is a full permutation whose coverage is positive at every
    position up to its cover size; its cost is never larger than the input's.
    """
    order = extend_ordering(H, sigma)
    while True:
        profile = effective_coverage(H, order)
        size = profile.cover_size
        head = order[:size]
        kept = tuple(v for v, r in zip(head, profile.coverages) if r)
        if len(kept) == size:
            return order
        idle = tuple(v for v, r in zip(head, profile.coverages) if not r)
        order = kept + idle + order[size:]


class Dominance(enum.Enum):
    STRICT = ">"
    EQUAL = "="
    PRECONDITION_VIOLATED = "?"


@dataclass(frozen=True)
class DominanceResult:
    relation: Dominance
    weighted: int
    weighted_other: int
    crossover: int | None


def dominance_compare(s: Sequence[int], s_other: Sequence[int]) -> DominanceResult:
    """Compare position-weighted sums of two coverage sequences.

    When both sequences are non-increasing and there is a crossover index
    ``t`` with ``s[i] <= s_other[i]`` up to ``t`` and ``s[i] >= s_other[i]``
    after it, ``sum(i * s[i]) >= sum(i * s_other[i])`` holds, with equality
    exactly when the sequences are equal.  Otherwise no claim is made.
    """
    s, s_other = tuple(s), tuple(s_other)
    if len(s) != len(s_other):
        raise InputError("sequences differ in length")
    if sum(s) != sum(s_other):
        raise InputError("sequences differ in sum")
    weighted = sum(i * x for i, x in enumerate(s, start=1))
    weighted_other = sum(i * x for i, x in enumerate(s_other, start=1))

    def monotone(seq):
        return all(x >= 0 for x in seq) and all(a >= b for a, b in zip(seq, seq[1:]))

    crossover = None
    if monotone(s) and monotone(s_other):
        n = len(s)
        for t in range(1, n + 1):
            if all(s[i] <= s_other[i] for i in range(t)) and all(
                s[i] >= s_other[i] for i in range(t, n)
            ):
                crossover = t
                break
    if crossover is None:
        relation = Dominance.PRECONDITION_VIOLATED
    elif s == s_other:
        relation = Dominance.EQUAL
    else:
        relation = Dominance.STRICT
    return DominanceResult(relation, weighted, weighted_other, crossover)
