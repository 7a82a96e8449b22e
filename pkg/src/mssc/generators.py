"""Instance constructions.

* :func:`build_h_g` encodes a graph ``G`` on ``n`` vertices as a hypergraph
  on ``A + B`` (``A = V(G)``, ``B = {b1, b2, b3}``): for every nonempty
  ``X`` of ``A`` that is not a non-edge pair, add ``X + {b_k}`` for each k.
* :func:`build_b_q` builds the bipartite graph ``B_q`` (or ``p`` disjoint
  copies of it) whose optimal orderings use far more than ``tau`` vertices.
* :func:`build_figure1` is the two-component example graph.
* :func:`random_hypergraph` is the fuzzing source.

Vertex numbering is fixed and documented per builder so tests can check
structure without an isomorphism search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb

from .errors import BudgetExceeded, InputError
from .hypergraph import Hypergraph

H_G_MAX_N = 20
B_Q_MAX_VERTICES = 10**6


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n, edges=()):
        seen = set()
        norm = []
        for u, v in edges:
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge ({u}, {v}) outside 1..{n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @classmethod
    def path(cls, n):
        return cls(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def cycle(cls, n):
        if n < 3:
            raise InputError("a cycle needs at least 3 vertices")
        return cls(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])

    @classmethod
    def complete(cls, n):
        return cls(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])

    @classmethod
    def empty(cls, n):
        return cls(n, [])

    @classmethod
    def of_type(cls, kind: str, n: int):
        try:
            factory = {"path": cls.path, "cycle": cls.cycle, "complete": cls.complete, "empty": cls.empty}[kind]
        except KeyError:
            raise InputError(f"unknown graph type {kind!r}") from None
        return factory(n)

    def as_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, self.edges)


def h_g_edge_count(n: int, m: int) -> int:
    return 3 * (2**n - 1 - comb(n, 2) + m)


def build_h_g(G: SimpleGraph) -> tuple[Hypergraph, dict[int, str]]:
    """Return ``H_G`` and a label map.

    ``A`` keeps the graph's ids ``1..n`` (labels ``a1..an``); ``b1, b2, b3``
    are ``n+1, n+2, n+3``.  Subsets ``X`` are visited in binary-counter
    order and each contributes its three edges in order ``b1, b2, b3``.
    """
    n = G.n
    if n < 1:
        raise InputError("H_G needs a graph with at least one vertex")
    if n > H_G_MAX_N:
        raise BudgetExceeded(f"H_G with n={n} exceeds the cap n <= {H_G_MAX_N}")
    graph_edges = {frozenset(e) for e in G.edges}
    B = (n + 1, n + 2, n + 3)
    edges = []
    for mask in range(1, 1 << n):
        X = [i + 1 for i in range(n) if mask >> i & 1]
        if len(X) == 2 and frozenset(X) not in graph_edges:
            continue
        for b in B:
            edges.append(X + [b])
    labels = {v: f"a{v}" for v in range(1, n + 1)}
    labels.update({b: f"b{k}" for k, b in enumerate(B, start=1)})
    return Hypergraph(n + 3, edges), labels


def pi_b_ordering(n: int) -> tuple[int, ...]:
    """The ordering of ``H_G`` that takes ``B`` first, then ``A`` by id."""
    return (n + 1, n + 2, n + 3) + tuple(range(1, n + 1))


@dataclass(frozen=True)
class VertexLabel:
    cls: str  # "L", "R0", "R1", ..., "Rq"
    copy: int  # 0-based copy index
    index: int  # 0-based position within its class in that copy


@dataclass
class BqLayout:
    """Where every vertex of ``p * B_q`` sits.

    Per copy (``N = n**q``, copy offset ``c * (q + 4) * N``): ``L`` is ids
    ``1..2N``, ``R0`` is ``2N+1..4N`` with ``L[i]`` matched to ``R0[i]``, and
    ``R_i`` is ``4N + (i-1)N + 1 .. 4N + iN``.  Parts of the level-``i``
    partition of ``L`` (size ``2n**i``) and of ``R_i`` (size ``n**i``) are
    contiguous index ranges.
    """

    n: int
    q: int
    p: int
    labels: dict[int, VertexLabel] = field(default_factory=dict)

    @property
    def block(self) -> int:
        return self.n**self.q

    @property
    def copy_size(self) -> int:
        return (self.q + 4) * self.block

    def ids(self, cls: str, copy: int = 0) -> list[int]:
        N = self.block
        base = copy * self.copy_size
        if cls == "L":
            lo, size = 0, 2 * N
        elif cls == "R0":
            lo, size = 2 * N, 2 * N
        else:
            i = int(cls[1:])
            if not 1 <= i <= self.q:
                raise InputError(f"no class {cls} in B_{self.q}")
            lo, size = 4 * N + (i - 1) * N, N
        return list(range(base + lo + 1, base + lo + size + 1))

    def part(self, v: int, level: int) -> int:
        """Index of the level-``level`` part containing ``v`` (L or R_level)."""
        lab = self.labels[v]
        if lab.cls == "L":
            return lab.index // (2 * self.n**level)
        if lab.cls == f"R{level}":
            return lab.index // self.n**level
        raise InputError(f"vertex {v} ({lab.cls}) has no level-{level} part")


def b_q_sizes(n: int, q: int) -> tuple[int, int]:
    """Vertex and edge counts of one copy of ``B_q``."""
    N = n**q
    return (q + 4) * N, 2 * N * (n ** (q + 1) - 1) // (n - 1)


def b_q_degree(n: int, q: int, cls: str) -> int:
    if cls == "L":
        return (n ** (q + 1) - 1) // (n - 1)
    if cls == "R0":
        return 1
    return 2 * n ** int(cls[1:])


def build_b_q(n: int, q: int, p: int = 1, max_vertices: int = B_Q_MAX_VERTICES) -> tuple[Hypergraph, BqLayout]:
    """``p`` disjoint copies of ``B_q`` with branching parameter ``n``."""
    if n < 2 or q < 0 or p < 1:
        raise InputError("need n >= 2, q >= 0, p >= 1")
    layout = BqLayout(n, q, p)
    N = layout.block
    total = p * layout.copy_size
    if total > max_vertices:
        raise BudgetExceeded(f"G_(p,q) would have {total} vertices (cap {max_vertices})")
    edges = []
    for c in range(p):
        L = layout.ids("L", c)
        R0 = layout.ids("R0", c)
        for j, v in enumerate(L):
            layout.labels[v] = VertexLabel("L", c, j)
        for j, v in enumerate(R0):
            layout.labels[v] = VertexLabel("R0", c, j)
            edges.append((L[j], v))
        for i in range(1, q + 1):
            R = layout.ids(f"R{i}", c)
            for j, v in enumerate(R):
                layout.labels[v] = VertexLabel(f"R{i}", c, j)
            lsize, rsize = 2 * n**i, n**i
            for part in range(n ** (q - i)):
                for u in L[part * lsize : (part + 1) * lsize]:
                    for v in R[part * rsize : (part + 1) * rsize]:
                        edges.append((u, v))
    return Hypergraph(total, edges), layout


def split_block(block: dict[str, list[int]], n: int, level: int) -> list[dict[str, list[int]]]:
    """Split a ``B_level`` block (minus its top class) into ``n`` ``B_{level-1}`` blocks.

    A block maps class names (``"L"``, ``"R0"``, ``"R1"``, ...) to id lists
    in layout order.  Sub-block ``j`` takes part ``j`` of the level-``(level-1)``
    partition of ``L``, the matched ``R0`` vertices, and the matching parts
    of ``R_1..R_{level-1}``.
    """
    if level < 1:
        raise InputError("B_0 has no top class to remove")
    size_l = 2 * n ** (level - 1)
    size_r = n ** (level - 1)
    out = []
    for j in range(n):
        sub = {
            "L": block["L"][j * size_l : (j + 1) * size_l],
            "R0": block["R0"][j * size_l : (j + 1) * size_l],
        }
        for i in range(1, level):
            sub[f"R{i}"] = block[f"R{i}"][j * size_r : (j + 1) * size_r]
        out.append(sub)
    return out


def copy_block(layout: BqLayout, copy: int = 0) -> dict[str, list[int]]:
    classes = ["L", "R0"] + [f"R{i}" for i in range(1, layout.q + 1)]
    return {cls: layout.ids(cls, copy) for cls in classes}


def b_q_blocks_after_removing_top(layout: BqLayout, copy: int = 0) -> list[dict[str, list[int]]]:
    """The ``n`` blocks of ``B_q - R_q`` (one copy), each laid out as ``B_{q-1}``."""
    return split_block(copy_block(layout, copy), layout.n, layout.q)


FIGURE1_LEAVES_HUB = 2
FIGURE1_LEAVES_SPOKE = 2


def build_figure1() -> tuple[Hypergraph, dict[int, str]]:
    """Two identical components: a hub adjacent to four spokes and two
    leaves, every spoke carrying two leaves of its own.

    Ids per component (offset 0 for ``u``, 15 for ``v``): hub 1, spokes
    2..5, hub leaves 6..7, spoke leaves 8..15 (two per spoke, in spoke order).
    """
    edges = []
    labels = {}
    per = 1 + 4 + FIGURE1_LEAVES_HUB + 4 * FIGURE1_LEAVES_SPOKE
    for c, name in enumerate("uv"):
        base = c * per
        hub = base + 1
        labels[hub] = f"{name}0"
        nxt = base + 6
        for i in range(1, 5):
            labels[base + 1 + i] = f"{name}{i}"
            edges.append((hub, base + 1 + i))
        for t in range(FIGURE1_LEAVES_HUB):
            labels[nxt] = f"{name}0.leaf{t + 1}"
            edges.append((hub, nxt))
            nxt += 1
        for i in range(1, 5):
            for t in range(FIGURE1_LEAVES_SPOKE):
                labels[nxt] = f"{name}{i}.leaf{t + 1}"
                edges.append((base + 1 + i, nxt))
                nxt += 1
    return Hypergraph(2 * per, edges), labels


def figure1_vertex(label: str) -> int:
    """Vertex id of a named figure-1 vertex such as ``"u0"`` or ``"v3"``."""
    _, labels = build_figure1()
    for v, lab in labels.items():
        if lab == label:
            return v
    raise InputError(f"no figure-1 vertex named {label!r}")


def max_edges(n: int, rank: int) -> int:
    return sum(comb(n, s) for s in range(1, min(rank, n) + 1))


def random_hypergraph(n: int, m: int, rank: int, seed: int) -> Hypergraph:
    """``m`` distinct edges; each size uniform in ``1..rank`` (capped at ``n``),
    members drawn uniformly without replacement.  Deterministic per seed.
    """
    if n < 0 or m < 0 or rank < 0:
        raise InputError("n, m, rank must be nonnegative")
    if m > max_edges(n, rank):
        raise InputError(f"cannot place {m} distinct edges of size <= {rank} on {n} vertices")
    rng = random.Random(seed)
    edges = []
    seen = set()
    tries = 0
    top = min(rank, n)
    while len(edges) < m and tries < 50 * m + 1000:
        tries += 1
        e = frozenset(rng.sample(range(1, n + 1), rng.randint(1, top)))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    if len(edges) < m:
        # Dense request: finish from the unused candidates.
        from itertools import combinations

        rest = [frozenset(c) for s in range(1, top + 1) for c in combinations(range(1, n + 1), s)]
        rest = [e for e in rest if e not in seen]
        edges.extend(rng.sample(rest, m - len(edges)))
    return Hypergraph(n, edges)
