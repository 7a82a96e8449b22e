"""Text formats: hypergraph instances, solutions, and graph edge lists.

Instance::

    c free-form comment
    p hg <n_vertices> <n_edges>
    e v1 v2 ... vk

Solution::

    s cost=<int> k=<int>
    o v1 v2 ... vk

Solver output may add ``yes``/``no`` and ``stats key=value ...`` lines; the
solution reader keeps them in :class:`Solution` but does not interpret them.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError, UncoverableError
from .hypergraph import Hypergraph

log = logging.getLogger(__name__)


def format_instance(H: Hypergraph, comments=()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p hg {H.vertex_count} {H.num_edges}")
    for e in H.edges:
        lines.append("e " + " ".join(str(v) for v in sorted(e)))
    return "\n".join(lines) + "\n"


def write_instance(path, H: Hypergraph, comments=()) -> None:
    Path(path).write_text(format_instance(H, comments))


def _int(token, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {token!r}", lineno) from None


def parse_instance(text: str) -> Hypergraph:
    """Parse the instance format; duplicate edges are merged with a warning."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("second 'p' header", lineno)
            if len(tokens) != 4 or tokens[1] != "hg":
                raise ParseError("header must be 'p hg <n_vertices> <n_edges>'", lineno)
            header = (_int(tokens[2], lineno, "vertex count"), _int(tokens[3], lineno, "edge count"))
            if min(header) < 0:
                raise ParseError("negative count in header", lineno)
        elif tokens[0] == "e":
            if header is None:
                raise ParseError("edge line before 'p' header", lineno)
            vs = [_int(t, lineno, "vertex id") for t in tokens[1:]]
            if not vs:
                raise UncoverableError(f"line {lineno}: empty hyperedge")
            for v in vs:
                if not 1 <= v <= header[0]:
                    raise ParseError(f"vertex {v} outside 1..{header[0]}", lineno)
            edges.append(vs)
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", lineno)
    if header is None:
        raise ParseError("missing 'p hg' header")
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}")
    H = Hypergraph(header[0], edges)
    if H.duplicates_merged:
        log.warning("merged %d duplicate edge(s)", H.duplicates_merged)
    return H


def read_instance(path) -> Hypergraph:
    return parse_instance(Path(path).read_text())


@dataclass
class Solution:
    cost: int | None = None
    k: int | None = None
    ordering: tuple[int, ...] | None = None
    decision: str | None = None
    stats: dict[str, str] = field(default_factory=dict)


def format_solution(ordering, cost, decision=None, stats=None) -> str:
    lines = []
    if decision is not None:
        lines.append(decision)
    if ordering is not None:
        lines.append(f"s cost={cost} k={len(ordering)}")
        lines.append(" ".join(["o", *map(str, ordering)]))
    if stats:
        lines.append(" ".join(["stats", *(f"{k}={v}" for k, v in stats.items())]))
    return "\n".join(lines) + "\n"


_S_LINE = re.compile(r"^s\s+cost=(-?\d+)\s+k=(-?\d+)$")


def parse_solution(text: str) -> Solution:
    sol = Solution()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line in ("yes", "no"):
            sol.decision = line
        elif line.split()[0] == "stats":
            for item in line.split()[1:]:
                key, _, value = item.partition("=")
                sol.stats[key] = value
        elif line.startswith("s"):
            match = _S_LINE.match(line)
            if not match:
                raise ParseError("solution line must be 's cost=<int> k=<int>'", lineno)
            sol.cost, sol.k = int(match[1]), int(match[2])
        elif line.startswith("o"):
            tokens = line.split()
            if tokens[0] != "o":
                raise ParseError(f"unknown line type {tokens[0]!r}", lineno)
            sol.ordering = tuple(_int(t, lineno, "vertex id") for t in tokens[1:])
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    return sol


def read_solution(path) -> Solution:
    return parse_solution(Path(path).read_text())


def parse_edge_list(text: str):
    """Parse a simple graph edge list: an ``n m`` header then ``u v`` lines."""
    from .generators import SimpleGraph

    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty edge list")
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = (_int(t, lineno, "count") for t in head)
    edges = []
    for lineno, tokens in rows[1:]:
        if len(tokens) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        edges.append(tuple(_int(t, lineno, "vertex id") for t in tokens))
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    try:
        return SimpleGraph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
