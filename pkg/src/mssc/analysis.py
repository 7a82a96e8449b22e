"""Bound checks, gap measurements, and CSV reports.

Logarithmic bounds are compared in exact integer form:
``tau_arrow < tau * log2|E|`` as ``2**tau_arrow < |E|**tau`` and
``tau_arrow <= 2 tau log2 tau`` as ``2**tau_arrow <= tau**(2 tau)``.
"""

from __future__ import annotations

import csv
import io
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import BudgetExceeded, InputError
from .generators import (
    SimpleGraph,
    build_b_q,
    build_h_g,
    copy_block,
    pi_b_ordering,
    random_hypergraph,
    split_block,
)
from .hypergraph import Hypergraph, effective_coverage, solution_cost
from .solvers import DEFAULT_BUDGET, brute_force_mssc, greedy_mssc

_RELATIONS = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
}


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: int | None
    relation: str
    rhs: int | None

    @property
    def applicable(self) -> bool:
        return self.lhs is not None

    @property
    def holds(self) -> bool | None:
        if not self.applicable:
            return None
        return _RELATIONS[self.relation](self.lhs, self.rhs)

    @property
    def result(self) -> str:
        return {None: "na", True: "pass", False: "fail"}[self.holds]


def check_theorem1(H: Hypergraph, tau: int, tau_arrow: int) -> list[BoundCheck]:
    """Both upper bounds on ``tau_arrow``; not applicable unless ``tau >= 2``.

    The graph bound is evaluated only for rank at most 2.  ``thm1_proof`` is
    the sharper intermediate ``tau_arrow <= (tau - 1) log2|E| + 1``; unlike the
    strict hypergraph bound it also holds when ``|E| = 2``.
    """
    m = H.num_edges
    hyper = BoundCheck("thm1_hypergraph", None, "<", None)
    graph = BoundCheck("thm1_graph", None, "<=", None)
    proof = BoundCheck("thm1_proof", None, "<=", None)
    if tau >= 2:
        hyper = BoundCheck("thm1_hypergraph", 2**tau_arrow, "<", m**tau)
        proof = BoundCheck("thm1_proof", 2 ** (tau_arrow - 1), "<=", m ** (tau - 1))
        if H.rank <= 2:
            graph = BoundCheck("thm1_graph", 2**tau_arrow, "<=", tau ** (2 * tau))
    return [hyper, graph, proof]


@dataclass(frozen=True)
class PiBCheck:
    predicted: int
    measured: int
    coverages: tuple[int, ...]

    @property
    def equal(self) -> bool:
        return self.predicted == self.measured


def check_pi_b_cost(G: SimpleGraph) -> PiBCheck:
    """Closed-form cost of taking ``B`` first in ``H_G`` versus direct evaluation."""
    n = G.n
    per_position = 2**n - 1 - n * (n - 1) // 2 + G.m
    H, _ = build_h_g(G)
    sigma = pi_b_ordering(n)
    profile = effective_coverage(H, sigma)
    return PiBCheck(6 * per_position, solution_cost(H, sigma), profile.coverages)


def gpq_upper_ordering(n: int, q: int, p: int) -> tuple[tuple[int, ...], Hypergraph]:
    """The explicit solution of ``p * B_q`` used for the cost upper bound.

    Take the top class ``R_q`` of every copy, which leaves ``p * n`` copies of
    ``B_{q-1}``, and recurse; at depth one take every ``R_1`` and then every
    ``L``.
    """
    H, layout = build_b_q(n, q, p)
    blocks = [copy_block(layout, c) for c in range(p)]
    order = []
    level = q
    while level > 1:
        for b in blocks:
            order.extend(b[f"R{level}"])
        blocks = [sub for b in blocks for sub in split_block(b, n, level)]
        level -= 1
    if level == 1:
        for b in blocks:
            order.extend(b["R1"])
    for b in blocks:
        order.extend(b["L"])
    return tuple(order), H


@dataclass(frozen=True)
class GpqCheck:
    n: int
    q: int
    p: int
    cost: int
    upper_bound: int

    @property
    def applicable(self) -> bool:
        return self.n >= 7

    @property
    def holds(self) -> bool | None:
        return self.cost < self.upper_bound if self.applicable else None

    lower_bound_status: str = field(default="unchecked", init=False)


def check_gpq_upper(n: int, q: int, p: int) -> GpqCheck:
    """Exact cost of :func:`gpq_upper_ordering` against ``p^2 n^(3q-1) (n+6)``.

    The bound is only claimed for ``n >= 7``; smaller ``n`` records the cost
    with ``holds = None``.  The matching lower bound is not checked.
    """
    if q < 1:
        raise InputError("the cost bound needs q >= 1")
    order, H = gpq_upper_ordering(n, q, p)
    cost = _graph_cost(H, order)
    return GpqCheck(n, q, p, cost, p * p * n ** (3 * q - 1) * (n + 6))


def _graph_cost(H: Hypergraph, order) -> int:
    position = {v: i for i, v in enumerate(order, start=1)}
    far = len(position) + 1
    return sum(min(position.get(v, far) for v in e) for e in H.edges)


# ---------------------------------------------------------------- gap sweep

BASE_FIELDS = ["id", "n", "m", "rank", "tau", "tau_arrow", "phi", "greedy", "status"]


@dataclass
class GapReport:
    id: str
    n_vertices: int
    n_edges: int
    rank: int
    tau: int | None
    tau_arrow: int | None
    phi: int | None
    greedy_cost: int
    status: str = "ok"
    bound_checks: list[BoundCheck] = field(default_factory=list)

    @property
    def failed(self) -> list[BoundCheck]:
        return [c for c in self.bound_checks if c.holds is False]


def solve_row(instance_id: str, H: Hypergraph, budget: int = DEFAULT_BUDGET, expect=()) -> GapReport:
    """Solve one instance exactly and evaluate every applicable check.

    ``expect`` holds extra ``(name, expected_value_key, value)`` equalities,
    e.g. ``("tau_eq_3", "tau", 3)``.
    """
    _, greedy_cost = greedy_mssc(H)
    row = GapReport(instance_id, H.vertex_count, H.num_edges, H.rank, None, None, None, greedy_cost)
    try:
        res = brute_force_mssc(H, budget=budget)
    except BudgetExceeded:
        row.status = "budget-exceeded"
        return row
    row.tau, row.tau_arrow, row.phi = res.tau, res.tau_arrow, res.phi
    checks = check_theorem1(H, res.tau, res.tau_arrow)
    checks.append(BoundCheck("tau_le_tau_arrow", res.tau, "<=", res.tau_arrow))
    checks.append(BoundCheck("greedy_ratio", greedy_cost, "<=", 4 * res.phi))
    initial = BoundCheck("initial_coverage", None, "<=", None)
    if H.num_edges:
        r1 = effective_coverage(H, res.witness).coverages[0]
        initial = BoundCheck("initial_coverage", H.num_edges, "<=", r1 * res.tau)
    checks.append(initial)
    for name, key, value in expect:
        checks.append(BoundCheck(name, getattr(row, key), "==", value))
    row.bound_checks = checks
    return row


def parse_range(text: str) -> list[int]:
    """``"3..5"`` -> [3, 4, 5]; ``"1,4"`` -> [1, 4]; ``"7"`` -> [7]."""
    out = []
    for piece in str(text).split(","):
        piece = piece.strip()
        if ".." in piece:
            lo, hi = piece.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif piece:
            out.append(int(piece))
    return out


def sweep_jobs(family: str, *, n=(3,), q=(1,), p=(1,), graph_types=("path",), m=(15,), rank=(3,), seeds=(0,)):
    """Instance descriptors for a sweep, in output order."""
    jobs = []
    if family == "hG":
        for kind in graph_types:
            for nn in n:
                jobs.append((f"hG-{kind}-n{nn}", family, {"kind": kind, "n": nn}))
    elif family == "bq":
        for nn in n:
            for qq in q:
                for pp in p:
                    jobs.append((f"bq-n{nn}-q{qq}-p{pp}", family, {"n": nn, "q": qq, "p": pp}))
    elif family == "random":
        for nn in n:
            for mm in m:
                for rr in rank:
                    for s in seeds:
                        jobs.append(
                            (f"random-n{nn}-m{mm}-r{rr}-s{s}", family, {"n": nn, "m": mm, "rank": rr, "seed": s})
                        )
    else:
        raise InputError(f"unknown family {family!r}")
    return jobs


def _run_job(job, budget):
    instance_id, family, params = job
    expect = ()
    if family == "hG":
        H, _ = build_h_g(SimpleGraph.of_type(params["kind"], params["n"]))
        expect = (("tau_eq_3", "tau", 3), ("tau_arrow_eq_n", "tau_arrow", params["n"]))
    elif family == "bq":
        H, _ = build_b_q(params["n"], params["q"], params["p"])
        expect = (("tau_eq_2pnq", "tau", 2 * params["p"] * params["n"] ** params["q"]),)
    else:
        H = random_hypergraph(params["n"], params["m"], params["rank"], params["seed"])
    return solve_row(instance_id, H, budget, expect)


def gap_sweep(family: str, budget: int = DEFAULT_BUDGET, threads: int = 1, **params) -> list[GapReport]:
    """Solve every instance of a sweep; rows come back in job order."""
    jobs = sweep_jobs(family, **params)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_run_job, jobs, [budget] * len(jobs)))
    return [_run_job(job, budget) for job in jobs]


def _cell(check: BoundCheck) -> str:
    if not check.applicable:
        return "na"
    return f"{check.result}:{check.lhs}{check.relation}{check.rhs}"


_CELL = re.compile(r"^(pass|fail):(-?\d+)(<=|<|==)(-?\d+)$")


def reports_to_csv(rows: list[GapReport]) -> str:
    check_names = []
    for row in rows:
        for c in row.bound_checks:
            if c.name not in check_names:
                check_names.append(c.name)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BASE_FIELDS + check_names)
    for row in rows:
        by_name = {c.name: c for c in row.bound_checks}
        base = [row.id, row.n_vertices, row.n_edges, row.rank, row.tau, row.tau_arrow, row.phi, row.greedy_cost, row.status]
        base = ["" if x is None else x for x in base]
        writer.writerow(base + [_cell(by_name[name]) if name in by_name else "" for name in check_names])
    return buf.getvalue()


def _relation_for(name: str) -> str:
    # "na" cells carry no relation; recover it from the check name
    if name == "thm1_hypergraph":
        return "<"
    return "==" if "_eq_" in name else "<="


def reports_from_csv(text: str) -> list[GapReport]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header[: len(BASE_FIELDS)] != BASE_FIELDS:
        raise InputError("not a gap report: unexpected header")
    names = header[len(BASE_FIELDS) :]

    def opt(x):
        return None if x == "" else int(x)

    rows = []
    for rec in reader:
        row = GapReport(rec[0], int(rec[1]), int(rec[2]), int(rec[3]), opt(rec[4]), opt(rec[5]), opt(rec[6]), int(rec[7]), rec[8])
        for name, cell in zip(names, rec[len(BASE_FIELDS) :]):
            if cell == "":
                continue
            if cell == "na":
                row.bound_checks.append(BoundCheck(name, None, _relation_for(name), None))
                continue
            match = _CELL.match(cell)
            if not match:
                raise InputError(f"bad check cell {cell!r} in column {name}")
            check = BoundCheck(name, int(match[2]), match[3], int(match[4]))
            if check.result != match[1]:
                raise InputError(f"check {name} in row {row.id} claims {match[1]} but recomputes {check.result}")
            row.bound_checks.append(check)
        rows.append(row)
    return rows
