"""Minimum sum set cover on hypergraphs: exact solvers, extremal instances, checks."""

from .errors import BudgetExceeded, IncompleteCoverError, InputError, MsscError, ParseError, UncoverableError
from .hypergraph import (
    CoverageProfile,
    Hypergraph,
    dominance_compare,
    effective_coverage,
    implied_cover,
    normalize,
    remove_vertices,
    solution_cost,
)

__all__ = [
    "BudgetExceeded",
    "CoverageProfile",
    "Hypergraph",
    "IncompleteCoverError",
    "InputError",
    "MsscError",
    "ParseError",
    "UncoverableError",
    "dominance_compare",
    "effective_coverage",
    "implied_cover",
    "normalize",
    "remove_vertices",
    "solution_cost",
]
