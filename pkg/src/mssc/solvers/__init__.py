from .exact import (
    DEFAULT_BUDGET,
    ExactResult,
    brute_force_mssc,
    brute_force_tau,
    min_cost_by_cover_limit,
    tau_arrow,
)
from .fpt import Decision, Instance, fpt_decide
from .greedy import greedy_mssc
from .held_karp import held_karp_order, permutation_order
from .sunflower import Sunflower, find_sunflower, sunflower_threshold

__all__ = [
    "DEFAULT_BUDGET",
    "Decision",
    "ExactResult",
    "Instance",
    "Sunflower",
    "brute_force_mssc",
    "brute_force_tau",
    "find_sunflower",
    "fpt_decide",
    "greedy_mssc",
    "held_karp_order",
    "min_cost_by_cover_limit",
    "permutation_order",
    "sunflower_threshold",
    "tau_arrow",
]
