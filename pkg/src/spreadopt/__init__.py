"""spreadopt: seed-set optimization for influence propagation.

Minimum target set selection (mintss), minimum propagation time (mintime)
and influence maximization (maxinf) under the independent cascade and linear
threshold models, with Monte Carlo and exact spread oracles, baseline
heuristics, and brute-force verifiers for the approximation guarantees.
"""

from .bruteforce import brute_force_mintime, brute_force_mintss
from .exact import exact_spread
from .generate import generate_synthetic
from .graph import (
    DirectedGraph,
    assign_uniform,
    assign_weighted_cascade,
    load_edge_list,
    save_edge_list,
)
from .greedy import (
    MintimeResult,
    MintssResult,
    SeedSet,
    greedy_maxinf,
    greedy_mintss,
    mintime,
)
from .heuristics import HeuristicSpec, heuristic_mintime, heuristic_mintss, rank_nodes
from .oracles import (
    CoverageOracle,
    ExactSpreadOracle,
    MonteCarloSpreadOracle,
    noisy_oracle,
    wolsey_instance,
)
from .proplog import PropagationLog, estimate_probs_mle, load_propagation_log
from .simulate import CascadeTrace, SpreadEstimate, estimate_spread, simulate_once, spread_profile

__version__ = "0.1.0"

_ESTIMATORS = ("GreedyMaxInf", "GreedyMintss", "MinTime", "HeuristicRanker")


def __getattr__(name):
    # the sklearn-backed estimator layer loads on first use; everything else
    # (notably the CLI) stays fast to import
    if name in _ESTIMATORS:
        from . import estimators

        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

__all__ = [
    "DirectedGraph",
    "SeedSet",
    "SpreadEstimate",
    "CascadeTrace",
    "MintssResult",
    "MintimeResult",
    "CoverageOracle",
    "ExactSpreadOracle",
    "MonteCarloSpreadOracle",
    "HeuristicSpec",
    "PropagationLog",
    "GreedyMaxInf",
    "GreedyMintss",
    "MinTime",
    "HeuristicRanker",
    "load_edge_list",
    "save_edge_list",
    "assign_uniform",
    "assign_weighted_cascade",
    "estimate_probs_mle",
    "load_propagation_log",
    "generate_synthetic",
    "simulate_once",
    "estimate_spread",
    "spread_profile",
    "exact_spread",
    "greedy_maxinf",
    "greedy_mintss",
    "mintime",
    "brute_force_mintss",
    "brute_force_mintime",
    "wolsey_instance",
    "noisy_oracle",
    "rank_nodes",
    "heuristic_mintss",
    "heuristic_mintime",
]
