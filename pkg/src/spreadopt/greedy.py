"""Greedy seed-set optimization over a coverage oracle.

Three drivers:

* ``greedy_maxinf``: budgeted maximization -- k rounds of picking the
  candidate with the largest marginal coverage gain.
* ``greedy_mintss``: threshold cover -- while coverage is below eta - eps,
  pick the candidate maximizing truncated gain per unit cost,
  (min(f(S + w), eta) - f(S)) / c(w).  With an exact oracle the produced
  cost is within (1 + ln(eta/eps)) of the cheapest set reaching eta.
* ``mintime``: scan horizons R = 0..n-1, running the threshold cover against
  the horizon-R spread oracle with the seed budget boosted to
  ceil(k (1 + ln(eta/eps))); the first R that succeeds is optimal for the
  original budget k given the boosted budget and eps shortfall.

Ties always break toward the smallest node id.  The lazy flag enables
priority-queue (CELF-style) candidate re-evaluation, which is equivalent for
exact oracles and dramatically faster on large ground sets.
"""

from __future__ import annotations

import heapq
import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .graph import DirectedGraph
from .oracles import CoverageOracle, MonteCarloSpreadOracle
from .validation import check_costs, check_eta_eps, check_model, check_seed

__all__ = ["SeedSet", "MintssResult", "MintimeResult",
           "greedy_maxinf", "greedy_mintss", "mintime"]


@dataclass(frozen=True)
class SeedSet:
    """Selected nodes in pick order plus their total cost."""

    nodes: tuple[int, ...]
    total_cost: float

    @classmethod
    def of(cls, nodes: Iterable[int], costs=None) -> "SeedSet":
        nodes = tuple(int(v) for v in nodes)
        if len(set(nodes)) != len(nodes):
            raise ValueError("seed set contains duplicates")
        cost = float(len(nodes)) if costs is None else float(sum(costs[v] for v in nodes))
        return cls(nodes, cost)

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __contains__(self, v) -> bool:
        return v in self.nodes


@dataclass(frozen=True)
class MintssResult:
    """Outcome of a threshold-cover run.

    marginal_gains holds the truncated gains min(f(S+w), eta) - f(S) of the
    picks actually made; success is False when the ground set (or the pick
    budget) was exhausted with coverage still below eta - eps.
    """

    seeds: SeedSet
    achieved_coverage: float
    iterations: int
    marginal_gains: tuple[float, ...]
    success: bool


@dataclass(frozen=True)
class MintimeResult:
    """Outcome of a minimum-propagation-time search; time is None on failure."""

    seeds: SeedSet
    time: int | None
    achieved_coverage: float
    success: bool


def _argmax_gain(oracle, chosen, chosen_set, base, costs, eta=None):
    """One plain greedy scan; returns (node, value, gain) or None.

    gain is truncated at eta when given; candidates are scanned in ascending
    id order and replacement requires a strictly better ratio, so ties land
    on the smallest node id.
    """
    best = None
    best_ratio = 0.0
    for w in range(oracle.ground_set_size):
        if w in chosen_set:
            continue
        val = oracle.eval(chosen + [w])
        gain = (min(val, eta) if eta is not None else val) - base
        ratio = gain / costs[w]
        if gain > 0.0 and (best is None or ratio > best_ratio):
            best = (w, val, gain)
            best_ratio = ratio
    return best


def _argmax_gain_lazy(oracle, chosen, chosen_set, base, costs, heap, it, eta=None):
    """CELF scan: re-evaluate stale heap tops until the top is fresh."""
    while heap:
        neg_ratio, w, stamp = heapq.heappop(heap)
        if w in chosen_set:
            continue
        if stamp == it:
            if -neg_ratio <= 0.0:
                heapq.heappush(heap, (neg_ratio, w, stamp))
                return None
            val = oracle.eval(chosen + [w])  # memoized; recompute gain for caller
            gain = (min(val, eta) if eta is not None else val) - base
            return w, val, gain
        val = oracle.eval(chosen + [w])
        gain = (min(val, eta) if eta is not None else val) - base
        heapq.heappush(heap, (-(gain / costs[w]), w, it))
    return None


def _init_heap(oracle):
    # +inf sentinels force one real evaluation of every candidate.
    return [(-math.inf, w, -1) for w in range(oracle.ground_set_size)]


def greedy_maxinf(oracle: CoverageOracle, k: int, *, costs=None, lazy: bool = False) -> SeedSet:
    """Pick k elements, each maximizing the marginal coverage gain."""
    k = int(k)
    if not (1 <= k <= oracle.ground_set_size):
        raise ValueError(f"k must lie in [1, {oracle.ground_set_size}], got {k}")
    cost_arr = check_costs(costs, oracle.ground_set_size)
    unit = np.ones(oracle.ground_set_size)
    chosen: list[int] = []
    chosen_set: set[int] = set()
    base = 0.0
    heap = _init_heap(oracle) if lazy else None
    for it in range(k):
        if lazy:
            pick = _argmax_gain_lazy(oracle, chosen, chosen_set, base, unit, heap, it)
        else:
            pick = _argmax_gain(oracle, chosen, chosen_set, base, unit)
        if pick is None:
            # no positive gain left; fill the budget by smallest id
            pick_w = min(w for w in range(oracle.ground_set_size) if w not in chosen_set)
            pick = (pick_w, oracle.eval(chosen + [pick_w]), 0.0)
        w, val, _ = pick
        chosen.append(w)
        chosen_set.add(w)
        base = val
    return SeedSet.of(chosen, cost_arr)


def greedy_mintss(oracle: CoverageOracle, eta: float, eps: float, costs=None,
                  *, max_picks: int | None = None, lazy: bool = False) -> MintssResult:
    """Threshold cover: grow S greedily until f(S) >= eta - eps.

    Picks maximize truncated gain per unit cost.  Stops with success=False
    when no candidate has positive truncated gain (eta unreachable), when
    the ground set is exhausted, or when max_picks would be exceeded.
    """
    eta, eps = check_eta_eps(eta, eps)
    cost_arr = check_costs(costs, oracle.ground_set_size)
    chosen: list[int] = []
    chosen_set: set[int] = set()
    gains: list[float] = []
    coverage = 0.0  # f(empty) = 0 by the oracle contract
    heap = _init_heap(oracle) if lazy else None
    it = 0
    while coverage < eta - eps:
        if len(chosen) == oracle.ground_set_size:
            return MintssResult(SeedSet.of(chosen, cost_arr), coverage, it, tuple(gains), False)
        if max_picks is not None and len(chosen) >= max_picks:
            return MintssResult(SeedSet.of(chosen, cost_arr), coverage, it, tuple(gains), False)
        if lazy:
            pick = _argmax_gain_lazy(oracle, chosen, chosen_set, min(coverage, eta),
                                     cost_arr, heap, it, eta=eta)
        else:
            pick = _argmax_gain(oracle, chosen, chosen_set, min(coverage, eta),
                                cost_arr, eta=eta)
        if pick is None:
            return MintssResult(SeedSet.of(chosen, cost_arr), coverage, it, tuple(gains), False)
        w, val, gain = pick
        chosen.append(w)
        chosen_set.add(w)
        gains.append(gain)
        coverage = val
        it += 1
    return MintssResult(SeedSet.of(chosen, cost_arr), coverage, it, tuple(gains), True)


def mintss_budget(k: int, eta: float, eps: float) -> int:
    """The boosted seed budget ceil(k (1 + ln(eta/eps))) used by mintime."""
    return math.ceil(k * (1.0 + math.log(eta / eps)))


def mintime(g: DirectedGraph, model: str, k: int, eta: float, eps: float,
            n_sims: int = 10000, master_seed: int = 0, *,
            n_workers: int = 1, lazy: bool = False) -> MintimeResult:
    """Smallest horizon R at which a boosted-budget threshold cover succeeds.

    Runs the horizon-R threshold cover for R ascending from 0 with pick
    budget ceil(k (1 + ln(eta/eps))); returns at the first R reaching
    coverage eta - eps.  With an exact-valued oracle the returned R never
    exceeds the optimal time for budget k and threshold eta.
    """
    model = check_model(model)
    if int(k) < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    eta, eps = check_eta_eps(eta, eps, upper=float(g.n))
    master_seed = check_seed(master_seed, "master_seed")
    budget = mintss_budget(int(k), eta, eps)
    last = None
    for horizon in range(g.n):
        oracle = MonteCarloSpreadOracle(g, model, horizon, n_sims=n_sims,
                                        master_seed=master_seed, n_workers=n_workers)
        last = greedy_mintss(oracle, eta, eps, costs=g.cost, max_picks=budget, lazy=lazy)
        if last.success:
            return MintimeResult(last.seeds, horizon, last.achieved_coverage, True)
    return MintimeResult(last.seeds, None, last.achieved_coverage, False)
