"""Cascade simulation and Monte Carlo spread estimation for IC and LT.

Independent cascade (IC): when a node activates at step t, it gets one
Bernoulli(p) shot at each out-neighbor still inactive at the start of step
t+1.  Linear threshold (LT): every node draws a threshold uniformly from
(0, 1] once per simulation and activates one step after the probabilities
of its active in-neighbors reach it.

Randomness contract: simulation i of an estimate draws from the counter
block i << 128 of a Philox stream keyed by master_seed (a pure counter-based
mix of master_seed and simulation index), so estimates are reproducible and
identical for any worker count or draw-batching strategy.  Within one IC
simulation, uniforms are consumed one per attempt, frontier sources
ascending, out-arcs in CSR order; an LT simulation consumes exactly the n
thresholds, in node order.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._rng import SimStreams, stream
from .graph import DirectedGraph
from .validation import (
    check_horizon,
    check_lt_weights,
    check_model,
    check_n_sims,
    check_nodes,
    check_seed,
)

__all__ = ["CascadeTrace", "SpreadEstimate", "simulate_once", "estimate_spread", "spread_profile"]

_kernels = None
_kernels_checked = False


def _get_kernels():
    """Import the numba kernels on first use; None when disabled/unavailable."""
    global _kernels, _kernels_checked
    if not _kernels_checked:
        _kernels_checked = True
        if not os.environ.get("SPREADOPT_DISABLE_NUMBA"):
            try:
                from . import _kernels as mod
                _kernels = mod
            except ImportError:  # pragma: no cover - degrade to the Python path
                _kernels = None
    return _kernels


@dataclass(frozen=True)
class CascadeTrace:
    """Activation time per node for one simulated cascade; -1 = never."""

    activation_time: np.ndarray

    def activated_count(self) -> int:
        return int(np.count_nonzero(self.activation_time >= 0))

    def activated_nodes(self) -> np.ndarray:
        return np.flatnonzero(self.activation_time >= 0)


@dataclass(frozen=True)
class SpreadEstimate:
    """Monte Carlo estimate of expected spread.

    mean is the average activated count, std_err the standard error of that
    mean, horizon the time bound (None = unbounded).
    """

    mean: float
    std_err: float
    n_sims: int
    horizon: int | None


def _cascade_py(g: DirectedGraph, model: str, seeds: np.ndarray,
                horizon: int | None, rng) -> np.ndarray:
    """Pure-Python reference cascade; the numba kernels must match it exactly."""
    indptr, targets, probs = g.indptr, g.targets, g.probs
    act = np.full(g.n, -1, dtype=np.int64)
    act[seeds] = 0
    frontier = seeds.tolist()
    hcap = -1 if horizon is None else horizon
    step = 0
    if model == "lt":
        theta = 1.0 - rng.random(g.n)
        cum = np.zeros(g.n)
        while frontier and (hcap < 0 or step < hcap):
            for u in frontier:
                for j in range(indptr[u], indptr[u + 1]):
                    cum[targets[j]] += probs[j]
            new = []
            for u in frontier:
                for j in range(indptr[u], indptr[u + 1]):
                    t = targets[j]
                    if act[t] == -1 and cum[t] >= theta[t]:
                        act[t] = step + 1
                        new.append(t)
            frontier = sorted(new)
            step += 1
    else:
        while frontier and (hcap < 0 or step < hcap):
            new = []
            for u in frontier:
                for j in range(indptr[u], indptr[u + 1]):
                    t = targets[j]
                    a = act[t]
                    if a == -1 or a == step + 1:
                        d = rng.random()
                        if a == -1 and d < probs[j]:
                            act[t] = step + 1
                            new.append(t)
            frontier = sorted(new)
            step += 1
    return act


def _cascade(g: DirectedGraph, model: str, seeds: np.ndarray,
             horizon: int | None, rng) -> np.ndarray:
    kernels = _get_kernels()
    if kernels is None:
        return _cascade_py(g, model, seeds, horizon, rng)
    act = np.full(g.n, -1, dtype=np.int64)
    hcap = np.int64(-1 if horizon is None else horizon)
    if model == "lt":
        theta = 1.0 - rng.random(g.n)
        return kernels.lt_kernel(g.indptr, g.targets, g.probs, seeds, hcap, theta, act)
    draws = rng.random(g.n_arcs)  # at most one attempt per arc
    kernels.ic_kernel(g.indptr, g.targets, g.probs, seeds, hcap, draws, act)
    return act


def simulate_once(g: DirectedGraph, model: str, seeds, horizon: int | None = None,
                  rng_seed: int = 0) -> CascadeTrace:
    """Run a single cascade, deterministic for a fixed rng_seed."""
    model = check_model(model)
    horizon = check_horizon(horizon)
    seed_arr = check_nodes(g, seeds)
    rng_seed = check_seed(rng_seed, "rng_seed")
    if model == "lt":
        check_lt_weights(g)
    act = _cascade(g, model, seed_arr, horizon, stream(rng_seed))
    act.setflags(write=False)
    return CascadeTrace(act)


def sim_stream(master_seed: int, index: int):
    """The generator that simulation `index` of an estimate batch draws from."""
    return SimStreams(master_seed).at(index)


def _chunks(n_sims: int, n_workers: int):
    block = max(1, -(-n_sims // max(1, n_workers)))
    return [(lo, min(lo + block, n_sims)) for lo in range(0, n_sims, block)]


class _BlockRunner:
    """Runs a contiguous block of simulations, reusing buffers.

    The activation buffer and the per-simulation draw budget (adapted from
    the previous cascade's consumption) are block-local conveniences; the
    values drawn for simulation i are a fixed prefix of its own stream, so
    none of this affects results.
    """

    def __init__(self, g: DirectedGraph, model: str, seeds: np.ndarray,
                 horizon: int | None, master_seed: int):
        self.g = g
        self.model = model
        self.seeds = seeds
        self.horizon = horizon
        self.master_seed = master_seed

    def traces(self, lo: int, hi: int):
        g = self.g
        streams = SimStreams(self.master_seed)
        kernels = _get_kernels()
        if kernels is None:
            for i in range(lo, hi):
                yield _cascade_py(g, self.model, self.seeds, self.horizon, streams.at(i))
            return
        act = np.empty(g.n, dtype=np.int64)
        hcap = np.int64(-1 if self.horizon is None else self.horizon)
        if self.model == "lt":
            for i in range(lo, hi):
                theta = 1.0 - streams.at(i).random(g.n)
                act.fill(-1)
                kernels.lt_kernel(g.indptr, g.targets, g.probs, self.seeds,
                                  hcap, theta, act)
                yield act
            return
        m = g.n_arcs
        budget = min(m, 128)
        for i in range(lo, hi):
            while True:
                draws = streams.at(i).random(budget)
                act.fill(-1)
                used = kernels.ic_kernel(g.indptr, g.targets, g.probs,
                                         self.seeds, hcap, draws, act)
                if used >= 0:
                    break
                budget = min(m, budget * 4)
            budget = min(m, max(128, int(used) + (int(used) >> 1) + 16))
            yield act


def estimate_spread(g: DirectedGraph, model: str, seeds, horizon: int | None = None,
                    n_sims: int = 10000, master_seed: int = 0,
                    n_workers: int = 1) -> SpreadEstimate:
    """Monte Carlo estimate of sigma^horizon(seeds) over n_sims cascades.

    Per-simulation counts are integers, and the mean / standard error are
    computed from exact integer sums, so the result is bit-identical for any
    n_workers partitioning.
    """
    model = check_model(model)
    horizon = check_horizon(horizon)
    seed_arr = check_nodes(g, seeds)
    n_sims = check_n_sims(n_sims)
    master_seed = check_seed(master_seed, "master_seed")
    if seed_arr.size == 0:
        return SpreadEstimate(0.0, 0.0, n_sims, horizon)
    if model == "lt":
        check_lt_weights(g)
    runner = _BlockRunner(g, model, seed_arr, horizon, master_seed)

    def run_block(bounds):
        s = s2 = 0
        for act in runner.traces(*bounds):
            c = int(np.count_nonzero(act >= 0))
            s += c
            s2 += c * c
        return s, s2

    if n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            parts = list(pool.map(run_block, _chunks(n_sims, n_workers)))
    else:
        parts = [run_block((0, n_sims))]
    total = sum(p[0] for p in parts)
    total_sq = sum(p[1] for p in parts)
    return SpreadEstimate(*_mean_stderr(total, total_sq, n_sims), n_sims, horizon)


def _mean_stderr(total: int, total_sq: int, n: int) -> tuple[float, float]:
    mean = total / n
    if n < 2:
        return mean, 0.0
    num = n * total_sq - total * total  # n(n-1) * sample variance, exact
    return mean, math.sqrt(num / (n * n * (n - 1)))


def spread_profile(g: DirectedGraph, model: str, seeds, n_sims: int = 10000,
                   master_seed: int = 0, n_workers: int = 1):
    """Estimates of sigma^R(seeds) for every R in 0..n-1 from one batch of runs.

    Truncating an unbounded cascade at step R reproduces the horizon-R run of
    the same stream draw-for-draw, so entry R here equals
    ``estimate_spread(..., horizon=R)`` exactly.  Returns (means, std_errs)
    arrays of length n.
    """
    model = check_model(model)
    seed_arr = check_nodes(g, seeds)
    n_sims = check_n_sims(n_sims)
    master_seed = check_seed(master_seed, "master_seed")
    n = g.n
    if seed_arr.size == 0:
        return np.zeros(n), np.zeros(n)
    if model == "lt":
        check_lt_weights(g)
    runner = _BlockRunner(g, model, seed_arr, None, master_seed)

    def run_block(bounds):
        s = np.zeros(n, dtype=np.int64)
        s2 = np.zeros(n, dtype=np.int64)
        for act in runner.traces(*bounds):
            times = act[act >= 0]
            cum = np.cumsum(np.bincount(times, minlength=n)[:n])
            s += cum
            s2 += cum * cum
        return s, s2

    if n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            parts = list(pool.map(run_block, _chunks(n_sims, n_workers)))
    else:
        parts = [run_block((0, n_sims))]
    sums = np.sum([p[0] for p in parts], axis=0)
    sums_sq = np.sum([p[1] for p in parts], axis=0)
    means = np.empty(n)
    errs = np.empty(n)
    for r in range(n):
        means[r], errs[r] = _mean_stderr(int(sums[r]), int(sums_sq[r]), n_sims)
    return means, errs
