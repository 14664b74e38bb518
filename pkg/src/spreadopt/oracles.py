"""Coverage oracles: monotone set functions the greedy engines optimize over.

An oracle evaluates f(S) for node sets S over a ground set [0, size).  The
greedy drivers depend on nothing else, so exact spread, Monte Carlo spread,
synthetic coverage functions and noisy wrappers are interchangeable.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable

import numpy as np

from ._rng import set_key, stream
from .exact import ic_worlds, lt_worlds, reach_mask
from .graph import DirectedGraph
from .simulate import SpreadEstimate, estimate_spread
from .validation import check_horizon, check_model, check_seed

__all__ = [
    "CoverageOracle",
    "FunctionOracle",
    "ExactSpreadOracle",
    "MonteCarloSpreadOracle",
    "wolsey_instance",
    "WolseyOracle",
    "noisy_oracle",
    "NoisyOracle",
]


class CoverageOracle:
    """Base class: a monotone set function with f(empty) = 0.

    Attributes:
        ground_set_size: elements are the integers [0, ground_set_size).
        is_exact: whether eval returns the true value.
        relative_error_bound: when inexact with a known bound delta, values
            are guaranteed in [(1 - delta) f(S), f(S)]; None if unknown.
    """

    ground_set_size: int
    is_exact: bool = True
    relative_error_bound: float | None = None

    def eval(self, nodes: Iterable[int]) -> float:
        raise NotImplementedError

    def ground_set(self) -> range:
        return range(self.ground_set_size)


class FunctionOracle(CoverageOracle):
    """Wrap a plain callable as an oracle."""

    def __init__(self, fn: Callable[[frozenset[int]], float], ground_set_size: int,
                 is_exact: bool = True):
        self.fn = fn
        self.ground_set_size = int(ground_set_size)
        self.is_exact = is_exact

    def eval(self, nodes: Iterable[int]) -> float:
        return float(self.fn(frozenset(int(v) for v in nodes)))


def _popcounts(x: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(x)
    return np.array([int(v).bit_count() for v in x], dtype=np.uint64)  # pragma: no cover


class ExactSpreadOracle(CoverageOracle):
    """Exact spread via live-edge enumeration, amortized over many queries.

    Precomputes, for every world, the per-node set of nodes reachable within
    the horizon (as bitmasks), after which each query is a vectorized union
    and popcount.  Requires n <= 64.
    """

    def __init__(self, g: DirectedGraph, model: str = "ic", horizon: int | None = None,
                 *, max_arcs: int = 20, max_nodes: int = 12, max_worlds: int = 1 << 20):
        model = check_model(model)
        horizon = check_horizon(horizon)
        if g.n > 64:
            raise ValueError("ExactSpreadOracle supports at most 64 nodes")
        self.graph = g
        self.model = model
        self.horizon = horizon
        self.ground_set_size = g.n
        self.is_exact = True
        worlds = (ic_worlds(g, max_arcs) if model == "ic"
                  else lt_worlds(g, max_nodes, max_worlds))
        probs: list[float] = []
        masks: list[list[int]] = []
        for prob, adj in worlds:
            if not prob:
                continue
            probs.append(prob)
            masks.append([reach_mask(adj, v, horizon, g.n) for v in range(g.n)])
        self._probs = np.asarray(probs)
        self._masks = np.asarray(masks, dtype=np.uint64)

    def eval(self, nodes: Iterable[int]) -> float:
        idx = [int(v) for v in nodes]
        if not idx:
            return 0.0
        union = np.bitwise_or.reduce(self._masks[:, idx], axis=1)
        return float(_popcounts(union).astype(np.float64) @ self._probs)


class MonteCarloSpreadOracle(CoverageOracle):
    """Estimated spread; each distinct set gets its own derived stream.

    The stream key mixes (master_seed, sorted members), so re-evaluating a
    set always reproduces the same estimate (memoized for speed) while any
    two distinct sets use independent simulations -- in particular each
    (iteration, candidate) pair inside a greedy run gets a fresh sub-seed.
    """

    def __init__(self, g: DirectedGraph, model: str = "ic", horizon: int | None = None,
                 n_sims: int = 10000, master_seed: int = 0, n_workers: int = 1):
        self.graph = g
        self.model = check_model(model)
        self.horizon = check_horizon(horizon)
        self.n_sims = int(n_sims)
        self.master_seed = check_seed(master_seed, "master_seed")
        self.n_workers = int(n_workers)
        self.ground_set_size = g.n
        self.is_exact = False
        self._memo: dict[frozenset[int], SpreadEstimate] = {}

    def estimate(self, nodes: Iterable[int]) -> SpreadEstimate:
        key = frozenset(int(v) for v in nodes)
        est = self._memo.get(key)
        if est is None:
            est = estimate_spread(
                self.graph, self.model, sorted(key), self.horizon,
                n_sims=self.n_sims,
                master_seed=set_key(self.master_seed, key),
                n_workers=self.n_workers,
            )
            self._memo[key] = est
        return est

    def eval(self, nodes: Iterable[int]) -> float:
        return self.estimate(nodes).mean


class WolseyOracle(CoverageOracle):
    """The two-column covered-area function showing plain greedy can be
    arbitrarily worse than optimal on real-valued set cover.

    Ground set: w1 (id 0), w2 (id 1), v1..vl (ids 2..l+1).  Each element
    covers intervals of two unit-height columns: w_j covers [1/2^(l+1), 1] of
    column j, and v_i covers [1/2^i, 1/2^(i-1)] of both columns.  f(S) is the
    total covered length, hence f(w_j) = 1 - 1/2^(l+1), f(v_i) = 1/2^(i-1),
    f({v1..vl}) = 2 - 1/2^(l-1) and f({w1, w2}) = 2 - 1/2^l.
    """

    def __init__(self, l: int):
        l = int(l)
        if l < 1:
            raise ValueError("l must be >= 1")
        self.l = l
        self.ground_set_size = l + 2
        self.is_exact = True
        self.labels = ["w1", "w2"] + [f"v{i}" for i in range(1, l + 1)]
        low = 0.5 ** (l + 1)
        # element -> intervals as (column, lo, hi) triples
        self.intervals: list[list[tuple[int, float, float]]] = [
            [(0, low, 1.0)],
            [(1, low, 1.0)],
        ]
        for i in range(1, l + 1):
            lo, hi = 0.5 ** i, 0.5 ** (i - 1)
            self.intervals.append([(0, lo, hi), (1, lo, hi)])

    def eval(self, nodes: Iterable[int]) -> float:
        cols: tuple[list, list] = ([], [])
        for v in nodes:
            for col, lo, hi in self.intervals[int(v)]:
                cols[col].append((lo, hi))
        total = 0.0
        for segs in cols:
            segs.sort()
            end = None
            for lo, hi in segs:
                if end is None or lo > end:
                    total += hi - lo
                    end = hi
                elif hi > end:
                    total += hi - end
                    end = hi
        return total


def wolsey_instance(l: int) -> WolseyOracle:
    """Exact oracle for the adversarial covered-area instance with l slabs."""
    return WolseyOracle(l)


class NoisyOracle(CoverageOracle):
    """(1 - delta)-approximate wrapper around an exact oracle.

    Returns a value in [(1 - delta) f(S), f(S)], deterministic per
    (S, rng_seed) and memoized so repeat queries are consistent.
    """

    def __init__(self, base: CoverageOracle, delta: float, rng_seed: int = 0):
        delta = float(delta)
        if not (0.0 <= delta < 1.0):
            raise ValueError(f"delta must lie in [0, 1), got {delta}")
        self.base = base
        self.delta = delta
        self.rng_seed = check_seed(rng_seed, "rng_seed")
        self.ground_set_size = base.ground_set_size
        self.is_exact = delta == 0.0
        self.relative_error_bound = delta
        self._memo: dict[frozenset[int], float] = {}

    def eval(self, nodes: Iterable[int]) -> float:
        key = frozenset(int(v) for v in nodes)
        val = self._memo.get(key)
        if val is None:
            u = stream(set_key(self.rng_seed, key)).random()
            val = self.base.eval(key) * (1.0 - self.delta * u)
            self._memo[key] = val
        return val


def noisy_oracle(base: CoverageOracle, delta: float, rng_seed: int = 0) -> NoisyOracle:
    """Wrap an exact oracle so values may dip up to a delta fraction low."""
    return NoisyOracle(base, delta, rng_seed)
