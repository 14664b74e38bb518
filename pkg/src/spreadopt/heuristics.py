"""Baseline seed-selection heuristics, adapted to the cover-style problems.

Each heuristic produces a total ranking of the nodes; the threshold-cover
adaptation adds nodes in rank order until the estimated spread reaches
eta - eps, and the time-bounded adaptation takes the top-k nodes and scans
horizons for the first one meeting the threshold.

Rankers:
    random       uniform shuffle from the spec's rng_seed.
    high-degree  descending out-degree (influence flows outward).
    pagerank     power iteration on the reversed graph with transition
                 weights proportional to the incoming influence probability.
    sp           greedy ordering under a max-probability shortest-path
                 surrogate of spread: a candidate's surrogate gain is how
                 much it raises the best single-path activation probability
                 over the nodes it can reach (paths cheaper than `floor` are
                 pruned).  An approximation of the shortest-path heuristics
                 from the influence-maximization literature.

"pmia" is reserved for the arborescence heuristic we do not ship; requesting
it raises NotImplementedError.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import numpy as np

from ._rng import set_key, stream
from .graph import DirectedGraph
from .greedy import MintimeResult, MintssResult, SeedSet
from .oracles import MonteCarloSpreadOracle
from .simulate import spread_profile
from .validation import check_eta_eps, check_model, check_seed

__all__ = ["HEURISTIC_KINDS", "HeuristicSpec", "rank_nodes", "pagerank_scores",
           "heuristic_mintss", "heuristic_mintime"]

HEURISTIC_KINDS = ("random", "high-degree", "pagerank", "sp")

_PARAM_DEFAULTS = {
    "random": {},
    "high-degree": {},
    "pagerank": {"damping": 0.85, "tol": 1e-8, "max_iter": 200},
    "sp": {"floor": 1e-3},
}


@dataclass
class HeuristicSpec:
    """A heuristic kind plus its parameters and rng seed."""

    kind: str
    params: dict = field(default_factory=dict)
    rng_seed: int = 0

    def __post_init__(self):
        if self.kind == "pmia":
            raise NotImplementedError(
                "pmia (maximum influence arborescence) is reserved but unimplemented"
            )
        if self.kind not in HEURISTIC_KINDS:
            raise ValueError(f"unknown heuristic {self.kind!r}; expected one of {HEURISTIC_KINDS}")
        merged = dict(_PARAM_DEFAULTS[self.kind])
        for key, val in self.params.items():
            if key not in merged:
                raise ValueError(f"heuristic {self.kind!r} does not take parameter {key!r}")
            merged[key] = val
        if self.kind == "pagerank":
            if not (0.0 < merged["damping"] < 1.0):
                raise ValueError("pagerank damping must lie in (0, 1)")
            if merged["max_iter"] < 1:
                raise ValueError("pagerank max_iter must be >= 1")
        if self.kind == "sp" and not (0.0 < merged["floor"] <= 1.0):
            raise ValueError("sp floor must lie in (0, 1]")
        self.params = merged
        self.rng_seed = check_seed(self.rng_seed, "rng_seed")


def pagerank_scores(g: DirectedGraph, damping: float = 0.85, tol: float = 1e-8,
                    max_iter: int = 200) -> np.ndarray:
    """PageRank on the reversed graph, weighting transitions by arc probability.

    Reversing the arcs sends importance from the influenced to the
    influencer, so strong spreaders score high.  Dangling mass is spread
    uniformly; iteration stops at L1 change < tol or after max_iter rounds.
    """
    n = g.n
    # reversed arc u->v for original (v, u): stored as (src=targets, dst=sources)
    rev_src = g.targets
    rev_dst = np.repeat(np.arange(n), np.diff(g.indptr))
    weights = g.probs
    out_w = np.zeros(n)
    np.add.at(out_w, rev_src, weights)
    has_out = out_w > 0
    x = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        contrib = np.where(has_out, x / np.where(has_out, out_w, 1.0), 0.0)
        nxt = np.zeros(n)
        np.add.at(nxt, rev_dst, weights * contrib[rev_src])
        dangling = x[~has_out].sum()
        nxt = (1.0 - damping) / n + damping * (nxt + dangling / n)
        if np.abs(nxt - x).sum() < tol:
            x = nxt
            break
        x = nxt
    return x


def _max_path_probs(g: DirectedGraph, source: int, floor: float) -> dict[int, float]:
    """Best single-path activation probability from source to each node.

    Dijkstra over path probability products; paths below `floor` are pruned.
    """
    best: dict[int, float] = {source: 1.0}
    heap = [(-1.0, source)]
    while heap:
        neg_p, u = heapq.heappop(heap)
        p = -neg_p
        if p < best.get(u, 0.0):
            continue
        tgt, pr = g.out(u)
        for t, q in zip(tgt.tolist(), pr.tolist()):
            np_ = p * q
            if np_ >= floor and np_ > best.get(t, 0.0):
                best[t] = np_
                heapq.heappush(heap, (-np_, t))
    return best


def _sp_gain(reach_v, covered) -> float:
    gain = 0.0
    for t, p in reach_v.items():
        if p > covered[t]:
            gain += p - covered[t]
    return gain


def _sp_order(g: DirectedGraph, floor: float) -> list[int]:
    """Greedy ordering under the surrogate, lazily re-evaluated.

    The surrogate is monotone submodular and computed exactly, so cached
    gains are true upper bounds and the lazy order equals the plain greedy
    order (ties fall to the smaller id in both).
    """
    reach = [_max_path_probs(g, v, floor) for v in range(g.n)]
    covered = np.zeros(g.n)
    order: list[int] = []
    picked = np.zeros(g.n, dtype=bool)
    heap: list[tuple[float, int, int]] = [(-np.inf, v, -1) for v in range(g.n)]
    heapq.heapify(heap)
    for it in range(g.n):
        while True:
            neg_gain, v, stamp = heapq.heappop(heap)
            if picked[v]:
                continue
            if stamp == it:
                break
            heapq.heappush(heap, (-_sp_gain(reach[v], covered), v, it))
        order.append(v)
        picked[v] = True
        for t, p in reach[v].items():
            if p > covered[t]:
                covered[t] = p
    return order


def _sp_order_plain(g: DirectedGraph, floor: float) -> list[int]:
    """Reference implementation: full rescan every round; validates _sp_order."""
    reach = [_max_path_probs(g, v, floor) for v in range(g.n)]
    covered = np.zeros(g.n)
    order: list[int] = []
    remaining = set(range(g.n))
    while remaining:
        best_v, best_gain = -1, -1.0
        for v in sorted(remaining):
            gain = _sp_gain(reach[v], covered)
            if gain > best_gain:
                best_v, best_gain = v, gain
        order.append(best_v)
        remaining.remove(best_v)
        for t, p in reach[best_v].items():
            if p > covered[t]:
                covered[t] = p
    return order


def rank_nodes(g: DirectedGraph, spec: HeuristicSpec) -> list[int]:
    """Total ordering of V under the heuristic; deterministic given the spec."""
    if spec.kind == "random":
        return stream(spec.rng_seed).permutation(g.n).tolist()
    if spec.kind == "high-degree":
        out_deg = np.diff(g.indptr)
        return sorted(range(g.n), key=lambda v: (-out_deg[v], v))
    if spec.kind == "pagerank":
        scores = pagerank_scores(g, spec.params["damping"], spec.params["tol"],
                                 spec.params["max_iter"])
        return sorted(range(g.n), key=lambda v: (-scores[v], v))
    return _sp_order(g, spec.params["floor"])


def heuristic_mintss(g: DirectedGraph, model: str, spec: HeuristicSpec,
                     eta: float, eps: float, n_sims: int = 10000,
                     master_seed: int = 0, n_workers: int = 1) -> MintssResult:
    """Grow a seed set in rank order until estimated spread reaches eta - eps."""
    model = check_model(model)
    eta, eps = check_eta_eps(eta, eps)
    oracle = MonteCarloSpreadOracle(g, model, None, n_sims=n_sims,
                                    master_seed=master_seed, n_workers=n_workers)
    order = rank_nodes(g, spec)
    chosen: list[int] = []
    gains: list[float] = []
    coverage = 0.0
    for v in order:
        chosen.append(v)
        new_cov = oracle.eval(chosen)
        gains.append(new_cov - coverage)
        coverage = new_cov
        if coverage >= eta - eps:
            return MintssResult(SeedSet.of(chosen, g.cost), coverage,
                                len(chosen), tuple(gains), True)
    return MintssResult(SeedSet.of(chosen, g.cost), coverage,
                        len(chosen), tuple(gains), False)


def heuristic_mintime(g: DirectedGraph, model: str, spec: HeuristicSpec,
                      k: int, eta: float, eps: float, n_sims: int = 10000,
                      master_seed: int = 0, n_workers: int = 1) -> MintimeResult:
    """Take the top-k ranked nodes; report the first horizon reaching eta - eps.

    The per-horizon estimates reuse one batch of unbounded cascades (equal to
    the per-horizon runs draw-for-draw), keyed the same way the spread oracle
    would key this seed set.
    """
    model = check_model(model)
    if int(k) < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    eta, eps = check_eta_eps(eta, eps, upper=float(g.n))
    top = rank_nodes(g, spec)[: int(k)]
    means, _ = spread_profile(g, model, top, n_sims=n_sims,
                              master_seed=set_key(master_seed, top),
                              n_workers=n_workers)
    seed_set = SeedSet.of(top, g.cost)
    for horizon in range(g.n):
        if means[horizon] >= eta - eps:
            return MintimeResult(seed_set, horizon, float(means[horizon]), True)
    return MintimeResult(seed_set, None, float(means[g.n - 1]), False)
