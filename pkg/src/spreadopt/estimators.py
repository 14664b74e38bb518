"""Scikit-learn style estimator wrappers around the optimizers.

Each estimator stores its constructor parameters verbatim (so ``get_params``
/ ``set_params`` and cloning work), validates inputs in ``fit``, and exposes
its results as trailing-underscore attributes.  ``fit`` takes a
DirectedGraph instead of a feature matrix; everything else follows the
estimator protocol so the solvers compose with the wider tooling ecosystem.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator

from .graph import DirectedGraph
from .greedy import greedy_maxinf, greedy_mintss, mintime
from .heuristics import HeuristicSpec, rank_nodes
from .oracles import ExactSpreadOracle, MonteCarloSpreadOracle
from .simulate import estimate_spread

__all__ = ["GreedyMaxInf", "GreedyMintss", "MinTime", "HeuristicRanker"]


def _check_graph(g) -> DirectedGraph:
    if not isinstance(g, DirectedGraph):
        raise TypeError(f"expected a DirectedGraph, got {type(g).__name__}")
    return g


class _SpreadEstimatorMixin:
    """Shared oracle construction and scoring for the seed-set estimators."""

    def _oracle(self, g: DirectedGraph):
        if self.exact:
            return ExactSpreadOracle(g, self.model, self.horizon)
        return MonteCarloSpreadOracle(g, self.model, self.horizon,
                                      n_sims=self.n_sims,
                                      master_seed=self.master_seed,
                                      n_workers=self.n_workers)

    def score(self, g: DirectedGraph) -> float:
        """Estimated spread of the fitted seeds on a (possibly new) graph."""
        if not hasattr(self, "seeds_"):
            raise AttributeError("estimator is not fitted yet; call fit first")
        return estimate_spread(_check_graph(g), self.model, list(self.seeds_),
                               self.horizon, n_sims=self.n_sims,
                               master_seed=self.master_seed,
                               n_workers=self.n_workers).mean


class GreedyMaxInf(BaseEstimator, _SpreadEstimatorMixin):
    """Budgeted influence maximization: pick k seeds by greedy marginal gain.

    Attributes after fit: ``seeds_`` (pick order), ``spread_`` (coverage of
    the full set under the fitting oracle).
    """

    def __init__(self, k=1, model="ic", horizon=None, n_sims=10000,
                 master_seed=0, exact=False, lazy=False, n_workers=1):
        self.k = k
        self.model = model
        self.horizon = horizon
        self.n_sims = n_sims
        self.master_seed = master_seed
        self.exact = exact
        self.lazy = lazy
        self.n_workers = n_workers

    def fit(self, g: DirectedGraph, y=None):
        g = _check_graph(g)
        oracle = self._oracle(g)
        result = greedy_maxinf(oracle, self.k, costs=g.cost, lazy=self.lazy)
        self.seeds_ = list(result.nodes)
        self.spread_ = oracle.eval(result.nodes)
        return self


class GreedyMintss(BaseEstimator, _SpreadEstimatorMixin):
    """Threshold cover: grow a seed set until spread reaches eta - eps.

    Attributes after fit: ``seeds_``, ``coverage_``, ``n_iter_``, ``gains_``,
    ``success_``.
    """

    def __init__(self, eta=1.0, eps=0.5, model="ic", horizon=None,
                 n_sims=10000, master_seed=0, exact=False, lazy=False,
                 max_picks=None, n_workers=1):
        self.eta = eta
        self.eps = eps
        self.model = model
        self.horizon = horizon
        self.n_sims = n_sims
        self.master_seed = master_seed
        self.exact = exact
        self.lazy = lazy
        self.max_picks = max_picks
        self.n_workers = n_workers

    def fit(self, g: DirectedGraph, y=None):
        g = _check_graph(g)
        result = greedy_mintss(self._oracle(g), self.eta, self.eps,
                               costs=g.cost, max_picks=self.max_picks,
                               lazy=self.lazy)
        self.seeds_ = list(result.seeds.nodes)
        self.coverage_ = result.achieved_coverage
        self.n_iter_ = result.iterations
        self.gains_ = list(result.marginal_gains)
        self.success_ = result.success
        return self


class MinTime(BaseEstimator, _SpreadEstimatorMixin):
    """Minimum propagation time under a boosted seed budget.

    Attributes after fit: ``seeds_``, ``time_`` (None if infeasible),
    ``coverage_``, ``success_``.
    """

    def __init__(self, k=1, eta=1.0, eps=0.5, model="ic", n_sims=10000,
                 master_seed=0, lazy=False, n_workers=1):
        self.k = k
        self.eta = eta
        self.eps = eps
        self.model = model
        self.n_sims = n_sims
        self.master_seed = master_seed
        self.lazy = lazy
        self.n_workers = n_workers

    # MinTime scans horizons itself; score() estimates at the found horizon.
    horizon = None
    exact = False

    def fit(self, g: DirectedGraph, y=None):
        g = _check_graph(g)
        result = mintime(g, self.model, self.k, self.eta, self.eps,
                         n_sims=self.n_sims, master_seed=self.master_seed,
                         n_workers=self.n_workers, lazy=self.lazy)
        self.seeds_ = list(result.seeds.nodes)
        self.time_ = result.time
        self.coverage_ = result.achieved_coverage
        self.success_ = result.success
        self.horizon = result.time
        return self


class HeuristicRanker(BaseEstimator):
    """Rank all nodes with one of the baseline heuristics.

    Attributes after fit: ``ranking_`` (a total order over the nodes).
    ``transform`` returns the top-k of that ranking.
    """

    def __init__(self, kind="high-degree", params=None, rng_seed=0, k=None):
        self.kind = kind
        self.params = params
        self.rng_seed = rng_seed
        self.k = k

    def fit(self, g: DirectedGraph, y=None):
        g = _check_graph(g)
        spec = HeuristicSpec(self.kind, dict(self.params or {}), self.rng_seed)
        self.ranking_ = rank_nodes(g, spec)
        return self

    def transform(self, g: DirectedGraph | None = None) -> list[int]:
        if not hasattr(self, "ranking_"):
            raise AttributeError("estimator is not fitted yet; call fit first")
        return self.ranking_ if self.k is None else self.ranking_[: self.k]
