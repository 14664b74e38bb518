import pytest
from sklearn.base import clone

from spreadopt import GreedyMaxInf, GreedyMintss, HeuristicRanker, MinTime

from conftest import make_graph


def two_stars():
    arcs = [(0, i, 1.0) for i in (1, 2, 3, 4)] + [(5, i, 1.0) for i in (6, 7)]
    return make_graph(8, arcs)


def test_greedy_maxinf_estimator():
    est = GreedyMaxInf(k=2, exact=True).fit(two_stars())
    assert est.seeds_ == [0, 5]
    assert est.spread_ == 8.0


def test_get_params_round_trip():
    est = GreedyMaxInf(k=3, model="lt", n_sims=500, master_seed=9)
    params = est.get_params()
    assert params["k"] == 3 and params["model"] == "lt"
    cloned = clone(est)
    assert cloned.get_params() == params


def test_greedy_mintss_estimator():
    est = GreedyMintss(eta=5, eps=0.5, exact=True).fit(two_stars())
    assert est.success_
    assert est.seeds_ == [0]
    assert est.coverage_ == 5.0
    assert est.n_iter_ == 1
    assert est.gains_ == [5.0]


def test_mintime_estimator():
    g = make_graph(5, [(0, v, 1.0) for v in range(1, 5)])
    est = MinTime(k=1, eta=5, eps=0.5, n_sims=1).fit(g)
    assert est.success_ and est.time_ == 1
    assert est.seeds_ == [0]
    assert est.score(g) == 5.0


def test_heuristic_ranker_transform():
    est = HeuristicRanker(kind="high-degree", k=2).fit(two_stars())
    assert est.ranking_[0] == 0
    assert est.transform() == [0, 5]


def test_unfitted_access_raises():
    with pytest.raises(AttributeError, match="not fitted"):
        HeuristicRanker().transform()
    with pytest.raises(AttributeError, match="not fitted"):
        GreedyMaxInf().score(two_stars())


def test_fit_rejects_non_graph():
    with pytest.raises(TypeError, match="DirectedGraph"):
        GreedyMaxInf(k=1).fit([[0, 1]])


def test_mc_fit_is_deterministic():
    g = make_graph(6, [(0, 1, 0.6), (1, 2, 0.6), (3, 4, 0.6), (4, 5, 0.6)])
    a = GreedyMintss(eta=3, eps=0.5, n_sims=300, master_seed=4).fit(g)
    b = GreedyMintss(eta=3, eps=0.5, n_sims=300, master_seed=4).fit(g)
    assert a.seeds_ == b.seeds_ and a.coverage_ == b.coverage_
