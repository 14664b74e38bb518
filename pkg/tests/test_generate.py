import numpy as np
import pytest

from spreadopt import generate_synthetic


def test_path_topology():
    g = generate_synthetic("path", 3)
    assert [(s, t) for s, t, _ in g.arcs()] == [(0, 1), (1, 2)]


def test_star_topology():
    g = generate_synthetic("star", 5)
    assert [(s, t) for s, t, _ in g.arcs()] == [(0, v) for v in range(1, 5)]


def test_erdos_renyi_deterministic():
    g1 = generate_synthetic("erdos-renyi", 50, {"p_edge": 0.05}, seed=7)
    g2 = generate_synthetic("erdos-renyi", 50, {"p_edge": 0.05}, seed=7)
    assert g1 == g2
    g3 = generate_synthetic("erdos-renyi", 50, {"p_edge": 0.05}, seed=8)
    assert g1 != g3


@pytest.mark.parametrize("kind,params", [
    ("erdos-renyi", {"p_edge": 0.2}),
    ("power-law", {"m": 2}),
    ("dag-layered", {"layers": 3, "p_edge": 0.5}),
])
def test_generators_no_self_loops_or_duplicates(kind, params):
    g = generate_synthetic(kind, 40, params, seed=3)
    arcs = [(s, t) for s, t, _ in g.arcs()]
    assert len(arcs) == len(set(arcs))
    assert all(s != t for s, t in arcs)


def test_power_law_is_symmetric_and_skewed():
    g = generate_synthetic("power-law", 200, {"m": 2}, seed=5)
    arcset = {(s, t) for s, t, _ in g.arcs()}
    assert all((t, s) in arcset for (s, t) in arcset)
    out_deg = np.diff(g.indptr)
    # preferential attachment should concentrate degree on a few hubs
    assert out_deg.max() >= 4 * np.median(out_deg)


def test_dag_layered_is_acyclic_forward():
    g = generate_synthetic("dag-layered", 30, {"layers": 5, "p_edge": 0.8}, seed=1)
    layer = (np.arange(30) * 5) // 30
    for s, t, _ in g.arcs():
        assert layer[t] == layer[s] + 1


def test_arc_probability_param():
    g = generate_synthetic("path", 4, {"prob": 0.25})
    assert np.all(g.probs == 0.25)


def test_bad_params_rejected():
    with pytest.raises(ValueError, match="does not take"):
        generate_synthetic("path", 3, {"p_edge": 0.5})
    with pytest.raises(ValueError, match="unknown generator"):
        generate_synthetic("ring", 3)
    with pytest.raises(ValueError):
        generate_synthetic("power-law", 3, {"m": 5})
    with pytest.raises(ValueError):
        generate_synthetic("erdos-renyi", 0)
