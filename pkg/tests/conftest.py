"""Shared fixtures and independent reference oracles.

The enumerators here are deliberately written with a different structure
from the package (full-arc subsets, Bellman-Ford style distance relaxation)
so they can serve as independent checks on the live-edge implementations.
"""

from __future__ import annotations

from itertools import product

import numpy as np
import pytest

from spreadopt import DirectedGraph


def make_graph(n, arcs, costs=None, labels=None):
    return DirectedGraph(n, arcs, cost=costs, labels=labels)


def _bounded_dists(n, live_arcs, seeds, horizon):
    """Hop distances from the seed set via repeated relaxation."""
    inf = float("inf")
    dist = [inf] * n
    for s in seeds:
        dist[s] = 0
    for _ in range(n):
        changed = False
        for (u, v) in live_arcs:
            if dist[u] + 1 < dist[v]:
                dist[v] = dist[u] + 1
                changed = True
        if not changed:
            break
    cap = inf if horizon is None else horizon
    return sum(1 for d in dist if d != inf and d <= cap)


def ic_enum_spread(n, arcs, seeds, horizon=None):
    """Expected IC spread by enumerating every subset of all arcs."""
    seeds = list(seeds)
    if not seeds:
        return 0.0
    total = 0.0
    m = len(arcs)
    for bits in range(2 ** m):
        prob = 1.0
        live = []
        for i, (u, v, p) in enumerate(arcs):
            if (bits >> i) & 1:
                prob *= p
                live.append((u, v))
            else:
                prob *= 1.0 - p
        if prob > 0.0:
            total += prob * _bounded_dists(n, live, seeds, horizon)
    return total


def lt_enum_spread(n, arcs, seeds, horizon=None):
    """Expected LT spread by enumerating every in-neighbor choice profile."""
    seeds = list(seeds)
    if not seeds:
        return 0.0
    incoming = [[] for _ in range(n)]
    for (u, v, p) in arcs:
        incoming[v].append((u, p))
    menus = []
    for v in range(n):
        total_w = sum(p for _, p in incoming[v])
        menu = [(u, p) for u, p in incoming[v] if p > 0]
        if 1.0 - total_w > 0:
            menu.append((None, 1.0 - total_w))
        menus.append(menu)
    total = 0.0
    for profile in product(*menus):
        prob = 1.0
        live = []
        for v, (u, p) in enumerate(profile):
            prob *= p
            if u is not None:
                live.append((u, v))
        if prob > 0.0:
            total += prob * _bounded_dists(n, live, seeds, horizon)
    return total


def random_arcs(rng, n, max_arcs, probs="mixed"):
    """Random duplicate-free arc list; probs: 'mixed' | 'uniform01' | 'binary'."""
    arcs = []
    seen = set()
    for _ in range(int(rng.integers(0, max_arcs + 1))):
        u, v = int(rng.integers(n)), int(rng.integers(n))
        if u == v or (u, v) in seen:
            continue
        seen.add((u, v))
        if probs == "binary":
            p = float(rng.integers(0, 2))
        elif probs == "uniform01":
            p = float(rng.random())
        else:
            p = float(rng.choice([0.0, 1.0, round(float(rng.random()), 3)]))
        arcs.append((u, v, p))
    return arcs


def random_lt_graph(rng, n, max_arcs):
    """Random graph whose incoming weights sum to at most 1 per node."""
    arcs = random_arcs(rng, n, max_arcs, probs="uniform01")
    sums = {}
    for (u, v, p) in arcs:
        sums[v] = sums.get(v, 0.0) + p
    scaled = []
    for (u, v, p) in arcs:
        scale = 0.999 / sums[v] if sums[v] > 1.0 else 1.0
        scaled.append((u, v, p * scale))
    return DirectedGraph(n, scaled), scaled


class WeightedCoverOracle:
    """Weighted-coverage set function: monotone, submodular, exact.

    Element i covers a fixed subset of a weighted universe; f(S) is the
    total weight covered.  Used as a cheap stand-in for spread oracles in
    the bound checks.
    """

    is_exact = True
    relative_error_bound = None

    def __init__(self, covers, weights):
        self.covers = [frozenset(c) for c in covers]
        self.weights = np.asarray(weights, dtype=float)
        self.ground_set_size = len(covers)

    def eval(self, nodes):
        covered = frozenset().union(*(self.covers[int(v)] for v in nodes)) if nodes else frozenset()
        return float(sum(self.weights[i] for i in covered))

    def ground_set(self):
        return range(self.ground_set_size)


def random_cover_oracle(rng, ground=8, universe=12):
    covers = []
    for _ in range(ground):
        size = int(rng.integers(1, universe))
        covers.append(set(int(x) for x in rng.choice(universe, size=size, replace=False)))
    weights = rng.uniform(0.2, 2.0, size=universe)
    return WeightedCoverOracle(covers, weights)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
