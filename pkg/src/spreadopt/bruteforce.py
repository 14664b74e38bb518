"""Exhaustive optima for small instances; the test oracles for the greedy bounds."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .exact import reach_count
from .graph import DirectedGraph
from .greedy import MintimeResult, SeedSet
from .oracles import CoverageOracle
from .validation import check_costs, check_model

__all__ = ["brute_force_mintss", "brute_force_mintime"]


def brute_force_mintss(oracle: CoverageOracle, eta: float, costs=None,
                       *, max_ground: int = 20, atol: float = 1e-9) -> SeedSet:
    """Minimum-cost subset with coverage >= eta, by subset enumeration.

    Ties break toward the lexicographically smallest node list.  Raises when
    the ground set exceeds the cap or no subset reaches eta.
    """
    n = oracle.ground_set_size
    if n > max_ground:
        raise ValueError(f"ground set of {n} exceeds the enumeration cap {max_ground}")
    eta = float(eta)
    cost_arr = check_costs(costs, n)
    best_nodes: tuple[int, ...] | None = None
    best_cost = np.inf
    for mask in range(1 << n):
        nodes = tuple(v for v in range(n) if mask >> v & 1)
        cost = float(cost_arr[list(nodes)].sum()) if nodes else 0.0
        if cost > best_cost or (cost == best_cost and best_nodes is not None
                                and nodes >= best_nodes):
            continue
        if oracle.eval(nodes) >= eta - atol:
            best_nodes, best_cost = nodes, cost
    if best_nodes is None:
        raise ValueError(f"eta={eta} is unreachable for this oracle")
    return SeedSet(best_nodes, float(len(best_nodes)) if costs is None else best_cost)


def brute_force_mintime(g: DirectedGraph, model: str, k: int, eta: float,
                        *, max_nodes: int = 16) -> MintimeResult:
    """Minimum horizon over all seed sets of size <= k reaching >= eta nodes.

    Only for deterministic graphs (every arc probability 0 or 1), where both
    cascade models reduce to BFS reachability; this is the exact solver for
    the covering-radius view of the problem.
    """
    check_model(model)
    if g.n > max_nodes:
        raise ValueError(f"{g.n} nodes exceed the enumeration cap {max_nodes}")
    if not np.all((g.probs == 0.0) | (g.probs == 1.0)):
        raise ValueError("brute_force_mintime requires a deterministic (p in {0,1}) graph")
    k = int(k)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    eta = float(eta)
    if eta > g.n:
        raise ValueError(f"eta={eta} exceeds the node count {g.n}")

    adj = [g.targets[g.indptr[v]:g.indptr[v + 1]][
               g.probs[g.indptr[v]:g.indptr[v + 1]] == 1.0].tolist()
           for v in range(g.n)]

    best: tuple[int, int, tuple[int, ...]] | None = None  # (R, size, nodes)
    sizes = range(0, k + 1) if eta <= 0 else range(1, k + 1)
    for size in sizes:
        for nodes in combinations(range(g.n), size):
            # BFS layer sizes give coverage as a function of the radius
            dist = [-1] * g.n
            frontier = list(nodes)
            for v in frontier:
                dist[v] = 0
            covered = len(frontier)
            radius = 0
            need = None if covered >= eta else -1
            while frontier:
                nxt = []
                for u in frontier:
                    for v in adj[u]:
                        if dist[v] < 0:
                            dist[v] = radius + 1
                            nxt.append(v)
                frontier = nxt
                radius += 1
                covered += len(nxt)
                if need == -1 and covered >= eta:
                    need = radius
            if covered >= eta:
                r = 0 if need is None else need
                cand = (r, size, nodes)
                if best is None or cand < best:
                    best = cand
    if best is None:
        raise ValueError(f"no seed set of size <= {k} reaches eta={eta}")
    r, _, nodes = best
    covered = reach_count(adj, list(nodes), r, g.n)
    return MintimeResult(SeedSet.of(nodes, g.cost), r, float(covered), True)
