"""Exact expected spread by live-edge world enumeration (small instances).

Computing expected spread exactly is #P-hard, so these routines enumerate the
live-edge worlds explicitly and are capped by instance size.  For IC a world
fixes every uncertain arc live or blocked (arcs with probability 0 or 1 need
no branching); for LT a world gives every node at most one live in-arc,
chosen with its incoming weight.  Spread is the probability-weighted count of
nodes reachable from the seeds within the horizon.
"""

from __future__ import annotations

from itertools import product

from .graph import DirectedGraph
from .validation import check_horizon, check_lt_weights, check_model, check_nodes

__all__ = ["exact_spread", "ic_worlds", "lt_worlds", "reach_count", "reach_mask"]


def reach_count(adj, sources, horizon: int | None, n: int) -> int:
    """Number of nodes reachable from `sources` in <= horizon hops (None = any)."""
    seen = bytearray(n)
    frontier = []
    for s in sources:
        if not seen[s]:
            seen[s] = 1
            frontier.append(s)
    count = len(frontier)
    depth = 0
    while frontier and (horizon is None or depth < horizon):
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    nxt.append(v)
        count += len(nxt)
        frontier = nxt
        depth += 1
    return count


def reach_mask(adj, source: int, horizon: int | None, n: int) -> int:
    """Bitmask of nodes reachable from one source in <= horizon hops."""
    mask = 1 << source
    frontier = [source]
    depth = 0
    while frontier and (horizon is None or depth < horizon):
        nxt = []
        for u in frontier:
            for v in adj[u]:
                bit = 1 << v
                if not mask & bit:
                    mask |= bit
                    nxt.append(v)
        frontier = nxt
        depth += 1
    return mask


def ic_worlds(g: DirectedGraph, max_arcs: int = 20):
    """Yield (probability, adjacency) over all IC live-edge worlds.

    Only arcs with probability strictly between 0 and 1 branch; the cap
    applies to their count.
    """
    certain: list[list[int]] = [[] for _ in range(g.n)]
    uncertain: list[tuple[int, int, float]] = []
    for s, t, p in g.arcs():
        if p >= 1.0:
            certain[s].append(t)
        elif p > 0.0:
            uncertain.append((s, t, p))
    if len(uncertain) > max_arcs:
        raise ValueError(
            f"{len(uncertain)} uncertain arcs exceed the IC enumeration cap {max_arcs}"
        )
    for bits in range(1 << len(uncertain)):
        prob = 1.0
        adj = [list(a) for a in certain]
        for i, (s, t, p) in enumerate(uncertain):
            if bits >> i & 1:
                prob *= p
                adj[s].append(t)
            else:
                prob *= 1.0 - p
        yield prob, adj


def lt_worlds(g: DirectedGraph, max_nodes: int = 12, max_worlds: int = 1 << 20):
    """Yield (probability, adjacency) over all LT live-edge worlds.

    Each node independently picks one in-neighbor v with weight b(v, u), or
    nothing with the leftover 1 - sum(b); zero-probability options are pruned.
    """
    if g.n > max_nodes:
        raise ValueError(f"{g.n} nodes exceed the LT enumeration cap {max_nodes}")
    check_lt_weights(g)
    in_arcs: list[list[tuple[int, float]]] = [[] for _ in range(g.n)]
    for s, t, p in g.arcs():
        if p > 0.0:
            in_arcs[t].append((s, p))
    options: list[list[tuple[int | None, float]]] = []
    n_worlds = 1
    for u in range(g.n):
        opts: list[tuple[int | None, float]] = list(in_arcs[u])
        leftover = 1.0 - sum(p for _, p in in_arcs[u])
        if leftover > 0.0:
            opts.append((None, leftover))
        options.append(opts)
        n_worlds *= len(opts)
        if n_worlds > max_worlds:
            raise ValueError(f"LT world count exceeds the cap {max_worlds}")
    for choice in product(*options):
        prob = 1.0
        adj: list[list[int]] = [[] for _ in range(g.n)]
        for u, (src, p) in enumerate(choice):
            prob *= p
            if src is not None:
                adj[src].append(u)
        yield prob, adj


def exact_spread(g: DirectedGraph, model: str, seeds, horizon: int | None = None,
                 *, max_arcs: int = 20, max_nodes: int = 12,
                 max_worlds: int = 1 << 20) -> float:
    """Exact sigma^horizon(seeds) by enumerating live-edge worlds."""
    model = check_model(model)
    horizon = check_horizon(horizon)
    seed_arr = check_nodes(g, seeds)
    if seed_arr.size == 0:
        return 0.0
    seed_list = seed_arr.tolist()
    worlds = (ic_worlds(g, max_arcs) if model == "ic"
              else lt_worlds(g, max_nodes, max_worlds))
    total = 0.0
    for prob, adj in worlds:
        if prob:
            total += prob * reach_count(adj, seed_list, horizon, g.n)
    return total
