"""Synthetic graph generators, reproducible from an integer seed.

Desk-scale stand-ins for the large coauthorship/microblog networks used in
published influence studies.  All generators return the same graph for the
same (kind, n, params, seed).
"""

from __future__ import annotations

import numpy as np

from ._rng import stream
from .graph import DirectedGraph
from .validation import check_probability

__all__ = ["GENERATOR_KINDS", "generate_synthetic"]

GENERATOR_KINDS = ("erdos-renyi", "power-law", "path", "star", "dag-layered")

_DEFAULTS = {
    "erdos-renyi": {"p_edge": 0.05, "prob": 0.1},
    "power-law": {"m": 2, "prob": 0.1},
    "path": {"prob": 0.1},
    "star": {"prob": 0.1},
    "dag-layered": {"layers": 4, "p_edge": 0.3, "prob": 0.1},
}


def _check_params(kind: str, params: dict | None) -> dict:
    if kind not in _DEFAULTS:
        raise ValueError(f"unknown generator kind {kind!r}; expected one of {GENERATOR_KINDS}")
    merged = dict(_DEFAULTS[kind])
    for key, val in (params or {}).items():
        if key not in merged:
            raise ValueError(f"generator {kind!r} does not take parameter {key!r}")
        merged[key] = val
    check_probability(merged["prob"], "prob")
    if "p_edge" in merged:
        check_probability(merged["p_edge"], "p_edge")
    return merged


def generate_synthetic(kind: str, n: int, params: dict | None = None, seed: int = 0) -> DirectedGraph:
    """Build a synthetic graph of the given kind.

    Per-kind parameters (all kinds accept ``prob``, the arc probability):
        erdos-renyi: ``p_edge`` -- independent arc probability.
        power-law:   ``m`` -- preferential-attachment arcs per new node;
                     every edge yields arcs in both directions.
        path:        arcs 0->1->...->n-1.
        star:        arcs 0->v for v in 1..n-1.
        dag-layered: ``layers``, ``p_edge`` -- nodes split into consecutive
                     layers, each cross-layer arc present independently.
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    p = _check_params(kind, params)
    prob = float(p["prob"])
    rng = stream(int(seed))
    arcs: list[tuple[int, int, float]] = []

    if kind == "path":
        arcs = [(i, i + 1, prob) for i in range(n - 1)]
    elif kind == "star":
        arcs = [(0, v, prob) for v in range(1, n)]
    elif kind == "erdos-renyi":
        mask = rng.random((n, n)) < p["p_edge"]
        np.fill_diagonal(mask, False)
        src, dst = np.nonzero(mask)
        arcs = [(int(s), int(t), prob) for s, t in zip(src, dst)]
    elif kind == "power-law":
        m = int(p["m"])
        if m < 1 or m >= n:
            raise ValueError(f"power-law needs 1 <= m < n, got m={m}, n={n}")
        # Barabasi-Albert attachment; the repeated-nodes list realizes the
        # degree-proportional sampling.
        edges: set[tuple[int, int]] = set()
        attachment: list[int] = list(range(m))
        for new in range(m, n):
            chosen: set[int] = set()
            while len(chosen) < m:
                pick = attachment[int(rng.integers(len(attachment)))]
                chosen.add(pick)
            for tgt in sorted(chosen):
                edges.add((min(new, tgt), max(new, tgt)))
                attachment.append(tgt)
            attachment.extend([new] * m)
        for a, b in sorted(edges):
            arcs.append((a, b, prob))
            arcs.append((b, a, prob))
    elif kind == "dag-layered":
        layers = int(p["layers"])
        if layers < 1:
            raise ValueError("layers must be >= 1")
        layer_of = (np.arange(n) * layers) // n
        for u in range(n):
            for v in range(n):
                if layer_of[v] == layer_of[u] + 1 and rng.random() < p["p_edge"]:
                    arcs.append((u, v, prob))

    return DirectedGraph(n, arcs)
