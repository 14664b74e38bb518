"""Input validation helpers shared across the package."""

from __future__ import annotations

from collections.abc import Iterable
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .graph import DirectedGraph

MODELS = ("ic", "lt")

#: Incoming LT weights may exceed 1 by at most this much before we reject.
LT_WEIGHT_TOL = 1e-9


def check_model(model: str) -> str:
    m = str(model).lower()
    if m not in MODELS:
        raise ValueError(f"unknown propagation model {model!r}; expected one of {MODELS}")
    return m


def check_probability(p: float, name: str = "p") -> float:
    p = float(p)
    if not (0.0 <= p <= 1.0) or np.isnan(p):
        raise ValueError(f"{name} must lie in [0, 1], got {p}")
    return p


def check_horizon(horizon: int | None) -> int | None:
    """A time bound: None means unbounded, otherwise an integer >= 0."""
    if horizon is None:
        return None
    h = int(horizon)
    if h < 0:
        raise ValueError(f"horizon must be >= 0 or None, got {horizon}")
    return h


def check_seed(seed: int, name: str = "seed") -> int:
    s = int(seed)
    if s < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {seed}")
    return s


def check_n_sims(n_sims: int) -> int:
    n = int(n_sims)
    if n < 1:
        raise ValueError(f"n_sims must be >= 1, got {n_sims}")
    return n


def check_nodes(g: "DirectedGraph", nodes: Iterable[int], name: str = "seeds") -> np.ndarray:
    """Validate a node collection against a graph; returns sorted unique ids."""
    arr = np.asarray(list(nodes), dtype=np.int64)
    if arr.size == 0:
        return arr
    if arr.min() < 0 or arr.max() >= g.n:
        raise ValueError(f"{name} contain node ids outside [0, {g.n})")
    uniq = np.unique(arr)
    if uniq.size != arr.size:
        raise ValueError(f"{name} contain duplicate node ids")
    return uniq


def check_lt_weights(g: "DirectedGraph") -> None:
    """LT requires the incoming weights of every node to sum to at most 1."""
    sums = g.in_weight_sums
    bad = np.flatnonzero(sums > 1.0 + LT_WEIGHT_TOL)
    if bad.size:
        raise ValueError(
            f"LT precondition violated: incoming weights sum to {sums[bad[0]]:.6g} > 1 "
            f"for node {int(bad[0])}"
        )


def check_costs(costs: Iterable[float] | None, size: int) -> np.ndarray:
    """Per-element positive costs; None means unit costs."""
    if costs is None:
        return np.ones(size)
    arr = np.asarray(list(costs) if not isinstance(costs, np.ndarray) else costs, dtype=float)
    if arr.shape != (size,):
        raise ValueError(f"expected {size} costs, got shape {arr.shape}")
    if not np.all(arr > 0):
        raise ValueError("all costs must be > 0")
    return arr


def check_eta_eps(eta: float, eps: float, upper: float | None = None) -> tuple[float, float]:
    """Coverage threshold and shortfall for the set-cover style problems.

    Rejects eta <= 0 and eps >= eta, for which ln(eta/eps) is undefined or the
    bicriteria bound is vacuous.
    """
    eta, eps = float(eta), float(eps)
    if eta <= 0:
        raise ValueError(f"eta must be > 0, got {eta}")
    if eps <= 0:
        raise ValueError(f"eps must be > 0, got {eps}")
    if eps >= eta:
        raise ValueError(f"eps must be < eta, got eps={eps}, eta={eta}")
    if upper is not None and eta > upper:
        raise ValueError(f"eta={eta} exceeds the maximum possible coverage {upper}")
    return eta, eps
