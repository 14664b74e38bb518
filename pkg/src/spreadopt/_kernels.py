"""Numba cascade kernels.

Both kernels consume pre-drawn uniforms and must stay draw-for-draw identical
to the pure-Python reference in simulate.py: IC consumes one uniform per
influence attempt, iterating frontier sources in ascending id order and each
source's out-arcs in CSR (target-ascending) order; LT consumes only the n
thresholds drawn by the caller.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def ic_kernel(indptr, targets, probs, seeds, horizon, draws, act):
    """Returns the number of uniforms consumed, or -1 if `draws` ran out
    (the caller restarts the whole cascade with a longer prefix of the same
    stream, so chunked draw generation cannot change the outcome)."""
    n = act.size
    for i in range(seeds.size):
        act[seeds[i]] = 0
    frontier = seeds.copy()
    step = 0
    k = 0
    while frontier.size > 0 and (horizon < 0 or step < horizon):
        new = np.empty(n, dtype=np.int64)
        cnt = 0
        for fi in range(frontier.size):
            u = frontier[fi]
            for j in range(indptr[u], indptr[u + 1]):
                t = targets[j]
                a = act[t]
                # one shot per arc at any target inactive when the step began
                if a == -1 or a == step + 1:
                    if k >= draws.size:
                        return -1
                    d = draws[k]
                    k += 1
                    if a == -1 and d < probs[j]:
                        act[t] = step + 1
                        new[cnt] = t
                        cnt += 1
        frontier = np.sort(new[:cnt])
        step += 1
    return k


@njit(cache=True)
def lt_kernel(indptr, targets, probs, seeds, horizon, theta, act):
    n = act.size
    cum = np.zeros(n)
    for i in range(seeds.size):
        act[seeds[i]] = 0
    frontier = seeds.copy()
    step = 0
    while frontier.size > 0 and (horizon < 0 or step < horizon):
        for fi in range(frontier.size):
            u = frontier[fi]
            for j in range(indptr[u], indptr[u + 1]):
                cum[targets[j]] += probs[j]
        new = np.empty(n, dtype=np.int64)
        cnt = 0
        for fi in range(frontier.size):
            u = frontier[fi]
            for j in range(indptr[u], indptr[u + 1]):
                t = targets[j]
                if act[t] == -1 and cum[t] >= theta[t]:
                    act[t] = step + 1
                    new[cnt] = t
                    cnt += 1
        frontier = np.sort(new[:cnt])
        step += 1
    return act
