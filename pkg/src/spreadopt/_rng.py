"""Deterministic random-stream derivation.

Every stochastic component draws from a stream keyed by an explicit tuple of
non-negative integers.  Streams for different keys are statistically
independent, and deriving a stream is a pure function of its key, so results
never depend on evaluation order or worker count.

Simulation batches use counter-based Philox: simulation i of a batch owns
the counter block i << 128 of one keyed Philox, which makes per-simulation
streams a pure (master_seed, sim_index) mix and cheap to hop between.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np
from numpy.random import PCG64, Generator, Philox, SeedSequence

_U128 = (1 << 128) - 1


def derive_key(*parts: int) -> int:
    """Mix integer components into a single 128-bit stream key."""
    ss = SeedSequence([int(p) for p in parts])
    return int.from_bytes(ss.generate_state(4).tobytes(), "little")


def stream(*parts: int) -> Generator:
    """Fresh PCG64 generator keyed by the given components."""
    return Generator(PCG64(SeedSequence([int(p) for p in parts])))


def set_key(master_seed: int, nodes: Iterable[int]) -> int:
    """Stream key for one evaluation of a node set.

    Keyed by the sorted member list, so the same set always lands on the same
    key no matter who asks, while any two distinct sets get independent keys.
    """
    return derive_key(int(master_seed), *sorted(int(v) for v in nodes))


class SimStreams:
    """Per-simulation generators: counter block ``index << 128`` of a keyed Philox.

    ``at(index)`` repositions a shared Philox and returns the wrapping
    Generator, so hopping between simulations costs a state reset instead of
    a bit-generator construction.  Instances are not thread-safe; give each
    worker its own.
    """

    def __init__(self, master_seed: int):
        self._bg = Philox(key=derive_key(int(master_seed)) & _U128)
        self.generator = Generator(self._bg)
        tmpl = self._bg.state
        self._key = tmpl["state"]["key"]
        self._buffer = tmpl["buffer"]

    def at(self, index: int) -> Generator:
        counter = np.zeros(4, dtype=np.uint64)
        counter[2] = index
        self._bg.state = {
            "bit_generator": "Philox",
            "state": {"counter": counter, "key": self._key},
            "buffer": self._buffer,
            "buffer_pos": 4,
            "has_uint32": 0,
            "uinteger": 0,
        }
        return self.generator
