"""Reproducible per-worker random streams.

Every worker owns a counter-based (Philox) generator keyed directly by
(global_seed, stream_index). The stream a worker sees is therefore a pure
function of those two integers -- no splitting of a shared generator, no
dependence on scheduling order -- which is what makes whole runs
replayable from the seed alone.

Restart r of worker w uses stream_index (r << 32) | w, so all restarts
draw from disjoint keys. The top 32-bit slot of restart 0 also hosts one
reserved stream for the deterministic solver's pair draws.
"""

from __future__ import annotations

import numpy as np
from numpy.random import Generator, Philox

_BUFFER = 4096

# Streams reserved for the deterministic solver's letter-pair draws and for
# test-case key generation; worker indices must stay below both.
PIVOT_STREAM = 2**32 - 1
KEYGEN_STREAM = 2**32 - 2


def worker_stream_index(restart: int, worker: int) -> int:
    """Disjoint stream index for (restart, worker)."""
    if restart < 0 or worker < 0:
        raise ValueError("restart and worker must be non-negative")
    if worker >= KEYGEN_STREAM:
        raise ValueError(f"worker index must be below {KEYGEN_STREAM}")
    return (restart << 32) | worker


def pivot_stream_index(restart: int) -> int:
    """Stream index of the deterministic solver's draw stream for a restart."""
    if restart < 0:
        raise ValueError("restart must be non-negative")
    return (restart << 32) | PIVOT_STREAM


def uniform_to_int(u: float, bound: int) -> int:
    """floor(u * bound): maps a uniform [0,1) draw onto 0..bound-1."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    return int(u * bound)


class WorkerRng:
    """One worker's private stream of uniform draws.

    Draws are buffered in blocks for speed; Philox produces the identical
    sequence whether values are generated one at a time or in blocks, so
    buffering does not change the stream.
    """

    def __init__(self, global_seed: int, worker_index: int):
        if worker_index < 0:
            raise ValueError("worker_index must be non-negative")
        self.global_seed = int(global_seed)
        self.worker_index = int(worker_index)
        key = [self.global_seed % 2**64, self.worker_index % 2**64]
        self._gen = Generator(Philox(key=key))
        self._buf = np.empty(0, dtype=np.float64)
        self._pos = 0

    def next_uniform(self) -> float:
        """Next uniform float in [0, 1)."""
        if self._pos >= self._buf.shape[0]:
            self._buf = self._gen.random(_BUFFER)
            self._pos = 0
        value = float(self._buf[self._pos])
        self._pos += 1
        return value

    def next_int_below(self, bound: int) -> int:
        """Uniform integer in [0, bound), via floor(u * bound)."""
        return uniform_to_int(self.next_uniform(), bound)

    def next_distinct_pair(self, bound: int) -> tuple[int, int]:
        """Two distinct uniform integers in [0, bound); second is redrawn on collision."""
        if bound < 2:
            raise ValueError("bound must be at least 2 for a distinct pair")
        a = self.next_int_below(bound)
        b = self.next_int_below(bound)
        while b == a:
            b = self.next_int_below(bound)
        return a, b

    def permutation(self, n: int) -> np.ndarray:
        """Uniform random permutation of 0..n-1 (Fisher-Yates on this stream)."""
        perm = np.arange(n, dtype=np.int64)
        for i in range(n - 1, 0, -1):
            j = self.next_int_below(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        return perm


def init_worker_state(global_seed: int, worker_index: int) -> WorkerRng:
    """Derive a worker's stream from the global seed and its index."""
    return WorkerRng(global_seed, worker_index)
