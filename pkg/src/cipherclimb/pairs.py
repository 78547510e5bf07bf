"""Bijection between a worker index and an unordered pair of distinct letters.

The 325 unordered pairs over a 26-letter alphabet are numbered in
lexicographic order: 0 -> (0,1), 1 -> (0,2), ..., 24 -> (0,25),
25 -> (1,2), ..., 324 -> (24,25). Each index identifies the candidate
swap one worker evaluates, and the winning index is mapped back to its
pair to reconstruct the winning candidate.
"""

from __future__ import annotations

import numpy as np

from .codec import ALPHABET_SIZE


def pair_count(alphabet_size: int) -> int:
    """Number of unordered pairs of distinct letters: n*(n-1)/2."""
    if alphabet_size < 2:
        raise ValueError("need at least 2 letters to form a pair")
    return alphabet_size * (alphabet_size - 1) // 2


PAIR_TOTAL = pair_count(ALPHABET_SIZE)  # 325

# Precomputed lexicographic enumeration; both solvers index these directly.
PAIR_LEFT = np.empty(PAIR_TOTAL, dtype=np.int64)
PAIR_RIGHT = np.empty(PAIR_TOTAL, dtype=np.int64)
_t = 0
for _i in range(ALPHABET_SIZE):
    for _j in range(_i + 1, ALPHABET_SIZE):
        PAIR_LEFT[_t] = _i
        PAIR_RIGHT[_t] = _j
        _t += 1
del _t, _i, _j


def index_to_pair(t: int) -> tuple[int, int]:
    """The t-th unordered pair (left < right) in lexicographic order."""
    if not 0 <= t < PAIR_TOTAL:
        raise ValueError(f"pair index out of range: {t}")
    return int(PAIR_LEFT[t]), int(PAIR_RIGHT[t])


def pair_to_index(left: int, right: int) -> int:
    """Inverse of index_to_pair, closed form; requires left < right."""
    if not (0 <= left < right < ALPHABET_SIZE):
        raise ValueError(f"not a canonical pair: ({left}, {right})")
    return left * (2 * ALPHABET_SIZE - left - 1) // 2 + (right - left - 1)
