"""Substitution and columnar transposition primitives.

All functions are pure: keys and texts come in as array-likes and new
arrays come out. Substitution keys are permutations of 0..25 read as
"plaintext letter i encrypts to key[i]". Transposition keys are
permutations of 0..k-1 read as "the j-th block of ciphertext is grid
column key[j]".

Columnar transposition writes the plaintext row-wise into k columns and
reads the columns out in key order. Grids are irregular by default: a
text of length n fills the first n mod k columns with ceil(n/k) symbols
and the rest with floor(n/k), no padding.
"""

from __future__ import annotations

import numpy as np

from .codec import ALPHABET_SIZE, MappedText


def _as_text(text) -> np.ndarray:
    return np.asarray(text, dtype=np.int64)


def as_substitution_key(key) -> np.ndarray:
    """Validate and return a 26-letter substitution key."""
    arr = np.asarray(key, dtype=np.int64)
    if arr.shape != (ALPHABET_SIZE,) or not np.array_equal(
        np.sort(arr), np.arange(ALPHABET_SIZE)
    ):
        raise ValueError("substitution key must be a permutation of 0..25")
    return arr


def as_transposition_key(key) -> np.ndarray:
    """Validate and return a column-order key (permutation of 0..k-1)."""
    arr = np.asarray(key, dtype=np.int64)
    if arr.ndim != 1 or arr.size < 1 or not np.array_equal(
        np.sort(arr), np.arange(arr.size)
    ):
        raise ValueError("transposition key must be a permutation of 0..k-1")
    return arr


def mas_encrypt(plain: MappedText, key) -> MappedText:
    """Apply the substitution letter-by-letter."""
    k = as_substitution_key(key)
    return k[_as_text(plain)]


def mas_decrypt(cipher: MappedText, key) -> MappedText:
    """Apply the inverse substitution."""
    k = as_substitution_key(key)
    inverse = np.empty_like(k)
    inverse[k] = np.arange(ALPHABET_SIZE)
    return inverse[_as_text(cipher)]


def apply_letter_swap(text: MappedText, a: int, b: int) -> MappedText:
    """Interchange every occurrence of letter a with letter b."""
    if a == b:
        raise ValueError("letters to swap must differ")
    if not (0 <= a < ALPHABET_SIZE and 0 <= b < ALPHABET_SIZE):
        raise ValueError(f"letter index out of range: ({a}, {b})")
    mapping = np.arange(ALPHABET_SIZE, dtype=np.int64)
    mapping[a], mapping[b] = b, a
    return mapping[_as_text(text)]


def transposition_gather_map(key, n: int) -> np.ndarray:
    """For each ciphertext position, the plaintext position it came from.

    With m = transposition_gather_map(key, n): encrypt is plain[m] and
    decrypt scatters the ciphertext back through m. Shared with the
    transposition solver, which rebuilds this map for every candidate key.
    """
    k = key.size
    base, rem = divmod(n, k)
    col_lengths = np.full(k, base, dtype=np.int64)
    col_lengths[:rem] += 1  # by grid-column index, not read-out order
    seg_lengths = col_lengths[key]
    col_of = np.repeat(key, seg_lengths)
    offsets = np.concatenate(([0], np.cumsum(seg_lengths)[:-1]))
    row_of = np.arange(n, dtype=np.int64) - np.repeat(offsets, seg_lengths)
    return col_of + k * row_of


def sct_encrypt(
    plain: MappedText, key, complete_grid: bool = False, pad_symbol: int = 23
) -> MappedText:
    """Write row-wise into k columns, read columns out in key order.

    complete_grid=True pads the plaintext with pad_symbol up to a full
    last row before encrypting (the default leaves the grid irregular).
    """
    k = as_transposition_key(key)
    text = _as_text(plain)
    if complete_grid and text.size % k.size:
        if not 0 <= pad_symbol < ALPHABET_SIZE:
            raise ValueError(f"pad symbol out of range: {pad_symbol}")
        fill = np.full(k.size - text.size % k.size, pad_symbol, dtype=np.int64)
        text = np.concatenate([text, fill])
    return text[transposition_gather_map(k, text.size)]


def sct_decrypt(cipher: MappedText, key) -> MappedText:
    """Exact inverse of sct_encrypt for the same key and length."""
    k = as_transposition_key(key)
    text = _as_text(cipher)
    plain = np.empty_like(text)
    plain[transposition_gather_map(k, text.size)] = text
    return plain


def swap_elements(key, i: int, j: int) -> np.ndarray:
    """Exchange the key elements at positions i and j."""
    arr = as_transposition_key(key)
    if i == j:
        raise ValueError("positions to swap must differ")
    if not (0 <= i < arr.size and 0 <= j < arr.size):
        raise ValueError(f"position out of range: ({i}, {j})")
    out = arr.copy()
    out[i], out[j] = out[j], out[i]
    return out


def swap_block(key, p: int, q: int, length: int) -> np.ndarray:
    """Exchange the equal-length blocks starting at p and q.

    Both blocks must lie inside the key and must not overlap.
    """
    arr = as_transposition_key(key)
    if length < 1:
        raise ValueError("block length must be at least 1")
    if p > q:
        p, q = q, p
    if p < 0 or q + length > arr.size:
        raise ValueError("block out of bounds")
    if q < p + length:
        raise ValueError("blocks overlap")
    out = arr.copy()
    out[p : p + length], out[q : q + length] = (
        arr[q : q + length],
        arr[p : p + length],
    )
    return out


def shift_block(key, p: int, length: int, offset: int) -> np.ndarray:
    """Slide the block [p, p+length) by offset positions.

    The elements the block passes over fill the vacated span in their
    original relative order, i.e. the affected window is rotated.
    """
    arr = as_transposition_key(key)
    if length < 1:
        raise ValueError("block length must be at least 1")
    if p < 0 or p + length > arr.size:
        raise ValueError("block out of bounds")
    dest = p + offset
    if dest < 0 or dest + length > arr.size:
        raise ValueError("shift destination out of bounds")
    out = arr.copy()
    if offset > 0:
        window = arr[p : p + length + offset]
        out[p : p + length + offset] = np.concatenate(
            [window[length:], window[:length]]
        )
    elif offset < 0:
        window = arr[dest : p + length]
        out[dest : p + length] = np.concatenate([window[-length:], window[:-length]])
    return out
