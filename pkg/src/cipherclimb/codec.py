"""Text normalization and letter/index conversion for the 26-letter alphabet."""

from __future__ import annotations

import numpy as np

ALPHABET = "abcdefghijklmnopqrstuvwxyz"
ALPHABET_SIZE = 26

# A text mapped to letter indices is a 1-d int64 array with values in 0..25.
MappedText = np.ndarray


def normalize(raw: str) -> str:
    """Lowercase ASCII letters, drop everything else (order preserved)."""
    return "".join(
        ch.lower() for ch in raw if "a" <= ch <= "z" or "A" <= ch <= "Z"
    )


def map_text(text: str) -> MappedText:
    """Convert a normalized string to letter indices (a=0 .. z=25).

    Strict on purpose: anything outside a-z means the caller skipped
    normalize(), so we raise instead of guessing.
    """
    data = np.frombuffer(text.encode("ascii", errors="strict"), dtype=np.uint8)
    symbols = data.astype(np.int64) - ord("a")
    if symbols.size and (symbols.min() < 0 or symbols.max() >= ALPHABET_SIZE):
        bad = text[int(np.argmax((symbols < 0) | (symbols >= ALPHABET_SIZE)))]
        raise ValueError(f"map_text expects lowercase a-z only, got {bad!r}")
    return symbols


def demap(symbols: MappedText) -> str:
    """Inverse of map_text: letter indices back to a lowercase string."""
    arr = np.asarray(symbols, dtype=np.int64)
    if arr.size == 0:
        return ""
    return (arr.astype(np.uint8) + ord("a")).tobytes().decode("ascii")
