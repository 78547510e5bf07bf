"""Bigram score tables and text fitness.

Two scoring modes are supported:

* additive integer scores (raw counts or any non-negative magnitudes),
  summed over adjacent letter pairs -- exact integer arithmetic;
* log2-probability scores derived from a count table, where scoring a
  text adds the log-probabilities of its bigrams instead of multiplying
  the probabilities themselves.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .codec import ALPHABET_SIZE, MappedText, normalize, map_text

TABLE_SIZE = ALPHABET_SIZE * ALPHABET_SIZE  # 676
DEFAULT_LOG_FLOOR = -24.0


def bigram_index(first: int, second: int) -> int:
    """Flat table index of the bigram (first, second): 26*first + second."""
    if not (0 <= first < ALPHABET_SIZE and 0 <= second < ALPHABET_SIZE):
        raise ValueError(f"letter indices out of range: ({first}, {second})")
    return ALPHABET_SIZE * first + second


@dataclass(frozen=True)
class BigramTable:
    """676 non-negative integer scores, indexed by 26*first + second."""

    scores: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.scores, dtype=np.int64)
        if arr.shape != (TABLE_SIZE,):
            raise ValueError(f"expected {TABLE_SIZE} entries, got {arr.shape}")
        if arr.size and arr.min() < 0:
            raise ValueError("bigram scores must be non-negative")
        object.__setattr__(self, "scores", arr)

    @property
    def matrix(self) -> np.ndarray:
        """The same scores as a 26x26 view (first letter is the row)."""
        return self.scores.reshape(ALPHABET_SIZE, ALPHABET_SIZE)


@dataclass(frozen=True)
class LogBigramTable:
    """676 log2 bigram probabilities; zero-count bigrams sit at `floor`."""

    logs: np.ndarray
    floor: float

    def __post_init__(self):
        arr = np.ascontiguousarray(self.logs, dtype=np.float64)
        if arr.shape != (TABLE_SIZE,):
            raise ValueError(f"expected {TABLE_SIZE} entries, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("log scores must be finite")
        if arr.size and arr.max() > 0:
            raise ValueError("log2 probabilities cannot be positive")
        if arr.size and arr.min() < self.floor:
            raise ValueError("log table entries below the configured floor")
        object.__setattr__(self, "logs", arr)

    @property
    def matrix(self) -> np.ndarray:
        return self.logs.reshape(ALPHABET_SIZE, ALPHABET_SIZE)


def parse_bigram_file(lines) -> BigramTable:
    """Parse a bigram score file: one `<bigram> <integer>` record per line.

    Bigrams must be two lowercase letters. Missing bigrams default to 0;
    duplicated bigrams keep the last value (a warning is emitted). Blank
    lines are ignored.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    scores = np.zeros(TABLE_SIZE, dtype=np.int64)
    seen = np.zeros(TABLE_SIZE, dtype=bool)
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected '<bigram> <score>', got {line!r}")
        bigram, score_text_ = parts
        if len(bigram) != 2 or not all("a" <= c <= "z" for c in bigram):
            raise ValueError(f"line {lineno}: bad bigram {bigram!r}")
        try:
            value = int(score_text_)
        except ValueError:
            raise ValueError(f"line {lineno}: bad score {score_text_!r}") from None
        if value < 0:
            raise ValueError(f"line {lineno}: negative score {value}")
        idx = bigram_index(ord(bigram[0]) - ord("a"), ord(bigram[1]) - ord("a"))
        if seen[idx]:
            warnings.warn(f"duplicate bigram {bigram!r}; keeping the later value")
        seen[idx] = True
        scores[idx] = value
    return BigramTable(scores)


def format_bigram_file(table: BigramTable) -> str:
    """Serialize a table to the line format parse_bigram_file reads.

    All 676 bigrams are written in lexicographic order, one per line.
    """
    out = []
    for first in range(ALPHABET_SIZE):
        for second in range(ALPHABET_SIZE):
            bigram = chr(ord("a") + first) + chr(ord("a") + second)
            out.append(f"{bigram} {table.scores[bigram_index(first, second)]}")
    return "\n".join(out) + "\n"


def build_table_from_corpus(corpus: str) -> BigramTable:
    """Count adjacent letter pairs of the normalized corpus."""
    symbols = map_text(normalize(corpus))
    scores = np.zeros(TABLE_SIZE, dtype=np.int64)
    if symbols.size >= 2:
        idx = ALPHABET_SIZE * symbols[:-1] + symbols[1:]
        scores = np.bincount(idx, minlength=TABLE_SIZE).astype(np.int64)
    return BigramTable(scores)


def score_text(text: MappedText, table: BigramTable) -> int:
    """Sum of table scores over the text's adjacent letter pairs."""
    t = np.asarray(text, dtype=np.int64)
    if t.size < 2:
        return 0
    idx = ALPHABET_SIZE * t[:-1] + t[1:]
    return int(table.scores[idx].sum())


def build_log_table(table: BigramTable, floor: float = DEFAULT_LOG_FLOOR) -> LogBigramTable:
    """log2(count/total) per bigram; zero-count bigrams get `floor`.

    The floor must sit below the rarest observed bigram's log-probability,
    otherwise the table would rank an unseen bigram above a seen one.
    """
    if floor >= 0:
        raise ValueError("floor must be negative")
    total = int(table.scores.sum())
    if total == 0:
        raise ValueError("cannot build probabilities from an all-zero table")
    logs = np.full(TABLE_SIZE, floor, dtype=np.float64)
    nonzero = table.scores > 0
    logs[nonzero] = np.log2(table.scores[nonzero] / total)
    if logs[nonzero].size and logs[nonzero].min() < floor:
        worst = float(logs[nonzero].min())
        raise ValueError(
            f"floor {floor} is above the rarest observed bigram ({worst:.3f}); "
            "pass a lower floor"
        )
    return LogBigramTable(logs, floor)


def log_score_text(text: MappedText, table: LogBigramTable) -> float:
    """Sum of log2 bigram probabilities over adjacent pairs (<= 0)."""
    t = np.asarray(text, dtype=np.int64)
    if t.size < 2:
        return 0.0
    idx = ALPHABET_SIZE * t[:-1] + t[1:]
    return float(table.logs[idx].sum())
