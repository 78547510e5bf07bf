"""Hill-climbing attack on single columnar transposition ciphertexts.

Independent workers each start from a uniformly random key and climb by
mutating a copy of the current key with one of three neighborhood moves:

* element swap -- up to op1_hop random position swaps;
* block swap   -- up to op2_hop swaps of equal-length non-overlapping blocks;
* block shift  -- slide one block left or right.

Which move runs is drawn per try from a percent threshold pair (p1, p2):
below p1 the element swap, between p1 and p2 the block swap, otherwise
the shift. Candidates are scored by decrypting the full ciphertext and
summing log2 bigram probabilities; a candidate is committed only if it
strictly improves on the current key.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .codec import ALPHABET_SIZE, MappedText
from .ciphers import sct_decrypt, transposition_gather_map
from .ngrams import LogBigramTable
from .rng import WorkerRng, worker_stream_index
from .search import (
    RestartSummary,
    SolveResult,
    max_element,
    run_restarts,
    run_worker_pool,
)


class Operator(enum.Enum):
    ELEMENT_SWAP = 1
    BLOCK_SWAP = 2
    BLOCK_SHIFT = 3


@dataclass
class SctSolverConfig:
    """Parameters for the transposition solver."""

    key_length: int
    workers: int = 64
    climbings: int = 15_000
    p1: int = 33
    p2: int = 66
    op1_hop: int = 3
    op2_hop: int = 3
    restarts: int = 1
    global_seed: int = 0

    def __post_init__(self):
        if self.key_length < 2:
            raise ValueError("key_length must be at least 2")
        if not 0 <= self.p1 <= self.p2 <= 100:
            raise ValueError("thresholds must satisfy 0 <= p1 <= p2 <= 100")
        if self.climbings < 0:
            raise ValueError("climbings must be non-negative")
        for name in ("workers", "op1_hop", "op2_hop", "restarts"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")


def select_operator(u_percent: int, p1: int, p2: int) -> Operator:
    """Map a percent draw onto an operator: [0,p1) I, [p1,p2) II, [p2,100) III."""
    if not 0 <= p1 <= p2 <= 100:
        raise ValueError("thresholds must satisfy 0 <= p1 <= p2 <= 100")
    if not 0 <= u_percent < 100:
        raise ValueError("u_percent must lie in [0, 100)")
    if u_percent < p1:
        return Operator.ELEMENT_SWAP
    if u_percent < p2:
        return Operator.BLOCK_SWAP
    return Operator.BLOCK_SHIFT


def apply_element_swaps(key: np.ndarray, state: WorkerRng, max_hops: int) -> np.ndarray:
    """1..max_hops random element swaps (hop count drawn uniformly)."""
    out = key.copy()
    hops = 1 + state.next_int_below(max_hops)
    for _ in range(hops):
        i, j = state.next_distinct_pair(out.size)
        out[i], out[j] = out[j], out[i]
    return out


def apply_block_swaps(key: np.ndarray, state: WorkerRng, max_hops: int) -> np.ndarray:
    """1..max_hops swaps of equal-length non-overlapping blocks.

    Each swap draws a block length uniformly from 1..k//2 and then a
    start pair uniformly among the non-overlapping placements (rejection
    over distinct start pairs).
    """
    out = key.copy()
    k = out.size
    hops = 1 + state.next_int_below(max_hops)
    for _ in range(hops):
        length = 1 + state.next_int_below(k // 2)
        p, q = state.next_distinct_pair(k - length + 1)
        while abs(p - q) < length:
            p, q = state.next_distinct_pair(k - length + 1)
        if p > q:
            p, q = q, p
        tmp = out[p : p + length].copy()
        out[p : p + length] = out[q : q + length]
        out[q : q + length] = tmp
    return out


def apply_block_shift(key: np.ndarray, state: WorkerRng) -> np.ndarray:
    """Slide one random block to a different in-bounds position.

    Length, start, and destination are each drawn uniformly over their
    feasible values; the zero shift is excluded by redrawing.
    """
    out = key.copy()
    k = out.size
    length = 1 + state.next_int_below(k - 1)
    starts = k - length + 1
    p = state.next_int_below(starts)
    dest = state.next_int_below(starts)
    while dest == p:
        dest = state.next_int_below(starts)
    lo, hi = min(p, dest), max(p, dest) + length
    window = out[lo:hi].copy()
    if dest > p:
        out[lo:hi] = np.concatenate([window[length:], window[:length]])
    else:
        out[lo:hi] = np.concatenate([window[-length:], window[:-length]])
    return out


def _apply_operator(
    op: Operator, key: np.ndarray, state: WorkerRng, cfg: SctSolverConfig
) -> np.ndarray:
    if op is Operator.ELEMENT_SWAP:
        return apply_element_swaps(key, state, cfg.op1_hop)
    if op is Operator.BLOCK_SWAP:
        return apply_block_swaps(key, state, cfg.op2_hop)
    return apply_block_shift(key, state)


def sct_worker(
    cipher: MappedText, logs: LogBigramTable, cfg: SctSolverConfig, state: WorkerRng
) -> tuple[np.ndarray, float]:
    """One worker's climb from a random key; returns (best_key, score)."""
    text = np.asarray(cipher, dtype=np.int64)
    if text.size < cfg.key_length:
        raise ValueError("ciphertext shorter than the key")
    log_matrix = logs.logs
    plain = np.empty_like(text)

    def candidate_score(key: np.ndarray) -> float:
        plain[transposition_gather_map(key, text.size)] = text
        return float(log_matrix[ALPHABET_SIZE * plain[:-1] + plain[1:]].sum())

    key = state.permutation(cfg.key_length)
    score = candidate_score(key)
    for _ in range(cfg.climbings):
        op = select_operator(state.next_int_below(100), cfg.p1, cfg.p2)
        candidate = _apply_operator(op, key, state, cfg)
        cand_score = candidate_score(candidate)
        if cand_score > score:
            key, score = candidate, cand_score
    return key, score


def _sct_task(args) -> tuple[np.ndarray, float]:
    cipher, logs, floor, cfg, seed, stream = args
    state = WorkerRng(seed, stream)
    return sct_worker(cipher, LogBigramTable(logs, floor), cfg, state)


def solve_sct(
    cipher: MappedText,
    logs: LogBigramTable,
    cfg: SctSolverConfig,
    jobs: int = 1,
    stop=None,
) -> tuple[SolveResult, list[RestartSummary]]:
    """Worker-pool solve with restarts; same collection rules as the
    substitution solver (lowest worker index wins ties, restart r keys
    every stream by (global_seed, r, worker))."""
    text = np.asarray(cipher, dtype=np.int64)
    if text.size < cfg.key_length:
        raise ValueError("ciphertext shorter than the key")

    def solve_one(restart: int) -> SolveResult:
        tasks = [
            (text, logs.logs, logs.floor, cfg, cfg.global_seed, worker_stream_index(restart, w))
            for w in range(cfg.workers)
        ]
        outcomes = run_worker_pool(_sct_task, tasks, jobs=jobs)
        per_worker = [score for _, score in outcomes]
        best_index, best_score = max_element(per_worker)
        best_key = outcomes[best_index][0]
        return SolveResult(
            best_text=sct_decrypt(text, best_key),
            best_score=float(best_score),
            per_worker_scores=per_worker,
            history=[],
            best_key=best_key,
        )

    return run_restarts(solve_one, cfg.restarts, stop=stop)
