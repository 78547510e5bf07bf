"""Machinery shared by both solvers: result records, the lowest-index
max rule, the worker pool, and the restart wrapper.

Workers are fully independent -- each owns its random stream and its
working copy -- so results are identical whether they run sequentially
or on a process pool. The only synchronization point is collecting the
finished candidates, which always happens in worker-index order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np


def max_element(scores) -> tuple[int, float]:
    """Maximum value and the lowest index achieving it."""
    arr = np.asarray(scores)
    if arr.size == 0:
        raise ValueError("max_element needs a nonempty sequence")
    idx = int(np.argmax(arr))  # argmax returns the first maximum
    return idx, arr[idx].item()


@dataclass
class SolveResult:
    """Outcome of one solve (one restart)."""

    best_text: np.ndarray
    best_score: float
    per_worker_scores: list
    history: list  # (iteration, score) pairs for accepted improvements
    restart_index: int = 0
    elapsed: float = 0.0
    best_key: np.ndarray | None = None  # transposition solves only


@dataclass
class RestartSummary:
    restart: int
    score: float
    text: np.ndarray
    elapsed: float


def run_worker_pool(task, args_list, jobs: int = 1) -> list:
    """Run `task` over args_list; results come back in submission order.

    jobs=1 runs inline; jobs>1 uses a process pool. Because each task is
    a pure function of its arguments, both paths return identical results.
    """
    if jobs <= 1 or len(args_list) <= 1:
        return [task(args) for args in args_list]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(task, args_list, chunksize=max(1, len(args_list) // (4 * jobs))))


def run_restarts(
    solve_one, restarts: int, stop=None
) -> tuple[SolveResult, list[RestartSummary]]:
    """Run solve_one(restart) for each restart; keep the best result.

    Ties keep the earliest restart. `stop`, if given, is called with each
    finished SolveResult and may return True to cut the remaining
    restarts short (e.g. once a known plaintext has been recovered).
    """
    if restarts < 1:
        raise ValueError("need at least one restart")
    best: SolveResult | None = None
    summaries: list[RestartSummary] = []
    for restart in range(restarts):
        started = time.perf_counter()
        result = solve_one(restart)
        result.restart_index = restart
        result.elapsed = time.perf_counter() - started
        summaries.append(
            RestartSummary(restart, result.best_score, result.best_text, result.elapsed)
        )
        if best is None or result.best_score > best.best_score:
            best = result
        if stop is not None and stop(result):
            break
    return best, summaries
