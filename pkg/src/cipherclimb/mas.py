"""Hill-climbing attacks on monoalphabetic substitution ciphertexts.

Two variants are implemented:

* a deterministic best-neighbor climb: each outer iteration draws one
  pivot pair of letters occurring in the current text, then 325 logical
  workers -- one per unordered letter pair -- each score the text with
  the pivot letters interchanged against their own pair, and the single
  best candidate is accepted if it strictly improves the score;

* a stochastic better-neighbor climb: many independent workers each
  start from the ciphertext and repeatedly try a random letter
  interchange, committing it whenever the exact score change (computed
  incrementally from the text's bigram-count matrix) is positive.

Scores are plain integers throughout, so an incremental delta and a full
rescore can be compared for exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codec import ALPHABET_SIZE, MappedText
from .ngrams import BigramTable, score_text
from .pairs import PAIR_LEFT, PAIR_RIGHT, PAIR_TOTAL, index_to_pair
from .rng import WorkerRng, pivot_stream_index, worker_stream_index
from .search import (
    RestartSummary,
    SolveResult,
    max_element,
    run_restarts,
    run_worker_pool,
)


@dataclass
class MasSolverConfig:
    """Parameters for the substitution solver.

    mode selects the variant; deterministic mode always uses the full
    complement of 325 pair-workers per step. climbings is the per-worker
    try budget in stochastic mode, iterations the outer-loop budget in
    deterministic mode.
    """

    mode: str = "stochastic"
    workers: int = 64
    iterations: int = 500
    climbings: int = 10_000
    restarts: int = 1
    global_seed: int = 0

    def __post_init__(self):
        if self.mode not in ("deterministic", "stochastic"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "deterministic" and self.workers != PAIR_TOTAL:
            raise ValueError(
                f"deterministic mode requires workers={PAIR_TOTAL} (one per letter pair)"
            )
        for name in ("workers", "iterations", "climbings", "restarts"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")


def _check_cipher(cipher: np.ndarray) -> np.ndarray:
    text = np.asarray(cipher, dtype=np.int64)
    if text.size < 2 or np.unique(text).size < 2:
        raise ValueError("ciphertext must contain at least two distinct letters")
    return text


def _interchange_maps(pivot_left, pivot_right, other_left, other_right):
    """Letter maps applying pivot_left<->other_left then pivot_right<->other_right."""
    first = np.arange(ALPHABET_SIZE, dtype=np.int64)
    first[pivot_left], first[other_left] = other_left, pivot_left
    second = np.arange(ALPHABET_SIZE, dtype=np.int64)
    second[pivot_right], second[other_right] = other_right, pivot_right
    return second[first]


def deterministic_step(
    current: MappedText, pivot: tuple[int, int], table: BigramTable
) -> tuple[np.ndarray, int, int]:
    """Evaluate all 325 pair-workers for one pivot; return the best.

    Worker t interchanges pivot[0] with the pair's left letter and
    pivot[1] with its right letter. Workers whose pair collides with the
    pivot crosswise (pivot[0] equal to the right letter, or pivot[1]
    equal to the left one) would be order-dependent, so they score 0.
    Ties resolve to the lowest worker index.
    """
    text = np.asarray(current, dtype=np.int64)
    pl, pr = int(pivot[0]), int(pivot[1])
    if pl == pr:
        raise ValueError("pivot letters must differ")
    present = np.zeros(ALPHABET_SIZE, dtype=bool)
    present[text] = True
    if not (present[pl] and present[pr]):
        raise ValueError("both pivot letters must occur in the text")

    workers = np.arange(PAIR_TOTAL)
    identity = np.tile(np.arange(ALPHABET_SIZE, dtype=np.int64), (PAIR_TOTAL, 1))
    first = identity.copy()
    first[workers, pl] = PAIR_LEFT
    first[workers, PAIR_LEFT] = pl
    second = identity.copy()
    second[workers, pr] = PAIR_RIGHT
    second[workers, PAIR_RIGHT] = pr
    mapping = second[workers[:, None], first]

    candidates = mapping[:, text]
    idx = ALPHABET_SIZE * candidates[:, :-1] + candidates[:, 1:]
    scores = table.scores[idx].sum(axis=1)
    scores[(PAIR_RIGHT == pl) | (PAIR_LEFT == pr)] = 0

    best_index, best_score = max_element(scores)
    return candidates[best_index].copy(), int(best_score), best_index


def climb(current: MappedText, best_index: int, pivot: tuple[int, int]) -> np.ndarray:
    """Reconstruct the winning worker's candidate from its index alone."""
    other_left, other_right = index_to_pair(best_index)
    pl, pr = int(pivot[0]), int(pivot[1])
    if pl == other_right or pr == other_left:
        raise ValueError(f"worker {best_index} is excluded for pivot ({pl}, {pr})")
    mapping = _interchange_maps(pl, pr, other_left, other_right)
    return mapping[np.asarray(current, dtype=np.int64)]


def _draw_present_letter(rng: WorkerRng, present: np.ndarray, exclude: int = -1) -> int:
    letter = rng.next_int_below(ALPHABET_SIZE)
    while not present[letter] or letter == exclude:
        letter = rng.next_int_below(ALPHABET_SIZE)
    return letter


def solve_deterministic(
    cipher: MappedText, table: BigramTable, cfg: MasSolverConfig, restart: int = 0
) -> SolveResult:
    """Run the best-neighbor climb for cfg.iterations outer iterations.

    Each iteration draws a fresh pivot pair from the letters present in
    the current text, evaluates all 325 workers, and accepts the winner
    only on strict improvement. With a fixed seed the whole trajectory
    is reproducible, including the history of accepted scores.
    """
    text = _check_cipher(cipher).copy()
    rng = WorkerRng(cfg.global_seed, pivot_stream_index(restart))
    score = score_text(text, table)
    history: list[tuple[int, int]] = []
    for iteration in range(1, cfg.iterations + 1):
        present = np.zeros(ALPHABET_SIZE, dtype=bool)
        present[text] = True
        pl = _draw_present_letter(rng, present)
        pr = _draw_present_letter(rng, present, exclude=pl)
        _, cand_score, cand_index = deterministic_step(text, (pl, pr), table)
        if cand_score > score:
            text = climb(text, cand_index, (pl, pr))
            score = cand_score
            history.append((iteration, score))
    return SolveResult(
        best_text=text,
        best_score=score,
        per_worker_scores=[],
        history=history,
    )


def bigram_count_matrix(text: MappedText) -> np.ndarray:
    """26x26 matrix of adjacent-pair counts of the text."""
    t = np.asarray(text, dtype=np.int64)
    counts = np.zeros((ALPHABET_SIZE, ALPHABET_SIZE), dtype=np.int64)
    if t.size >= 2:
        np.add.at(counts, (t[:-1], t[1:]), 1)
    return counts


def swap_delta(counts: np.ndarray, a: int, b: int, score_matrix: np.ndarray) -> int:
    """Exact score change of interchanging letters a and b.

    counts is the bigram-count matrix of the current text and
    score_matrix the 26x26 score table. Only bigrams touching a or b
    contribute, so this is O(alphabet) instead of O(text).
    """
    row_a = score_matrix[b].copy()
    row_a[a], row_a[b] = row_a[b], row_a[a]  # new scores for old row a
    row_b = score_matrix[a].copy()
    row_b[a], row_b[b] = row_b[b], row_b[a]
    col_a = score_matrix[:, b].copy()
    col_a[a], col_a[b] = col_a[b], col_a[a]
    col_b = score_matrix[:, a].copy()
    col_b[a], col_b[b] = col_b[b], col_b[a]
    delta = (
        counts[a] @ (row_a - score_matrix[a])
        + counts[b] @ (row_b - score_matrix[b])
        + counts[:, a] @ (col_a - score_matrix[:, a])
        + counts[:, b] @ (col_b - score_matrix[:, b])
    )
    # the 2x2 corner {a,b} x {a,b} was summed by both the row and column
    # passes; remove one copy
    corner = (
        counts[a, a] * (score_matrix[b, b] - score_matrix[a, a])
        + counts[a, b] * (score_matrix[b, a] - score_matrix[a, b])
        + counts[b, a] * (score_matrix[a, b] - score_matrix[b, a])
        + counts[b, b] * (score_matrix[a, a] - score_matrix[b, b])
    )
    return int(delta - corner)


def text_swap_delta(text: MappedText, a: int, b: int, table: BigramTable) -> int:
    """swap_delta evaluated directly on a text (convenience wrapper)."""
    return swap_delta(bigram_count_matrix(text), a, b, table.matrix)


def stochastic_worker(
    cipher: MappedText, table: BigramTable, climbings: int, state: WorkerRng
) -> tuple[np.ndarray, int]:
    """One worker's better-neighbor climb over its private text copy.

    Per try: draw a random distinct letter pair, compute the exact score
    delta of interchanging them, and commit the interchange only if the
    delta is positive. Tries whose letters are absent simply burn one
    unit of the climbing budget (their delta is 0).
    """
    text = np.asarray(cipher, dtype=np.int64)
    score_matrix = table.matrix
    counts = bigram_count_matrix(text)
    mapping = np.arange(ALPHABET_SIZE, dtype=np.int64)
    score = int((counts * score_matrix).sum())
    swap = np.arange(ALPHABET_SIZE, dtype=np.int64)
    for _ in range(climbings):
        a, b = state.next_distinct_pair(ALPHABET_SIZE)
        delta = swap_delta(counts, a, b, score_matrix)
        if delta > 0:
            score += delta
            counts[[a, b]] = counts[[b, a]]
            counts[:, [a, b]] = counts[:, [b, a]]
            swap[a], swap[b] = b, a
            mapping = swap[mapping]
            swap[a], swap[b] = a, b
    return mapping[text], score


def _stochastic_task(args) -> tuple[np.ndarray, int]:
    cipher, scores, climbings, seed, stream = args
    state = WorkerRng(seed, stream)
    return stochastic_worker(cipher, BigramTable(scores), climbings, state)


def solve_stochastic(
    cipher: MappedText,
    table: BigramTable,
    cfg: MasSolverConfig,
    jobs: int = 1,
    restart: int = 0,
) -> SolveResult:
    """Run cfg.workers independent climbs and keep the best local optimum.

    Worker i draws from the stream keyed by (global_seed, restart, i), so
    the outcome does not depend on execution order or on `jobs`.
    """
    text = _check_cipher(cipher)
    tasks = [
        (text, table.scores, cfg.climbings, cfg.global_seed, worker_stream_index(restart, w))
        for w in range(cfg.workers)
    ]
    outcomes = run_worker_pool(_stochastic_task, tasks, jobs=jobs)
    per_worker = [score for _, score in outcomes]
    best_index, best_score = max_element(per_worker)
    return SolveResult(
        best_text=outcomes[best_index][0],
        best_score=int(best_score),
        per_worker_scores=per_worker,
        history=[],
    )


def solve_with_restarts(
    cipher: MappedText,
    table: BigramTable,
    cfg: MasSolverConfig,
    jobs: int = 1,
    stop=None,
) -> tuple[SolveResult, list[RestartSummary]]:
    """Independent solves for cfg.restarts restarts; best result wins.

    Restart r derives every stream from (global_seed, r, worker), so each
    restart explores a fresh region while the whole set stays replayable.
    """
    if cfg.mode == "deterministic":
        def solve_one(restart):
            return solve_deterministic(cipher, table, cfg, restart=restart)
    else:
        def solve_one(restart):
            return solve_stochastic(cipher, table, cfg, jobs=jobs, restart=restart)
    return run_restarts(solve_one, cfg.restarts, stop=stop)
