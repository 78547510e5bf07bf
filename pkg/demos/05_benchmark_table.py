"""Solve-time table over growing key sizes, like the CLI benchmark.

Shows how the search space grows as log2(k!) while the per-restart work
stays fixed at workers x climbings full decrypt-and-score evaluations.
Equivalent CLI call:

    cipherclimb benchmark --plaintext data/sample_plain_sct.txt \
        --bigrams data/english_bigrams.txt --key-sizes 6,8,10 \
        --workers 32 --climbings 8000 --seed 3 --format csv
"""

import time
from pathlib import Path

import numpy as np

import cipherclimb as cc
from cipherclimb.cli import search_space_bits
from cipherclimb.rng import KEYGEN_STREAM

DATA = Path(__file__).resolve().parent.parent / "data"

table = cc.parse_bigram_file((DATA / "english_bigrams.txt").read_text())
logs = cc.build_log_table(table)
plain = cc.map_text(cc.normalize((DATA / "sample_plain_sct.txt").read_text()))

print(f"{'key':>4} {'bits':>5} {'wall_s':>7} {'recovered':>9}")
for key_size in (6, 8, 10):
    key = cc.WorkerRng(3 + key_size, KEYGEN_STREAM).permutation(key_size)
    cipher = cc.sct_encrypt(plain, key)
    cfg = cc.SctSolverConfig(
        key_length=key_size, workers=32, climbings=8000, global_seed=3
    )
    started = time.perf_counter()
    best, _ = cc.solve_sct(cipher, logs, cfg, jobs=2)
    wall = time.perf_counter() - started
    ok = bool(np.array_equal(best.best_text, plain))
    print(f"{key_size:>4} {search_space_bits(key_size):>5} {wall:>7.1f} {ok!s:>9}")
