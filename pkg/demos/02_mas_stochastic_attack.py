"""Break a substitution cipher with a pool of independent climbers.

Each worker owns a private copy of the ciphertext and its own random
stream, repeatedly proposes a random letter interchange, and commits it
only when the exact incremental score delta is positive. The best local
optimum across the pool wins.
"""

from pathlib import Path

import numpy as np

import cipherclimb as cc
from cipherclimb.rng import KEYGEN_STREAM

DATA = Path(__file__).resolve().parent.parent / "data"

table = cc.parse_bigram_file((DATA / "english_bigrams.txt").read_text())
plain = cc.map_text(cc.normalize((DATA / "sample_plain_mas.txt").read_text()))[:471]

key = cc.WorkerRng(2024, KEYGEN_STREAM).permutation(26)
cipher = cc.mas_encrypt(plain, key)
print("ciphertext:", cc.demap(cipher)[:64], "...")
print("true score:", cc.score_text(plain, table))

cfg = cc.MasSolverConfig(workers=32, climbings=10_000, restarts=5, global_seed=7)
best, runs = cc.solve_with_restarts(
    cipher, table, cfg, jobs=2,
    stop=lambda r: bool(np.array_equal(r.best_text, plain)),
)

for run in runs:
    print(f"restart {run.restart}: best score {run.score} in {run.elapsed:.1f}s")
print("\nworker scores (best restart):",
      sorted(best.per_worker_scores, reverse=True)[:6], "...")
print("recovered exactly:", bool(np.array_equal(best.best_text, plain)))
print("plaintext:", cc.demap(best.best_text)[:64], "...")
