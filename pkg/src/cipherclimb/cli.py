"""Command-line front end: corpus building, test-case encryption, solving,
and benchmarking.

Every solve emits a run report. The text format is a human-readable
narrative; the json format is a machine-readable record that echoes every
resolved parameter, so a run can be reproduced from its report alone.
Timing lives in a separate top-level block of the json report and is the
only part of it that varies between identical runs.

Exit codes: 0 completed, 1 usage or value error, 2 I/O error. Failing to
crack a ciphertext is not an error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time

import numpy as np

from .codec import ALPHABET, ALPHABET_SIZE, demap, map_text, normalize
from .ciphers import (
    as_substitution_key,
    as_transposition_key,
    mas_encrypt,
    sct_encrypt,
)
from .mas import MasSolverConfig, solve_with_restarts
from .ngrams import (
    DEFAULT_LOG_FLOOR,
    build_log_table,
    build_table_from_corpus,
    format_bigram_file,
    parse_bigram_file,
)
from .rng import KEYGEN_STREAM, WorkerRng
from .sct import SctSolverConfig, solve_sct

DEFAULTS = {
    "workers": 64,
    "climbings": None,  # 10000 for mas, 15000 for sct
    "iterations": 500,
    "restarts": 1,
    "seed": None,  # wall clock when absent
    "key_length": None,
    "p1": 33,
    "p2": 66,
    "op1_hop": 3,
    "op2_hop": 3,
    "log_floor": DEFAULT_LOG_FLOOR,
    "jobs": 1,
    "format": "text",
}


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1 (argparse's default of 2 is reserved for I/O here)
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cipherclimb")
    sub = parser.add_subparsers(dest="command", required=True)

    p_corpus = sub.add_parser("corpus-build", help="count bigrams of a text corpus")
    p_corpus.add_argument("input", help="corpus text file")
    p_corpus.add_argument("output", help="bigram score file to write")

    p_enc = sub.add_parser("encrypt", help="encrypt a plaintext for test cases")
    p_enc.add_argument("cipher", choices=["mas", "sct"])
    p_enc.add_argument("plaintext", help="plaintext file")
    p_enc.add_argument("--key", help="mas: 26-letter permutation; sct: comma-separated column order")
    p_enc.add_argument("--random-key", action="store_true", help="sct: generate the key from --seed")
    p_enc.add_argument("--key-length", type=int)
    p_enc.add_argument("--seed", type=int)

    p_solve = sub.add_parser("solve", help="recover a plaintext from a ciphertext")
    p_solve.add_argument("ciphertext", help="ciphertext file")
    p_solve.add_argument("--mode", choices=["mas-det", "mas", "sct"], required=True)
    p_solve.add_argument("--bigrams", help="bigram score file")
    p_solve.add_argument("--config", help="JSON file with defaults for the flags below")
    p_solve.add_argument("--workers", type=int)
    p_solve.add_argument("--climbings", type=int)
    p_solve.add_argument("--iterations", type=int)
    p_solve.add_argument("--restarts", type=int)
    p_solve.add_argument("--seed", type=int)
    p_solve.add_argument("--key-length", type=int)
    p_solve.add_argument("--p1", type=int)
    p_solve.add_argument("--p2", type=int)
    p_solve.add_argument("--op1-hop", type=int)
    p_solve.add_argument("--op2-hop", type=int)
    p_solve.add_argument("--log-floor", type=float)
    p_solve.add_argument("--jobs", type=int)
    p_solve.add_argument("--format", choices=["text", "json"])

    p_bench = sub.add_parser("benchmark", help="transposition solve times over key sizes")
    p_bench.add_argument("--plaintext", required=True)
    p_bench.add_argument("--bigrams", required=True)
    p_bench.add_argument("--key-sizes", required=True, help="comma-separated key lengths (empty for none)")
    p_bench.add_argument("--workers", type=int)
    p_bench.add_argument("--climbings", type=int)
    p_bench.add_argument("--restarts", type=int)
    p_bench.add_argument("--seed", type=int)
    p_bench.add_argument("--log-floor", type=float)
    p_bench.add_argument("--jobs", type=int)
    p_bench.add_argument("--format", choices=["text", "csv"])
    return parser


def _resolve(args: argparse.Namespace, config_path: str | None) -> dict:
    """flags > config file > defaults; returns every resolved value."""
    from_file = {}
    if config_path:
        with open(config_path) as handle:
            from_file = json.load(handle)
    resolved = {}
    for name, default in DEFAULTS.items():
        flag = getattr(args, name, None)
        if flag is not None:
            resolved[name] = flag
        elif name in from_file:
            resolved[name] = from_file[name]
        else:
            resolved[name] = default
    if resolved["seed"] is None:
        resolved["seed"] = time.time_ns() % 2**63
    return resolved


def _read_text(path: str) -> str:
    with open(path) as handle:
        return handle.read()


def _sha256(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        digest.update(handle.read())
    return digest.hexdigest()


def _parse_mas_key(spec: str) -> np.ndarray:
    if len(spec) != ALPHABET_SIZE or sorted(spec) != sorted(ALPHABET):
        raise ValueError("mas key must be a 26-letter permutation of a-z")
    return as_substitution_key([ord(c) - ord("a") for c in spec])


def _parse_sct_key(spec: str) -> np.ndarray:
    try:
        values = [int(part) for part in spec.split(",")]
    except ValueError:
        raise ValueError(f"bad transposition key spec {spec!r}") from None
    return as_transposition_key(values)


def cmd_corpus_build(args) -> int:
    table = build_table_from_corpus(_read_text(args.input))
    with open(args.output, "w") as handle:
        handle.write(format_bigram_file(table))
    print(f"wrote {args.output}: {int(table.scores.sum())} bigram occurrences", file=sys.stderr)
    return 0


def cmd_encrypt(args) -> int:
    plain = map_text(normalize(_read_text(args.plaintext)))
    if args.cipher == "mas":
        if not args.key:
            raise ValueError("mas encryption needs --key")
        key = _parse_mas_key(args.key)
        cipher = mas_encrypt(plain, key)
        print(f"key: {''.join(chr(ord('a') + int(v)) for v in key)}", file=sys.stderr)
    else:
        if args.random_key:
            if not args.key_length:
                raise ValueError("--random-key needs --key-length")
            seed = args.seed if args.seed is not None else time.time_ns() % 2**63
            key = WorkerRng(seed, KEYGEN_STREAM).permutation(args.key_length)
            print(f"seed: {seed}", file=sys.stderr)
        elif args.key:
            key = _parse_sct_key(args.key)
        else:
            raise ValueError("sct encryption needs --key or --random-key")
        cipher = sct_encrypt(plain, key)
        print(f"key: {','.join(str(int(v)) for v in key)}", file=sys.stderr)
    print(demap(cipher))
    return 0


def _solve_report(mode, resolved, args, cipher, best, summaries) -> dict:
    # jobs only changes how workers are scheduled, never what they compute,
    # so it lives in the timing block rather than the reproducible config
    config = {k: v for k, v in resolved.items() if k != "jobs"}
    return {
        "command": "solve",
        "config": {**config, "mode": mode, "bigrams": args.bigrams},
        "inputs": {
            "ciphertext": demap(cipher),
            "ciphertext_length": int(cipher.size),
            "bigrams_sha256": _sha256(args.bigrams),
        },
        "result": {
            "best_score": best.best_score,
            "best_text": demap(best.best_text),
            "best_key": None
            if best.best_key is None
            else [int(v) for v in best.best_key],
            "restart_index": best.restart_index,
            "history": [[int(i), s] for i, s in best.history],
            "per_worker_scores": best.per_worker_scores,
            "per_restart": [
                {"restart": s.restart, "score": s.score, "text": demap(s.text)}
                for s in summaries
            ],
        },
        "timing": {
            "jobs": resolved["jobs"],
            "total_s": sum(s.elapsed for s in summaries),
            "per_restart_s": [s.elapsed for s in summaries],
        },
    }


def _print_text_report(report: dict) -> None:
    config = report["config"]
    result = report["result"]
    print(f"mode: {config['mode']}  seed: {config['seed']}")
    echo = {k: v for k, v in sorted(config.items()) if k not in ("mode", "seed")}
    print("config: " + ", ".join(f"{k}={v}" for k, v in echo.items()))
    print("restart  score")
    for row in result["per_restart"]:
        print(f"{row['restart']:>7}  {row['score']}")
    for iteration, score in result["history"]:
        print(f"improvement at iteration {iteration}: {score}")
    if result["best_key"] is not None:
        print("best key: " + ",".join(str(v) for v in result["best_key"]))
    print(f"best score {result['best_score']} (restart {result['restart_index']})")
    print(f"elapsed: {report['timing']['total_s']:.3f}s")
    print("best candidate:")
    print(result["best_text"])


def cmd_solve(args) -> int:
    resolved = _resolve(args, args.config)
    cipher = map_text(normalize(_read_text(args.ciphertext)))
    if not args.bigrams:
        raise ValueError("solve needs --bigrams")
    table = parse_bigram_file(_read_text(args.bigrams))
    jobs = resolved["jobs"]

    if args.mode in ("mas-det", "mas"):
        deterministic = args.mode == "mas-det"
        if deterministic:
            resolved["workers"] = 325
        if resolved["climbings"] is None:
            resolved["climbings"] = 10_000
        cfg = MasSolverConfig(
            mode="deterministic" if deterministic else "stochastic",
            workers=resolved["workers"],
            iterations=resolved["iterations"],
            climbings=resolved["climbings"],
            restarts=resolved["restarts"],
            global_seed=resolved["seed"],
        )
        best, summaries = solve_with_restarts(cipher, table, cfg, jobs=jobs)
    else:
        if resolved["key_length"] is None:
            raise ValueError("sct solving needs --key-length")
        if resolved["climbings"] is None:
            resolved["climbings"] = 15_000
        logs = build_log_table(table, floor=resolved["log_floor"])
        cfg = SctSolverConfig(
            key_length=resolved["key_length"],
            workers=resolved["workers"],
            climbings=resolved["climbings"],
            p1=resolved["p1"],
            p2=resolved["p2"],
            op1_hop=resolved["op1_hop"],
            op2_hop=resolved["op2_hop"],
            restarts=resolved["restarts"],
            global_seed=resolved["seed"],
        )
        best, summaries = solve_sct(cipher, logs, cfg, jobs=jobs)

    report = _solve_report(args.mode, resolved, args, cipher, best, summaries)
    if resolved["format"] == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        _print_text_report(report)
    return 0


def search_space_bits(key_size: int) -> int:
    """Whole-bit size of the key space: floor(log2(key_size!))."""
    return int(math.log2(math.factorial(key_size)))


BENCH_HEADER = "key_size,search_bits,workers,climbings,seed,wall_ms,recovered"


def cmd_benchmark(args) -> int:
    resolved = _resolve(args, None)
    if resolved["climbings"] is None:
        resolved["climbings"] = 15_000
    plain = map_text(normalize(_read_text(args.plaintext)))
    table = parse_bigram_file(_read_text(args.bigrams))
    logs = build_log_table(table, floor=resolved["log_floor"])
    sizes = [int(s) for s in args.key_sizes.split(",") if s.strip()]

    rows = []
    for index, key_size in enumerate(sizes):
        row_seed = resolved["seed"] + index
        key = WorkerRng(row_seed, KEYGEN_STREAM).permutation(key_size)
        cipher = sct_encrypt(plain, key)
        cfg = SctSolverConfig(
            key_length=key_size,
            workers=resolved["workers"],
            climbings=resolved["climbings"],
            p1=resolved["p1"],
            p2=resolved["p2"],
            op1_hop=resolved["op1_hop"],
            op2_hop=resolved["op2_hop"],
            restarts=resolved["restarts"],
            global_seed=row_seed,
        )
        started = time.perf_counter()
        best, _ = solve_sct(cipher, logs, cfg, jobs=resolved["jobs"])
        wall_ms = int(1000 * (time.perf_counter() - started))
        recovered = int(np.array_equal(best.best_text, plain))
        rows.append(
            (key_size, search_space_bits(key_size), cfg.workers, cfg.climbings,
             row_seed, wall_ms, recovered)
        )

    if resolved["format"] == "csv":
        print(BENCH_HEADER)
        for row in rows:
            print(",".join(str(v) for v in row))
    else:
        print(f"{'key':>4} {'bits':>5} {'workers':>8} {'climbings':>10} {'wall_ms':>8} {'ok':>3}")
        for key_size, bits, workers, climbings, _, wall_ms, recovered in rows:
            print(f"{key_size:>4} {bits:>5} {workers:>8} {climbings:>10} {wall_ms:>8} {recovered:>3}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "corpus-build": cmd_corpus_build,
        "encrypt": cmd_encrypt,
        "solve": cmd_solve,
        "benchmark": cmd_benchmark,
    }
    try:
        return handlers[args.command](args)
    except OSError as exc:
        print(f"cipherclimb: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"cipherclimb: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
