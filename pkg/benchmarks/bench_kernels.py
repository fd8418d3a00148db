"""Benchmark the compiled SL(2,Z) kernels against the pure-Python twins.

These three functions carry the randomized sweeps (normal forms and turn
words of 10^4 elements per suite), which is why they have a compiled core.

Run:  python benchmarks/bench_kernels.py [--count N] [--seed S]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from veerlab import _pure

try:
    from veerlab import _speedups
except ImportError:
    _speedups = None


def make_inputs(count: int, seed: int):
    rng = random.Random(seed)
    a_mat = (0, 1, -1, 0)
    b_mat = (1, -1, 1, 0)
    b_inv = (0, 1, -1, 1)

    def mul(m, n):
        a, b, c, d = m
        e, f, g, h = n
        return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    mats = []
    for _ in range(count):
        m = (1, 0, 0, 1)
        for _ in range(rng.randrange(0, 60)):
            m = mul(m, rng.choice([a_mat, b_mat, b_inv]))
        mats.append(m)
    words = [
        [rng.choice([1, -1, 2, -2]) for _ in range(rng.randrange(0, 40))]
        for _ in range(count)
    ]
    return mats, words


def timeit(fn, runs: int = 5) -> float:
    samples = []
    for _ in range(runs):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=5000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    mats, words = make_inputs(args.count, args.seed)
    benches = [
        ("nf_exponents", lambda mod: [mod.nf_exponents(*m) for m in mats]),
        ("turn_letters", lambda mod: [mod.turn_letters(*m) for m in mats]),
        ("word_matrix", lambda mod: [mod.word_matrix(w) for w in words]),
    ]
    print(f"inputs: {args.count} matrices (length <= 60), {args.count} words "
          f"(length <= 40), seed {args.seed}")
    for name, runner in benches:
        pure_t = timeit(lambda: runner(_pure))
        if _speedups is None:
            print(f"{name:14s} pure {pure_t * 1e3:8.1f} ms   (no compiled build)")
            continue
        fast_t = timeit(lambda: runner(_speedups))
        same = runner(_pure) == runner(_speedups)
        print(
            f"{name:14s} pure {pure_t * 1e3:8.1f} ms   compiled "
            f"{fast_t * 1e3:8.1f} ms   speedup {pure_t / fast_t:5.1f}x   "
            f"agree={same}"
        )


if __name__ == "__main__":
    main()
