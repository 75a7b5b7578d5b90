"""Compare the compiled subset-construction kernel with the pure-Python one.

    python3 benchmarks/bench_kernel.py [--repeat 5] [--max-n 10]

Both backends are run on the same inputs and their outputs are checked for
equality before timing.
"""
import argparse
import random
import statistics
import time

from flanked import family, kernel
from flanked.core import Nfa
from flanked.powerset import DEFAULT_MAX_CLASSES


def random_nfa(rng, n, k, density):
    alphabet = tuple("abcdefgh"[:k])
    transitions = {(rng.randrange(q), rng.choice(alphabet), q) for q in range(1, n)}
    transitions |= {
        (p, s, q) for p in range(n) for s in alphabet for q in range(n) if rng.random() < density / n
    }
    return Nfa(alphabet, tuple(f"s{i}" for i in range(n)), frozenset(transitions), frozenset({0}))


def workloads(max_n, seed):
    for n in range(4, max_n + 1, 2):
        yield f"family n={n}", family.generate(n).ffa.trim().automaton
    rng = random.Random(seed)
    for n in (16, 24, 32, 48, 64):
        yield f"random {n} states", random_nfa(rng, n, 2, 2.0)


def timed(a, backend, repeat):
    args = (a.initial_mask, a.succ_masks, len(a.alphabet), DEFAULT_MAX_CLASSES)
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = kernel.explore(*args, backend=backend)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if not kernel.has_compiled():
        raise SystemExit("compiled kernel not available; build it with: pip install -e . --no-build-isolation")

    print(f"{'workload':<20} {'classes':>8} {'python ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for label, a in workloads(args.max_n, args.seed):
        py, r1 = timed(a, "python", args.repeat)
        c, r2 = timed(a, "compiled", args.repeat)
        assert r1 == r2, label
        print(f"{label:<20} {len(r1[0]):>8} {py * 1e3:>10.2f} {c * 1e3:>12.2f} {py / c:>7.1f}x")


if __name__ == "__main__":
    main()
