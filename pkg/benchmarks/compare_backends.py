#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot paths — adjacency + exact clique search, all-pairs
intersection tests, and kernel-region checks — on identical inputs through
both backends and prints a speedup table. The compiled backend must agree
with the pure one bit for bit (sizes, witnesses, node counts); this script
asserts that while it measures.

Usage: python benchmarks/compare_backends.py [--repeat N]
"""

import argparse
import time

from multiekr import Multiset, enumerate_multisets
from multiekr import _kernels_py as pure
from multiekr.search import build_star_multiset_family

try:
    from multiekr import _kernels_c as compiled
except ImportError:
    compiled = None


CLIQUE_CASES = [
    # (n, k, t, stop_at) — stop_at 0 disables the proven-bound early stop
    (7, 5, 3, 0),
    (6, 4, 2, 0),
    (8, 4, 1, 0),
    (12, 3, 1, 0),
]

# stars are t-intersecting, so the all-pairs scans run to completion
PAIR_CASES = [
    (7, 5, 1),
    (9, 4, 1),
    (14, 3, 1),
]


def _star_vectors(n, k, t):
    center = Multiset((1,) * t + (0,) * (n - t))
    star = build_star_multiset_family(n, k, t, center)
    return [m.mult for m in star]


def _time(fn, repeat):
    best = None
    value = None
    for _ in range(repeat):
        started = time.perf_counter()
        value = fn()
        elapsed = time.perf_counter() - started
        best = elapsed if best is None else min(best, elapsed)
    return best, value


def _row(label, pure_s, comp_s):
    if comp_s is None:
        print(f"{label:<44} {pure_s * 1e3:>10.2f} ms {'n/a':>12}")
    else:
        print(
            f"{label:<44} {pure_s * 1e3:>10.2f} ms {comp_s * 1e3:>9.2f} ms "
            f"{pure_s / comp_s:>7.1f}x"
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernels are not built; timing the pure backend only\n")
    print(f"{'case':<44} {'pure':>13} {'compiled':>12} {'speedup':>8}")

    for n, k, t, stop in CLIQUE_CASES:
        vecs = [m.mult for m in enumerate_multisets(n, k)]
        label = f"max clique n={n} k={k} t={t} ({len(vecs)} vertices)"
        p_time, p_val = _time(
            lambda: pure.max_t_clique(vecs, k, t, 10**8, stop), args.repeat
        )
        c_time = None
        if compiled is not None:
            c_time, c_val = _time(
                lambda: compiled.max_t_clique(vecs, k, t, 10**8, stop),
                args.repeat,
            )
            assert p_val == c_val, f"backend mismatch on {label}"
        _row(label, p_time, c_time)

    for n, k, t in PAIR_CASES:
        vecs = _star_vectors(n, k, t)
        label = f"all-pairs t-check n={n} k={k} ({len(vecs)} members)"
        p_time, p_val = _time(
            lambda: pure.all_pairs_at_least(vecs, k, t), args.repeat
        )
        c_time = None
        if compiled is not None:
            c_time, c_val = _time(
                lambda: compiled.all_pairs_at_least(vecs, k, t), args.repeat
            )
            assert p_val == c_val, f"backend mismatch on {label}"
        _row(label, p_time, c_time)

    for n, k, t in PAIR_CASES:
        vecs = _star_vectors(n, k, t)
        region = tuple([1] * n)
        label = f"kernel-region check n={n} k={k} ({len(vecs)} members)"
        p_time, p_val = _time(
            lambda: pure.all_pairs_at_least_in_region(vecs, k, region, t),
            args.repeat,
        )
        c_time = None
        if compiled is not None:
            c_time, c_val = _time(
                lambda: compiled.all_pairs_at_least_in_region(vecs, k, region, t),
                args.repeat,
            )
            assert p_val == c_val, f"backend mismatch on {label}"
        _row(label, p_time, c_time)


if __name__ == "__main__":
    main()
