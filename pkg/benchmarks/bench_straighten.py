"""Benchmark the compiled straightening kernel against the pure-Python one.

Times the bar-involution expansion of every partition of each degree (the
dominant workload behind every matrix in the package), checks that both
kernels produce identical output, and prints a speedup table.

Usage:  python benchmarks/bench_straighten.py [--max-m 9] [--n-set 2,3]
"""

import argparse
import time

from fockdec import _straighten_py
from fockdec.fock import wedge_from_partition
from fockdec.partitions import partitions_of

try:
    from fockdec import _straighten_cy
except ImportError:
    _straighten_cy = None


def workload(max_m, n_set):
    heads = []
    for m in range(max_m + 1):
        for lam in partitions_of(m):
            k = max(m, len(lam), 1)
            heads.append(wedge_from_partition(lam, k)[::-1])
    return [(head, n) for n in n_set for head in heads]


def run(kernel, cases):
    kernel.clear_cache()
    start = time.perf_counter()
    results = [kernel.straighten_raw(head, n) for head, n in cases]
    elapsed = time.perf_counter() - start
    return elapsed, results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=9)
    parser.add_argument("--n-set", default="2,3,4,5")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    n_set = tuple(int(piece) for piece in args.n_set.split(","))
    cases = workload(args.max_m, n_set)
    print(f"{len(cases)} bar-involution expansions, m <= {args.max_m}, n in {n_set}")

    pure_time = min(run(_straighten_py, cases)[0] for _ in range(args.repeat))
    _, pure_results = run(_straighten_py, cases)
    print(f"pure python kernel : {pure_time:8.3f}s")

    if _straighten_cy is None:
        print("compiled kernel   : not built (pip install -e . with Cython)")
        return

    compiled_time = min(run(_straighten_cy, cases)[0] for _ in range(args.repeat))
    _, compiled_results = run(_straighten_cy, cases)
    print(f"compiled kernel    : {compiled_time:8.3f}s")
    print(f"speedup            : {pure_time / compiled_time:8.2f}x")

    mismatches = sum(1 for a, b in zip(pure_results, compiled_results) if a != b)
    if mismatches:
        raise SystemExit(f"FAIL: {mismatches} mismatching expansions")
    print("outputs            : identical")


if __name__ == "__main__":
    main()
