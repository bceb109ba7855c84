"""Benchmark the row-echelon enumeration kernels against each other.

Runs the same cell census (every pivot pattern for k x n matrices over
F_q) through the compiled kernel and the pure-Python fallback, checks
they agree, and reports throughput.  The default workload materializes
about half a million matrices.

    python3 benchmarks/bench_ffenum.py
    python3 benchmarks/bench_ffenum.py -k 3 -n 6 -q 3 --repeat 5
"""

import argparse
import time
from itertools import combinations

from cyclemotive import _ffenum_py
from cyclemotive.ffcount import _free_positions, gaussian_binomial

try:
    from cyclemotive import _ffenum
except ImportError:
    _ffenum = None


def census_states(k: int, n: int, q: int) -> int:
    return sum(q ** _free_positions(n, pivots)
               for pivots in combinations(range(n), k))


def run_census(kernel, k: int, n: int, q: int) -> int:
    total = 0
    for pivots in combinations(range(n), k):
        total += kernel.cell_count(n, pivots, q)
    return total


def bench(kernel, name: str, k: int, n: int, q: int, repeat: int):
    best = None
    total = None
    for _ in range(repeat):
        start = time.perf_counter()
        total = run_census(kernel, k, n, q)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return name, total, best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-k", type=int, default=2, help="rows (subspace dim)")
    parser.add_argument("-n", type=int, default=6, help="columns (ambient dim)")
    parser.add_argument("-q", type=int, default=5, help="field size")
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions, best is reported")
    args = parser.parse_args()

    states = census_states(args.k, args.n, args.q)
    expected = gaussian_binomial(args.n, args.k, args.q)
    print(f"census: k={args.k} n={args.n} q={args.q}, "
          f"{states} matrices to scan, expected count {expected}")

    rows = [bench(_ffenum_py, "python", args.k, args.n, args.q, args.repeat)]
    if _ffenum is not None:
        rows.append(bench(_ffenum, "compiled", args.k, args.n, args.q,
                          args.repeat))
    else:
        print("compiled kernel not built; benchmarking the fallback only")

    for name, total, secs in rows:
        if total != expected:
            raise SystemExit(f"{name} kernel returned {total}, "
                             f"expected {expected}")
        print(f"  {name:>8}: {secs:8.4f}s  {states / secs:12.0f} states/s")

    if len(rows) == 2:
        print(f"speedup: {rows[0][2] / rows[1][2]:.1f}x")


if __name__ == "__main__":
    main()
