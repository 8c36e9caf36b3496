"""Compare the numba kernels, their numpy fallbacks and the exact big-integer path.

    python benchmarks/bench_kernels.py [--n-max 998] [--repeat 5]
"""

import argparse
import timeit

from trinom import _kernels
from trinom.exactcomb import column_sums, trinomial_rows


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=998)
    ap.add_argument("--stop", type=int, default=199, help="prime-sized row count for column sums")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    m = 499 * 499
    p = args.stop

    if not _kernels.NUMBA_ENABLED:
        print("numba disabled; only the numpy path and the exact path are timed")
    else:
        # warm the JIT so compile time is not counted
        _kernels.trinomial_rows_mod(4, 7)
        _kernels.column_sums_mod(4, 7)

    rows = [
        ("rows mod m, numpy", lambda: _kernels.trinomial_rows_mod_numpy(args.n_max, m)),
        ("column sums mod p, numpy", lambda: _kernels.column_sums_mod_numpy(p, p)),
        ("rows, exact ints", lambda: sum(1 for _ in trinomial_rows(args.n_max + 1))),
        ("column sums, exact ints", lambda: column_sums.__wrapped__(p)),
    ]
    if _kernels.NUMBA_ENABLED:
        rows[:0] = [
            ("rows mod m, numba", lambda: _kernels.trinomial_rows_mod(args.n_max, m)),
            ("column sums mod p, numba", lambda: _kernels.column_sums_mod(p, p)),
        ]
    print(f"n_max={args.n_max} m={m} stop={p} repeat={args.repeat}")
    for name, fn in rows:
        print(f"{name:28s} {best(fn, args.repeat) * 1e3:10.2f} ms")


if __name__ == "__main__":
    main()
