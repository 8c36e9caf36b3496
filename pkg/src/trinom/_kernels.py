"""Fixed-width kernels for trinomial rows reduced modulo ``m``.

These back the ``modular`` engine of the integer checkers.  Each kernel has a
numba version and a pure-numpy version with identical output; the numba one is
used unless numba is missing or ``TRINOM_DISABLE_NUMBA`` is set to a true
value.  The exact big-integer path in :mod:`trinom.exactcomb` stays the
reference; tests compare the two.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "NUMBA_ENABLED",
    "trinomial_rows_mod",
    "trinomial_rows_mod_numpy",
    "column_sums_mod",
    "column_sums_mod_numpy",
]

# keeps 3*(m-1) inside int64
MAX_MODULUS = 2**61


def _flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in {"1", "true", "yes", "on"}


def trinomial_rows_mod_numpy(n_max: int, m: int) -> np.ndarray:
    """Table ``T[n, j] = (n choose j) mod m`` for ``0 <= j <= n <= n_max``."""
    _check(n_max, m)
    table = np.zeros((n_max + 1, n_max + 2), dtype=np.int64)
    table[0, 0] = 1 % m
    for n in range(1, n_max + 1):
        prev = table[n - 1]
        cur = table[n]
        cur[1 : n + 1] = prev[0:n] + prev[1 : n + 1] + prev[2 : n + 2]
        # j = 0 sees j = -1 as its mirror j = 1
        cur[0] = prev[0] + 2 * prev[1]
        np.remainder(cur, m, out=cur)
    return table[:, : n_max + 1]


def column_sums_mod_numpy(stop: int, m: int) -> np.ndarray:
    """``sum_{k < stop} (k choose j) mod m`` for ``j = 0 .. stop-1``."""
    if stop < 1:
        raise ValueError("stop must be positive")
    sums = np.zeros(stop, dtype=np.int64)
    for row in trinomial_rows_mod_numpy(stop - 1, m):
        sums += row
        np.remainder(sums, m, out=sums)
    return sums


def _check(n_max: int, m: int) -> None:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if not 2 <= m < MAX_MODULUS:
        raise ValueError(f"modulus {m} outside [2, 2**61)")


try:
    if _flag("TRINOM_DISABLE_NUMBA"):
        raise ImportError("numba disabled by TRINOM_DISABLE_NUMBA")
    from numba import njit
except ImportError:
    njit = None


if njit is not None:

    @njit(cache=True)
    def _rows_mod_nb(n_max, m):
        table = np.zeros((n_max + 1, n_max + 2), dtype=np.int64)
        table[0, 0] = 1 % m
        for n in range(1, n_max + 1):
            table[n, 0] = (table[n - 1, 0] + 2 * table[n - 1, 1]) % m
            for j in range(1, n + 1):
                s = table[n - 1, j - 1] + table[n - 1, j] + table[n - 1, j + 1]
                table[n, j] = s % m
        return table

    @njit(cache=True)
    def _column_sums_nb(stop, m):
        prev = np.zeros(stop + 1, dtype=np.int64)
        cur = np.zeros(stop + 1, dtype=np.int64)
        sums = np.zeros(stop, dtype=np.int64)
        prev[0] = 1 % m
        sums[0] = prev[0]
        for n in range(1, stop):
            cur[0] = (prev[0] + 2 * prev[1]) % m
            for j in range(1, n + 1):
                cur[j] = (prev[j - 1] + prev[j] + prev[j + 1]) % m
            for j in range(n + 1):
                sums[j] = (sums[j] + cur[j]) % m
            prev, cur = cur, prev
        return sums

    def trinomial_rows_mod(n_max: int, m: int) -> np.ndarray:
        _check(n_max, m)
        return _rows_mod_nb(n_max, m)[:, : n_max + 1]

    def column_sums_mod(stop: int, m: int) -> np.ndarray:
        if stop < 1:
            raise ValueError("stop must be positive")
        _check(stop - 1, m)
        return _column_sums_nb(stop, m)

    NUMBA_ENABLED = True

else:
    trinomial_rows_mod = trinomial_rows_mod_numpy
    column_sums_mod = column_sums_mod_numpy
    NUMBA_ENABLED = False

trinomial_rows_mod.__doc__ = trinomial_rows_mod_numpy.__doc__
column_sums_mod.__doc__ = column_sums_mod_numpy.__doc__
