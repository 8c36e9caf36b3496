"""Exact combinatorics: trinomial rows, binomials, Catalan and super Catalan numbers.

Trinomial coefficients ``(n choose j)`` are the coefficients of ``x**j`` in
``(1 + x + 1/x)**n``.  Three independent routes are provided: the three-term
row recurrence, the single binomial sum and the alternating binomial sum.
All values are Python ints.
"""

from __future__ import annotations

import math
import threading
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Sequence

__all__ = [
    "TrinomialRow",
    "IntegralityError",
    "binomial",
    "trinomial_recurrence",
    "trinomial_rows",
    "trinomial_sum_identity",
    "trinomial_alternating_identity",
    "trinomial",
    "TRINOMIAL_METHODS",
    "column_sums",
    "catalan",
    "super_catalan",
    "super_catalan_table",
    "sum_identity_b1",
]


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out fractional."""


@dataclass(frozen=True)
class TrinomialRow:
    """Row ``n`` of trinomial coefficients, stored for ``j = -n .. n``."""

    n: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != 2 * self.n + 1:
            raise ValueError("row length must be 2n+1")

    def __getitem__(self, j: int) -> int:
        if abs(j) > self.n:
            return 0
        return self.coefficients[j + self.n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def nonnegative(self) -> tuple[int, ...]:
        """Entries for ``j = 0 .. n``."""
        return self.coefficients[self.n :]

    def total(self) -> int:
        return sum(self.coefficients)


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _next_row(row: Sequence[int]) -> tuple[int, ...]:
    # pad by two zeros on each side, then sum a sliding window of width three
    padded = (0, 0, *row, 0, 0)
    return tuple(
        padded[i] + padded[i + 1] + padded[i + 2] for i in range(len(row) + 2)
    )


class _RowCache:
    """Small LRU of recent rows; rows are built forward from the nearest one."""

    def __init__(self, maxsize: int = 32) -> None:
        self.maxsize = maxsize
        self._rows: OrderedDict[int, tuple[int, ...]] = OrderedDict({0: (1,)})
        self._lock = threading.Lock()

    def get(self, n: int) -> tuple[int, ...]:
        with self._lock:
            if n in self._rows:
                self._rows.move_to_end(n)
                return self._rows[n]
            start = max(m for m in self._rows if m < n)
            row = self._rows[start]
        for _ in range(start, n):
            row = _next_row(row)
        with self._lock:
            self._rows[n] = row
            self._rows.move_to_end(n)
            while len(self._rows) > self.maxsize:
                self._rows.popitem(last=False)
            # row 0 is the seed for every rebuild
            self._rows.setdefault(0, (1,))
        return row

    def clear(self) -> None:
        with self._lock:
            self._rows = OrderedDict({0: (1,)})


_ROW_CACHE = _RowCache()


def trinomial_recurrence(n: int) -> TrinomialRow:
    """Full row ``n`` from the three-term recurrence.

    >>> trinomial_recurrence(2).coefficients
    (1, 2, 3, 2, 1)
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return TrinomialRow(n, _ROW_CACHE.get(n))


def trinomial_rows(stop: int) -> Iterator[TrinomialRow]:
    """Yield rows ``0 .. stop-1`` in order without touching the cache."""
    row: tuple[int, ...] = (1,)
    for n in range(stop):
        yield TrinomialRow(n, row)
        row = _next_row(row)


def trinomial_sum_identity(n: int, j: int) -> int:
    """``sum_k C(n,k) C(n-k, k+j)``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    j = abs(j)
    if j > n:
        return 0
    return sum(binomial(n, k) * binomial(n - k, k + j) for k in range(n + 1))


def trinomial_alternating_identity(n: int, j: int) -> int:
    """``sum_k (-1)**k C(n,k) C(2n-2k, n-k-j)``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    j = abs(j)
    if j > n:
        return 0
    return sum(
        (-1) ** k * binomial(n, k) * binomial(2 * n - 2 * k, n - k - j)
        for k in range(n + 1)
    )


TRINOMIAL_METHODS: dict[str, Callable[[int, int], int]] = {
    "recurrence": lambda n, j: trinomial_recurrence(n)[j],
    "sum": trinomial_sum_identity,
    "alternating": trinomial_alternating_identity,
}


def trinomial(n: int, j: int, method: str = "recurrence") -> int:
    try:
        fn = TRINOMIAL_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown trinomial method {method!r}") from None
    return fn(n, j)


@lru_cache(maxsize=64)
def column_sums(stop: int) -> tuple[int, ...]:
    """``sum_{k < stop} (k choose j)`` for ``j = 0 .. stop-1``."""
    sums = [0] * stop
    for row in trinomial_rows(stop):
        for j, c in enumerate(row.nonnegative()):
            sums[j] += c
    return tuple(sums)


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return math.comb(2 * k, k) // (k + 1)


def super_catalan(m: int, n: int) -> int:
    """``(2m)! (2n)! / (m! n! (m+n)!)``, checked to divide exactly."""
    if m < 0 or n < 0:
        raise ValueError("super_catalan needs nonnegative arguments")
    f = math.factorial
    q, r = divmod(f(2 * m) * f(2 * n), f(m) * f(n) * f(m + n))
    if r:
        raise IntegralityError(f"super Catalan S({m},{n}) is not an integer")
    return q


def sum_identity_b1(n: int) -> tuple[int, int | Fraction]:
    """Both sides of ``sum_{j=0}^n (n choose j) = (3**n + sum_k C(n,k) C(n-k,k)) / 2``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    lhs = sum(trinomial_recurrence(n).nonnegative())
    twice_rhs = 3**n + sum(binomial(n, k) * binomial(n - k, k) for k in range(n + 1))
    rhs: int | Fraction = twice_rhs // 2 if twice_rhs % 2 == 0 else Fraction(twice_rhs, 2)
    return lhs, rhs


@lru_cache(maxsize=8)
def super_catalan_table(size: int) -> tuple[tuple[int, ...], ...]:
    """``S(m, n)`` for ``0 <= m, n < size`` built from ``S(m, n+1) = 4 S(m, n) - S(m+1, n)``.

    Seeded with ``S(m, 0) = C(2m, m)``.  Agrees with :func:`super_catalan`;
    the recurrence avoids one factorial quotient per entry in prime sweeps.
    """
    if size < 1:
        raise ValueError("size must be positive")
    width = 2 * size - 1
    row = [math.comb(2 * m, m) for m in range(width)]
    rows = [tuple(row[:size])]
    for n in range(1, size):
        row = [4 * row[m] - row[m + 1] for m in range(len(row) - 1)]
        rows.append(tuple(row[:size]))
    # rows[n][m] = S(m, n); S is symmetric so this is also S(n, m)
    return tuple(rows)
