"""Dense integer polynomials in ``q`` and the q-analogs built on them.

Coefficients are Python ints stored in ascending order, so arbitrarily large
values stay exact.  Products switch from schoolbook to Kronecker
substitution (pack into one big integer, multiply, unpack) above a size
threshold; both give identical results.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "QPolynomial",
    "ZERO",
    "ONE",
    "Q",
    "monomial",
    "mul_schoolbook",
    "mul_kronecker",
    "q_integer",
    "q_binomial",
    "q_pascal_rows",
    "t1",
    "t2",
    "t3",
    "poly_divmod",
    "congruent_mod_qp_power",
]

KRONECKER_THRESHOLD = 24


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPolynomial:
    """Immutable polynomial ``sum_i coefficients[i] * q**i`` over the integers."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()) -> None:
        object.__setattr__(self, "coefficients", _trim(int(c) for c in coefficients))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def _raw(cls, trimmed: tuple[int, ...]) -> "QPolynomial":
        obj = object.__new__(cls)
        object.__setattr__(obj, "coefficients", trimmed)
        return obj

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coefficients) - 1 if self.coefficients else None

    def is_zero(self) -> bool:
        return not self.coefficients

    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coefficients)!r})"

    def __str__(self) -> str:
        return self.pretty()

    @staticmethod
    def _coerce(x: "QPolynomial | int") -> "QPolynomial":
        if isinstance(x, QPolynomial):
            return x
        if isinstance(x, int):
            return QPolynomial((x,))
        raise TypeError(f"cannot use {type(x).__name__} as a polynomial")

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial._raw(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return QPolynomial._raw(tuple(other * c for c in self.coefficients))
        other = self._coerce(other)
        return QPolynomial._raw(_mul(self.coefficients, other.coefficients))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, e: int) -> "QPolynomial":
        """Multiply by ``q**e``."""
        if e < 0:
            raise ValueError("shift exponent must be nonnegative")
        if not self.coefficients:
            return self
        return QPolynomial._raw((0,) * e + self.coefficients)

    def spread(self, b: int) -> "QPolynomial":
        """Substitute ``q -> q**b``."""
        if b < 1:
            raise ValueError("base exponent must be positive")
        if b == 1 or len(self.coefficients) <= 1:
            return self
        out = [0] * ((len(self.coefficients) - 1) * b + 1)
        out[::b] = self.coefficients
        return QPolynomial._raw(tuple(out))

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def to_list(self) -> list[int]:
        return list(self.coefficients)

    def pretty(self) -> str:
        """Human-readable form such as ``1 + q + 2q^2``."""
        if not self.coefficients:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


ZERO = QPolynomial._raw(())
ONE = QPolynomial._raw((1,))
Q = QPolynomial._raw((0, 1))


def monomial(e: int, c: int = 1) -> QPolynomial:
    return ONE.shift(e) * c


def mul_schoolbook(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _kronecker_unsigned(a: Sequence[int], b: Sequence[int]) -> list[int]:
    bound = min(len(a), len(b)) * max(a) * max(b)
    width = (bound.bit_length() + 8) // 8
    pack = lambda cs: int.from_bytes(
        b"".join(c.to_bytes(width, "little") for c in cs), "little"
    )
    prod = pack(a) * pack(b)
    n = len(a) + len(b) - 1
    raw = prod.to_bytes(n * width, "little")
    return [int.from_bytes(raw[i * width : (i + 1) * width], "little") for i in range(n)]


def mul_kronecker(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Exact product via Kronecker substitution; handles signed coefficients."""
    if not a or not b:
        return ()
    n = len(a) + len(b) - 1
    out = [0] * n

    def parts(cs):
        pos = [c if c > 0 else 0 for c in cs]
        neg = [-c if c < 0 else 0 for c in cs]
        return [(1, pos)] + ([(-1, neg)] if any(neg) else [])

    for sa, pa in parts(a):
        if not any(pa):
            continue
        for sb, pb in parts(b):
            if not any(pb):
                continue
            for i, c in enumerate(_kronecker_unsigned(pa, pb)):
                out[i] += sa * sb * c
    return _trim(out)


def _mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if min(len(a), len(b)) < KRONECKER_THRESHOLD:
        return mul_schoolbook(a, b)
    return mul_kronecker(a, b)


def q_integer(n: int) -> QPolynomial:
    """``[n]_q = 1 + q + ... + q**(n-1)``."""
    if n < 1:
        raise ValueError(f"q_integer needs n >= 1, got {n}")
    return QPolynomial._raw((1,) * n)


def _times_one_minus(c: list[int], a: int) -> list[int]:
    out = c + [0] * a
    for t, x in enumerate(c):
        out[t + a] -= x
    return out


def _exact_div_one_minus(c: list[int], a: int) -> list[int]:
    # solve c = g - q^a g for g, then confirm the high part of c is consistent
    m = len(c) - a
    if m <= 0:
        raise ArithmeticError("division by 1 - q^a is not exact")
    g = c[:m]
    for t in range(a, m):
        g[t] += g[t - a]
    for t in range(m, len(c)):
        if c[t] != -g[t - a]:
            raise ArithmeticError("division by 1 - q^a is not exact")
    return g


@lru_cache(maxsize=4096)
def _gaussian(n: int, k: int) -> tuple[int, ...]:
    k = min(k, n - k)
    c = [1]
    for i in range(1, k + 1):
        c = _exact_div_one_minus(_times_one_minus(c, n - i + 1), i)
    return tuple(c)


def q_binomial(n: int, k: int, base_exponent: int = 1) -> QPolynomial:
    """Gaussian binomial ``[n choose k]`` in the variable ``q**base_exponent``.

    >>> q_binomial(4, 2).to_list()
    [1, 1, 2, 1, 1]
    """
    if base_exponent < 1:
        raise ValueError("base_exponent must be positive")
    if n < 0 or k < 0 or k > n:
        return ZERO
    return QPolynomial._raw(_gaussian(n, k)).spread(base_exponent)


def q_pascal_rows(n_max: int) -> list[list[QPolynomial]]:
    """Rows ``0 .. n_max`` of ``[n choose k]_q`` from the q-Pascal recurrence."""
    rows = [[ONE]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [ONE]
        for k in range(1, n):
            row.append(prev[k - 1] + prev[k].shift(k))
        row.append(ONE)
        rows.append(row)
    return rows


def t1(n: int, j: int) -> QPolynomial:
    """``sum_k q**(k(k+j)) [n choose k]_q [n-k choose k+j]_q``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    total = ZERO
    for k in range(max(0, -j), n + 1):
        if k + j > n - k:
            break
        total = total + (q_binomial(n, k) * q_binomial(n - k, k + j)).shift(k * (k + j))
    return total


def _t_alternating(n: int, j: int, weight_exponent: int) -> QPolynomial:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    total = ZERO
    for k in range(n + 1):
        right = q_binomial(2 * n - 2 * k, n - k - j)
        if right.is_zero():
            continue
        term = (q_binomial(n, k, 2) * right).shift(weight_exponent * k)
        total = total - term if k % 2 else total + term
    return total


def t2(n: int, j: int) -> QPolynomial:
    """``sum_k (-1)**k [n choose k]_{q^2} [2n-2k choose n-k-j]_q``."""
    return _t_alternating(n, j, 0)


def t3(n: int, j: int) -> QPolynomial:
    """``sum_k (-q)**k [n choose k]_{q^2} [2n-2k choose n-k-j]_q``."""
    return _t_alternating(n, j, 1)


def poly_divmod(f: QPolynomial, d: QPolynomial) -> tuple[QPolynomial, QPolynomial]:
    """Division with remainder by a monic ``d``; stays in integer coefficients."""
    if d.is_zero() or d.leading() != 1:
        raise ValueError("divisor must be a nonzero monic polynomial")
    dc = d.coefficients
    dd = len(dc) - 1
    r = list(f.coefficients)
    if len(r) <= dd:
        return ZERO, f
    quot = [0] * (len(r) - dd)
    lower = dc[:-1]
    for top in range(len(r) - 1, dd - 1, -1):
        c = r[top]
        if c:
            base = top - dd
            quot[base] = c
            for i, x in enumerate(lower):
                if x:
                    r[base + i] -= c * x
        r[top] = 0
    return QPolynomial(quot), QPolynomial(r[:dd])


@lru_cache(maxsize=128)
def _qp_power(p: int, k: int) -> QPolynomial:
    return q_integer(p) ** k


def congruent_mod_qp_power(f: QPolynomial, g: QPolynomial, p: int, k: int) -> bool:
    """True iff ``[p]_q**k`` divides ``f - g`` in ``Z[q]``."""
    if k not in (1, 2):
        raise ValueError(f"k must be 1 or 2, got {k}")
    _, r = poly_divmod(f - g, _qp_power(p, k))
    return r.is_zero()
