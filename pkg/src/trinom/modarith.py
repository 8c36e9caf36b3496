"""Modular integer arithmetic: residues, Legendre symbols, primes."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Residue",
    "primes_in_range",
    "is_prime",
    "legendre_symbol",
    "reduce",
    "mod_inverse",
    "half_mod",
]


@dataclass(frozen=True, order=True)
class Residue:
    """Canonical representative ``value`` of a class modulo ``modulus``."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(
                f"value {self.value} not canonical modulo {self.modulus}"
            )

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes ``p`` with ``lo <= p <= hi``, ascending (sieve of Eratosthenes)."""
    if lo < 2 or lo > hi:
        raise ValueError(f"invalid prime range {lo}..{hi}")
    sieve = bytearray([1]) * (hi + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(hi) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, hi + 1, i)))
    return [n for n in range(lo, hi + 1) if sieve[n]]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol ``(a/p)`` via Euler's criterion.

    >>> legendre_symbol(5, 3)
    -1
    """
    if p == 2 or p < 2:
        raise ValueError(f"legendre_symbol needs an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    if r == p - 1:
        return -1
    return r


def reduce(n: int, modulus: int) -> Residue:
    """Reduce ``n`` to its canonical nonnegative residue."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    return Residue(n % modulus, modulus)


def mod_inverse(a: int, m: int) -> int:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)


def half_mod(n: int, m: int) -> int:
    """``n / 2`` as a residue modulo odd ``m``."""
    return n * mod_inverse(2, m) % m
