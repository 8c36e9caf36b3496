"""Checkers for the trinomial congruences and the classical results around them.

Every checker computes both sides exactly, reduces them with respect to the
statement's modulus and returns a :class:`CongruenceResult`.  Integer
statements carry residues as witnesses; q-statements carry the remainders of
both sides on division by ``[p]_q**k``, which are unique because the divisor is
monic, so equal remainders is the same thing as the congruence.
"""

from __future__ import annotations

import time
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, Union

from . import _kernels
from .exactcomb import (
    binomial,
    catalan,
    column_sums,
    super_catalan_table,
    trinomial,
    trinomial_recurrence,
)
from .modarith import half_mod, legendre_symbol, mod_inverse, primes_in_range
from .qpoly import (
    ONE,
    QPolynomial,
    _qp_power,
    monomial,
    poly_divmod,
    q_binomial,
    t1,
    t2,
    t3,
)

__all__ = [
    "CongruenceResult",
    "SuiteReport",
    "Skip",
    "CHECKS",
    "STATEMENT_IDS",
    "SELECTION_ALIASES",
    "ENGINES",
    "resolve_selection",
    "check_babbage_wolstenholme",
    "check_sun_tauraso",
    "check_half_range_sum",
    "check_super_catalan_sums",
    "check_theorem1",
    "check_theorem2",
    "check_theorem3_single",
    "check_theorem3_double",
    "check_proposition_q",
    "check_andrews",
    "check_conjecture",
    "conjecture_sides",
    "run_suite",
]

Witness = Union[int, tuple[int, ...]]

# canonical result order within one prime
STATEMENT_IDS = (
    "babbage",
    "wolstenholme",
    "sun_tauraso_1",
    "sun_tauraso_2",
    "half_range",
    "super_catalan_1",
    "super_catalan_2",
    "theorem1",
    "theorem2_a1",
    "theorem2_a2",
    "theorem3_single",
    "theorem3_double",
    "proposition1",
    "andrews",
    "conjecture",
)

ENGINES = ("exact", "modular")


@dataclass(frozen=True)
class CongruenceResult:
    """One checked congruence.

    ``modulus`` is the integer ``p**k`` for integer statements and the string
    ``"[p]_q^k"`` for q-statements, whose witnesses are coefficient tuples.
    """

    statement: str
    prime: int
    params: dict[str, int]
    lhs: Witness
    rhs: Witness
    modulus: Union[int, str]
    passed: bool

    @property
    def is_polynomial(self) -> bool:
        return isinstance(self.modulus, str)

    @property
    def is_conjecture(self) -> bool:
        return self.statement == "conjecture"

    def sort_key(self) -> tuple:
        return (self.prime, STATEMENT_IDS.index(self.statement), tuple(sorted(self.params.items())))

    def to_dict(self) -> dict:
        lhs = list(self.lhs) if self.is_polynomial else self.lhs
        rhs = list(self.rhs) if self.is_polynomial else self.rhs
        return {
            "statement": self.statement,
            "prime": self.prime,
            "params": dict(self.params),
            "lhs": lhs,
            "rhs": rhs,
            "modulus": self.modulus,
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CongruenceResult":
        poly = isinstance(d["modulus"], str)
        conv = (lambda w: tuple(w)) if poly else (lambda w: w)
        return cls(
            statement=d["statement"],
            prime=d["prime"],
            params=dict(d["params"]),
            lhs=conv(d["lhs"]),
            rhs=conv(d["rhs"]),
            modulus=d["modulus"],
            passed=d["passed"],
        )


@dataclass(frozen=True)
class Skip:
    statement: str
    prime: int
    reason: str

    def to_dict(self) -> dict:
        return {"statement": self.statement, "prime": self.prime, "reason": self.reason}


@dataclass
class SuiteReport:
    prime_range: tuple[int, int]
    statements: list[str]
    results: list[CongruenceResult] = field(default_factory=list)
    skipped: list[Skip] = field(default_factory=list)
    elapsed_ms: int = 0
    stopped_early: bool = False

    @property
    def failures(self) -> int:
        return sum(not r.passed for r in self.results)

    @property
    def counterexamples(self) -> list[CongruenceResult]:
        """Failed conjecture instances: findings, not implementation faults."""
        return [r for r in self.results if r.is_conjecture and not r.passed]

    def to_dict(self) -> dict:
        return {
            "prime_range": list(self.prime_range),
            "statements": list(self.statements),
            "results": [r.to_dict() for r in self.results],
            "skipped": [s.to_dict() for s in self.skipped],
            "failures": self.failures,
            "conjecture_counterexamples": [r.prime for r in self.counterexamples],
            "elapsed_ms": self.elapsed_ms,
        }


def _int_result(statement, p, modulus, lhs, rhs, **params) -> CongruenceResult:
    lhs %= modulus
    rhs %= modulus
    return CongruenceResult(statement, p, params, lhs, rhs, modulus, lhs == rhs)


def _poly_result(statement, p, k, lhs: QPolynomial, rhs: QPolynomial, **params) -> CongruenceResult:
    d = _qp_power(p, k)
    _, rl = poly_divmod(lhs, d)
    _, rr = poly_divmod(rhs, d)
    label = f"[{p}]_q" if k == 1 else f"[{p}]_q^{k}"
    return CongruenceResult(statement, p, params, rl.coefficients, rr.coefficients, label, rl == rr)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _require_prime_at_least(p: int, bound: int) -> None:
    _require(p >= bound and p in primes_in_range(p, p), f"need a prime p >= {bound}, got {p}")


def _legendre_p3(p: int) -> int:
    return legendre_symbol(p, 3)


def check_babbage_wolstenholme(p: int, exponent: int) -> CongruenceResult:
    """``C(2p-1, p-1) = 1`` modulo ``p**2`` (odd ``p``) or ``p**3`` (``p >= 5``)."""
    _require(exponent in (2, 3), f"exponent must be 2 or 3, got {exponent}")
    _require_prime_at_least(p, 3 if exponent == 2 else 5)
    name = "babbage" if exponent == 2 else "wolstenholme"
    return _int_result(name, p, p**exponent, binomial(2 * p - 1, p - 1), 1)


def check_sun_tauraso(p: int) -> list[CongruenceResult]:
    _require_prime_at_least(p, 5)
    m = p * p
    leg = _legendre_p3(p)
    central = sum(binomial(2 * k, k) for k in range(p))
    cat = sum(catalan(k) for k in range(p))
    return [
        _int_result("sun_tauraso_1", p, m, central, leg),
        _int_result("sun_tauraso_2", p, m, cat, half_mod(3 * leg - 1, m)),
    ]


def check_half_range_sum(p: int) -> CongruenceResult:
    """``sum_{k=1}^{(p-1)/2} C(2k,k)/k = 0 (mod p)``, evaluated with inverses of ``k``."""
    _require_prime_at_least(p, 5)
    lhs = sum(binomial(2 * k, k) * mod_inverse(k, p) for k in range(1, (p - 1) // 2 + 1))
    return _int_result("half_range", p, p, lhs, 0)


def check_super_catalan_sums(p: int) -> list[CongruenceResult]:
    _require_prime_at_least(p, 5)
    table = super_catalan_table(p)
    plain = weighted = 0
    for i in range(p):
        row = table[i]
        for j in range(p):
            plain += row[j]
            weighted += (3 * i + 3 * j + 1) * row[j]
    leg = _legendre_p3(p)
    return [
        _int_result("super_catalan_1", p, p, plain, leg),
        _int_result("super_catalan_2", p, p, weighted, -7 * leg),
    ]


def check_theorem1(p: int, method: str = "sum", engine: str = "exact") -> CongruenceResult:
    """Central-ish trinomial ``(2p choose p) = 2 (mod p**2)``."""
    _require_prime_at_least(p, 5)
    m = p * p
    if _engine(engine) == "modular":
        lhs = int(_kernels.trinomial_rows_mod(2 * p, m)[2 * p, p])
    else:
        lhs = trinomial(2 * p, p, method)
    return _int_result("theorem1", p, m, lhs, 2)


def _row_sum(n: int, stop: int, method: str) -> int:
    # sum_{j=0}^{stop} (n choose j)
    if method == "recurrence":
        return sum(trinomial_recurrence(n).nonnegative()[: stop + 1])
    return sum(trinomial(n, j, method) for j in range(stop + 1))


def check_theorem2(p: int, method: str = "recurrence", engine: str = "exact") -> list[CongruenceResult]:
    _require_prime_at_least(p, 5)
    m2 = p * p
    if _engine(engine) == "modular":
        table2 = _kernels.trinomial_rows_mod(p, m2)
        a1 = int(table2[p, : p + 1].sum())
        a2 = int(_kernels.trinomial_rows_mod(p - 1, p)[p - 1, :p].sum())
    else:
        a1 = _row_sum(p, p, method)
        a2 = _row_sum(p - 1, p - 1, method)
    return [
        _int_result("theorem2_a1", p, m2, a1, half_mod(1 + pow(3, p, m2), m2)),
        _int_result("theorem2_a2", p, p, a2, half_mod(1 + _legendre_p3(p), p)),
    ]


def _theorem3_single_rhs(p: int, j: int) -> int:
    if j % 2:
        return 0
    return (-1) ** ((p - j - 1) // 2)


def _columns(p: int, method: str, engine: str) -> Sequence[int]:
    if _engine(engine) == "modular":
        return [int(x) for x in _kernels.column_sums_mod(p, p)]
    if method == "recurrence":
        return column_sums(p)
    return [sum(trinomial(k, j, method) for k in range(p)) for j in range(p)]


def check_theorem3_single(
    p: int, j: int, method: str = "recurrence", engine: str = "exact"
) -> CongruenceResult:
    """``sum_{k<p} (k choose j)`` against ``((-1)^j+1)/2 * (-1)^((p-j-1)/2)`` mod ``p``."""
    _require_prime_at_least(p, 5)
    _require(0 < j < p, f"need 0 < j < p, got j={j}")
    if _engine(engine) == "exact" and method != "recurrence":
        lhs = sum(trinomial(k, j, method) for k in range(p))
    else:
        lhs = _columns(p, method, engine)[j]
    return _int_result("theorem3_single", p, p, lhs, _theorem3_single_rhs(p, j), j=j)


def _theorem3_sweep(p: int, method: str = "recurrence", engine: str = "exact") -> list[CongruenceResult]:
    _require_prime_at_least(p, 5)
    cols = _columns(p, method, engine)
    return [
        _int_result("theorem3_single", p, p, cols[j], _theorem3_single_rhs(p, j), j=j)
        for j in range(1, p)
    ]


def check_theorem3_double(p: int, method: str = "recurrence", engine: str = "exact") -> CongruenceResult:
    _require_prime_at_least(p, 5)
    lhs = sum(_columns(p, method, engine))
    rhs = half_mod((-1) ** ((p - 1) // 2) + 1, p)
    return _int_result("theorem3_double", p, p, lhs, rhs)


_T_FUNCS: dict[int, Callable[[int, int], QPolynomial]] = {1: t1, 2: t2, 3: t3}


def check_proposition_q(p: int, s: int) -> CongruenceResult:
    """``sum_{j=0}^{p-1} T_s(p, j) = 1 (mod [p]_q)``."""
    _require(s in _T_FUNCS, f"s must be 1, 2 or 3, got {s}")
    _require_prime_at_least(p, 3)
    t = _T_FUNCS[s]
    lhs = QPolynomial()
    for j in range(p):
        lhs = lhs + t(p, j)
    return _poly_result("proposition1", p, 1, lhs, ONE, s=s)


def check_andrews(p: int) -> CongruenceResult:
    """``[2p-1 choose p-1]_q = q**(p(p-1)/2) (mod [p]_q**2)``."""
    _require_prime_at_least(p, 3)
    lhs = q_binomial(2 * p - 1, p - 1)
    return _poly_result("andrews", p, 2, lhs, monomial(p * (p - 1) // 2))


def conjecture_sides(p: int) -> tuple[QPolynomial, QPolynomial]:
    """``t1(2p, p)`` and ``(2*floor((p+3)/6) + p)(q**p - 1) + 2``."""
    coeff = 2 * ((p + 3) // 6) + p
    return t1(2 * p, p), (monomial(p) - 1) * coeff + 2


def check_conjecture(p: int) -> CongruenceResult:
    """A failure here is a counterexample to the conjecture, reported as such."""
    _require_prime_at_least(p, 5)
    lhs, rhs = conjecture_sides(p)
    return _poly_result("conjecture", p, 2, lhs, rhs)


def _engine(engine: str) -> str:
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    return engine


# name -> (smallest admissible prime, runner(p, engine) -> results)
CHECKS: dict[str, tuple[int, Callable[[int, str], list[CongruenceResult]]]] = {
    "babbage": (3, lambda p, e: [check_babbage_wolstenholme(p, 2)]),
    "wolstenholme": (5, lambda p, e: [check_babbage_wolstenholme(p, 3)]),
    "sun_tauraso": (5, lambda p, e: check_sun_tauraso(p)),
    "half_range": (5, lambda p, e: [check_half_range_sum(p)]),
    "super_catalan": (5, lambda p, e: check_super_catalan_sums(p)),
    "theorem1": (5, lambda p, e: [check_theorem1(p, engine=e)]),
    "theorem2": (5, lambda p, e: check_theorem2(p, engine=e)),
    "theorem3_single": (5, lambda p, e: _theorem3_sweep(p, engine=e)),
    "theorem3_double": (5, lambda p, e: [check_theorem3_double(p, engine=e)]),
    "proposition1": (3, lambda p, e: [check_proposition_q(p, s) for s in (1, 2, 3)]),
    "andrews": (3, lambda p, e: [check_andrews(p)]),
    "conjecture": (5, lambda p, e: [check_conjecture(p)]),
}

SELECTION_ALIASES: dict[str, tuple[str, ...]] = {
    "all": tuple(CHECKS),
    "babbage_wolstenholme": ("babbage", "wolstenholme"),
    "classical": ("babbage", "wolstenholme", "sun_tauraso", "half_range", "super_catalan"),
    "theorem3": ("theorem3_single", "theorem3_double"),
    "q": ("proposition1", "andrews", "conjecture"),
}


def resolve_selection(names: Iterable[str]) -> list[str]:
    """Expand aliases; return check names in canonical order."""
    chosen: set[str] = set()
    for name in names:
        if name in SELECTION_ALIASES:
            chosen.update(SELECTION_ALIASES[name])
        elif name in CHECKS:
            chosen.add(name)
        else:
            raise ValueError(f"unknown statement {name!r}")
    if not chosen:
        raise ValueError("empty statement selection")
    return [c for c in CHECKS if c in chosen]


def _run_task(task: tuple[str, int, str]) -> list[CongruenceResult]:
    name, p, engine = task
    return CHECKS[name][1](p, engine)


def run_suite(
    lo: int,
    hi: int,
    statements: Iterable[str],
    *,
    jobs: int = 1,
    engine: str = "exact",
    fail_fast: bool = False,
    executor: Executor | None = None,
) -> SuiteReport:
    """Run the selected checks over every prime in ``[lo, hi]``.

    Primes below a check's own bound are recorded in ``skipped``.  Results are
    ordered by prime, then statement, then parameters, whatever ``jobs`` is.
    With ``fail_fast`` the report ends at the first failing result in that order.
    """
    names = resolve_selection(statements)
    _engine(engine)
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    start = time.perf_counter()
    primes = primes_in_range(lo, hi)
    report = SuiteReport((lo, hi), names)
    tasks = []
    for p in primes:
        for name in names:
            bound = CHECKS[name][0]
            if p < bound:
                report.skipped.append(Skip(name, p, f"requires p >= {bound}"))
            else:
                tasks.append((name, p, engine))

    def consume(outputs: Iterable[list[CongruenceResult]]) -> None:
        for out in outputs:
            for r in sorted(out, key=CongruenceResult.sort_key):
                report.results.append(r)
                if fail_fast and not r.passed:
                    report.stopped_early = True
                    return

    if executor is not None:
        consume(executor.map(_run_task, tasks))
    elif jobs == 1 or len(tasks) < 2:
        consume(map(_run_task, tasks))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            consume(pool.map(_run_task, tasks))
            # drop queued work once fail-fast has stopped consuming
            pool.shutdown(wait=True, cancel_futures=True)
    report.results.sort(key=CongruenceResult.sort_key)
    report.elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    return report
