import itertools

import pytest


def brute_trinomial_row(n):
    """Coefficients of (1 + x + x^2)^n by repeated multiplication; index n+j <-> x^j."""
    row = [1]
    for _ in range(n):
        nxt = [0] * (len(row) + 2)
        for i, c in enumerate(row):
            for d in range(3):
                nxt[i + d] += c
        row = nxt
    return row


def brute_gaussian(n, k):
    """[n choose k]_q coefficients by enumerating k-subsets of range(n) by element sum."""
    if k < 0 or k > n:
        return []
    base = k * (k - 1) // 2
    counts = [0] * (k * (n - k) + 1)
    for combo in itertools.combinations(range(n), k):
        counts[sum(combo) - base] += 1
    return counts


def trial_division_primes(lo, hi):
    return [n for n in range(max(lo, 2), hi + 1) if all(n % d for d in range(2, int(n**0.5) + 1))]


@pytest.fixture
def brute_row():
    return brute_trinomial_row


_ACCEPTANCE: dict[str, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    cid, text = marker.args
    entry = _ACCEPTANCE.setdefault(cid, [text, True, False])
    if rep.when == "call":
        entry[2] = True
    if rep.failed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")

    def order(cid):
        return int(cid.lstrip("C"))

    for cid in sorted(_ACCEPTANCE, key=order):
        text, ok, ran = _ACCEPTANCE[cid]
        status = "PASS" if ok and ran else ("FAIL" if ran or not ok else "NOT RUN")
        terminalreporter.write_line(f"{status:4}  {cid:>3}  {text}")
