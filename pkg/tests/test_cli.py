import csv
import io
import json
import subprocess
import sys

import pytest

from trinom import congruences as cg
from trinom.cli import main, parse_prime_range
from trinom.congruences import CongruenceResult


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv,expected", [
    (["compute", "trinomial", "10", "5"], "1452"),
    (["compute", "trinomial", "10", "-5", "--method", "alternating"], "1452"),
    (["compute", "q-integer", "3"], "[1, 1, 1]"),
    (["compute", "binomial", "9", "4"], "126"),
    (["compute", "catalan", "4"], "14"),
    (["compute", "super-catalan", "2", "1"], "4"),
    (["compute", "q-binomial", "4", "2"], "[1, 1, 2, 1, 1]"),
    (["compute", "q-binomial", "2", "1", "2"], "[1, 0, 1]"),
    (["compute", "t1", "2", "0"], "[1, 1, 1]"),
    (["compute", "t2", "1", "0"], "[0, 1]"),
    (["compute", "t3", "1", "0"], "[1]"),
    (["compute", "q-binomial", "4", "2", "--pretty"], "1 + q + 2q^2 + q^3 + q^4"),
])
def test_compute(argv, expected):
    code, out = run(argv)
    assert code == 0 and out.strip() == expected


def test_compute_json_and_csv():
    code, out = run(["compute", "t1", "2", "0", "--format", "json"])
    assert code == 0 and json.loads(out) == {"quantity": "t1", "args": [2, 0], "value": [1, 1, 1]}
    code, out = run(["compute", "trinomial", "4", "0", "--format", "csv"])
    assert list(csv.reader(io.StringIO(out))) == [["quantity", "args", "value"], ["trinomial", "4 0", "19"]]


@pytest.mark.parametrize("argv", [
    ["compute", "trinomial", "2"],
    ["compute", "trinomial", "1", "2", "3"],
    ["compute", "nosuch", "1"],
    ["compute", "q-integer", "0"],
    ["compute", "catalan", "-1"],
    ["compute", "trinomial", "-1", "0"],
    ["compute", "q-binomial", "3", "1", "0"],
    ["verify", "nosuch", "--primes", "5..7"],
    ["verify", "theorem1", "--primes", "7..5"],
    ["verify", "theorem1", "--primes", "5-7"],
    ["verify", "theorem1", "--primes", "1..7"],
    ["verify", "theorem1", "--jobs", "0"],
    ["verify", "theorem1", "--format", "xml"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(argv)
    assert code == 2


def test_prime_range_parser():
    assert parse_prime_range("5..97") == (5, 97)
    assert parse_prime_range("5..5") == (5, 5)


def test_verify_theorem1_table():
    code, out = run(["verify", "theorem1", "--primes", "5..97"])
    assert code == 0
    rows = [line for line in out.splitlines() if line.startswith("theorem1 ")]
    assert len(rows) == 23 and all(line.endswith("pass") for line in rows)


def test_verify_all_json_document():
    code, out = run(["verify", "all", "--primes", "5..13", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"prime_range", "statements", "results", "skipped", "failures", "elapsed_ms"}
    assert doc["prime_range"] == [5, 13] and doc["failures"] == 0
    assert doc["statements"] == list(cg.CHECKS)
    assert isinstance(doc["elapsed_ms"], int)
    for r in doc["results"]:
        assert set(r) == {"statement", "prime", "params", "lhs", "rhs", "modulus", "passed"}


def test_json_round_trip_and_format_agreement():
    argv = ["verify", "all", "--primes", "3..11", "--no-timing"]
    _, js = run(argv + ["--format", "json"])
    _, cs = run(argv + ["--format", "csv"])
    _, tb = run(argv + ["--format", "table"])
    report = cg.run_suite(3, 11, ["all"])
    parsed = [CongruenceResult.from_dict(d) for d in json.loads(js)["results"]]
    assert parsed == report.results

    def params_text(p):
        return ";".join(f"{k}={v}" for k, v in sorted(p.items()))

    from_json = [(r.statement, str(r.prime), params_text(r.params), r.passed) for r in parsed]
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert list(rows[0]) == ["statement", "prime", "params", "lhs", "rhs", "modulus", "passed"]
    from_csv = [(r["statement"], r["prime"], r["params"], r["passed"] == "true") for r in rows]
    assert from_csv == from_json
    table_rows = [line.split() for line in tb.splitlines()[1 : 1 + len(parsed)]]
    from_table = [(t[0], t[1], "" if t[2] == "-" else t[2], t[-1] == "pass") for t in table_rows]
    assert from_table == from_json
    for row, r in zip(rows, parsed):
        if r.is_polynomial:
            assert json.loads(row["lhs"]) == list(r.lhs)
        else:
            assert int(row["lhs"]) == r.lhs and int(row["modulus"]) == r.modulus


def test_env_default_format(monkeypatch):
    monkeypatch.setenv("TRINOM_DEFAULT_FORMAT", "json")
    code, out = run(["verify", "theorem1", "--primes", "5..7"])
    assert code == 0 and json.loads(out)["failures"] == 0
    code, out = run(["verify", "theorem1", "--primes", "5..7", "--format", "csv"])
    assert out.startswith("statement,prime,params")
    monkeypatch.setenv("TRINOM_DEFAULT_FORMAT", "yaml")
    code, _ = run(["verify", "theorem1", "--primes", "5..7"])
    assert code == 2


def test_failure_exit_1_and_fail_fast(monkeypatch):
    def broken(p, engine):
        return [CongruenceResult("theorem1", p, {}, 1, 2, p * p, False)]

    monkeypatch.setitem(cg.CHECKS, "theorem1", (5, broken))
    code, out = run(["verify", "theorem1", "--primes", "5..13", "--format", "json"])
    assert code == 1 and json.loads(out)["failures"] == 4
    code, out = run(["verify", "theorem1", "--primes", "5..13", "--format", "json", "--fail-fast"])
    assert code == 1 and len(json.loads(out)["results"]) == 1
    code, out = run(["verify", "theorem1", "--primes", "5..13", "--fail-fast"])
    assert code == 1 and "FAIL" in out and "--fail-fast" in out


def test_conjecture_counterexample_is_flagged(monkeypatch):
    def refuted(p, engine):
        return [CongruenceResult("conjecture", p, {}, (0,), (1,), f"[{p}]_q^2", p != 11)]

    monkeypatch.setitem(cg.CHECKS, "conjecture", (5, refuted))
    code, out = run(["verify", "conjecture", "--primes", "5..13"])
    assert code == 1
    assert "COUNTEREXAMPLE" in out and "conjecture counterexample at p=11" in out
    code, out = run(["verify", "conjecture", "--primes", "5..13", "--format", "json"])
    assert json.loads(out)["conjecture_counterexamples"] == [11]


def test_modular_engine_same_output():
    base = ["verify", "theorem1", "theorem2", "theorem3", "--primes", "5..61", "--format", "json", "--no-timing"]
    assert run(base)[1] == run(base + ["--engine", "modular"])[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "trinom", "compute", "trinomial", "10", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1452"
    proc = subprocess.run([sys.executable, "-m", "trinom", "compute", "trinomial", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "usage" in proc.stderr
