"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the status lines are written
straight to the terminal even when output capture is on.
"""

import io
import json
import time
from contextlib import redirect_stdout

import pytest

from window_calculus import cli, verify
from window_calculus.qpoly import QPolynomial
from window_calculus.rickard import poincare_centered


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, elapsed_s, limit_s=None, detail=""):
        budget = "" if limit_s is None else f" (limit {limit_s:g} s)"
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] AC{number:<2} {title}: {elapsed_s * 1000:.2f} ms{budget}"
        if detail:
            line += f" -- {detail}"
        with capsys.disabled():
            print("\n" + line)
        return ok

    return emit


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def check(res, elapsed, limit):
    ok = res["pass"] and (limit is None or elapsed < limit)
    detail = f"{res['checked']} instances, {res['failureCount']} failures"
    if res["failures"]:
        detail += f", first: {res['failures'][0]}"
    return ok, detail


def test_ac01_poincare_gr24(report):
    expected = QPolynomial({-4: 1, -2: 1, 0: 2, 2: 1, 4: 1})
    poly, elapsed = timed(poincare_centered, 2, 4)
    buf = io.StringIO()
    with redirect_stdout(buf):
        code, _ = cli.run(["poincare", "2", "4", "--json"])
    coeffs = {int(d): c for d, c in json.loads(buf.getvalue())["results"]["coefficients"].items()}
    ok = poly == expected and code == 0 and coeffs == expected.coeffs() and elapsed < 1e-3
    report(1, "H*(Gr(2,4)) = q^-4+q^-2+2+q^2+q^4", ok, elapsed, 1e-3, repr(poly))
    assert ok


def test_ac02_lr_oracle(report):
    res, elapsed = timed(verify.verify_lr_oracle, 4, 8)
    ok, detail = check(res, elapsed, 60)
    report(2, "LR rule == character oracle, k<=4, |lam|+|mu|<=8", ok, elapsed, 60, detail)
    assert ok


def test_ac03_cor_inv(report):
    results = []
    start = time.perf_counter()
    for N in (5, 6):
        results.append(verify.verify_cor_inv(2, N, r_max=4))
    elapsed = time.perf_counter() - start
    merged = {
        "pass": all(r["pass"] for r in results),
        "checked": sum(r["checked"] for r in results),
        "failureCount": sum(r["failureCount"] for r in results),
        "failures": [f for r in results for f in r["failures"]],
    }
    ok, detail = check(merged, elapsed, 30)
    report(3, "S^lam (x) Lambda^r gl_2 in [-k, N-k), N in {5,6}", ok, elapsed, 30, detail)
    assert ok


def test_ac04_wedge_bound(report):
    res, elapsed = timed(verify.verify_wedge_bound, 4)
    ok, detail = check(res, elapsed, 60)
    report(4, "Lambda^r gl_k has mu_1 <= k-1, k<=4", ok, elapsed, 60, detail)
    assert ok


def test_ac05_cancellation(report):
    res, elapsed = timed(verify.verify_cancellation, 8)
    ok, detail = check(res, elapsed, 1)
    report(5, "cancellation matching and degree identity, i<=8", ok, elapsed, 1, detail)
    assert ok


def test_ac06_betti(report):
    res, elapsed = timed(verify.verify_betti, 10)
    ok, detail = check(res, elapsed, None)
    report(6, "betti == Gaussian binomial coefficients, i<=10", ok, elapsed, None, detail)
    assert ok


def test_ac07_bwb(report):
    res, elapsed = timed(verify.verify_bwb, 4, -3, 3)
    ok, detail = check(res, elapsed, 120)
    report(7, "BWB: P^1 triple, Serre duality, Euler vs oracle, b<=4", ok, elapsed, 120, detail)
    assert ok


def test_ac08_resolution_box(report):
    res, elapsed = timed(verify.verify_lem_resolni, 3)
    ok, detail = check(res, elapsed, None)
    report(8, "resolution terms in the [0,k] box, k<=3", ok, elapsed, None, detail)
    assert ok


def test_ac09_lascoux_window(report):
    results = []
    start = time.perf_counter()
    for N in (4, 5):
        results.append(verify.verify_eq_las(2, N))
    elapsed = time.perf_counter() - start
    merged = {
        "pass": all(r["pass"] for r in results),
        "checked": sum(r["checked"] for r in results),
        "failureCount": sum(r["failureCount"] for r in results),
        "failures": [f for r in results for f in r["failures"]],
    }
    ok, detail = check(merged, elapsed, 120)
    report(9, "contracted xi in [0,N), k=2, N in {4,5}", ok, elapsed, 120, detail)
    assert ok


def test_ac10_grade_restriction(report):
    res, elapsed = timed(verify.verify_grade_restriction, 4)
    ok, detail = check(res, elapsed, None)
    report(10, "window generators pass grade restriction, k<=4", ok, elapsed, None, detail)
    assert ok


def test_ac11_window_bookkeeping(report):
    res, elapsed = timed(verify.verify_window_bookkeeping, 4, 8)
    ok, detail = check(res, elapsed, None)
    report(11, "kernel shifts, k=1 count, det-shift bijection", ok, elapsed, None, detail)
    assert ok
