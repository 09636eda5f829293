"""Exhaustive invariant sweeps shared by the CLI and the acceptance tests.

Every sweep returns a plain dict with ``pass`` (bool), a ``checked`` count and
a ``failures`` list naming each failing instance.
"""

from __future__ import annotations

import os
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Callable, Iterable, Sequence

from .bwb import GrWeight, bwb, euler_characteristic, euler_characteristic_localized
from .characters import decompose_into_schur, schur_polynomial, weight_multiset
from .graderestrict import GammaSpec, gamma_weight, gamma_weight_range, grade_restriction_check
from .lascoux import grade_terms, main_theorem_terms, resolution_I
from .qpoly import gaussian_binomial
from .rickard import MatchingError, betti, cancellation_matching, copies_of_term, poincare_centered
from .tensorcalc import decompose_wedge_gl, lr_coefficients
from .weights import enumerate_dominant_in_interval, enumerate_in_box, pad, partitions_of
from .windows import (
    fixed_window,
    in_window,
    kernel_descriptor,
    magic_generators,
    shift_generators,
    shift_window_by_det,
    window_interval,
)

MAX_LISTED_FAILURES = 50


def worker_count() -> int:
    """Parallelism cap from ``WINDOWCALC_THREADS`` (default 1)."""
    raw = os.environ.get("WINDOWCALC_THREADS")
    if raw is None or raw == "":
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"WINDOWCALC_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"WINDOWCALC_THREADS must be a positive integer, got {raw!r}")
    return n


def parallel_map(fn: Callable, items: Sequence) -> list:
    """Order-preserving map, fanned out over processes when allowed."""
    n = worker_count()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(n, len(items))) as pool:
        return list(pool.map(fn, items))


def _result(checked: int, failures: list, **extra) -> dict:
    out = {
        "pass": not failures,
        "checked": checked,
        "failureCount": len(failures),
        "failures": failures[:MAX_LISTED_FAILURES],
    }
    out.update(extra)
    return out


def _merge(parts: Iterable[tuple[int, list]]) -> tuple[int, list]:
    checked, failures = 0, []
    for c, f in parts:
        checked += c
        failures.extend(f)
    return checked, failures


# -- Littlewood-Richardson against the character oracle ---------------------


def _lr_oracle_case(args: tuple[int, int]) -> tuple[int, list]:
    k, total = args
    parts = [p for n in range(total + 1) for p in partitions_of(n, max_parts=k)]
    checked, failures = 0, []
    for lam in parts:
        for mu in parts:
            if sum(lam) + sum(mu) > total:
                continue
            a, b = pad(lam, k), pad(mu, k)
            checked += 1
            oracle = decompose_into_schur(schur_polynomial(a) * schur_polynomial(b))
            if lr_coefficients(a, b) != oracle:
                failures.append({"k": k, "lambda": list(a), "mu": list(b)})
    return checked, failures


def verify_lr_oracle(kmax: int = 4, total: int = 8) -> dict:
    checked, failures = _merge(parallel_map(_lr_oracle_case, [(k, total) for k in range(1, kmax + 1)]))
    return _result(checked, failures, kmax=kmax, total=total)


# -- Lambda^r gl_k ----------------------------------------------------------


def verify_wedge_bound(kmax: int = 4) -> dict:
    checked, failures = 0, []
    for k in range(1, kmax + 1):
        for r in range(k * k + 1):
            dec = decompose_wedge_gl(r, k)
            if r in (0, k * k):
                checked += 1
                if dec != {(0,) * k: 1}:
                    failures.append({"k": k, "r": r, "decomposition": _dec_json(dec)})
                continue
            for mu in dec:
                checked += 1
                if mu[0] > k - 1 or mu[-1] < 1 - k:
                    failures.append({"k": k, "r": r, "mu": list(mu)})
    return _result(checked, failures, kmax=kmax)


def _cor_inv_case(args: tuple[int, int, tuple[int, ...], int]) -> tuple[int, list]:
    k, N, lam, r_max = args
    checked, failures = 0, []
    for r in range(r_max + 1):
        for mu in decompose_wedge_gl(r, k):
            for nu in lr_coefficients(lam, mu, k):
                checked += 1
                if not all(-k <= e < N - k for e in nu):
                    failures.append({"lambda": list(lam), "r": r, "mu": list(mu), "nu": list(nu)})
    return checked, failures


def verify_cor_inv(k: int, N: int, r_max: int | None = None) -> dict:
    """Every ``S^nu`` in ``S^lam (x) Lambda^r gl_k`` has entries in ``[-k, N-k)``
    for ``-1 <= lam_i <= N - 2k``."""
    if N < 2 * k - 1:
        raise ValueError(f"need N >= 2k - 1, got k={k}, N={N}")
    if r_max is None:
        r_max = k * k
    lams = enumerate_dominant_in_interval(k, -1, N - 2 * k + 1)
    checked, failures = _merge(parallel_map(_cor_inv_case, [(k, N, lam, r_max) for lam in lams]))
    return _result(checked, failures, k=k, N=N, rMax=r_max, weights=len(lams))


# -- Borel-Weil-Bott ---------------------------------------------------------


def _bwb_case(args: tuple[int, int, int, int]) -> tuple[int, list]:
    a, b, lo, hi = args
    checked, failures = 0, []
    for q in enumerate_dominant_in_interval(b - a, lo, hi + 1) if b > a else [()]:
        for s in enumerate_dominant_in_interval(a, lo, hi + 1) if a else [()]:
            g = GrWeight(a, b, q, s)
            checked += 1
            res = bwb(g)
            name = {"a": a, "b": b, "quotient": list(q), "sub": list(s)}
            if not res.is_zero:
                if res.degree > g.dim or list(res.weight) != sorted(res.weight, reverse=True):
                    failures.append(dict(name, check="range"))
            dual_res = bwb(g.dual_twisted_by_canonical())
            if res.is_zero != dual_res.is_zero or (
                not res.is_zero
                and (dual_res.degree != g.dim - res.degree or dual_res.weight != tuple(-e for e in reversed(res.weight)))
            ):
                failures.append(dict(name, check="serre"))
            if euler_characteristic(g) != euler_characteristic_localized(g):
                failures.append(dict(name, check="euler"))
    return checked, failures


def verify_bwb(bmax: int = 4, lo: int = -3, hi: int = 3) -> dict:
    """Dominance/degree range, Serre duality and the localization oracle on
    every ``Gr(a, b)`` with ``b <= bmax`` and entries in ``[lo, hi]``."""
    failures = []
    p1 = [((0,), 0, (0, 0)), ((1,), None, None), ((2,), 1, (1, 1))]
    for sub, deg, weight in p1:
        res = bwb(GrWeight(1, 2, (0,), sub))
        if (res.degree, res.weight) != (deg, weight):
            failures.append({"check": "P1", "sub": list(sub)})
    cases = [(a, b, lo, hi) for b in range(bmax + 1) for a in range(b + 1)]
    checked, rest = _merge(parallel_map(_bwb_case, cases))
    return _result(checked + len(p1), failures + rest, bmax=bmax, lo=lo, hi=hi)


# -- Rickard complex ---------------------------------------------------------


def verify_cancellation(imax: int = 8) -> dict:
    checked, failures = 0, []
    for i in range(1, imax + 1):
        checked += 1
        try:
            m = cancellation_matching(i)
        except MatchingError as exc:
            failures.append({"i": i, "error": str(exc)})
            continue
        if m.leftover.degree != -i * i - i:
            failures.append({"i": i, "leftoverDegree": m.leftover.degree})
        for l in range(1, i):
            for r in range(l * (i - l) + 1):
                checked += 1
                d0 = -l * l - l - 2 * i * (i - l) - 2 * r
                d1 = -((l - 1) ** 2) - (l - 1) - 2 * i * (i - l + 1) - 2 * (r - i + l)
                d2 = -((l + 1) ** 2) - (l + 1) - 2 * i * (i - l - 1) - 2 * (r + i - l - 1)
                if not d0 == d1 == d2:
                    failures.append({"i": i, "l": l, "r": r, "degrees": [d0, d1, d2]})
    return _result(checked, failures, imax=imax)


def verify_betti(imax: int = 10) -> dict:
    checked, failures = 0, []
    for i in range(imax + 1):
        for l in range(i + 1):
            gauss = gaussian_binomial(i, l)
            row = [betti(i, l, r) for r in range(l * (i - l) + 2)]
            checked += 1
            if any(row[r] != gauss[r] for r in range(len(row))) or sum(row) != comb(i, l):
                failures.append({"i": i, "l": l, "betti": row})
            if l < i and len(copies_of_term(i, l)) != comb(i, l):
                failures.append({"i": i, "l": l, "check": "copy count"})
            p = poincare_centered(l, i)
            if p != p.bar() or p.at_one() != comb(i, l):
                failures.append({"i": i, "l": l, "check": "poincare symmetry"})
    return _result(checked, failures, imax=imax)


# -- Lascoux resolutions -----------------------------------------------------


def verify_lem_resolni(kmax: int = 3) -> dict:
    """Every ``lam`` on ``V'`` in the resolutions lies in the ``[0, k]`` box."""
    checked, failures = 0, []
    for k in range(1, kmax + 1):
        for i in range(k + 1):
            for term in resolution_I(k, i):
                for c in term.contributions:
                    lam = c.coefficient("V'")
                    checked += 1
                    if not all(0 <= e <= k for e in lam):
                        failures.append({"k": k, "i": i, "index": term.index, "lambda": list(lam)})
    return _result(checked, failures, kmax=kmax)


def _eq_las_case(args) -> tuple[int, list]:
    k, N, mu, lam = args
    checked, failures = 0, []
    for term in main_theorem_terms(k, N, mu, lam):
        for c in term.contributions:
            xi = c.coefficient("V'")
            checked += 1
            if term.index > 0 or not all(0 <= e < N for e in xi):
                failures.append({"mu": list(mu), "lambda": list(lam), "index": term.index, "xi": list(xi)})
    return checked, failures


def verify_eq_las(k: int, N: int, mu_box: int | None = None) -> dict:
    """``xi`` on ``V'`` stays in ``[0, N)`` for ``mu`` in a ``k x mu_box`` box
    and ``lam`` with entries in ``[0, k)``."""
    if mu_box is None:
        mu_box = k
    cases = [
        (k, N, pad(mu, k), lam)
        for mu in enumerate_in_box(k, mu_box)
        for lam in enumerate_dominant_in_interval(k, 0, k)
    ]
    checked, failures = _merge(parallel_map(_eq_las_case, cases))
    return _result(checked, failures, k=k, N=N, muBox=mu_box, cases=len(cases))


# -- grade restriction -------------------------------------------------------


def verify_gamma_ranges(kmax: int = 3, top: int = 4) -> dict:
    """Closed-form gamma ranges against the weight-multiset brute force."""
    checked, failures = 0, []
    for k in range(1, kmax + 1):
        for lam in enumerate_dominant_in_interval(k, 0, top + 1):
            weights = weight_multiset(lam)
            for i in range(1, k + 1):
                g = GammaSpec(k, i)
                vals = [gamma_weight(g, nu) for nu in weights]
                r = gamma_weight_range(g, (0,) * k, lam)
                checked += 1
                if (r.min, r.max) != (min(vals), max(vals)):
                    failures.append({"k": k, "i": i, "lambda": list(lam)})
    return _result(checked, failures, kmax=kmax, top=top)


def verify_grade_restriction(kmax: int = 4) -> dict:
    failures = []
    checked = 0
    for k in range(1, kmax + 1):
        gens = enumerate_dominant_in_interval(k, 0, k)
        report = grade_restriction_check([((0,) * k, lam, 1) for lam in gens], k)
        checked += 1
        if not report.passed:
            failures.append({"k": k, "check": "generators", "report": report.as_dict()})
        # every S^lam V' with lam in the [0, k] box has gamma_i-weights in [0, ik]
        box = enumerate_dominant_in_interval(k, 0, k + 1)
        report = grade_restriction_check([((0,) * k, lam, 1) for lam in box], k)
        checked += 1
        if not report.passed_closed:
            failures.append({"k": k, "check": "closed box", "report": report.as_dict()})
    ranges = verify_gamma_ranges(min(kmax, 3))
    checked += ranges["checked"]
    failures.extend(ranges["failures"])
    return _result(checked, failures, kmax=kmax)


def verify_resolution_grading(kmax: int = 3) -> dict:
    """Resolution terms stay in the closed window ``[0, ik]`` for every ``i``."""
    checked, failures = 0, []
    for k in range(1, kmax + 1):
        for l in range(k + 1):
            report = grade_restriction_check(grade_terms(resolution_I(k, l)), k)
            checked += 1
            if not report.passed_closed:
                failures.append({"k": k, "l": l})
    return _result(checked, failures, kmax=kmax)


# -- window bookkeeping -------------------------------------------------------


def verify_window_bookkeeping(kmax: int = 4, Nmax: int = 8) -> dict:
    checked, failures = 0, []
    for N in range(1, Nmax + 1):
        for m in range(N + 1):
            for n in range(m, N + 1):
                checked += 1
                e = kernel_descriptor("E", m, n, N)
                f = kernel_descriptor("F", m, n, N)
                fp = kernel_descriptor("Fprime", m, n, N)
                i, k = n - m, n
                if (e.internal_shift, f.internal_shift, fp.internal_shift) != (m * n - n * n, m * n - m * m, i * k - i * i):
                    failures.append({"m": m, "n": n, "N": N, "check": "shifts"})
                if e.internal_shift + f.internal_shift != -((n - m) ** 2):
                    failures.append({"m": m, "n": n, "N": N, "check": "E+F"})
        checked += 1
        gens = magic_generators(1, window_interval(N, Fraction(N - 3, 2)))
        if len(gens) != N:
            failures.append({"N": N, "check": "k=1 count", "count": len(gens)})
        for k in range(1, min(kmax, N // 2) + 1):
            w = fixed_window(k, N)
            shifted = shift_window_by_det(w, 1)
            checked += 1
            if (w.lo, w.hi, shifted.lo, shifted.hi) != (-k, N - k, -k + 1, N - k + 1):
                failures.append({"k": k, "N": N, "check": "interval shift"})
            moved = shift_generators(magic_generators(k, w), 1)
            target = magic_generators(k, shifted)
            if sorted(moved) != target or len(set(moved)) != len(moved):
                failures.append({"k": k, "N": N, "check": "generator bijection"})
            if not all(in_window(g, w) for g in magic_generators(k, w)):
                failures.append({"k": k, "N": N, "check": "in_window"})
    return _result(checked, failures, kmax=kmax, Nmax=Nmax)


def _dec_json(dec) -> dict:
    return {",".join(map(str, w)): m for w, m in dec.items()}
