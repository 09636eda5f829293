"""``window-calculus`` command-line entry point.

Every subcommand builds a report ``{schemaVersion, command, parameters,
results, pass}``.  ``--json`` prints it as canonical JSON; otherwise a short
table goes to stdout.  Exit codes: 0 success, 1 verification failure,
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable

from . import verify
from .bwb import GrWeight, bwb, euler_characteristic
from .lascoux import grassmannian_pushforward, main_theorem_terms, resolution_I
from .rickard import MatchingError, betti, cancellation_matching, poincare_centered, term_catalog
from .tensorcalc import decompose_wedge_gl, lr_coefficients
from .weights import WeightError
from .windows import GenericityError, in_window, magic_generators, window_interval

SCHEMA_VERSION = 1
PASS, FAIL, NA = "pass", "fail", "n/a"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_weight(text: str) -> tuple[int, ...]:
    """``'2,1,0'`` -> ``(2, 1, 0)``; the empty string is the empty weight."""
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated weight: {text!r}") from None


def _decomposition(dec) -> list[dict]:
    return [{"weight": list(w), "mult": m} for w, m in dec.items()]


# -- computations --------------------------------------------------------------


def cmd_window(a):
    w = window_interval(a.N, a.delta, a.k)
    res = {"lo": w.lo, "hi": w.hi, "delta": str(w.delta)}
    if a.weight is not None:
        res["contains"] = in_window(a.weight, w)
    return {"N": a.N, "delta": a.delta, "k": a.k, "weight": a.weight}, res, NA


def cmd_generators(a):
    w = window_interval(a.N, a.delta, a.k)
    gens = magic_generators(a.k, w)
    return (
        {"k": a.k, "N": a.N, "delta": a.delta},
        {"window": [w.lo, w.hi], "count": len(gens), "generators": [list(g) for g in gens]},
        NA,
    )


def cmd_lr(a):
    k = a.k if a.k is not None else max(len(a.lam), len(a.mu))
    dec = lr_coefficients(a.lam, a.mu, k)
    return {"lambda": list(a.lam), "mu": list(a.mu), "k": k}, {"decomposition": _decomposition(dec)}, NA


def cmd_wedge_gl(a):
    dec = decompose_wedge_gl(a.r, a.k)
    return {"r": a.r, "k": a.k}, {"decomposition": _decomposition(dec)}, NA


def cmd_bwb(a):
    g = GrWeight(a.a, a.b, a.quotient, a.sub)
    res = bwb(g)
    out = {
        "zero": res.is_zero,
        "degree": res.degree,
        "weight": None if res.is_zero else list(res.weight),
        "euler": [{"weight": list(w), "coeff": c} for w, c in euler_characteristic(g).items()],
    }
    return {"a": a.a, "b": a.b, "quotient": list(a.quotient), "sub": list(a.sub)}, out, NA


def cmd_poincare(a):
    m = a.m if a.m is not None else a.pos_m
    n = a.n if a.n is not None else a.pos_n
    if m is None or n is None:
        raise UsageError("poincare needs m and n")
    p = poincare_centered(m, n)
    return {"m": m, "n": n}, {"coefficients": {str(d): c for d, c in p.coeffs().items()}, "text": repr(p)}, NA


def cmd_betti(a):
    rs = [a.r] if a.r is not None else list(range(a.l * (a.i - a.l) + 1))
    values = {str(r): betti(a.i, a.l, r) for r in rs}
    return {"i": a.i, "l": a.l, "r": a.r}, {"betti": values, "total": sum(values.values())}, NA


def cmd_rickard_catalog(a):
    terms = [{"i": t.i, "kernel": t.kernel, "shift": t.internal_shift, "support": t.support} for t in term_catalog(a.k)]
    return {"k": a.k}, {"terms": terms}, NA


def cmd_rickard_cancel(a):
    try:
        m = cancellation_matching(a.i)
    except MatchingError as exc:
        return {"i": a.i}, {"error": str(exc)}, FAIL
    left = m.leftover.as_dict()
    res = {
        "pairs": len(m.pairs),
        "matched": [[c.as_dict(), d.as_dict()] for c, d in m.pairs],
        "leftover": {"l": left["l"], "lambda": left["lambda"], "degree": left["degree"]},
        "leftoverDegreeAlt": m.leftover_degree_alt,
    }
    return {"i": a.i}, res, PASS


def cmd_lascoux(a):
    if a.mode == "resolution":
        _need(a, "k", "i")
        terms, params = resolution_I(a.k, a.i), {"k": a.k, "i": a.i}
    elif a.mode == "main":
        _need(a, "k", "N", "mu", "lam")
        terms = main_theorem_terms(a.k, a.N, a.mu, a.lam)
        params = {"k": a.k, "N": a.N, "mu": list(a.mu), "lambda": list(a.lam)}
    else:
        _need(a, "i", "l")
        terms, params = grassmannian_pushforward(a.i, a.l), {"i": a.i, "l": a.l}
    params["mode"] = a.mode
    return params, {"terms": [t.as_dict() for t in terms]}, NA


def _need(a, *names):
    missing = [n for n in names if getattr(a, n) is None]
    if missing:
        raise UsageError(f"lascoux --mode {a.mode} needs " + ", ".join("--" + n for n in missing))


# -- verifications ----------------------------------------------------------------


def _verdict(res: dict) -> str:
    return PASS if res["pass"] else FAIL


def cmd_verify_cor_inv(a):
    res = verify.verify_cor_inv(a.k, a.N, a.r_max)
    return {"k": a.k, "N": a.N, "rMax": res["rMax"]}, res, _verdict(res)


def cmd_verify_lem_resolni(a):
    res = verify.verify_lem_resolni(a.kmax)
    return {"kmax": a.kmax}, res, _verdict(res)


def cmd_verify_grade_restriction(a):
    res = verify.verify_grade_restriction(a.kmax)
    return {"kmax": a.kmax}, res, _verdict(res)


def cmd_verify_eq_las(a):
    res = verify.verify_eq_las(a.k, a.N, a.mu_box)
    return {"k": a.k, "N": a.N, "muBox": res["muBox"]}, res, _verdict(res)


# -- plumbing -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="window-calculus", description="Exact weight combinatorics for windows and the Rickard flop complex.")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as canonical JSON")
    common.add_argument("--timing", action="store_true", help="include elapsedMs in the report")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=fn)
        return sp

    sp = add("window", cmd_window, "window interval for (N, delta)")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--delta", required=True, help="rational, e.g. 3/2")
    sp.add_argument("--k", type=int)
    sp.add_argument("--weight", type=parse_weight, help="test membership of a dominant weight")

    sp = add("generators", cmd_generators, "magic-window generators")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--delta", required=True)

    sp = add("lr", cmd_lr, "Littlewood-Richardson decomposition of S^lam (x) S^mu")
    sp.add_argument("--lam", type=parse_weight, required=True)
    sp.add_argument("--mu", type=parse_weight, required=True)
    sp.add_argument("--k", type=int)

    sp = add("wedge-gl", cmd_wedge_gl, "decompose Lambda^r gl_k")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = add("bwb", cmd_bwb, "Borel-Weil-Bott on Gr(a, b)")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--quotient", type=parse_weight, default=None)
    sp.add_argument("--sub", type=parse_weight, default=None)

    sp = add("poincare", cmd_poincare, "centred Poincare polynomial of Gr(m, n)")
    sp.add_argument("pos_m", nargs="?", type=int, metavar="m")
    sp.add_argument("pos_n", nargs="?", type=int, metavar="n")
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)

    sp = add("betti", cmd_betti, "Betti numbers of Gr(i - l, i)")
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--r", type=int)

    sp = add("rickard-catalog", cmd_rickard_catalog, "terms of the Rickard complex")
    sp.add_argument("--k", type=int, required=True)

    sp = add("rickard-cancel", cmd_rickard_cancel, "cancellation matching on the i-th stratum")
    sp.add_argument("--i", type=int, required=True)

    sp = add("lascoux", cmd_lascoux, "Lascoux resolution terms")
    sp.add_argument("--mode", choices=["resolution", "main", "grassmannian"], default="resolution")
    sp.add_argument("--k", type=int)
    sp.add_argument("--i", type=int)
    sp.add_argument("--l", type=int)
    sp.add_argument("--N", type=int)
    sp.add_argument("--mu", type=parse_weight)
    sp.add_argument("--lam", type=parse_weight)

    sp = add("verify-cor-inv", cmd_verify_cor_inv, "S^lam (x) Lambda^r gl_k stays in [-k, N-k)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--r-max", type=int, dest="r_max")

    sp = add("verify-lem-resolni", cmd_verify_lem_resolni, "box property of the resolutions")
    sp.add_argument("--kmax", type=int, default=3)

    sp = add("verify-grade-restriction", cmd_verify_grade_restriction, "grade restriction of window generators")
    sp.add_argument("--kmax", type=int, default=4)

    sp = add("verify-eq-las", cmd_verify_eq_las, "window property of the main Lascoux terms")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--mu-box", type=int, dest="mu_box")
    return p


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, ensure_ascii=False, separators=(",", ": "), indent=2)


def _table(report: dict) -> str:
    lines = [f"command: {report['command']}", f"pass: {report['pass']}"]
    for key, val in sorted(report["parameters"].items()):
        if val is not None:
            lines.append(f"  {key} = {_short(val)}")
    for key, val in sorted(report["results"].items()):
        if isinstance(val, list) and val and isinstance(val[0], (dict, list)):
            lines.append(f"{key}:")
            lines.extend(f"  {_short(v)}" for v in val)
        else:
            lines.append(f"{key}: {_short(val)}")
    return "\n".join(lines)


def _short(val) -> str:
    if isinstance(val, (dict, list)):
        return json.dumps(val, sort_keys=True, ensure_ascii=False)
    return str(val)


def run(argv: list[str] | None = None) -> tuple[int, dict | None]:
    """Execute ``argv`` and return ``(exit code, report)``; prints the report."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        verify.worker_count()
        if args.command == "bwb":
            args.quotient = args.quotient if args.quotient is not None else (0,) * (args.b - args.a)
            args.sub = args.sub if args.sub is not None else (0,) * args.a
        start = time.perf_counter()
        params, results, verdict = args.func(args)
        elapsed = (time.perf_counter() - start) * 1000
    except UsageError as exc:
        print(f"window-calculus: error: {exc}", file=sys.stderr)
        return 2, None
    except (ValueError, ArithmeticError, WeightError, GenericityError) as exc:
        print(f"window-calculus: error: {exc}", file=sys.stderr)
        return 2, None
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "command": args.command,
        "parameters": params,
        "results": results,
        "pass": verdict,
    }
    if args.timing:
        report["elapsedMs"] = round(elapsed)
    print(dumps(report) if args.json else _table(report))
    if verdict == FAIL:
        print(f"window-calculus: {args.command} failed: {_first_failure(results)}", file=sys.stderr)
        return 1, report
    return 0, report


def _first_failure(results: dict) -> str:
    failures = results.get("failures") or [results.get("error")]
    return _short(failures[0])


def main(argv: list[str] | None = None) -> int:
    try:
        code, _ = run(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return code


if __name__ == "__main__":
    sys.exit(main())
