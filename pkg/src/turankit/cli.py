"""Command-line front end.

Two subcommands:

* ``verify``   run one theorem case or the default grid suites and emit a
  JSON report (plus an optional CSV of per-index coefficient signs);
* ``explore``  scan the conjectured monotone cross-ratio along an x grid
  and emit a JSON summary plus a plot-ready CSV.

Exit codes: 0 all cases verified (inconclusive cases produce a stderr
warning but still exit 0), 1 at least one certified violation, 2 bad
configuration.  Identical configuration (including seed) produces a
byte-identical JSON report; worker-pool parallelism never reorders the
output because reports are assembled in input order.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import DomainError, TermCapError
from .evalf import default_log_grid, explore_conjecture
from .intervals import get_precision, set_precision
from .series import (gauss_lower, gauss_upper, kummer_gamma, kummer_lower,
                     kummer_upper, binomial_upper)
from .verify import (GRID_DELTAS, GRID_X_POS, SignReport, TwoSidedBoundReport,
                     Verdict, suite_corollary, suite_turan, verify_corollary_twosided,
                     verify_theorem1, verify_theorem2, verify_theorem3,
                     verify_turan, GRID_SHIFTS, GRID_C_1F1, GRID_2F1_UPPER,
                     GRID_A0_1F1, GRID_2F1_LOWER)

THEOREMS = ("thm1", "thm2", "thm3", "binomial", "corollary", "turan", "all")
FAMILIES = ("1f1-upper", "1f1-gamma", "1f1-lower", "2f1-upper", "2f1-lower",
            "binomial")
_DEFAULT_M = {"thm1": 40, "thm2": 30, "thm3": 40, "binomial": 40}


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _rational_list(text: str) -> list[Fraction]:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("empty grid")
    return [_rational(t.strip()) for t in items]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="turankit")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run sign-theorem and bound checks")
    v.add_argument("--theorem", choices=THEOREMS, required=True)
    v.add_argument("--family", choices=FAMILIES)
    v.add_argument("--a", type=_rational, help="first shift")
    v.add_argument("--b", type=_rational, help="second shift")
    v.add_argument("--delta", type=_rational, help="shift increment")
    v.add_argument("--c", type=_rational,
                   help="denominator weight parameter (upper/gamma families)")
    v.add_argument("--a0", type=_rational,
                   help="denominator weight parameter (lower families)")
    v.add_argument("--b0", type=_rational,
                   help="numerator weight parameter (2f1 families)")
    v.add_argument("--M", type=int, help="truncation order")
    v.add_argument("--x-grid", type=_rational_list,
                   help="comma-separated x values for bound checks")
    v.add_argument("--grid", choices=("default",),
                   help="run the default parameter grids")
    v.add_argument("--tol", type=_rational, help="evaluation tolerance")
    v.add_argument("--precision", type=int, help="working decimal digits")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out-json")
    v.add_argument("--out-csv")

    e = sub.add_parser("explore", help="scan the conjectured monotone ratio")
    e.add_argument("--a", type=_rational, default=Fraction(1))
    e.add_argument("--b", type=_rational, default=Fraction(2))
    e.add_argument("--delta", type=_rational, default=Fraction(1))
    e.add_argument("--c", type=_rational, default=Fraction(3))
    e.add_argument("--branch", choices=("positive", "negative"),
                   default="positive")
    e.add_argument("--points", type=int, default=64)
    e.add_argument("--x-max", type=_rational, default=Fraction(50))
    e.add_argument("--x-grid", type=_rational_list,
                   help="explicit grid overriding --points/--x-max")
    e.add_argument("--tol", type=_rational)
    e.add_argument("--precision", type=int)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--out-json")
    e.add_argument("--out-csv")
    return p


def _spec_for(family: str, p: dict, M: int):
    if family == "1f1-upper":
        return kummer_upper(p["c"], M)
    if family == "1f1-gamma":
        return kummer_gamma(p["c"], M)
    if family == "1f1-lower":
        return kummer_lower(p["a0"], M)
    if family == "2f1-upper":
        return gauss_upper(p["b0"], p["c"], M)
    if family == "2f1-lower":
        return gauss_lower(p["a0"], p["b0"], M)
    if family == "binomial":
        return binomial_upper(M)
    raise DomainError(f"unknown family {family!r}")


def _run_case(case: dict) -> dict:
    """Worker entry: run one case and return a JSON-ready record.  Kept
    at module level so process pools can pickle it."""
    set_precision(case["precision"])
    theorem = case["theorem"]
    params = {k: Fraction(v) for k, v in case["params"].items()}
    weight_keys = {"c", "a0", "b0"}
    try:
        if theorem in ("thm1", "thm2", "thm3", "binomial"):
            spec = _spec_for(case["family"], params, case["M"])
            fn = {"thm1": verify_theorem1, "binomial": verify_theorem1,
                  "thm2": verify_theorem2, "thm3": verify_theorem3}[theorem]
            rep = fn(spec, params["a"], params["b"], params["delta"], case["M"])
            return _sign_record(theorem, case, rep)
        xs = [Fraction(x) for x in case["x_grid"]]
        tol = Fraction(case["tol"]) if case.get("tol") else None
        spec = _spec_for(case["family"], params, _DEFAULT_M["thm1"])
        if theorem == "corollary":
            rep = verify_corollary_twosided(spec, params["a"], params["b"],
                                            params["delta"], xs, tol)
        else:
            rep = verify_turan(spec, params["a"], params["delta"], xs, tol)
        return _bound_record(theorem, case, rep)
    except TermCapError as exc:
        return {"theorem": theorem, "params": case["params"],
                "verdict": Verdict.INCONCLUSIVE.value, "first_violation": None,
                "details": {"family": case["family"], "reason": str(exc)},
                "csv_rows": []}


def _sign_record(theorem: str, case: dict, rep: SignReport) -> dict:
    counts: dict = {}
    for s in rep.per_index_sign:
        counts[s.value] = counts.get(s.value, 0) + 1
    params = {k: str(v) for k, v in rep.params.items()}
    for k in ("c", "a0", "b0"):
        if k in case["params"]:
            params[k] = case["params"][k]
    rows = [[theorem, _pstr(params), str(m), s.value]
            for m, s in enumerate(rep.per_index_sign)]
    return {
        "theorem": theorem,
        "params": params,
        "verdict": rep.verdict.value,
        "first_violation": rep.first_violation,
        "details": {
            "family": case["family"],
            "truncation_order": rep.truncation_order,
            "sign_counts": counts,
            "mk_single_sign_change": rep.mk_single_sign_change,
            "mk_all_negative": rep.mk_all_negative,
            "escalated": rep.escalated,
            "inconclusive_before_escalation": rep.inconclusive_before_escalation,
            "reason": rep.reason,
        },
        "csv_rows": rows,
    }


def _bound_record(theorem: str, case: dict, rep: TwoSidedBoundReport) -> dict:
    params = {k: str(v) for k, v in rep.params.items()}
    for k in ("c", "a0", "b0"):
        if k in case["params"]:
            params[k] = case["params"][k]
    within = [w if w is None else bool(w) for w in rep.within]
    rows = [[theorem, _pstr(params), str(x), json.dumps(w)]
            for x, w in zip(rep.x_grid, within)]
    return {
        "theorem": theorem,
        "params": params,
        "verdict": rep.verdict.value,
        "first_violation": None,
        "details": {
            "family": case["family"],
            "x_grid": [str(x) for x in rep.x_grid],
            "within": within,
            "lower_bound": repr(float(rep.lower_bound.midpoint)),
            "rel_gap_at_top": rep.rel_gap_at_top,
            "approaches_lower": rep.approaches_lower,
            "reason": None,
        },
        "csv_rows": rows,
    }


def _pstr(params: dict) -> str:
    return ";".join(f"{k}={params[k]}" for k in sorted(params))


def _shift_pairs():
    return [(a, b) for a in GRID_SHIFTS for b in GRID_SHIFTS if b > a]


def _default_cases(theorem: str, M: int | None, tol, precision: int) -> list[dict]:
    """Expand a theorem selector into independent case dicts (the unit of
    worker-pool parallelism)."""

    def sign_cases(tid, fam_params, m_default):
        out = []
        for fam, wp in fam_params:
            for a, b in _shift_pairs():
                for d in GRID_DELTAS:
                    p = {"a": str(a), "b": str(b), "delta": str(d)}
                    p.update({k: str(v) for k, v in wp.items()})
                    out.append({"theorem": tid, "family": fam, "params": p,
                                "M": M or m_default, "precision": precision})
        return out

    if theorem == "thm1":
        fams = [("1f1-upper", {"c": c}) for c in GRID_C_1F1]
        fams += [("2f1-upper", {"b0": b0, "c": c}) for b0, c in GRID_2F1_UPPER]
        return sign_cases("thm1", fams, _DEFAULT_M["thm1"])
    if theorem == "thm2":
        fams = [("1f1-gamma", {"c": c}) for c in GRID_C_1F1]
        return sign_cases("thm2", fams, _DEFAULT_M["thm2"])
    if theorem == "thm3":
        fams = [("1f1-lower", {"a0": a0}) for a0 in GRID_A0_1F1]
        fams += [("2f1-lower", {"a0": a0, "b0": b0}) for a0, b0 in GRID_2F1_LOWER]
        return sign_cases("thm3", fams, _DEFAULT_M["thm3"])
    if theorem == "binomial":
        return sign_cases("binomial", [("binomial", {})], _DEFAULT_M["binomial"])
    if theorem == "corollary":
        return [{"theorem": "corollary", "family": "1f1-upper",
                 "params": {"a": "1", "b": "2", "delta": "1", "c": "3"},
                 "x_grid": [str(x) for x in GRID_X_POS],
                 "tol": str(tol) if tol else None, "precision": precision}]
    if theorem == "turan":
        return [{"theorem": "turan", "family": "1f1-upper",
                 "params": {"a": "1", "b": "2", "delta": "1", "c": "3"},
                 "x_grid": [str(x) for x in GRID_X_POS],
                 "tol": str(tol) if tol else None, "precision": precision},
                {"theorem": "turan", "family": "1f1-upper",
                 "params": {"a": "2", "b": "3", "delta": "1", "c": "5"},
                 "x_grid": ["3"],
                 "tol": str(tol) if tol else None, "precision": precision}]
    cases = []
    for t in ("thm1", "thm2", "thm3", "binomial", "corollary", "turan"):
        cases.extend(_default_cases(t, M, tol, precision))
    return cases


_REQUIRED_WEIGHTS = {"1f1-upper": ("c",), "1f1-gamma": ("c",),
                     "1f1-lower": ("a0",), "2f1-upper": ("b0", "c"),
                     "2f1-lower": ("a0", "b0"), "binomial": ()}


def _single_case(args, precision: int) -> dict:
    if args.family is None:
        raise DomainError("--family is required for an explicit case")
    need = _REQUIRED_WEIGHTS[args.family]
    params = {}
    for k in need:
        val = getattr(args, k)
        if val is None:
            raise DomainError(f"--{k} is required for family {args.family}")
        params[k] = str(val)
    if args.theorem in ("thm1", "thm2", "thm3", "binomial"):
        for k in ("a", "b", "delta"):
            if getattr(args, k) is None:
                raise DomainError(f"--{k} is required for {args.theorem}")
        params.update(a=str(args.a), b=str(args.b), delta=str(args.delta))
        return {"theorem": args.theorem, "family": args.family,
                "params": params, "M": args.M or _DEFAULT_M[args.theorem],
                "precision": precision}
    if args.a is None or args.delta is None:
        raise DomainError("--a and --delta are required for bound checks")
    params["a"] = str(args.a)
    params["delta"] = str(args.delta)
    params["b"] = str(args.b if args.b is not None else args.a + args.delta)
    xs = args.x_grid if args.x_grid else list(GRID_X_POS)
    return {"theorem": args.theorem, "family": args.family, "params": params,
            "x_grid": [str(x) for x in xs],
            "tol": str(args.tol) if args.tol else None, "precision": precision}


def _emit(report: dict, out_json: str | None):
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if out_json:
        with open(out_json, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_csv(path: str, header: list[str], rows):
    import csv

    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _run_id(config: dict) -> str:
    blob = json.dumps(config, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def cmd_verify(args) -> int:
    precision = args.precision or get_precision()
    if args.precision:
        set_precision(args.precision)
    explicit = args.a is not None or args.family is not None
    try:
        if args.theorem != "all" and explicit and args.grid is None:
            cases = [_single_case(args, precision)]
        else:
            cases = _default_cases(args.theorem, args.M, args.tol, precision)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for c in cases:
        c.setdefault("tol", str(args.tol) if args.tol else None)

    try:
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                records = list(pool.map(_run_case, cases))
        else:
            records = [_run_case(c) for c in cases]
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    csv_rows = []
    for i, rec in enumerate(records):
        for row in rec.pop("csv_rows"):
            csv_rows.append([str(i)] + row)
    summary = {"verified": 0, "violated": 0, "inconclusive": 0}
    for rec in records:
        if rec["verdict"] in (Verdict.VERIFIED.value,
                              Verdict.VERIFIED_DEGENERATE.value):
            summary["verified"] += 1
        elif rec["verdict"] == Verdict.VIOLATED.value:
            summary["violated"] += 1
        else:
            summary["inconclusive"] += 1
    config = {
        "command": "verify", "theorem": args.theorem,
        "family": args.family, "grid": args.grid,
        "M": args.M, "tol": str(args.tol) if args.tol else None,
        "precision": precision, "seed": args.seed, "jobs": args.jobs,
        "cases": len(cases),
    }
    report = {"run_id": _run_id(config), "config_echo": config,
              "per_case": records, "summary": summary}
    _emit(report, args.out_json)
    if args.out_csv:
        _write_csv(args.out_csv, ["case", "theorem", "params", "index", "sign"],
                   csv_rows)
    if summary["violated"]:
        return 1
    if summary["inconclusive"]:
        print(f"warning: {summary['inconclusive']} inconclusive case(s)",
              file=sys.stderr)
    return 0


def cmd_explore(args) -> int:
    precision = args.precision or get_precision()
    if args.precision:
        set_precision(args.precision)
    try:
        if args.x_grid is not None:
            xs = sorted(args.x_grid)
        else:
            xs = default_log_grid(args.points, args.x_max,
                                  negative=args.branch == "negative")
        rep = explore_conjecture(args.a, args.b, args.delta, args.c, xs,
                                 args.tol)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if rep.violations:
        verdict = Verdict.VIOLATED.value
    elif rep.steps and rep.undecided == len(rep.steps):
        verdict = Verdict.INCONCLUSIVE.value
    else:
        verdict = Verdict.VERIFIED.value
    params = {"a": str(args.a), "b": str(args.b), "delta": str(args.delta),
              "c": str(args.c)}
    config = {"command": "explore", "branch": rep.branch, "params": params,
              "points": len(xs), "x_max": str(args.x_max),
              "tol": str(args.tol) if args.tol else None,
              "precision": precision, "seed": args.seed}
    per_case = [{
        "theorem": "conjecture", "params": params, "verdict": verdict,
        "first_violation": None,
        "details": {
            "branch": rep.branch, "violations": rep.violations,
            "undecided": rep.undecided, "steps": len(rep.steps),
            "gap_to_one": rep.gap_to_one, "gap_to_bound": rep.gap_to_bound,
            "reason": None,
        },
    }]
    summary = {"verified": int(verdict == "verified"),
               "violated": int(verdict == "violated"),
               "inconclusive": int(verdict == "inconclusive")}
    report = {"run_id": _run_id(config), "config_echo": config,
              "per_case": per_case, "summary": summary}
    _emit(report, args.out_json)
    if args.out_csv:
        bound_col = "bound_A" if rep.branch == "positive" else "bound_B"
        bound_val = repr(float(rep.bound.midpoint))
        rows = []
        for i, (x, q) in enumerate(zip(rep.xs, rep.values)):
            step = rep.steps[i - 1].value if i else ""
            rows.append([repr(float(x)), repr(float(q.lo)), repr(float(q.hi)),
                         bound_val, step])
        _write_csv(args.out_csv, ["x", "Q_lo", "Q_hi", bound_col,
                                  "decided_monotone_step"], rows)
    if rep.violations:
        return 1
    if rep.undecided:
        print(f"warning: {rep.undecided} undecided step(s)", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_explore(args)


if __name__ == "__main__":
    sys.exit(main())
