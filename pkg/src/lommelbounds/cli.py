"""Command-line front end: point evaluation, inequality verification,
tightness sweeps, and reproduction of the relative-error tables.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 numerical failure (non-convergence or oracle disagreement).  CSV output
uses a header row, '.' decimals, LF line endings, and 17 significant
digits; JSON reports carry {command, inputs, rows, failures, wall_time_ms}
and contain everything needed to re-run the same checks.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import random
import sys
import time

from . import __version__
from .bounds import (
    ALL_IDS,
    REGISTRY,
    InequalityParams,
    reference_table,
    reproduce_table,
    resolve_id,
    sample_params,
    verify_inequality,
)
from .errors import (
    ConvergenceError,
    DomainError,
    EvaluationOverflowError,
    OracleDisagreementError,
)
from .hypergeom import hyp1F2, hyp2F3
from .integrals import (
    IntegralSpec,
    integral_closed_form,
    integral_exp_series,
    integral_quadrature,
)
from .lommel import LommelParams, modified_struve_L, t_tilde, t_unnormalized
from .special import lower_incomplete_gamma

TABLE_COMPARE_TOL = 1e-4
_NUMERIC_ERRORS = (ConvergenceError, OracleDisagreementError, EvaluationOverflowError)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _emit_lines(lines: list[str], out_path: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(args, command: str, inputs: dict, rows: list[dict],
                 failures: int, started: float,
                 csv_header: list[str] | None) -> None:
    report = {
        "command": command,
        "inputs": inputs,
        "rows": rows,
        "failures": failures,
        "wall_time_ms": int((time.monotonic() - started) * 1000),
    }
    if args.json:
        _emit_lines([json.dumps(report)], args.out)
    elif csv_header is not None:
        lines = [",".join(csv_header)]
        lines += [",".join(_fmt(row.get(col, "")) for col in csv_header)
                  for row in rows]
        _emit_lines(lines, args.out)
    else:
        lines = [f"{k} = {_fmt(v)}" for row in rows for k, v in row.items()]
        _emit_lines(lines, args.out)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tol", type=float, default=1e-12,
                        help="series tolerance (default 1e-12)")
    parser.add_argument("--json", action="store_true",
                        help="emit a JSON run report instead of CSV/text")
    parser.add_argument("--out", help="write output to this path instead of stdout")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for random domain sampling (default 0)")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for row evaluation (default 1)")


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise DomainError(f"cannot parse float list {text!r}") from exc


def _parse_x_values(text: str) -> list[float]:
    """Either a comma list '1,2,5' or a linear range 'start:stop:count'."""
    if ":" in text:
        pieces = text.split(":")
        if len(pieces) != 3:
            raise DomainError(f"x range must be start:stop:count, got {text!r}")
        lo, hi = float(pieces[0]), float(pieces[1])
        count = int(pieces[2])
        if count < 1:
            raise DomainError(f"x range count must be >= 1, got {count}")
        if count == 1:
            return [lo]
        step = (hi - lo) / (count - 1)
        return [lo + i * step for i in range(count)]
    return _parse_floats(text)


def _map_rows(tasks, worker, threads: int):
    """Evaluate tasks preserving order; threads only change wall time."""
    if threads > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(worker, tasks))
    return [worker(task) for task in tasks]


# --- eval --------------------------------------------------------------------

def _cmd_eval(args) -> int:
    started = time.monotonic()
    tol = args.tol
    fn = args.function
    row: dict = {"function": fn}
    if fn in ("t", "t-tilde"):
        _require(args, "mu", "nu", "x")
        params = LommelParams(args.mu, args.nu)
        if fn == "t":
            row["value"] = t_unnormalized(params, args.x, tol)
        else:
            ev = t_tilde(params, args.x, tol)
            row.update(value=ev.value, terms_used=ev.terms_used,
                       truncation_estimate=ev.truncation_estimate)
    elif fn == "struve-L":
        _require(args, "nu", "x")
        ev = modified_struve_L(args.nu, args.x, tol)
        row.update(value=ev.value, terms_used=ev.terms_used,
                   truncation_estimate=ev.truncation_estimate)
    elif fn == "gamma-lower":
        _require(args, "a", "x")
        a_vals = _parse_floats(args.a)
        if len(a_vals) != 1:
            raise DomainError("gamma-lower takes a single --a value")
        row["value"] = lower_incomplete_gamma(a_vals[0], args.x)
    elif fn in ("hyp1f2", "hyp2f3"):
        _require(args, "a", "b", "z")
        a_vals = _parse_floats(args.a)
        b_vals = _parse_floats(args.b)
        want_a, want_b = (1, 2) if fn == "hyp1f2" else (2, 3)
        if len(a_vals) != want_a or len(b_vals) != want_b:
            raise DomainError(
                f"{fn} takes {want_a} numerator and {want_b} denominator "
                f"parameters (got {len(a_vals)} and {len(b_vals)})")
        ev = (hyp1F2(*a_vals, *b_vals, args.z, tol) if fn == "hyp1f2"
              else hyp2F3(*a_vals, *b_vals, args.z, tol))
        row.update(value=ev.value, terms_used=ev.terms_used,
                   truncation_estimate=ev.truncation_estimate)
    elif fn == "integral":
        _require(args, "mu", "nu", "alpha", "x")
        spec = IntegralSpec(args.mu, args.nu, args.alpha, args.x, args.beta)
        method = args.method
        if method == "closed":
            row["value"] = integral_closed_form(spec, tol)
        elif method == "series":
            ev = integral_exp_series(spec, tol=tol)
            row.update(value=ev.value, terms_used=ev.terms_used,
                       truncation_estimate=ev.truncation_estimate)
        elif method == "quad":
            row["value"] = integral_quadrature(spec)
        else:  # both: the analytic route for this beta, plus quadrature
            analytic = (integral_closed_form(spec, tol) if spec.beta == 0.0
                        else integral_exp_series(spec, tol=tol).value)
            quad = integral_quadrature(spec)
            rel = abs(analytic - quad) / max(abs(analytic), abs(quad), 1e-300)
            row.update(value=analytic, quadrature=quad, rel_difference=rel)
            if rel > 1e-6:
                _emit_report(args, "eval", _inputs(args), [row], 1, started, None)
                print(f"error: analytic and quadrature routes disagree "
                      f"(rel {rel:.3e})", file=sys.stderr)
                return 3
    else:  # pragma: no cover - argparse restricts choices
        raise DomainError(f"unknown function {fn!r}")
    _emit_report(args, "eval", _inputs(args), [row], 0, started, None)
    return 0


def _require(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise DomainError(
            f"missing required option(s) for {args.function!r}: "
            + ", ".join("--" + n for n in missing))


def _inputs(args) -> dict:
    skip = {"func", "json", "out"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


# --- verify ------------------------------------------------------------------

_VERIFY_COLUMNS = ["id", "mu", "nu", "n", "beta", "x", "integral", "bound",
                   "slack", "ratio", "satisfied"]


def _check_to_row(check) -> dict:
    return {
        "id": check.ident,
        "mu": check.params.mu, "nu": check.params.nu,
        "n": check.params.n, "beta": check.params.beta,
        "x": check.x,
        "integral": check.integral_value, "bound": check.bound_value,
        "slack": check.slack, "ratio": check.ratio,
        "satisfied": check.satisfied,
    }


def _cmd_verify(args) -> int:
    started = time.monotonic()
    idents = list(ALL_IDS) if args.inequality == "all" else [resolve_id(args.inequality)]

    tasks: list[tuple[str, InequalityParams, float]] = []
    if args.samples:
        rng = random.Random(args.seed)
        for ident in idents:
            for _ in range(args.samples):
                params, x = sample_params(ident, rng)
                tasks.append((ident, params, x))
    else:
        if args.mu is None or args.nu is None or args.x is None:
            raise DomainError(
                "explicit mode needs --mu, --nu and --x (or use --samples N)")
        params = InequalityParams(args.mu, args.nu, args.n, args.beta)
        for x in _parse_x_values(args.x):
            for ident in idents:
                tasks.append((ident, params, x))

    domain_errors = 0
    numeric_errors = 0

    def worker(task):
        ident, params, x = task
        try:
            return _check_to_row(verify_inequality(ident, params, x, tol=args.tol))
        except DomainError as exc:
            return {"id": ident, "error": f"domain: {exc}", "params": params, "x": x}
        except _NUMERIC_ERRORS as exc:
            return {"id": ident, "error": f"numeric: {exc}", "params": params, "x": x}

    rows = _map_rows(tasks, worker, args.threads)

    csv_rows = []
    failures = 0
    for row in rows:
        if "error" in row:
            print(f"{row['id']}: {row['error']} at params={row['params']} "
                  f"x={row['x']}", file=sys.stderr)
            if row["error"].startswith("domain"):
                domain_errors += 1
                if args.strict_domain:
                    failures += 1
            else:
                numeric_errors += 1
                failures += 1
            continue
        if not row["satisfied"]:
            failures += 1
        csv_rows.append(row)

    _emit_report(args, "verify", _inputs(args), csv_rows, failures, started,
                 _VERIFY_COLUMNS)
    checked = len(csv_rows)
    print(f"verify: {checked} checks, {failures} failures, "
          f"{domain_errors} domain errors, {numeric_errors} numeric errors",
          file=sys.stderr)
    if numeric_errors:
        return 3
    return 1 if failures else 0


# --- table -------------------------------------------------------------------

def _cmd_table(args) -> int:
    started = time.monotonic()
    which = args.which
    cells = reproduce_table(which, args.tol)
    field = "rel_err_lower" if which == 1 else "rel_err_upper"

    rows = [{"mu": c.mu, "nu": c.nu, "x": c.x, "rel_err": getattr(c, field)}
            for c in cells]

    failures = 0
    max_delta = 0.0
    if args.compare_paper:
        reference = reference_table(which)
        for row in rows:
            delta = abs(row["rel_err"] - reference[(row["mu"], row["nu"], row["x"])])
            row["paper"] = reference[(row["mu"], row["nu"], row["x"])]
            row["delta"] = delta
            max_delta = max(max_delta, delta)
            if delta > TABLE_COMPARE_TOL:
                failures += 1

    if args.format == "markdown" and not args.json:
        lines = _markdown_table(rows, args.compare_paper)
        _emit_lines(lines, args.out)
    else:
        header = ["mu", "nu", "x", "rel_err"]
        if args.compare_paper:
            header += ["paper", "delta"]
        _emit_report(args, "table", _inputs(args), rows, failures, started, header)
    if args.compare_paper:
        print(f"table {which}: max |delta| vs published values = {max_delta:.3e} "
              f"({failures} cells beyond {TABLE_COMPARE_TOL})", file=sys.stderr)
    return 1 if failures else 0


def _markdown_table(rows: list[dict], with_compare: bool) -> list[str]:
    xs = sorted({row["x"] for row in rows})
    by_key = {(row["mu"], row["nu"], row["x"]): row for row in rows}
    header = "| (mu, nu) | " + " | ".join(_fmt(x) for x in xs) + " |"
    rule = "|---" * (len(xs) + 1) + "|"
    lines = [header, rule]
    seen = []
    for row in rows:
        key = (row["mu"], row["nu"])
        if key not in seen:
            seen.append(key)
    for mu, nu in seen:
        cells = []
        for x in xs:
            row = by_key[(mu, nu, x)]
            text = f"{row['rel_err']:.4f}"
            if with_compare and row["delta"] > TABLE_COMPARE_TOL:
                text += f" (paper {row['paper']:.4f})"
            cells.append(text)
        lines.append(f"| ({_fmt(mu)}, {_fmt(nu)}) | " + " | ".join(cells) + " |")
    return lines


# --- sweep -------------------------------------------------------------------

_SWEEP_COLUMNS = ["x", "integral", "bound", "ratio"]


def _cmd_sweep(args) -> int:
    started = time.monotonic()
    ident = resolve_id(args.inequality)
    if args.x_min <= 0.0:
        raise DomainError(f"--x-min must be > 0, got {args.x_min!r}")
    if args.x_max < args.x_min:
        raise DomainError("--x-max must be >= --x-min")
    params = InequalityParams(args.mu, args.nu, args.n, args.beta)
    REGISTRY[ident]  # ident already resolved; keep registry import referenced

    n_pts = args.points
    if n_pts < 1:
        raise DomainError(f"--points must be >= 1, got {n_pts!r}")
    if n_pts == 1:
        grid = [args.x_min]
    elif args.log:
        import math as _math
        lo, hi = _math.log(args.x_min), _math.log(args.x_max)
        grid = [_math.exp(lo + i * (hi - lo) / (n_pts - 1)) for i in range(n_pts)]
    else:
        step = (args.x_max - args.x_min) / (n_pts - 1)
        grid = [args.x_min + i * step for i in range(n_pts)]

    def worker(x):
        check = verify_inequality(ident, params, x, tol=args.tol)
        return {"x": x, "integral": check.integral_value,
                "bound": check.bound_value, "ratio": check.ratio,
                "satisfied": check.satisfied}

    rows = _map_rows(grid, worker, args.threads)
    failures = sum(1 for row in rows if not row["satisfied"])
    for row in rows:
        del row["satisfied"]
    _emit_report(args, "sweep", _inputs(args), rows, failures, started,
                 _SWEEP_COLUMNS)
    return 1 if failures else 0


# --- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lommel-bounds",
        description="Modified Lommel functions, integral bounds, and "
                    "inequality verification.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at a point")
    p_eval.add_argument("function",
                        choices=["t", "t-tilde", "struve-L", "gamma-lower",
                                 "hyp1f2", "hyp2f3", "integral"])
    p_eval.add_argument("--mu", type=float)
    p_eval.add_argument("--nu", type=float)
    p_eval.add_argument("--x", type=float)
    p_eval.add_argument("--a", help="numerator parameter list, e.g. '1,2'")
    p_eval.add_argument("--b", help="denominator parameter list, e.g. '3,4,5'")
    p_eval.add_argument("--z", type=float)
    p_eval.add_argument("--alpha", type=float, help="weight exponent")
    p_eval.add_argument("--beta", type=float, default=0.0)
    p_eval.add_argument("--method", choices=["closed", "series", "quad", "both"],
                        default="both")
    _add_common(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="check inequalities against the oracle")
    p_verify.add_argument("--inequality", required=True,
                          help="inequality id or 'all'")
    p_verify.add_argument("--mu", type=float)
    p_verify.add_argument("--nu", type=float)
    p_verify.add_argument("--n", type=float, default=0.0)
    p_verify.add_argument("--beta", type=float, default=0.0)
    p_verify.add_argument("--x", help="comma list '1,2,5' or range 'lo:hi:count'")
    p_verify.add_argument("--samples", type=int,
                          help="seeded random draws per inequality")
    p_verify.add_argument("--strict-domain", action="store_true",
                          help="count domain violations as failures")
    _add_common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="reproduce a relative-error table")
    p_table.add_argument("--which", type=int, choices=[1, 2], required=True)
    p_table.add_argument("--format", choices=["csv", "markdown"], default="csv")
    p_table.add_argument("--compare-paper", action="store_true",
                         help="diff against the published values")
    _add_common(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_sweep = sub.add_parser("sweep", help="ratio trajectory over an x grid")
    p_sweep.add_argument("--inequality", required=True)
    p_sweep.add_argument("--mu", type=float, required=True)
    p_sweep.add_argument("--nu", type=float, required=True)
    p_sweep.add_argument("--n", type=float, default=0.0)
    p_sweep.add_argument("--beta", type=float, default=0.0)
    p_sweep.add_argument("--x-min", type=float, required=True)
    p_sweep.add_argument("--x-max", type=float, required=True)
    p_sweep.add_argument("--points", type=int, default=20)
    p_sweep.add_argument("--log", action="store_true",
                         help="logarithmic x grid")
    _add_common(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _NUMERIC_ERRORS as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
