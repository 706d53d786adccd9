"""Command line front end.

Four subcommands: solve (one run), sweep (alpha grid), dtable (tabulate
fractional derivatives), oracle (independent all-roots check). Output is
CSV or JSON on stdout, floats printed with 17 significant digits so two
identical invocations produce byte-identical bytes.

Exit codes: 0 success, 1 validation or domain error, 2 file I/O error.
"""

import argparse
import json
import sys

from .errors import FracNewtonError, ParseError
from .oracle import durand_kerner
from .poly import Polynomial, frac_derivative_table
from .solver import SolverConfig, solve
from .sweep import SweepConfig, alpha_grid, run_sweep

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2

RECORD_HEADER = "alpha,re_root,im_root,residual,iterations,termination"
DISTINCT_HEADER = "re_root,im_root,multiplicity,best_residual"


def _f(x: float) -> str:
    """17 significant digits, enough to round-trip a double exactly."""
    return format(float(x), ".17g")


def _jdump(obj) -> str:
    """JSON text with .17g floats; dict order is insertion order."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _f(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if obj is None:
        return "null"
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(k)}: {_jdump(v)}"
                          for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_jdump(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def parse_coeffs(text: str):
    parts = [s.strip() for s in text.split(",")]
    if parts and parts[-1] == "":
        parts = parts[:-1]      # tolerate one trailing comma
    coeffs = []
    for i, s in enumerate(parts):
        try:
            coeffs.append(float(s))
        except ValueError:
            raise ParseError(f"bad coefficient {s!r} at position {i}") from None
    if not coeffs:
        raise ParseError("no coefficients given")
    return coeffs


def parse_x0(text: str) -> complex:
    parts = [s.strip() for s in text.split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ParseError(f"bad start point {text!r}, expected re or re,im")


def parse_polynomial_file(path: str) -> Polynomial:
    """Read coefficients from path, ascending by power.

    Two formats, detected by content: a JSON object with a "coeffs"
    array, or plain text with one coefficient per line and # comments.
    """
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON: {e.msg}", line=e.lineno) from None
        if not isinstance(doc, dict) or "coeffs" not in doc:
            raise ParseError('JSON object must have a "coeffs" array')
        raw = doc["coeffs"]
        if (not isinstance(raw, list) or not raw
                or not all(isinstance(v, (int, float))
                           and not isinstance(v, bool) for v in raw)):
            raise ParseError('"coeffs" must be a non-empty numeric array')
        return Polynomial([float(v) for v in raw])
    coeffs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            coeffs.append(float(body))
        except ValueError:
            raise ParseError(f"bad coefficient {body!r}",
                             line=lineno) from None
    if not coeffs:
        raise ParseError("file contains no coefficients")
    return Polynomial(coeffs)


def _load_polynomial(args) -> Polynomial:
    if args.poly_file is not None:
        return parse_polynomial_file(args.poly_file)
    return Polynomial(parse_coeffs(args.coeffs))


def _add_poly_source(sp) -> None:
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--coeffs",
                   help="comma separated coefficients, ascending by power")
    g.add_argument("--poly-file",
                   help="file with one coefficient per line, or JSON")


def _add_format(sp) -> None:
    sp.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fracnewton",
        description="Polynomial roots via fractional-order Newton iteration.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="run one iteration to convergence")
    _add_poly_source(sp)
    sp.add_argument("--alpha", type=float, required=True,
                    help="derivative order in (0, 2)")
    sp.add_argument("--x0", required=True, help="start point, re or re,im")
    sp.add_argument("--tol-res", type=float, default=1e-10)
    sp.add_argument("--tol-step", type=float, default=1e-12)
    sp.add_argument("--max-iter", type=int, default=200)
    sp.add_argument("--no-accelerate", action="store_true",
                    help="plain iteration, no extrapolation steps")
    sp.add_argument("--trace", action="store_true",
                    help="append the full iterate history")
    _add_format(sp)

    sp = sub.add_parser("sweep", help="solve across a grid of orders")
    _add_poly_source(sp)
    sp.add_argument("--x0", required=True, help="start point, re or re,im")
    sp.add_argument("--alpha-min", type=float, default=0.7)
    sp.add_argument("--alpha-max", type=float, default=1.3)
    sp.add_argument("--alpha-step", type=float, default=0.0005)
    sp.add_argument("--dedup-eps", type=float, default=1e-4)
    sp.add_argument("--tol-res", type=float, default=1e-10)
    sp.add_argument("--tol-step", type=float, default=1e-12)
    sp.add_argument("--max-iter", type=int, default=200)
    sp.add_argument("--no-accelerate", action="store_true")
    _add_format(sp)

    sp = sub.add_parser(
        "dtable", help="tabulate fractional derivative values")
    _add_poly_source(sp)
    sp.add_argument("--alpha-min", type=float, default=0.0)
    sp.add_argument("--alpha-max", type=float, default=1.0)
    sp.add_argument("--alpha-step", type=float, default=0.1)
    sp.add_argument("--z-min", type=float, default=0.1)
    sp.add_argument("--z-max", type=float, default=2.0)
    sp.add_argument("--z-step", type=float, default=0.1)
    _add_format(sp)

    sp = sub.add_parser(
        "oracle", help="all roots by simultaneous Weierstrass iteration")
    _add_poly_source(sp)
    sp.add_argument("--tol-res", type=float, default=1e-10)
    sp.add_argument("--max-iter", type=int, default=500)
    _add_format(sp)
    return ap


def _record_row(rec) -> str:
    return ",".join((
        _f(rec.alpha), _f(rec.root.real), _f(rec.root.imag),
        _f(rec.residual_norm), str(rec.iterations), rec.termination.value,
    ))


def _record_obj(rec) -> dict:
    return {
        "alpha": rec.alpha,
        "re_root": rec.root.real,
        "im_root": rec.root.imag,
        "residual": rec.residual_norm,
        "iterations": rec.iterations,
        "termination": rec.termination.value,
    }


def _cmd_solve(args) -> str:
    p = _load_polynomial(args)
    cfg = SolverConfig(
        alpha=args.alpha,
        x0=parse_x0(args.x0),
        tol_res=args.tol_res,
        tol_step=args.tol_step,
        max_iter=args.max_iter,
        accelerate=not args.no_accelerate,
    )
    rec, trace = solve(p, cfg)
    accel = set(trace.accelerated_steps)
    if args.format == "json":
        doc = _record_obj(rec)
        if args.trace:
            doc["trace"] = [
                {"n": n, "re_x": z.real, "im_x": z.imag,
                 "residual": trace.residuals[n], "accelerated": n in accel}
                for n, z in enumerate(trace.iterates)
            ]
        return _jdump(doc) + "\n"
    lines = [RECORD_HEADER, _record_row(rec)]
    if args.trace:
        lines.append("")
        lines.append("n,re_x,im_x,residual,accelerated")
        for n, z in enumerate(trace.iterates):
            lines.append(",".join((
                str(n), _f(z.real), _f(z.imag), _f(trace.residuals[n]),
                "1" if n in accel else "0",
            )))
    return "\n".join(lines) + "\n"


def _cmd_sweep(args) -> str:
    p = _load_polynomial(args)
    cfg = SweepConfig(
        x0=parse_x0(args.x0),
        alpha_min=args.alpha_min,
        alpha_max=args.alpha_max,
        alpha_step=args.alpha_step,
        dedup_eps=args.dedup_eps,
        tol_res=args.tol_res,
        tol_step=args.tol_step,
        max_iter=args.max_iter,
        accelerate=not args.no_accelerate,
    )
    report = run_sweep(p, cfg)
    if args.format == "json":
        doc = {
            "records": [_record_obj(r) for r in report.records],
            "distinct_roots": [
                {"re_root": d.root.real, "im_root": d.root.imag,
                 "multiplicity": d.multiplicity,
                 "best_residual": d.best_residual}
                for d in report.distinct_roots
            ],
            "failures": report.failures,
        }
        return _jdump(doc) + "\n"
    lines = [RECORD_HEADER]
    lines.extend(_record_row(r) for r in report.records)
    lines.append("")
    lines.append(DISTINCT_HEADER)
    for d in report.distinct_roots:
        lines.append(",".join((
            _f(d.root.real), _f(d.root.imag), str(d.multiplicity),
            _f(d.best_residual),
        )))
    lines.append("")
    lines.append(f"# failures={report.failures}")
    return "\n".join(lines) + "\n"


def _cmd_dtable(args) -> str:
    p = _load_polynomial(args)
    for name in ("alpha_step", "z_step"):
        if not getattr(args, name) > 0.0:
            raise ParseError(f"--{name.replace('_', '-')} must be positive")
    alphas = alpha_grid(args.alpha_min, args.alpha_max, args.alpha_step)
    zs = alpha_grid(args.z_min, args.z_max, args.z_step)
    rows = frac_derivative_table(p, alphas, zs)
    if args.format == "json":
        doc = {"rows": [
            {"alpha": r.alpha, "z": r.z,
             "re_value": None if r.value is None else r.value.real,
             "im_value": None if r.value is None else r.value.imag,
             "status": "ok" if r.error is None else r.error}
            for r in rows
        ]}
        return _jdump(doc) + "\n"
    lines = ["alpha,z,re_value,im_value,status"]
    for r in rows:
        if r.value is None:
            lines.append(",".join((_f(r.alpha), _f(r.z), "", "", r.error)))
        else:
            lines.append(",".join((
                _f(r.alpha), _f(r.z), _f(r.value.real), _f(r.value.imag),
                "ok",
            )))
    return "\n".join(lines) + "\n"


def _cmd_oracle(args) -> str:
    p = _load_polynomial(args)
    res = durand_kerner(p, tol=args.tol_res, max_iter=args.max_iter)
    if args.format == "json":
        doc = {
            "roots": [{"re_root": z.real, "im_root": z.imag}
                      for z in res.roots],
            "max_residual": res.max_residual,
            "converged": res.converged,
        }
        return _jdump(doc) + "\n"
    lines = ["re_root,im_root"]
    lines.extend(",".join((_f(z.real), _f(z.imag))) for z in res.roots)
    lines.append("")
    lines.append(f"# max_residual={_f(res.max_residual)} "
                 f"converged={'true' if res.converged else 'false'}")
    return "\n".join(lines) + "\n"


_COMMANDS = {
    "solve": _cmd_solve,
    "sweep": _cmd_sweep,
    "dtable": _cmd_dtable,
    "oracle": _cmd_oracle,
}


# values for these flags often begin with a minus sign ("-2,0,1"),
# which argparse would otherwise read as an unknown option
_VALUE_FLAGS = ("--coeffs", "--x0")


def _merge_dash_values(argv):
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_dash_values(argv))
    except SystemExit as e:
        # argparse already printed its message; --help exits cleanly
        return EXIT_OK if e.code in (0, None) else EXIT_VALIDATION
    try:
        out = _COMMANDS[args.command](args)
    except OSError as e:
        print(f"fracnewton: {e}", file=sys.stderr)
        return EXIT_IO
    except FracNewtonError as e:
        print(f"fracnewton: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    sys.stdout.write(out)
    return EXIT_OK
