"""Command-line front end emitting CSV/JSON for plotting and scripted checks.

Exit codes: 0 all checks pass (or data emitted), 3 a certified failure was
found (a non-hyperbolic row, a counterexample witness, a limit mismatch),
2 usage or domain error. Output is deterministic for fixed flags: stable
row order, floats at 17 significant digits, stable CSV headers.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from .analysis import (
    certify,
    cubic_discriminant,
    density_profile,
    dominance_at,
    first_nonreal,
    reciprocal_dominance,
)
from .params import lambda_bound
from .poly import all_roots
from .recurrence import RecurrenceParams, generate
from .theta import sample, theta_grid, vieta_residuals, z_of_theta

__all__ = ["main"]

_ONE_NINTH = Fraction(1, 9)


def _rational(text, allow_decimal):
    """Exact Fraction from "p/q" or an integer literal; decimal or scientific
    literals need the explicit opt-in and are still converted exactly."""
    s = text.strip()
    try:
        if "/" in s or s.lstrip("+-").isdigit():
            return Fraction(s)
        if not allow_decimal:
            raise ValueError(
                f"decimal literal {text!r} needs --float; write an exact p/q instead"
            )
        return Fraction(Decimal(s))
    except (ValueError, ZeroDivisionError, InvalidOperation) as exc:
        raise ValueError(f"cannot parse {text!r} as a rational number") from exc


def _fmt(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, complex):
        return f"{x.real:.17g}{x.imag:+.17g}j"
    if isinstance(x, float):
        return format(x, ".17g")
    if x is None:
        return ""
    return str(x)


def _json_safe(x):
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, Fraction):
        return str(x)
    return x


def _write_text(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _emit_json(path, payload):
    _write_text(path, json.dumps(payload, indent=2) + "\n")


def _emit_table(fmt, path, header, rows):
    if fmt == "json":
        payload = {
            "schema": 1,
            "rows": [
                {k: _json_safe(v) for k, v in zip(header, row)} for row in rows
            ],
        }
        _emit_json(path, payload)
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    _write_text(path, buf.getvalue())


def _params_from(args):
    vals = {k: getattr(args, k) for k in ("a", "b", "c")}
    if args.alpha is not None:
        if any(v is not None for v in vals.values()):
            raise ValueError("--alpha is mutually exclusive with --a/--b/--c")
        alpha = _rational(args.alpha, args.allow_float)
        return RecurrenceParams(Fraction(1), Fraction(1), alpha)
    if any(v is None for v in vals.values()):
        raise ValueError("provide either --alpha or all of --a, --b, --c")
    return RecurrenceParams(
        *(_rational(vals[k], args.allow_float) for k in ("a", "b", "c"))
    )


def _alpha_from(args):
    return _rational(args.alpha, args.allow_float)


def _cmd_certify(args):
    params = _params_from(args)
    reports = certify(params, args.n_max)
    header = [
        "n",
        "degree",
        "sturm_count",
        "hyperbolic",
        "max_abs_root",
        "lambda",
        "contained",
    ]
    rows = [
        [r.n, r.degree, r.sturm_count, r.hyperbolic, r.max_abs_root, r.lam, r.contained]
        for r in reports
    ]
    _emit_table(args.format, args.output, header, rows)
    return 0 if all(r.hyperbolic for r in reports) else 3


def _cmd_gen(args):
    params = _params_from(args)
    seq = generate(params, args.n_max)
    rows = []
    for n in range(0, args.n_max + 1):
        for k, coeff in enumerate(seq[n].coefficients):
            rows.append([n, k, Fraction(coeff)])
    _emit_table(args.format, args.output, ["n", "k", "coefficient"], rows)
    return 0


def _cmd_roots(args):
    params = _params_from(args)
    seq = generate(params, args.n)
    rts = all_roots(seq[args.n])
    rows = [[i, r.real, r.imag] for i, r in enumerate(rts)]
    _emit_table(args.format, args.output, ["index", "real", "imag"], rows)
    return 0


def _cmd_theta(args):
    alpha = _alpha_from(args)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if alpha > _ONE_NINTH and not args.complex:
        raise ValueError(
            "alpha > 1/9 leaves the real regime; pass --complex to proceed"
        )
    af = float(alpha)
    header = [
        "theta",
        "delta",
        "zeta",
        "tau",
        "z",
        "abs_t1",
        "abs_t3",
        "vieta_max_residual",
    ]
    rows = []
    for t in theta_grid(args.samples, args.offset):
        s = sample(t, af)
        rows.append(
            [
                s.theta,
                s.delta,
                s.zeta_plus,
                s.tau,
                s.z,
                abs(s.t1),
                abs(s.t3),
                vieta_residuals(s).max_relative,
            ]
        )
    _emit_table(args.format, args.output, header, rows)
    return 0


def _cmd_density(args):
    alpha = _alpha_from(args)
    prof = density_profile(alpha, args.n_max)
    payload = {
        "schema": 1,
        "alpha": prof.alpha,
        "n_max": prof.n_max,
        "lambda": prof.lam,
        "root_count": len(prof.union_roots),
        "max_gap_central": prof.max_gap_central,
    }
    _emit_json(args.output, payload)
    if args.roots_out:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "z"])
        for i, r in enumerate(prof.union_roots):
            writer.writerow([i, _fmt(r)])
        _write_text(args.roots_out, buf.getvalue())
    return 0


def _cmd_counterexample(args):
    params = _params_from(args)
    rec = first_nonreal(params, args.n_max)
    found = rec.first_nonreal_n is not None
    payload = {
        "schema": 1,
        "params": {
            "a": str(Fraction(params.a)),
            "b": str(Fraction(params.b)),
            "c": str(Fraction(params.c)),
        },
        "n_max": args.n_max,
        "found": found,
        "first_nonreal_n": rec.first_nonreal_n,
        "witness": _json_safe(rec.witness_root) if found else None,
    }
    _emit_json(args.output, payload)
    return 3 if found else 0


def _cmd_sokal(args):
    if (args.alpha is None) == (args.c is None):
        raise ValueError("pass exactly one of --alpha (main cubic) or --c (reversed)")
    if args.alpha is not None:
        alpha = _rational(args.alpha, args.allow_float)
        re, im = args.probe
        z = complex(re, im)
        rep = dominance_at(z, alpha)
        disc = cubic_discriminant(-alpha, Fraction(-1), Fraction(1), Fraction(1))
        payload = {
            "schema": 1,
            "mode": "alpha",
            "alpha": str(alpha),
            "z_probe": _json_safe(z),
            "discriminant": float(disc),
            "discriminant_exact": str(disc),
            "t_moduli": list(rep.t_moduli),
            "two_dominant": rep.two_dominant,
            "distinct_nonzero": rep.distinct_nonzero,
        }
    else:
        c = _rational(args.c, args.allow_float)
        z = complex(0.0, args.epsilon)
        rep = reciprocal_dominance(z, c)
        payload = {
            "schema": 1,
            "mode": "reciprocal",
            "c": str(c),
            "epsilon": args.epsilon,
            "z_probe": _json_safe(z),
            "t_moduli_translated": list(rep.t_moduli),
            "star_moduli": [abs(r) for r in rep.star_roots],
            "two_dominant": rep.two_dominant,
            "distinct_nonzero": rep.distinct_nonzero,
        }
    _emit_json(args.output, payload)
    return 0


def _cmd_limits(args):
    alpha = _alpha_from(args)
    lam = lambda_bound(alpha)
    af = float(alpha)
    z_left = z_of_theta(args.offset, af)
    z_right = z_of_theta(math.pi - args.offset, af)
    err_left = abs(z_left + lam)
    err_right = abs(z_right - lam)
    passed = err_left < args.tol and err_right < args.tol
    payload = {
        "schema": 1,
        "alpha": str(alpha),
        "lambda": lam,
        "offset": args.offset,
        "z_left": z_left,
        "z_right": z_right,
        "err_left": err_left,
        "err_right": err_right,
        "tol": args.tol,
        "pass": passed,
    }
    _emit_json(args.output, payload)
    return 0 if passed else 3


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hyprec",
        description="Recurrence polynomial families: generation, exact "
        "hyperbolicity certification, zero parametrization, and density data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=("csv", "json"), default="csv")
    out.add_argument("-o", "--output", default=None, help="path or - for stdout")

    flt = argparse.ArgumentParser(add_help=False)
    flt.add_argument(
        "--float",
        dest="allow_float",
        action="store_true",
        help="accept decimal literals (converted exactly)",
    )

    fam = argparse.ArgumentParser(add_help=False, parents=[flt])
    fam.add_argument("--a", default=None, help="rational p/q")
    fam.add_argument("--b", default=None, help="rational p/q")
    fam.add_argument("--c", default=None, help="rational p/q")
    fam.add_argument("--alpha", default=None, help="shortcut for (1, 1, alpha)")

    alf = argparse.ArgumentParser(add_help=False, parents=[flt])
    alf.add_argument("--alpha", required=True, help="rational p/q")

    p = sub.add_parser(
        "certify", parents=[fam, out], help="per-n exact all-real-zeros reports"
    )
    p.add_argument("--n-max", type=int, default=100)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("gen", parents=[fam, out], help="dump exact coefficients")
    p.add_argument("--n-max", type=int, default=10)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("roots", parents=[fam, out], help="all zeros of one P_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser(
        "theta", parents=[alf, out], help="zero-parametrization table over a grid"
    )
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--offset", type=float, default=1e-6)
    p.add_argument(
        "--complex",
        action="store_true",
        help="allow alpha > 1/9 (complex branch columns)",
    )
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser(
        "density", parents=[alf], help="zero-density summary from the parametrization"
    )
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--roots-out", default=None, help="also dump sorted zeros as CSV")
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser(
        "counterexample", parents=[fam], help="first n with a certified nonreal zero"
    )
    p.add_argument("--n-max", type=int, default=300)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("sokal", parents=[flt], help="t-root dominance probe")
    p.add_argument("--alpha", default=None, help="main cubic mode")
    p.add_argument("--c", default=None, help="reversed cubic mode (b < 0 families)")
    p.add_argument(
        "--probe",
        type=float,
        nargs=2,
        default=(0.0, 1.0),
        metavar=("RE", "IM"),
        help="probe point, default i",
    )
    p.add_argument("--epsilon", type=float, default=1e-3)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_sokal)

    p = sub.add_parser(
        "limits", parents=[alf], help="check z endpoint limits against the bound"
    )
    p.add_argument("--offset", type=float, default=1e-6)
    p.add_argument("--tol", type=float, default=1e-5)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_limits)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
