"""Command-line interface.

Examples::

    heisenharm basis --alpha 1 --degree 5
    heisenharm verify --alpha -3 --max-degree 6
    heisenharm eval --alpha 0 --m 2 --n 0 --rho 1 --theta 0 --phi 1.0471975511965976
    heisenharm classical gegenbauer --lambda 1/2 --k 2
    heisenharm fundamental --alpha 0 --z-re 1 --z-im 0 --t 0
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .classical import (
    apply_laplacian,
    gauss_legendre_rule,
    gram_matrix,
    quad_points,
    r3_basis,
)
from .exactnum import DomainError, gaussian_to_json, rational_to_str
from .harmonics import (
    HarmonicIndex,
    SphericalPoint,
    H_trig,
    basis,
    degenerate_steps,
    eval_fundamental_solution,
    eval_spherical,
    fundamental_constant,
    indices_of_degree,
    is_supported_alpha,
    solid_harmonic,
)
from .hpoly import HPoint, apply_L_alpha, eval_cartesian, exact_rank, heisenberg_degree
from .specfun import gegenbauer_from_generating_function, gegenbauer_norm
from .verify import FLOAT_TOL, rel_err, verify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _complex_json(v: complex) -> dict:
    return {"re": v.real, "im": v.imag}


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def harmonic_record(idx: HarmonicIndex) -> dict:
    p = solid_harmonic(idx)
    verified = apply_L_alpha(p, idx.alpha).is_zero() and heisenberg_degree(p) == idx.m
    steps = degenerate_steps(idx)
    return {
        "alpha": idx.alpha,
        "m": idx.m,
        "n": idx.n,
        "k": idx.k,
        "cartesian": p.to_json(),
        "trig_coeffs": H_trig(idx).to_json(),
        "verified": verified,
        "degenerate_recurrence_at": steps[0] if steps else None,
    }


# -- subcommands -------------------------------------------------------------------

def cmd_basis(args) -> int:
    if not is_supported_alpha(args.alpha):
        print(f"error: unsupported alpha={args.alpha}; expected an odd integer or 0", file=sys.stderr)
        return EXIT_USAGE
    records = [harmonic_record(idx) for idx in indices_of_degree(args.alpha, args.degree)]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["alpha", "m", "n", "k", "a", "b", "c", "re", "im"])
        for rec in records:
            for term in rec["cartesian"]:
                writer.writerow([rec["alpha"], rec["m"], rec["n"], rec["k"], term["a"], term["b"], term["c"],
                                 term["coeff"]["re"], term["coeff"]["im"]])
        text = buf.getvalue()
    else:
        rank = exact_rank(basis(args.alpha, args.degree))
        text = _dump({"alpha": args.alpha, "degree": args.degree, "rank": rank, "harmonics": records})
    _emit(text, args.output)
    return EXIT_OK if all(r["verified"] for r in records) else EXIT_FAIL


def cmd_verify(args) -> int:
    reports = verify(args.alpha, args.max_degree, jobs=args.jobs)
    lines = "".join(json.dumps(r.to_json()) + "\n" for r in reports)
    _emit(lines, args.output)
    failing = [r for r in reports if not r.passed]
    if failing:
        print(json.dumps(failing[0].to_json()), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_eval(args) -> int:
    idx = HarmonicIndex(args.alpha, args.m, args.n)
    pt = SphericalPoint(args.rho, args.theta, args.phi)
    spherical = eval_spherical(idx, pt)
    cartesian = eval_cartesian(solid_harmonic(idx), pt.to_hpoint())
    err = rel_err(spherical, cartesian)
    out = {
        "index": idx.to_json(),
        "point": {"rho": pt.rho, "theta": pt.theta, "phi": pt.phi},
        "spherical": _complex_json(spherical),
        "cartesian": _complex_json(cartesian),
        "abs_difference": abs(spherical - cartesian),
        "rel_difference": err,
    }
    _emit(_dump(out), args.output)
    return EXIT_OK if err < FLOAT_TOL else EXIT_FAIL


def cmd_gegenbauer(args) -> int:
    lam = Fraction(args.lam)
    series = gegenbauer_from_generating_function(lam, args.k)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "power", "coeff"])
        for k in range(args.k + 1):
            for j, c in enumerate(series[k].coeffs):
                writer.writerow([k, j, rational_to_str(c)])
        text = buf.getvalue()
    else:
        text = _dump({
            "lambda": rational_to_str(lam),
            "k": args.k,
            "coefficients": series[args.k].to_json(),
            "norm": _norm_json(lam, args.k),
        })
    _emit(text, args.output)
    return EXIT_OK


def _norm_json(lam, k):
    val = gegenbauer_norm(lam, k)
    return rational_to_str(val) if isinstance(val, Fraction) else val


def cmd_orthogonality(args) -> int:
    lam = Fraction(args.lam)
    gram = gram_matrix(lam, args.kmax)
    norms = [gegenbauer_norm(lam, k) for k in range(args.kmax + 1)]
    diag_err = max(abs(gram[k][k] - float(norms[k])) for k in range(args.kmax + 1))
    off = max((abs(gram[j][k]) for j in range(args.kmax + 1) for k in range(args.kmax + 1) if j != k), default=0.0)
    ok = diag_err < 1e-8 and off < 1e-8
    _emit(_dump({
        "lambda": rational_to_str(lam),
        "kmax": args.kmax,
        "quad_points": quad_points(),
        "gram": gram,
        "norm_formula": [rational_to_str(v) if isinstance(v, Fraction) else v for v in norms],
        "max_diagonal_error": diag_err,
        "max_off_diagonal": off,
        "status": "pass" if ok else "fail",
    }), args.output)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_r3_basis(args) -> int:
    polys = r3_basis(args.m)
    residuals = [len(apply_laplacian(p)) for p in polys]
    rank = exact_rank(polys)
    ok = all(r == 0 for r in residuals) and rank == 2 * args.m + 1
    _emit(_dump({
        "m": args.m,
        "rank": rank,
        "harmonics": [
            {"n": n, "polynomial": [
                {"x": a, "y": b, "w": c, "coeff": gaussian_to_json(coeff)} for (a, b, c), coeff in p.items()
            ], "laplacian_residual": "0" if r == 0 else f"{r} nonzero terms"}
            for n, p, r in zip(range(-args.m, args.m + 1), polys, residuals)
        ],
    }), args.output)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_quadrature(args) -> int:
    _emit(_dump(gauss_legendre_rule(args.points).to_json()), args.output)
    return EXIT_OK


def cmd_fundamental(args) -> int:
    pt = HPoint(complex(args.z_re, args.z_im), args.t)
    value = eval_fundamental_solution(args.alpha, pt)
    _emit(_dump({
        "alpha": args.alpha,
        "point": {"z": _complex_json(pt.z), "t": pt.t},
        "C_alpha": fundamental_constant(args.alpha),
        "value": _complex_json(value),
    }), args.output)
    return EXIT_OK


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="heisenharm", description="Exact spherical harmonics on the Heisenberg group H1.")
    sub = ap.add_subparsers(dest="command", required=True)

    def out(p):
        p.add_argument("--output", default=None, help="write to this path instead of stdout")

    p = sub.add_parser("basis", help="basis of L_alpha-harmonic polynomials of one degree")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--degree", "--m", dest="degree", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    out(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", help="run all checks for degrees 0..max-degree")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    out(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="evaluate one harmonic by the spherical and cartesian routes")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rho", type=float, default=1.0)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--phi", type=float, required=True)
    out(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("classical", help="Gegenbauer polynomials and R^3 harmonics")
    csub = p.add_subparsers(dest="classical_command", required=True)

    q = csub.add_parser("gegenbauer")
    q.add_argument("--lambda", dest="lam", required=True, help="rational, e.g. 1/2")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--format", choices=("json", "csv"), default="json")
    out(q)
    q.set_defaults(func=cmd_gegenbauer)

    q = csub.add_parser("orthogonality")
    q.add_argument("--lambda", dest="lam", required=True)
    q.add_argument("--kmax", type=int, required=True)
    out(q)
    q.set_defaults(func=cmd_orthogonality)

    q = csub.add_parser("r3-basis")
    q.add_argument("--m", type=int, required=True)
    out(q)
    q.set_defaults(func=cmd_r3_basis)

    q = csub.add_parser("quadrature")
    q.add_argument("--points", type=int, default=None)
    out(q)
    q.set_defaults(func=cmd_quadrature)

    p = sub.add_parser("fundamental", help="evaluate the fundamental solution Phi_alpha")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--z-re", type=float, required=True)
    p.add_argument("--z-im", type=float, default=0.0)
    p.add_argument("--t", type=float, required=True)
    out(p)
    p.set_defaults(func=cmd_fundamental)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "points", "unset") is None:
        args.points = quad_points()
    try:
        return args.func(args)
    except (DomainError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
