"""Per-index verification of the constructed harmonics."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import value_to_json
from .harmonics import (
    ROUTES,
    HarmonicIndex,
    SphericalPoint,
    H_from_generating_function,
    H_trig,
    basis,
    basis_rank,
    conjugate_harmonic,
    eval_spherical,
    h_polynomial,
    indices_of_degree,
    is_degenerate,
    ode_residual,
    reference_harmonics_alpha0,
    solid_harmonic,
    y_polynomial,
)
from .hpoly import apply_L_alpha, dilate, eval_cartesian, heisenberg_degree, same_span
from .specfun import proportionality_constant

FLOAT_TOL = 1e-12
TRIG_SAMPLES = 20


def rel_err(a: complex, b: complex) -> float:
    """``|a - b| / max(1, |b|)``."""
    return abs(a - b) / max(1.0, abs(b))


@dataclass
class Check:
    name: str
    passed: bool
    residual: str = "0"

    def to_json(self) -> dict:
        return {"name": self.name, "status": "pass" if self.passed else "fail", "residual": self.residual}


@dataclass
class VerificationReport:
    index: HarmonicIndex
    checks: list = field(default_factory=list)
    conjugation_route: bool = False

    @property
    def route_agreement(self) -> bool:
        return all(c.passed for c in self.checks if c.name.startswith("route:"))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "index": self.index.to_json(),
            "status": "pass" if self.passed else "fail",
            "route_agreement": self.route_agreement,
            "conjugation_route": self.conjugation_route,
            "checks": [c.to_json() for c in self.checks],
        }


def _exact(name: str, residual_terms: int) -> Check:
    return Check(name, residual_terms == 0, "0" if residual_terms == 0 else f"{residual_terms} nonzero terms")


def _trig_identity_error(idx: HarmonicIndex) -> float:
    h = h_polynomial(idx)
    trig = H_trig(idx)
    k = idx.k
    sign = -1 if k % 2 else 1
    worst = 0.0
    for j in range(TRIG_SAMPLES):
        phi = math.pi * (j + 0.5) / TRIG_SAMPLES
        lhs = math.sin(phi) ** k * h(complex(1.0 / math.tan(phi)))
        rhs = sign * trig(phi)
        worst = max(worst, rel_err(lhs, rhs))
    return worst


def verify_index(idx: HarmonicIndex) -> VerificationReport:
    report = VerificationReport(idx, conjugation_route=is_degenerate(idx))
    checks = report.checks
    p = solid_harmonic(idx)

    checks.append(_exact("harmonicity", len(apply_L_alpha(p, idx.alpha))))

    deg = heisenberg_degree(p)
    scaled_ok = all(dilate(p, lam) == p * Fraction(lam) ** idx.m for lam in (2, Fraction(3, 2)))
    checks.append(Check("homogeneity", deg == idx.m and scaled_ok, "0" if deg == idx.m else f"degree {deg}"))

    ys = {route: y_polynomial(idx, route) for route in ROUTES}
    base = ys["recurrence"]
    mismatched = [r for r, y in ys.items() if y != base]
    checks.append(Check("route:series", not mismatched, "0" if not mismatched else "mismatch: " + ",".join(mismatched)))

    h = h_polynomial(idx)
    const = proportionality_constant(h, base)
    ok = const is not None and bool(const)
    checks.append(Check("route:binomial_vs_series", ok, str(value_to_json(const)) if ok else "not proportional"))

    gf = H_from_generating_function(idx.alpha, idx.n, idx.k)[idx.k]
    checks.append(Check("route:generating_function", gf == H_trig(idx), "0" if gf == H_trig(idx) else "mismatch"))

    conj = conjugate_harmonic(solid_harmonic(idx.conjugate()))
    checks.append(_exact("route:conjugation", len(conj - p)))

    checks.append(_exact("ode_residual", len(ode_residual(h, idx)) + len(ode_residual(base, idx))))

    err = _trig_identity_error(idx)
    checks.append(Check("trig_identity", err < FLOAT_TOL, repr(err)))

    worst = 0.0
    for rho, theta, phi in ((0.7, 0.3, 0.9), (1.0, 2.0, 2.2), (1.3, 4.5, 1.4)):
        sp = SphericalPoint(rho, theta, phi)
        worst = max(worst, rel_err(eval_spherical(idx, sp), eval_cartesian(p, sp.to_hpoint())))
    checks.append(Check("spherical_vs_cartesian", worst < FLOAT_TOL, repr(worst)))
    return report


def verify_degree(alpha: int, m: int) -> list[VerificationReport]:
    reports = [verify_index(idx) for idx in indices_of_degree(alpha, m)]
    rank = basis_rank(alpha, m)
    dim = Check("dimension", rank == m + 1, f"rank {rank}")
    table = None
    if alpha == 0 and m <= 4:
        ok = same_span(basis(0, m), reference_harmonics_alpha0(m))
        table = Check("reference_table", ok, "0" if ok else "span differs")
    for r in reports:
        r.checks.append(dim)
        if table is not None:
            r.checks.append(table)
    return reports


def _verify_degree_args(args):
    return verify_degree(*args)


def verify(alpha: int, max_degree: int, jobs: int = 1) -> list[VerificationReport]:
    """All reports for ``m = 0..max_degree`` in index order."""
    tasks = [(alpha, m) for m in range(max_degree + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_verify_degree_args, tasks))
    else:
        chunks = [verify_degree(*t) for t in tasks]
    return [r for chunk in chunks for r in chunk]
