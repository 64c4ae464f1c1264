"""Solid L_alpha-spherical harmonics on H1.

A basis harmonic of Heisenberg degree ``m`` and angular index ``n`` has the
polar form ``e^{i n theta} rho^m sin^{m/2}(phi) h(cot phi)`` where ``h`` has
degree ``k = (m - |n|)/2``. Several independent constructions of ``h`` are
provided so they can be checked against one another:

* ``"recurrence"``     -- series ``sum a_v (x - i)^v`` with ``a_0 = 1`` and the
  two-term recurrence for ``a_{v+1}``;
* ``"closed_form"``    -- ``a_v`` as a ratio of Pochhammer symbols;
* ``"hypergeometric"`` -- a terminating 2F1 evaluated at ``(1 + i x)/2``;
* ``"euler"``          -- the same 2F1 after Euler's transformation;
* :func:`h_polynomial` -- a binomial sum in ``(x + i)`` and ``(x - i)``;
* :func:`H_from_generating_function` -- coefficients of a two-factor
  generating function, compared with :func:`H_trig`.

The binomial form is the canonical one: it needs no division and exists for
every index. The series routes break down for some negative ``alpha``; there
the ``(-alpha, -n)`` construction is conjugated instead (swap ``z`` and
``zbar``, conjugate coefficients), which intertwines ``L_alpha`` and
``L_{-alpha}``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import I, DomainError, GaussianRational, gen_binomial, pochhammer, gaussian_to_json
from .hpoly import (
    T_VAR,
    Z_VAR,
    ZBAR_VAR,
    HPoint,
    HPolynomial,
    exact_rank,
)
from .specfun import (
    UnivariatePoly,
    euler_transform_polynomial,
    gamma_real,
    gegenbauer_from_generating_function,
    hyp2f1_terminating,
)

HALF = Fraction(1, 2)
ROUTES = ("recurrence", "closed_form", "hypergeometric", "euler")


class DegenerateRecurrenceError(DomainError):
    """The leading factor of the coefficient recurrence vanishes before ``v = k``."""


@dataclass(frozen=True)
class HarmonicIndex:
    """Index ``(alpha, m, n)`` of one basis harmonic; ``k = (m - |n|)/2``."""

    alpha: int
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0:
            raise DomainError(f"degree m must be natural, got {self.m}")
        if abs(self.n) > self.m or (self.m - self.n) % 2:
            raise DomainError(
                f"invalid index m={self.m}, n={self.n}: need |n| <= m and m = n (mod 2)"
            )

    @property
    def k(self) -> int:
        return (self.m - abs(self.n)) // 2

    def conjugate(self) -> "HarmonicIndex":
        return HarmonicIndex(-self.alpha, self.m, -self.n)

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "m": self.m, "n": self.n, "k": self.k}


def indices_of_degree(alpha: int, m: int) -> list[HarmonicIndex]:
    return [HarmonicIndex(alpha, m, n) for n in range(-m, m + 1, 2)]


def is_supported_alpha(alpha) -> bool:
    return alpha == 0 or (float(alpha).is_integer() and int(alpha) % 2 == 1)


# -- coefficient sequences -------------------------------------------------------

def recurrence_factor(idx: HarmonicIndex, v: int) -> int:
    """Integer factor ``2v - alpha - n - m + 1`` multiplying ``i (v+1) a_{v+1}``."""
    return 2 * v - idx.alpha - idx.n - idx.m + 1


def degenerate_steps(idx: HarmonicIndex) -> list[int]:
    """Steps ``v < k`` at which the recurrence cannot be solved for ``a_{v+1}``."""
    return [v for v in range(idx.k) if recurrence_factor(idx, v) == 0]


def is_degenerate(idx: HarmonicIndex) -> bool:
    return bool(degenerate_steps(idx))


def _require_nondegenerate(idx: HarmonicIndex):
    bad = degenerate_steps(idx)
    if bad:
        raise DegenerateRecurrenceError(
            f"recurrence degenerate for (alpha={idx.alpha}, m={idx.m}, n={idx.n}) at v={bad[0]}"
        )


def coeffs_recurrence(idx: HarmonicIndex) -> list[GaussianRational]:
    """``a_0 .. a_k`` from
    ``i (2v - alpha - n - m + 1)(v+1) a_{v+1} + (v^2 - m v + (m^2 - n^2)/4) a_v = 0``.
    """
    _require_nondegenerate(idx)
    m, n = idx.m, idx.n
    a = [GaussianRational(1)]
    for v in range(idx.k):
        lower = Fraction(v * v - m * v) + Fraction(m * m - n * n, 4)
        upper = I * (recurrence_factor(idx, v) * (v + 1))
        a.append(-(a[v] * lower) / upper)
    return a


def hypergeometric_parameters(idx: HarmonicIndex) -> tuple[Fraction, Fraction, Fraction]:
    """``(a, b, c)`` with ``y(x) = F(a, b; c; (1 + i x)/2)``."""
    m, n, alpha = idx.m, idx.n, idx.alpha
    return (
        Fraction(-idx.k),
        Fraction(-(m + abs(n)), 2),
        Fraction(-(m + n), 2) - Fraction(alpha - 1, 2),
    )


def coeffs_closed_form(idx: HarmonicIndex) -> list[GaussianRational]:
    """``a_v = (i/2)^v (a)_v (b)_v / ((c)_v v!)`` with ``(a, b, c)`` from
    :func:`hypergeometric_parameters`."""
    a, b, c = hypergeometric_parameters(idx)
    if any(c + j == 0 for j in range(idx.k)):
        raise DegenerateRecurrenceError(
            f"(c)_v vanishes for (alpha={idx.alpha}, m={idx.m}, n={idx.n}), c={c}"
        )
    half_i = I / 2
    return [
        half_i ** v * (pochhammer(a, v) * pochhammer(b, v) / (pochhammer(c, v) * math.factorial(v)))
        for v in range(idx.k + 1)
    ]


# -- the polynomial y(x) ----------------------------------------------------------

X_MINUS_I = UnivariatePoly([-I, 1])
X_PLUS_I = UnivariatePoly([I, 1])
_HYP_ARGUMENT = UnivariatePoly([HALF, I / 2])  # (1 + i x)/2


def y_from_coefficients(a) -> UnivariatePoly:
    """``sum a_v (x - i)^v``."""
    total = UnivariatePoly()
    power = UnivariatePoly([1])
    for coeff in a:
        total = total + power * coeff
        power = power * X_MINUS_I
    return total


def _y_direct(idx: HarmonicIndex, route: str) -> UnivariatePoly:
    if route == "recurrence":
        return y_from_coefficients(coeffs_recurrence(idx))
    if route == "closed_form":
        return y_from_coefficients(coeffs_closed_form(idx))
    a, b, c = hypergeometric_parameters(idx)
    if route == "hypergeometric":
        _require_nondegenerate(idx)
        return hyp2f1_terminating(a, b, c).compose(_HYP_ARGUMENT)
    if route == "euler":
        _require_nondegenerate(idx)
        return euler_transform_polynomial(a, b, c).compose(_HYP_ARGUMENT)
    raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")


def y_polynomial(idx: HarmonicIndex, route: str = "recurrence") -> UnivariatePoly:
    """Polynomial solution of the reduced ODE, normalized by ``a_0 = 1`` at ``x = i``.

    When the chosen series route degenerates, the conjugate of the
    ``(-alpha, -n)`` solution is returned instead (still a solution, but its
    value at ``x = i`` may be zero).
    """
    if is_degenerate(idx):
        conj = idx.conjugate()
        if is_degenerate(conj):
            raise DegenerateRecurrenceError(
                f"both (alpha={idx.alpha}, n={idx.n}) and its conjugate are degenerate at m={idx.m}"
            )
        return _y_direct(conj, route).conjugate()
    return _y_direct(idx, route)


def ode_residual(poly: UnivariatePoly, idx: HarmonicIndex) -> UnivariatePoly:
    """``(1+x^2) y'' - (i(alpha+n) + (m-1) x) y' + (m^2-n^2)/4 y``."""
    m, n, alpha = idx.m, idx.n, idx.alpha
    d1 = poly.derivative()
    d2 = d1.derivative()
    return (
        UnivariatePoly([1, 0, 1]) * d2
        - UnivariatePoly([I * (alpha + n), m - 1]) * d1
        + poly * Fraction(m * m - n * n, 4)
    )


# -- binomial form and trigonometric polynomials ----------------------------------

def binomial_uppers(alpha, n: int) -> tuple[Fraction, Fraction]:
    """Upper arguments ``-(|n|+n)/2 - (alpha+1)/2`` and ``-(|n|-n)/2 + (alpha-1)/2``."""
    alpha = Fraction(alpha)
    return (
        Fraction(-(abs(n) + n), 2) - (alpha + 1) / 2,
        Fraction(-(abs(n) - n), 2) + (alpha - 1) / 2,
    )


def binomial_weights(alpha, n: int, k: int) -> list[Fraction]:
    """``C(p, v) C(q, k - v)`` for ``v = 0..k``, with ``(p, q)`` from :func:`binomial_uppers`."""
    p, q = binomial_uppers(alpha, n)
    return [gen_binomial(p, v) * gen_binomial(q, k - v) for v in range(k + 1)]


def h_polynomial(idx: HarmonicIndex) -> UnivariatePoly:
    """``sum_v C(p, v) C(q, k-v) (x + i)^v (x - i)^(k-v)``; degree exactly ``k``."""
    k = idx.k
    total = UnivariatePoly()
    for v, w in enumerate(binomial_weights(idx.alpha, idx.n, k)):
        if w:
            total = total + (X_PLUS_I ** v) * (X_MINUS_I ** (k - v)) * w
    return total


@dataclass(frozen=True)
class TrigPolynomial:
    """``sum_v coeffs[v] e^{i (2v - k) phi}`` for ``v = 0..k``."""

    k: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.k + 1:
            raise ValueError("TrigPolynomial needs exactly k + 1 coefficients")

    def __call__(self, phi: float) -> complex:
        return sum(
            complex(GaussianRational(c)) * cmath.exp(1j * (2 * v - self.k) * phi)
            for v, c in enumerate(self.coeffs)
        )

    def __neg__(self):
        return TrigPolynomial(self.k, tuple(-c for c in self.coeffs))

    def to_json(self) -> list:
        return [gaussian_to_json(c) for c in self.coeffs]


def trig_polynomial(alpha, n: int, k: int) -> TrigPolynomial:
    """``H_k^{(alpha, n)}``: the binomial weights times ``(-1)^k``."""
    sign = -1 if k % 2 else 1
    return TrigPolynomial(k, tuple(sign * w for w in binomial_weights(alpha, n, k)))


def H_trig(idx: HarmonicIndex) -> TrigPolynomial:
    return trig_polynomial(idx.alpha, idx.n, idx.k)


def _rising_series(a: Fraction, k_max: int) -> list[Fraction]:
    """Coefficients of ``(1 - y)^(-a) = sum (a)_j / j! y^j`` by term ratios."""
    out = [Fraction(1)]
    for j in range(k_max):
        out.append(out[-1] * (a + j) / (j + 1))
    return out


def H_from_generating_function(alpha, n: int, k_max: int) -> list[TrigPolynomial]:
    """Coefficients of ``rho^k`` in
    ``(1 - rho w)^(-(|n|+n)/2-(alpha+1)/2) (1 - rho/w)^(-(|n|-n)/2+(alpha-1)/2)``,
    ``w = e^{i phi}``, for ``k = 0..k_max``.

    Each factor is a power series in ``rho`` whose ``j``-th coefficient is a
    single Laurent monomial ``w^{+j}`` resp. ``w^{-j}``; the product is formed
    as a Cauchy product collecting Laurent exponents.
    """
    p, q = binomial_uppers(alpha, n)
    left = _rising_series(-p, k_max)    # multiplies w^{+j}
    right = _rising_series(-q, k_max)   # multiplies w^{-j}
    out = []
    for k in range(k_max + 1):
        laurent: dict[int, Fraction] = {}
        for j in range(k + 1):
            e = j - (k - j)
            laurent[e] = laurent.get(e, Fraction(0)) + left[j] * right[k - j]
        out.append(TrigPolynomial(k, tuple(laurent.get(2 * v - k, Fraction(0)) for v in range(k + 1))))
    return out


def trig_from_cos_polynomial(poly: UnivariatePoly, k: int) -> TrigPolynomial:
    """Rewrite ``poly(cos phi)`` in the basis ``e^{i(2v - k) phi}``.

    Requires ``deg poly <= k`` and ``poly`` of parity ``k`` (as Gegenbauer
    polynomials are).
    """
    if poly.degree > k:
        raise DomainError("polynomial degree exceeds k")
    laurent: dict[int, Fraction] = {}
    for j, c in enumerate(poly.coeffs):
        if not c:
            continue
        if (k - j) % 2:
            raise DomainError("polynomial parity does not match k")
        # ((w + 1/w)/2)^j = 2^-j sum_s C(j, s) w^(j - 2s)
        for s in range(j + 1):
            e = j - 2 * s
            laurent[e] = laurent.get(e, Fraction(0)) + c * math.comb(j, s) / 2 ** j
    return TrigPolynomial(k, tuple(laurent.get(2 * v - k, Fraction(0)) for v in range(k + 1)))


def gegenbauer_index_pairs(ell: int, k_max: int = 4, search: int | None = None) -> list[tuple[int, int]]:
    """All integer pairs ``(alpha, n)`` with ``|alpha|, |n| <= search`` such that
    ``H_k^{(alpha, n)}(e^{i phi}) == P_k^{ell+1/2}(cos phi)`` exactly for ``k <= k_max``.

    Found by brute-force coefficient comparison.
    """
    if search is None:
        search = 2 * ell + 3
    lam = Fraction(2 * ell + 1, 2)
    series = gegenbauer_from_generating_function(lam, k_max)
    targets = [trig_from_cos_polynomial(series[k], k) for k in range(k_max + 1)]
    found = []
    for alpha in range(-search, search + 1):
        for n in range(-search, search + 1):
            if all(trig_polynomial(alpha, n, k) == targets[k] for k in range(k_max + 1)):
                found.append((alpha, n))
    return found


# -- solid harmonics ---------------------------------------------------------------

_T_PLUS = T_VAR + Z_VAR * ZBAR_VAR * I    # t + i|z|^2 = rho^2 e^{i phi}
_T_MINUS = T_VAR - Z_VAR * ZBAR_VAR * I   # t - i|z|^2 = rho^2 e^{-i phi}


def solid_harmonic(idx: HarmonicIndex) -> HPolynomial:
    """Cartesian form of ``e^{i n theta} rho^m sin^{|n|/2}(phi) H_k(e^{i phi})``.

    Uses ``z^n`` (or ``zbar^|n|``) for the angular part and
    ``rho^{2k} e^{i(2v-k) phi} = (t + i|z|^2)^v (t - i|z|^2)^(k-v)``.
    """
    trig = H_trig(idx)
    k = idx.k
    plus_pows = [HPolynomial.constant(1)]
    minus_pows = [HPolynomial.constant(1)]
    for _ in range(k):
        plus_pows.append(plus_pows[-1] * _T_PLUS)
        minus_pows.append(minus_pows[-1] * _T_MINUS)
    body = HPolynomial()
    for v, c in enumerate(trig.coeffs):
        if c:
            body = body + plus_pows[v] * minus_pows[k - v] * c
    angular = HPolynomial.monomial(max(idx.n, 0), max(-idx.n, 0), 0)
    return angular * body


def conjugate_harmonic(p: HPolynomial) -> HPolynomial:
    """Swap ``z <-> zbar`` and conjugate coefficients.

    ``L_alpha p = 0`` implies ``L_{-alpha} (conjugate_harmonic p) = 0``.
    """
    return p.conjugate()


def basis(alpha: int, m: int) -> list[HPolynomial]:
    """Solid harmonics for ``n = -m, -m+2, ..., m`` (``m + 1`` of them).

    ``alpha`` must be odd or zero.
    """
    if not is_supported_alpha(alpha):
        raise DomainError(f"unsupported alpha={alpha}: expected an odd integer or 0")
    return [solid_harmonic(idx) for idx in indices_of_degree(int(alpha), m)]


def basis_rank(alpha: int, m: int) -> int:
    return exact_rank(basis(alpha, m))


def reference_harmonics_alpha0(m: int) -> list[HPolynomial]:
    """Hand-written L_0-harmonics of degree ``m <= 4`` (the classical low-degree lists)."""
    z, zb, t = Z_VAR, ZBAR_VAR, T_VAR
    r2 = z * zb
    table = {
        0: [HPolynomial.constant(1)],
        1: [z, zb],
        2: [z ** 2, zb ** 2, t],
        3: [z ** 3, zb ** 3, z * (r2 - t * I * 2), zb * (r2 + t * I * 2)],
        4: [
            z ** 4,
            zb ** 4,
            z ** 2 * (r2 - t * I * Fraction(3, 2)),
            zb ** 2 * (r2 + t * I * Fraction(3, 2)),
            r2 ** 2 - t ** 2 * 2,
        ],
    }
    if m not in table:
        raise DomainError("reference lists exist only for m <= 4")
    return table[m]


# -- evaluation --------------------------------------------------------------------

@dataclass(frozen=True)
class SphericalPoint:
    """Heisenberg polar coordinates: ``z = rho sin^{1/2}(phi) e^{i theta}``,
    ``t = rho^2 cos(phi)``."""

    rho: float
    theta: float
    phi: float

    def __post_init__(self):
        if self.rho < 0:
            raise DomainError("rho must be non-negative")
        if not 0.0 <= self.phi <= math.pi:
            raise DomainError("phi must lie in [0, pi]")

    def to_hpoint(self) -> HPoint:
        r = self.rho * math.sqrt(math.sin(self.phi))
        return HPoint(cmath.rect(r, self.theta), self.rho ** 2 * math.cos(self.phi))

    @classmethod
    def from_hpoint(cls, pt: HPoint) -> "SphericalPoint":
        r2 = abs(pt.z) ** 2
        rho = (r2 * r2 + pt.t * pt.t) ** 0.25
        phi = math.atan2(r2, pt.t)
        theta = cmath.phase(pt.z) % (2 * math.pi) if pt.z else 0.0
        return cls(rho, theta, phi)


def eval_spherical(idx: HarmonicIndex, pt: SphericalPoint) -> complex:
    """``rho^m e^{i n theta} sin^{|n|/2}(phi) H_k(e^{i phi})``; finite at ``phi = 0, pi``."""
    radial = pt.rho ** idx.m * math.sin(pt.phi) ** (abs(idx.n) / 2)
    return radial * cmath.exp(1j * idx.n * pt.theta) * H_trig(idx)(pt.phi)


def boundary_value(idx: HarmonicIndex, theta: float, phi: float) -> complex:
    """Restriction of the solid harmonic to the unit Heisenberg sphere ``rho = 1``."""
    return eval_spherical(idx, SphericalPoint(1.0, theta, phi))


# -- fundamental solution ------------------------------------------------------------

def _check_fundamental_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if alpha.is_integer() and int(alpha) % 2 == 1:
        raise DomainError(
            f"alpha={alpha:g} is an odd integer: C_alpha has a Gamma pole and no fundamental solution"
        )
    return alpha


def fundamental_constant(alpha: float) -> float:
    """``C_alpha = Gamma((1+alpha)/2) Gamma((1-alpha)/2) / pi^2``."""
    alpha = _check_fundamental_alpha(alpha)
    return gamma_real((1 + alpha) / 2) * gamma_real((1 - alpha) / 2) / math.pi ** 2


def eval_fundamental_solution(alpha: float, pt: HPoint) -> complex:
    """``C_alpha (|z|^4 + t^2)^{-1/2} ((|z|^2 + i t)/(|z|^2 - i t))^{alpha/2}``.

    The power uses the principal branch, ``arg`` in ``(-pi, pi]``.
    """
    alpha = _check_fundamental_alpha(alpha)
    r2 = abs(pt.z) ** 2
    if r2 == 0 and pt.t == 0:
        raise DomainError("the fundamental solution is singular at the origin")
    arg = 2.0 * math.atan2(pt.t, r2)
    if arg <= -math.pi:
        arg += 2.0 * math.pi
    return fundamental_constant(alpha) * (r2 * r2 + pt.t * pt.t) ** -0.5 * cmath.exp(0.5j * alpha * arg)


def fundamental_residual(alpha: float, pt: HPoint, h: float = 1e-4) -> complex:
    """Central-difference value of ``(-1/4 (X^2 + Y^2) + i alpha T) Phi_alpha`` at ``pt``.

    In real coordinates ``X^2 + Y^2 = d_xx + d_yy + 4y d_xt - 4x d_yt + 4(x^2+y^2) d_tt``.
    """
    alpha = float(alpha)
    x0, y0, t0 = pt.z.real, pt.z.imag, pt.t

    def f(x, y, t):
        return eval_fundamental_solution(alpha, HPoint(complex(x, y), t))

    c = f(x0, y0, t0)
    fxx = (f(x0 + h, y0, t0) - 2 * c + f(x0 - h, y0, t0)) / h ** 2
    fyy = (f(x0, y0 + h, t0) - 2 * c + f(x0, y0 - h, t0)) / h ** 2
    ftt = (f(x0, y0, t0 + h) - 2 * c + f(x0, y0, t0 - h)) / h ** 2
    ft = (f(x0, y0, t0 + h) - f(x0, y0, t0 - h)) / (2 * h)
    fxt = (f(x0 + h, y0, t0 + h) - f(x0 + h, y0, t0 - h)
           - f(x0 - h, y0, t0 + h) + f(x0 - h, y0, t0 - h)) / (4 * h ** 2)
    fyt = (f(x0, y0 + h, t0 + h) - f(x0, y0 + h, t0 - h)
           - f(x0, y0 - h, t0 + h) + f(x0, y0 - h, t0 - h)) / (4 * h ** 2)
    real_sub = fxx + fyy + 4 * y0 * fxt - 4 * x0 * fyt + 4 * (x0 ** 2 + y0 ** 2) * ftt
    return -0.25 * real_sub + 1j * alpha * ft


__all__ = [
    "ROUTES",
    "DegenerateRecurrenceError",
    "HarmonicIndex",
    "TrigPolynomial",
    "SphericalPoint",
    "indices_of_degree",
    "is_supported_alpha",
    "recurrence_factor",
    "degenerate_steps",
    "is_degenerate",
    "coeffs_recurrence",
    "coeffs_closed_form",
    "hypergeometric_parameters",
    "y_from_coefficients",
    "y_polynomial",
    "ode_residual",
    "binomial_uppers",
    "binomial_weights",
    "h_polynomial",
    "trig_polynomial",
    "H_trig",
    "H_from_generating_function",
    "trig_from_cos_polynomial",
    "gegenbauer_index_pairs",
    "solid_harmonic",
    "conjugate_harmonic",
    "basis",
    "basis_rank",
    "reference_harmonics_alpha0",
    "eval_spherical",
    "boundary_value",
    "fundamental_constant",
    "eval_fundamental_solution",
    "fundamental_residual",
]
