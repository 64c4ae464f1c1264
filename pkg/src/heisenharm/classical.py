"""Euclidean solid harmonics on R^3 and the quadrature used for the
orthogonality checks.

Coordinates are ``(x, y, w)``; ``w`` is the polar axis, so a harmonic of
degree ``m`` and azimuthal index ``n`` is
``e^{i n theta} r^m sin^{|n|}(phi) P^{|n|+1/2}_{m-|n|}(cos phi)``.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactnum import I, DomainError
from .hpoly import HPolynomial
from .specfun import UnivariatePoly, gegenbauer_from_generating_function

DEFAULT_QUAD_POINTS = 64


def quad_points() -> int:
    """Quadrature resolution, overridable through ``HEISENHARM_QUAD_POINTS``."""
    raw = os.environ.get("HEISENHARM_QUAD_POINTS")
    if not raw:
        return DEFAULT_QUAD_POINTS
    n = int(raw)
    if n < 1:
        raise DomainError("HEISENHARM_QUAD_POINTS must be a positive integer")
    return n


class EuclidPolynomial(HPolynomial):
    """Sparse polynomial in ``x, y, w`` with Gaussian-rational coefficients."""

    __slots__ = ()
    variables = ("x", "y", "w")

    def conjugate(self) -> "EuclidPolynomial":
        """Complex conjugate (the variables are real)."""
        return EuclidPolynomial._from_clean({m: c.conjugate() for m, c in self._terms.items()})

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def __call__(self, x, y, w):
        """Numeric evaluation; broadcasts over numpy arrays."""
        total = 0
        for (a, b, c), coeff in self._terms.items():
            total = total + complex(coeff) * x ** a * y ** b * w ** c
        return total


X = EuclidPolynomial.monomial(1, 0, 0)
Y = EuclidPolynomial.monomial(0, 1, 0)
W = EuclidPolynomial.monomial(0, 0, 1)
R2 = X * X + Y * Y + W * W


def _partial(p: EuclidPolynomial, slot: int) -> EuclidPolynomial:
    out = {}
    for mono, coeff in p._terms.items():
        e = mono[slot]
        if e:
            new = list(mono)
            new[slot] -= 1
            out[tuple(new)] = coeff * e
    return EuclidPolynomial._from_clean(out)


def apply_laplacian(p: EuclidPolynomial) -> EuclidPolynomial:
    """``d^2/dx^2 + d^2/dy^2 + d^2/dw^2``."""
    total = EuclidPolynomial()
    for slot in range(3):
        total = total + _partial(_partial(p, slot), slot)
    return total


def euler_operator(p: EuclidPolynomial) -> EuclidPolynomial:
    """``x d/dx + y d/dy + w d/dw``; multiplies a degree-m homogeneous p by m."""
    out = {m: c * sum(m) for m, c in p._terms.items() if sum(m)}
    return EuclidPolynomial._from_clean(out)


def classical_solid_harmonic(m: int, n: int) -> EuclidPolynomial:
    """``(x + i sgn(n) y)^{|n|} r^{m-|n|} P^{|n|+1/2}_{m-|n|}(w / r)`` as a polynomial."""
    if m < 0 or abs(n) > m:
        raise DomainError(f"invalid classical index m={m}, n={n}: need |n| <= m")
    j = m - abs(n)
    gegen = gegenbauer_from_generating_function(Fraction(2 * abs(n) + 1, 2), j)[j]
    radial = EuclidPolynomial()
    r2_pows = [EuclidPolynomial.constant(1)]
    for _ in range(j // 2):
        r2_pows.append(r2_pows[-1] * R2)
    for i, c in enumerate(gegen.coeffs):
        if not c:
            continue
        # r^j (w/r)^i = w^i (r^2)^((j - i)/2); Gegenbauer parity keeps j - i even
        radial = radial + EuclidPolynomial.monomial(0, 0, i, c) * r2_pows[(j - i) // 2]
    sgn = 1 if n >= 0 else -1
    angular = (X + Y * (I * sgn)) ** abs(n)
    return angular * radial


def r3_basis(m: int) -> list[EuclidPolynomial]:
    """``2m + 1`` harmonics of degree ``m``, ``n = -m..m``."""
    return [classical_solid_harmonic(m, n) for n in range(-m, m + 1)]


# -- quadrature ---------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureRule:
    nodes: tuple
    weights: tuple
    a: float = -1.0
    b: float = 1.0

    @property
    def exactness_degree(self) -> int:
        return 2 * len(self.nodes) - 1

    def integrate(self, f) -> float:
        x = np.asarray(self.nodes)
        return np.dot(np.asarray(self.weights), f(x))

    def mapped(self, a: float, b: float) -> "QuadratureRule":
        """Affine image of the rule on ``[a, b]``."""
        half = 0.5 * (b - a) / (self.b - self.a)
        mid = 0.5 * (a + b)
        c0 = 0.5 * (self.a + self.b)
        nodes = tuple(mid + 2 * half * (x - c0) for x in self.nodes)
        weights = tuple(2 * half * wt for wt in self.weights)
        return QuadratureRule(nodes, weights, a, b)

    def to_json(self) -> dict:
        return {
            "interval": [self.a, self.b],
            "nodes": list(self.nodes),
            "weights": list(self.weights),
            "exactness_degree": self.exactness_degree,
        }


def legendre_with_derivative(n: int, x: float) -> tuple[float, float]:
    """``(P_n(x), P_n'(x))`` via the Bonnet recurrence."""
    p_prev, p = 1.0, x
    if n == 0:
        return 1.0, 0.0
    for j in range(2, n + 1):
        p_prev, p = p, ((2 * j - 1) * x * p - (j - 1) * p_prev) / j
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def gauss_legendre_rule(n: int) -> QuadratureRule:
    """n-point Gauss-Legendre rule on ``[-1, 1]``.

    Nodes by Newton iteration on ``P_n`` from the asymptotic initial guesses,
    weights ``2 / ((1 - x^2) P_n'(x)^2)``.
    """
    if n < 1:
        raise DomainError("a Gauss-Legendre rule needs at least one node")
    nodes = []
    weights = []
    for i in range(n):
        x = math.cos(math.pi * (i + 0.75) / (n + 0.5))
        for _ in range(100):
            p, dp = legendre_with_derivative(n, x)
            dx = p / dp
            x -= dx
            if abs(dx) < 1e-16:
                break
        _, dp = legendre_with_derivative(n, x)
        nodes.append(x)
        weights.append(2.0 / ((1.0 - x * x) * dp * dp))
    order = sorted(range(n), key=nodes.__getitem__)
    nodes = [nodes[i] for i in order]
    weights = [weights[i] for i in order]
    if n % 2:
        nodes[n // 2] = 0.0
    return QuadratureRule(tuple(nodes), tuple(weights))


def sphere_inner_product(f: EuclidPolynomial, g: EuclidPolynomial, points: int | None = None) -> complex | float:
    """``<f, g> = integral over S^2 of f conj(g)``.

    Gauss-Legendre in ``cos(phi)`` times an equispaced (trapezoid) rule in
    ``theta`` with ``4m + 4`` points, ``m`` the larger degree.
    """
    points = points or quad_points()
    m = max(f.degree, g.degree, 0)
    n_theta = 4 * m + 4
    rule = gauss_legendre_rule(points)
    u = np.asarray(rule.nodes)[:, None]
    wu = np.asarray(rule.weights)[:, None]
    theta = 2.0 * np.pi * np.arange(n_theta)[None, :] / n_theta
    s = np.sqrt(1.0 - u * u)
    x, y = s * np.cos(theta), s * np.sin(theta)
    w = np.broadcast_to(u, x.shape)
    vals = np.asarray(f(x, y, w), dtype=complex) * np.conj(np.asarray(g(x, y, w), dtype=complex))
    total = complex(np.sum(wu * vals) * (2.0 * np.pi / n_theta))
    if all(c.is_real() for c in f._terms.values()) and all(c.is_real() for c in g._terms.values()):
        return total.real
    return total


def weighted_interval_integral(f: UnivariatePoly, g: UnivariatePoly, lam, points: int | None = None) -> float:
    """``integral_{-1}^{1} f g (1 - x^2)^{lam - 1/2} dx``.

    Substituting ``x = cos(phi)`` gives ``integral_0^pi f g sin^{2 lam}(phi) dphi``,
    which is handed to Gauss-Legendre on ``[0, pi]``. The integrand is smooth
    when ``2 lam`` is an integer; otherwise the endpoint behaviour of
    ``sin^{2 lam}`` limits accuracy to roughly 1e-6 at the default resolution.
    """
    lam = float(Fraction(lam))
    if lam <= -0.5:
        raise DomainError("weight exponent requires lambda > -1/2")
    points = points or quad_points()
    rule = gauss_legendre_rule(points).mapped(0.0, math.pi)
    total = 0.0
    for phi, wt in zip(rule.nodes, rule.weights):
        c = math.cos(phi)
        total += wt * f(c) * g(c) * math.sin(phi) ** (2 * lam)
    return total


def gram_matrix(lam, k_max: int, points: int | None = None) -> list[list[float]]:
    """Weighted inner products of ``P_j^lam, P_k^lam`` for ``j, k <= k_max``."""
    series = gegenbauer_from_generating_function(lam, k_max)
    return [
        [weighted_interval_integral(series[j], series[k], lam, points) for k in range(k_max + 1)]
        for j in range(k_max + 1)
    ]


__all__ = [
    "DEFAULT_QUAD_POINTS",
    "quad_points",
    "EuclidPolynomial",
    "apply_laplacian",
    "euler_operator",
    "classical_solid_harmonic",
    "r3_basis",
    "QuadratureRule",
    "legendre_with_derivative",
    "gauss_legendre_rule",
    "sphere_inner_product",
    "weighted_interval_integral",
    "gram_matrix",
]
