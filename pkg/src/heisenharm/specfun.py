"""Terminating Gauss hypergeometric series and Gegenbauer polynomials with
exact coefficients.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import DomainError, GaussianRational, gen_binomial, pochhammer, value_to_json


class PoleError(DomainError):
    """A Pochhammer symbol in a denominator vanishes."""


class UnsupportedInputError(DomainError):
    """The series does not terminate, so no polynomial exists."""


def _normalize(c):
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, GaussianRational) and c.is_real():
        return c.re
    return c


class UnivariatePoly:
    """Dense polynomial with exact coefficients, lowest degree first.

    Coefficients are Fractions or GaussianRationals; purely real Gaussian
    coefficients are stored as Fractions so equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [_normalize(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UnivariatePoly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> "UnivariatePoly":
        return cls([c])

    @property
    def degree(self) -> int:
        """``len(coeffs) - 1``; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def leading(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, j: int):
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly([self[j] + other[j] for j in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UnivariatePoly):
            return UnivariatePoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UnivariatePoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UnivariatePoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return UnivariatePoly([c / scalar for c in self.coeffs])

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UnivariatePoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, UnivariatePoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == _lift(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> "UnivariatePoly":
        return UnivariatePoly([j * c for j, c in enumerate(self.coeffs)][1:])

    def compose(self, inner: "UnivariatePoly") -> "UnivariatePoly":
        """``self(inner(x))`` via Horner."""
        result = UnivariatePoly()
        for c in reversed(self.coeffs):
            result = result * inner + UnivariatePoly([c])
        return result

    def reflect(self) -> "UnivariatePoly":
        """``p(-x)``."""
        return UnivariatePoly([c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs)])

    def conjugate(self) -> "UnivariatePoly":
        return UnivariatePoly(
            [c.conjugate() if isinstance(c, GaussianRational) else c for c in self.coeffs]
        )

    def __call__(self, x):
        """Horner evaluation; exact for exact ``x``, numeric for floats."""
        if isinstance(x, (float, complex)):
            acc = 0j if isinstance(x, complex) or any(isinstance(c, GaussianRational) for c in self.coeffs) else 0.0
            for c in reversed(self.coeffs):
                acc = acc * x + (complex(c) if isinstance(c, GaussianRational) else float(c))
            return acc
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list:
        return [value_to_json(c) for c in self.coeffs] or ["0"]

    def __repr__(self):
        return "UnivariatePoly([" + ", ".join(str(c) for c in self.coeffs) + "])"


def _lift(x) -> UnivariatePoly:
    if isinstance(x, UnivariatePoly):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return UnivariatePoly([x])
    raise TypeError(f"cannot lift {x!r} to a polynomial")


def proportionality_constant(p: UnivariatePoly, q: UnivariatePoly):
    """Return ``c`` with ``p == c * q`` exactly, or ``None`` if no such ``c``."""
    if q.is_zero():
        return None if not p.is_zero() else Fraction(0)
    if p.degree != q.degree:
        return None
    c = p.leading() / q.leading()
    return c if p == q * c else None


# -- hypergeometric ----------------------------------------------------------------

def _as_nonpositive_int(a) -> int:
    a = Fraction(a)
    if a.denominator != 1 or a > 0:
        raise UnsupportedInputError(f"2F1 terminates only for a = 0, -1, -2, ...; got a = {a}")
    return -a.numerator


def hyp2f1_terminating(a, b, c) -> UnivariatePoly:
    """``F(a, b; c; z)`` for ``a = -k`` as a degree-``k`` polynomial in ``z``.

    Terms are built by the ratio ``t_{v+1} / t_v = (a+v)(b+v) / ((c+v)(v+1))``.
    Raises :class:`PoleError` if ``c + v == 0`` for some ``v < k``.
    """
    k = _as_nonpositive_int(a)
    a, b, c = Fraction(a), _normalize(b), _normalize(c)
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for v in range(k):
        if c + v == 0:
            raise PoleError(f"(c)_v vanishes at v = {v + 1} for c = {c}")
        term = term * (a + v) * (b + v) / ((c + v) * (v + 1))
        coeffs.append(term)
    return UnivariatePoly(coeffs)


def euler_transform_polynomial(a, b, c) -> UnivariatePoly:
    """Right-hand side ``(1-z)**k F(-k, c-b; c; z/(z-1))`` as a polynomial.

    Uses ``(1-z)**k (z/(z-1))**v = (-1)**v z**v (1-z)**(k-v)``, so no division
    by polynomials is needed.
    """
    k = _as_nonpositive_int(a)
    inner = hyp2f1_terminating(a, c - b, c)
    z = UnivariatePoly.x()
    one_minus = UnivariatePoly([1, -1])
    total = UnivariatePoly()
    for v, f in enumerate(inner.coeffs):
        sign = -1 if v % 2 else 1
        total = total + (z ** v) * (one_minus ** (k - v)) * (f * sign)
    return total


def euler_transform_identity_check(a, b, c) -> bool:
    """Whether ``F(a,b;c;z) == (1-z)**(-a) F(a, c-b; c; z/(z-1))`` holds exactly."""
    return hyp2f1_terminating(a, b, c) == euler_transform_polynomial(a, b, c)


# -- Gegenbauer ------------------------------------------------------------------

@dataclass(frozen=True)
class GegenbauerSeries:
    lam: Fraction
    polys: tuple

    def __getitem__(self, k: int) -> UnivariatePoly:
        return self.polys[k]

    def __len__(self):
        return len(self.polys)


def _check_lambda(lam) -> Fraction:
    lam = Fraction(lam)
    if lam <= Fraction(-1, 2) or lam == 0:
        raise DomainError(f"Gegenbauer parameter must satisfy lambda > -1/2, lambda != 0; got {lam}")
    return lam


def gegenbauer_from_generating_function(lam, k_max: int) -> GegenbauerSeries:
    """Expand ``(1 - 2 r x + r**2)**(-lam)`` in powers of ``r`` up to ``r**k_max``.

    Writes the generating function as ``(1 + u)**(-lam)`` with ``u = r**2 - 2 x r``
    and sums the binomial series, truncating every power of ``u`` in ``r``.
    The coefficient of ``r**k`` is ``P_k^lam(x)``.
    """
    lam = _check_lambda(lam)
    if k_max < 0:
        raise DomainError("k_max must be a natural number")
    zero = UnivariatePoly()
    # power series in r: list index = power of r, entries are polynomials in x
    u = [zero, UnivariatePoly([0, -2]), UnivariatePoly([1])][: k_max + 1]
    u += [zero] * (k_max + 1 - len(u))
    result = [UnivariatePoly([1])] + [zero] * k_max
    u_pow = [UnivariatePoly([1])] + [zero] * k_max
    for j in range(1, k_max + 1):
        nxt = [zero] * (k_max + 1)
        for p, left in enumerate(u_pow):
            if left.is_zero():
                continue
            for q in range(1, k_max + 1 - p):
                if not u[q].is_zero():
                    nxt[p + q] = nxt[p + q] + left * u[q]
        u_pow = nxt
        coeff = gen_binomial(-lam, j)
        for p in range(j, k_max + 1):
            if not u_pow[p].is_zero():
                result[p] = result[p] + u_pow[p] * coeff
    return GegenbauerSeries(lam, tuple(result))


def gegenbauer_norm(lam, k: int):
    """Squared norm of ``P_k^lam`` under the weight ``(1-x**2)**(lam-1/2)``.

    Closed form ``sqrt(pi) (2 lam)_k Gamma(lam+1/2) / ((k+lam) k! Gamma(lam))``.
    Exact ``Fraction`` for half-integer ``lam`` (the Gamma ratio times
    ``sqrt(pi)`` is rational there), otherwise a float.
    """
    lam = _check_lambda(lam)
    if k < 0:
        raise DomainError("k must be a natural number")
    common = pochhammer(2 * lam, k) / ((k + lam) * math.factorial(k))
    if lam.denominator == 2:
        # lam = ell + 1/2 with ell >= 0, and
        # Gamma(ell + 1) / Gamma(ell + 1/2) = ell! / (sqrt(pi) (1/2)_ell)
        ell = int(lam - Fraction(1, 2))
        return common * math.factorial(ell) / pochhammer(Fraction(1, 2), ell)
    ratio = gamma_real(float(lam) + 0.5) / gamma_real(float(lam))
    return math.sqrt(math.pi) * float(common) * ratio


def gamma_real(x: float) -> float:
    """Gamma function on the reals; poles at non-positive integers raise."""
    x = float(x)
    if x <= 0 and x == math.floor(x):
        raise DomainError(f"Gamma has a pole at {x}")
    return math.gamma(x)


def gegenbauer_eval(lam, k: int, x: float) -> float:
    """Numeric ``P_k^lam(x)`` by the three-term recurrence (stable for large ``k``)."""
    lam = float(lam)
    p_prev, p = 1.0, 2.0 * lam * x
    if k == 0:
        return p_prev
    for j in range(1, k):
        p_prev, p = p, (2.0 * (j + lam) * x * p - (j + 2.0 * lam - 1.0) * p_prev) / (j + 1)
    return p


__all__ = [
    "PoleError",
    "UnsupportedInputError",
    "UnivariatePoly",
    "GegenbauerSeries",
    "proportionality_constant",
    "hyp2f1_terminating",
    "euler_transform_polynomial",
    "euler_transform_identity_check",
    "gegenbauer_from_generating_function",
    "gegenbauer_norm",
    "gamma_real",
    "gegenbauer_eval",
]
