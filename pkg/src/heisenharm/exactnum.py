"""Exact arithmetic over Q and Q(i), plus the combinatorial helpers built on it.

Rationals are :class:`fractions.Fraction` (always reduced, denominator > 0).
:class:`GaussianRational` adds an imaginary part on top of that.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction

__all__ = [
    "DomainError",
    "Rational",
    "GaussianRational",
    "I",
    "ZERO",
    "ONE",
    "as_gaussian",
    "pochhammer",
    "gen_binomial",
    "factorial",
    "rational_to_str",
    "rational_from_str",
    "gaussian_to_json",
    "gaussian_from_json",
    "value_to_json",
]


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


Scalar = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """Complex number ``re + i*im`` with rational parts.

    Instances are immutable and hashable. A value with ``im == 0`` compares
    and hashes equal to the corresponding ``Fraction``/``int``.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part given together with a GaussianRational")
            self._re, self._im = re._re, re._im
            return
        self._re = Fraction(re)
        self._im = Fraction(im)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = object.__new__(cls)
        obj._re = re
        obj._im = im
        return obj

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    real = re
    imag = im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._make(self._re, -self._im)

    def norm2(self) -> Fraction:
        """``|x|**2`` as an exact rational."""
        return self._re * self._re + self._im * self._im

    def is_real(self) -> bool:
        return self._im == 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._make(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._make(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(self._re * other, self._im * other)
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self._re, self._im, o._re, o._im
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        den = o.norm2()
        if den == 0:
            raise DomainError("division by zero in Q(i)")
        num = self * o.conjugate()
        return GaussianRational._make(num._re / den, num._im / den)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GaussianRational._make(-self._re, -self._im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("only integer powers are supported in Q(i)")
        if exponent < 0:
            return ONE / (self ** (-exponent))
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison / conversion -------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __repr__(self):
        return f"GaussianRational({rational_to_str(self._re)!r}, {rational_to_str(self._im)!r})"

    def __str__(self):
        if self._im == 0:
            return rational_to_str(self._re)
        im = rational_to_str(self._im)
        if self._re == 0:
            return f"{im}i"
        sign = "+" if self._im > 0 else "-"
        return f"({rational_to_str(self._re)}{sign}{rational_to_str(abs(self._im))}i)"


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, _RationalABC):
        return GaussianRational._make(Fraction(x), Fraction(0))
    return NotImplemented


def as_gaussian(x) -> GaussianRational:
    """Convert an int, Fraction, string or GaussianRational to GaussianRational."""
    if isinstance(x, str):
        return GaussianRational(Fraction(x))
    g = _coerce(x)
    if g is NotImplemented:
        raise TypeError(f"cannot represent {x!r} exactly in Q(i)")
    return g


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def pochhammer(a, n: int):
    """Rising factorial ``a (a+1) ... (a+n-1)``; ``(a)_0 = 1``.

    Works for any exact ring element ``a`` (int, Fraction, GaussianRational).
    """
    if n < 0:
        raise DomainError("pochhammer index must be a natural number")
    result = Fraction(1)
    for j in range(n):
        result = result * (a + j)
    return result


def gen_binomial(x, v: int):
    """Generalized binomial ``x (x-1) ... (x-v+1) / v!`` for rational ``x``."""
    if v < 0:
        raise DomainError("binomial lower index must be a natural number")
    num = Fraction(1)
    for j in range(v):
        num = num * (x - j)
    return num / factorial(v)


# -- serialization -----------------------------------------------------------

def rational_to_str(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)


def gaussian_to_json(g) -> dict:
    g = as_gaussian(g)
    return {"re": rational_to_str(g.re), "im": rational_to_str(g.im)}


def gaussian_from_json(d: dict) -> GaussianRational:
    return GaussianRational(Fraction(d["re"]), Fraction(d["im"]))


def value_to_json(x):
    """Rational → ``"p/q"`` string, Gaussian rational → ``{"re", "im"}``."""
    if isinstance(x, GaussianRational):
        return gaussian_to_json(x)
    return rational_to_str(x)
