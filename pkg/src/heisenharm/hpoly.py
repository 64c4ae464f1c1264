"""Sparse polynomials in ``z``, ``zbar``, ``t`` over Q(i), with the Heisenberg
vector fields acting on them.

``z`` and ``zbar`` are independent commuting symbols, so the Wirtinger
derivatives are ordinary partial derivatives. Conjugation only enters when a
polynomial is evaluated at a point.

Vector fields on H1 (group law ``(z,t)(z',t') = (z+z', t+t'+2 Im(z conj(z')))``)::

    Z    = d/dz    + i zbar d/dt
    Zbar = d/dzbar - i z    d/dt
    T    = d/dt
    X    = Z + Zbar         (= d/dx + 2y d/dt)
    Y    = i (Z - Zbar)     (= d/dy - 2x d/dt)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping

from .exactnum import I, ONE, ZERO, DomainError, GaussianRational, as_gaussian, gaussian_to_json, gaussian_from_json

Monomial = tuple  # (a, b, c): z**a * zbar**b * t**c


def monomial_sort_key(mono: Monomial):
    a, b, c = mono
    return (a + b + 2 * c, a, b, c)


class HPolynomial:
    """Immutable sparse polynomial ``sum coeff * z**a zbar**b t**c``.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are equal.
    """

    __slots__ = ("_terms", "_hash")
    variables = ("z", "zb", "t")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] = ()):
        acc: dict[Monomial, GaussianRational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            a, b, c = mono
            if a < 0 or b < 0 or c < 0:
                raise ValueError(f"negative exponent in monomial {mono}")
            coeff = as_gaussian(coeff)
            key = (int(a), int(b), int(c))
            acc[key] = acc.get(key, ZERO) + coeff
        self._terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict) -> "HPolynomial":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value) -> "HPolynomial":
        return cls({(0, 0, 0): value})

    @classmethod
    def monomial(cls, a: int, b: int, c: int, coeff=1) -> "HPolynomial":
        return cls({(a, b, c): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, GaussianRational]]:
        """Terms in canonical (graded lexicographic) order."""
        for mono in sorted(self._terms, key=monomial_sort_key):
            yield mono, self._terms[mono]

    def coefficient(self, a: int, b: int, c: int) -> GaussianRational:
        return self._terms.get((a, b, c), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, ZERO) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return type(self)._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if not isinstance(other, HPolynomial):
            try:
                s = as_gaussian(other)
            except TypeError:
                return NotImplemented
            if not s:
                return type(self)._from_clean({})
            return type(self)._from_clean({m: c * s for m, c in self._terms.items()})
        out: dict[Monomial, GaussianRational] = {}
        for (a1, b1, c1), x in self._terms.items():
            for (a2, b2, c2), y in other._terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, ZERO) + x * y
        return type(self)._from_clean({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("HPolynomial powers must be natural numbers")
        result = type(self).constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def map_terms(self, fn: Callable[[Monomial, GaussianRational], tuple[Monomial, object]]) -> "HPolynomial":
        return type(self)(fn(m, c) for m, c in self._terms.items())

    def conjugate(self) -> "HPolynomial":
        """Swap ``z <-> zbar`` and conjugate coefficients (``t`` is real)."""
        return type(self)._from_clean(
            {(b, a, c): coeff.conjugate() for (a, b, c), coeff in self._terms.items()}
        )

    # -- serialization ------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [
            {"a": a, "b": b, "c": c, "coeff": gaussian_to_json(coeff)}
            for (a, b, c), coeff in self.items()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "HPolynomial":
        return cls(((d["a"], d["b"], d["c"]), gaussian_from_json(d["coeff"])) for d in data)

    def _lift(self, x):
        if isinstance(x, HPolynomial):
            return x
        try:
            return type(self).constant(as_gaussian(x))
        except TypeError:
            return NotImplemented

    def __repr__(self):
        name = type(self).__name__
        if not self._terms:
            return f"{name}(0)"
        parts = []
        for mono, coeff in self.items():
            factors = []
            for sym, e in zip(self.variables, mono):
                if e == 1:
                    factors.append(sym)
                elif e:
                    factors.append(f"{sym}^{e}")
            parts.append("*".join([str(coeff)] + factors))
        return f"{name}(" + " + ".join(parts) + ")"


Z_VAR = HPolynomial.monomial(1, 0, 0)
ZBAR_VAR = HPolynomial.monomial(0, 1, 0)
T_VAR = HPolynomial.monomial(0, 0, 1)


# -- vector fields --------------------------------------------------------------

def _partial(p: HPolynomial, slot: int) -> HPolynomial:
    out = {}
    for mono, coeff in p._terms.items():
        e = mono[slot]
        if e:
            new = list(mono)
            new[slot] = e - 1
            out[tuple(new)] = coeff * e
    return HPolynomial._from_clean(out)


def d_z(p: HPolynomial) -> HPolynomial:
    return _partial(p, 0)


def d_zbar(p: HPolynomial) -> HPolynomial:
    return _partial(p, 1)


def apply_T(p: HPolynomial) -> HPolynomial:
    return _partial(p, 2)


def apply_Z(p: HPolynomial) -> HPolynomial:
    return d_z(p) + (I * ZBAR_VAR) * apply_T(p)


def apply_Zbar(p: HPolynomial) -> HPolynomial:
    return d_zbar(p) - (I * Z_VAR) * apply_T(p)


def apply_X(p: HPolynomial) -> HPolynomial:
    return apply_Z(p) + apply_Zbar(p)


def apply_Y(p: HPolynomial) -> HPolynomial:
    return (apply_Z(p) - apply_Zbar(p)) * I


def apply_L_alpha(p: HPolynomial, alpha) -> HPolynomial:
    """Sublaplacian ``L_alpha = -Z Zbar + i (alpha - 1) T``."""
    return -apply_Z(apply_Zbar(p)) + apply_T(p) * (I * (as_gaussian(alpha) - 1))


def apply_L_alpha_symmetric(p: HPolynomial, alpha) -> HPolynomial:
    """The same operator written as ``-1/2 (Z Zbar + Zbar Z) + i alpha T``."""
    sym = apply_Z(apply_Zbar(p)) + apply_Zbar(apply_Z(p))
    return sym * (-ONE / 2) + apply_T(p) * (I * as_gaussian(alpha))


def apply_sublaplacian_real(p: HPolynomial) -> HPolynomial:
    """``X X p + Y Y p`` (the real sublaplacian, alpha = 0, no 1/4 factor)."""
    return apply_X(apply_X(p)) + apply_Y(apply_Y(p))


def commutator(A: Callable, B: Callable, p: HPolynomial) -> HPolynomial:
    """``(AB - BA) p``."""
    return A(B(p)) - B(A(p))


# -- grading, dilations, rotations -----------------------------------------------

def heisenberg_degree(p: HPolynomial) -> int | None:
    """Dilation weight ``a + b + 2c`` shared by every monomial, or ``None``
    if the polynomial mixes weights.

    Raises :class:`DomainError` for the zero polynomial.
    """
    if p.is_zero():
        raise DomainError("the zero polynomial has no Heisenberg degree")
    weights = {a + b + 2 * c for (a, b, c) in p._terms}
    if len(weights) == 1:
        return weights.pop()
    return None


def dilate(p: HPolynomial, lam) -> HPolynomial:
    """Substitute ``z -> lam z``, ``zbar -> lam zbar``, ``t -> lam**2 t``."""
    lam = as_gaussian(lam)
    if not lam:
        raise DomainError("dilation factor must be nonzero")
    return HPolynomial._from_clean(
        {m: c * lam ** (m[0] + m[1] + 2 * m[2]) for m, c in p._terms.items()}
    )


def rotate_quarter(p: HPolynomial, quarter_turns: int = 1) -> HPolynomial:
    """Unitary rotation ``z -> i**q z`` (so ``zbar -> (-i)**q zbar``), exact in Q(i)."""
    w = I ** (quarter_turns % 4)
    wbar = w.conjugate()
    return HPolynomial._from_clean(
        {m: c * w ** m[0] * wbar ** m[1] for m, c in p._terms.items()}
    )


# -- points and the group law ---------------------------------------------------

@dataclass(frozen=True)
class HPoint:
    z: complex
    t: float

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "t", float(self.t))


def group_multiply(p: HPoint, q: HPoint) -> HPoint:
    """``(z,t)(z',t') = (z+z', t+t'+2 Im(z conj(z')))``."""
    return HPoint(p.z + q.z, p.t + q.t + 2.0 * (p.z * q.z.conjugate()).imag)


def group_inverse(p: HPoint) -> HPoint:
    return HPoint(-p.z, -p.t)


def dilate_point(p: HPoint, lam: float) -> HPoint:
    return HPoint(lam * p.z, lam * lam * p.t)


def eval_cartesian(p: HPolynomial, pt: HPoint) -> complex:
    """Evaluate with ``zbar = conj(z)``; coefficients are rounded to floats."""
    z = pt.z
    zb = z.conjugate()
    t = pt.t
    total = 0j
    for (a, b, c), coeff in p._terms.items():
        total += complex(coeff) * z ** a * zb ** b * t ** c
    return total


def norm_of_point(pt: HPoint) -> float:
    """Koranyi gauge ``(|z|**4 + t**2)**(1/4)``."""
    return (abs(pt.z) ** 4 + pt.t ** 2) ** 0.25


def exact_rank(polys: Iterable[HPolynomial]) -> int:
    """Rank over Q(i) of the coefficient vectors of ``polys`` (exact Gaussian elimination)."""
    rows = [dict(p._terms) for p in polys if p]
    rank = 0
    while rows:
        pivot_row = rows.pop()
        if not pivot_row:
            continue
        col, pv = next(iter(pivot_row.items()))
        rank += 1
        reduced = []
        for row in rows:
            f = row.get(col)
            if f:
                ratio = f / pv
                row = dict(row)
                for mono, c in pivot_row.items():
                    s = row.get(mono, ZERO) - ratio * c
                    if s:
                        row[mono] = s
                    else:
                        row.pop(mono, None)
            if row:
                reduced.append(row)
        rows = reduced
    return rank


def same_span(first: Iterable[HPolynomial], second: Iterable[HPolynomial]) -> bool:
    """Whether two families span the same subspace over Q(i)."""
    first, second = list(first), list(second)
    r = exact_rank(first + second)
    return r == exact_rank(first) == exact_rank(second)


__all__ = [
    "HPolynomial",
    "HPoint",
    "Z_VAR",
    "ZBAR_VAR",
    "T_VAR",
    "monomial_sort_key",
    "d_z",
    "d_zbar",
    "apply_Z",
    "apply_Zbar",
    "apply_T",
    "apply_X",
    "apply_Y",
    "apply_L_alpha",
    "apply_L_alpha_symmetric",
    "apply_sublaplacian_real",
    "commutator",
    "heisenberg_degree",
    "dilate",
    "rotate_quarter",
    "group_multiply",
    "group_inverse",
    "dilate_point",
    "eval_cartesian",
    "norm_of_point",
    "exact_rank",
    "same_span",
]
