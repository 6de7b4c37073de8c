"""Dickson polynomials ``D_m(x, a)`` and recognition of their affine conjugates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .poly import X, LinearPoly, Polynomial, affine_substitute


class DicksonMismatch(ArithmeticError):
    """The two independent constructions of ``D_m`` disagree (internal invariant)."""


@lru_cache(maxsize=512)
def _dickson_cached(m: int, a: Fraction) -> Polynomial:
    prev, cur = Polynomial.constant(2), X
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, X * cur - prev * a
    return cur


def dickson(m: int, a=0) -> Polynomial:
    """``D_m(x, a)`` from ``D_m = x D_{m-1} - a D_{m-2}``, ``D_0 = 2``, ``D_1 = x``."""
    if m < 0:
        raise ValueError("Dickson index must be nonnegative")
    return _dickson_cached(m, Fraction(a))


def dickson_closed_form(m: int, a=0) -> Polynomial:
    """The explicit coefficient sum ``sum_j m/(m-j) C(m-j, j) (-a)^j x^(m-2j)``."""
    a = Fraction(a)
    if m == 0:
        return Polynomial.constant(2)
    terms = {}
    for j in range(m // 2 + 1):
        terms[m - 2 * j] = Fraction(m, m - j) * comb(m - j, j) * (-a) ** j
    return Polynomial.from_terms(terms)


def checked_dickson(m: int, a=0) -> Polynomial:
    """``D_m(x, a)`` built both ways; raises :class:`DicksonMismatch` if they differ."""
    rec = dickson(m, a)
    if rec != dickson_closed_form(m, a):
        raise DicksonMismatch(f"recurrence and closed form disagree at m={m}, a={a}")
    return rec


def verify_functional_equation(m: int, a=0) -> bool:
    """Check ``D_m(z + a/z, a) = z^m + (a/z)^m`` as an exact Laurent identity.

    Multiplying through by ``z^m`` turns it into the polynomial identity
    ``sum_i d_i (z^2 + a)^i z^(m-i) = z^(2m) + a^m``.
    """
    a = Fraction(a)
    d = dickson(m, a)
    if a == 0:
        return d == Polynomial.monomial(m)
    z2a = Polynomial((a, 0, 1))
    lhs = Polynomial()
    for i, c in enumerate(d.coeffs):
        if c:
            lhs = lhs + (z2a**i) * Polynomial.monomial(m - i) * c
    return lhs == Polynomial.monomial(2 * m) + a**m


@dataclass(frozen=True)
class DicksonForm:
    """``alpha * D_m(x + b, a) + c``."""

    alpha: Fraction
    b: Fraction
    a: Fraction
    c: Fraction
    m: int

    def polynomial(self) -> Polynomial:
        base = affine_substitute(dickson(self.m, self.a), LinearPoly(1, self.b))
        return base * self.alpha + self.c

    def as_dict(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("alpha", "b", "a", "c")} | {"m": self.m}


@dataclass(frozen=True)
class CenteredShape:
    """``f(x - b) / lc`` written as ``x^m + 0 x^(m-1) + ...`` plus its shift."""

    shift: Fraction
    monic_centered: Polynomial


def center(f: Polynomial) -> CenteredShape:
    """Translate so the ``x^(m-1)`` coefficient vanishes, then make monic.

    Returns ``b`` with ``f(x - b) / lc(f)`` centered, i.e. ``f = lc * g(x + b)``.
    """
    m = f.degree
    b = f[m - 1] / (m * f.lc)
    g = affine_substitute(f, LinearPoly(1, -b)) / f.lc
    return CenteredShape(b, g)


def recognize(f: Polynomial):
    """Find ``(alpha, b, a, c, m)`` with ``f = alpha D_m(x+b, a) + c``, else ``None``.

    ``alpha`` is the leading coefficient, ``b`` comes from the ``x^(m-1)``
    slot, ``a`` from the ``x^(m-2)`` slot (where ``D_m`` carries ``-m a``) and
    ``c`` from the constant term.  For quadratics this puts all of the
    constant into ``a`` and returns ``c = 0``.
    """
    m = f.degree
    if m is None or m < 2:
        raise ValueError("recognition needs deg f >= 2")
    shape = center(f)
    g = shape.monic_centered
    a = -g[m - 2] / m
    d = dickson(m, a)
    c = (g - d)[0] * f.lc if m > 2 else Fraction(0)
    form = DicksonForm(f.lc, shape.shift, a, c, m)
    if form.polynomial() != f:
        return None
    return form


def first_dickson_violation(f: Polynomial):
    """Index and value of the top centered coefficient that no Dickson form allows.

    Works on the centered monic ``g = f(x - b)/lc``; returns ``None`` when
    ``g - D_m(x, a)`` is constant (with ``a`` fitted from ``x^(m-2)``).
    """
    m = f.degree
    g = center(f).monic_centered
    a = -g[m - 2] / m if m >= 2 else Fraction(0)
    diff = g - dickson(m, a)
    for i in range(m - 1, 0, -1):
        if diff[i] != 0:
            return i, g[i], dickson(m, a)[i]
    return None
