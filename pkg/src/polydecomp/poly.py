"""Exact univariate polynomials over the rationals.

Coefficients are stored densely as a tuple of :class:`fractions.Fraction`,
indexed by exponent, with no trailing zeros.  The zero polynomial is the empty
tuple and reports ``degree is None``; callers check :attr:`Polynomial.is_zero`
instead of doing arithmetic on a sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, gcd, isqrt
from numbers import Rational
from typing import Iterable, Sequence


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"expected a rational coefficient, got {type(c).__name__}")


class Polynomial:
    """Dense polynomial in ``x`` with rational coefficients.

    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c=1) -> "Polynomial":
        return cls([0] * n + [c])

    @classmethod
    def from_terms(cls, terms) -> "Polynomial":
        """Build from ``{exponent: coefficient}`` or ``(exponent, coeff)`` pairs."""
        items = terms.items() if isinstance(terms, dict) else terms
        items = list(items)
        if not items:
            return cls()
        n = max(e for e, _ in items)
        cs = [Fraction(0)] * (n + 1)
        for e, c in items:
            cs[e] += _frac(c)
        return cls(cs)

    @classmethod
    def from_roots(cls, roots, lc=1) -> "Polynomial":
        p = cls.constant(lc)
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self):
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def terms(self):
        """Nonzero ``(exponent, coefficient)`` pairs, highest exponent first."""
        return [(i, c) for i, c in reversed(list(enumerate(self.coeffs))) if c != 0]

    def nonconstant_term_count(self) -> int:
        return sum(1 for i, c in enumerate(self.coeffs) if i > 0 and c != 0)

    def term_count(self) -> int:
        return sum(1 for c in self.coeffs if c != 0)

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _frac(other)
            return Polynomial(c * a for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            q, r = divmod(self, other)
            if not r.is_zero:
                raise ArithmeticError("inexact polynomial division")
            return q
        c = _frac(other)
        return Polynomial(a / c for a in self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lcb = other.lc
        if len(r) - 1 < db:
            return Polynomial(), self
        q = [Fraction(0)] * (len(r) - db)
        bc = other.coeffs
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c == 0:
                continue
            c = c / lcb
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] -= c * bc[j]
        return Polynomial(q), Polynomial(r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    # -- evaluation and composition --------------------------------------

    def __call__(self, value):
        """Evaluate at a number, or compose if ``value`` is a Polynomial."""
        if isinstance(value, Polynomial):
            return compose(self, value)
        acc = 0 * value if not isinstance(value, int) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def eval_float(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self / self.lc

    def shift(self, b) -> "Polynomial":
        """Return ``self(x + b)``."""
        return affine_substitute(self, LinearPoly(1, b))

    def primitive_integer(self) -> tuple[Fraction, "Polynomial"]:
        """Split ``self = content * P`` with ``P`` integral, primitive, positive lc."""
        if self.is_zero:
            return Fraction(0), self
        den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, (abs(v) for v in ints if v), 0)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), Polynomial(v // g for v in ints)

    def integer_coeffs(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("polynomial has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def __repr__(self):
        from .parse import canonical_text

        return f"Polynomial({canonical_text(self)!r})"

    def __str__(self):
        from .parse import canonical_text

        return canonical_text(self)


X = Polynomial.x()


@dataclass(frozen=True)
class LinearPoly:
    """``slope * x + intercept`` with nonzero slope."""

    slope: Fraction
    intercept: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "slope", _frac(self.slope))
        object.__setattr__(self, "intercept", _frac(self.intercept))
        if self.slope == 0:
            raise ValueError("linear polynomial needs a nonzero slope")

    @classmethod
    def identity(cls) -> "LinearPoly":
        return cls(1, 0)

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "LinearPoly":
        if p.degree != 1:
            raise ValueError("not a degree-one polynomial")
        return cls(p[1], p[0])

    def invert(self) -> "LinearPoly":
        return LinearPoly(1 / self.slope, -self.intercept / self.slope)

    def then(self, other: "LinearPoly") -> "LinearPoly":
        """``other ∘ self``."""
        return LinearPoly(other.slope * self.slope, other.slope * self.intercept + other.intercept)

    def as_polynomial(self) -> Polynomial:
        return Polynomial((self.intercept, self.slope))

    def __call__(self, value):
        if isinstance(value, Polynomial):
            return value * self.slope + self.intercept
        return self.slope * value + self.intercept

    @property
    def is_identity(self) -> bool:
        return self.slope == 1 and self.intercept == 0

    def __str__(self):
        return str(self.as_polynomial())


# -- composition ----------------------------------------------------------


def compose(outer: Polynomial, inner: Polynomial) -> Polynomial:
    """``outer(inner(x))`` by Horner's rule."""
    acc = Polynomial()
    for c in reversed(outer.coeffs):
        acc = acc * inner + c
    return acc


def compose_chain(components: Sequence[Polynomial]) -> Polynomial:
    """Compose ``f_1 ∘ f_2 ∘ ... ∘ f_m`` (outermost first)."""
    if not components:
        return X
    acc = components[-1]
    for p in reversed(components[:-1]):
        acc = compose(p, acc)
    return acc


def affine_substitute(f: Polynomial, ell: LinearPoly) -> Polynomial:
    """``f(slope*x + intercept)`` via binomial expansion."""
    s, b = ell.slope, ell.intercept
    n = len(f.coeffs)
    out = [Fraction(0)] * n
    # (s x + b)^i = sum_j C(i,j) s^j b^(i-j) x^j
    bpow = [Fraction(1)] * n
    for i in range(1, n):
        bpow[i] = bpow[i - 1] * b
    spow = Fraction(1)
    for j in range(n):
        acc = Fraction(0)
        for i in range(j, n):
            c = f.coeffs[i]
            if c:
                acc += c * comb(i, j) * bpow[i - j]
        out[j] = acc * spow
        spow *= s
    return Polynomial(out)


def h_adic_expansion(f: Polynomial, h: Polynomial) -> list[Polynomial]:
    """Digits ``a_i`` with ``f = sum a_i h^i`` and ``deg a_i < deg h``."""
    if h.degree is None or h.degree < 1:
        raise ValueError("h-adic expansion needs deg h >= 1")
    digits = []
    rest = f
    while not rest.is_zero:
        rest, r = divmod(rest, h)
        digits.append(r)
    return digits or [Polynomial()]


def outer_from_digits(digits: Sequence[Polynomial]):
    """Return ``g`` if every digit is constant, else ``None``."""
    if any(not d.is_constant for d in digits):
        return None
    return Polynomial(d[0] for d in digits)


# -- gcd, squarefree, resultant ----------------------------------------


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(a: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic, pairwise coprime, squarefree factors with multiplicities.

    ``a == lc(a) * prod(f**m)``; entries come in increasing multiplicity.
    """
    if a.degree is None or a.degree < 1:
        raise ValueError("squarefree decomposition needs a nonconstant polynomial")
    out = []
    da = a.derivative()
    g = poly_gcd(a, da)
    b = a.monic() / g
    c = da.monic() * (da.lc / a.lc) / g
    d = c - b.derivative()
    i = 1
    while b.degree and b.degree > 0:
        f = poly_gcd(b, d)
        b = b / f
        c = d / f
        d = c - b.derivative()
        if f.degree and f.degree > 0:
            out.append((f, i))
        i += 1
    return out


def squarefree_part(a: Polynomial) -> Polynomial:
    return a.monic() / poly_gcd(a, a.derivative())


def _ring_resultant(a: list, b: list, one, exact_div):
    """Subresultant PRS resultant over an integral domain.

    ``a`` and ``b`` are coefficient lists (constant term first) with nonzero
    leading entries; ``exact_div(p, q)`` divides exactly.  Follows the
    sub-resultant algorithm without content removal.
    """
    da, db = len(a) - 1, len(b) - 1
    sign = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
    if db == 0:
        return _rpow(b[0], da, one) * sign
    g = one
    h = one
    while True:
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = _pseudo_rem(a, b, one)
        a, da = b, db
        if not r:
            return one * 0
        denom = g * _rpow(h, delta, one)
        b = [exact_div(c, denom) for c in r]
        db = len(b) - 1
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = exact_div(_rpow(g, delta, one), _rpow(h, delta - 1, one))
        if db == 0:
            break
    # final step: deg b == 0
    if da == 1:
        hh = b[0]
    else:
        hh = exact_div(_rpow(b[0], da, one), _rpow(h, da - 1, one))
    return hh * sign


def _rpow(x, n, one):
    r = one
    for _ in range(n):
        r = r * x
    return r


def _pseudo_rem(a: list, b: list, one) -> list:
    """Pseudo-remainder ``lc(b)^(da-db+1) a mod b``, trimmed."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - 1 - db + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for j in range(db + 1):
            r[shift + j] = r[shift + j] - lr * b[j]
        r.pop()
        e -= 1
        while r and _is_zero(r[-1]):
            r.pop()
    if e > 0:
        f = _rpow(lb, e, one)
        r = [c * f for c in r]
    return r


def _is_zero(c) -> bool:
    if isinstance(c, Polynomial):
        return c.is_zero
    return c == 0


def resultant(a, b):
    """Resultant with respect to ``x``.

    Convention: ``Res(A, B) = lc(A)^deg(B) * prod B(alpha)`` over the roots of A.

    ``a`` and ``b`` are either :class:`Polynomial` (result is a Fraction) or
    sequences of :class:`Polynomial` giving coefficients in ``x`` that are
    themselves polynomials in a parameter; the parameter survives and the
    result is a :class:`Polynomial` in it.
    """
    if isinstance(a, Polynomial) and isinstance(b, Polynomial):
        if a.is_zero and b.is_zero:
            raise ValueError("resultant of two zero polynomials is degenerate")
        if a.is_zero or b.is_zero:
            return Fraction(0)
        return _ring_resultant(list(a.coeffs), list(b.coeffs), Fraction(1), lambda p, q: p / q)
    ca = _trim([Polynomial._coerce(c) for c in a])
    cb = _trim([Polynomial._coerce(c) for c in b])
    if not ca and not cb:
        raise ValueError("resultant of two zero polynomials is degenerate")
    if not ca or not cb:
        return Polynomial()
    return _ring_resultant(ca, cb, Polynomial.constant(1), lambda p, q: p / q)


def _trim(cs):
    cs = list(cs)
    while cs and _is_zero(cs[-1]):
        cs.pop()
    return cs


def critical_value_resultant(f: Polynomial) -> Polynomial:
    """``R(γ) = Res_x(f'(x), f(x) - γ)`` as a polynomial in γ."""
    if f.degree is None or f.degree < 2:
        raise ValueError("need deg f >= 2")
    df = [Polynomial.constant(c) for c in f.derivative().coeffs]
    shifted = [Polynomial.constant(c) for c in f.coeffs]
    shifted[0] = shifted[0] - X
    return resultant(df, shifted)


# -- real roots -----------------------------------------------------------


def sturm_sequence(a: Polynomial) -> list[Polynomial]:
    seq = [a, a.derivative()]
    while not seq[-1].is_zero:
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _sign_changes(values) -> int:
    signs = [v for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if (s > 0) != (t > 0))


def _signs_at_infinity(seq, positive: bool):
    out = []
    for p in seq:
        s = p.lc
        if not positive and p.degree % 2 == 1:
            s = -s
        out.append(s)
    return out


@dataclass(frozen=True)
class RealRootCount:
    count: int
    simple: bool


def real_root_count(a: Polynomial, interval=None) -> RealRootCount:
    """Count distinct real roots by a Sturm sequence.

    ``interval`` is ``(lo, hi)`` with ``None`` meaning unbounded; the count is
    over the half-open interval ``(lo, hi]``.  ``simple`` is true iff
    ``gcd(a, a')`` is constant.
    """
    if a.is_zero:
        raise ValueError("real root count of the zero polynomial")
    simple = poly_gcd(a, a.derivative()).degree == 0
    if a.is_constant:
        return RealRootCount(0, True)
    seq = sturm_sequence(squarefree_part(a))
    lo, hi = interval if interval is not None else (None, None)
    left = _signs_at_infinity(seq, False) if lo is None else [p(_frac(lo)) for p in seq]
    right = _signs_at_infinity(seq, True) if hi is None else [p(_frac(hi)) for p in seq]
    return RealRootCount(_sign_changes(left) - _sign_changes(right), simple)


# -- rational helpers -------------------------------------------------------


def int_nth_root(n: int, k: int):
    """Exact integer k-th root of ``n`` or ``None``."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return n
    if n < 0:
        if k % 2 == 0:
            return None
        r = int_nth_root(-n, k)
        return None if r is None else -r
    if n < 2:
        return n
    if k == 2:
        r = isqrt(n)
        return r if r * r == n else None
    # Newton iteration on integers
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    for r in (x - 1, x, x + 1):
        if r >= 0 and r**k == n:
            return r
    return None


def rational_nth_root(q, k: int):
    """Exact rational k-th root (the nonnegative one for even k) or ``None``."""
    q = _frac(q)
    num = int_nth_root(q.numerator, k)
    if num is None:
        return None
    den = int_nth_root(q.denominator, k)
    if den is None:
        return None
    return Fraction(num, den)


def is_rational_power(q, k: int) -> bool:
    return rational_nth_root(q, k) is not None


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def binomial_poly(p: Polynomial, k: int) -> Polynomial:
    """``binomial(p, k) = p (p-1) ... (p-k+1) / k!`` as a polynomial."""
    acc = Polynomial.constant(1)
    for i in range(k):
        acc = acc * (p - i)
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return acc / fact


def rising_factorial_poly(p: Polynomial, k: int) -> Polynomial:
    acc = Polynomial.constant(1)
    for i in range(k):
        acc = acc * (p + i)
    return acc
