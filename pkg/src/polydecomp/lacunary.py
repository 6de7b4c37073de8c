"""Decompositions of polynomials with few terms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .decompose import InvariantViolation, NormalizedPair, decompose_once
from .poly import Polynomial, compose, divisors, squarefree_decomposition


class ExcludedShape(ValueError):
    """``h`` has the excluded shape ``a x^k + b``."""

    code = "EXCLUDED_SHAPE"


class ConditionNotMet(ValueError):
    """The quadrinomial exponent condition ``n1 + n3 > 2 n2`` fails."""

    code = "CONDITION_NOT_MET"


@dataclass(frozen=True)
class TermList:
    """Sparse view of a dense polynomial: ``(exponent, coeff)`` pairs, highest first."""

    terms: tuple[tuple[int, Fraction], ...]

    @classmethod
    def of(cls, f: Polynomial) -> "TermList":
        return cls(tuple(f.terms()))

    @property
    def l(self) -> int:
        return sum(1 for e, _ in self.terms if e > 0)

    def nonconstant(self):
        return [(e, c) for e, c in self.terms if e > 0]

    def constant(self) -> Fraction:
        return next((c for e, c in self.terms if e == 0), Fraction(0))


@dataclass(frozen=True)
class ZannierReport:
    deg_f: int
    l: int
    deg_h: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def slack(self) -> int:
        return self.rhs - self.lhs


def is_binomial_shape(h: Polynomial) -> bool:
    """``h = a x^k + b``."""
    return h.nonconstant_term_count() <= 1


def zannier_bound_check(g: Polynomial, h: Polynomial) -> ZannierReport:
    """Check ``deg f + l - 1 <= 2 l (l - 1) deg h`` for ``f = g ∘ h``."""
    if g.degree is None or h.degree is None or g.degree < 1 or h.degree < 1:
        raise ValueError("zannier_bound_check needs deg g, deg h >= 1")
    if is_binomial_shape(h):
        raise ExcludedShape("h has the shape a*x^k + b")
    f = compose(g, h)
    l = f.nonconstant_term_count()
    return ZannierReport(f.degree, l, h.degree, f.degree + l - 1, 2 * l * (l - 1) * h.degree)


@dataclass(frozen=True)
class HajosReport:
    max_multiplicity: int
    term_count: int

    @property
    def holds(self) -> bool:
        return self.term_count >= self.max_multiplicity + 1


def hajos_check(g: Polynomial) -> HajosReport:
    """Largest multiplicity ``m`` of a nonzero root versus the term count of ``g``."""
    if g.degree is None or g.degree < 1:
        raise ValueError("hajos_check needs deg g >= 1")
    v = next(i for i, c in enumerate(g.coeffs) if c != 0)
    core = Polynomial(g.coeffs[v:])
    m = 0
    if core.degree > 0:
        m = max(mult for _, mult in squarefree_decomposition(core))
    return HajosReport(m, g.term_count())


def _pair_set(pairs):
    return {(p.g, p.h) for p in pairs}


def _power_pairs(tl: TermList, exps: list[int]) -> list[NormalizedPair]:
    n1 = exps[0]
    common = 0
    for e in exps:
        common = gcd(common, e)
    out = []
    for k in divisors(common):
        if k < 2 or n1 // k < 2:
            continue
        g = Polynomial.from_terms([(e // k, c) for e, c in tl.terms])
        out.append(NormalizedPair(g, Polynomial.monomial(k)))
    return out


def trinomial_decompositions(f: Polynomial, check: bool = True) -> list[NormalizedPair]:
    """All ``(g, x^k)`` for ``f = a1 x^n1 + a2 x^n2 + a3`` and ``k | gcd(n1, n2)``."""
    tl = TermList.of(f)
    nc = tl.nonconstant()
    if len(nc) != 2:
        raise ValueError("not a trinomial a1*x^n1 + a2*x^n2 + a3 with a1*a2 != 0")
    out = _power_pairs(tl, [e for e, _ in nc])
    if check and _pair_set(out) != _pair_set(decompose_once(f)):
        raise InvariantViolation("trinomial structure disagrees with the general engine")
    return out


def quadrinomial_condition(f: Polynomial) -> tuple[int, int, int]:
    tl = TermList.of(f)
    nc = tl.nonconstant()
    if len(nc) != 3:
        raise ValueError("not a quadrinomial a1*x^n1 + a2*x^n2 + a3*x^n3 + a4 with a1*a2*a3 != 0")
    n1, n2, n3 = (e for e, _ in nc)
    return n1, n2, n3


def quadrinomial_decompositions(f: Polynomial, check: bool = True) -> list[NormalizedPair]:
    """All ``(g, x^k)`` with ``k | gcd(n1, n2, n3)`` when ``n1 + n3 > 2 n2``.

    ``g`` carries the exponents ``n1/k, n2/k, n3/k``.  Raises
    :class:`ConditionNotMet` when the exponent condition fails, since no
    structural conclusion is available then.
    """
    n1, n2, n3 = quadrinomial_condition(f)
    if n1 + n3 <= 2 * n2:
        raise ConditionNotMet(f"n1 + n3 = {n1 + n3} <= 2*n2 = {2 * n2}")
    out = _power_pairs(TermList.of(f), [n1, n2, n3])
    if check and _pair_set(out) != _pair_set(decompose_once(f)):
        raise InvariantViolation("quadrinomial structure disagrees with the general engine")
    return out


def has_non_power_inner(f: Polynomial) -> bool:
    """Does ``f`` have a decomposition whose normalized inner part is not ``x^k``?"""
    return any(p.h != Polynomial.monomial(p.k) for p in decompose_once(f))
