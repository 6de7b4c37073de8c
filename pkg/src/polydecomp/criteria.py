"""Cheap indecomposability certificates and the φ-irreducibility classifier."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .decompose import decompose_once
from .dickson import recognize
from .factor import irreducibility
from .poly import Polynomial, critical_value_resultant, divisors, poly_gcd, squarefree_decomposition


class Verdict(str, enum.Enum):
    INDECOMPOSABLE = "INDECOMPOSABLE"
    DECOMPOSABLE = "DECOMPOSABLE"
    UNDECIDED_BY_CRITERIA = "UNDECIDED_BY_CRITERIA"


class PhiClass(str, enum.Enum):
    PHI_IRREDUCIBLE = "PHI_IRREDUCIBLE"
    PHI_REDUCIBLE = "PHI_REDUCIBLE"
    UNDECIDED = "UNDECIDED"


def integer_monic_form(f: Polynomial) -> list[int]:
    """Coefficients of the monic integer ``F`` with ``c^(n-1) f~(x) = F(c x)``.

    ``f~`` is ``f`` with denominators cleared (primitive, positive leading
    coefficient ``c``); ``F`` keeps the subleading coefficient of ``f~`` and
    multiplies the ``x^(n-j)`` coefficient by ``c^(j-1)``.
    """
    n = f.degree
    _, prim = f.primitive_integer()
    cs = prim.integer_coeffs()
    c = cs[-1]
    return [cs[i] * c ** (n - 1 - i) for i in range(n)] + [1]


def criterion_subleading(f: Polynomial) -> bool:
    """True when ``gcd(c_{n-1}, n) = 1`` on the integer-normalized form."""
    n = f.degree
    if n is None or n < 2:
        raise ValueError("criterion needs deg f >= 2")
    F = integer_monic_form(f)
    return gcd(F[n - 1], n) == 1


def criterion_outer_degree(f: Polynomial) -> set[int]:
    """Outer degrees ``t`` still admissible for a decomposition ``f = g ∘ h``.

    Starts from the proper divisors of ``n``.  With ``k = n / t``, the
    ``x^(n-2)`` coefficient is ``t b_{k-2} + C(t,2) b_{k-1}^2`` only when
    ``k >= 3`` (for ``k = 2`` the next digit of ``g`` lands there too), so
    ``gcd(c_{n-2}, n) = 1`` forces ``t = 2`` or ``k = 2``.  Likewise
    ``gcd(c_{n-3}, n) = 1`` forces ``t <= 3`` or ``k <= 3``.
    """
    n = f.degree
    if n is None or n < 2:
        raise ValueError("criterion needs deg f >= 2")
    allowed = {t for t in divisors(n) if 2 <= t <= n // 2}
    if n < 4:
        return allowed
    F = integer_monic_form(f)
    if gcd(F[n - 2], n) == 1:
        allowed = {t for t in allowed if t == 2 or n // t == 2}
    if gcd(F[n - 3], n) == 1:
        allowed = {t for t in allowed if t <= 3 or n // t <= 3}
    return allowed


def derivative_irreducible_criterion(f: Polynomial) -> bool:
    """True when ``f'`` is irreducible over Q, which forces ``f`` indecomposable."""
    if f.degree is None or f.degree < 2:
        raise ValueError("criterion needs deg f >= 2")
    return irreducibility(f.derivative()).irreducible


@dataclass(frozen=True)
class DeltaReport:
    resultant_in_gamma: Polynomial
    multiplicity_profile: tuple[tuple[Polynomial, int], ...]
    delta_max: int

    @property
    def forces_indecomposable(self) -> bool:
        return self.delta_max <= 1


def delta_report(f: Polynomial) -> DeltaReport:
    """``R(γ) = Res_x(f', f - γ)`` and the largest root multiplicity of ``R``.

    A root ``γ0`` of multiplicity ``e`` means ``deg gcd(f - γ0, f') = e``.
    Squarefree parts stay squarefree over C, so reading multiplicities off the
    rational squarefree decomposition gives the complex maximum.
    """
    if f.degree is None or f.degree < 2:
        raise ValueError("delta report needs deg f >= 2")
    R = critical_value_resultant(f)
    profile = tuple(squarefree_decomposition(R)) if R.degree and R.degree > 0 else ()
    delta_max = max((m for _, m in profile), default=0)
    return DeltaReport(R, profile, delta_max)


def delta_at(f: Polynomial, gamma) -> int:
    """``deg gcd(f - γ, f')`` for a rational ``γ``."""
    g = poly_gcd(f - gamma, f.derivative())
    return g.degree or 0


def _phi_cubic_irreducible(f: Polynomial) -> bool:
    """``(f(x) - f(y))/(x - y)`` for a cubic is a conic; irreducible iff nondegenerate."""
    # (f(x)-f(y))/(x-y) = c3 (x^2 + xy + y^2) + c2 (x + y) + c1
    c3, c2, c1 = f[3], f[2], f[1]
    det = (
        c3 * (c3 * c1 - (c2 / 2) ** 2)
        - (c3 / 2) * ((c3 / 2) * c1 - (c2 / 2) ** 2)
        + (c2 / 2) * ((c3 / 2) * (c2 / 2) - c3 * (c2 / 2))
    )
    return det != 0


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n**0.5) + 1))


def fried1_phi_classifier(f: Polynomial) -> PhiClass:
    """Is ``(f(x) - f(y))/(x - y)`` irreducible over the algebraic closure?

    Irreducible iff ``f`` is indecomposable and, when ``n`` is an odd prime,
    ``f`` is not an affine Dickson conjugate (for ``n = 3`` only the ``a = 0``
    conjugates are excluded, which the conic test decides directly).
    """
    n = f.degree
    if n is None or n < 2:
        raise ValueError("classifier needs deg f >= 2")
    if decompose_once(f):
        return PhiClass.PHI_REDUCIBLE
    if n % 2 == 1 and _is_prime(n):
        form = recognize(f)
        if n == 3:
            return PhiClass.PHI_IRREDUCIBLE if _phi_cubic_irreducible(f) else PhiClass.PHI_REDUCIBLE
        if form is not None:
            return PhiClass.PHI_REDUCIBLE
    return PhiClass.PHI_IRREDUCIBLE


@dataclass
class IndecomposabilityVerdict:
    verdict: Verdict
    reasons: list[dict] = field(default_factory=list)
    degree_constraints: set[int] = field(default_factory=set)


def indecomposability_report(f: Polynomial, exhaustive: bool = True) -> IndecomposabilityVerdict:
    """Run the cheap criteria in order, then ``decompose_once`` as the final word."""
    n = f.degree
    if n is None or n < 2:
        raise ValueError("indecomposability needs deg f >= 2")
    reasons = []
    fired = False

    sub = criterion_subleading(f)
    reasons.append({"criterion": "subleading_gcd", "fired": sub})
    fired |= sub

    outer = criterion_outer_degree(f)
    reasons.append({"criterion": "outer_degree", "fired": not outer, "admissible_t": sorted(outer)})
    fired |= not outer

    der = irreducibility(f.derivative())
    reasons.append({"criterion": "derivative_irreducible", "fired": der.irreducible, "method": der.method})
    fired |= der.irreducible

    delta = delta_report(f)
    reasons.append({"criterion": "delta_max", "fired": delta.delta_max <= 1, "delta_max": delta.delta_max})
    fired |= delta.delta_max <= 1

    if fired:
        verdict = Verdict.INDECOMPOSABLE
    elif exhaustive:
        pairs = decompose_once(f)
        reasons.append({"criterion": "decompose_once", "fired": not pairs, "pairs": len(pairs)})
        verdict = Verdict.INDECOMPOSABLE if not pairs else Verdict.DECOMPOSABLE
    else:
        verdict = Verdict.UNDECIDED_BY_CRITERIA
    return IndecomposabilityVerdict(verdict, reasons, outer)
