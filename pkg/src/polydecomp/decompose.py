"""Functional decomposition of univariate polynomials over the rationals.

Every stored decomposition is in the canonical form used for deduplication:
each inner component is monic with zero constant term, and the outermost
component absorbs the remaining linear freedom.  With that convention two
decompositions are equivalent exactly when they are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import (
    LinearPoly,
    Polynomial,
    affine_substitute,
    compose,
    compose_chain,
    h_adic_expansion,
    outer_from_digits,
)

DEFAULT_NODE_CAP = 10_000


class DecompositionError(ValueError):
    pass


class InvariantViolation(AssertionError):
    """A theorem-backed invariant failed: this is a bug, not bad input."""


@dataclass(frozen=True)
class NormalizedPair:
    """``f = g ∘ h`` with ``h`` monic, ``h(0) = 0`` and both degrees >= 2.

    ``g`` is kept exact, so it is monic precisely when ``f`` is.
    """

    g: Polynomial
    h: Polynomial

    @property
    def t(self) -> int:
        return self.g.degree

    @property
    def k(self) -> int:
        return self.h.degree

    def composed(self) -> Polynomial:
        return compose(self.g, self.h)


@dataclass(frozen=True)
class Decomposition:
    components: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.components)

    def composed(self) -> Polynomial:
        return compose_chain(self.components)

    def __len__(self):
        return len(self.components)


@dataclass(frozen=True)
class EquivalenceWitness:
    linears: tuple[LinearPoly, ...]


def _linear_fix(h: Polynomial) -> LinearPoly:
    """The linear ``ℓ`` with ``h = ℓ ∘ h_n`` where ``h_n`` is monic with ``h_n(0)=0``."""
    return LinearPoly(h.lc, h[0])


def normalize(g: Polynomial, h: Polynomial):
    """Rewrite ``g ∘ h`` so the inner part is monic with zero constant term.

    Returns ``(pair, outer_fix, inner_fix)`` where ``h = inner_fix ∘ pair.h``,
    ``pair.g = g ∘ inner_fix`` and ``pair.g = outer_fix ∘ (monic outer)``, i.e.
    ``outer_fix`` is ``lc(f) * x``.
    """
    if g.degree is None or h.degree is None or g.degree < 2 or h.degree < 2:
        raise DecompositionError("normalize needs deg g, deg h >= 2")
    inner_fix = _linear_fix(h)
    h_n = (h - h[0]) / h.lc
    g_n = affine_substitute(g, inner_fix)
    outer_fix = LinearPoly(g_n.lc, 0)
    return NormalizedPair(g_n, h_n), outer_fix, inner_fix


def _series_pow_truncated(series: list, t: int, length: int) -> list:
    """First ``length`` coefficients of ``series**t`` (series in 1/x, constant first)."""

    def mul(a, b):
        out = [Fraction(0)] * length
        for i, ai in enumerate(a[:length]):
            if ai:
                for j in range(min(len(b), length - i)):
                    out[i + j] += ai * b[j]
        return out

    result = [Fraction(1)] + [Fraction(0)] * (length - 1)
    base = list(series[:length]) + [Fraction(0)] * max(0, length - len(series))
    while t:
        if t & 1:
            result = mul(result, base)
        t >>= 1
        if t:
            base = mul(base, base)
    return result


def right_component_candidate(f: Polynomial, k: int):
    """The unique possible monic inner ``h`` of degree ``k`` with ``h(0)=0``.

    Solves the top ``k-1`` coefficient equations of ``f = g(h)`` by
    back-substitution (each ``b_{k-j}`` is the ``x^(n-j)`` coefficient of the
    monic target minus the contribution of the already known part of ``h^t``,
    divided by ``t``), then accepts ``h`` iff every ``h``-adic digit of ``f``
    is constant.  Returns a :class:`NormalizedPair` or ``None``.
    """
    n = f.degree
    if n is None or k < 2 or n % k or k > n // 2:
        raise DecompositionError(f"k={k} is not a proper divisor of deg f={n}")
    t = n // k
    target = [f[n - j] / f.lc for j in range(k)]  # monic coefficients from the top
    # h = x^k (1 + q_1/x + ... + q_{k-1}/x^{k-1}); q_j = b_{k-j}
    q = [Fraction(1)] + [Fraction(0)] * (k - 1)
    for j in range(1, k):
        partial = _series_pow_truncated(q, t, j + 1)
        q[j] = (target[j] - partial[j]) / t
    h = Polynomial([Fraction(0)] + [q[k - i] for i in range(1, k)] + [Fraction(1)])
    g = outer_from_digits(h_adic_expansion(f, h))
    if g is None:
        return None
    return NormalizedPair(g, h)


def decompose_once(f: Polynomial) -> list[NormalizedPair]:
    """All decompositions ``f = g ∘ h`` with ``deg g, deg h >= 2``, one per inner degree.

    Empty list means ``f`` is indecomposable (over Q, hence over C).
    """
    n = f.degree
    if n is None or n < 2:
        raise DecompositionError("decompose_once needs deg f >= 2")
    out = []
    for k in range(2, n // 2 + 1):
        if n % k == 0:
            pair = right_component_candidate(f, k)
            if pair is not None:
                out.append(pair)
    return out


def is_indecomposable(f: Polynomial) -> bool:
    return not decompose_once(f)


def canonical_chain(components: Sequence[Polynomial]) -> Decomposition:
    """Push linear factors outward until each inner component is monic with zero constant."""
    comps = list(components)
    for i in range(len(comps) - 1, 0, -1):
        ell = _linear_fix(comps[i])
        comps[i] = (comps[i] - comps[i][0]) / comps[i].lc
        comps[i - 1] = affine_substitute(comps[i - 1], ell)
    return Decomposition(tuple(comps))


def _chain_key(d: Decomposition):
    from .parse import canonical_text

    return (d.degrees, tuple(canonical_text(p) for p in d.components))


def complete_decompositions(f: Polynomial, node_cap: int = DEFAULT_NODE_CAP) -> list[Decomposition]:
    """Every complete decomposition of ``f`` up to equivalence, canonically ordered.

    Explores the divisor lattice depth first, memoizing on the canonical text
    of each subproblem.  Asserts the Ritt invariants (equal lengths, degree
    multisets that are permutations of each other) before returning.
    """
    if f.degree is None or f.degree < 2:
        raise DecompositionError("complete_decompositions needs deg f >= 2")
    from .parse import canonical_text

    memo: dict[str, list[tuple[Polynomial, ...]]] = {}
    nodes = [0]

    def chains(p: Polynomial) -> list[tuple[Polynomial, ...]]:
        key = canonical_text(p)
        if key in memo:
            return memo[key]
        nodes[0] += 1
        if nodes[0] > node_cap:
            raise DecompositionError(f"decomposition tree exceeds node cap {node_cap}")
        pairs = decompose_once(p)
        if not pairs:
            result = [(p,)]
        else:
            seen = {}
            for pair in pairs:
                for cg in chains(pair.g):
                    for ch in chains(pair.h):
                        d = canonical_chain(cg + ch)
                        seen.setdefault(_chain_key(d), d.components)
            result = [seen[k] for k in sorted(seen)]
        memo[key] = result
        return result

    out = [Decomposition(c) for c in chains(f)]
    lengths = {len(d) for d in out}
    multisets = {tuple(sorted(d.degrees)) for d in out}
    if len(lengths) != 1 or len(multisets) != 1:
        raise InvariantViolation(f"complete decompositions disagree: {[d.degrees for d in out]}")
    for d in out:
        if d.composed() != f:
            raise InvariantViolation("chain does not recompose to f")
    return out


def equivalent(d1: Decomposition, d2: Decomposition):
    """Linking linears ``μ_i`` if the two chains are equivalent, else ``None``.

    The witness satisfies ``g_1 = f_1 ∘ μ_1``, ``g_i = μ_{i-1}^{-1} ∘ f_i ∘ μ_i``
    and ``g_m = μ_{m-1}^{-1} ∘ f_m``.
    """
    f1, f2 = d1.composed(), d2.composed()
    if f1 != f2:
        raise DecompositionError("decompositions compose to different polynomials")
    if d1.degrees != d2.degrees:
        return None
    m = len(d1)
    mus = []
    for i in range(1, m):
        t1 = compose_chain(d1.components[i:])
        t2 = compose_chain(d2.components[i:])
        s = t1.lc / t2.lc
        mu = LinearPoly(s, t1[0] - s * t2[0])
        if mu(t2) != t1:
            return None
        mus.append(mu)
    for i in range(m):
        left = d1.components[i]
        if i < m - 1:
            left = affine_substitute(left, mus[i])
        if i > 0:
            left = mus[i - 1].invert()(left)
        if left != d2.components[i]:
            return None
    return EquivalenceWitness(tuple(mus))


# -- Ritt swaps ----------------------------------------------------------


@dataclass(frozen=True)
class SwapResult:
    g: Polynomial
    h: Polynomial
    patterns: tuple[str, ...]  # subset of ("power", "dickson"); the cases overlap


def is_power_shape(p: Polynomial) -> bool:
    """Is ``p = ℓ_1 ∘ x^d ∘ ℓ_2`` for linears ``ℓ_i`` and ``d = deg p``?"""
    from .dickson import center

    d = p.degree
    if d is None or d < 1:
        return False
    g = center(p).monic_centered
    return all(g[i] == 0 for i in range(1, d))


def _is_dickson_shape(p: Polynomial) -> bool:
    from .dickson import recognize

    if p.degree < 2:
        return True
    return recognize(p) is not None


def ritt_swap(g: Polynomial, h: Polynomial):
    """Swap a coprime-degree pair: ``g ∘ h = g' ∘ h'`` with ``deg g' = deg h``.

    The swapped pair comes from the decomposition engine (the right component
    of degree ``deg g`` is unique); the result is then classified as the
    power pattern or the Dickson pattern, one of which must hold.
    """
    from math import gcd

    m, n = g.degree, h.degree
    if m is None or n is None or m < 2 or n < 2:
        raise DecompositionError("ritt_swap needs deg g, deg h >= 2")
    if gcd(m, n) != 1:
        raise DecompositionError("ritt_swap needs coprime degrees")
    f = compose(g, h)
    pair = right_component_candidate(f, m)
    if pair is None:
        return None
    g2, h2 = pair.g, pair.h
    if compose(g2, h2) != f:
        raise InvariantViolation("swap does not recompose")
    patterns = []
    if (is_power_shape(h) and is_power_shape(g2)) or (is_power_shape(g) and is_power_shape(h2)):
        patterns.append("power")
    if all(_is_dickson_shape(p) for p in (g, h, g2, h2)):
        patterns.append("dickson")
    if not patterns:
        raise InvariantViolation("swap matches neither Ritt pattern")
    return SwapResult(g2, h2, tuple(patterns))
