"""Finiteness certificates for ``f(x) = g(y)`` through standard pairs.

The engine looks for ``f = φ ∘ f1 ∘ λ`` and ``g = φ ∘ g1 ∘ μ`` with a
standard pair ``(f1, g1)`` and linear ``λ, μ``.  Every branch of the search
(degree of ``φ``, pair kind, switched or not) either produces an exactly
verified representation or an elimination record naming the coefficient
identity that fails.  No representation at all means finitely many solutions
with bounded denominator, hence finitely many integer solutions.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import factorial, gcd, isqrt

from .decompose import InvariantViolation, right_component_candidate
from .dickson import center, dickson, first_dickson_violation, recognize
from .parse import canonical_text
from .poly import (
    X,
    LinearPoly,
    Polynomial,
    affine_substitute,
    binomial_poly,
    divisors,
    int_nth_root,
    poly_gcd,
    rational_nth_root,
    real_root_count,
    rising_factorial_poly,
    squarefree_decomposition,
)

DEFAULT_DEGREE_CAP = 64
MAX_SCAN_BOX = 10**6


# -- fixtures ---------------------------------------------------------------


def build_H(m: int) -> Polynomial:
    """``sum binomial(x, j)`` over ``j = 0, 2, 3, ..., m``."""
    if m < 2:
        raise ValueError("build_H needs m >= 2")
    acc = Polynomial.constant(1)
    for j in range(2, m + 1):
        acc = acc + binomial_poly(X, j)
    return acc


def build_R(n: int) -> Polynomial:
    """``x (x+1) ... (x+n-1)``."""
    if n < 1:
        raise ValueError("build_R needs n >= 1")
    return rising_factorial_poly(X, n)


def H_coefficients(m: int, a1, a0) -> dict[int, Fraction]:
    """Closed forms for the top four coefficients of ``H_m(a1 x + a0)``."""
    a1, a0 = Fraction(a1), Fraction(a0)
    return {
        m: a1**m / factorial(m),
        m - 1: a1 ** (m - 1) * (2 * a0 - m + 3) / (2 * factorial(m - 1)),
        m - 2: a1 ** (m - 2)
        * (3 * m**2 - (19 + 12 * a0) * m + 12 * a0**2 + 36 * a0 + 50)
        / (24 * factorial(m - 2)),
        m - 3: a1 ** (m - 3)
        * (
            -(m**3)
            + (6 * a0 + 10) * m**2
            - (12 * a0**2 + 38 * a0 + 53) * m
            + 8 * a0**3
            + 36 * a0**2
            + 100 * a0
            + 144
        )
        / (48 * factorial(m - 3)),
    }


def R_coefficients(n: int, b1, b0) -> dict[int, Fraction]:
    """Closed forms for the top three coefficients of ``R_n(b1 x + b0)``."""
    b1, b0 = Fraction(b1), Fraction(b0)
    return {
        n: b1**n,
        n - 1: b1 ** (n - 1) * n * (2 * b0 + n - 1) / 2,
        n - 2: b1 ** (n - 2) * n * (n - 1) * (3 * n**2 + (12 * b0 - 7) * n + 12 * b0**2 - 12 * b0 + 2) / 24,
    }


# -- standard pairs ----------------------------------------------------------


@dataclass(frozen=True)
class StandardPair:
    """One row of the standard-pair table, optionally switched.

    kind 1: ``(x^m, a x^r p(x)^m)``; kind 2: ``(x^2, (a x^2 + b) p(x)^2)``;
    kind 3: ``(D_m(x, a^n), D_n(x, a^m))``;
    kind 4: ``(a^(-m/2) D_m(x, a), -b^(-n/2) D_n(x, b))``;
    kind 5: ``((a x^2 - 1)^3, 3 x^4 - 4 x^3)``.
    """

    kind: int
    switched: bool = False
    m: int | None = None
    n: int | None = None
    a: Fraction | None = None
    b: Fraction | None = None
    r: int | None = None
    p: Polynomial | None = None

    def __post_init__(self):
        k = self.kind
        if k not in (1, 2, 3, 4, 5):
            raise ValueError(f"unknown standard pair kind {k}")
        if self.a is None or self.a == 0:
            raise ValueError("parameter a must be a nonzero rational")
        if k == 1:
            if not (0 <= self.r < self.m and gcd(self.r, self.m) == 1):
                raise ValueError("kind 1 needs 0 <= r < m and gcd(r, m) = 1")
            if self.p is None or self.p.is_zero or self.r + self.p.degree <= 0:
                raise ValueError("kind 1 needs p nonzero and r + deg p > 0")
        elif k == 2:
            if self.b is None or self.b == 0 or self.p is None or self.p.is_zero:
                raise ValueError("kind 2 needs b nonzero and p nonzero")
        elif k == 3:
            if gcd(self.m, self.n) != 1:
                raise ValueError("kind 3 needs gcd(m, n) = 1")
        elif k == 4:
            if gcd(self.m, self.n) != 2 or self.b is None or self.b == 0:
                raise ValueError("kind 4 needs gcd(m, n) = 2 and b nonzero")

    def instantiate(self) -> tuple[Polynomial, Polynomial]:
        k, a = self.kind, self.a
        if k == 1:
            pair = (Polynomial.monomial(self.m), Polynomial.monomial(self.r, a) * self.p**self.m)
        elif k == 2:
            pair = (Polynomial.monomial(2), Polynomial((self.b, 0, a)) * self.p**2)
        elif k == 3:
            pair = (dickson(self.m, a**self.n), dickson(self.n, a**self.m))
        elif k == 4:
            pair = (
                dickson(self.m, a) * a ** (-(self.m // 2)),
                -dickson(self.n, self.b) * self.b ** (-(self.n // 2)),
            )
        else:
            pair = (Polynomial((-1, 0, a)) ** 3, Polynomial((0, 0, 0, -4, 3)))
        return (pair[1], pair[0]) if self.switched else pair

    def as_dict(self) -> dict:
        out = {"kind": self.kind, "switched": self.switched}
        for name in ("m", "n", "r"):
            if getattr(self, name) is not None:
                out[name] = getattr(self, name)
        for name in ("a", "b"):
            if getattr(self, name) is not None:
                out[name] = str(getattr(self, name))
        if self.p is not None:
            out["p"] = canonical_text(self.p)
        return out


@dataclass(frozen=True)
class Representation:
    """``f = phi ∘ f1 ∘ lam`` and ``g = phi ∘ g1 ∘ mu`` with ``(f1, g1) = pair``."""

    phi: Polynomial
    pair: StandardPair
    lam: LinearPoly
    mu: LinearPoly

    def recompose(self) -> tuple[Polynomial, Polynomial]:
        f1, g1 = self.pair.instantiate()
        return (
            self.phi(affine_substitute(f1, self.lam)),
            self.phi(affine_substitute(g1, self.mu)),
        )

    def verify(self, f: Polynomial, g: Polynomial) -> bool:
        return self.recompose() == (f, g)

    def as_dict(self) -> dict:
        return {
            "phi": canonical_text(self.phi),
            "pair": self.pair.as_dict(),
            "lambda": canonical_text(self.lam.as_polynomial()),
            "mu": canonical_text(self.mu.as_polynomial()),
        }


class FinitenessVerdict(str, enum.Enum):
    FINITE = "FINITE"
    REPRESENTATION_FOUND = "REPRESENTATION_FOUND"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class CaseRecord:
    """One branch of the search: ``k = deg φ``, pair kind, orientation, outcome."""

    k: int
    kind: int | None
    switched: bool | None
    outcome: str  # ELIMINATED, MATCHED or ADMITTED
    tactic: str
    identity: str
    lhs: str
    rhs: str
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "kind": self.kind,
            "switched": self.switched,
            "outcome": self.outcome,
            "tactic": self.tactic,
            "identity": self.identity,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "detail": self.detail,
        }


@dataclass
class FinitenessCertificate:
    verdict: FinitenessVerdict
    cases: list[CaseRecord]
    witness: Representation | None = None
    residual_note: str | None = None

    def as_payload(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "cases": [c.as_dict() for c in self.cases],
            "witness": self.witness.as_dict() if self.witness else None,
            "residual_note": self.residual_note,
        }


# -- φ-degree filter -----------------------------------------------------------


def kth_power_filter(f: Polynomial, g: Polynomial) -> set[int]:
    """Common divisors ``k`` of the degrees with ``lc(f)/lc(g)`` a rational k-th power."""
    if f.degree is None or g.degree is None or f.degree < 1 or g.degree < 1:
        raise ValueError("kth_power_filter needs nonconstant f and g")
    ratio = f.lc / g.lc
    common = gcd(f.degree, g.degree)
    return {k for k in divisors(common) if rational_nth_root(ratio, k) is not None}


def erdos_selfridge_scan(x_max: int, k_max: int, l_max: int) -> list[tuple[int, int, int, int]]:
    """Brute-force ``x (x+1) ... (x+k-1) = y^l`` with ``x >= 1``, ``k, l >= 2``, ``y > 1``.

    Returns every ``(x, k, l, y)`` hit in the box; the expected answer is empty.
    """
    if min(x_max, k_max, l_max) < 2:
        raise ValueError("scan bounds must be >= 2")
    hits = []
    for x in range(1, x_max + 1):
        prod = x
        for k in range(2, k_max + 1):
            prod *= x + k - 1
            for l in range(2, l_max + 1):
                y = int_nth_root(prod, l)
                if y is not None and y > 1:
                    hits.append((x, k, l, y))
    return hits


# -- left factor search ----------------------------------------------------------


def _outer_inner(p: Polynomial, k: int):
    """``p = G ∘ h`` with ``deg G = k`` and ``h`` monic, ``h(0) = 0``; ``None`` if impossible."""
    d = p.degree // k
    if d == 1:
        return p, X
    if k == 1:
        return LinearPoly(p.lc, p[0]).as_polynomial(), (p - p[0]) / p.lc
    pair = right_component_candidate(p, d)
    return None if pair is None else (pair.g, pair.h)


def _right_linears(G: Polynomial, H: Polynomial) -> list[LinearPoly]:
    """Every linear ``ℓ`` with ``H = G ∘ ℓ`` (both of degree ``k >= 1``)."""
    k = G.degree
    if H.degree != k:
        return []
    ratio = H.lc / G.lc
    root = rational_nth_root(ratio, k)
    if root is None and k % 2 == 1:
        neg = rational_nth_root(-ratio, k)
        root = None if neg is None else -neg
    if root is None:
        return []
    slopes = [root, -root] if k % 2 == 0 else [root]
    out = []
    for s in slopes:
        # coefficient of x^(k-1) in G(s x + t): s^(k-1) (G[k-1] + k t lc(G))
        t = (H[k - 1] / s ** (k - 1) - G[k - 1]) / (k * G.lc)
        ell = LinearPoly(s, t)
        if affine_substitute(G, ell) == H:
            out.append(ell)
    return out


def left_factor_candidates(f: Polynomial, g: Polynomial, k: int):
    """All ``(φ, f~, g~)`` with ``deg φ = k``, ``f = φ ∘ f~`` and ``g = φ ∘ g~``.

    The inner part of each side is unique up to a linear, so ``φ`` is fixed by
    ``f`` and only the linears relating the two outer parts vary.
    """
    if f.degree % k or g.degree % k:
        raise ValueError("k must divide both degrees")
    if k == 1:
        return [(X, f, g)]
    of, og = _outer_inner(f, k), _outer_inner(g, k)
    if of is None or og is None:
        return []
    (Gf, hf), (Gg, hg) = of, og
    return [(Gf, hf, ell(hg)) for ell in _right_linears(Gf, Gg)]


def left_factor_search(f: Polynomial, g: Polynomial, k: int):
    """First ``(φ, f~, g~)`` from :func:`left_factor_candidates`, or ``None``."""
    found = left_factor_candidates(f, g, k)
    return found[0] if found else None


# -- per-kind matching ------------------------------------------------------------


@dataclass(frozen=True)
class PairMatch:
    E: LinearPoly
    pair: StandardPair
    lam: LinearPoly
    mu: LinearPoly


@dataclass(frozen=True)
class PairElimination:
    tactic: str
    identity: str
    lhs: str
    rhs: str
    detail: dict = field(default_factory=dict)


def _q(v) -> str:
    return str(Fraction(v))


def _pure_power_violation(F: Polynomial, letter: str):
    """``None`` if ``F = e1 (x + b)^M + e0``; else the top nonzero centered coefficient."""
    shape = center(F)
    M = F.degree
    for i in range(M - 2, 0, -1):
        if shape.monic_centered[i] != 0:
            value = shape.monic_centered[i] * F.lc
            return PairElimination(
                "pure power",
                f"{letter}_{i} = 0",
                _q(value),
                "0",
                {"a_1": "1", "a_0": _q(-shape.shift)},
            )
    return None


def _factor_shape(h: Polynomial, M: int, r: int):
    """Write ``h = K (x - x0)^r q^M``; returns ``(K, x0, q)`` or ``None``."""
    parts = squarefree_decomposition(h)
    odd = [(s, i) for s, i in parts if i % M]
    if r == 0:
        if odd:
            return None
        x0 = Fraction(0)
    else:
        if len(odd) != 1 or odd[0][0].degree != 1 or odd[0][1] % M != r:
            return None
        x0 = -odd[0][0][0]
    q = Polynomial.constant(1)
    for s, i in parts:
        if (s, i) in odd:
            q = q * s ** ((i - r) // M)
        else:
            q = q * s ** (i // M)
    return h.lc, x0, q


def _kind1(F: Polynomial, G: Polynomial):
    M = F.degree
    if M == 1:
        E = LinearPoly(F[1], F[0])
        h = E.invert()(G)
        pair = StandardPair(1, m=1, a=h.lc, r=0, p=h / h.lc)
        return PairMatch(E, pair, LinearPoly.identity(), LinearPoly.identity())
    bad = _pure_power_violation(F, "c")
    if bad is not None:
        return bad
    shape = center(F)
    e1, e0 = F.lc, shape.monic_centered[0] * F.lc
    h = (G - e0) / e1
    N = h.degree
    r = N % M
    if gcd(r, M) != 1:
        return PairElimination("exponent residue", "gcd(deg g mod m, m) = 1", str(gcd(r, M)), "1", {"m": M, "deg_g": N})
    fit = _factor_shape(h, M, r)
    if fit is None:
        return PairElimination(
            "power shape",
            f"g - e_0 = a (x - x_0)^{r} p(x)^{M}",
            canonical_text(h * e1),
            f"a (x - x_0)^{r} p(x)^{M}",
            {"e_0": _q(e0)},
        )
    K, x0, q = fit
    p = affine_substitute(q, LinearPoly(1, x0))
    pair = StandardPair(1, m=M, a=K, r=r, p=p)
    return PairMatch(LinearPoly(e1, e0), pair, LinearPoly(1, shape.shift), LinearPoly(1, -x0))


def _kind2(F: Polynomial, G: Polynomial):
    if F.degree != 2:
        return PairElimination("degree", "deg f_1 = 2", str(F.degree), "2")
    shape = center(F)
    e1, e0 = F.lc, shape.monic_centered[0] * F.lc
    h = (G - e0) / e1
    parts = squarefree_decomposition(h) if h.degree > 0 else []
    odd = Polynomial.constant(1)
    P = Polynomial.constant(1)
    for s, i in parts:
        if i % 2:
            odd = odd * s
        P = P * s ** (i // 2)
    if odd.degree != 2:
        return PairElimination(
            "odd part",
            "deg(odd-multiplicity part of g - e_0) = 2",
            str(odd.degree),
            "2",
            {"e_0": _q(e0)},
        )
    Q = odd * h.lc
    A, B, C = Q[2], Q[1], Q[0]
    v = B / (2 * A)
    pair = StandardPair(2, a=A, b=C - B * B / (4 * A), p=affine_substitute(P, LinearPoly(1, -v)))
    return PairMatch(LinearPoly(e1, e0), pair, LinearPoly(1, shape.shift), LinearPoly(1, v))


def _vertex(Q: Polynomial):
    """``Q = alpha (x + b)^2 + c`` as ``(alpha, b, c)``."""
    shape = center(Q)
    return Q.lc, shape.shift, shape.monic_centered[0] * Q.lc


def _dickson_or_fail(F: Polynomial, letter: str):
    form = recognize(F)
    if form is None:
        i, have, want = first_dickson_violation(F)
        return None, PairElimination(
            "dickson shape",
            f"{letter}_{i} = {_q(want * F.lc)}",
            _q(have * F.lc),
            _q(want * F.lc),
            {"a_1": "1", "a_0": _q(-center(F).shift)},
        )
    if form.a == 0:
        return None, PairElimination("dickson parameter", "a != 0", "0", "nonzero")
    return form, None


def _sqrt(q):
    return rational_nth_root(q, 2)


def _kind3_quadratic_first(Q: Polynomial, D: Polynomial):
    """``(D_2(x, a^n), D_n(x, a^2))`` with ``Q`` quadratic and ``n`` odd."""
    form, bad = _dickson_or_fail(D, "d")
    if bad:
        return bad
    n = D.degree
    alpha_q, b_q, c_q = _vertex(Q)
    s = _sqrt(form.a)
    if s is None:
        return PairElimination("square class", "a^2 / v^2 = A_g has a rational root", _q(form.a), "square")
    for sign in (1, -1):
        if c_q == form.c - 2 * (sign * s) ** n * form.alpha:
            break
    else:
        return PairElimination(
            "constant term",
            "e_0 - 2 e_1 a^n = vertex value of f",
            _q(c_q),
            _q(form.c - 2 * s**n * form.alpha),
        )
    v = alpha_q * form.alpha
    u = _sqrt(alpha_q * v**n / form.alpha)
    e1 = form.alpha / v**n
    pair = StandardPair(3, m=2, n=n, a=sign * s * v)
    return PairMatch(LinearPoly(e1, form.c), pair, LinearPoly(u, u * b_q), LinearPoly(v, v * form.b))


def _kind3(F: Polynomial, G: Polynomial):
    M, N = F.degree, G.degree
    if min(M, N) < 2:
        return PairElimination("degree", "deg f_1, deg g_1 >= 2", f"{M}, {N}", ">= 2", {"note": "degree one is kind 1"})
    if gcd(M, N) != 1:
        return PairElimination("gcd", "gcd(m, n) = 1", str(gcd(M, N)), "1")
    if M == 2:
        return _kind3_quadratic_first(F, G)
    if N == 2:
        res = _kind3_quadratic_first(G, F)
        if isinstance(res, PairElimination):
            return res
        p = res.pair
        return PairMatch(res.E, StandardPair(3, m=M, n=2, a=p.a), res.mu, res.lam)
    ff, bad = _dickson_or_fail(F, "c")
    if bad:
        return bad
    fg, bad = _dickson_or_fail(G, "d")
    if bad:
        return bad
    if ff.c != fg.c:
        return PairElimination("shared constant", "e_0(f) = e_0(g)", _q(ff.c), _q(fg.c))
    a = ff.a if N % 2 else fg.a
    u, v = _sqrt(a**N / ff.a), _sqrt(a**M / fg.a)
    if u is None or v is None:
        return PairElimination(
            "square class",
            "a^n / A_f and a^m / A_g are rational squares",
            f"{_q(ff.a)}, {_q(fg.a)}",
            "compatible square classes",
        )
    for su in (u, -u):
        for sv in (v, -v):
            e1 = ff.alpha / su**M
            if e1 * sv**N == fg.alpha:
                pair = StandardPair(3, m=M, n=N, a=a)
                return PairMatch(
                    LinearPoly(e1, ff.c), pair, LinearPoly(su, su * ff.b), LinearPoly(sv, sv * fg.b)
                )
    return PairElimination(
        "leading coefficients",
        "alpha_f^2 A_f^m = alpha_g^2 A_g^n",
        _q(ff.alpha**2 * ff.a**M),
        _q(fg.alpha**2 * fg.a**N),
    )


def _kind4(F: Polynomial, G: Polynomial):
    M, N = F.degree, G.degree
    if gcd(M, N) != 2:
        return PairElimination("gcd", "gcd(m, n) = 2", str(gcd(M, N)), "2")
    if M == 2 and N == 2:
        af, bf, cf = _vertex(F)
        ag, bg, cg = _vertex(G)
        e1 = (cg - cf) / 4
        if e1 == 0:
            return PairElimination("vertex values", "vertex(f) != vertex(g)", _q(cf), _q(cg))
        pair = StandardPair(4, m=2, n=2, a=e1 / af, b=-e1 / ag)
        return PairMatch(LinearPoly(e1, (cf + cg) / 2), pair, LinearPoly(1, bf), LinearPoly(1, bg))
    if M == 2:
        fg, bad = _dickson_or_fail(G, "d")
        if bad:
            return bad
        af, bf, cf = _vertex(F)
        e1 = -fg.alpha * fg.a ** (N // 2)
        if cf != fg.c - 2 * e1:
            return PairElimination("constant term", "vertex(f) = e_0 - 2 e_1", _q(cf), _q(fg.c - 2 * e1))
        pair = StandardPair(4, m=2, n=N, a=e1 / af, b=fg.a)
        return PairMatch(LinearPoly(e1, fg.c), pair, LinearPoly(1, bf), LinearPoly(1, fg.b))
    ff, bad = _dickson_or_fail(F, "c")
    if bad:
        return bad
    e1 = ff.alpha * ff.a ** (M // 2)
    if N == 2:
        ag, bg, cg = _vertex(G)
        if cg != ff.c + 2 * e1:
            return PairElimination("constant term", "vertex(g) = e_0 + 2 e_1", _q(cg), _q(ff.c + 2 * e1))
        pair = StandardPair(4, m=M, n=2, a=ff.a, b=-e1 / ag)
        return PairMatch(LinearPoly(e1, ff.c), pair, LinearPoly(1, ff.b), LinearPoly(1, bg))
    fg, bad = _dickson_or_fail(G, "d")
    if bad:
        return bad
    if ff.c != fg.c:
        return PairElimination("shared constant", "e_0(f) = e_0(g)", _q(ff.c), _q(fg.c))
    other = -fg.alpha * fg.a ** (N // 2)
    if e1 != other:
        return PairElimination("leading coefficients", "alpha_f A_f^(m/2) = -alpha_g A_g^(n/2)", _q(e1), _q(other))
    pair = StandardPair(4, m=M, n=N, a=ff.a, b=fg.a)
    return PairMatch(LinearPoly(e1, ff.c), pair, LinearPoly(1, ff.b), LinearPoly(1, fg.b))


def _simple_derivative_fail(P: Polynomial, role: str):
    d = P.derivative()
    info = real_root_count(d)
    if info.simple:
        return PairElimination(
            "derivative roots",
            f"{role}' has a multiple root",
            f"{role}' has {d.degree} simple roots ({info.count} real)",
            "a multiple root",
        )
    return None


def _kind5(F: Polynomial, G: Polynomial):
    if (F.degree, G.degree) != (6, 4):
        return PairElimination("degree", "(deg f_1, deg g_1) = (6, 4)", f"({F.degree}, {G.degree})", "(6, 4)")
    bad = _simple_derivative_fail(G, "g") or _simple_derivative_fail(F, "f")
    if bad:
        return bad
    d1 = G.derivative()
    t = poly_gcd(d1, d1.derivative())
    if t.degree != 1:
        return PairElimination("inflection", "deg gcd(g', g'') = 1", str(t.degree), "1")
    x0 = -t[0]
    e0 = G(x0)
    cube = Polynomial((-x0, 1)) ** 3
    lin, rem = divmod(G - e0, cube)
    if not rem.is_zero or lin.degree != 1:
        return PairElimination("triple root", "g - e_0 = K (x - x_0)^3 (x - x_1)", canonical_text(G - e0), "K (x - x_0)^3 (x - x_1)")
    x1 = -lin[0] / lin[1]
    slope = Fraction(4, 3) / (x1 - x0)
    mu = LinearPoly(slope, -slope * x0)
    e1 = G.lc / (3 * slope**4)
    w = (F - e0) / e1
    parts = squarefree_decomposition(w)
    if any(i % 3 for _, i in parts):
        return PairElimination("cube", "f - e_0 = e_1 q^3", canonical_text(F - e0), "e_1 q^3")
    c = rational_nth_root(abs(w.lc), 3)
    if c is None:
        return PairElimination("cube", "lc(f - e_0)/e_1 is a rational cube", _q(w.lc), "cube")
    q = Polynomial.constant(c if w.lc > 0 else -c)
    for s, i in parts:
        q = q * s ** (i // 3)
    A, b, C = _vertex(q)
    if C != -1:
        return PairElimination("vertex value", "q = a lambda^2 - 1", _q(C), "-1")
    pair = StandardPair(5, a=A)
    return PairMatch(LinearPoly(e1, e0), pair, LinearPoly(1, b), mu)


_MATCHERS = {1: _kind1, 2: _kind2, 3: _kind3, 4: _kind4, 5: _kind5}


def _oriented(kind: int, F: Polynomial, G: Polynomial, switched: bool):
    if not switched:
        return _MATCHERS[kind](F, G)
    res = _MATCHERS[kind](G, F)
    if isinstance(res, PairElimination):
        # names follow the inputs: c_i, f_1 for f and d_i, g_1 for g
        flip = {"c_": "d_", "d_": "c_", "f_1": "g_1", "g_1": "f_1"}
        swapped = re.sub(r"\b(?:[cd]_|[fg]_1)", lambda m: flip[m.group(0)], res.identity)
        return replace(res, identity=swapped)
    return PairMatch(res.E, replace(res.pair, switched=True), res.mu, res.lam)


def match_standard_pair(f1: Polynomial, g1: Polynomial):
    """Every standard-pair fit of ``(f1, g1)`` with a shared outer linear.

    Returns ``(matches, outcomes)``.  Each match ``(E, pair, λ, μ)`` satisfies
    ``f1 = E∘P1∘λ`` and ``g1 = E∘P2∘μ`` exactly; ``outcomes`` holds one
    ``(kind, switched, result)`` per branch, failures carrying the identity
    that broke.
    """
    if f1.degree is None or g1.degree is None or f1.degree < 1 or g1.degree < 1:
        raise ValueError("match_standard_pair needs nonconstant polynomials")
    matches = []
    outcomes = []
    for kind in range(1, 6):
        for switched in (False, True):
            res = _oriented(kind, f1, g1, switched)
            if isinstance(res, PairMatch):
                _check_match(res, f1, g1)
                matches.append(res)
            outcomes.append((kind, switched, res))
    return matches, outcomes


def _check_match(res: PairMatch, F: Polynomial, G: Polynomial):
    p1, p2 = res.pair.instantiate()
    if res.E(affine_substitute(p1, res.lam)) != F or res.E(affine_substitute(p2, res.mu)) != G:
        raise InvariantViolation(f"kind {res.pair.kind} match does not recompose")


# -- infinitude of the pair equation -----------------------------------------------


def pell_fundamental(D: int):
    """Smallest ``(x, y)`` with ``x^2 - D y^2 = 1``, ``y > 0``, by continued fractions."""
    a0 = isqrt(D)
    if a0 * a0 == D:
        raise ValueError("D must not be a square")
    m, d, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    while p * p - D * q * q != 1:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return p, q


def _nagell_solution(D: int, N: int, x1: int, y1: int, limit: int):
    """Some integer solution of ``X^2 - D Y^2 = N`` inside the Nagell box, else ``None``."""
    if N == 0:
        return (0, 0)
    if N > 0:
        lo, hi = 0, y1 * isqrt(N // (2 * (x1 + 1)) + 1) + y1
    else:
        lo, hi = isqrt(-N // D), y1 * isqrt(-N // (2 * (x1 - 1)) + 1) + y1
    if hi - lo > limit:
        return None
    for Y in range(lo, hi + 1):
        X = isqrt(D * Y * Y + N) if D * Y * Y + N >= 0 else -1
        if X >= 0 and X * X == D * Y * Y + N:
            return (X, Y)
    return None


def pell_confirmation(D, N, max_denominator: int = 12, limit: int = 10**6):
    """Does ``x^2 - D y^2 = N`` have infinitely many bounded-denominator rational solutions?

    Returns ``(confirmed, note)``.  Clears denominators to ``X^2 - Δ Y^2 = M λ^2``
    and, for ``Δ`` positive and not a square, looks for a base solution with
    ``λ <= max_denominator``; the unit group then gives infinitely many.
    """
    D, N = Fraction(D), Fraction(N)
    p, q = D.numerator, D.denominator
    Nq = N * q * q
    r, s = Nq.numerator, Nq.denominator
    delta, M = p * q, r * s
    if delta <= 0:
        return False, f"X^2 - ({delta}) Y^2 = const is a bounded conic; finitely many points"
    if isqrt(delta) ** 2 == delta:
        return False, f"discriminant {delta} is a square; the conic splits into two lines"
    x1, y1 = pell_fundamental(delta)
    for lam in range(1, max_denominator + 1):
        sol = _nagell_solution(delta, M * lam * lam, x1, y1, limit)
        if sol is not None:
            X_, Y_ = sol
            x = Fraction(X_, s * q * lam)
            y = Fraction(Y_, s * lam)
            return True, (
                f"Pell X^2 - {delta} Y^2 = 1 has fundamental solution ({x1}, {y1}); "
                f"base point (x, y) = ({x}, {y}) of x^2 - ({D}) y^2 = {N}; infinitely many solutions"
            )
    return False, f"no base point with denominator <= {max_denominator} inside the Nagell bounds"


def confirm_infinitude(pair: StandardPair):
    """``(confirmed, note)`` for the pair equation ``f1(x) = g1(y)`` itself."""
    if pair.kind == 1 and pair.m == 1:
        return True, "x = a p(y) gives a solution for every integer y"
    if pair.kind == 1 and pair.p.degree == 0:
        return True, (
            f"x^{pair.m} = A y^{pair.r} with gcd(r, m) = 1 has the parametric family "
            "y = A^s t^m, x = A^((1 + s r)/m) t^r"
        )
    if pair.kind == 2 and pair.p.degree == 0:
        c2 = pair.p[0] ** 2
        return pell_confirmation(pair.a * c2, pair.b * c2)
    return False, "infinitude of the standard-pair equation not decided for this kind and parameters"


# -- engine ---------------------------------------------------------------------


def _record_from(k: int, kind: int, switched: bool, res, phi: Polynomial) -> CaseRecord:
    if isinstance(res, PairMatch):
        return CaseRecord(
            k, kind, switched, "MATCHED", "standard pair", "representation verified exactly",
            "", "", {"phi": canonical_text(phi), "pair": res.pair.as_dict()},
        )
    detail = dict(res.detail)
    detail["phi"] = canonical_text(phi)
    return CaseRecord(k, kind, switched, "ELIMINATED", res.tactic, res.identity, res.lhs, res.rhs, detail)


def finiteness(f: Polynomial, g: Polynomial, degree_cap: int = DEFAULT_DEGREE_CAP) -> FinitenessCertificate:
    """Search every representation ``f = φ∘f1∘λ``, ``g = φ∘g1∘μ``; certify when none exists."""
    if f.degree is None or g.degree is None or f.degree < 1 or g.degree < 1:
        raise ValueError("finiteness needs nonconstant f and g")
    if max(f.degree, g.degree) > degree_cap:
        raise ValueError(f"degree exceeds cap {degree_cap}")
    cases: list[CaseRecord] = []
    found: list[Representation] = []
    ratio = f.lc / g.lc
    ks = divisors(gcd(f.degree, g.degree))
    admissible = kth_power_filter(f, g)
    cases.append(
        CaseRecord(
            1, None, None, "ADMITTED", "PHI_DEGREE",
            "lc(f)/lc(g) is a rational k-th power",
            _q(ratio), f"k-th power for k in {sorted(admissible)}",
            {"candidate_k": ks, "admissible_k": sorted(admissible)},
        )
    )
    for k in ks:
        if k not in admissible:
            cases.append(
                CaseRecord(k, None, None, "ELIMINATED", "PHI_DEGREE", f"lc(f)/lc(g) = t^{k}", _q(ratio), "no rational t")
            )
            continue
        cands = left_factor_candidates(f, g, k)
        if not cands:
            cases.append(
                CaseRecord(k, None, None, "ELIMINATED", "NO_LEFT_FACTOR", f"f = phi∘f~ and g = phi∘g~ with deg phi = {k}",
                           canonical_text(f), canonical_text(g))
            )
            continue
        for phi, ft, gt in cands:
            _, outcomes = match_standard_pair(ft, gt)
            for kind, switched, res in outcomes:
                cases.append(_record_from(k, kind, switched, res, phi))
                if isinstance(res, PairMatch):
                    rep = Representation(phi(res.E.as_polynomial()), res.pair, res.lam, res.mu)
                    if not rep.verify(f, g):
                        raise InvariantViolation("representation does not recompose")
                    found.append(rep)
    if not found:
        return FinitenessCertificate(FinitenessVerdict.FINITE, cases)
    notes = []
    for rep in found:
        ok, note = confirm_infinitude(rep.pair)
        if ok:
            return FinitenessCertificate(FinitenessVerdict.REPRESENTATION_FOUND, cases, rep, note)
        notes.append(note)
    return FinitenessCertificate(FinitenessVerdict.UNDECIDED, cases, found[0], "; ".join(dict.fromkeys(notes)))


def solution_scan(f: Polynomial, g: Polynomial, box: int, denominator: int = 1) -> list[tuple]:
    """All ``(x, y)`` with ``x = X/λ``, ``y = Y/λ``, ``|X|, |Y| <= box`` and ``f(x) = g(y)``.

    ``λ`` is ``denominator``; the default 1 scans integers.
    """
    if box < 0 or box > MAX_SCAN_BOX:
        raise ValueError(f"box must lie in [0, {MAX_SCAN_BOX}]")
    if denominator < 1:
        raise ValueError("denominator must be positive")

    def point(v):
        q = Fraction(v, denominator)
        return q.numerator if q.denominator == 1 else q

    by_value: dict[Fraction, list] = {}
    for X_ in range(-box, box + 1):
        by_value.setdefault(f(Fraction(X_, denominator)), []).append(point(X_))
    out = []
    for Y in range(-box, box + 1):
        for x in by_value.get(g(Fraction(Y, denominator)), ()):
            out.append((x, point(Y)))
    return sorted(out)
