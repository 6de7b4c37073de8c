import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import rand_poly, sylvester_resultant, to_sympy
from polydecomp.poly import (
    X,
    LinearPoly,
    Polynomial,
    affine_substitute,
    compose,
    critical_value_resultant,
    h_adic_expansion,
    outer_from_digits,
    poly_gcd,
    rational_nth_root,
    RealRootCount,
    real_root_count,
    resultant,
    squarefree_decomposition,
)
from polydecomp.diophantine import build_H

P = Polynomial
F = Fraction

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions, min_size=1, max_size=7).map(Polynomial)
nonconst = polys.filter(lambda p: p.degree is not None and p.degree >= 1)


class TestBasics:
    def test_zero_is_distinguished(self):
        z = P()
        assert z.is_zero and z.degree is None
        assert P([0, 0]) == z
        assert P([5]).degree == 0 and not P([5]).is_zero

    def test_trailing_zeros_trimmed(self):
        assert P([1, 2, 0, 0]).coeffs == (F(1), F(2))

    def test_arithmetic(self):
        p = X**2 + 1
        assert p * p == X**4 + 2 * X**2 + 1
        q, r = divmod(X**3 + 1, X + 1)
        assert q == X**2 - X + 1 and r.is_zero
        assert (X**2 - 1) // (X - 1) == X + 1

    def test_evaluation_and_derivative(self):
        p = X**3 - 2 * X + F(1, 2)
        assert p(2) == F(9, 2)
        assert p.derivative() == 3 * X**2 - 2

    def test_gcd_is_monic(self):
        g = poly_gcd(2 * (X - 1) * (X + 3), 6 * (X - 1) * (X - 2))
        assert g == X - 1

    def test_primitive_integer(self):
        c, q = P([F(1, 2), F(3, 4)]).primitive_integer()
        assert c * q == P([F(1, 2), F(3, 4)])
        assert q.integer_coeffs() == [2, 3]


class TestCompose:
    def test_examples(self):
        assert compose(X**2, X**2 + X) == X**4 + 2 * X**3 + X**2
        f = X**5 - 3 * X + 7
        assert compose(f, X) == f

    @settings(max_examples=60, deadline=None)
    @given(polys, polys, polys)
    def test_associative(self, a, b, c):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @settings(max_examples=60, deadline=None)
    @given(polys, polys)
    def test_matches_sympy(self, a, b):
        expected = sp.Poly(to_sympy(a).as_expr().subs(sp.Symbol("x"), to_sympy(b).as_expr()), sp.Symbol("x"), domain="QQ")
        assert to_sympy(compose(a, b)) == expected


class TestAffine:
    def test_examples(self):
        assert affine_substitute(X**2, LinearPoly(2, 1)) == 4 * X**2 + 4 * X + 1
        f = X**3 + X
        assert affine_substitute(f, LinearPoly.identity()) == f

    def test_H4(self):
        expected = P([1, F(-5, 12), F(11, 24), F(-1, 12), F(1, 24)])
        assert affine_substitute(build_H(4), LinearPoly(1, 0)) == expected

    def test_linear_inverse(self):
        ell = LinearPoly(F(3, 2), -4)
        assert ell.invert().invert() == ell
        assert ell(ell.invert().as_polynomial()) == X

    def test_zero_slope_rejected(self):
        with pytest.raises(ValueError):
            LinearPoly(0, 1)


class TestHAdic:
    def test_square(self):
        digits = h_adic_expansion(X**4 + 2 * X**3 + X**2, X**2 + X)
        assert digits == [P(), P(), P([1])]

    def test_obstruction(self):
        digits = h_adic_expansion(X**3 + 1, X**2)
        assert digits[0] == P([1]) and digits[1] == X

    def test_identity(self):
        h = X**3 - X
        assert h_adic_expansion(h, h) == [P(), P([1])]

    @settings(max_examples=80, deadline=None)
    @given(polys, nonconst)
    def test_reassembly(self, f, h):
        digits = h_adic_expansion(f, h)
        assert all(d.is_zero or d.degree < h.degree for d in digits)
        total = P()
        power = P([1])
        for d in digits:
            total = total + d * power
            power = power * h
        assert total == f

    def test_outer_from_digits(self):
        g = X**3 - 2 * X + 5
        h = X**2 + X
        assert outer_from_digits(h_adic_expansion(compose(g, h), h)) == g


class TestResultant:
    def test_gamma_examples(self):
        assert critical_value_resultant(X**3) == 27 * X**2
        assert critical_value_resultant(X**2) == -4 * X  # lc(2x)^2 * (0 - gamma)

    def test_constant(self):
        assert resultant(X - 1, X + 1) == 2

    def test_both_zero(self):
        with pytest.raises(ValueError):
            resultant(P(), P())

    def test_against_sylvester(self):
        rng = random.Random(11)
        for _ in range(150):
            a = rand_poly(rng, rng.randint(1, 6))
            b = rand_poly(rng, rng.randint(1, 6))
            assert resultant(a, b) == sylvester_resultant(a, b)

    def test_gamma_against_sympy(self):
        rng = random.Random(5)
        x, g = sp.symbols("x gamma")
        for _ in range(25):
            f = rand_poly(rng, rng.randint(2, 7), bound=5)
            fs = to_sympy(f).as_expr()
            expected = sp.Poly(sp.resultant(sp.diff(fs, x), fs - g, x), g)
            got = critical_value_resultant(f)
            assert [F(int(c.p), int(c.q)) for c in reversed(expected.all_coeffs())] == list(got.coeffs)

    def test_multiplicity_is_delta(self):
        rng = random.Random(8)
        for _ in range(40):
            roots = [F(rng.randint(-4, 4)) for _ in range(rng.randint(1, 4))]
            df = P([rng.randint(1, 3)])
            for r in roots:
                df = df * (X - r)
            f = P([0] + [c / (i + 1) for i, c in enumerate(df.coeffs)])
            R = critical_value_resultant(f)
            for r in set(roots):
                g0 = f(r)
                mult = 0
                q = R
                while q(g0) == 0:
                    q = q // (X - g0)
                    mult += 1
                assert mult == poly_gcd(f - g0, f.derivative()).degree


class TestSquarefree:
    def test_examples(self):
        assert squarefree_decomposition(27 * X**2) == [(X, 2)]
        assert squarefree_decomposition((X - 1) ** 2 * (X + 2)) == [(X + 2, 1), (X - 1, 2)]
        assert squarefree_decomposition(X**2 - 1) == [(X**2 - 1, 1)]

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            squarefree_decomposition(P([3]))

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.tuples(st.integers(-5, 5), st.integers(1, 4)), min_size=1, max_size=4), fractions.filter(bool))
    def test_against_sympy(self, factors, lc):
        p = P([lc])
        for r, e in factors:
            p = p * (X - r) ** e
        ours = squarefree_decomposition(p)
        prod = P([p.lc])
        for fac, e in ours:
            prod = prod * fac**e
        assert prod == p
        _, theirs = sp.sqf_list(to_sympy(p))
        assert sorted((e, to_sympy(fac).monic()) for fac, e in ours) == sorted(
            (e, fac.monic()) for fac, e in theirs
        )


class TestRealRoots:
    def test_examples(self):
        assert real_root_count(X * (X + 1) * (X + 2)) == RealRootCount(3, True)
        assert real_root_count(X**2 + 1).count == 0
        c = real_root_count((X - 1) ** 2)
        assert c.count == 1 and not c.simple

    def test_interval(self):
        p = (X - 1) * (X - 2) * (X + 5)
        assert real_root_count(p, (0, 3)).count == 2
        assert real_root_count(p, (None, 0)).count == 1

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            real_root_count(P())

    def test_against_grid(self):
        rng = random.Random(3)
        for _ in range(60):
            roots = [F(rng.randint(-12, 12), 2) for _ in range(rng.randint(1, 6))]
            p = P([1])
            for r in roots:
                p = p * (X - r)
            if rng.random() < 0.5:
                p = p * (X**2 + rng.randint(1, 5))
            grid = [F(k, 4) for k in range(-30, 31)]
            vals = [p(t) for t in grid]
            sign_count = sum(1 for u, v in zip(vals, vals[1:]) if u * v < 0) + sum(1 for v in vals if v == 0)
            assert real_root_count(p).count == len(set(roots)) == sign_count

    def test_against_sympy(self):
        rng = random.Random(4)
        for _ in range(40):
            p = rand_poly(rng, rng.randint(1, 8), bound=6)
            assert real_root_count(p).count == len(set(sp.real_roots(to_sympy(p))))


def test_rational_nth_root():
    assert rational_nth_root(F(8, 27), 3) == F(2, 3)
    assert rational_nth_root(F(-8), 3) == -2
    assert rational_nth_root(F(9, 4), 2) == F(3, 2)
    assert rational_nth_root(F(2), 2) is None
    assert rational_nth_root(F(-4), 2) is None
    assert rational_nth_root(F(1, 24), 3) is None
