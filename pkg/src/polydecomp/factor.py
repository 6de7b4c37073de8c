"""Irreducibility over Q.

A fast modular screen proves irreducibility for most inputs: for each good
prime the distinct-degree factorization mod p limits which degrees a rational
factor could have, and once no proper degree survives every prime the
polynomial is irreducible.  Inconclusive screens fall back to a full
factorization with sympy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial

_PRIMES = [p for p in range(3, 400) if all(p % q for q in range(2, int(p**0.5) + 1))]


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_poly(a, f, p):
    a = [c % p for c in a]
    _trim(a)
    df = len(f) - 1
    inv = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv % p
        shift = len(a) - 1 - df
        for j in range(df + 1):
            a[shift + j] = (a[shift + j] - c * f[j]) % p
        _trim(a)
    return a


def _mul_mod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _mod_poly(out, f, p)


def _pow_mod(base, e, f, p):
    result = [1]
    while e:
        if e & 1:
            result = _mul_mod(result, base, f, p)
        e >>= 1
        if e:
            base = _mul_mod(base, base, f, p)
    return result


def _gcd_mod(a, b, p):
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _mod_poly(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _div_mod(a, b, p):
    a = [c % p for c in a]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return q


def _deriv(a):
    return [i * c for i, c in enumerate(a)][1:]


def distinct_degree_pattern(coeffs: list[int], p: int):
    """Degrees of the irreducible factors of a squarefree ``coeffs`` mod ``p``."""
    f = _trim([c % p for c in coeffs])
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    degrees = []
    x = [0, 1]
    h = x
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = _pow_mod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _gcd_mod(f, _trim(diff), p)
        dg = len(g) - 1
        if dg > 0:
            degrees.extend([i] * (dg // i))
            f = _div_mod(f, g, p)
            h = _mod_poly(h, f, p)
    if len(f) - 1 > 0:
        degrees.append(len(f) - 1)
    return degrees


def _subset_sums(degrees):
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


@dataclass(frozen=True)
class IrreducibilityResult:
    irreducible: bool
    method: str
    primes: tuple[int, ...] = ()


def irreducibility(f: Polynomial, max_primes: int = 20) -> IrreducibilityResult:
    """Decide irreducibility of ``f`` over Q, recording how it was decided."""
    n = f.degree
    if n is None or n < 1:
        raise ValueError("irreducibility needs a nonconstant polynomial")
    if n == 1:
        return IrreducibilityResult(True, "linear")
    if f[0] == 0:
        return IrreducibilityResult(False, "divisible by x")
    _, prim = f.primitive_integer()
    coeffs = prim.integer_coeffs()
    from .poly import poly_gcd

    if poly_gcd(f, f.derivative()).degree > 0:
        return IrreducibilityResult(False, "not squarefree")
    possible = set(range(1, n))
    used = []
    for p in _PRIMES:
        if coeffs[-1] % p == 0:
            continue
        cp = [c % p for c in coeffs]
        if len(_gcd_mod(cp, _deriv(cp), p)) > 1:
            continue
        pattern = distinct_degree_pattern(coeffs, p)
        used.append(p)
        possible &= _subset_sums(pattern)
        if not possible:
            return IrreducibilityResult(True, "modular degree screen", tuple(used))
        if len(used) >= max_primes:
            break
    return IrreducibilityResult(_sympy_irreducible(coeffs), "sympy factor_list", tuple(used))


def _sympy_irreducible(coeffs: list[int]) -> bool:
    import sympy

    x = sympy.Symbol("x")
    expr = sum(c * x**i for i, c in enumerate(coeffs))
    _, factors = sympy.factor_list(expr, x)
    return len(factors) == 1 and factors[0][1] == 1


def is_irreducible(f: Polynomial) -> bool:
    return irreducibility(f).irreducible
