"""Acceptance criteria 1-11.

Each test appends one ``PASS``/``FAIL`` line to ``RESULTS``; the conftest hook
prints them after the run.  ``python tests/test_acceptance.py`` runs the same
checks without pytest.
"""

import functools
import itertools
import random
import sys
import time
from fractions import Fraction
from math import factorial
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import rand_poly, rand_rational  # noqa: E402
from polydecomp.criteria import (  # noqa: E402
    PhiClass,
    Verdict,
    criterion_outer_degree,
    criterion_subleading,
    delta_report,
    derivative_irreducible_criterion,
    fried1_phi_classifier,
    indecomposability_report,
)
from polydecomp.decompose import Decomposition, complete_decompositions, decompose_once, equivalent  # noqa: E402
from polydecomp.dickson import dickson, dickson_closed_form, verify_functional_equation  # noqa: E402
from polydecomp.diophantine import (  # noqa: E402
    FinitenessVerdict,
    H_coefficients,
    R_coefficients,
    build_H,
    build_R,
    erdos_selfridge_scan,
    finiteness,
    solution_scan,
)
from polydecomp.lacunary import (  # noqa: E402
    ConditionNotMet,
    has_non_power_inner,
    hajos_check,
    quadrinomial_decompositions,
    trinomial_decompositions,
    zannier_bound_check,
)
from polydecomp.monodromy import monodromy  # noqa: E402
from polydecomp.poly import X, LinearPoly, Polynomial, affine_substitute, compose  # noqa: E402

F = Fraction
RESULTS: list[tuple[int, str]] = []


def criterion(number: int, title: str):
    """Record PASS/FAIL for the wrapped check; the body returns a detail string."""

    def wrap(fn):
        @functools.wraps(fn)
        def run():
            t0 = time.perf_counter()
            try:
                detail = fn()
            except Exception as exc:
                RESULTS.append((number, f"FAIL  [{number:2d}] {title}: {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"))
                raise
            secs = time.perf_counter() - t0
            RESULTS.append((number, f"PASS  [{number:2d}] {title}: {detail} ({secs:.1f}s)"))

        return run

    return wrap


def _violations(found: list, limit: int = 5) -> str:
    return "; ".join(found[:limit])


@criterion(1, "decomposition round trip")
def test_round_trip():
    rng = random.Random(101)
    t0 = time.perf_counter()
    bad = []
    for i in range(500):
        g, h = rand_poly(rng, rng.randint(2, 6)), rand_poly(rng, rng.randint(2, 6))
        f = compose(g, h)
        hits = [p for p in decompose_once(f) if p.k == h.degree]
        if not any(equivalent(Decomposition((p.g, p.h)), Decomposition((g, h))) for p in hits):
            bad.append(f"#{i}: g={g} h={h}")
    elapsed = time.perf_counter() - t0
    assert not bad, _violations(bad)
    assert elapsed <= 300, f"took {elapsed:.0f}s"
    return "500/500 recovered"


@criterion(2, "Ritt first theorem invariants")
def test_ritt_first():
    rng = random.Random(202)
    bad = []
    for i in range(200):
        parts = [rand_poly(rng, rng.choice([2, 2, 3]), bound=5) for _ in range(3)]
        f = compose(parts[0], compose(parts[1], parts[2]))
        chains = complete_decompositions(f)
        lengths = {len(c) for c in chains}
        multisets = {tuple(sorted(c.degrees)) for c in chains}
        if lengths != {3} or len(multisets) != 1 or any(c.composed() != f for c in chains):
            bad.append(f"#{i}: lengths {lengths}, degree multisets {multisets}")
    assert not bad, _violations(bad)
    return "200/200 composites, all chains of length 3 with one degree multiset"


@criterion(3, "Dickson suite")
def test_dickson_suite():
    t0 = time.perf_counter()
    for m in range(0, 41):
        for a in range(-3, 4):
            assert dickson(m, a) == dickson_closed_form(m, a), (m, a)
    for m in range(0, 21):
        for a in (-2, -1, 1, 2, 3):
            assert verify_functional_equation(m, a), (m, a)
    for m, n in itertools.product(range(1, 9), repeat=2):
        for a in (-2, -1, 1, 2, 3):
            assert compose(dickson(m, F(a) ** n), dickson(n, a)) == dickson(m * n, a), (m, n, a)
    elapsed = time.perf_counter() - t0
    assert elapsed <= 30, f"took {elapsed:.0f}s"
    return "recurrence, Laurent identity and composition law exact"


def _sweep_sample(total: int = 10_000) -> list[Polynomial]:
    """All monic quartics in the box, every decomposable monic sextic, then random sextics."""
    box = range(-3, 4)
    out = {Polynomial([c0, c1, c2, c3, 1]) for c0, c1, c2, c3 in itertools.product(box, repeat=4)}
    wide = range(-6, 7)
    for p, q, b, c in itertools.product(wide, repeat=4):
        for f in (compose(X**2 + b * X + c, X**3 + p * X**2 + q * X), compose(X**3 + b * X**2 + q * X + c, X**2 + p * X)):
            if all(-3 <= v <= 3 for v in f.coeffs):
                out.add(f)
    rng = random.Random(404)
    while len(out) < total:
        out.add(Polynomial([rng.randint(-3, 3) for _ in range(6)] + [1]))
    return sorted(out, key=lambda p: (p.degree, p.coeffs))


@criterion(4, "criterion soundness sweep")
def test_criterion_soundness():
    sample = _sweep_sample()
    bad = []
    n_dec = 0
    for f in sample:
        pairs = decompose_once(f)
        dec = bool(pairs)
        n_dec += dec
        rep = delta_report(f)
        outer = criterion_outer_degree(f)
        if dec and criterion_subleading(f):
            bad.append(f"subleading fired on {f}")
        if dec and derivative_irreducible_criterion(f):
            bad.append(f"derivative fired on {f}")
        if dec and rep.delta_max <= 1:
            bad.append(f"delta_max {rep.delta_max} on {f}")
        if dec and fried1_phi_classifier(f) is PhiClass.PHI_IRREDUCIBLE:
            bad.append(f"Fried PHI_IRREDUCIBLE on {f}")
        for p in pairs:
            if p.k > rep.delta_max:
                bad.append(f"inner degree {p.k} > delta_max {rep.delta_max} on {f}")
            if p.g.degree not in outer:
                bad.append(f"outer degree {p.g.degree} not in {sorted(outer)} on {f}")
        verdict = indecomposability_report(f).verdict
        if verdict is not (Verdict.DECOMPOSABLE if dec else Verdict.INDECOMPOSABLE):
            bad.append(f"report {verdict.value} on {f}")
    assert len(sample) == 10_000
    assert not bad, _violations(bad)
    return f"{len(sample)} polynomials ({n_dec} decomposable), 0 violations"


@criterion(5, "trinomial and quadrinomial structure")
def test_lacunary_structure():
    rng = random.Random(505)
    tri = quad = 0
    for _ in range(300):
        k = rng.choice([1, 1, 2, 3, 4, 5])
        n1 = rng.randint(2, 30 // k) * k
        n2 = rng.randint(1, n1 // k - 1) * k if n1 // k > 1 else rng.randint(1, n1 - 1)
        f = Polynomial.from_terms([(n1, rand_rational(rng, nonzero=True)), (n2, rand_rational(rng, nonzero=True)), (0, rand_rational(rng, nonzero=True))])
        pairs = trinomial_decompositions(f, check=False)
        assert {(p.g, p.h) for p in pairs} == {(p.g, p.h) for p in decompose_once(f)}, f
        tri += 1
    while quad < 150:
        k = rng.choice([1, 2, 3, 4, 5, 6])
        top = 30 // k
        if top < 3:
            continue
        e1, e2, e3 = sorted(rng.sample(range(1, top + 1), 3), reverse=True)
        if e1 + e3 <= 2 * e2:
            continue
        f = Polynomial.from_terms([(e * k, rand_rational(rng, nonzero=True)) for e in (e1, e2, e3)] + [(0, rand_rational(rng, nonzero=True))])
        pairs = quadrinomial_decompositions(f, check=False)
        assert {(p.g, p.h) for p in pairs} == {(p.g, p.h) for p in decompose_once(f)}, f
        quad += 1
    boundary = X**4 + 2 * X**3 + X**2 + 1
    try:
        quadrinomial_decompositions(boundary)
        raise AssertionError("boundary fixture unexpectedly met the exponent condition")
    except ConditionNotMet:
        pass
    assert has_non_power_inner(boundary)
    assert [(p.g, p.h) for p in decompose_once(boundary)] == [(X**2 + 1, X**2 + X)]
    return f"{tri} trinomials, {quad} quadrinomials, boundary fixture ok"


@criterion(6, "Zannier and Hajos properties")
def test_zannier_hajos():
    rng = random.Random(606)
    z = 0
    while z < 500:
        g, h = rand_poly(rng, rng.randint(1, 6), bound=5), rand_poly(rng, rng.randint(1, 6), bound=5)
        if h.nonconstant_term_count() <= 1:
            continue
        assert zannier_bound_check(g, h).holds, (g, h)
        z += 1
    for _ in range(500):
        p = Polynomial([rand_rational(rng, nonzero=True)])
        for _ in range(rng.randint(1, 4)):
            p = p * (X - rand_rational(rng)) ** rng.randint(1, 6)
        assert hajos_check(p).holds, p
    return "500 + 500 cases, 0 violations"


TACTICS = {
    1: {"pure power"},
    2: {"degree"},
    3: {"dickson shape", "gcd", "shared constant"},
    4: {"dickson shape", "gcd"},
    5: {"degree", "derivative roots"},
}


@criterion(7, "hyperplane theorem at desk scale")
def test_hyperplanes():
    found = {}
    for m, n in itertools.product((4, 5, 6), (3, 4, 5)):
        f, g = build_H(m), build_R(n)
        cert = finiteness(f, g)
        assert cert.verdict is FinitenessVerdict.FINITE, (m, n, cert.verdict)
        first = cert.cases[0]
        assert (first.k, first.tactic, first.outcome) == (1, "PHI_DEGREE", "ADMITTED"), (m, n)
        assert first.lhs == str(F(1, factorial(m))), (m, n, first.lhs)
        assert first.detail["admissible_k"] == [1]
        for kind in range(1, 6):
            for switched in (False, True):
                recs = [c for c in cert.cases if c.k == 1 and c.kind == kind and c.switched == switched]
                assert recs and all(c.outcome == "ELIMINATED" for c in recs), (m, n, kind, switched)
                assert {c.tactic for c in recs} <= TACTICS[kind], (m, n, kind, [c.tactic for c in recs])
        sols = solution_scan(f, g, 2000)
        assert all(f(x) == g(y) for x, y in sols)
        found[(m, n)] = sols
    cert = finiteness(build_H(23), build_R(3))
    assert cert.verdict is FinitenessVerdict.FINITE
    rec = [c for c in cert.cases if c.kind == 1 and not c.switched]
    assert rec and rec[0].identity == "c_20 = 0" and rec[0].lhs == str(F(1, factorial(20)))
    assert rec[0].detail["a_0"] == "10"
    listed = ", ".join(f"{k}: {v}" for k, v in found.items() if v)
    return f"9/9 FINITE, c_20 record ok; integer solutions in box 2000: {listed}"


@criterion(8, "positive control x^2 = 2y^2 + 1")
def test_pell_control():
    f, g = X**2, 2 * X**2 + 1
    cert = finiteness(f, g)
    assert cert.verdict is FinitenessVerdict.REPRESENTATION_FOUND, cert.verdict
    assert cert.witness.pair.kind == 2 and cert.witness.verify(f, g)
    assert cert.residual_note.startswith("Pell")
    sols = set(solution_scan(f, g, 100))
    assert {(3, 2), (17, 12), (99, 70)} <= sols
    return f"kind 2 with Pell confirmation, {len(sols)} integer solutions in box 100"


@criterion(9, "coefficient formula lock")
def test_coefficient_lock():
    rng = random.Random(909)
    checked = 0
    for m in (5, 6):
        for _ in range(12):
            a1, a0 = rand_rational(rng, nonzero=True), rand_rational(rng)
            expanded = affine_substitute(build_H(m), LinearPoly(a1, a0))
            for i, v in H_coefficients(m, a1, a0).items():
                assert expanded[i] == v, (m, a1, a0, i)
                checked += 1
    for n in (3, 4, 5):
        for _ in range(12):
            b1, b0 = rand_rational(rng, nonzero=True), rand_rational(rng)
            expanded = affine_substitute(build_R(n), LinearPoly(b1, b0))
            for i, v in R_coefficients(n, b1, b0).items():
                assert expanded[i] == v, (n, b1, b0, i)
                checked += 1
    return f"{checked} coefficients exact"


def monodromy_suite() -> list[Polynomial]:
    composites = [
        compose(X**2 + 1, X**2 + X),
        compose(X**2 + X, X**3 + X),
        compose(X**3 + X, X**2 + 1),
        compose(X**2 - 3, X**4 + X),
        compose(X**4 + X, X**2 + 2 * X),
        compose(X**2 + X + 1, X**3 - X**2 + 2 * X),
        compose(X**2 + 1, compose(X**2, X**2 + X)),
        compose(2 * X**2 - X, F(1, 2) * X**3 + X + 1),
    ]
    dicksons = [
        dickson(4, 1),
        dickson(5, 1),
        dickson(6, 2),
        dickson(7, -1),
        dickson(8, 1),
        3 * affine_substitute(dickson(5, 2), LinearPoly(1, F(1, 2))) - 7,
        dickson(6, -1),
    ]
    powers = [X**n for n in range(4, 9)]
    rng = random.Random(1010)
    randoms = []
    while len(randoms) < 10:
        f = rand_poly(rng, 4 + len(randoms) % 5, bound=5, integer=True)
        if not decompose_once(f):
            randoms.append(f)
    return composites + dicksons + powers + randoms


@criterion(10, "monodromy cross-validation")
def test_monodromy_cross_validation():
    t0 = time.perf_counter()
    suite = monodromy_suite()
    assert len(suite) == 30 and all(4 <= f.degree <= 8 for f in suite)
    tallies = dict.fromkeys(("cycle", "product", "primitive", "doubly", "blocks"), 0)
    for f in suite:
        rep = monodromy(f)
        pairs = decompose_once(f)
        tallies["cycle"] += rep.infinity_permutation.is_full_cycle()
        tallies["product"] += rep.product_relation_holds
        tallies["primitive"] += rep.primitive == (not pairs)
        tallies["doubly"] += rep.doubly_transitive == (fried1_phi_classifier(f) is PhiClass.PHI_IRREDUCIBLE)
        tallies["blocks"] += len(rep.block_systems) == len(pairs)
    elapsed = time.perf_counter() - t0
    assert all(v == 30 for v in tallies.values()), tallies
    assert elapsed <= 600, f"took {elapsed:.0f}s"
    return "30/30 on n-cycle, product relation, primitivity, 2-transitivity and block counts"


@criterion(11, "Erdos-Selfridge scan")
def test_erdos_selfridge():
    t0 = time.perf_counter()
    hits = erdos_selfridge_scan(200, 10, 5)
    elapsed = time.perf_counter() - t0
    assert hits == [], hits
    assert elapsed <= 10, f"took {elapsed:.1f}s"
    return "no perfect powers among products of consecutive integers"


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        try:
            t()
        except Exception:
            pass
    for _, line in sorted(RESULTS):
        print(line)
    sys.exit(0 if all(line.startswith("PASS") for _, line in RESULTS) else 1)
