from fractions import Fraction

import pytest

from polydecomp.criteria import PhiClass, fried1_phi_classifier
from polydecomp.decompose import decompose_once
from polydecomp.dickson import dickson
from polydecomp.monodromy import MonodromyError, branch_points, monodromy
from polydecomp.parse import parse
from polydecomp.poly import X


@pytest.mark.parametrize("n", range(2, 9))
def test_pure_power_is_cyclic(n):
    rep = monodromy(X**n)
    assert len(rep.branch_points) == 1 and abs(rep.branch_points[0]) < 1e-12
    assert rep.loop_permutations[0].is_full_cycle()
    assert rep.group.order == n
    assert rep.product_relation_holds


def test_chebyshev_cubic_is_symmetric():
    rep = monodromy(X**3 - 3 * X)
    assert sorted(b.real for b in rep.branch_points) == pytest.approx([-2, 2])
    assert rep.group.order == 6 and rep.doubly_transitive


def test_x_cubed_plus_x():
    rep = monodromy(X**3 + X)
    assert rep.group.order == 6 and rep.doubly_transitive and rep.primitive


def test_odd_prime_dickson_is_dihedral():
    rep = monodromy(dickson(5, 1))
    assert rep.group.order == 10
    assert rep.primitive and not rep.doubly_transitive
    assert fried1_phi_classifier(dickson(5, 1)) is PhiClass.PHI_REDUCIBLE


@pytest.mark.parametrize(
    "text",
    ["x^4 + x^3 + 1", "x^6 + x^2 + 1", "x^4 + 2x^3 + x^2", "x^6 + x + 1", "2x^5 - 3x^2 + x - 7", "x^8 + x^4 + x"],
)
def test_structural_invariants(text):
    f = parse(text)
    rep = monodromy(f)
    assert rep.transitive
    assert rep.infinity_permutation.is_full_cycle()
    assert rep.product_relation_holds
    assert rep.primitive == (decompose_once(f) == [])
    assert len(rep.block_systems) == len(decompose_once(f))


def test_deterministic():
    f = parse("x^6 + 3x^4 - x + 2")
    a, b = monodromy(f, seed=7), monodromy(f, seed=7)
    assert a.as_payload() == b.as_payload()


def test_seed_changes_labels_not_group():
    f = parse("x^5 + x^2 + 1")
    assert monodromy(f, seed=1).group.order == monodromy(f, seed=2).group.order == 120


def test_branch_points_are_critical_values():
    f = parse("x^4 - 2x^2")
    bps, _ = branch_points(f)
    assert sorted(b.real for b in bps) == pytest.approx([-1, 0])


def test_close_branch_points_raise_precision():
    eps = Fraction(1, 10**6)
    with pytest.raises(MonodromyError) as info:
        monodromy(X**3 - 3 * eps**2 * X)
    assert info.value.code == "PRECISION"


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        monodromy(X + 1)
    with pytest.raises(ValueError):
        monodromy(X**2, tolerance=0)
