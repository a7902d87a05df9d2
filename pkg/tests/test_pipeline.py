import random

import pytest

from implicitize.errors import DegenerateMap, NotGenericallyExact
from implicitize.linalg import generic_rank
from implicitize.pipeline import Parameterization, degree_drop, expected_degree, \
    implicitize, matrix_representation, membership_test, verify_by_substitution

from conftest import CONIC, CONIC_TIMES_S, DEGREE_NINE, FAT_POINT, MOVING_QUADRICS, \
    NO_BASE_POINTS, SIX_POINT_CUBIC, param, pp, random_param, tp


def test_parameterization_validation():
    with pytest.raises(ValueError):
        param("s^2", "s*t")
    with pytest.raises(ValueError):
        param("s^2", "s*t", "t")
    with pytest.raises(ValueError):
        param("0", "0", "0")
    p = Parameterization.from_strings(["s^2", "s*t", "t^2"])
    assert p.n == 2 and p.d == 2


def test_conic():
    r = implicitize(param(*CONIC))
    assert r.determinant == tp("x*z - y^2", 3)
    assert r.verified and r.matrix_rep.shape == (2, 2)


def test_degenerate_curve():
    with pytest.raises(DegenerateMap):
        implicitize(param("s^2", "2*s^2", "-s^2"))


def test_common_factor_warns():
    r = implicitize(param(*CONIC_TIMES_S))
    assert r.gcd == pp("s")
    assert r.warnings


def test_moving_quadrics_low_nu():
    r = implicitize(param(*MOVING_QUADRICS), nu=2, indeg_sat=2)
    assert r.determinant == tp("x*y*z + x*y*w - z*w^2")
    assert r.delta_sizes == [6, 3]
    assert not r.warnings


def test_fat_point():
    r = implicitize(param(*FAT_POINT), nu=2, multiplicities=[4], base_point_degrees=[3])
    assert r.matrix_rep.shape == (6, 6)
    assert r.degree == 6 and r.verified
    assert r.bookkeeping == {"expected_degree": 6, "implicit_degree": 5,
                             "generically_finite": True, "extraneous_degree": 1}


def test_nu_below_bound_warns_and_can_fail():
    with pytest.raises(NotGenericallyExact):
        implicitize(param(*NO_BASE_POINTS), nu=3)
    r = implicitize(param(*MOVING_QUADRICS), nu=3)
    assert any("below" in w for w in r.warnings)


def test_verify_by_substitution():
    assert verify_by_substitution(tp("x*z - y^2", 3), param(*CONIC))
    assert not verify_by_substitution(tp("x", 3), param(*CONIC))
    assert verify_by_substitution(tp(DEGREE_NINE), param(*NO_BASE_POINTS))


def test_expected_degree_and_drop():
    assert expected_degree(3, 3, []) == 9
    assert expected_degree(3, 3, [1] * 6) == 3
    assert expected_degree(3, 3, [3]) == 6
    with pytest.raises(ValueError):
        expected_degree(3, 2, [5])
    assert degree_drop(3, 3, [1] * 6).degree == 3
    assert degree_drop(3, 3, [4]) == (5, True)
    assert degree_drop(3, 2, [4]) == (0, False)
    with pytest.raises(ValueError):
        degree_drop(3, 2, [5])


def test_membership_on_cubic():
    p = param(*SIX_POINT_CUBIC)
    z1, _ = matrix_representation(p, 1)
    r = implicitize(p, nu=1)
    full = generic_rank(z1)
    on = p.evaluate([1, 0, 0])
    assert membership_test(z1, on, full)
    assert r.determinant.evaluate(on) == 0
    # (1:0:0:0) lies on the cubic: D has no x^3 term
    assert r.determinant.evaluate([1, 0, 0, 0]) == 0
    assert membership_test(z1, [1, 0, 0, 0], full)
    assert r.determinant.evaluate([0, 0, 1, 0]) != 0
    assert not membership_test(z1, [0, 0, 1, 0], full)
    with pytest.raises(ValueError):
        membership_test(z1, [0, 0, 0, 0], full)


def test_membership_agrees_with_equation():
    p = param(*MOVING_QUADRICS)
    r = implicitize(p, nu=2, indeg_sat=2)
    rng = random.Random(9)
    full = generic_rank(r.matrix_rep)
    for _ in range(20):
        pt = [rng.randint(-4, 4) for _ in range(4)]
        if not any(pt):
            continue
        assert membership_test(r.matrix_rep, pt, full) == (r.determinant.evaluate(pt) == 0)


def test_random_base_point_free_quadrics():
    rng = random.Random(12)
    for _ in range(3):
        r = implicitize(random_param(3, 2, rng))
        assert r.degree == 4 and r.verified


def test_nu_robust():
    rng = random.Random(13)
    p = random_param(2, 3, rng)
    a = implicitize(p)
    b = implicitize(p, nu=a.nu_used + 1)
    assert a.determinant == b.determinant
