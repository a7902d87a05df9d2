import random
from math import comb

import pytest

from implicitize.arith import ParamPoly
from implicitize.koszul import koszul_exterior_basis, koszul_matrix, monomial_basis
from implicitize.linalg import left_kernel_basis, rank

from conftest import NO_BASE_POINTS, pp, random_param


def test_monomial_basis_examples():
    assert monomial_basis(2, 1).monomials == ((1, 0), (0, 1))
    b = monomial_basis(3, 2)
    assert [ParamPoly.monomial(e).to_str() for e in b] == \
        ["s^2", "s*t", "s*u", "t^2", "t*u", "u^2"]
    assert len(monomial_basis(3, 4)) == 15
    assert len(monomial_basis(3, -1)) == 0


def test_monomial_basis_index_is_inverse():
    b = monomial_basis(4, 3)
    assert len(b) == comb(3 + 3, 3)
    assert all(b.index(e) == i for i, e in enumerate(b))


def test_exterior_basis():
    assert koszul_exterior_basis(4, 1) == [(0,), (1,), (2,), (3,)]
    assert koszul_exterior_basis(4, 2) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert koszul_exterior_basis(4, 4) == [(0, 1, 2, 3)]
    with pytest.raises(ValueError):
        koszul_exterior_basis(3, 4)


def test_conic_first_map():
    f = [pp("s^2"), pp("s*t"), pp("t^2")]
    ks = koszul_matrix(f, 1, 1)
    assert ks.matrix.shape == (4, 6)
    # the left kernel of the transpose (syzygies) is 2-dimensional
    assert left_kernel_basis(ks.matrix.T).rows == 2
    # column of f0 * s lands on the row of s^3
    assert ks.matrix.column(0) == (1, 0, 0, 0)


def test_top_map_vanishes_below_degree():
    f = [pp("s^2"), pp("s*t"), pp("t^2")]
    ks = koszul_matrix(f, 3, 0)
    assert ks.matrix.cols == 1
    assert left_kernel_basis(ks.matrix.T).rows == 0


def test_no_base_points_first_map():
    f = [pp(q, 3) for q in NO_BASE_POINTS]
    ks = koszul_matrix(f, 1, 4)
    assert ks.matrix.shape == (36, 60)
    assert ks.matrix.cols - rank(ks.matrix) == 24


def test_mixed_degrees_rejected():
    with pytest.raises(ValueError):
        koszul_matrix([pp("s"), pp("s*t"), pp("t^2")], 1, 1)


def test_labelings_are_block_major():
    f = [pp("s^2"), pp("s*t"), pp("t^2")]
    ks = koszul_matrix(f, 2, 1)
    assert ks.col_basis[:3] == [(0, 0), (0, 1), (1, 0)]
    assert len(ks.row_basis) == ks.matrix.rows


@pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2), (4, 1)])
def test_chain_property_and_dimensions(n, d):
    rng = random.Random(n * 10 + d)
    f = random_param(n, d, rng).f
    for nu in range(0, 3):
        for p in range(1, n + 1):
            a = koszul_matrix(f, p, nu + d)
            b = koszul_matrix(f, p + 1, nu)
            assert a.matrix.shape == (comb(n + 1, p - 1) * comb(nu + 2 * d + n - 1, n - 1),
                                      comb(n + 1, p) * comb(nu + d + n - 1, n - 1))
            assert (a.matrix @ b.matrix).is_zero()


def test_regular_sequence_has_only_koszul_syzygies():
    # s^2, t^2, u^2 plus a fourth form: in degree < d the only syzygies are Koszul ones,
    # and for a regular sequence of three there are none from the first three alone
    f = [pp("s^2", 3), pp("t^2", 3), pp("u^2", 3)]
    for nu in range(2):
        ks = koszul_matrix(f, 1, nu)
        assert ks.matrix.cols - rank(ks.matrix) == 0
    ks = koszul_matrix(f, 1, 2)
    # trivial syzygies f_j e_i - f_i e_j: one per pair
    assert ks.matrix.cols - rank(ks.matrix) == 3
