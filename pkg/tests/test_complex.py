import random
from math import comb

import pytest

from implicitize.complex import assemble_slice, build_v1, build_vp, nu0, syzygy_basis
from implicitize.errors import ComplexPropertyViolated
from implicitize.koszul import koszul_matrix
from implicitize.linalg import LinFormMatrix, QMatrix, generic_rank

from conftest import CONIC, CONIC_TIMES_S, NO_BASE_POINTS, SIX_POINT_CUBIC, param, \
    random_param


def as_text(m):
    return [[e.to_str() for e in row] for row in m.entries()]


def test_syzygy_ranks():
    assert syzygy_basis(param(*CONIC).f, 1, 1).rows == 2
    assert syzygy_basis(param(*CONIC_TIMES_S).f, 2, 2).rows == 1
    assert syzygy_basis(param(*NO_BASE_POINTS).f, 3, 4).rows == comb(4 - 3 + 2, 2)


def test_conic_v1():
    f = param(*CONIC).f
    z1 = build_v1(syzygy_basis(f, 1, 1), 2, 1)
    assert as_text(z1) == [["-y", "-z"], ["x", "y"]]


def test_v1_single_row():
    k = QMatrix([[1] + [0] * 8])
    z1 = build_v1(k, 2, 2)
    assert z1.shape == (3, 1)
    assert as_text(z1) == [["x"], ["0"], ["0"]]
    with pytest.raises(ValueError):
        build_v1(QMatrix([[1, 0]]), 2, 2)


def test_common_factor_curve_matrices():
    sl = assemble_slice(param(*CONIC_TIMES_S).f, 2)
    assert as_text(sl.maps[0]) == [["-y", "-z", "-z", "0"],
                                   ["x", "0", "y", "-z"],
                                   ["0", "x", "0", "y"]]
    # the printed column is (-z, y, 0, -x); ours differs by the unit -1
    assert as_text(sl.maps[1]) == [["z"], ["-y"], ["0"], ["x"]]


def test_printed_cubic_matrix():
    sl = assemble_slice(param(*SIX_POINT_CUBIC).f, 1)
    assert as_text(sl.maps[0]) == [["x", "-z - w", "y + w"],
                                   ["y", "x - 2*y + z - 2*w", "2*y - z"],
                                   ["z", "-x - 2*w", "y + 2*w"]]


def test_vp_with_empty_source():
    f = param(*CONIC).f
    k1 = syzygy_basis(f, 1, 1)
    k2 = syzygy_basis(f, 2, 1)
    z2 = build_vp(k2, k1, 2, 2, 1)
    assert k2.rows == 0 and z2.shape == (2, 0)


def test_assemble_shapes():
    assert assemble_slice(param(*CONIC).f, 1).shapes == [(2, 2), (2, 0)]
    sl = assemble_slice(param(*NO_BASE_POINTS).f, 4)
    assert sl.shapes == [(15, 24), (24, 12), (12, 3)]
    assert sl.ranks == [15, 24, 12, 3]
    # alternating sum of ranks vanishes for an exact slice
    assert 15 - 24 + 12 - 3 == 0
    empty = assemble_slice(param(*CONIC).f, -1)
    assert empty.maps == [] and empty.dim0 == 0


def test_nu0():
    assert nu0(3, 3, 0) == 4
    assert nu0(3, 3, 2) == 2
    assert nu0(3, 3, 3) == 1
    with pytest.raises(ValueError):
        nu0(3, 3, 4)


def test_complex_check_catches_broken_map():
    sl = assemble_slice(param(*CONIC_TIMES_S).f, 2)
    z2 = sl.maps[1]
    layers = [list(map(list, lay)) for lay in z2.layers]
    layers[0][1][0] += 1
    sl.maps[1] = LinFormMatrix(layers)
    with pytest.raises(ComplexPropertyViolated):
        sl.check_complex()


def test_anticommutation_on_koszul_data():
    # u1 v2 + v1 u2 = 0: d_1 applied to the T-contraction of a 2-cycle is the
    # T-contraction of d_2 of it, which vanishes; check through the matrices
    rng = random.Random(3)
    f = random_param(2, 2, rng).f
    nu = 2
    k2 = syzygy_basis(f, 2, nu)
    k1 = syzygy_basis(f, 1, nu)
    z2 = build_vp(k2, k1, 2, 2, nu)
    f1 = koszul_matrix(f, 1, nu).matrix
    for a in range(3):
        image = z2.layer(a).T @ k1
        assert (f1 @ image.T).is_zero()


@pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_random_slices_are_complexes_and_exact(n, d):
    rng = random.Random(100 + 10 * n + d)
    f = random_param(n, d, rng).f
    nu = (n - 1) * (d - 1)
    sl = assemble_slice(f, nu)
    ranks = [generic_rank(m) for m in sl.maps]
    assert ranks[0] == sl.dim0
    dims = [sl.dim0] + [m.cols for m in sl.maps]
    assert sum((-1) ** i * x for i, x in enumerate(dims)) == 0
    if n == 3:
        assert sl.kernels[2].rows == max(comb(nu - d + 2, 2), 0)
