"""Graded slices of the approximation complex of cycles.

``K_p`` holds a basis of the Koszul cycles Z_p in coefficient degree nu
(one row per cycle, block-major coordinates). ``Z_p`` is the matrix of the
map induced by the Koszul differential in the target variables, written in
the bases K_p (source) and K_{p-1} (target), with K_0 the identity.
"""

from fractions import Fraction
from math import comb

from .errors import ComplexPropertyViolated, Inconsistent
from .koszul import boundary_terms, common_degree, dim_forms, koszul_exterior_basis, \
    koszul_matrix
from .linalg import LinFormMatrix, nullspace_basis


def syzygy_basis(f, p, nu):
    """Rows spanning the degree-nu cycles of the p-th Koszul differential."""
    return nullspace_basis(koszul_matrix(f, p, nu).matrix)


def build_v1(k1, n, nu):
    """Z_1(i, j) = sum_a T_{a+1} * K_1(j, i + a*m), m = dim A_nu."""
    m = dim_forms(n, nu)
    if k1.cols != (n + 1) * m:
        raise ValueError(f"K_1 has {k1.cols} columns, expected {(n + 1) * m}")
    layers = [[tuple(k1.data[j][i + a * m] for j in range(k1.rows)) for i in range(m)]
              for a in range(n + 1)]
    return LinFormMatrix._raw(layers, m, k1.rows)


class _RowSpaceSolver:
    """Coordinates in a basis given in reduced row echelon form."""

    def __init__(self, basis):
        self.basis = basis
        self.pivots = basis.rref_pivots()
        if self.pivots is None:
            raise ValueError("basis must be in reduced row echelon form")
        self.sparse = [[(j, x) for j, x in enumerate(r) if x] for r in basis.data]

    def solve(self, w):
        c = tuple(w[p] for p in self.pivots)
        acc = [0] * self.basis.cols
        for cr, row in zip(c, self.sparse):
            if cr:
                for j, x in row:
                    acc[j] += cr * x
        if any(a != b for a, b in zip(acc, w)):
            raise Inconsistent("image of a cycle is not in the span of the lower cycles")
        return c


def build_vp(kp, kp_minus_1, p, n, nu):
    """Matrix of Z_p -> Z_{p-1} as linear forms, in the given cycle bases."""
    n1 = n + 1
    m = dim_forms(n, nu)
    if kp.rows and kp.cols != comb(n1, p) * m:
        raise ValueError(f"K_{p} has {kp.cols} columns, expected {comb(n1, p) * m}")
    if kp_minus_1.cols != comb(n1, p - 1) * m:
        raise ValueError(f"K_{p - 1} has {kp_minus_1.cols} columns, "
                         f"expected {comb(n1, p - 1) * m}")
    rows = kp_minus_1.rows
    cols = kp.rows
    layers = [[[0] * cols for _ in range(rows)] for _ in range(n1)]
    if cols == 0 or rows == 0:
        if cols and any(any(r) for r in kp.data):
            raise Inconsistent("nonzero cycles map into an empty slice")
        return LinFormMatrix._raw(layers, rows, cols)
    solver = _RowSpaceSolver(kp_minus_1)
    src_subsets = koszul_exterior_basis(n1, p)
    tgt_pos = {s: i for i, s in enumerate(koszul_exterior_basis(n1, p - 1))}
    width = kp_minus_1.cols
    for j, g in enumerate(kp.data):
        w = [[0] * width for _ in range(n1)]
        for si, subset in enumerate(src_subsets):
            block = g[si * m:(si + 1) * m]
            if not any(block):
                continue
            for sign, a, rest in boundary_terms(subset):
                base = tgt_pos[rest] * m
                wa = w[a]
                for i, x in enumerate(block):
                    if x:
                        wa[base + i] += sign * x
        for a in range(n1):
            c = solver.solve(w[a])
            for r, x in enumerate(c):
                if x:
                    layers[a][r][j] = x.numerator if isinstance(x, Fraction) \
                        and x.denominator == 1 else x
    return LinFormMatrix._raw(layers, rows, cols)


def nu0(n, d, indeg_sat):
    """Smallest slice degree covered by the acyclicity bound."""
    if not 0 <= indeg_sat <= d:
        raise ValueError(f"initial degree {indeg_sat} must lie in [0, {d}]")
    return (n - 1) * (d - 1) - indeg_sat


class ComplexSlice:
    __slots__ = ("n", "d", "nu", "f", "kernels", "maps", "dim0")

    def __init__(self, n, d, nu, f, kernels_, maps, dim0):
        self.n = n
        self.d = d
        self.nu = nu
        self.f = tuple(f)
        self.kernels = list(kernels_)
        self.maps = list(maps)
        self.dim0 = dim0

    @property
    def shapes(self):
        return [m.shape for m in self.maps]

    @property
    def ranks(self):
        """Free ranks of the terms Z_0, Z_1, ... of the slice."""
        return [self.dim0] + [k.rows for k in self.kernels]

    def check_complex(self):
        for p in range(1, len(self.maps)):
            if not self.maps[p - 1].product_is_zero(self.maps[p]):
                raise ComplexPropertyViolated(f"Z_{p} * Z_{p + 1} is not zero")

    def __repr__(self):
        shapes = ", ".join(f"{r}x{c}" for r, c in self.shapes)
        return f"ComplexSlice(n={self.n}, d={self.d}, nu={self.nu}, maps=[{shapes}])"


def assemble_slice(f, nu, check=True):
    f = list(f)
    if not f or not any(q.terms for q in f):
        raise ValueError("the parameterization is identically zero")
    d = common_degree(f)
    n = f[0].nvars
    if len(f) != n + 1:
        raise ValueError(f"need {n + 1} polynomials in {n} variables, got {len(f)}")
    if nu < 0:
        return ComplexSlice(n, d, nu, f, [], [], 0)
    m = dim_forms(n, nu)
    ks = [syzygy_basis(f, p, nu) for p in range(1, n + 1)]
    maps = [build_v1(ks[0], n, nu)]
    for p in range(2, n + 1):
        maps.append(build_vp(ks[p - 1], ks[p - 2], p, n, nu))
    out = ComplexSlice(n, d, nu, f, ks, maps, m)
    if check:
        out.check_complex()
    return out
