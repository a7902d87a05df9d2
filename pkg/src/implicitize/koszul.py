"""Monomial bases and graded slices of the Koszul differentials of (f0..fn)."""

from itertools import combinations
from math import comb

from .linalg import QMatrix


class MonomialBasis:
    """All exponent vectors of one total degree, in descending graded-lex order."""

    __slots__ = ("num_vars", "degree", "monomials", "_index")

    def __init__(self, num_vars, degree):
        if num_vars < 1:
            raise ValueError("need at least one variable")
        self.num_vars = num_vars
        self.degree = degree
        self.monomials = tuple(_exponents(num_vars, degree)) if degree >= 0 else ()
        self._index = {e: i for i, e in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, i):
        return self.monomials[i]

    def index(self, exp):
        return self._index[tuple(exp)]

    def __repr__(self):
        return f"MonomialBasis(n={self.num_vars}, deg={self.degree}, size={len(self)})"


def _exponents(n, deg):
    if n == 1:
        yield (deg,)
        return
    for first in range(deg, -1, -1):
        for rest in _exponents(n - 1, deg - first):
            yield (first,) + rest


def monomial_basis(n, deg):
    return MonomialBasis(n, deg)


def dim_forms(n, deg):
    """Dimension of the degree-deg forms in n variables."""
    return comb(deg + n - 1, n - 1) if deg >= 0 else 0


def koszul_exterior_basis(n_plus_1, p):
    """p-subsets of {0..n}, lexicographically ordered."""
    if not 0 <= p <= n_plus_1:
        raise ValueError(f"exterior degree {p} out of range for {n_plus_1} generators")
    return list(combinations(range(n_plus_1), p))


def boundary_terms(subset):
    """(sign, removed index, remaining subset) for the Koszul boundary of e_subset."""
    out = []
    for k, a in enumerate(subset):
        out.append((-1 if k % 2 else 1, a, subset[:k] + subset[k + 1:]))
    return out


class KoszulSlice:
    """Matrix of d_p : (+) A_nu e_S  ->  (+) A_{nu+d} e_S', |S| = p.

    Rows index the target and columns the source; both are labelled
    block-major by (subset position, monomial position).
    """

    __slots__ = ("p", "nu", "d", "matrix", "row_basis", "col_basis",
                 "source", "target", "row_subsets", "col_subsets")

    def __init__(self, p, nu, d, matrix, source, target, row_subsets, col_subsets):
        self.p = p
        self.nu = nu
        self.d = d
        self.matrix = matrix
        self.source = source
        self.target = target
        self.row_subsets = row_subsets
        self.col_subsets = col_subsets
        self.row_basis = [(s, i) for s in range(len(row_subsets)) for i in range(len(target))]
        self.col_basis = [(s, i) for s in range(len(col_subsets)) for i in range(len(source))]

    def __repr__(self):
        return f"KoszulSlice(p={self.p}, nu={self.nu}, {self.matrix.rows}x{self.matrix.cols})"


def common_degree(f):
    degs = set()
    for q in f:
        if not q.terms:
            continue
        dq = q.homogeneous_degree()
        if dq is None:
            raise ValueError(f"not homogeneous: {q}")
        degs.add(dq)
    if len(degs) != 1:
        raise ValueError("the polynomials must be homogeneous of one common degree"
                         if degs else "all polynomials are zero")
    return degs.pop()


def koszul_matrix(f, p, nu):
    f = list(f)
    d = common_degree(f)
    if d < 1:
        raise ValueError("the common degree must be at least 1")
    n = f[0].nvars
    n1 = len(f)
    source = MonomialBasis(n, nu)
    target = MonomialBasis(n, nu + d)
    col_subsets = koszul_exterior_basis(n1, p)
    row_subsets = koszul_exterior_basis(n1, p - 1) if p >= 1 else []
    row_pos = {s: i for i, s in enumerate(row_subsets)}
    m_src, m_tgt = len(source), len(target)
    nrows = len(row_subsets) * m_tgt
    ncols = len(col_subsets) * m_src
    data = [[0] * ncols for _ in range(nrows)]
    fterms = [list(q.terms.items()) for q in f]
    for cs, subset in enumerate(col_subsets):
        for sign, a, rest in boundary_terms(subset):
            rbase = row_pos[rest] * m_tgt
            for j, mono in enumerate(source.monomials):
                col = cs * m_src + j
                for exp, c in fterms[a]:
                    row = rbase + target.index(tuple(x + y for x, y in zip(mono, exp)))
                    data[row][col] += sign * c
    return KoszulSlice(p, nu, d, QMatrix(data, ncols), source, target,
                       row_subsets, col_subsets)
