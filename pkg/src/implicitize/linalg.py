"""Exact linear algebra over Q and determinants of linear-form matrices.

Scalar work is fraction-free: rows (or columns) are scaled to integers and
handed to the kernels in ``implicitize.kernels``. A ``LinFormMatrix`` is
stored as one rational matrix per target variable, so ``M(T) = sum_a T_a *
layers[a]``.
"""

import random
from fractions import Fraction
from math import factorial, lcm

from . import kernels
from .arith import TargetLinForm, TargetPoly, as_rational, divexact
from .errors import Inconsistent, RankDeficient

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127,
                131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
                197, 199, 211, 223, 227, 229)
MAX_RETRIES = 5


def _int_row(row):
    den = lcm(*(x.denominator for x in row if isinstance(x, Fraction))) if row else 1
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


class QMatrix:
    """Dense matrix of exact rationals (rows of ints / Fractions)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        data = [tuple(as_rational(x) for x in row) for row in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged matrix")
        self.rows = len(data)
        self.cols = cols
        self.data = tuple(data)

    @classmethod
    def _raw(cls, data, cols):
        obj = cls.__new__(cls)
        obj.data = tuple(data)
        obj.rows = len(obj.data)
        obj.cols = cols
        return obj

    @classmethod
    def zeros(cls, rows, cols):
        return cls._raw([(0,) * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls._raw([tuple(int(i == j) for j in range(n)) for i in range(n)], n)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(r[j] for r in self.data)

    @property
    def T(self):
        return QMatrix._raw([tuple(r[j] for r in self.data) for j in range(self.cols)],
                            self.rows)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.T.data
        out = []
        for r in self.data:
            out.append(tuple(as_rational(sum(a * b for a, b in zip(r, c) if a))
                             for c in cols))
        return QMatrix._raw(out, other.cols)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.shape, self.data))

    def is_zero(self):
        return not any(any(r) for r in self.data)

    def int_rows(self):
        """Each row scaled by the lcm of its denominators."""
        return [_int_row(r) for r in self.data]

    def rref_pivots(self):
        """Pivot columns if the matrix is in reduced row echelon form, else None."""
        pivots = []
        last = -1
        for r in self.data:
            lead = next((j for j, x in enumerate(r) if x), None)
            if lead is None or lead <= last or r[lead] != 1:
                return None
            pivots.append(lead)
            last = lead
        for i, p in enumerate(pivots):
            for k, r in enumerate(self.data):
                if k != i and r[p]:
                    return None
        return pivots

    def __repr__(self):
        return f"QMatrix({self.rows}x{self.cols})"


def _rref(rows_int, ncols):
    mat, den, pivots = kernels.rref_int(rows_int, ncols)
    return [tuple(as_rational(Fraction(x, den)) if x else 0 for x in r) for r in mat], pivots


def rank(m):
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(kernels.echelon_pivots(m.int_rows(), m.cols))


def rref(m):
    """Reduced row echelon form without zero rows, and its pivot columns."""
    if m.rows == 0 or m.cols == 0:
        return QMatrix._raw([], m.cols), []
    data, pivots = _rref(m.int_rows(), m.cols)
    return QMatrix._raw(data, m.cols), pivots


def left_kernel_basis(m):
    """Basis K of {c : c M = 0} in reduced row echelon form (K M = 0)."""
    n = m.rows
    if n == 0:
        return QMatrix._raw([], 0)
    if m.cols == 0:
        return QMatrix.identity(n)
    mat, den, pivots = kernels.rref_int(m.T.int_rows(), n)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    if not free:
        return QMatrix._raw([], n)
    basis = []
    for f in free:
        v = [0] * n
        v[f] = den
        for i, p in enumerate(pivots):
            v[p] = -mat[i][f]
        basis.append(v)
    data, _ = _rref(basis, n)
    return QMatrix._raw(data, n)


def nullspace_basis(m):
    """Basis of {v : M v = 0}, one vector per row, in reduced row echelon form."""
    return left_kernel_basis(m.T)


def solve_right(k, b):
    """Coefficient vector c with c K = b; raises Inconsistent if none exists."""
    b = tuple(as_rational(x) for x in b)
    if len(b) != k.cols:
        raise ValueError("right-hand side has the wrong length")
    pivots = k.rref_pivots()
    if pivots is not None:
        c = tuple(b[p] for p in pivots)
        _check_combination(k, c, b)
        return c
    if k.rows == 0:
        if any(b):
            raise Inconsistent("nonzero vector outside the zero row space")
        return ()
    aug = [list(col) + [rhs] for col, rhs in zip(k.T.data, b)]
    mat, den, piv = kernels.rref_int([_int_row(r) for r in aug], k.rows + 1)
    if piv and piv[-1] == k.rows:
        raise Inconsistent("vector is not in the row space")
    c = [0] * k.rows
    for i, p in enumerate(piv):
        c[p] = as_rational(Fraction(mat[i][k.rows], den))
    c = tuple(c)
    _check_combination(k, c, b)
    return c


def _check_combination(k, c, b):
    for j in range(k.cols):
        s = sum(ci * r[j] for ci, r in zip(c, k.data) if ci and r[j])
        if s != b[j]:
            raise Inconsistent("vector is not in the row space")


class LinFormMatrix:
    """Matrix whose entries are linear forms in ``nvars`` target variables."""

    __slots__ = ("rows", "cols", "nvars", "layers")

    def __init__(self, layers, rows=None, cols=None):
        layers = [tuple(tuple(as_rational(x) for x in r) for r in lay) for lay in layers]
        if not layers:
            raise ValueError("need at least one target variable")
        self.nvars = len(layers)
        self.rows = len(layers[0]) if rows is None else rows
        self.cols = (len(layers[0][0]) if layers[0] else 0) if cols is None else cols
        for lay in layers:
            if len(lay) != self.rows or any(len(r) != self.cols for r in lay):
                raise ValueError("inconsistent layer shapes")
        self.layers = tuple(layers)

    @classmethod
    def _raw(cls, layers, rows, cols):
        obj = cls.__new__(cls)
        obj.layers = tuple(tuple(tuple(r) for r in lay) for lay in layers)
        obj.nvars = len(obj.layers)
        obj.rows = rows
        obj.cols = cols
        return obj

    @classmethod
    def from_entries(cls, entries, nvars, cols=None):
        rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        layers = [[tuple(e.coeffs[a] for e in row) for row in entries]
                  for a in range(nvars)]
        return cls._raw(layers, rows, cols)

    @classmethod
    def empty(cls, rows, cols, nvars):
        return cls._raw([[(0,) * cols for _ in range(rows)] for _ in range(nvars)],
                        rows, cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def entry(self, i, j):
        return TargetLinForm(lay[i][j] for lay in self.layers)

    __getitem__ = lambda self, ij: self.entry(*ij)

    def entries(self):
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def layer(self, a):
        return QMatrix._raw(self.layers[a], self.cols)

    def __eq__(self, other):
        if not isinstance(other, LinFormMatrix):
            return NotImplemented
        return self.shape == other.shape and self.layers == other.layers

    def __hash__(self):
        return hash((self.shape, self.layers))

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        point = [as_rational(p) for p in point]
        out = []
        for i in range(self.rows):
            row = []
            for j in range(self.cols):
                v = 0
                for t, lay in zip(point, self.layers):
                    x = lay[i][j]
                    if x and t:
                        v += t * x
                row.append(as_rational(v) if isinstance(v, Fraction) else v)
            out.append(tuple(row))
        return QMatrix._raw(out, self.cols)

    def submatrix(self, rows, cols):
        rows = list(rows)
        cols = list(cols)
        layers = [[tuple(lay[i][j] for j in cols) for i in rows] for lay in self.layers]
        return LinFormMatrix._raw(layers, len(rows), len(cols))

    def column_scaled_int_layers(self):
        """Integer layers after scaling column j by scale[j]; returns (layers, scale)."""
        scale = []
        for j in range(self.cols):
            dens = [lay[i][j].denominator for lay in self.layers for i in range(self.rows)
                    if isinstance(lay[i][j], Fraction)]
            scale.append(lcm(*dens) if dens else 1)
        layers = [[[int(lay[i][j] * scale[j]) for j in range(self.cols)]
                   for i in range(self.rows)] for lay in self.layers]
        return layers, scale

    def _row_scaled_int_layers(self):
        layers = [[list(r) for r in lay] for lay in self.layers]
        for i in range(self.rows):
            dens = [lay[i][j].denominator for lay in self.layers for j in range(self.cols)
                    if isinstance(lay[i][j], Fraction)]
            s = lcm(*dens) if dens else 1
            for lay in layers:
                lay[i] = [int(x * s) for x in lay[i]]
        return layers

    def product(self, other):
        """Entries of self @ other as quadratic TargetPolys (list of rows)."""
        if self.cols != other.rows or self.nvars != other.nvars:
            raise ValueError("shape mismatch in linear-form product")
        n = self.nvars
        out = [[TargetPoly.zero(n) for _ in range(other.cols)] for _ in range(self.rows)]
        for a in range(n):
            for b in range(n):
                prod = self.layer(a) @ other.layer(b)
                for i in range(self.rows):
                    for k in range(other.cols):
                        c = prod[i, k]
                        if c:
                            e = [0] * n
                            e[a] += 1
                            e[b] += 1
                            out[i][k] = out[i][k] + TargetPoly(n, {tuple(e): c})
        return out

    def product_is_zero(self, other):
        """True iff self @ other is the zero matrix of quadratic forms."""
        if self.cols != other.rows or self.nvars != other.nvars:
            raise ValueError("shape mismatch in linear-form product")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return True
        left = self._row_scaled_int_layers()
        right = LinFormMatrix._raw(
            [list(zip(*lay)) for lay in other.layers], other.cols, other.rows
        )._row_scaled_int_layers()  # columns of other, scaled
        n = self.nvars
        for a in range(n):
            for b in range(a, n):
                for i in range(self.rows):
                    ra, rb = left[a][i], left[b][i]
                    for k in range(other.cols):
                        ca, cb = right[a][k], right[b][k]
                        s = sum(x * y for x, y in zip(ra, cb) if x)
                        if a != b:
                            s += sum(x * y for x, y in zip(rb, ca) if x)
                        if s:
                            return False
        return True

    def to_str(self):
        ents = [[e.to_str() for e in row] for row in self.entries()]
        width = max((len(s) for row in ents for s in row), default=1)
        return "\n".join("[ " + "  ".join(s.rjust(width) for s in row) + " ]"
                         for row in ents)

    def __repr__(self):
        return f"LinFormMatrix({self.rows}x{self.cols}, nvars={self.nvars})"


def random_point(rng, nvars):
    """Distinct small primes, drawn without replacement."""
    return rng.sample(SMALL_PRIMES, nvars)


def select_independent_columns(m, k, seed=0, max_retries=MAX_RETRIES, shuffle=False):
    """Indices of k columns of M independent over Q(T), sorted ascending.

    Columns are scanned left to right (or in an order shuffled by ``seed``
    when ``shuffle`` is set) and greedily kept when they raise the rank of
    M evaluated at a random prime point. A nonzero scalar minor certifies
    independence of the symbolic columns.
    """
    if k == 0:
        return []
    if k > m.cols or k > m.rows:
        raise RankDeficient(f"cannot pick {k} independent columns from a "
                            f"{m.rows}x{m.cols} matrix")
    rng = random.Random(seed)
    order = list(range(m.cols))
    if shuffle:
        rng.shuffle(order)
    best = 0
    for _ in range(max_retries):
        point = random_point(rng, m.nvars)
        scalar = m.evaluate(point)
        cols = [list(scalar.column(j)) for j in order]
        # echelon pivots of the transpose pick columns in scan order
        trans_rows = [_int_row(c) for c in cols]
        chosen = _greedy_rows(trans_rows, m.rows)
        best = max(best, len(chosen))
        if len(chosen) >= k:
            return sorted(order[i] for i in chosen[:k])
    raise RankDeficient(f"found only {best} independent columns where {k} are needed")


def _greedy_rows(rows, width):
    """Indices of rows that are independent of all earlier rows."""
    if not rows:
        return []
    # pivots of [rows^T] in column order == greedily independent rows
    transposed = [[r[i] for r in rows] for i in range(width)]
    return kernels.echelon_pivots(transposed, len(rows))


def generic_rank(m, seed=0, tries=3):
    """Rank of M over Q(T), from the max rank at random prime points."""
    if m.rows == 0 or m.cols == 0:
        return 0
    rng = random.Random(seed)
    best = 0
    for _ in range(tries):
        best = max(best, rank(m.evaluate(random_point(rng, m.nvars))))
        if best == min(m.rows, m.cols):
            break
    return best


def linform_determinant(m, method="auto"):
    """Exact determinant of a square linear-form matrix.

    ``method`` is ``"bareiss"`` (fraction-free elimination over Q[T]),
    ``"interpolation"`` (exact evaluation on a simplex lattice plus Newton
    forward differences) or ``"auto"``, which uses Bareiss up to size 4.
    """
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return TargetPoly.constant(m.nvars, 1)
    if method == "auto":
        method = "bareiss" if m.rows <= 4 else "interpolation"
    if method == "bareiss":
        return _det_bareiss(m)
    if method == "interpolation":
        return _det_interpolation(m)
    raise ValueError(f"unknown determinant method {method!r}")


def _det_bareiss(m):
    k = m.rows
    a = [[m.entry(i, j).to_poly() for j in range(k)] for i in range(k)]
    sign = 1
    prev = None
    for c in range(k - 1):
        if not a[c][c]:
            for r in range(c + 1, k):
                if a[r][c]:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return TargetPoly.zero(m.nvars)
        p = a[c][c]
        for i in range(c + 1, k):
            for j in range(c + 1, k):
                v = p * a[i][j] - a[i][c] * a[c][j]
                a[i][j] = divexact(v, prev) if prev is not None else v
        prev = p
    d = a[k - 1][k - 1]
    return -d if sign < 0 else d


def simplex_lattice(m, k):
    """All exponent-like tuples of length m with entries summing to at most k."""
    if m == 0:
        return [()]
    out = []
    for first in range(k + 1):
        for rest in simplex_lattice(m - 1, k - first):
            out.append((first,) + rest)
    return out


def _stirling_first(k):
    # signed s(j, l) for 0 <= l <= j <= k
    s = [[0] * (k + 1) for _ in range(k + 1)]
    s[0][0] = 1
    for j in range(k):
        for l in range(j + 2):
            s[j + 1][l] = (s[j][l - 1] if l else 0) - j * s[j][l]
    return s


def interpolate_on_lattice(values, m, k):
    """Monomial coefficients of the degree <= k polynomial in m variables
    taking ``values[J]`` at the integer point J for every J in the simplex.

    Returns ``(coeffs, scale)`` with integer ``coeffs[J]`` such that the true
    coefficient is ``coeffs[J] / scale``.
    """
    vals = dict(values)
    lines = []
    for axis in range(m):
        lines.append([J for J in vals if J[axis] == 0])
    # forward differences along each axis: vals[J] -> Delta^J p(0)
    for axis in range(m):
        for base in lines[axis]:
            length = k - sum(base) + 1
            keys = [base[:axis] + (t,) + base[axis + 1:] for t in range(length)]
            seq = [vals[key] for key in keys]
            for level in range(1, length):
                for t in range(length - 1, level - 1, -1):
                    seq[t] -= seq[t - 1]
            for key, v in zip(keys, seq):
                vals[key] = v
    # binomial basis C(t, j) -> monomials, each axis scaled by k!
    st = _stirling_first(k)
    kf = factorial(k)
    ratio = [kf // factorial(j) for j in range(k + 1)]
    for axis in range(m):
        for base in lines[axis]:
            length = k - sum(base) + 1
            keys = [base[:axis] + (t,) + base[axis + 1:] for t in range(length)]
            seq = [vals[key] for key in keys]
            new = [sum(seq[j] * st[j][l] * ratio[j] for j in range(l, length) if seq[j])
                   for l in range(length)]
            for key, v in zip(keys, new):
                vals[key] = v
    return vals, kf ** m


def _det_interpolation(m):
    k = m.rows
    layers, scale = m.column_scaled_int_layers()
    nv = m.nvars
    dims = nv - 1
    pts = simplex_lattice(dims, k)
    values = kernels.det_many(layers, [(1,) + J for J in pts])
    coeffs, denom = interpolate_on_lattice(zip(pts, values), dims, k)
    total_scale = denom
    for s in scale:
        total_scale *= s
    terms = {}
    for J, c in coeffs.items():
        if c:
            terms[(k - sum(J),) + J] = as_rational(Fraction(c, total_scale))
    return TargetPoly._raw(nv, terms)
