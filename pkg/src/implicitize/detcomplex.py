"""Determinant of a generically exact complex of linear-form matrices.

The cascade picks, for Z_1, a maximal set L_1 of independent columns; the
rows of Z_2 indexed by L_1 are then dropped and the same selection is
repeated on what is left, and so on down the complex. The determinant is
det(D_1) det(D_3) ... / det(D_2) det(D_4) ...
"""

import random

from .arith import TargetPoly, divexact
from .errors import InexactDivision, NotGenericallyExact
from .linalg import MAX_RETRIES, generic_rank, linform_determinant, \
    select_independent_columns


class Delta:
    __slots__ = ("index", "rows", "cols", "matrix", "det")

    def __init__(self, index, rows, cols, matrix, det):
        self.index = index
        self.rows = rows
        self.cols = cols
        self.matrix = matrix
        self.det = det

    @property
    def size(self):
        return self.matrix.rows

    def __repr__(self):
        return f"Delta{self.index}({self.size}x{self.size}, deg {self.det.degree()})"


class DetComplexResult:
    __slots__ = ("deltas", "quotient", "degree")

    def __init__(self, deltas, quotient):
        self.deltas = list(deltas)
        self.quotient = quotient
        self.degree = quotient.degree()

    @property
    def sizes(self):
        return [dl.size for dl in self.deltas]

    def numerator(self, nvars):
        return _product([dl.det for dl in self.deltas[0::2]], nvars)

    def denominator(self, nvars):
        return _product([dl.det for dl in self.deltas[1::2]], nvars)

    def check_identity(self):
        """quotient * prod(even dets) == prod(odd dets), recomputed from scratch."""
        nv = self.quotient.nvars
        return self.quotient * self.denominator(nv) == self.numerator(nv)

    def __repr__(self):
        return f"DetComplexResult(sizes={self.sizes}, degree={self.degree})"


class ExactnessReport:
    __slots__ = ("exact", "dims", "ranks", "message")

    def __init__(self, exact, dims, ranks, message):
        self.exact = exact
        self.dims = dims
        self.ranks = ranks
        self.message = message

    def __bool__(self):
        return self.exact

    def to_dict(self):
        return {"exact": self.exact, "dims": list(self.dims), "ranks": list(self.ranks),
                "message": self.message}

    def __repr__(self):
        return f"ExactnessReport(exact={self.exact}, dims={self.dims}, ranks={self.ranks})"


def _product(polys, nvars):
    out = TargetPoly.constant(nvars, 1)
    for p in polys:
        out = out * p
    return out


def check_generic_exactness(slice_, seed=0):
    """Exactness over Q(T), judged from ranks at random prime points.

    Returns a report that is truthy when Z_1 is onto Z_0 and
    rank(Z_p) + rank(Z_{p+1}) = cols(Z_p) for every p.
    """
    maps = slice_.maps
    dims = [slice_.dim0] + [m.cols for m in maps]
    if not maps:
        return ExactnessReport(True, dims, [], "empty slice")
    rng = random.Random(seed)
    ranks = [generic_rank(m, rng.randrange(2 ** 32)) for m in maps]
    if ranks[0] != slice_.dim0:
        return ExactnessReport(
            False, dims, ranks,
            f"Z_1 has only {ranks[0]} independent columns where {slice_.dim0} are "
            f"needed for a square Delta_1 (nu = {slice_.nu} is too small, or the "
            "base locus violates the acyclicity hypotheses)")
    for p, m in enumerate(maps, start=1):
        nxt = ranks[p] if p < len(ranks) else 0
        if ranks[p - 1] + nxt != m.cols:
            return ExactnessReport(
                False, dims, ranks,
                f"homology at Z_{p}: rank {ranks[p - 1]} + {nxt} != {m.cols} "
                f"(slice nu = {slice_.nu} is not acyclic)")
    return ExactnessReport(True, dims, ranks, "generically exact")


def cascade(slice_, seed=0, method="auto", check=True, shuffle=False):
    """Delta matrices, their determinants and the exact alternating quotient.

    With ``shuffle`` the column scan order is permuted by the seed, so
    different seeds pick different (equally valid) Delta matrices.
    """
    nv = slice_.n + 1
    if check:
        report = check_generic_exactness(slice_, seed)
        if not report:
            raise NotGenericallyExact(report.message, report)
    rng = random.Random(seed)
    deltas = []
    prev = None
    for i, z in enumerate(slice_.maps, start=1):
        dropped = set(prev or ())
        keep_rows = [r for r in range(z.rows) if r not in dropped]
        if not keep_rows:
            break
        m = z.submatrix(keep_rows, range(z.cols))
        need = len(keep_rows)
        if need > m.cols:
            raise NotGenericallyExact(
                f"Delta_{i} needs {need} columns but Z_{i} has only {m.cols}")
        for attempt in range(MAX_RETRIES):
            # a zero determinant here means an unlucky point; rescan in a new order
            cols = list(range(m.cols)) if need == m.cols else \
                select_independent_columns(m, need, rng.randrange(2 ** 32),
                                           shuffle=shuffle or attempt > 0)
            block = m.submatrix(range(need), cols)
            det = linform_determinant(block, method)
            if det:
                break
        else:
            raise NotGenericallyExact(f"every selected Delta_{i} has zero determinant")
        deltas.append(Delta(i, keep_rows, cols, block, det))
        prev = cols
    if not deltas:
        return DetComplexResult([], TargetPoly.constant(nv, 1))
    num = _product([dl.det for dl in deltas[0::2]], nv)
    den = _product([dl.det for dl in deltas[1::2]], nv)
    try:
        quotient = divexact(num, den)
    except InexactDivision as exc:
        raise InexactDivision(f"alternating product of the Delta determinants is not "
                              f"a polynomial: {exc}") from None
    return DetComplexResult(deltas, quotient)


def divisibility_check(result):
    """(True, Q) when det(Delta_2) = Q det(Delta_3) exactly, else (False, None)."""
    dets = [dl.det for dl in result.deltas]
    nv = result.quotient.nvars
    if len(dets) < 2:
        return True, TargetPoly.constant(nv, 1)
    if len(dets) < 3:
        return True, dets[1]
    try:
        return True, divexact(dets[1], dets[2])
    except InexactDivision:
        return False, None
