"""Pure-Python versions of the integer kernels.

Every function here has a twin with the same signature in ``_gmp.pyx``.
All matrices are lists of rows of Python ints; nothing is mutated in place.
"""


def det_int(rows):
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = m[k]
        pk = pivot_row[k]
        tail = pivot_row[k + 1:]
        for i in range(k + 1, n):
            row = m[i]
            a = row[k]
            if a == 0:
                if pk != prev:
                    row[k + 1:] = [(pk * x) // prev for x in row[k + 1:]]
                continue
            row[k + 1:] = [(pk * x - a * y) // prev
                           for x, y in zip(row[k + 1:], tail)]
        prev = pk
    return sign * m[n - 1][n - 1]


def det_many(layers, points):
    """Determinants of ``sum_a point[a] * layers[a]`` for every point."""
    if not layers:
        raise ValueError("need at least one layer")
    k = len(layers[0])
    flat = [[x for row in layer for x in row] for layer in layers]
    out = []
    for pt in points:
        acc = [0] * (k * k)
        for t, lay in zip(pt, flat):
            if t == 0:
                continue
            if t == 1:
                acc = [u + v for u, v in zip(acc, lay)]
            else:
                acc = [u + t * v for u, v in zip(acc, lay)]
        out.append(det_int([acc[i * k:(i + 1) * k] for i in range(k)]))
    return out


def echelon_pivots(rows, ncols):
    """Pivot columns of a fraction-free row echelon form (leftmost greedy)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        p = prow[c]
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[c]
            row[c:] = [(p * x - a * y) // prev for x, y in zip(row[c:], prow[c:])]
        prev = p
        pivots.append(c)
        r += 1
    return pivots


def rref_int(rows, ncols):
    """Fraction-free Gauss-Jordan.

    Returns ``(mat, den, pivots)`` where ``mat`` holds only the nonzero rows
    and ``mat / den`` is the reduced row echelon form.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        p = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            a = row[c]
            if a == 0:
                if p != prev:
                    m[i] = [(p * x) // prev for x in row]
            else:
                m[i] = [(p * x - a * y) // prev for x, y in zip(row, prow)]
        prev = p
        pivots.append(c)
        r += 1
    return m[:r], prev, pivots


def kron_mul(ka, ca, kb, cb):
    """Product of two sparse polynomials keyed by packed exponents."""
    acc = {}
    get = acc.get
    for i, x in zip(ka, ca):
        for j, y in zip(kb, cb):
            key = i + j
            acc[key] = get(key, 0) + x * y
    keys = sorted(k for k, v in acc.items() if v)
    return keys, [acc[k] for k in keys]


def kron_divexact(kn, cn, kd, cd):
    """Exact quotient of packed univariate images over the integers.

    Raises ArithmeticError when the division leaves a remainder or a
    non-integral coefficient.
    """
    if not kd:
        raise ZeroDivisionError("division by zero polynomial")
    if not kn:
        return [], []
    lead = max(range(len(kd)), key=kd.__getitem__)
    ld = kd[lead]
    lc = cd[lead]
    others = [(k - ld, c) for k, c in zip(kd, cd) if k != ld]
    top = max(kn)
    rem = [0] * (top + 1)
    for k, c in zip(kn, cn):
        rem[k] += c
    qk = []
    qc = []
    i = top
    while i >= 0:
        v = rem[i]
        if v:
            if i < ld:
                raise ArithmeticError("nonzero remainder")
            t, r = divmod(v, lc)
            if r:
                raise ArithmeticError("non-integral quotient coefficient")
            rem[i] = 0
            for off, c in others:
                rem[i + off] -= t * c
            qk.append(i - ld)
            qc.append(t)
        i -= 1
    qk.reverse()
    qc.reverse()
    return qk, qc
