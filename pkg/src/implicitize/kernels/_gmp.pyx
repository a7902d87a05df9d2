# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""GMP-backed integer kernels.

Same signatures and results as ``_pure``; Python ints go in and come out,
all arithmetic in between runs on ``mpz_t`` arrays.
"""

from cpython.long cimport PyLong_AsLongAndOverflow, PyLong_FromLong
from libc.stdlib cimport malloc, free


cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef __mpz_struct* mpz_ptr
    void mpz_init(mpz_ptr)
    void mpz_clear(mpz_ptr)
    void mpz_set(mpz_ptr, mpz_ptr)
    void mpz_set_si(mpz_ptr, long)
    void mpz_set_ui(mpz_ptr, unsigned long)
    int mpz_set_str(mpz_ptr, const char*, int)
    char* mpz_get_str(char*, int, mpz_ptr)
    long mpz_get_si(mpz_ptr)
    int mpz_fits_slong_p(mpz_ptr)
    size_t mpz_sizeinbase(mpz_ptr, int)
    void mpz_mul(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_mul_si(mpz_ptr, mpz_ptr, long)
    void mpz_addmul(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_submul(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_sub(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_add(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_neg(mpz_ptr, mpz_ptr)
    void mpz_divexact(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_tdiv_qr(mpz_ptr, mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_swap(mpz_ptr, mpz_ptr)
    int mpz_sgn(mpz_ptr)
    int mpz_cmp(mpz_ptr, mpz_ptr)


cdef inline void _set_py(mpz_ptr z, object x) except *:
    cdef int overflow = 0
    cdef long v = PyLong_AsLongAndOverflow(x, &overflow)
    if overflow == 0:
        mpz_set_si(z, v)
    else:
        s = format(x, "x").encode("ascii")
        if mpz_set_str(z, s, 16) != 0:
            raise ValueError("cannot convert %r" % (x,))


cdef inline object _get_py(mpz_ptr z):
    if mpz_fits_slong_p(z):
        return PyLong_FromLong(mpz_get_si(z))
    cdef size_t n = mpz_sizeinbase(z, 16) + 2
    cdef char* buf = <char*> malloc(n)
    if buf == NULL:
        raise MemoryError()
    try:
        mpz_get_str(buf, 16, z)
        s = buf.decode("ascii")
    finally:
        free(buf)
    return int(s, 16)


cdef mpz_ptr _alloc(Py_ssize_t n) except NULL:
    cdef mpz_ptr a = <mpz_ptr> malloc((n if n > 0 else 1) * sizeof(__mpz_struct))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        mpz_init(&a[i])
    return a


cdef void _release(mpz_ptr a, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        mpz_clear(&a[i])
    free(a)


cdef void _swap_rows(mpz_ptr m, Py_ssize_t ncols, Py_ssize_t r1, Py_ssize_t r2):
    cdef Py_ssize_t j
    for j in range(ncols):
        mpz_swap(&m[r1 * ncols + j], &m[r2 * ncols + j])


cdef int _bareiss(mpz_ptr m, Py_ssize_t n, mpz_ptr out, mpz_ptr t1) except -1:
    # destroys m; writes det into out
    cdef Py_ssize_t i, j, k, piv
    cdef int sign = 1
    cdef mpz_ptr prev
    cdef mpz_ptr pk
    if n == 0:
        mpz_set_si(out, 1)
        return 0
    prev = NULL
    for k in range(n - 1):
        if mpz_sgn(&m[k * n + k]) == 0:
            piv = -1
            for i in range(k + 1, n):
                if mpz_sgn(&m[i * n + k]) != 0:
                    piv = i
                    break
            if piv < 0:
                mpz_set_si(out, 0)
                return 0
            _swap_rows(m, n, k, piv)
            sign = -sign
        pk = &m[k * n + k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mpz_mul(t1, &m[i * n + j], pk)
                mpz_submul(t1, &m[i * n + k], &m[k * n + j])
                if prev != NULL:
                    mpz_divexact(&m[i * n + j], t1, prev)
                else:
                    mpz_set(&m[i * n + j], t1)
        prev = pk
    mpz_set(out, &m[(n - 1) * n + (n - 1)])
    if sign < 0:
        mpz_neg(out, out)
    return 0


def det_int(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j
    if n == 0:
        return 1
    cdef mpz_ptr m = _alloc(n * n)
    cdef mpz_ptr aux = _alloc(2)
    try:
        for i in range(n):
            row = rows[i]
            if len(row) != n:
                raise ValueError("matrix is not square")
            for j in range(n):
                _set_py(&m[i * n + j], row[j])
        _bareiss(m, n, &aux[0], &aux[1])
        return _get_py(&aux[0])
    finally:
        _release(m, n * n)
        _release(aux, 2)


def det_many(layers, points):
    cdef Py_ssize_t nl = len(layers)
    if nl == 0:
        raise ValueError("need at least one layer")
    cdef Py_ssize_t n = len(layers[0])
    cdef Py_ssize_t nn = n * n
    cdef Py_ssize_t a, i, j, idx
    cdef mpz_ptr lay = _alloc(nl * nn)
    cdef mpz_ptr m = _alloc(nn)
    cdef mpz_ptr aux = _alloc(3)
    cdef mpz_ptr tz
    out = []
    try:
        for a in range(nl):
            layer = layers[a]
            for i in range(n):
                row = layer[i]
                for j in range(n):
                    _set_py(&lay[a * nn + i * n + j], row[j])
        tz = &aux[2]
        for pt in points:
            for idx in range(nn):
                mpz_set_si(&m[idx], 0)
            for a in range(nl):
                _set_py(tz, pt[a])
                if mpz_sgn(tz) == 0:
                    continue
                for idx in range(nn):
                    mpz_addmul(&m[idx], tz, &lay[a * nn + idx])
            _bareiss(m, n, &aux[0], &aux[1])
            out.append(_get_py(&aux[0]))
        return out
    finally:
        _release(lay, nl * nn)
        _release(m, nn)
        _release(aux, 3)


cdef mpz_ptr _load(rows, Py_ssize_t nrows, Py_ssize_t ncols) except NULL:
    cdef mpz_ptr m = _alloc(nrows * ncols)
    cdef Py_ssize_t i, j
    try:
        for i in range(nrows):
            row = rows[i]
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for j in range(ncols):
                _set_py(&m[i * ncols + j], row[j])
    except BaseException:
        _release(m, nrows * ncols)
        raise
    return m


def echelon_pivots(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r = 0, c, i, j, piv
    if nrows == 0 or ncols == 0:
        return []
    cdef mpz_ptr m = _load(rows, nrows, ncols)
    cdef mpz_ptr aux = _alloc(2)
    cdef mpz_ptr prev = &aux[0]
    cdef mpz_ptr t1 = &aux[1]
    mpz_set_si(prev, 1)
    pivots = []
    try:
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if mpz_sgn(&m[i * ncols + c]) != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                _swap_rows(m, ncols, r, piv)
            for i in range(r + 1, nrows):
                for j in range(c + 1, ncols):
                    mpz_mul(t1, &m[i * ncols + j], &m[r * ncols + c])
                    mpz_submul(t1, &m[i * ncols + c], &m[r * ncols + j])
                    mpz_divexact(&m[i * ncols + j], t1, prev)
                mpz_set_si(&m[i * ncols + c], 0)
            mpz_set(prev, &m[r * ncols + c])
            pivots.append(c)
            r += 1
        return pivots
    finally:
        _release(m, nrows * ncols)
        _release(aux, 2)


def rref_int(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r = 0, c, i, j, piv
    if nrows == 0 or ncols == 0:
        return [], 1, []
    cdef mpz_ptr m = _load(rows, nrows, ncols)
    cdef mpz_ptr aux = _alloc(3)
    cdef mpz_ptr prev = &aux[0]
    cdef mpz_ptr t1 = &aux[1]
    cdef mpz_ptr a = &aux[2]
    mpz_set_si(prev, 1)
    pivots = []
    try:
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if mpz_sgn(&m[i * ncols + c]) != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                _swap_rows(m, ncols, r, piv)
            for i in range(nrows):
                if i == r:
                    continue
                mpz_set(a, &m[i * ncols + c])
                for j in range(ncols):
                    mpz_mul(t1, &m[i * ncols + j], &m[r * ncols + c])
                    if mpz_sgn(a) != 0:
                        mpz_submul(t1, a, &m[r * ncols + j])
                    mpz_divexact(&m[i * ncols + j], t1, prev)
            mpz_set(prev, &m[r * ncols + c])
            pivots.append(c)
            r += 1
        mat = [[_get_py(&m[i * ncols + j]) for j in range(ncols)] for i in range(r)]
        return mat, _get_py(prev), pivots
    finally:
        _release(m, nrows * ncols)
        _release(aux, 3)


def kron_mul(ka, ca, kb, cb):
    cdef Py_ssize_t na = len(ka), nb = len(kb)
    cdef Py_ssize_t i, j
    cdef long long top, key
    if na == 0 or nb == 0:
        return [], []
    top = <long long> max(ka) + <long long> max(kb)
    cdef long long* ia = <long long*> malloc(na * sizeof(long long))
    cdef long long* ib = <long long*> malloc(nb * sizeof(long long))
    cdef mpz_ptr za = NULL
    cdef mpz_ptr zb = NULL
    cdef mpz_ptr acc = NULL
    cdef char* used = NULL
    try:
        if ia == NULL or ib == NULL:
            raise MemoryError()
        za = _alloc(na)
        zb = _alloc(nb)
        for i in range(na):
            ia[i] = ka[i]
            _set_py(&za[i], ca[i])
        for j in range(nb):
            ib[j] = kb[j]
            _set_py(&zb[j], cb[j])
        acc = _alloc(top + 1)
        used = <char*> malloc(top + 1)
        if used == NULL:
            raise MemoryError()
        for key in range(top + 1):
            used[key] = 0
        for i in range(na):
            for j in range(nb):
                key = ia[i] + ib[j]
                mpz_addmul(&acc[key], &za[i], &zb[j])
                used[key] = 1
        keys = []
        coeffs = []
        for key in range(top + 1):
            if used[key] and mpz_sgn(&acc[key]) != 0:
                keys.append(key)
                coeffs.append(_get_py(&acc[key]))
        return keys, coeffs
    finally:
        free(ia)
        free(ib)
        if za != NULL:
            _release(za, na)
        if zb != NULL:
            _release(zb, nb)
        if acc != NULL:
            _release(acc, top + 1)
        free(used)


def kron_divexact(kn, cn, kd, cd):
    cdef Py_ssize_t nn = len(kn), nd = len(kd)
    cdef Py_ssize_t i, j, lead
    cdef long long top, ld, pos
    if nd == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if nn == 0:
        return [], []
    lead = 0
    for j in range(nd):
        if kd[j] > kd[lead]:
            lead = j
    ld = kd[lead]
    top = max(kn)
    cdef long long* idd = <long long*> malloc(nd * sizeof(long long))
    cdef mpz_ptr zd = NULL
    cdef mpz_ptr rem = NULL
    cdef mpz_ptr aux = NULL
    try:
        if idd == NULL:
            raise MemoryError()
        zd = _alloc(nd)
        for j in range(nd):
            idd[j] = kd[j]
            _set_py(&zd[j], cd[j])
        rem = _alloc(top + 1)
        aux = _alloc(3)
        for i in range(nn):
            _set_py(&aux[0], cn[i])
            pos = kn[i]
            mpz_add(&rem[pos], &rem[pos], &aux[0])
        qk = []
        qc = []
        pos = top
        while pos >= 0:
            if mpz_sgn(&rem[pos]) != 0:
                if pos < ld:
                    raise ArithmeticError("nonzero remainder")
                mpz_tdiv_qr(&aux[0], &aux[1], &rem[pos], &zd[lead])
                if mpz_sgn(&aux[1]) != 0:
                    raise ArithmeticError("non-integral quotient coefficient")
                for j in range(nd):
                    mpz_submul(&rem[pos - ld + idd[j]], &aux[0], &zd[j])
                qk.append(pos - ld)
                qc.append(_get_py(&aux[0]))
            pos -= 1
        qk.reverse()
        qc.reverse()
        return qk, qc
    finally:
        free(idd)
        if zd != NULL:
            _release(zd, nd)
        if rem != NULL:
            _release(rem, top + 1)
        if aux != NULL:
            _release(aux, 3)
