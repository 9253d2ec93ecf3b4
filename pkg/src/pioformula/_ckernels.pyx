# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loops over Python integers. Same API as ``_kernels_py``."""


def iterate(coeffs_in, state, Py_ssize_t steps):
    cdef list coeffs = list(coeffs_in)
    cdef Py_ssize_t k = len(coeffs)
    cdef Py_ssize_t head = 0, i, s, idx, t, nnz
    cdef list buf, cs, ix
    cdef object acc
    if k == 0 or steps <= 0:
        return list(state)
    buf = list(state)
    cs = [c for c in coeffs if c]
    ix = [i for i in range(k) if coeffs[i]]
    nnz = len(cs)
    # ring buffer: buf[(head + i) % k] holds the i-th window entry
    for s in range(steps):
        acc = 0
        for t in range(nnz):
            idx = head + <Py_ssize_t>ix[t]
            if idx >= k:
                idx -= k
            acc = acc + cs[t] * buf[idx]
        buf[head] = acc
        head += 1
        if head == k:
            head = 0
    return [buf[(head + i) % k] for i in range(k)]


def terms(coeffs_in, initial, Py_ssize_t count):
    cdef list coeffs = list(coeffs_in)
    cdef Py_ssize_t k = len(coeffs)
    cdef Py_ssize_t n, i, base
    cdef list out
    cdef object acc
    out = list(initial)[:count]
    if k == 0:
        return out + [0] * (count - len(out))
    for n in range(k, count):
        base = n - k
        acc = 0
        for i in range(k):
            acc = acc + coeffs[i] * out[base + i]
        out.append(acc)
    return out


def matmul(a_in, b_in):
    cdef list a = [list(r) for r in a_in]
    cdef list b = [list(r) for r in b_in]
    cdef Py_ssize_t n = len(a), p = len(b), q, i, j, t
    cdef list out, row, arow
    cdef object acc
    q = len(b[0]) if p else 0
    out = []
    for i in range(n):
        arow = a[i]
        row = []
        for j in range(q):
            acc = 0
            for t in range(p):
                acc = acc + arow[t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def matvec(a, v_in):
    cdef list v = list(v_in)
    cdef Py_ssize_t n = len(a), m = len(v), i, t
    cdef list out = []
    cdef object row
    cdef object acc
    for i in range(n):
        row = a[i]
        acc = 0
        for t in range(m):
            acc = acc + row[t] * v[t]
        out.append(acc)
    return out


def poly_mul(a_in, b_in):
    cdef list a = list(a_in), b = list(b_in)
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef list out
    cdef object x
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        x = a[i]
        if x:
            for j in range(lb):
                out[i + j] = out[i + j] + x * b[j]
    return out


def horner(coeffs_in, object x):
    cdef list coeffs = list(coeffs_in)
    cdef Py_ssize_t i
    cdef object acc = 0
    for i in range(len(coeffs) - 1, -1, -1):
        acc = acc * x + coeffs[i]
    return acc


def bareiss_det(rows):
    cdef Py_ssize_t n = len(rows), k, i, j, r
    cdef list m, rowk, rowi
    cdef object pivot, prev = 1, lead
    cdef int sign = 1
    if n == 0:
        return 1
    m = [list(row) for row in rows]
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rowk = m[k]
        for i in range(k + 1, n):
            rowi = m[i]
            lead = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - lead * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]
