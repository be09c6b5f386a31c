# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels: Smith normal form and exact determinant.

Line-for-line twin of `_snf_pure.py`; entries stay Python ints (arbitrary
precision is non-negotiable), the speedup comes from C-typed loop indexing.
Keep the two files in sync: both lanes must be bit-identical.
"""

BACKEND = "compiled"


cdef list _identity_rows(Py_ssize_t n):
    cdef Py_ssize_t i, j
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def snf_kernel(Py_ssize_t n_rows, Py_ssize_t n_cols, rows):
    """Smith normal form with transforms; see `_snf_pure` for the contract."""
    cdef list m = [list(r) for r in rows]
    cdef list u = _identity_rows(n_rows)
    cdef list v = _identity_rows(n_cols)
    cdef Py_ssize_t t
    cdef Py_ssize_t limit = n_rows if n_rows < n_cols else n_cols
    for t in range(limit):
        if not _clear_block(m, u, v, t, n_rows, n_cols):
            break
    return u, m, v


cdef bint _clear_block(list m, list u, list v, Py_ssize_t t,
                       Py_ssize_t n_rows, Py_ssize_t n_cols):
    cdef Py_ssize_t i, j, pi, pj, offender
    cdef bint dirty
    cdef list row, urow, pivot_row, pivot_urow, orow, ourow
    cdef object e, a, best, p, q
    while True:
        best = 0
        pi = -1
        pj = -1
        for i in range(t, n_rows):
            row = <list>m[i]
            for j in range(t, n_cols):
                e = row[j]
                if e != 0:
                    a = -e if e < 0 else e
                    if best == 0 or a < best:
                        best = a
                        pi = i
                        pj = j
        if pi < 0:
            return False
        if pi != t:
            m[t], m[pi] = m[pi], m[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for i in range(n_rows):
                row = <list>m[i]
                row[t], row[pj] = row[pj], row[t]
            for i in range(n_cols):
                row = <list>v[i]
                row[t], row[pj] = row[pj], row[t]
        pivot_row = <list>m[t]
        if pivot_row[t] < 0:
            m[t] = [-x for x in pivot_row]
            u[t] = [-x for x in <list>u[t]]
        pivot_row = <list>m[t]
        pivot_urow = <list>u[t]
        p = pivot_row[t]
        dirty = False
        for i in range(t + 1, n_rows):
            row = <list>m[i]
            e = row[t]
            if e != 0:
                q = e // p
                if q:
                    for j in range(n_cols):
                        row[j] -= q * pivot_row[j]
                    urow = <list>u[i]
                    for j in range(n_rows):
                        urow[j] -= q * pivot_urow[j]
                if row[t] != 0:
                    dirty = True
        for j in range(t + 1, n_cols):
            e = pivot_row[j]
            if e != 0:
                q = e // p
                if q:
                    for i in range(n_rows):
                        row = <list>m[i]
                        row[j] -= q * row[t]
                    for i in range(n_cols):
                        row = <list>v[i]
                        row[j] -= q * row[t]
                if pivot_row[j] != 0:
                    dirty = True
        if dirty:
            continue
        offender = -1
        for i in range(t + 1, n_rows):
            row = <list>m[i]
            for j in range(t + 1, n_cols):
                if row[j] % p:
                    offender = i
                    break
            if offender >= 0:
                break
        if offender < 0:
            return True
        orow = <list>m[offender]
        for j in range(n_cols):
            pivot_row[j] += orow[j]
        ourow = <list>u[offender]
        for j in range(n_rows):
            pivot_urow[j] += ourow[j]


def det_kernel(Py_ssize_t n, rows):
    """Exact determinant of an n x n list-of-rows matrix."""
    if n <= 4:
        return _det_cofactor(rows, n)
    return _det_bareiss(n, rows)


cdef object _det_cofactor(list m, Py_ssize_t n):
    cdef Py_ssize_t i, j, k
    cdef list top, minor, row
    cdef object total, a
    cdef int sign
    if n == 1:
        return (<list>m[0])[0]
    if n == 2:
        return (<list>m[0])[0] * (<list>m[1])[1] - (<list>m[0])[1] * (<list>m[1])[0]
    total = 0
    sign = 1
    top = <list>m[0]
    for j in range(n):
        a = top[j]
        if a != 0:
            minor = []
            for i in range(1, n):
                row = <list>m[i]
                minor.append([row[k] for k in range(n) if k != j])
            total += sign * a * _det_cofactor(minor, n - 1)
        sign = -sign
    return total


cdef object _det_bareiss(Py_ssize_t n, rows):
    cdef list m = [list(r) for r in rows]
    cdef Py_ssize_t i, j, k, swap
    cdef int sign = 1
    cdef object prev = 1
    cdef object pivot, head
    cdef list row_i, row_k
    for k in range(n - 1):
        if (<list>m[k])[k] == 0:
            swap = -1
            for i in range(k + 1, n):
                if (<list>m[i])[k] != 0:
                    swap = i
                    break
            if swap < 0:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = (<list>m[k])[k]
        row_k = <list>m[k]
        for i in range(k + 1, n):
            row_i = <list>m[i]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * (<list>m[n - 1])[n - 1]
