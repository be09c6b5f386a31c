"""Pure-Python kernels: Smith normal form and exact determinant.

This module is the fallback lane; `_snf_core.pyx` is a line-for-line compiled
twin. Both operate on lists of row lists of Python ints (arbitrary precision)
and must produce bit-identical results, so, whichever lane is active, every
result downstream is the same. Keep the two files in sync.

Kernel conventions:
  * snf_kernel(n_rows, n_cols, rows) -> (u, d, v) with u * rows * v == d,
    u and v unimodular, d diagonal, entries nonnegative, divisibility chain,
    zeros trailing. Pivoting picks the smallest-absolute-value nonzero entry
    of the remaining block (first in row-major order on ties).
  * det_kernel(n, rows) -> exact signed determinant; cofactor expansion for
    n <= 4, fraction-free (Bareiss) elimination above that.
"""

BACKEND = "pure"


def _identity_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def snf_kernel(n_rows, n_cols, rows):
    """Smith normal form with transforms; see module docstring for contract."""
    m = [list(r) for r in rows]
    u = _identity_rows(n_rows)
    v = _identity_rows(n_cols)
    for t in range(min(n_rows, n_cols)):
        if not _clear_block(m, u, v, t, n_rows, n_cols):
            break
    return u, m, v


def _clear_block(m, u, v, t, n_rows, n_cols):
    # Diagonalize position (t, t) against the trailing block. Returns False
    # when the block is already all zero (no pivot exists).
    while True:
        # Smallest-absolute-value nonzero pivot; row-major tie-break.
        best = 0
        pi = -1
        pj = -1
        for i in range(t, n_rows):
            row = m[i]
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
            for row in m:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        p = m[t][t]
        dirty = False
        # Clear column t below the pivot (floor division leaves remainders
        # in [0, p), so the pivot shrinks strictly on every dirty pass).
        pivot_row = m[t]
        pivot_urow = u[t]
        for i in range(t + 1, n_rows):
            row = m[i]
            e = row[t]
            if e != 0:
                q = e // p
                if q:
                    for j in range(n_cols):
                        row[j] -= q * pivot_row[j]
                    urow = u[i]
                    for j in range(n_rows):
                        urow[j] -= q * pivot_urow[j]
                if row[t] != 0:
                    dirty = True
        # Clear row t right of the pivot via column operations.
        for j in range(t + 1, n_cols):
            e = m[t][j]
            if e != 0:
                q = e // p
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                if m[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # Cross cleared; force the pivot to divide the remaining block so the
        # diagonal comes out as a divisibility chain.
        offender = -1
        for i in range(t + 1, n_rows):
            row = m[i]
            for j in range(t + 1, n_cols):
                if row[j] % p:
                    offender = i
                    break
            if offender >= 0:
                break
        if offender < 0:
            return True
        orow = m[offender]
        for j in range(n_cols):
            pivot_row[j] += orow[j]
        ourow = u[offender]
        for j in range(n_rows):
            pivot_urow[j] += ourow[j]


def det_kernel(n, rows):
    """Exact determinant of an n x n list-of-rows matrix."""
    if n <= 4:
        return _det_cofactor(rows, n)
    return _det_bareiss(n, rows)


def _det_cofactor(m, n):
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    sign = 1
    top = m[0]
    for j in range(n):
        a = top[j]
        if a != 0:
            minor = [[row[k] for k in range(n) if k != j] for row in m[1:]]
            total += sign * a * _det_cofactor(minor, n - 1)
        sign = -sign
    return total


def _det_bareiss(n, rows):
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = -1
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    swap = i
                    break
            if swap < 0:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]
