# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of the exact integer kernel.

Algorithmically identical to ``_pycore`` (same pivot rules, same Bland
tie-breaking, same dedup), with typed index loops.  Numbers stay Python
ints, so arithmetic remains arbitrary precision and exact; the speedup
comes from removing interpreter overhead in the inner loops.
"""

from math import gcd

IMPL = "cython"

OPTIMAL = 0
INFEASIBLE = 1
UNBOUNDED = 2


def mat_rank(rows):
    """Rank of an integer matrix, by fraction-free (Bareiss) elimination."""
    cdef Py_ssize_t nr, nc, rank, col, i, j, piv_row
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    for col in range(nc):
        piv_row = -1
        for i in range(rank, nr):
            if m[i][col] != 0:
                piv_row = i
                break
        if piv_row < 0:
            continue
        m[rank], m[piv_row] = m[piv_row], m[rank]
        piv = m[rank][col]
        for i in range(rank + 1, nr):
            row_i = m[i]
            row_r = m[rank]
            f = row_i[col]
            for j in range(col + 1, nc):
                row_i[j] = (row_i[j] * piv - f * row_r[j]) // prev
            row_i[col] = 0
        prev = piv
        rank += 1
        if rank == nr:
            break
    return rank


def mat_det(rows):
    """Determinant of a square integer matrix (Bareiss, exact)."""
    cdef Py_ssize_t n, col, i, j, piv_row
    cdef int sign = 1
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    prev = 1
    for col in range(n):
        piv_row = -1
        for i in range(col, n):
            if m[i][col] != 0:
                piv_row = i
                break
        if piv_row < 0:
            return 0
        if piv_row != col:
            m[col], m[piv_row] = m[piv_row], m[col]
            sign = -sign
        piv = m[col][col]
        for i in range(col + 1, n):
            row_i = m[i]
            row_c = m[col]
            f = row_i[col]
            for j in range(col + 1, n):
                row_i[j] = (row_i[j] * piv - f * row_c[j]) // prev
            row_i[col] = 0
        prev = piv
    res = m[n - 1][n - 1]
    if sign < 0:
        res = -res
    return res


def solve_square(rows, rhs):
    """Solve an n x n integer system exactly via Cramer's rule."""
    cdef Py_ssize_t n, i, j
    n = len(rows)
    den = mat_det(rows)
    if den == 0:
        return None
    nums = []
    for j in range(n):
        col_swapped = [list(rows[i][:j]) + [rhs[i]] + list(rows[i][j + 1:]) for i in range(n)]
        nums.append(mat_det(col_swapped))
    return den, nums


cdef _pivot(list tab, list basis, Py_ssize_t p, Py_ssize_t q, den):
    cdef Py_ssize_t i, j, width, nrows
    piv = tab[p][q]
    row_p = tab[p]
    width = len(row_p)
    nrows = len(tab)
    for i in range(nrows):
        if i == p:
            continue
        row = tab[i]
        f = row[q]
        if f == 0:
            if den != piv:
                for j in range(width):
                    row[j] = (row[j] * piv) // den
            continue
        for j in range(width):
            row[j] = (row[j] * piv - f * row_p[j]) // den
    if basis is not None:
        basis[p] = q
    return piv


cdef _simplex_loop(list tab, list basis, den, Py_ssize_t allowed_hi, Py_ssize_t rhs_col):
    cdef Py_ssize_t m, j, i, enter, best
    cdef int s
    m = len(tab) - 1
    obj = tab[m]
    while True:
        s = 1 if den > 0 else -1
        enter = -1
        for j in range(allowed_hi):
            if obj[j] * s > 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL, den
        best = -1
        best_num = 0
        best_den = 0
        for i in range(m):
            d = tab[i][enter] * s
            if d <= 0:
                continue
            a = tab[i][rhs_col] * s
            if best < 0 or a * best_den < best_num * d or (
                a * best_den == best_num * d and basis[i] < basis[best]
            ):
                best = i
                best_num = a
                best_den = d
        if best < 0:
            return UNBOUNDED, den
        den = _pivot(tab, basis, best, enter, den)


def lp_standard(a_rows, b, c):
    """Maximize c.x subject to a_rows @ x = b, x >= 0, all data integer.

    Returns (status, xnums, xden); see the reference kernel for semantics.
    """
    cdef Py_ssize_t m, nstruct, ncols, rhs_col, i, j, p, enter, bi
    m = len(a_rows)
    nstruct = len(c)
    ncols = nstruct + m + 1
    rhs_col = nstruct + m
    tab = []
    for i in range(m):
        if b[i] < 0:
            row = [-v for v in a_rows[i]]
            rhs = -b[i]
        else:
            row = list(a_rows[i])
            rhs = b[i]
        full = row + [0] * m + [rhs]
        full[nstruct + i] = 1
        tab.append(full)
    basis = [nstruct + i for i in range(m)]
    den = 1

    # objective rows store (reduced costs | -constant); the sign flip keeps
    # them consistent under the same row operations as constraint rows
    obj = [0] * ncols
    for j in range(nstruct):
        acc = 0
        for i in range(m):
            acc += tab[i][j]
        obj[j] = acc
    tot = 0
    for i in range(m):
        tot += tab[i][rhs_col]
    obj[rhs_col] = tot
    tab.append(obj)
    status, den = _simplex_loop(tab, basis, den, nstruct, rhs_col)
    if tab[m][rhs_col] != 0:
        return INFEASIBLE, [], 1

    p = 0
    while p < len(basis):
        if basis[p] < nstruct:
            p += 1
            continue
        enter = -1
        for j in range(nstruct):
            if tab[p][j] != 0:
                enter = j
                break
        if enter < 0:
            del tab[p]
            del basis[p]
        else:
            den = _pivot(tab, basis, p, enter, den)
            p += 1
    m = len(basis)

    obj = tab[m]
    for j in range(ncols):
        acc = c[j] * den if j < nstruct else 0
        for i in range(m):
            bi = basis[i]
            if bi < nstruct and c[bi] != 0:
                acc -= c[bi] * tab[i][j]
        obj[j] = acc
    accv = 0
    for i in range(m):
        if basis[i] < nstruct:
            accv += c[basis[i]] * tab[i][rhs_col]
    obj[rhs_col] = -accv
    status, den = _simplex_loop(tab, basis, den, nstruct, rhs_col)
    if status == UNBOUNDED:
        return UNBOUNDED, [], 1
    cdef int s = 1 if den > 0 else -1
    xnums = [0] * nstruct
    for i in range(m):
        if basis[i] < nstruct:
            xnums[basis[i]] = tab[i][rhs_col] * s
    return OPTIMAL, xnums, den * s


cdef list _reduce_row(row_in, list ech):
    cdef Py_ssize_t j, n
    row = list(row_in)
    n = len(row)
    for pivcol, pivrow in ech:
        f = row[pivcol]
        if f == 0:
            continue
        piv = pivrow[pivcol]
        for j in range(n):
            row[j] = row[j] * piv - f * pivrow[j]
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        row = [v // g for v in row]
    return row


cdef Py_ssize_t _first_support(list row, Py_ssize_t n):
    cdef Py_ssize_t j
    for j in range(n):
        if row[j] != 0:
            return j
    return -1


def vertex_enum(n_in, eq_rows, eq_rhs, ineq_rows, ineq_rhs):
    """All vertices of {x : eq x = eq_rhs, ineq x <= ineq_rhs}, exact.

    Same search and output contract as the reference kernel.
    """
    cdef Py_ssize_t n = n_in
    cdef Py_ssize_t idx, col, i, j, nineq, neq
    ech = []
    pivots_orig = []
    neq = len(eq_rows)
    for idx in range(neq):
        aug = list(eq_rows[idx]) + [eq_rhs[idx]]
        red = _reduce_row(aug, ech)
        col = _first_support(red, n)
        if col < 0:
            if red[n] != 0:
                return []
            continue
        ech.append((col, red))
        pivots_orig.append((list(eq_rows[idx]), eq_rhs[idx]))
    found = {}
    nineq = len(ineq_rows)
    ineq_aug = [list(ineq_rows[i]) + [ineq_rhs[i]] for i in range(nineq)]

    def leaf():
        cdef Py_ssize_t i2, j2
        rows = [co for co, _ in pivots_orig]
        rhs = [r for _, r in pivots_orig]
        sol = solve_square(rows, rhs)
        if sol is None:
            return
        den, nums = sol
        if den < 0:
            den = -den
            nums = [-v for v in nums]
        for i2 in range(nineq):
            acc = 0
            irow = ineq_rows[i2]
            for j2 in range(n):
                acc += irow[j2] * nums[j2]
            if acc > ineq_rhs[i2] * den:
                return
        for i2 in range(neq):
            acc = 0
            erow = eq_rows[i2]
            for j2 in range(n):
                acc += erow[j2] * nums[j2]
            if acc != eq_rhs[i2] * den:
                return
        g = den
        for v in nums:
            g = gcd(g, v)
        found[(den // g, tuple(v // g for v in nums))] = True

    def search(Py_ssize_t start):
        cdef Py_ssize_t idx2, col2
        if len(ech) == n:
            leaf()
            return
        for idx2 in range(start, nineq):
            red = _reduce_row(ineq_aug[idx2], ech)
            col2 = _first_support(red, n)
            if col2 < 0:
                continue
            ech.append((col2, red))
            pivots_orig.append((list(ineq_rows[idx2]), ineq_rhs[idx2]))
            search(idx2 + 1)
            ech.pop()
            pivots_orig.pop()

    search(0)
    return list(found.keys())
