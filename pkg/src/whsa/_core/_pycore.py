"""Pure-Python exact integer kernels.

Reference implementation of the hot numerical loops: fraction-free rank and
determinant, an exact two-phase simplex with integer pivoting, and vertex
enumeration by tight-subset search.  A compiled twin of this module lives in
``_ccore.pyx``; both must stay algorithmically identical (same pivot rules,
same tie-breaking) so either one can back the public API.

Everything here works on Python ints, which are arbitrary precision, so no
overflow or rounding can occur.  Rational data is cleared to integers by the
callers in :mod:`whsa.geometry`.
"""

from math import gcd

IMPL = "python"

OPTIMAL = 0
INFEASIBLE = 1
UNBOUNDED = 2


def mat_rank(rows):
    """Rank of an integer matrix, by fraction-free (Bareiss) elimination."""
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
            f = m[i][col]
            row_i = m[i]
            row_r = m[rank]
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
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
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
            f = m[i][col]
            row_i = m[i]
            row_c = m[col]
            for j in range(col + 1, n):
                row_i[j] = (row_i[j] * piv - f * row_c[j]) // prev
            row_i[col] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def solve_square(rows, rhs):
    """Solve an n x n integer system exactly via Cramer's rule.

    Returns ``(den, nums)`` with ``x_j = nums[j]/den`` and ``den != 0``,
    or ``None`` when the matrix is singular.
    """
    n = len(rows)
    den = mat_det(rows)
    if den == 0:
        return None
    nums = []
    for j in range(n):
        col_swapped = [list(rows[i][:j]) + [rhs[i]] + list(rows[i][j + 1:]) for i in range(n)]
        nums.append(mat_det(col_swapped))
    return den, nums


def _pivot(tab, basis, p, q, den):
    """Integer Gauss-Jordan pivot on (p, q); returns the new denominator.

    Tableau semantics: real entry = tab[i][j] / den, where den may carry
    either sign.  Row p is left untouched; the pivot element becomes the
    new denominator.  Divisions are exact (entries are minors of the
    original data).
    """
    piv = tab[p][q]
    row_p = tab[p]
    width = len(row_p)
    for i in range(len(tab)):
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


def _simplex_loop(tab, basis, den, allowed_hi, rhs_col):
    """Run Bland-rule pivots until optimal or unbounded.

    ``tab`` has the objective row last.  Columns < allowed_hi may enter.
    Returns (status, den).
    """
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
        # ratio test: smallest T[i][rhs]/T[i][enter] over rows with positive
        # real pivot entry; Bland tie-break on the basis variable index
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

    Exact two-phase simplex with integer pivoting and Bland's rule.
    Returns (status, xnums, xden) where the solution is xnums[j]/xden with
    xden > 0 (xnums/xden meaningful only when status == OPTIMAL).
    """
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

    # phase 1: maximize -(sum of artificials), expressed in the nonbasics.
    # The objective row stores (reduced costs | -constant), the sign flip
    # keeping it consistent under the same row operations as constraints.
    obj = [0] * ncols
    for j in range(nstruct):
        obj[j] = sum(tab[i][j] for i in range(m))
    obj[rhs_col] = sum(tab[i][rhs_col] for i in range(m))
    tab.append(obj)
    status, den = _simplex_loop(tab, basis, den, nstruct, rhs_col)
    if tab[m][rhs_col] != 0:
        return INFEASIBLE, [], 1

    # drive leftover artificials out of the basis (all are at value zero);
    # rows with no structural support are redundant and dropped
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

    # phase 2 objective, rebuilt in the current basis
    obj = tab[m]
    for j in range(ncols):
        acc = c[j] * den if j < nstruct else 0
        for i in range(m):
            bi = basis[i]
            if bi < nstruct and c[bi] != 0:
                acc -= c[bi] * tab[i][j]
        obj[j] = acc
    obj[rhs_col] = -sum(c[basis[i]] * tab[i][rhs_col] for i in range(m) if basis[i] < nstruct)
    status, den = _simplex_loop(tab, basis, den, nstruct, rhs_col)
    if status == UNBOUNDED:
        return UNBOUNDED, [], 1
    s = 1 if den > 0 else -1
    xnums = [0] * nstruct
    for i in range(m):
        if basis[i] < nstruct:
            xnums[basis[i]] = tab[i][rhs_col] * s
    return OPTIMAL, xnums, den * s


def _reduce_row(row, ech):
    """Eliminate a (coeffs + rhs) row against echelon rows, fraction-free."""
    row = list(row)
    for pivcol, pivrow in ech:
        f = row[pivcol]
        if f == 0:
            continue
        piv = pivrow[pivcol]
        for j in range(len(row)):
            row[j] = row[j] * piv - f * pivrow[j]
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        row = [v // g for v in row]
    return row


def _first_support(row, n):
    for j in range(n):
        if row[j] != 0:
            return j
    return -1


def vertex_enum(n, eq_rows, eq_rhs, ineq_rows, ineq_rhs):
    """All vertices of {x : eq x = eq_rhs, ineq x <= ineq_rhs}, exact.

    Tight-subset search: extend an echelon of equality rows with subsets of
    inequality rows that grow the rank at every step, solve each full-rank
    subset, and keep the solutions satisfying every constraint.  The caller
    guarantees boundedness and the ambient-dimension cap.

    Returns an unordered list of distinct (den, nums) pairs, den > 0 and
    gcd-reduced.
    """
    ech = []
    pivots_orig = []  # original (coeffs, rhs) of the rows backing each pivot
    for idx in range(len(eq_rows)):
        aug = list(eq_rows[idx]) + [eq_rhs[idx]]
        red = _reduce_row(aug, ech)
        col = _first_support(red, n)
        if col < 0:
            if red[n] != 0:
                return []  # inconsistent equalities: empty polytope
            continue
        ech.append((col, red))
        pivots_orig.append((list(eq_rows[idx]), eq_rhs[idx]))
    found = {}
    nineq = len(ineq_rows)
    ineq_aug = [list(ineq_rows[i]) + [ineq_rhs[i]] for i in range(nineq)]

    def leaf():
        rows = [co for co, _ in pivots_orig]
        rhs = [r for _, r in pivots_orig]
        sol = solve_square(rows, rhs)
        if sol is None:
            return
        den, nums = sol
        if den < 0:
            den = -den
            nums = [-v for v in nums]
        for i in range(nineq):
            acc = 0
            irow = ineq_rows[i]
            for j in range(n):
                acc += irow[j] * nums[j]
            if acc > ineq_rhs[i] * den:
                return
        for i in range(len(eq_rows)):
            acc = 0
            erow = eq_rows[i]
            for j in range(n):
                acc += erow[j] * nums[j]
            if acc != eq_rhs[i] * den:
                return
        g = den
        for v in nums:
            g = gcd(g, v)
        found[(den // g, tuple(v // g for v in nums))] = True

    def search(start):
        if len(ech) == n:
            leaf()
            return
        for idx in range(start, nineq):
            red = _reduce_row(ineq_aug[idx], ech)
            col = _first_support(red, n)
            if col < 0:
                continue
            ech.append((col, red))
            pivots_orig.append((list(ineq_rows[idx]), ineq_rhs[idx]))
            search(idx + 1)
            ech.pop()
            pivots_orig.pop()

    search(0)
    return list(found.keys())
