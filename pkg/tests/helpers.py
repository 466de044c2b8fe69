"""Independent oracles used to derive and pin expected test values.

Everything here deliberately avoids the code paths it is used to check:
vertex enumeration is a plain unpruned subset scan with Fraction Gaussian
elimination, LP optima come from evaluating objectives on those vertices,
volumes come from Ehrhart finite differences of lattice-point counts, and
matroid-polytope feasibility comes from the submodular min formula.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

from whsa.geometry import HPolytope, lattice_points, dilate


def hyper(r: int, n: int) -> HPolytope:
    """Hypersimplex Delta(r, n) built directly from its defining rows."""
    eqs = [((1,) * n, r)]
    ineqs = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        ineqs.append((tuple(e), 1))
        ineqs.append((tuple(-v for v in e), 0))
    return HPolytope(n, eqs, ineqs)


def hypersimplex_vertices_brute(r: int, n: int):
    """The 0/1 indicator vectors with exactly r ones, sorted."""
    out = []
    for support in itertools.combinations(range(n), r):
        v = [Fraction(0)] * n
        for i in support:
            v[i] = Fraction(1)
        out.append(tuple(v))
    return sorted(out)


def _gauss_solve(rows, rhs):
    """Fraction Gaussian elimination; None when singular."""
    n = len(rows)
    m = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [v / pv for v in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [v - f * w for v, w in zip(m[i], m[col])]
    return tuple(m[i][n] for i in range(n))


def brute_vertices(poly: HPolytope):
    """Unpruned tight-subset vertex enumeration (oracle, small cases only)."""
    n = poly.ambient_dim
    cons = [(tuple(Fraction(c) for c in a), Fraction(b)) for a, b in
            list(poly.equalities) + list(poly.inequalities)]
    neq = len(poly.equalities)
    seen = set()
    for subset in itertools.combinations(range(len(cons)), n):
        rows = [cons[i][0] for i in subset]
        rhs = [cons[i][1] for i in subset]
        x = _gauss_solve(rows, rhs)
        if x is None:
            continue
        ok = all(sum(a * v for a, v in zip(co, x)) == c for co, c in
                 [cons[i] for i in range(neq)])
        if ok:
            ok = all(sum(a * v for a, v in zip(co, x)) <= c for co, c in cons[neq:])
        if ok:
            seen.add(x)
    return sorted(seen)


def brute_lp_max(poly: HPolytope, objective):
    """Max of a linear functional over the brute-force vertex list."""
    objective = [Fraction(v) for v in objective]
    best = None
    for v in brute_vertices(poly):
        val = sum(a * x for a, x in zip(objective, v))
        if best is None or val > best:
            best = val
    return best


def vertex_dim(points):
    """Affine dimension of a point set, by Fraction elimination."""
    pts = [tuple(Fraction(v) for v in p) for p in points]
    if not pts:
        return -1
    base = pts[0]
    rows = [[v - b for v, b in zip(p, base)] for p in pts[1:]]
    # row-reduce
    rank = 0
    ncols = len(base)
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [v / pv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def ehrhart_volume(poly: HPolytope) -> Fraction:
    """Normalized volume of a lattice polytope by Ehrhart finite differences.

    nvol = d-th finite difference at 0 of t -> #(tP ∩ Z^n), which only uses
    lattice-point scans, never the triangulation code under test.
    """
    from whsa.geometry import vertices

    verts = vertices(poly)
    assert verts, "oracle needs a nonempty polytope"
    for v in verts:
        assert all(x.denominator == 1 for x in v), "oracle needs a lattice polytope"
    d = vertex_dim(verts)
    if d == 0:
        return Fraction(1)
    counts = [1]  # L(0)
    for t in range(1, d + 1):
        counts.append(len(lattice_points(dilate(poly, t))))
    total = 0
    for k in range(d + 1):
        total += (-1) ** (d - k) * comb(d, k) * counts[k]
    return Fraction(total)


def submodular_meets_weighted(matroid, weight_b) -> bool:
    """P_M ∩ Delta_w nonempty, by min over subsets of rk(I) + b(complement).

    Polymatroid-intersection criterion; independent of the LP route.
    """
    n = matroid.n
    b = [Fraction(v) for v in weight_b]
    r = matroid.r
    for mask in range(1 << n):
        subset = [i + 1 for i in range(n) if mask >> i & 1]
        rest = sum(b[i] for i in range(n) if not mask >> i & 1)
        if matroid.rank(subset) + rest < r:
            return False
    return True
