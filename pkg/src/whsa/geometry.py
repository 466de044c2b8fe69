"""Exact rational polytopes in half-space form, and the predicates on them.

Everything is built on :class:`fractions.Fraction`; there is no floating
point anywhere, so equalities of volumes, optima and point sets are exact.
The half-space representation ``HPolytope`` is the universal currency:
hypersimplices, matroid polytopes, weighted faces and moment-polytope lifts
are all instances.

The numeric inner loops (rank, determinant, simplex pivoting, tight-subset
vertex search) are delegated to the integer kernel in :mod:`whsa._core`,
which clears denominators once per constraint row.

Enumeration operations (vertices, lattice points, volume) are capped at
ambient dimension ``AMBIENT_CAP``; linear programming is uncapped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd, lcm

from . import _core
from .errors import CapExceededError

AMBIENT_CAP = 16
LATTICE_SCAN_CAP = 10**7

Constraint = tuple[tuple[Fraction, ...], Fraction]


def as_fraction(value) -> Fraction:
    """Coerce ints, strings like ``"9/10"`` and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def _coerce_constraints(rows, dim):
    out = []
    for coeffs, rhs in rows:
        coeffs = tuple(as_fraction(c) for c in coeffs)
        if len(coeffs) != dim:
            raise ValueError(f"constraint has {len(coeffs)} coefficients, ambient dim {dim}")
        out.append((coeffs, as_fraction(rhs)))
    return tuple(out)


@dataclass(frozen=True)
class HPolytope:
    """Rational polyhedron {x : a.x = c for equalities, a.x <= c for inequalities}.

    Immutable and hashable; all coefficients are Fractions.  Boundedness is
    not an invariant of the type — operations that need it check it by LP.
    """

    ambient_dim: int
    equalities: tuple[Constraint, ...] = ()
    inequalities: tuple[Constraint, ...] = ()

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient_dim must be >= 1")
        object.__setattr__(self, "equalities", _coerce_constraints(self.equalities, self.ambient_dim))
        object.__setattr__(self, "inequalities", _coerce_constraints(self.inequalities, self.ambient_dim))

    def __repr__(self):
        return (f"HPolytope(dim={self.ambient_dim}, "
                f"{len(self.equalities)} eq, {len(self.inequalities)} ineq)")


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    optimum: Fraction | None = None
    witness: tuple[Fraction, ...] | None = None


@dataclass(frozen=True)
class AffineHull:
    dim: int
    equalities: tuple[Constraint, ...]


def _dot(a, x):
    return sum(ai * xi for ai, xi in zip(a, x))


def _int_row(coeffs, rhs):
    """Clear denominators: returns (int coeffs, int rhs) defining the same
    equation/inequality (multiplier is positive, so direction is kept)."""
    mult = lcm(*(c.denominator for c in coeffs), rhs.denominator)
    return [int(c * mult) for c in coeffs], int(rhs * mult)


def _int_rows(constraints):
    rows, rhs = [], []
    for coeffs, c in constraints:
        r, b = _int_row(coeffs, c)
        rows.append(r)
        rhs.append(b)
    return rows, rhs


def lp_solve(poly: HPolytope, objective, sense: str = "max") -> LPResult:
    """Exact linear program over the polyhedron.

    Maximizes (or minimizes) ``objective . x``.  The witness satisfies every
    constraint exactly and attains the optimum exactly.
    """
    if sense not in ("max", "min"):
        raise ValueError("sense must be 'max' or 'min'")
    n = poly.ambient_dim
    objective = tuple(as_fraction(c) for c in objective)
    if len(objective) != n:
        raise ValueError("objective length does not match ambient dimension")

    n_ineq = len(poly.inequalities)
    nvars = 2 * n + n_ineq  # x = u - v plus one slack per inequality
    a_rows, b = [], []
    for coeffs, c in poly.equalities:
        ic, ib = _int_row(coeffs, c)
        a_rows.append(ic + [-v for v in ic] + [0] * n_ineq)
        b.append(ib)
    for k, (coeffs, c) in enumerate(poly.inequalities):
        ic, ib = _int_row(coeffs, c)
        slack = [0] * n_ineq
        slack[k] = 1
        a_rows.append(ic + [-v for v in ic] + slack)
        b.append(ib)

    mult = lcm(*(c.denominator for c in objective), 1)
    io = [int(c * mult) for c in objective]
    if sense == "min":
        io = [-v for v in io]
    cvec = io + [-v for v in io] + [0] * n_ineq

    status, xnums, xden = _core.lp_standard(a_rows, b, cvec)
    if status == _core.INFEASIBLE:
        return LPResult("infeasible")
    if status == _core.UNBOUNDED:
        return LPResult("unbounded")
    witness = tuple(Fraction(xnums[j] - xnums[n + j], xden) for j in range(n))
    return LPResult("optimal", _dot(objective, witness), witness)


def contains(poly: HPolytope, x) -> bool:
    """Exact membership test."""
    x = tuple(as_fraction(v) for v in x)
    if len(x) != poly.ambient_dim:
        raise ValueError("point has wrong dimension")
    return all(_dot(a, x) == c for a, c in poly.equalities) and all(
        _dot(a, x) <= c for a, c in poly.inequalities
    )


def intersect(p: HPolytope, q: HPolytope) -> HPolytope:
    """Constraint union of two polytopes in the same ambient space."""
    if p.ambient_dim != q.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return HPolytope(p.ambient_dim, p.equalities + q.equalities,
                     p.inequalities + q.inequalities)


def is_empty(poly: HPolytope) -> bool:
    zero = (Fraction(0),) * poly.ambient_dim
    return lp_solve(poly, zero).status == "infeasible"


@lru_cache(maxsize=16384)
def bounding_box(poly: HPolytope):
    """Per-coordinate exact (min, max) bounds, or None if unbounded/empty.

    Returns ("empty" | "unbounded" | "ok", bounds).
    """
    lo, hi = [], []
    n = poly.ambient_dim
    for j in range(n):
        e = [Fraction(0)] * n
        e[j] = Fraction(1)
        top = lp_solve(poly, e, "max")
        if top.status == "infeasible":
            return "empty", None
        bot = lp_solve(poly, e, "min")
        if top.status == "unbounded" or bot.status == "unbounded":
            return "unbounded", None
        hi.append(top.optimum)
        lo.append(bot.optimum)
    return "ok", (tuple(lo), tuple(hi))


def _check_enum_cap(poly):
    if poly.ambient_dim > AMBIENT_CAP:
        raise CapExceededError(
            f"ambient dimension {poly.ambient_dim} exceeds enumeration cap {AMBIENT_CAP}")


@lru_cache(maxsize=16384)
def vertices(poly: HPolytope) -> tuple[tuple[Fraction, ...], ...]:
    """All extreme points, deduplicated and ordered lexicographically.

    Tight-subset enumeration in the integer kernel; requires boundedness.
    """
    _check_enum_cap(poly)
    state, _ = bounding_box(poly)
    if state == "empty":
        return ()
    if state == "unbounded":
        raise ValueError("vertex enumeration requires a bounded polytope")
    eq_rows, eq_rhs = _int_rows(poly.equalities)
    iq_rows, iq_rhs = _int_rows(poly.inequalities)
    raw = _core.vertex_enum(poly.ambient_dim, eq_rows, eq_rhs, iq_rows, iq_rhs)
    pts = [tuple(Fraction(v, den) for v in nums) for den, nums in raw]
    pts.sort()
    return tuple(pts)


def lattice_points(poly: HPolytope) -> list[tuple[Fraction, ...]]:
    """All integer points, by bounding-box scan with exact filtering."""
    _check_enum_cap(poly)
    state, box = bounding_box(poly)
    if state == "empty":
        return []
    if state == "unbounded":
        raise ValueError("lattice point scan requires a bounded polytope")
    lo, hi = box
    ranges = []
    cells = 1
    for a, b in zip(lo, hi):
        r = range(ceil(a), floor(b) + 1)
        cells *= len(r)
        if cells > LATTICE_SCAN_CAP:
            raise CapExceededError("bounding box too large for lattice scan")
        ranges.append(r)
    eq_rows, eq_rhs = _int_rows(poly.equalities)
    iq_rows, iq_rhs = _int_rows(poly.inequalities)
    out = []
    for pt in itertools.product(*ranges):
        ok = all(sum(a * x for a, x in zip(row, pt)) == c for row, c in zip(eq_rows, eq_rhs))
        if ok:
            ok = all(sum(a * x for a, x in zip(row, pt)) <= c for row, c in zip(iq_rows, iq_rhs))
        if ok:
            out.append(tuple(Fraction(v) for v in pt))
    return out


def dilate(poly: HPolytope, factor) -> HPolytope:
    """The dilation factor * poly (right-hand sides scaled)."""
    f = as_fraction(factor)
    if f <= 0:
        raise ValueError("dilation factor must be positive")
    return HPolytope(
        poly.ambient_dim,
        tuple((a, c * f) for a, c in poly.equalities),
        tuple((a, c * f) for a, c in poly.inequalities),
    )


# ---------------------------------------------------------------------------
# relative interiors and affine hulls
# ---------------------------------------------------------------------------

def _slack_lp(n, eq_cons, strict_cons, closed_cons):
    """Maximize a common slack t (capped at 1) for the strict constraints.

    Builds an LP in (x, t).  Returns the LPResult of the lifted program.
    """
    eqs = [(tuple(a) + (Fraction(0),), c) for a, c in eq_cons]
    ineqs = [(tuple(a) + (Fraction(1),), c) for a, c in strict_cons]
    ineqs += [(tuple(a) + (Fraction(0),), c) for a, c in closed_cons]
    tcap = (Fraction(0),) * n + (Fraction(1),)
    ineqs.append((tcap, Fraction(1)))
    lifted = HPolytope(n + 1, eqs, ineqs)
    obj = (Fraction(0),) * n + (Fraction(1),)
    return lp_solve(lifted, obj, "max")


@lru_cache(maxsize=16384)
def _relint_data(poly: HPolytope):
    """None when the polytope is empty; otherwise (relint point, implicit set).

    ``implicit`` is the frozenset of inequality indices that hold with
    equality on the whole polytope.  Found by repeatedly maximizing a
    common slack and demoting the inequalities that cannot be slack.
    """
    n = poly.ambient_dim
    if is_empty(poly):
        return None
    implicit: set[int] = set()
    while True:
        eqs = list(poly.equalities) + [poly.inequalities[i] for i in sorted(implicit)]
        active = [i for i in range(len(poly.inequalities)) if i not in implicit]
        res = _slack_lp(n, eqs, [poly.inequalities[i] for i in active], [])
        if res.status == "infeasible":
            return None  # implicit set inconsistent: cannot happen for nonempty poly
        if res.optimum > 0:
            point = res.witness[:n]
            return point, frozenset(implicit)
        # t* == 0: some active inequality is tight on the whole polytope
        point = res.witness[:n]
        newly = []
        for i in active:
            a, c = poly.inequalities[i]
            if _dot(a, point) != c:
                continue
            low = lp_solve(poly, a, "min")
            if low.status == "optimal" and low.optimum == c:
                newly.append(i)
        if not newly:
            raise AssertionError("zero max slack but no implicit equality found")
        implicit.update(newly)


def relint_point(poly: HPolytope):
    """A point in the relative interior, or None if the polytope is empty.

    The relative interior of a nonempty polytope is nonempty, so a point is
    always returned in the nonempty case.
    """
    data = _relint_data(poly)
    return None if data is None else data[0]


def _max_independent(constraints, n):
    """Greedy maximal linearly independent subset of constraint rows."""
    chosen = []
    rows = []
    rank = 0
    for con in constraints:
        r, _ = _int_row(con[0], con[1])
        trial = rows + [r]
        new_rank = _core.mat_rank(trial)
        if new_rank > rank:
            chosen.append(con)
            rows = trial
            rank = new_rank
        if rank == n:
            break
    return chosen, rank


def affine_hull(poly: HPolytope):
    """Affine hull as (dim, maximal independent tight equalities), or None.

    The equalities returned are stated equalities plus the inequalities that
    are tight on the whole polytope, thinned to an independent subset.
    """
    data = _relint_data(poly)
    if data is None:
        return None
    _, implicit = data
    cons = list(poly.equalities) + [poly.inequalities[i] for i in sorted(implicit)]
    chosen, rank = _max_independent(cons, poly.ambient_dim)
    return AffineHull(poly.ambient_dim - rank, tuple(chosen))


def minimal_face(poly: HPolytope, x) -> HPolytope:
    """The smallest face of poly containing x: tighten all constraints active at x."""
    x = tuple(as_fraction(v) for v in x)
    if not contains(poly, x):
        raise ValueError("point is not in the polytope")
    tight = tuple(con for con in poly.inequalities if _dot(con[0], x) == con[1])
    slack = tuple(con for con in poly.inequalities if _dot(con[0], x) != con[1])
    return HPolytope(poly.ambient_dim, poly.equalities + tight, slack)


def strict_meet(p: HPolytope, q: HPolytope, *, strict_p: bool = True,
                strict_q: bool = True):
    """A point of (relint p) ∩ (relint q), or None when the sets miss.

    With ``strict_q=False`` the second polytope participates closed, giving
    relint(p) ∩ q.  Strictness is relative: implicit equalities of a strict
    participant are honoured as equalities, the remaining inequalities must
    carry positive slack.
    """
    if p.ambient_dim != q.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    n = p.ambient_dim
    eqs, stricts, closed = [], [], []
    for poly, strict in ((p, strict_p), (q, strict_q)):
        if strict:
            data = _relint_data(poly)
            if data is None:
                return None
            _, implicit = data
            eqs.extend(poly.equalities)
            eqs.extend(poly.inequalities[i] for i in sorted(implicit))
            stricts.extend(poly.inequalities[i]
                           for i in range(len(poly.inequalities)) if i not in implicit)
        else:
            eqs.extend(poly.equalities)
            closed.extend(poly.inequalities)
    res = _slack_lp(n, eqs, stricts, closed)
    if res.status != "optimal" or res.optimum <= 0:
        return None
    return res.witness[:n]


def polytopes_equal(p: HPolytope, q: HPolytope) -> bool:
    """Point-set equality of bounded polytopes, by mutual vertex containment."""
    if p.ambient_dim != q.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    vp, vq = vertices(p), vertices(q)
    return all(contains(q, v) for v in vp) and all(contains(p, v) for v in vq)


# ---------------------------------------------------------------------------
# normalized volume
# ---------------------------------------------------------------------------

def _integer_kernel_basis(rows, n):
    """Basis of {x in Z^n : rows . x = 0} via unimodular column reduction.

    The integer kernel of an integer matrix is saturated, so the basis spans
    the full direction lattice of the solution space.
    """
    h = [list(r) for r in rows]
    m = len(h)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_op(j, k, a, b, c, d):
        # (col_j, col_k) <- (a col_j + b col_k, c col_j + d col_k)
        for mat in (h, u):
            for row in mat:
                x, y = row[j], row[k]
                row[j] = a * x + b * y
                row[k] = c * x + d * y

    pivot_cols = []
    r = 0
    for i in range(m):
        # clear row i to a single pivot among the free columns
        free = [j for j in range(n) if j not in pivot_cols]
        nz = [j for j in free if h[i][j] != 0]
        while len(nz) > 1:
            nz.sort(key=lambda j: abs(h[i][j]))
            j0 = nz[0]
            for k in nz[1:]:
                qmul = h[i][k] // h[i][j0]
                col_op(k, j0, 1, -qmul, 0, 1)
            nz = [j for j in free if h[i][j] != 0]
        if nz:
            pivot_cols.append(nz[0])
            r += 1
    free = [j for j in range(n) if j not in pivot_cols]
    basis = []
    for j in free:
        vec = tuple(u[i][j] for i in range(n))
        basis.append(vec)
    return basis


def _fraction_solve(rows, rhs):
    """Solve a consistent square Fraction system by Gaussian elimination."""
    n = len(rows)
    m = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next(i for i in range(col, n) if m[i][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [v / pv for v in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [v - f * w for v, w in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]


def _fraction_det(rows):
    mults = []
    int_rows = []
    for row in rows:
        mult = lcm(*(v.denominator for v in row), 1)
        mults.append(mult)
        int_rows.append([int(v * mult) for v in row])
    d = _core.mat_det(int_rows)
    out = Fraction(d)
    for m in mults:
        out /= m
    return out


def normalized_volume(poly: HPolytope) -> Fraction:
    """Volume inside the affine hull, normalized to the direction lattice.

    A simplex whose edge vectors form a basis of Z^n ∩ (direction space of
    the hull) has volume 1; for polytopes in a hyperplane sum(x) = r this is
    the lattice {x in Z^n : sum(x) = 0} restricted to the hull.  Computed by
    a pulling triangulation of the face lattice with exact determinants, so
    it is additive over interior-disjoint pieces in a common hull.
    """
    _check_enum_cap(poly)
    verts = vertices(poly)  # raises on unbounded input
    if not verts:
        return Fraction(0)
    hull = affine_hull(poly)
    d = hull.dim
    if d == 0:
        return Fraction(1)

    eq_rows = [_int_row(a, c)[0] for a, c in hull.equalities]
    basis = _integer_kernel_basis(eq_rows, poly.ambient_dim)
    if len(basis) != d:
        raise AssertionError("direction lattice rank disagrees with hull dimension")
    # coordinates of each vertex in the lattice basis (origin at vertex 0)
    gmat = [[Fraction(basis[k][i]) for k in range(d)] for i in range(poly.ambient_dim)]
    sel, rank = _sel_rows(gmat, d)
    origin = verts[0]
    ycoords = []
    for v in verts:
        diff = [v[i] - origin[i] for i in range(poly.ambient_dim)]
        y = _fraction_solve([gmat[i] for i in sel], [diff[i] for i in sel])
        ycoords.append(tuple(y))

    cons = list(poly.equalities) + list(poly.inequalities)
    dim_cache: dict[frozenset, int] = {}
    tri_cache: dict[frozenset, list] = {}

    def face_dim(wset):
        if wset not in dim_cache:
            pts = sorted(wset)
            base = ycoords[pts[0]]
            rows = []
            for i in pts[1:]:
                diff = [ycoords[i][k] - base[k] for k in range(d)]
                mult = lcm(*(v.denominator for v in diff), 1)
                rows.append([int(v * mult) for v in diff])
            dim_cache[wset] = _core.mat_rank(rows) if rows else 0
        return dim_cache[wset]

    def triangulate(wset):
        """Pulling triangulation of the face with vertex set wset."""
        if wset in tri_cache:
            return tri_cache[wset]
        e = face_dim(wset)
        pts = sorted(wset)
        if len(pts) == e + 1:
            tri_cache[wset] = [tuple(pts)]
            return tri_cache[wset]
        apex = pts[0]
        facets = set()
        for a, c in cons:
            sub = frozenset(i for i in wset if _dot(a, verts[i]) == c)
            if sub and sub != wset and apex not in sub and face_dim(sub) == e - 1:
                facets.add(sub)
        simplices = []
        for facet in sorted(facets, key=sorted):
            for s in triangulate(facet):
                simplices.append((apex,) + s)
        tri_cache[wset] = simplices
        return simplices

    total = Fraction(0)
    allset = frozenset(range(len(verts)))
    if face_dim(allset) != d:
        raise AssertionError("vertex span disagrees with hull dimension")
    for simplex in triangulate(allset):
        base = ycoords[simplex[0]]
        rows = [[ycoords[i][k] - base[k] for k in range(d)] for i in simplex[1:]]
        total += abs(_fraction_det(rows))
    return total


def _sel_rows(gmat, d):
    """Indices of d independent rows of a column-full-rank Fraction matrix."""
    sel = []
    int_rows = []
    rank = 0
    for i, row in enumerate(gmat):
        mult = lcm(*(v.denominator for v in row), 1)
        trial = int_rows + [[int(v * mult) for v in row]]
        r = _core.mat_rank(trial)
        if r > rank:
            sel.append(i)
            int_rows = trial
            rank = r
        if rank == d:
            break
    return sel, rank
