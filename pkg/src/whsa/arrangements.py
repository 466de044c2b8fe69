"""Weighted hyperplane arrangements on P^(r-1): singularity and GIT tests.

An arrangement is an r x n rational matrix whose columns are the linear
forms z_i cutting the divisors B_i; the derived matroid records every
incidence.  Points are given in V-coordinates (length r, not all zero) and
all predicates are invariant under rescaling a point.

The log canonical test bounds sum_{i in I} b_i by the codimension of the
corresponding intersection (the matroid rank of I) over every index set
with nonempty intersection; klt is the strict variant.  Semistability of a
point p is the exact LP feasibility of P_V ∩ Δ_w^p, stability adds a
relative-interior meeting plus a direction-span condition, and both are
tied to the singularity tests by the lc/klt equivalences that the
acceptance suite exercises at scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import (
    HPolytope,
    affine_hull,
    as_fraction,
    contains,
    intersect,
    lp_solve,
    strict_meet,
    _int_row,
    _integer_kernel_basis,
)
from . import _core
from .matroids import Matroid, matroid_from_matrix, matroid_polytope_hrep, _unmask
from .weights import Weight, in_weight_domain, weighted_hypersimplex


@dataclass(frozen=True)
class Arrangement:
    r: int
    n: int
    forms: tuple[tuple[Fraction, ...], ...]  # r rows, column i is z_i
    matroid: Matroid

    def column(self, i: int) -> tuple[Fraction, ...]:
        return tuple(self.forms[k][i - 1] for k in range(self.r))


@dataclass(frozen=True)
class ProjPoint:
    """A point of P(V) in V-coordinates; scale-invariant semantics."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_fraction(v) for v in self.coords))
        if all(v == 0 for v in self.coords):
            raise ValueError("projective point cannot be the zero vector")


@dataclass(frozen=True)
class GitVerdict:
    semistable: bool
    stable: bool
    vanishing_set: frozenset[int]
    face: HPolytope
    semistable_witness: tuple[Fraction, ...] | None = None
    stable_witness: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.stable and not self.semistable:
            raise AssertionError("stable verdict without semistability")


def arrangement_from_matrix(rows) -> Arrangement:
    """Build an arrangement; zero columns (non-divisors) are rejected."""
    mat = tuple(tuple(as_fraction(v) for v in row) for row in rows)
    r = len(mat)
    n = len(mat[0]) if r else 0
    for i in range(n):
        if all(mat[k][i] == 0 for k in range(r)):
            raise ValueError(f"column {i + 1} is zero: B_{i + 1} is not a divisor")
    m = matroid_from_matrix(mat)  # raises when row rank < r
    return Arrangement(r, n, mat, m)


def _point_coords(arr: Arrangement, p) -> tuple[Fraction, ...]:
    coords = p.coords if isinstance(p, ProjPoint) else tuple(as_fraction(v) for v in p)
    if len(coords) != arr.r:
        raise ValueError("point has wrong length")
    if all(v == 0 for v in coords):
        raise ValueError("projective point cannot be the zero vector")
    return coords


def vanishing_set(arr: Arrangement, p) -> frozenset[int]:
    """I(p): indices of the forms vanishing at p."""
    coords = _point_coords(arr, p)
    out = []
    for i in range(1, arr.n + 1):
        if sum(c * v for c, v in zip(arr.column(i), coords)) == 0:
            out.append(i)
    return frozenset(out)


def _coeff_tuple(arr_n, w) -> tuple[Fraction, ...]:
    if isinstance(w, Weight):
        if w.n != arr_n:
            raise ValueError("weight length does not match the arrangement")
        return w.b
    b = tuple(as_fraction(v) for v in w)
    if len(b) != arr_n:
        raise ValueError("weight length does not match the arrangement")
    return b


def _lc_violation(arr: Arrangement, coeffs, strict: bool, within_mask: int):
    """First index set violating the (strict) lc bound inside within_mask.

    Only sets whose intersection is nonempty (rank <= r - 1) impose a
    condition.  Returns a frozenset or None.
    """
    m = arr.matroid
    b = coeffs
    sub = within_mask
    best = None
    while sub:
        rk = m.rank_mask(sub)
        if rk <= arr.r - 1:
            total = Fraction(0)
            t = sub
            while t:
                low = t & -t
                total += b[low.bit_length() - 1]
                t ^= low
            bad = total >= rk if strict else total > rk
            if bad and (best is None or sub < best):
                best = sub
        sub = (sub - 1) & within_mask
    return None if best is None else _unmask(best)


def is_lc(arr: Arrangement, w) -> bool:
    """Log canonical: sum_{i in I} b_i <= codim of every nonempty intersection."""
    return lc_violator(arr, w) is None


def lc_violator(arr: Arrangement, w):
    b = _coeff_tuple(arr.n, w)
    return _lc_violation(arr, b, False, (1 << arr.n) - 1)


def is_klt(arr: Arrangement, w) -> bool:
    """Kawamata log terminal: the strict lc inequalities (so all b_i < 1)."""
    b = _coeff_tuple(arr.n, w)
    return _lc_violation(arr, b, True, (1 << arr.n) - 1) is None


def _mask_of(subset) -> int:
    m = 0
    for i in subset:
        m |= 1 << (i - 1)
    return m


def is_lc_at(arr: Arrangement, w, p) -> bool:
    """lc at p: the same bounds restricted to index sets through p."""
    b = _coeff_tuple(arr.n, w)
    return _lc_violation(arr, b, False, _mask_of(vanishing_set(arr, p))) is None


def is_klt_at(arr: Arrangement, w, p) -> bool:
    b = _coeff_tuple(arr.n, w)
    return _lc_violation(arr, b, True, _mask_of(vanishing_set(arr, p))) is None


def weighted_face(w: Weight, subset) -> HPolytope:
    """Delta_w^I: the face of Delta_w where x_i = b_i for i in the set."""
    base = weighted_hypersimplex(w)
    eqs = list(base.equalities)
    for i in subset:
        row = [Fraction(0)] * w.n
        row[i - 1] = Fraction(1)
        eqs.append((tuple(row), w.b[i - 1]))
    return HPolytope(w.n, tuple(eqs), base.inequalities)


def _direction_span_dim(hull_a, hull_b, n) -> int:
    """dim of the sum of the two direction spaces, from hull equalities."""
    basis = []
    for hull in (hull_a, hull_b):
        rows = [_int_row(a, c)[0] for a, c in hull.equalities]
        basis.extend(_integer_kernel_basis(rows, n))
    if not basis:
        return 0
    return _core.mat_rank([list(v) for v in basis])


def git_verdict(arr: Arrangement, w: Weight, p) -> GitVerdict:
    """Semistability and stability of p for the linearization given by w.

    Semistable: P_V ∩ Δ_w^p nonempty (exact LP, with witness).
    Stable: relint(P_V) meets relint(Δ_w^p) and the two direction spaces
    together span the hyperplane sum(x) = 0 (dimension n - 1).
    """
    if not in_weight_domain(w):
        raise ValueError("weight must lie in the weight domain D(r, n)")
    ip = vanishing_set(arr, p)
    face = weighted_face(w, sorted(ip))
    pv = matroid_polytope_hrep(arr.matroid)
    feas = lp_solve(intersect(pv, face), (Fraction(0),) * arr.n)
    semistable = feas.status == "optimal"
    ss_witness = feas.witness if semistable else None

    stable = False
    st_witness = None
    if semistable:
        meet = strict_meet(pv, face)
        if meet is not None:
            hull_p = affine_hull(pv)
            hull_f = affine_hull(face)
            if _direction_span_dim(hull_p, hull_f, arr.n) == arr.n - 1:
                stable = True
                st_witness = meet
    return GitVerdict(semistable, stable, ip, face, ss_witness, st_witness)


def is_semistable(arr: Arrangement, w: Weight, p) -> GitVerdict:
    return git_verdict(arr, w, p)


def is_stable(arr: Arrangement, w: Weight, p) -> GitVerdict:
    return git_verdict(arr, w, p)


def moment_polytope(arr: Arrangement, w: Weight, p) -> HPolytope:
    """The moment polytope P_V + (|w| - r) sigma_p, as a lifted H-polytope.

    Ambient coordinates are (x, y, s) with x = y + (|w| - r) s, y in P_V and
    s in the simplex supported off the vanishing set of p; the moment
    polytope itself is the projection to the x block, and membership is an
    LP via ``moment_polytope_contains``.
    """
    total = w.total()
    if total < arr.r:
        raise ValueError("moment polytope needs |w| >= r")
    n = arr.n
    scale = total - arr.r
    pv = matroid_polytope_hrep(arr.matroid)
    zeros = (Fraction(0),) * n

    def xyz(x_part, y_part, s_part):
        return tuple(x_part) + tuple(y_part) + tuple(s_part)

    eqs = []
    ineqs = []
    for a, c in pv.equalities:
        eqs.append((xyz(zeros, a, zeros), c))
    for a, c in pv.inequalities:
        ineqs.append((xyz(zeros, a, zeros), c))
    ip = vanishing_set(arr, p)
    one = Fraction(1)
    eqs.append((xyz(zeros, zeros, (one,) * n), one))  # sum s = 1
    for i in range(1, n + 1):
        row = [Fraction(0)] * n
        row[i - 1] = one
        if i in ip:
            eqs.append((xyz(zeros, zeros, row), Fraction(0)))
        else:
            ineqs.append((xyz(zeros, zeros, [-v for v in row]), Fraction(0)))
    for i in range(n):
        row_x = [Fraction(0)] * n
        row_x[i] = one
        row_y = [Fraction(0)] * n
        row_y[i] = -one
        row_s = [Fraction(0)] * n
        row_s[i] = -scale
        eqs.append((xyz(row_x, row_y, row_s), Fraction(0)))
    return HPolytope(3 * n, tuple(eqs), tuple(ineqs))


def moment_polytope_contains(mp: HPolytope, point) -> bool:
    """Membership of a point in the x-projection of a lifted moment polytope."""
    n = mp.ambient_dim // 3
    pt = tuple(as_fraction(v) for v in point)
    if len(pt) != n:
        raise ValueError("point has wrong length")
    eqs = list(mp.equalities)
    one = Fraction(1)
    for i in range(n):
        row = [Fraction(0)] * (3 * n)
        row[i] = one
        eqs.append((tuple(row), pt[i]))
    fixed = HPolytope(mp.ambient_dim, tuple(eqs), mp.inequalities)
    return lp_solve(fixed, (Fraction(0),) * (3 * n)).status == "optimal"


def lc_locus_equals_polytope(arr: Arrangement, x) -> bool:
    """Cross-check of the lc description of the matroid polytope.

    For x with 0 <= x_i <= 1 and sum(x) = r, compares membership in P_V
    against the lc condition of the pair with coefficients x (entries equal
    to zero drop their divisor).  Returns whether the two verdicts agree.
    """
    pt = tuple(as_fraction(v) for v in x)
    if len(pt) != arr.n:
        raise ValueError("point has wrong length")
    if any(v < 0 or v > 1 for v in pt) or sum(pt) != arr.r:
        raise ValueError("point must satisfy 0 <= x_i <= 1 and sum(x) = r")
    in_polytope = contains(matroid_polytope_hrep(arr.matroid), pt)
    support = _mask_of(i + 1 for i in range(arr.n) if pt[i] > 0)
    lc_side = _lc_violation(arr, pt, False, support) is None
    return in_polytope == lc_side


def meets_weighted(arr: Arrangement, w: Weight) -> bool:
    """P_V ∩ Δ_w nonempty (hypothesis of the semistable equivalence)."""
    pv = matroid_polytope_hrep(arr.matroid)
    dw = weighted_hypersimplex(w)
    return lp_solve(intersect(pv, dw), (Fraction(0),) * arr.n).status == "optimal"


def meets_weighted_interior(arr: Arrangement, w: Weight) -> bool:
    """P_V meets the relative interior of Δ_w (hypothesis of the stable
    equivalence)."""
    pv = matroid_polytope_hrep(arr.matroid)
    dw = weighted_hypersimplex(w)
    return strict_meet(dw, pv, strict_q=False) is not None
