"""Weight vectors, weighted hypersimplices and the chamber structure.

The weight domain D(r, n) consists of rational b with 0 < b_i <= 1 and
sum(b) > r.  It is subdivided by the walls sum_{i in I} b_i = k for
1 <= k <= r - 1 and by the faces b_i = 1.

Two weights are in the same chamber exactly when every wall predicate
[sum_I b >= k] and every face predicate [b_i = 1] agrees; this closed-side
convention is what makes the chamber decomposition coincide with the
matroid-polytope intersection pattern (the Z-chamber decomposition), which
``zchamber_equivalent`` computes independently by exact LP feasibility.
Raw three-valued signs are still exposed through ``ChamberSignature``.

Chambers are locally closed: a chamber is closed on the >= side of each of
its walls and open below, so its closure adds the wall itself on strict
sides and extends tie walls downward.  ``in_chamber_closure`` implements
exactly that rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceededError
from .geometry import HPolytope, as_fraction, intersect, is_empty
from .matroids import Matroid, matroid_polytope_hrep

SIGNATURE_CAP = 16


@dataclass(frozen=True)
class Weight:
    """A rational weight vector with 0 < b_i <= 1."""

    r: int
    b: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(as_fraction(v) for v in self.b))
        if self.r < 1:
            raise ValueError("rank must be positive")
        if not self.b:
            raise ValueError("weight vector is empty")
        for v in self.b:
            if not 0 < v <= 1:
                raise ValueError(f"weight entry {v} outside (0, 1]")

    @property
    def n(self) -> int:
        return len(self.b)

    def total(self) -> Fraction:
        return sum(self.b, Fraction(0))


def weight(r, entries) -> Weight:
    return Weight(r, tuple(as_fraction(v) for v in entries))


def hypersimplex(r: int, n: int) -> HPolytope:
    """Delta(r, n): the cube slice 0 <= x <= 1, sum(x) = r."""
    if not 1 <= r < n:
        raise ValueError("hypersimplex needs 1 <= r < n")
    return weighted_hypersimplex(Weight(r, (Fraction(1),) * n))


def weighted_hypersimplex(w: Weight, n: int | None = None) -> HPolytope:
    """Delta_w: 0 <= x_i <= b_i, sum(x) = r.  Possibly empty."""
    if n is not None and n != w.n:
        raise ValueError("n disagrees with the weight length")
    n = w.n
    one = Fraction(1)
    eqs = (((one,) * n, Fraction(w.r)),)
    ineqs = []
    for i in range(n):
        row = [Fraction(0)] * n
        row[i] = one
        ineqs.append((tuple(row), w.b[i]))
        ineqs.append((tuple(-v for v in row), Fraction(0)))
    return HPolytope(n, eqs, tuple(ineqs))


def in_weight_domain(w: Weight) -> bool:
    """Membership in D(r, n): entries in (0, 1] and sum(b) > r."""
    return w.total() > w.r


def _subset_sums(b):
    """sums[mask] = sum of b_i over the mask, by shared-prefix recursion."""
    n = len(b)
    sums = [Fraction(0)] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + b[low.bit_length() - 1]
    return sums


def _check_signature_cap(w):
    if w.n > SIGNATURE_CAP:
        raise CapExceededError(f"n = {w.n} exceeds the signature cap {SIGNATURE_CAP}")
    if not in_weight_domain(w):
        raise ValueError("weight is not in the weight domain D(r, n)")


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class ChamberSignature:
    """Exact signs of every wall and face at a weight.

    ``wall_signs[(k - 1) << n | mask]`` is the sign of sum_{i in mask} b_i - k;
    ``face_signs[i]`` is the sign of b_{i+1} - 1 (always 0 or -1 inside the
    domain).  Use :meth:`wall_sign` / :meth:`face_sign` for subset access.
    """

    n: int
    r: int
    wall_signs: tuple[int, ...]
    face_signs: tuple[int, ...]

    def wall_sign(self, subset, k: int) -> int:
        if not 1 <= k <= self.r - 1:
            raise ValueError("k must be in 1..r-1")
        mask = 0
        for i in subset:
            mask |= 1 << (i - 1)
        return self.wall_signs[(k - 1) << self.n | mask]

    def face_sign(self, i: int) -> int:
        return self.face_signs[i - 1]

    def closed_pattern(self) -> tuple:
        """The chamber-defining pattern: wall predicates [sum >= k] plus
        face predicates [b_i = 1] (sign ties count as the >= side)."""
        walls = tuple(s >= 0 for s in self.wall_signs)
        faces = tuple(s == 0 for s in self.face_signs)
        return walls, faces


def chamber_signature(w: Weight) -> ChamberSignature:
    """All 2^n (r-1) wall signs and n face signs of a domain weight."""
    _check_signature_cap(w)
    sums = _subset_sums(w.b)
    walls = []
    for k in range(1, w.r):
        fk = Fraction(k)
        for mask in range(1 << w.n):
            walls.append(_sign(sums[mask] - fk))
    faces = tuple(_sign(v - 1) for v in w.b)
    return ChamberSignature(w.n, w.r, tuple(walls), faces)


def _compatible(w: Weight, w2: Weight):
    if (w.r, w.n) != (w2.r, w2.n):
        raise ValueError("weights live in different domains")
    _check_signature_cap(w)
    _check_signature_cap(w2)


def same_chamber(w: Weight, w2: Weight) -> bool:
    """Same chamber of D(r, n): identical closed wall and face patterns."""
    _compatible(w, w2)
    sums_a, sums_b = _subset_sums(w.b), _subset_sums(w2.b)
    for k in range(1, w.r):
        fk = Fraction(k)
        for mask in range(1 << w.n):
            if (sums_a[mask] >= fk) != (sums_b[mask] >= fk):
                return False
    return all((x == 1) == (y == 1) for x, y in zip(w.b, w2.b))


def in_chamber_closure(w_target: Weight, w_source: Weight) -> bool:
    """Is w_target in the closure of the chamber of w_source?

    Chambers are closed on the >= side of their walls and open below, so
    the closure keeps every strict >= and relaxes strict < to <=.  Per wall
    sign (source -> target): + -> {+, 0}; 0 or - -> {0, -}.  Faces b_i = 1
    never obstruct (every domain weight has b_i <= 1).
    """
    _compatible(w_target, w_source)
    sums_t, sums_s = _subset_sums(w_target.b), _subset_sums(w_source.b)
    for k in range(1, w_source.r):
        fk = Fraction(k)
        for mask in range(1 << w_source.n):
            if sums_s[mask] > fk:
                if sums_t[mask] < fk:
                    return False
            elif sums_t[mask] > fk:
                return False
    return True


def weight_partial_order(w: Weight, w2: Weight) -> str:
    """Componentwise comparison: greater | less | equal | incomparable."""
    if w.n != w2.n:
        raise ValueError("weights have different lengths")
    ge = all(a >= b for a, b in zip(w.b, w2.b))
    le = all(a <= b for a, b in zip(w.b, w2.b))
    if ge and le:
        return "equal"
    if ge:
        return "greater"
    if le:
        return "less"
    return "incomparable"


def zchamber_equivalent(w: Weight, w2: Weight, matroids) -> bool:
    """Z-chamber test: every matroid polytope in the list must meet Delta_w
    and Delta_w' in the same way (both nonempty or both empty), decided by
    exact LP feasibility on each side."""
    if (w.r, w.n) != (w2.r, w2.n):
        raise ValueError("weights live in different domains")
    da, db = weighted_hypersimplex(w), weighted_hypersimplex(w2)
    for m in matroids:
        if (m.n, m.r) != (w.n, w.r):
            raise ValueError("matroid does not match the weight domain")
        p = matroid_polytope_hrep(m)
        if is_empty(intersect(p, da)) != is_empty(intersect(p, db)):
            return False
    return True


def sample_weight(rng, r: int, n: int, max_denominator: int = 64) -> Weight:
    """Uniform rationals with denominator <= max_denominator, rejection
    sampled into D(r, n)."""
    while True:
        entries = []
        for _ in range(n):
            d = rng.randint(1, max_denominator)
            entries.append(Fraction(rng.randint(1, d), d))
        if sum(entries) > r:
            return Weight(r, tuple(entries))
