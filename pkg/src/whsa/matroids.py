"""Matroids on {1..n}: from rational matrices or explicit basis families.

Ground sets are 1-indexed in every public structure; bitmasks are used
internally (bit i-1 for element i).  Matroid equality is equality of
labelled basis families, not isomorphism.

Rank is computed as the maximum overlap with a basis, polytopes come from
the flat inequalities inside the hypersimplex slice, and small ground sets
can be enumerated exhaustively against the basis-exchange axiom.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm

from . import _core
from .errors import CapExceededError
from .geometry import HPolytope, as_fraction, dilate, lattice_points

GROUND_CAP = 16
ENUM_CAP_BITS = 20
GENERATION_POINT_CAP = 10**6


def _mask(subset) -> int:
    m = 0
    for i in subset:
        m |= 1 << (i - 1)
    return m


def _unmask(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _exchange_ok(bmasks) -> bool:
    """Basis-exchange axiom over a family of same-size bitmasks."""
    bset = set(bmasks)
    for b1 in bmasks:
        for b2 in bmasks:
            if b1 == b2:
                continue
            x = b1 & ~b2
            while x:
                xbit = x & -x
                x ^= xbit
                stripped = b1 ^ xbit
                y = b2 & ~b1
                good = False
                while y:
                    ybit = y & -y
                    y ^= ybit
                    if stripped | ybit in bset:
                        good = True
                        break
                if not good:
                    return False
    return True


def check_bases(n: int, r: int, bases) -> bool:
    """True iff the family is the basis set of a matroid on {1..n}."""
    fam = [frozenset(b) for b in bases]
    if not fam:
        return False
    for b in fam:
        if len(b) != r or not b <= set(range(1, n + 1)):
            return False
    return _exchange_ok([_mask(b) for b in set(fam)])


@dataclass(frozen=True)
class Matroid:
    """A matroid given by its labelled bases, optionally with a realization.

    When a realization matrix is present, the bases are exactly the
    r-element column sets of full rank; this is validated on construction.
    """

    n: int
    r: int
    bases: frozenset[frozenset[int]]
    # equality of matroids is equality of labelled basis sets; a realization
    # is a witness, not part of the identity
    realization: tuple[tuple[Fraction, ...], ...] | None = field(default=None, compare=False)
    _basis_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1 or self.n > GROUND_CAP:
            raise CapExceededError(f"ground set size {self.n} outside 1..{GROUND_CAP}")
        fam = frozenset(frozenset(b) for b in self.bases)
        object.__setattr__(self, "bases", fam)
        if not check_bases(self.n, self.r, fam):
            raise ValueError("basis family violates the exchange axiom")
        masks = tuple(sorted(_mask(b) for b in fam))
        object.__setattr__(self, "_basis_masks", masks)
        object.__setattr__(self, "_rank_cache", {})
        if self.realization is not None:
            mat = tuple(tuple(as_fraction(v) for v in row) for row in self.realization)
            if len(mat) != self.r or any(len(row) != self.n for row in mat):
                raise ValueError("realization must be an r x n matrix")
            object.__setattr__(self, "realization", mat)
            if frozenset(_independent_column_sets(mat, self.r)) != fam:
                raise ValueError("realization does not realize the stated bases")

    def rank_mask(self, mask: int) -> int:
        cache = self._rank_cache  # benign race: recomputed values are equal
        got = cache.get(mask)
        if got is None:
            got = max((m & mask).bit_count() for m in self._basis_masks)
            cache[mask] = got
        return got

    def rank(self, subset) -> int:
        return self.rank_mask(_mask(subset))

    def loops(self) -> frozenset[int]:
        alive = 0
        for m in self._basis_masks:
            alive |= m
        return _unmask(((1 << self.n) - 1) & ~alive)

    def is_loopless(self) -> bool:
        return not self.loops()

    def sorted_bases(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(b)) for b in self.bases)


def rank(m: Matroid, subset) -> int:
    """Matroid rank of a subset of {1..n}."""
    return m.rank(subset)


def _int_columns(mat):
    """Clear denominators column by column (preserves column dependencies)."""
    r = len(mat)
    n = len(mat[0])
    cols = []
    for j in range(n):
        mult = lcm(*(mat[i][j].denominator for i in range(r)))
        cols.append([int(mat[i][j] * mult) for i in range(r)])
    return cols


def _independent_column_sets(mat, r):
    cols = _int_columns(mat)
    n = len(cols)
    out = []
    for subset in itertools.combinations(range(n), r):
        square = [[cols[j][i] for j in subset] for i in range(r)]
        if _core.mat_det(square) != 0:
            out.append(frozenset(j + 1 for j in subset))
    return out


def matroid_from_matrix(rows) -> Matroid:
    """The matroid of column dependencies of a rational r x n matrix."""
    mat = tuple(tuple(as_fraction(v) for v in row) for row in rows)
    r = len(mat)
    if r == 0 or len(mat[0]) == 0:
        raise ValueError("matrix must be nonempty")
    n = len(mat[0])
    if any(len(row) != n for row in mat):
        raise ValueError("ragged matrix")
    cols = _int_columns(mat)
    if _core.mat_rank([[cols[j][i] for j in range(n)] for i in range(r)]) < r:
        raise ValueError("matrix does not have full row rank")
    bases = frozenset(_independent_column_sets(mat, r))
    return Matroid(n, r, bases, realization=mat)


def uniform_matroid(r: int, n: int) -> Matroid:
    return Matroid(n, r, frozenset(frozenset(b) for b in
                                   itertools.combinations(range(1, n + 1), r)))


@lru_cache(maxsize=8192)
def flats(m: Matroid) -> tuple[frozenset[int], ...]:
    """All flats (closed sets), deterministically ordered."""
    full = (1 << m.n) - 1

    def closure(mask):
        rk = m.rank_mask(mask)
        out = mask
        for i in range(m.n):
            bit = 1 << i
            if not out & bit and m.rank_mask(mask | bit) == rk:
                out |= bit
        return out

    level = {closure(0)}
    seen = set(level)
    while level:
        nxt = set()
        for f in level:
            for i in range(m.n):
                bit = 1 << i
                if not f & bit:
                    c = closure(f | bit)
                    if c not in seen:
                        seen.add(c)
                        nxt.add(c)
        level = nxt
    return tuple(_unmask(f) for f in sorted(seen))


@lru_cache(maxsize=8192)
def matroid_polytope_hrep(m: Matroid) -> HPolytope:
    """H-representation of the basis polytope inside the hypersimplex slice."""
    n = m.n
    one = Fraction(1)
    eqs = [((one,) * n, Fraction(m.r))]
    ineqs = []
    for i in range(n):
        row = [Fraction(0)] * n
        row[i] = one
        ineqs.append((tuple(row), one))
        ineqs.append((tuple(-v for v in row), Fraction(0)))
    for f in flats(m):
        rk = m.rank(f)
        if f and rk < min(len(f), m.r):
            row = [Fraction(0)] * n
            for i in f:
                row[i - 1] = one
            ineqs.append((tuple(row), Fraction(rk)))
    return HPolytope(n, tuple(eqs), tuple(ineqs))


@dataclass(frozen=True)
class MatroidPolytope:
    matroid: Matroid
    hrep: HPolytope
    vrep: tuple[tuple[Fraction, ...], ...]


def basis_indicator(n: int, basis) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * n
    for i in basis:
        v[i - 1] = Fraction(1)
    return tuple(v)


def matroid_polytope(m: Matroid) -> MatroidPolytope:
    """The matroid polytope with both descriptions attached."""
    vrep = tuple(sorted(basis_indicator(m.n, b) for b in m.bases))
    return MatroidPolytope(m, matroid_polytope_hrep(m), vrep)


def connected_components(m: Matroid) -> tuple[frozenset[int], ...]:
    """Finest rank-additive partition of {1..n}; loops and coloops are
    singleton parts.  Computed by union over fundamental circuits of the
    lexicographically first basis."""
    parent = list(range(m.n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    base = min(m.sorted_bases())
    bmask = _mask(base)
    bset = set(m._basis_masks)
    for e in range(1, m.n + 1):
        ebit = 1 << (e - 1)
        if ebit & bmask:
            continue
        for b in base:
            if (bmask ^ (1 << (b - 1))) | ebit in bset:
                union(e, b)
    groups: dict[int, set[int]] = {}
    for e in range(1, m.n + 1):
        groups.setdefault(find(e), set()).add(e)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=sorted))


def enumerate_matroids(r: int, n: int, loopless: bool = False) -> list[Matroid]:
    """All matroids of rank r on {1..n} by exhaustive exchange-axiom scan.

    Deterministic order: basis families are encoded as bit vectors over the
    lexicographically sorted r-subsets and enumerated in increasing value.
    """
    nsub = comb(n, r)
    if nsub > ENUM_CAP_BITS:
        raise CapExceededError(
            f"C({n},{r}) = {nsub} exceeds the enumeration cap {ENUM_CAP_BITS}")
    subsets = list(itertools.combinations(range(1, n + 1), r))
    submasks = [_mask(s) for s in subsets]
    full = (1 << n) - 1
    out = []
    for code in range(1, 1 << nsub):
        fam = [submasks[i] for i in range(nsub) if code >> i & 1]
        if loopless:
            alive = 0
            for f in fam:
                alive |= f
            if alive != full:
                continue
        if not _exchange_ok(fam):
            continue
        bases = frozenset(_unmask(f) for f in fam)
        out.append(Matroid(n, r, bases))
    return out


def degree_d_generation(m: Matroid, d: int) -> bool:
    """Every lattice point of d * P_M is a sum of d basis indicators.

    Exhaustive: the sums of all d-multisets of vertices are precomputed and
    every lattice point of the dilation is looked up among them.
    """
    if d not in (2, 3):
        raise ValueError("d must be 2 or 3")
    mp = matroid_polytope(m)
    pts = lattice_points(dilate(mp.hrep, d))
    if len(pts) > GENERATION_POINT_CAP:
        raise CapExceededError("dilation has too many lattice points")
    sums = set()
    for combo in itertools.combinations_with_replacement(mp.vrep, d):
        total = tuple(sum(col) for col in zip(*combo))
        sums.add(total)
    return all(tuple(p) in sums for p in pts)
