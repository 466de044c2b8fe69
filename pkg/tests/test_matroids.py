"""Matroid construction, ranks, polytopes, enumeration, degree generation."""

import itertools
from fractions import Fraction

import pytest

from whsa.errors import CapExceededError
from whsa.geometry import affine_hull, contains, lp_solve, polytopes_equal, vertices
from whsa.matroids import (
    Matroid,
    check_bases,
    connected_components,
    degree_d_generation,
    enumerate_matroids,
    matroid_from_matrix,
    matroid_polytope,
    rank,
    uniform_matroid,
)

from helpers import hyper

F = Fraction

# five lines on P^2 with B1,B2,B5 through (0:0:1) and B3,B4,B5 through
# (0:1:0), otherwise generic; columns are the linear forms
THREE_DEGS = ((1, 1, 1, 1, 1), (1, 2, 0, 0, 0), (0, 0, 1, 2, 0))


def bell(n):
    # Bell numbers via the triangle, for the rank-2 counting oracle
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def rank2_matroid_count(n, loopless):
    """Labelled rank-2 matroids on n elements = partitions of the non-loop
    part into >= 2 parallel classes (independent counting oracle)."""
    if loopless:
        return bell(n) - 1
    total = 0
    for k in range(0, n - 1):
        total += len(list(itertools.combinations(range(n), k))) * (bell(n - k) - 1)
    return total


def test_matroid_from_matrix_generic_2x4():
    m = matroid_from_matrix([[1, 0, 1, 1], [0, 1, 1, 2]])
    assert m == uniform_matroid(2, 4)


def test_matroid_from_matrix_repeated_column():
    # PAPER 9.1: p_34 = 0 exactly when B3 = B4
    m = matroid_from_matrix([[1, 0, 1, 2], [0, 1, 1, 2]])
    missing = uniform_matroid(2, 4).bases - m.bases
    assert missing == {frozenset({3, 4})}


def test_matroid_from_matrix_three_degs():
    # derived oracle: exact determinants of all column triples
    cols = list(zip(*THREE_DEGS))
    dependent = []
    for trip in itertools.combinations(range(5), 3):
        a, b, c = (cols[i] for i in trip)
        det = (a[0] * (b[1] * c[2] - b[2] * c[1])
               - a[1] * (b[0] * c[2] - b[2] * c[0])
               + a[2] * (b[0] * c[1] - b[1] * c[0]))
        if det == 0:
            dependent.append(frozenset(i + 1 for i in trip))
    assert sorted(map(sorted, dependent)) == [[1, 2, 5], [3, 4, 5]]
    m = matroid_from_matrix(THREE_DEGS)
    assert uniform_matroid(3, 5).bases - m.bases == set(dependent)


def test_matroid_from_matrix_rank_deficient():
    with pytest.raises(ValueError):
        matroid_from_matrix([[1, 1], [1, 1]])


def test_check_bases_cases():
    assert check_bases(4, 2, itertools.combinations(range(1, 5), 2))
    assert not check_bases(4, 2, [{1, 2}, {3, 4}])
    assert check_bases(5, 3, [{1, 2, 3}])


def test_rank_cases():
    tri = matroid_from_matrix(THREE_DEGS)
    assert tri.rank(()) == 0
    assert tri.rank({1, 2, 5}) == 2  # PAPER 1.4: triple point has codim 2
    assert rank(uniform_matroid(2, 4), {1, 2, 3}) == 2


def test_rank_agrees_with_column_rank():
    m = matroid_from_matrix(THREE_DEGS)
    cols = list(zip(*[[F(v) for v in row] for row in THREE_DEGS]))
    for size in range(0, 6):
        for sub in itertools.combinations(range(5), size):
            pts = [cols[i] for i in sub]
            # Fraction row reduction on the transposed selection
            rows = [list(p) for p in pts]
            rk = 0
            for col in range(3):
                piv = next((i for i in range(rk, len(rows)) if rows[i][col] != 0), None)
                if piv is None:
                    continue
                rows[rk], rows[piv] = rows[piv], rows[rk]
                for i in range(len(rows)):
                    if i != rk and rows[i][col] != 0:
                        f = rows[i][col] / rows[rk][col]
                        rows[i] = [v - f * w for v, w in zip(rows[i], rows[rk])]
                rk += 1
            assert m.rank(i + 1 for i in sub) == rk


def test_rank_axioms_exhaustive():
    for m in (uniform_matroid(2, 4), matroid_from_matrix(THREE_DEGS)):
        subsets = list(range(1 << m.n))
        for a in subsets:
            ra = m.rank_mask(a)
            assert 0 <= ra <= min(a.bit_count(), m.r)
            for b in subsets:
                rb = m.rank_mask(b)
                if a & ~b == 0:
                    assert ra <= rb
                assert m.rank_mask(a | b) + m.rank_mask(a & b) <= ra + rb


def test_matroid_polytope_uniform_is_hypersimplex():
    mp = matroid_polytope(uniform_matroid(2, 4))
    assert polytopes_equal(mp.hrep, hyper(2, 4))


def test_matroid_polytope_three_degs_facet():
    # PAPER 9.3: P_0 carries the facet x1 + x2 + x5 <= 2
    mp = matroid_polytope(matroid_from_matrix(THREE_DEGS))
    row = (F(1), F(1), F(0), F(0), F(1))
    assert (row, F(2)) in mp.hrep.inequalities
    top = lp_solve(mp.hrep, row, "max")
    assert top.optimum == 2
    from whsa.geometry import HPolytope, intersect
    facet = intersect(mp.hrep, HPolytope(5, ((row, F(2)),), ()))
    assert affine_hull(facet).dim == affine_hull(mp.hrep).dim - 1


def test_matroid_polytope_loop_flattens():
    m = matroid_from_matrix([[1, 0, 0, 1], [0, 1, 0, 1]])  # column 3 is zero
    assert m.loops() == {3}
    mp = matroid_polytope(m)
    e3 = (0, 0, 1, 0)
    top = lp_solve(mp.hrep, e3, "max")
    assert top.optimum == 0


def test_hrep_vrep_duality_enumerated():
    for m in enumerate_matroids(2, 4):
        mp = matroid_polytope(m)
        assert vertices(mp.hrep) == mp.vrep
    for m in enumerate_matroids(3, 5, loopless=True)[::5]:
        mp = matroid_polytope(m)
        assert vertices(mp.hrep) == mp.vrep


def test_connected_components_cases():
    assert connected_components(uniform_matroid(2, 4)) == (frozenset({1, 2, 3, 4}),)
    square = Matroid(4, 2, frozenset({frozenset({1, 3}), frozenset({1, 4}),
                                      frozenset({2, 3}), frozenset({2, 4})}))
    assert connected_components(square) == (frozenset({1, 2}), frozenset({3, 4}))
    mp = matroid_polytope(square)
    sq = [v for v in vertices(mp.hrep)]
    assert len(sq) == 4  # Delta(1,2) x Delta(1,2)
    free = Matroid(3, 3, frozenset({frozenset({1, 2, 3})}))
    assert len(connected_components(free)) == 3


def test_dimension_formula_enumerated():
    # dim aff(P) = n - 1 - (components - 1) - loops, components counted on
    # the non-loop part
    for m in enumerate_matroids(2, 4):
        parts = connected_components(m)
        loops = m.loops()
        nonloop_parts = [p for p in parts if not (len(p) == 1 and next(iter(p)) in loops)]
        dim = affine_hull(matroid_polytope(m).hrep).dim
        assert dim == m.n - 1 - (len(nonloop_parts) - 1) - len(loops)


def test_enumerate_matroids_tiny():
    all12 = enumerate_matroids(1, 2)
    fams = sorted(sorted(tuple(sorted(b)) for b in m.bases) for m in all12)
    assert fams == [[(1,)], [(1,), (2,)], [(2,)]]
    assert len(enumerate_matroids(1, 2, loopless=True)) == 1


def test_enumerate_matroids_counts_against_partition_oracle():
    assert rank2_matroid_count(4, loopless=False) == 36
    assert rank2_matroid_count(4, loopless=True) == 14
    assert len(enumerate_matroids(2, 4)) == 36
    assert len(enumerate_matroids(2, 4, loopless=True)) == 14
    assert rank2_matroid_count(5, loopless=True) == 51
    assert len(enumerate_matroids(2, 5, loopless=True)) == 51
    # no closed formula at rank 3; derived once by the exhaustive scan and
    # frozen, with S_5-closure as the structural cross-check
    m35 = enumerate_matroids(3, 5, loopless=True)
    assert len(m35) == 106
    fams = set(m.bases for m in m35)
    for m in m35[::7]:
        for perm in itertools.permutations(range(1, 6)):
            relabeled = frozenset(frozenset(perm[i - 1] for i in b) for b in m.bases)
            assert relabeled in fams


def test_enumerate_matroids_23_loopless_contents():
    fams = set(m.bases for m in enumerate_matroids(2, 3, loopless=True))
    assert uniform_matroid(2, 3).bases in fams
    for pair in itertools.combinations(range(1, 4), 2):
        coloop = ({1, 2, 3} - set(pair)).pop()
        bases = frozenset(frozenset({i, coloop}) for i in pair)
        assert bases in fams
    assert len(fams) == 4


def test_enumerate_matroids_cap():
    with pytest.raises(CapExceededError):
        enumerate_matroids(3, 7)


def test_degree_d_generation_cases():
    u24 = uniform_matroid(2, 4)
    assert degree_d_generation(u24, 2)
    ones = (F(1), F(1), F(1), F(1))
    from whsa.geometry import dilate, lattice_points
    pts = lattice_points(dilate(matroid_polytope(u24).hrep, 2))
    assert tuple(ones) in [tuple(p) for p in pts]
    free = Matroid(3, 3, frozenset({frozenset({1, 2, 3})}))
    assert degree_d_generation(free, 2) and degree_d_generation(free, 3)
    with pytest.raises(ValueError):
        degree_d_generation(u24, 4)


def test_degree_generation_loopless_24_smoke():
    for m in enumerate_matroids(2, 4, loopless=True):
        assert degree_d_generation(m, 2)
