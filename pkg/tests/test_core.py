"""Kernel tests: exact rank/det/simplex/vertex search, plus twin parity."""

import random
from fractions import Fraction

import pytest

from whsa._core import _pycore

try:
    from whsa._core import _ccore
except ImportError:
    _ccore = None

IMPLS = [_pycore] if _ccore is None else [_pycore, _ccore]


def frac_det(rows):
    rows = [[Fraction(v) for v in r] for r in rows]
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        piv = None
        for i in range(col, n):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = rows[col][col]
        for i in range(col + 1, n):
            f = rows[i][col] / inv
            rows[i] = [v - f * w for v, w in zip(rows[i], rows[col])]
    return det


@pytest.mark.parametrize("core", IMPLS)
def test_det_and_rank_small(core):
    assert core.mat_det([[2, 0], [0, 3]]) == 6
    assert core.mat_det([[1, 2], [2, 4]]) == 0
    assert core.mat_det([[1, 1, 0], [1, 2, 0], [1, 0, 1]]) == 1
    assert core.mat_rank([[1, 2], [2, 4], [0, 1]]) == 2
    assert core.mat_rank([[0, 0], [0, 0]]) == 0
    assert core.mat_rank([]) == 0


@pytest.mark.parametrize("core", IMPLS)
def test_det_rank_randomized_vs_fraction_elimination(core):
    rng = random.Random(20)
    for _ in range(120):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert core.mat_det(rows) == frac_det(rows)
        wide = [[rng.randint(-4, 4) for _ in range(n + 1)] for _ in range(rng.randint(1, 5))]
        # rank oracle: count pivots of Fraction elimination
        m = [[Fraction(v) for v in r] for r in wide]
        rank = 0
        for col in range(n + 1):
            piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            for i in range(len(m)):
                if i != rank and m[i][col] != 0:
                    f = m[i][col] / m[rank][col]
                    m[i] = [v - f * w for v, w in zip(m[i], m[rank])]
            rank += 1
        assert core.mat_rank(wide) == rank


@pytest.mark.parametrize("core", IMPLS)
def test_solve_square(core):
    den, nums = core.solve_square([[1, 2], [3, 4]], [5, 6])
    assert Fraction(nums[0], den) == Fraction(-4)
    assert Fraction(nums[1], den) == Fraction(9, 2)
    assert core.solve_square([[1, 1], [2, 2]], [1, 2]) is None


@pytest.mark.parametrize("core", IMPLS)
def test_lp_standard_basic(core):
    # max x1 + x2 st x1 + 2 x2 + s1 = 4, x >= 0  -> x = (4, 0)
    status, nums, den = core.lp_standard([[1, 2, 1]], [4], [1, 1, 0])
    assert status == core.OPTIMAL
    x = [Fraction(v, den) for v in nums]
    assert x[0] == 4 and x[1] == 0

    # infeasible: x1 = -1, x >= 0
    status, _, _ = core.lp_standard([[1]], [-1], [0])
    assert status == core.INFEASIBLE

    # unbounded: max x1, no constraints
    status, _, _ = core.lp_standard([], [], [1])
    assert status == core.UNBOUNDED

    # redundant equalities must not trip phase 2
    status, nums, den = core.lp_standard([[1, 1], [2, 2]], [2, 4], [1, 0])
    assert status == core.OPTIMAL
    assert Fraction(nums[0], den) == 2


@pytest.mark.skipif(_ccore is None, reason="compiled kernel not built")
def test_twin_parity_randomized():
    """The compiled kernel must agree bit-for-bit with the reference."""
    rng = random.Random(7)
    for _ in range(60):
        m = rng.randint(0, 4)
        nv = rng.randint(1, 5)
        a = [[rng.randint(-3, 3) for _ in range(nv)] for _ in range(m)]
        b = [rng.randint(-4, 4) for _ in range(m)]
        c = [rng.randint(-3, 3) for _ in range(nv)]
        assert _pycore.lp_standard(a, b, c) == _ccore.lp_standard(a, b, c)
    for _ in range(40):
        n = rng.randint(1, 4)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert _pycore.mat_det(rows) == _ccore.mat_det(rows)
        assert _pycore.mat_rank(rows) == _ccore.mat_rank(rows)
    for _ in range(30):
        n = rng.randint(1, 3)
        neq = rng.randint(0, 1)
        niq = rng.randint(n, 2 * n + 2)
        eq = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(neq)]
        eqr = [rng.randint(-2, 2) for _ in range(neq)]
        iq = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(niq)]
        iqr = [rng.randint(0, 3) for _ in range(niq)]
        got_a = sorted(_pycore.vertex_enum(n, eq, eqr, iq, iqr))
        got_b = sorted(_ccore.vertex_enum(n, eq, eqr, iq, iqr))
        assert got_a == got_b
