from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from latpoly.lp import (ConvexBody, EnumerationLimitError, LpProblem, LpStatus, ParametricLP,
                        gauge, lp_solve, membership, simplex, support_bound)
from latpoly.polytopes import cube, simplex as std_simplex
from latpoly.qfamily import q_family

from . import oracles

small = st.integers(-4, 4)


def symmetric_points(dim):
    """Vertex lists of 0-symmetric full-dimensional polytopes (points and negatives)."""
    pts = st.lists(st.tuples(*[small] * dim), min_size=dim, max_size=dim + 2)
    return pts.map(lambda ps: ps + [tuple(-x for x in p) for p in ps]) \
              .filter(lambda ps: oracles.matrix_rank(ps) == dim)


# -- examples --------------------------------------------------------------------

def test_lp_examples():
    out = lp_solve(LpProblem([1], [[1]], ["<="], [3]))
    assert out.status is LpStatus.OPTIMAL and out.value == 3 and out.point == (3,)
    assert lp_solve(LpProblem([1], [], [], [])).status is LpStatus.UNBOUNDED
    out = lp_solve(LpProblem([0], [[1]], ["<="], [-1]))
    assert out.status is LpStatus.INFEASIBLE and out.point is None


def test_lp_free_variables_and_minimize():
    p = LpProblem([1, 1], [[1, 0], [0, 1]], [">=", ">="], [-3, 2], free=[True, False], maximize=False)
    out = lp_solve(p)
    assert out.value == -1 and out.point == (-3, 2)


def test_membership_examples():
    tri = [(0, 0), (1, 0), (0, 1)]
    assert membership(tri, (Fraction(1, 3), Fraction(1, 3)))
    assert membership(tri, (1, 0))
    assert not membership(tri, (2, 2))


def test_gauge_examples():
    box = cube(2, -1, 1).vertices
    assert gauge(box, (1, 0)) == 1
    assert gauge(box, (2, 0)) == 2
    assert gauge([(0, 0), (1, 0), (0, 1)], (1, 0), difference=True) == 1
    assert gauge(cube(3, -1, 1).vertices, (0, 0, 1)) == 1
    with pytest.raises(ValueError):
        gauge(box, (0, 0))


def test_gauge_rejects_degenerate_body():
    with pytest.raises(ValueError):
        gauge([(1, 1), (-1, -1)], (1, 0))


def test_support_bound_examples():
    assert support_bound(cube(2, -1, 1).vertices, (1, 0)) == 1
    assert support_bound([(0, 0), (3, 1)], (0, 1)) == 1
    assert support_bound(q_family(3, 2).polytope.vertices, (0, 0, 1)) == 1


def test_enumeration_limit():
    body = ConvexBody([(1, cube(3, -5, 5).vertices)], 3)
    with pytest.raises(EnumerationLimitError):
        body.count_lattice_points(1, max_box=100)
    assert body.count_lattice_points(1, max_box=11 ** 3) == 11 ** 3


# -- properties ------------------------------------------------------------------

@st.composite
def bounded_lps(draw):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(1, 3))
    A = [[draw(small) for _ in range(n)] for _ in range(m)]
    b = [draw(st.integers(0, 6)) for _ in range(m)]
    c = [draw(small) for _ in range(n)]
    # x_1 + ... + x_n <= 5 keeps the LP bounded
    return A + [[1] * n], b + [5], c


@settings(max_examples=80, deadline=None)
@given(bounded_lps())
def test_lp_matches_basis_enumeration(lp):
    A, b, c = lp
    n, m = len(c), len(A)
    # standard form with slacks, solved both ways
    std = [row + [int(i == j) for j in range(m)] for i, row in enumerate(A)]
    ref = oracles.basis_lp(std, b, c + [0] * m)
    out = lp_solve(LpProblem(c, A, ["<="] * m, b))
    assert ref is not None and out.status is LpStatus.OPTIMAL
    assert out.value == ref[0]
    for row, rhs in zip(A, b):
        assert sum(Fraction(a) * x for a, x in zip(row, out.point)) <= rhs
    assert all(x >= 0 for x in out.point)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=3),
       st.lists(small, min_size=3, max_size=3), st.lists(small, min_size=4, max_size=4))
def test_equality_lp_status(A, b, c):
    b = (b + [0] * 3)[:len(A)]
    # a slack-closed box row keeps the LP bounded whenever it is feasible
    rhs = b + [7]
    std = [r + [0] for r in A] + [[1, 1, 1, 1, 1]]
    ref = oracles.basis_lp(std, rhs, c + [0])
    res = simplex(std, rhs, c + [0])
    if ref is None:
        assert res.status is LpStatus.INFEASIBLE
    else:
        assert res.status is LpStatus.OPTIMAL and res.value == ref[0]
        for row, y in zip(std, rhs):
            assert sum(Fraction(a) * x for a, x in zip(row, res.x)) == y
        assert all(x >= 0 for x in res.x)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=2, max_size=3),
       st.lists(st.lists(st.integers(0, 6), min_size=3, max_size=3), min_size=1, max_size=6))
def test_parametric_lp_matches_fresh_solves(A, rhss):
    m = len(A)
    A = A + [[1, 1, 1]]
    std = [row + [int(i == j) for j in range(m + 1)] for i, row in enumerate(A)]
    c = [1, -1, 2] + [0] * (m + 1)
    plp = ParametricLP(std, c)
    for b in rhss:
        b = (b + [0] * m)[:m] + [4]
        fresh = simplex(std, b, c)
        got = plp.maximize(b)
        assert got == (fresh.value if fresh.status is LpStatus.OPTIMAL else None)


@settings(max_examples=40, deadline=None)
@given(symmetric_points(2), st.tuples(small, small), st.integers(1, 3))
def test_gauge_homogeneous_symmetric_and_oracle(pts, z, t):
    assume(any(z))
    g = gauge(pts, z)
    assert g == oracles.gauge(pts, z)
    assert gauge(pts, tuple(-x for x in z)) == g
    assert gauge(pts, tuple(t * x for x in z)) == t * g
    body = ConvexBody([(1, pts)], 2)
    assert body.gauge(z) == g
    assert membership(pts, z) == (g <= 1)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=3, max_size=5), st.tuples(small, small))
def test_difference_gauge_matches_materialized_body(pts, z):
    assume(any(z) and oracles.matrix_rank([(a[0] - pts[0][0], a[1] - pts[0][1]) for a in pts]) == 2)
    diffs = [tuple(a - b for a, b in zip(p, q)) for p in pts for q in pts]
    assert gauge(pts, z, difference=True) == oracles.gauge(diffs, z)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=1, max_size=5), st.integers(1, 3))
def test_counting_matches_naive_scan(pts, k):
    body = ConvexBody([(1, pts)], 2)
    assert body.count_lattice_points(k) == oracles.count_points(pts, k)
    listed = body.lattice_points(k)
    assert len(listed) == len(set(listed)) == body.count_lattice_points(k)


def test_counting_in_three_dimensions_matches_naive_scan():
    for pts in (std_simplex(3).vertices, q_family(3, 2).polytope.vertices,
                [(0, 0, 0), (2, 1, 0), (1, 3, 1), (0, 1, 2), (2, 2, 2)]):
        body = ConvexBody([(1, pts)], 3)
        for k in (1, 2):
            assert body.count_lattice_points(k) == oracles.count_points(pts, k)
