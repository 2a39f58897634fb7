from __future__ import annotations

from fractions import Fraction
from math import ceil

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from latpoly.linalg import LatticeBasis, det, rank
from latpoly.lp import ConvexBody
from latpoly.minima import (MinimaResult, check_section_lemma, minkowski_sandwich,
                            successive_minima, successive_minima_section)
from latpoly.polytopes import (VPolytope, cross_polytope, cube, dilate, difference_gauge_view,
                               symmetric_gauge_view, symmetrize, volume)
from latpoly.qfamily import q_family

from . import oracles

small = st.integers(-3, 3)


@st.composite
def symmetric_polygons(draw):
    pts = draw(st.lists(st.tuples(small, small), min_size=2, max_size=3))
    P = symmetrize(VPolytope.from_points(pts))
    assume(rank([list(v) for v in P.vertices]) == 2)
    return P


@st.composite
def unimodular_2x2(draw):
    a, b = draw(st.integers(-2, 2)), draw(st.integers(-2, 2))
    # [[1, a], [0, 1]] [[1, 0], [b, 1]]
    return [[1 + a * b, a], [b, 1]]


def test_cube_minima():
    for n in (1, 2, 3):
        res = successive_minima(symmetric_gauge_view(cube(n, -1, 1)))
        assert res.lambdas == (1,) * n


@pytest.mark.parametrize("l", [1, 2, 4, 40])
def test_q_family_minima(l):
    res = successive_minima(symmetric_gauge_view(q_family(3, l).polytope))
    assert res.lambdas == (Fraction(1, l), Fraction(1, l), 1)


def test_minima_halve_under_doubling():
    P = q_family(3, 2).polytope
    a = successive_minima(symmetric_gauge_view(P))
    b = successive_minima(symmetric_gauge_view(dilate(P, 2)))
    assert b.lambdas == tuple(x / 2 for x in a.lambdas)


def test_difference_body_minima():
    assert successive_minima(difference_gauge_view(cube(2))).lambdas == (1, 1)


def test_section_examples():
    K = symmetric_gauge_view(cube(3, -1, 1))
    assert successive_minima_section(K, LatticeBasis(3, ((1, 0, 0), (0, 1, 0)))).lambdas == (1, 1)
    K2 = symmetric_gauge_view(cube(2, -1, 1))
    res = successive_minima_section(K2, LatticeBasis(2, ((1, 1),)))
    assert res.lambdas == (1,) and res.witnesses == ((1, 1),)
    KQ = symmetric_gauge_view(q_family(3, 5).polytope)
    assert successive_minima_section(KQ, LatticeBasis(3, ((0, 0, 1),))).lambdas == (1,)
    with pytest.raises(ValueError, match="saturated"):
        successive_minima_section(K2, LatticeBasis(2, ((2, 2),)))


def test_sandwich_examples():
    r = minkowski_sandwich(symmetric_gauge_view(cube(2, -1, 1)), 4)
    assert r.product == 4 and r.upper_ok and r.product == r.upper
    r = minkowski_sandwich(symmetric_gauge_view(cross_polytope(2)), 2)
    assert r.product == 2 == r.lower and r.lower_ok
    r = minkowski_sandwich(symmetric_gauge_view(cube(2, -3, 3)), 36)
    assert r.product == 4 and r.lower_ok and r.upper_ok


def test_section_lemma_examples():
    K = symmetric_gauge_view(cube(3, -1, 1))
    m = successive_minima(K)
    rep = check_section_lemma(K, m, LatticeBasis(3, ((1, 0, 0), (0, 1, 0))), [2])
    assert rep.holds and rep.section_product == rep.kept_product == 1
    for l in (2, 3):
        KQ = symmetric_gauge_view(q_family(3, l).polytope)
        mq = successive_minima(KQ)
        rep = check_section_lemma(KQ, mq, LatticeBasis(3, ((1, 0, 0), (0, 1, 0))), [2])
        assert rep.holds and rep.section_product == rep.kept_product == Fraction(1, l * l)


def test_section_lemma_transversality():
    K = symmetric_gauge_view(cube(2, -1, 1))
    m = MinimaResult((1, 1), ((1, 0), (0, 1)))
    with pytest.raises(ValueError, match="subspaces intersect"):
        check_section_lemma(K, m, LatticeBasis(2, ((1, 0),)), [0])


def test_minima_result_validation():
    with pytest.raises(ValueError):
        MinimaResult((2, 1), ((1, 0), (0, 1)))


def test_degenerate_body_rejected():
    flat = ConvexBody([(1, [(1, 1), (-1, -1)])], 2)
    with pytest.raises(ValueError, match="degenerate"):
        successive_minima(flat)


# -- properties ------------------------------------------------------------------

@settings(max_examples=20, deadline=None)
@given(symmetric_polygons())
def test_minima_match_definition_oracle(P):
    res = successive_minima(symmetric_gauge_view(P))
    # every minimum is at most B = max gauge(e_i), and B*P lies in the box of radius B*max|x|
    B = max(oracles.gauge(P.vertices, e) for e in ((1, 0), (0, 1)))
    radius = ceil(B * max(abs(x) for v in P.vertices for x in v))
    assert list(res.lambdas) == oracles.minima(P.vertices, radius)


@settings(max_examples=25, deadline=None)
@given(symmetric_polygons())
def test_witnesses_and_rescan(P):
    K = symmetric_gauge_view(P)
    res = successive_minima(K)
    assert det([list(w) for w in res.witnesses]) != 0
    assert all(K.gauge(w) == lam for w, lam in zip(res.witnesses, res.lambdas))
    # no lattice vector outside the span of earlier witnesses beats lambda_i
    for i, lam in enumerate(res.lambdas):
        span = [list(w) for w in res.witnesses[:i]]
        for y in K.lattice_points(lam):
            if any(y) and rank(span + [list(y)]) > len(span):
                assert K.gauge(y) >= lam


@settings(max_examples=20, deadline=None)
@given(symmetric_polygons(), unimodular_2x2())
def test_minima_unimodular_invariance(P, U):
    moved = VPolytope.from_points([tuple(sum(U[r][c] * v[c] for c in range(2)) for r in range(2))
                                   for v in P.vertices])
    a = successive_minima(symmetric_gauge_view(P)).lambdas
    b = successive_minima(symmetric_gauge_view(moved)).lambdas
    assert a == b


@settings(max_examples=20, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=3, max_size=4))
def test_monotonicity(pts):
    P = VPolytope.from_points(pts)
    S = symmetrize(P)
    assume(rank([[a - b for a, b in zip(v, P.vertices[0])] for v in P.vertices]) == 2)
    # S inside 2S
    a = successive_minima(symmetric_gauge_view(S)).lambdas
    b = successive_minima(symmetric_gauge_view(dilate(S, 2))).lambdas
    assert all(x >= y for x, y in zip(a, b))
    # P inside SP, hence P - P inside SP - SP
    c = successive_minima(difference_gauge_view(P)).lambdas
    d = successive_minima(difference_gauge_view(S)).lambdas
    assert all(x >= y for x, y in zip(c, d))


@settings(max_examples=20, deadline=None)
@given(symmetric_polygons())
def test_sandwich_on_random_polygons(P):
    r = minkowski_sandwich(symmetric_gauge_view(P), volume(P))
    assert r.lower_ok and r.upper_ok


@settings(max_examples=15, deadline=None)
@given(symmetric_polygons())
def test_section_lemma_on_random_polygons(P):
    K = symmetric_gauge_view(P)
    m = successive_minima(K)
    for L in (((1, 0),), ((0, 1),), ((1, 1),), ((1, -1),)):
        basis = LatticeBasis(2, L)
        for j in (0, 1):
            if rank([list(m.witnesses[j]), list(L[0])]) == 2:
                assert check_section_lemma(K, m, basis, [j]).holds
