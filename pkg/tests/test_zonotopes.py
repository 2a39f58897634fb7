from __future__ import annotations

import warnings
from math import comb, gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from latpoly.linalg import det, from_columns, rank
from latpoly.polytopes import cube, ehrhart, hull_vertices, volume
from latpoly.zonotopes import (GENERATOR_CAP, Zonotope, as_vpolytope, basis_exchange_bijection,
                               ehrhart_geometric, ehrhart_stanley, is_general_position,
                               is_primitive, zonotope_volume)

from . import oracles

entry = st.integers(-3, 3)


@st.composite
def zonotopes(draw, n=None, max_m=4):
    n = n or draw(st.integers(1, 3))
    m = draw(st.integers(n, max(n, max_m)))
    gens = draw(st.lists(st.tuples(*[entry] * n).filter(any), min_size=m, max_size=m))
    assume(rank(gens) == n)
    return Zonotope(n, tuple(gens))


def unit(n):
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def test_as_vpolytope_examples():
    assert as_vpolytope(Zonotope.of(*unit(2))).same_set(cube(2))
    seg = as_vpolytope(Zonotope.of((1, 1)))
    assert seg.vertices == ((0, 0), (1, 1))
    hexagon = as_vpolytope(Zonotope.of((1, 0), (0, 1), (1, 1)))
    assert len(hexagon.vertices) == 7  # 8 sums, (1, 1) appears twice
    assert len(hull_vertices(hexagon)) == 6


def test_generator_cap():
    Z = Zonotope(1, tuple((1,) for _ in range(GENERATOR_CAP + 1)))
    with pytest.raises(ValueError, match="generator cap"):
        as_vpolytope(Z)


def test_volume_examples():
    assert zonotope_volume(Zonotope.of(*unit(3))) == 1
    assert zonotope_volume(Zonotope.of((1, 0), (0, 1), (1, 1))) == 3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cube_coefficients(n):
    Z = Zonotope.of(*unit(n))
    expected = tuple(comb(n, i) for i in range(n + 1))
    assert ehrhart_stanley(Z).coefficients == expected
    assert ehrhart_geometric(Z).coefficients == expected


def test_stanley_examples():
    assert ehrhart_stanley(Zonotope.of((2, 0), (0, 2))).coefficients == (1, 4, 4)
    assert ehrhart_geometric(Zonotope.of((2, 0), (0, 2))).coefficients == (1, 4, 4)
    assert ehrhart_stanley(Zonotope.of((2, 4))).coefficients == (1, 2)
    assert ehrhart_stanley(Zonotope.of((1, 0), (0, 1), (1, 1))).coefficients == (1, 3, 3)


def test_zero_generators_are_flagged():
    Z = Zonotope.of((1, 0), (0, 0), (0, 1))
    assert Z.zero_generators == [1]
    with pytest.warns(UserWarning, match="zero generators"):
        g = ehrhart_stanley(Z)
    assert g.coefficients == (1, 2, 1)


def test_general_position_examples():
    assert is_general_position(Zonotope.of((1, 0), (0, 1), (1, 1)))
    assert not is_general_position(Zonotope.of((1, 0), (0, 1), (2, 0)))
    assert is_general_position(Zonotope.of(*[(1, t, t * t) for t in (0, 1, 2, 3, 5)]))
    with pytest.raises(ValueError):
        is_general_position(Zonotope.of((1, 0)))


def test_primitive_examples():
    assert is_primitive((1, 0, 0))
    assert not is_primitive((2, 4))
    assert is_primitive((6, 10, 15))
    with pytest.raises(ValueError):
        is_primitive((0, 0))


def _check_bijection(b, a, i, phi):
    n = len(b)
    assert len(phi) == comb(n, i) and len(set(phi.values())) == len(phi)
    for I, J in phi.items():
        assert len(J) == n - i
        assert det(from_columns([b[k] for k in I] + [a[j] for j in J], n)) != 0


def test_bijection_examples():
    e = unit(3)
    for i in (1, 2):
        phi = basis_exchange_bijection(e, e, i)
        assert all(set(I) | set(J) == {0, 1, 2} for I, J in phi.items())
    b, a = unit(2), [(1, 1), (1, -1)]
    _check_bijection(b, a, 1, basis_exchange_bijection(b, a, 1))
    with pytest.raises(ValueError):
        basis_exchange_bijection([(1, 1), (2, 2)], a, 1)


# -- properties ------------------------------------------------------------------

@settings(max_examples=30, deadline=None)
@given(zonotopes())
def test_formula_triangle(Z):
    s = ehrhart_stanley(Z)
    assert s.coefficients == ehrhart_geometric(Z).coefficients
    assert s.coefficients == ehrhart(as_vpolytope(Z)).coefficients


@settings(max_examples=12, deadline=None)
@given(zonotopes(n=2, max_m=3))
def test_stanley_against_naive_counting(Z):
    assert list(ehrhart_stanley(Z).coefficients) == oracles.ehrhart(as_vpolytope(Z).vertices)


@settings(max_examples=30, deadline=None)
@given(zonotopes())
def test_top_coefficient_is_volume(Z):
    g = ehrhart_stanley(Z)
    assert g[Z.ambient_dim] == zonotope_volume(Z) == volume(as_vpolytope(Z))


@settings(max_examples=30, deadline=None)
@given(zonotopes())
def test_linear_coefficient_is_sum_of_contents(Z):
    g1 = ehrhart_stanley(Z)[1]
    total = 0
    for v in Z.generators:
        c = 0
        for x in v:
            c = gcd(c, x)
        total += c
    assert g1 == total
    if all(is_primitive(v) for v in Z.generators):
        assert g1 == len(Z.generators)


@st.composite
def unimodular_3x3(draw):
    M = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(draw(st.integers(1, 5))):
        r, c = draw(st.sampled_from([(r, c) for r in range(3) for c in range(3) if r != c]))
        k = draw(st.integers(-2, 2))
        M = [[M[i][j] + (k * M[c][j] if i == r else 0) for j in range(3)] for i in range(3)]
    return [tuple(row[j] for row in M) for j in range(3)]


@settings(max_examples=25, deadline=None)
@given(unimodular_3x3(), unimodular_3x3(), st.sampled_from([1, 2]))
def test_bijection_on_random_unimodular_bases(b, a, i):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        _check_bijection(b, a, i, basis_exchange_bijection(b, a, i))
