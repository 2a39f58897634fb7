from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latpoly.jsonio import (InputError, dump_polytope, dump_zonotope, dumps, load_body,
                            load_polytope, load_zonotope, loads, parse_integer, parse_rational)
from latpoly.polytopes import VPolytope
from latpoly.zonotopes import Zonotope


def test_parse_rational():
    assert parse_rational(3) == 3
    assert parse_rational("-7/4") == Fraction(-7, 4)
    assert parse_rational(" 5 ") == 5
    for bad in (1.5, True, "1/0", "x", "1.5", None, [1]):
        with pytest.raises(InputError):
            parse_rational(bad)


def test_parse_integer():
    assert parse_integer("4/2") == 2
    with pytest.raises(InputError):
        parse_integer("1/2")


def test_load_polytope():
    P = load_polytope({"ambient_dim": 2, "vertices": [[0, 0], ["1/2", 0], [0, 1]]})
    assert P == VPolytope.from_points([(0, 0), (Fraction(1, 2), 0), (0, 1)])
    for bad in ({"vertices": [[0]]}, {"ambient_dim": 2, "vertices": [[0]]},
                {"ambient_dim": 1, "vertices": []}, {"ambient_dim": 0, "vertices": [[]]},
                {"ambient_dim": 1, "vertices": [0]}, []):
        with pytest.raises(InputError):
            load_polytope(bad)


def test_load_zonotope_and_dispatch():
    doc = {"ambient_dim": 2, "generators": [[1, 0], [0, 1]]}
    assert load_zonotope(doc) == Zonotope.of((1, 0), (0, 1))
    assert isinstance(load_body(doc), Zonotope)
    assert isinstance(load_body({"ambient_dim": 1, "vertices": [[0], [1]]}), VPolytope)
    with pytest.raises(InputError):
        load_zonotope({"ambient_dim": 1, "generators": [["1/2"]]})


def test_loads_rejects_bad_json():
    with pytest.raises(InputError, match="invalid JSON"):
        loads("{not json")


@given(st.lists(st.tuples(st.fractions(max_denominator=5), st.fractions(max_denominator=5)),
                min_size=1, max_size=5))
def test_polytope_round_trip(pts):
    P = VPolytope.from_points(pts)
    text = dumps(dump_polytope(P))
    assert load_polytope(json.loads(text)) == P
    assert "." not in text  # no floats anywhere


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=4))
def test_zonotope_round_trip(gens):
    Z = Zonotope(2, tuple(gens))
    assert load_zonotope(json.loads(dumps(dump_zonotope(Z)))) == Z
