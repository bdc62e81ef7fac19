from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partition_identities.errors import EvalAtZero, NotAUnit
from partition_identities.ring import (
    PolyTU,
    parse_rational,
    poly_eval,
    poly_from_json,
    poly_mul,
    poly_to_json,
    rational_from_json,
    rational_to_json,
    ring_inverse,
)
from strategies import nonzero_rationals, polys, rationals, t_units

t, u = PolyTU.t(), PolyTU.u()


def test_poly_mul_examples():
    assert poly_mul(t * u, t * u) == PolyTU({(2, 2): 1})
    assert poly_mul(t - 1, t**-1) == 1 - t**-1
    w = 1 - t**-1
    assert poly_mul(w, w) == PolyTU({(0, 0): 1, (-1, 0): -2, (-2, 0): 1})


def test_poly_eval_examples():
    assert poly_eval(t**2 * u, -1, 2) == 2
    assert poly_eval(1 - t**-1, 2, 0) == Fraction(1, 2)
    with pytest.raises(EvalAtZero):
        poly_eval(1 - t**-1, 0, 0)


def test_ring_inverse_examples():
    assert ring_inverse(Fraction(3, 4)) == Fraction(4, 3)
    assert ring_inverse(PolyTU.monomial(-2, 3)) == PolyTU.monomial(Fraction(-1, 2), -3)
    with pytest.raises(NotAUnit):
        ring_inverse(1 + t)
    with pytest.raises(NotAUnit):
        ring_inverse(Fraction(0))
    with pytest.raises(NotAUnit):
        ring_inverse(u)


def test_zero_terms_dropped_and_canonical():
    p = PolyTU({(1, 0): 1, (0, 1): 0})
    assert p == t
    assert len(p) == 1
    assert (t + u) - u == t
    assert list(PolyTU({(2, 0): 1, (-1, 3): 2, (-1, 0): 5}).terms) == [(-1, 0), (-1, 3), (2, 0)]


def test_negative_u_exponent_rejected():
    with pytest.raises(ValueError):
        PolyTU({(0, -1): 1})


def test_scalar_interop():
    assert PolyTU.const(3) == 3
    assert 3 == PolyTU.const(3)
    assert hash(PolyTU.const(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert 2 * t == t + t
    assert Fraction(1, 2) - t == PolyTU({(0, 0): Fraction(1, 2), (1, 0): -1})


def test_str():
    assert str(t**2 * u + 3 * t * u - Fraction(1, 2)) == "t^2*u + 3*t*u - 1/2"
    assert str(PolyTU.zero()) == "0"


def test_parse_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("7") == 7
    for bad in ("1.5", "a", "1/0", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)


@given(polys)
def test_json_round_trip(p):
    assert poly_from_json(poly_to_json(p)) == p
    keys = [(d["et"], d["eu"]) for d in poly_to_json(p)]
    assert keys == sorted(keys)


@given(rationals)
def test_rational_json(x):
    assert rational_from_json(rational_to_json(x)) == x


@settings(max_examples=200)
@given(polys, polys, polys)
def test_poly_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == PolyTU.zero()
    assert x * PolyTU.one() == x


@settings(max_examples=200)
@given(rationals, rationals, rationals)
def test_rational_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == 0


@settings(max_examples=200)
@given(t_units)
def test_poly_unit_inverse(x):
    assert ring_inverse(x) * x == PolyTU.one()


@settings(max_examples=200)
@given(nonzero_rationals)
def test_rational_unit_inverse(x):
    assert ring_inverse(x) * x == 1


POINTS = [(Fraction(2), Fraction(3)), (Fraction(-1), Fraction(2)), (Fraction(1, 2), Fraction(-1, 3)),
          (Fraction(3), Fraction(1)), (Fraction(-5, 7), Fraction(4, 9))]


@settings(max_examples=200)
@given(polys, polys)
def test_eval_is_homomorphism(p, q):
    for tv, uv in POINTS:
        assert poly_eval(p * q, tv, uv) == poly_eval(p, tv, uv) * poly_eval(q, tv, uv)
        assert poly_eval(p + q, tv, uv) == poly_eval(p, tv, uv) + poly_eval(q, tv, uv)


@given(t_units, st.integers(-5, 5))
def test_integer_powers(x, e):
    assert x**e * x**-e == PolyTU.one()
