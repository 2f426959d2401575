import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from parec.scalars import R, Poly, RatFunc, format_rational, parse_rational, poly_add, poly_mul, poly_neg, ratfunc_div

rationals = st.builds(Fraction, st.integers(-49, 49), st.integers(1, 12))
polys = st.lists(rationals, max_size=4).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
ratfuncs = st.builds(RatFunc, polys, nonzero_polys)


def test_poly_examples():
    assert poly_mul(R + 1, R - 1) == R * R - 1
    assert poly_add(R * 3 + 2, Poly()) == R * 3 + 2
    assert poly_mul(Poly([0, 2]), Poly([0, 3])) == Poly([0, 0, 6])
    assert poly_neg(R) == Poly([0, -1])


def test_ratfunc_div_examples():
    q = ratfunc_div(RatFunc(1), RatFunc(R))
    assert q.num == Poly([1]) and q.den == R
    assert ratfunc_div(RatFunc(R * R), RatFunc(R)) == RatFunc(R)
    # (r^2 - 1) / (r - 1): long division leaves quotient r + 1, remainder 0
    quot, rem = divmod(R * R - 1, R - 1)
    assert rem.is_zero() and quot == R + 1
    assert ratfunc_div(RatFunc(R * R - 1), RatFunc(R - 1)) == RatFunc(R + 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ratfunc_div(RatFunc(R), RatFunc(0))
    with pytest.raises(ZeroDivisionError):
        RatFunc(1, 0)


def test_canonical_denominator_monic():
    q = RatFunc(Poly([2]), Poly([0, 4]))
    assert q.den == R and q.num == Poly([Fraction(1, 2)])
    assert RatFunc(0, R + 5).den == Poly([1])


@pytest.mark.parametrize(
    "p, text",
    [
        (Poly([69, 10]), "10*r + 69"),
        (Poly([-2]), "-2"),
        (Poly(), "0"),
        (R * R, "r^2"),
        (Poly([1, -3, 1]), "r^2 - 3*r + 1"),
        (Poly([0, -1]), "-r"),
        (Poly([Fraction(1, 2), 0, Fraction(-3, 4)]), "-3/4*r^2 + 1/2"),
    ],
)
def test_poly_str(p, text):
    assert str(p) == text


def test_json_round_trip():
    p = Poly([Fraction(-1, 3), 0, 5])
    assert p.to_json() == ["-1/3", "0", "5"]
    assert Poly.from_json(json.loads(json.dumps(p.to_json()))) == p
    q = RatFunc(R + 1, R * R)
    assert RatFunc.from_json(q.to_json()) == q
    assert q.to_json() == {"num": ["1", "1"], "den": ["0", "0", "1"]}


def test_rational_strings():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-4, 2)) == "-2"
    assert parse_rational("3/2") == Fraction(3, 2)
    with pytest.raises(ValueError):
        parse_rational("x")


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == Poly()


@given(nonzero_polys, nonzero_polys)
def test_degree_additive(a, b):
    assert (a * b).degree == a.degree + b.degree


@given(polys, nonzero_polys)
def test_division_identity(a, b):
    q, rem = divmod(a, b)
    assert q * b + rem == a
    assert rem.degree < b.degree


@given(ratfuncs, ratfuncs, ratfuncs)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == RatFunc(1)
        assert (b / a) * a == b


@given(polys, nonzero_polys)
def test_canonicalization_idempotent(p, q):
    x = RatFunc(p, q)
    y = RatFunc(x.num, x.den)
    assert (y.num, y.den) == (x.num, x.den)
    assert hash(x) == hash(y)
    assert x.den.leading() == 1


@given(polys, rationals)
def test_evaluation_is_a_homomorphism(p, x):
    assert (p * p)(x) == p(x) ** 2
    assert (p + R)(x) == p(x) + x
