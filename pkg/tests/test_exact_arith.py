"""Scalar/polynomial/rational-function/series arithmetic checks.

Ring and field axioms are exercised with hypothesis; the worked examples are
pinned exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crcverify.errors import DivisionByNonUnit, PoleError, UnboundSymbol
from crcverify.exact_arith import (
    GAUSS_I,
    GAUSS_ONE,
    GAUSS_ZERO,
    GaussRational,
    MultiPoly,
    PowerSeries,
    RationalFunction,
    gauss,
    poly_substitute,
    promote_to_gauss,
    ratfn_eval,
    rational_from_str,
    rational_to_str,
    series_compose_exp,
    series_div,
)

fractions_st = st.fractions(min_value=-40, max_value=40, max_denominator=12)
gauss_st = st.builds(GaussRational, fractions_st, fractions_st)


def poly_st(variables=("x", "y")):
    exps = st.tuples(*[st.integers(0, 3)] * len(variables))
    return st.dictionaries(exps, fractions_st, max_size=5).map(
        lambda terms: MultiPoly(variables, terms))


# -- Gaussian rationals ------------------------------------------------------

@given(gauss_st, gauss_st, gauss_st)
def test_gauss_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(gauss_st)
def test_gauss_inverses(a):
    assert a + (-a) == GAUSS_ZERO
    if a:
        assert a / a == GAUSS_ONE


@given(gauss_st)
def test_gauss_conjugation_involution_and_norm(a):
    assert a.conjugate().conjugate() == a
    assert a.norm() == (a * a.conjugate()).re
    assert (a.norm() == 0) == (not a)


def test_gauss_i_squares_to_minus_one():
    assert GAUSS_I * GAUSS_I == gauss(-1)


def test_gauss_json_roundtrip():
    z = gauss(Fraction(-3, 2), Fraction(5, 7))
    assert GaussRational.from_json(z.to_json()) == z
    assert z.to_json() == {"re": "-3/2", "im": "5/7"}


def test_rational_serialization():
    assert rational_to_str(Fraction(3, 4)) == "3/4"
    assert rational_to_str(Fraction(-7)) == "-7"
    assert rational_from_str("-7") == Fraction(-7)
    assert rational_from_str("3/4") == Fraction(3, 4)


# -- polynomials -------------------------------------------------------------

@given(poly_st(), poly_st(), poly_st())
@settings(max_examples=60)
def test_poly_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


def test_poly_no_zero_terms_stored():
    p = MultiPoly(("x",), {(1,): Fraction(2)}) - MultiPoly(("x",), {(1,): Fraction(2)})
    assert p.terms == {}
    assert p.is_zero()


def test_poly_substitute_matches_change_of_variables_table():
    src = ("S1", "S2")
    dst = ("T1", "T2")
    s1 = MultiPoly.variable(src, "S1", GAUSS_ONE)
    s2 = MultiPoly.variable(src, "S2", GAUSS_ONE)
    image = {
        "S1": MultiPoly.variable(dst, "T2", GAUSS_ONE),
        "S2": MultiPoly(dst, {(1, 0): -GAUSS_I, (0, 1): GAUSS_I}),
    }
    assert poly_substitute(s1, image) == image["S1"]
    assert poly_substitute(s2, image) == MultiPoly(
        dst, {(0, 1): GAUSS_I, (1, 0): -GAUSS_I})


def test_poly_substitute_identity():
    p = MultiPoly(("x", "y"), {(2, 1): Fraction(3), (0, 0): Fraction(-1)})
    ident = {v: MultiPoly.variable(("x", "y"), v) for v in ("x", "y")}
    assert poly_substitute(p, ident) == p


def test_poly_substitute_unbound():
    p = MultiPoly.variable(("x", "y"), "y")
    with pytest.raises(UnboundSymbol):
        poly_substitute(p, {"x": MultiPoly.variable(("z",), "z")})


@given(poly_st(("x",)), poly_st(("x",)))
@settings(max_examples=40)
def test_poly_substitute_is_ring_homomorphism(p, q):
    target = ("u", "v")
    image = {"x": MultiPoly(target, {(1, 0): Fraction(1), (0, 2): Fraction(-2)})}
    assert poly_substitute(p * q, image) == poly_substitute(p, image) * poly_substitute(q, image)
    assert poly_substitute(p + q, image) == poly_substitute(p, image) + poly_substitute(q, image)


def test_promote_to_gauss():
    p = MultiPoly(("x",), {(1,): Fraction(2)})
    g = promote_to_gauss(p)
    assert g.terms == {(1,): gauss(2)}


# -- rational functions ------------------------------------------------------

def geometric() -> RationalFunction:
    return RationalFunction.geometric_tail(1)


def test_ratfn_eval_examples():
    f = geometric()  # q1/(1-q1)
    assert ratfn_eval(f, Fraction(-1)) == Fraction(-1, 2)
    assert ratfn_eval(f, Fraction(0)) == 0
    with pytest.raises(PoleError):
        ratfn_eval(f, Fraction(1))


def test_ratfn_normalization_cancels_common_factor():
    # (q1 - q1^2)/(1-q1) = q1
    f = RationalFunction((Fraction(0), Fraction(1), Fraction(-1)), 1)
    assert f == RationalFunction.q_power(1, 1)
    assert f.is_polynomial()


def test_ratfn_geometric_partial_sum_identity():
    # q/(1-q) - q = q^2/(1-q)
    f = geometric() - RationalFunction.q_power(1, 1)
    assert f == RationalFunction((Fraction(0), Fraction(0), Fraction(1)), 1)


@given(st.fractions(min_value=-8, max_value=8, max_denominator=5),
       st.fractions(min_value=-8, max_value=8, max_denominator=5))
def test_ratfn_eval_multiplicative(a, b):
    f = RationalFunction.geometric_tail(a) + RationalFunction.const(b)
    g = RationalFunction.q_power(a, 2) - RationalFunction.geometric_tail(b)
    v = Fraction(-1)
    assert ratfn_eval(f * g, v) == ratfn_eval(f, v) * ratfn_eval(g, v)
    assert ratfn_eval(f + g, v) == ratfn_eval(f, v) + ratfn_eval(g, v)


# -- power series ------------------------------------------------------------

def sin_series(order: int) -> PowerSeries:
    coeffs = [GAUSS_ZERO] * (order + 1)
    for k in range(1, order + 1, 2):
        coeffs[k] = gauss(Fraction((-1) ** ((k - 1) // 2), factorial(k)))
    return PowerSeries("s", order, coeffs)


def cos_series(order: int) -> PowerSeries:
    coeffs = [GAUSS_ZERO] * (order + 1)
    for k in range(0, order + 1, 2):
        coeffs[k] = gauss(Fraction((-1) ** (k // 2), factorial(k)))
    return PowerSeries("s", order, coeffs)


def test_series_div_geometric():
    one = PowerSeries.constant("s", 6, GAUSS_ONE)
    one_minus_s = one - PowerSeries.identity("s", 6)
    g = series_div(one, one_minus_s)
    assert g.coeffs == (GAUSS_ONE,) * 7


def test_series_div_tangent_oracle():
    # expected tan coefficients frozen from multiplying back: tan*cos == sin
    order = 5
    tan = series_div(sin_series(order), cos_series(order))
    assert tan * cos_series(order) == sin_series(order)
    assert tan.coeffs[1] == GAUSS_ONE
    assert tan.coeffs[3] == gauss(Fraction(1, 3))
    assert tan.coeffs[5] == gauss(Fraction(2, 15))
    assert tan.coeffs[0] == GAUSS_ZERO and tan.coeffs[2] == GAUSS_ZERO


def test_series_div_nonunit():
    s = PowerSeries.identity("s", 4)
    with pytest.raises(DivisionByNonUnit):
        series_div(s, s)


@given(st.integers(-4, 4), st.integers(-4, 4))
def test_series_div_inverts_mul(a, b):
    order = 7
    u = PowerSeries("s", order,
                    [GAUSS_ONE] + [gauss(a, b)] * order)
    w = PowerSeries("s", order,
                    [gauss(1, 1)] + [gauss(b, -a)] * order)
    assert series_div(u * w, w) == u


def test_series_compose_exp_examples():
    assert series_compose_exp(GAUSS_ZERO, 4).coeffs == (GAUSS_ONE,) + (GAUSS_ZERO,) * 4

    e = series_compose_exp(-GAUSS_I, 3)
    assert e.coeffs == (GAUSS_ONE, -GAUSS_I, gauss(Fraction(-1, 2)), gauss(0, Fraction(1, 6)))

    e2 = series_compose_exp(GAUSS_ONE, 2)
    assert e2.coeffs == (GAUSS_ONE, GAUSS_ONE, gauss(Fraction(1, 2)))


def test_series_exp_addition_law():
    order = 8
    a = series_compose_exp(gauss(1, 2), order)
    b = series_compose_exp(gauss(-3, 1), order)
    assert a * b == series_compose_exp(gauss(-2, 3), order)


def test_series_derivative_and_argument_scaling():
    e = series_compose_exp(gauss(3), 6)
    assert e.derivative().truncate(5) == e.scale(gauss(3)).truncate(5)
    half = series_compose_exp(gauss(1), 6).scale_argument(gauss(Fraction(1, 2)))
    assert half == series_compose_exp(gauss(Fraction(1, 2)), 6)
