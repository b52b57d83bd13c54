from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cyclotomic_value
from tetrahopf.scalars import (
    Cyclotomic,
    FPoly,
    cyc_arith,
    cyclotomic_polynomial,
    parse_cyclotomic,
    root_of_unity,
    scalar_str,
)

ORDERS = (1, 2, 3, 4, 6, 12, 24)


def totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@st.composite
def cyclotomics(draw, n=None):
    n = n or draw(st.sampled_from(ORDERS))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=n))
    return Cyclotomic(n, coeffs)


@st.composite
def triples(draw):
    n = draw(st.sampled_from(ORDERS))
    return draw(cyclotomics(n)), draw(cyclotomics(n)), draw(cyclotomics(n))


def close(x: Cyclotomic, z: complex) -> bool:
    return abs(cyclotomic_value(x.c, x.n) - z) < 1e-9


@pytest.mark.parametrize("n", ORDERS)
def test_cyclotomic_polynomial_degree_is_totient(n):
    assert len(cyclotomic_polynomial(n)) - 1 == totient(n)


@pytest.mark.parametrize("n", ORDERS)
def test_root_of_unity_has_order_n(n):
    z = root_of_unity(1, n)
    assert z**n == 1
    for k in range(1, n):
        assert z**k != 1


def test_known_reductions():
    # 1 + w + w^2 = 0 in Q(zeta_3); i^2 = -1 in Q(zeta_4)
    w = root_of_unity(1, 3)
    assert 1 + w + w * w == 0
    i = root_of_unity(1, 4)
    assert i * i == -1
    assert root_of_unity(2, 6) == root_of_unity(1, 3).to_order(6)


@settings(max_examples=200, deadline=None)
@given(triples())
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@settings(max_examples=100, deadline=None)
@given(triples())
def test_arithmetic_matches_complex_oracle(t):
    a, b, _ = t
    za, zb = cyclotomic_value(a.c, a.n), cyclotomic_value(b.c, b.n)
    assert close(a + b, za + zb)
    assert close(a * b, za * zb)
    if b:
        assert close(a / b, za / zb)


@settings(max_examples=100, deadline=None)
@given(cyclotomics())
def test_canonical_form_is_idempotent(x):
    again = Cyclotomic(x.n, x.c)
    assert again.c == x.c and again == x
    assert hash(again) == hash(x)


@settings(max_examples=100, deadline=None)
@given(cyclotomics())
def test_text_round_trip(x):
    assert parse_cyclotomic(scalar_str(x), x.n) == x


def test_scalar_str_forms():
    assert scalar_str(Fraction(-3, 2)) == "-3/2"
    assert scalar_str(root_of_unity(1, 4)) == "1*z^1"
    assert parse_cyclotomic("1 - z^2", 4) == 2
    assert parse_cyclotomic("-z", 4) == -root_of_unity(1, 4)


def test_coercion_between_orders():
    a = root_of_unity(1, 4) + root_of_unity(1, 3)
    assert a.n == 12
    assert close(a, 1j + cyclotomic_value([0, 1], 3))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        cyc_arith(Cyclotomic.rational(1, 4), Cyclotomic.rational(0, 4), "div")
    with pytest.raises(ValueError):
        cyc_arith(Cyclotomic.rational(1, 4), Cyclotomic.rational(1, 4), "pow")


def test_fpoly_evaluation():
    p = FPoly({0: Fraction(1), 2: Fraction(3)})
    assert p(2) == 13
    assert (p * p)(2) == 169
