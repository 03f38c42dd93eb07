from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from opde.errors import DivisionByZeroPoly, NotDivisible
from opde.poly import NEG_INF, BivariatePoly, X, Y, ZERO, pochhammer, rat

coeffs = st.fractions(min_value=-30, max_value=30, max_denominator=9)
polys = st.builds(
    BivariatePoly,
    st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), coeffs, max_size=6),
)


def test_square_of_sum():
    assert (X + Y) ** 2 == X**2 + 2 * X * Y + Y**2


def test_evaluate():
    p = X * (1 - X - Y)
    assert p.evaluate(Fraction(1, 3), Fraction(1, 3)) == Fraction(1, 9)


def test_multiply_by_zero_gives_empty_map():
    p = X**2 + 3 * Y
    assert (p * ZERO).is_zero()
    assert len(p * ZERO) == 0


def test_zero_degree_is_sentinel():
    assert ZERO.degree() == NEG_INF
    assert ZERO.degree() != -1
    # degree arithmetic stays honest through the sentinel
    assert (ZERO * X).degree() == NEG_INF


def test_diff():
    assert (X**2 * Y).diff(1) == 2 * X * Y
    assert (X**2).diff(2) == ZERO


def test_exact_division():
    assert (X**2 - Y**2).exact_div(X - Y) == X + Y
    assert (X * (1 - X - Y)).exact_div(X) == 1 - X - Y
    with pytest.raises(NotDivisible):
        (X + 1).exact_div(Y)
    with pytest.raises(DivisionByZeroPoly):
        X.exact_div(ZERO)


def test_pochhammer():
    assert pochhammer(1, 3) == 6
    assert pochhammer(Fraction(7, 5), 0) == 1
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)


def test_trailing_coefficient_orders_by_graded_lex():
    p = Y * (1 - X - Y)  # y - xy - y^2
    assert p.trailing_coefficient() == 1
    assert (-p).trailing_coefficient() == -1


def test_floats_rejected():
    with pytest.raises(TypeError):
        rat(0.5)
    with pytest.raises(TypeError):
        BivariatePoly({(0, 0): 0.5})


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p + q) - q == p
    assert p * q == q * p


@given(polys, polys)
def test_degree_of_product_adds(p, q):
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree() == p.degree() + q.degree()


@given(polys, polys)
def test_exact_division_round_trip(p, q):
    if not q.is_zero():
        assert (p * q).exact_div(q) == p


@given(polys, polys)
def test_diff_is_a_derivation(p, q):
    for axis in (1, 2):
        assert (p * q).diff(axis) == p.diff(axis) * q + p * q.diff(axis)
