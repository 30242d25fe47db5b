from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scrollbei.errors import DimensionError, ParseError
from scrollbei.polynomial import (
    GREVLEX,
    LEX,
    PolyRing,
    Polynomial,
    elimination,
    leading_term,
    make_monic,
    monomial_compare,
    normalize_coeff,
    parse_polynomial,
)
from scrollbei.scroll import paper_minor

from conftest import mono

ORDERS = [GREVLEX, LEX, elimination(1), elimination(2)]


def test_compare_examples(r3):
    assert monomial_compare(mono(r3, x2=2), mono(r3, x1=1, x3=1)) == 1
    u = mono(r3, x1=1, x4=1)
    assert monomial_compare(u, u) == 0
    assert monomial_compare(mono(r3, x1=3), mono(r3, x2=2)) == 1


def test_compare_length_mismatch():
    with pytest.raises(DimensionError):
        monomial_compare((1, 0), (1, 0, 0))


def test_leading_terms(r3):
    g13 = paper_minor(r3, 1, 3)
    assert leading_term(g13) == (mono(r3, x2=1, x3=1), -1)
    five = Polynomial.constant(r3, 5)
    assert leading_term(five) == (r3.unit(), 5)
    assert leading_term(paper_minor(r3, 1, 2)) == (mono(r3, x2=2), -1)
    assert make_monic(paper_minor(r3, 1, 2)).render() == "x2^2 - x1*x3"


def test_prop_ix_identity(r3):
    d = lambda i, j: paper_minor(r3, i, j)
    assert r3.x(3) * d(1, 3) == r3.x(4) * d(1, 2) + r3.x(2) * d(2, 3)


def test_coefficients_are_exact(r3):
    f = parse_polynomial("3/6*x1 - 2/2", r3)
    assert f.terms[mono(r3, x1=1)] == Fraction(1, 2)
    assert isinstance(f.terms[r3.unit()], int)
    with pytest.raises(TypeError):
        normalize_coeff(0.5)


def test_render_examples(r3):
    assert r3.zero().render() == "0"
    assert parse_polynomial("-3/2*x1", r3).render() == "-3/2*x1"
    assert parse_polynomial("x1*x3 - x2^2", r3).render() == "-x2^2 + x1*x3"


@pytest.mark.parametrize("text", ["x1 +", "x5", "2*", "x1^", "x1 ** 2", "1/0*x1"])
def test_parse_errors(r3, text):
    with pytest.raises((ParseError, ZeroDivisionError)):
        parse_polynomial(text, r3)


# --- property tests ---------------------------------------------------------

coeffs = st.one_of(st.integers(-5, 5), st.fractions(min_value=-5, max_value=5, max_denominator=4))


def polys(ring, max_terms=5, max_exp=3):
    m = st.tuples(*[st.integers(0, max_exp)] * ring.num_vars)
    return st.dictionaries(m, coeffs, max_size=max_terms).map(lambda d: Polynomial(ring, d))


R = PolyRing(3)
monos = st.tuples(*[st.integers(0, 4)] * 3)


@given(polys(R), polys(R), polys(R))
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + (-f)).is_zero()


@given(polys(R))
def test_render_parse_roundtrip(f):
    assert parse_polynomial(f.render(), R) == f


@pytest.mark.parametrize("order", ORDERS, ids=str)
@given(u=monos, v=monos, w=monos)
def test_order_axioms(order, u, v, w):
    cuv = monomial_compare(u, v, order)
    assert cuv == -monomial_compare(v, u, order)
    assert (cuv == 0) == (u == v)
    uw = tuple(a + b for a, b in zip(u, w))
    vw = tuple(a + b for a, b in zip(v, w))
    assert monomial_compare(uw, vw, order) == cuv
    assert monomial_compare(uw, u, order) >= 0


@pytest.mark.parametrize("n", range(2, 13))
def test_minor_leading_term_all_pairs(n):
    ring = PolyRing.scroll(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            lm, c = paper_minor(ring, i, j).leading_term()
            expect = [0] * (n + 1)
            expect[j - 1] += 1
            expect[i] += 1
            assert lm == tuple(expect) and c == -1
