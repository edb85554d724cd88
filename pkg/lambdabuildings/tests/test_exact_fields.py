# -*- coding: utf-8 -*-
"""
For testing lambdabuildings.exact_fields functionality
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lambdabuildings import exact_fields as ef
from lambdabuildings.errors import (DivisionByZero, NegativeRadicand,
                                    PrecisionExhausted)
from lambdabuildings.exact_fields import PuiseuxElement, parse_puiseux

P = parse_puiseux

_terms = st.lists(st.tuples(st.integers(-3, 3), st.sampled_from([1, 2, 3]),
                            st.integers(-4, 4).filter(bool)),
                  min_size=1, max_size=4)


@st.composite
def puiseux(draw, positive=False):
    terms = draw(_terms)
    elem = PuiseuxElement([(Fraction(num, den), coeff)
                           for num, den, coeff in terms])
    if elem.is_exact_zero():
        elem = PuiseuxElement.one()
    if positive and elem.sign() < 0:
        elem = -elem
    return elem


def test_add():
    assert (P('t') + P('-t')).is_exact_zero()
    assert P('1 + t') + P('t') == P('1 + 2*t')
    trunc = PuiseuxElement({0: 1, 1: 1}, certified_order=2)
    out = trunc + PuiseuxElement.t(3)
    assert out == trunc
    assert not out.is_exact and out.certified_order == 2


def test_mul():
    half = PuiseuxElement.t(Fraction(1, 2))
    assert half * half == PuiseuxElement.t()
    assert P('1 + t') * P('1 - t') == P('1 - t^2')
    assert (PuiseuxElement.zero() * P('3 - t^(1/3)')).is_exact_zero()


def test_inverse():
    out = ef.inverse(PuiseuxElement.t())
    assert out == PuiseuxElement.t(-1) and out.is_exact
    out = ef.inverse(P('1 + t'), depth=3)
    assert out == P('1 - t + t^2 + O(t^3)')
    with pytest.raises(DivisionByZero):
        ef.inverse(PuiseuxElement.zero())
    with pytest.raises(PrecisionExhausted):
        ef.inverse(PuiseuxElement((), certified_order=2))


def test_inverse_window_shifts_with_order():
    # certified to depth - ord(a)
    out = ef.inverse(P('t^2 + t^3'), depth=3)
    assert out.certified_order == 1
    assert (out * P('t^2 + t^3') - 1).is_zero_through_window()


def test_compare():
    assert ef.compare(P('t'), P('t^2')) == ef.GT
    x = P('2 - t^(1/2)')
    assert ef.compare(x, x) == ef.EQ
    assert P('t^(-1)') > P('1000')
    assert P('-t^(-1)') < P('-1000')
    with pytest.raises(PrecisionExhausted):
        ef.compare(PuiseuxElement({0: 1}, certified_order=2), P('1'))


def test_compare_rational_functions_is_exact():
    a = ef.parse_rational_function('1/(1 + t)')
    b = ef.parse_rational_function('1 - t + t^2 - t^3/(1 + t)')
    assert ef.compare(a, b) == ef.EQ
    assert a > ef.parse_rational_function('1 - t')


def test_sqrt():
    assert ef.sqrt(P('t^2')) == PuiseuxElement.t()
    assert ef.sqrt(P('1 + t'), depth=3) == P('1 + t/2 - t^2/8 + O(t^3)')
    # the depth-2 root agrees through its window
    assert ef.sqrt(P('1 + t'), depth=2) == P('1 + t/2 + O(t^2)')
    with pytest.raises(NegativeRadicand):
        ef.sqrt(P('-1'))
    with pytest.raises(PrecisionExhausted):
        ef.sqrt(PuiseuxElement((), certified_order=1))


def test_sqrt_irrational_coefficient():
    root = ef.sqrt(P('2*t^3'))
    assert root.order == Fraction(3, 2)
    assert root * root == P('2*t^3')


@pytest.mark.parametrize('text, expected', [
    ('1 - 3/2*t^(1/2) + t^2', '1 - 3/2*t^(1/2) + t^2'),
    ('t^(-1)', 't^(-1)'),
    ('0', '0'),
    ('-t + 4', '4 - t'),
    ('2 + t + O(t^2)', '2 + t + O(t^2)'),
])
def test_format_parse(text, expected):
    assert ef.format_puiseux(P(text)) == expected


@pytest.mark.parametrize('text', ['', 'x + 1', 't^t', '1 + sin(t)', '((1'])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        P(text)


def test_parse_rejects_non_strings():
    with pytest.raises(TypeError):
        P(1.5)
    with pytest.raises(TypeError):
        ef.as_rational(0.5)


def test_substitute_doubles_orders():
    x = P('t^(-1) + 3*t^(1/2)')
    assert x.substitute(2) == P('t^(-2) + 3*t')
    with pytest.raises(ValueError):
        x.substitute(0)


def test_coefficient_window():
    x = P('1 + 2*t + O(t^3)')
    assert x.coefficient(1) == 2
    assert x.coefficient(2) == 0
    with pytest.raises(PrecisionExhausted):
        x.coefficient(3)


def test_get_default_depth(monkeypatch):
    monkeypatch.delenv('LB_DEPTH', raising=False)
    assert ef.get_default_depth() == 8
    monkeypatch.setenv('LB_DEPTH', '5/2')
    assert ef.get_default_depth() == Fraction(5, 2)
    assert ef.get_default_depth(3) == 3
    with pytest.raises(ValueError):
        ef.get_default_depth(0)


def test_default_depth(monkeypatch):
    monkeypatch.setenv('LB_DEPTH', '5')
    with ef.default_depth(3) as depth:
        assert depth == 3 and ef.get_default_depth() == 3
        with ef.default_depth('1/2'):
            assert ef.get_default_depth() == Fraction(1, 2)
            assert ef.get_default_depth(4) == 4
        assert ef.get_default_depth() == 3
        with ef.default_depth():
            assert ef.get_default_depth() == 3
    assert ef.get_default_depth() == 5
    with pytest.raises(ValueError):
        with ef.default_depth(-1):
            pass
    assert ef.get_default_depth() == 5
    with ef.default_depth(3):
        assert ef.inverse(P('1 + t')) == P('1 - t + t^2 + O(t^3)')


def test_rational_function_roundtrip_sympy():
    r = ef.parse_rational_function('(1 + t^(1/2))/(1 - t)')
    assert ef.from_sympy(ef.to_sympy(r)) == r
    assert ef.parse_rational_function('(1 - t^2)/(1 - t)').cancel() \
        == ef.parse_rational_function('1 + t')


@settings(max_examples=60, deadline=None)
@given(puiseux(), puiseux(), puiseux())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=40, deadline=None)
@given(puiseux())
def test_inverse_residual(a):
    assert (a * a.inverse(depth=4) - 1).is_zero_through_window()


@settings(max_examples=40, deadline=None)
@given(puiseux(positive=True), puiseux(positive=True))
def test_order_compatibility(a, b):
    assert a > 0 and b > 0
    assert a + b > 0
    assert a * b > 0


@settings(max_examples=30, deadline=None)
@given(puiseux(positive=True))
def test_sqrt_residual(a):
    root = a.sqrt(depth=4)
    assert root >= 0
    assert (root * root - a).is_zero_through_window()


@pytest.mark.slow
def test_field_axioms_large():
    from lambdabuildings.datasets import make_puiseux
    for seed in range(1000):
        a, b, c = (make_puiseux(seed=3 * seed + k) for k in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a * a.inverse(depth=8) - 1).is_zero_through_window()
