# -*- coding: utf-8 -*-
"""
Functions for the additively written group of positive field elements
"""

import functools
from fractions import Fraction

from .errors import PrecisionExhausted
from .exact_fields import (EQ, GT, LT, PuiseuxElement, RationalFunction,
                           as_puiseux, as_rational, compare,
                           parse_rational_function)

IN_UPPER, IN_LOWER, NEITHER = 'in_upper', 'in_lower', 'neither'


def _as_carrier(value):
    if isinstance(value, (PuiseuxElement, RationalFunction)):
        return value
    if isinstance(value, str):
        value = parse_rational_function(value)
        return value.numerator if value.is_polynomial else value
    return as_puiseux(value)


def _is_exact(value):
    return isinstance(value, RationalFunction) or value.is_exact


def _field_mul(a, b, depth=None):
    if _is_exact(a) and _is_exact(b):
        if isinstance(a, RationalFunction) or isinstance(b, RationalFunction):
            out = RationalFunction(1) * a * b
            return out.numerator if out.is_polynomial else out
        return a * b
    return as_puiseux(a, depth=depth) * as_puiseux(b, depth=depth)


def _field_inverse(a, depth=None):
    if isinstance(a, RationalFunction):
        out = a.inverse()
        return out.numerator if out.is_polynomial else out
    if a.is_exact and len(a.terms) > 1:
        return RationalFunction(1, a)
    return a.inverse(depth=depth)


def _field_order(a):
    if isinstance(a, RationalFunction):
        return a.order
    if a.is_empty:
        raise PrecisionExhausted('order', [a])
    return a.order


class LogElement:
    """
    Formal logarithm ``lg r`` of a positive field element `r`

    Parameters
    ----------
    carrier : PuiseuxElement, RationalFunction, int, fractions.Fraction or str
        Positive element `r`

    Raises
    ------
    ValueError
        If `carrier` is not positive

    Examples
    --------
    >>> from lambdabuildings.log_value import LogElement, log_add
    >>> str(log_add(LogElement(2), LogElement(3)))
    'lg(6)'
    """

    __slots__ = ('carrier',)

    def __init__(self, carrier):
        carrier = _as_carrier(carrier)
        if compare(carrier, PuiseuxElement.zero()) != GT:
            raise ValueError('Carrier of a LogElement must be positive, not '
                             '{}'.format(carrier))
        self.carrier = carrier

    @classmethod
    def zero(cls):
        return cls(PuiseuxElement.one())

    def is_zero(self):
        return compare(self.carrier, PuiseuxElement.one()) == EQ

    def __add__(self, other):
        return log_add(self, other)

    def __neg__(self):
        return log_neg(self)

    def __sub__(self, other):
        return log_sub(self, other)

    def __abs__(self):
        return log_abs(self)

    def __lt__(self, other):
        return log_compare(self, other) == LT

    def __le__(self, other):
        return log_compare(self, other) != GT

    def __gt__(self, other):
        return log_compare(self, other) == GT

    def __ge__(self, other):
        return log_compare(self, other) != LT

    def __eq__(self, other):
        if not isinstance(other, LogElement):
            return NotImplemented
        return log_compare(self, other) == EQ

    __hash__ = None

    def __str__(self):
        return 'lg({})'.format(self.carrier)

    def __repr__(self):
        return "LogElement('{}')".format(self.carrier)


def lg(value):
    """Returns the formal logarithm of positive `value`"""
    return LogElement(value)


@functools.total_ordering
class ValueGroupElement:
    """
    Element of the value group, realized as an exact rational

    Serializes as the fraction string ``p/q``.
    """

    __slots__ = ('value',)

    def __init__(self, value):
        self.value = as_rational(value)

    def __add__(self, other):
        return ValueGroupElement(self.value + _value_of(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ValueGroupElement(self.value - _value_of(other))

    def __neg__(self):
        return ValueGroupElement(-self.value)

    def __abs__(self):
        return ValueGroupElement(abs(self.value))

    def __mul__(self, k):
        return ValueGroupElement(self.value * as_rational(k))

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.value == _value_of(other)
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self.value < _value_of(other)

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return "ValueGroupElement('{}')".format(self.value)


def _value_of(other):
    if isinstance(other, ValueGroupElement):
        return other.value
    return as_rational(other)


def log_add(x, y):
    """Group law ``lg r + lg s = lg(rs)``"""
    return LogElement(_field_mul(x.carrier, y.carrier))


def log_neg(x):
    return LogElement(_field_inverse(x.carrier))


def log_sub(x, y):
    return log_add(x, log_neg(y))


def log_scale(x, k):
    """Integer multiple ``k * lg r = lg(r^k)``"""
    if not isinstance(k, int):
        raise TypeError('Provided `k` must be an int, not {}'
                        .format(type(k).__name__))
    carrier = x.carrier if k >= 0 else _field_inverse(x.carrier)
    out = PuiseuxElement.one()
    for _ in range(abs(k)):
        out = _field_mul(out, carrier)
    return LogElement(out)


def log_compare(x, y):
    """Compares log elements through their carriers"""
    return compare(x.carrier, y.carrier)


def log_abs(x):
    """
    Absolute value, carried by ``max(r, 1/r)``

    Raises
    ------
    PrecisionExhausted
        If ``r`` cannot be compared with 1

    Examples
    --------
    >>> from lambdabuildings.log_value import log_abs, lg
    >>> str(log_abs(lg('t')))
    'lg(t^(-1))'
    """
    if compare(x.carrier, PuiseuxElement.one()) == LT:
        return log_neg(x)
    return x


def quotient_map(x):
    """
    Maps ``lg r`` to ``-ord_t(r)``, normalized so that ``lg t^(-1)`` is 1

    Its kernel consists of the logarithms of positive units of the valuation
    ring.

    Examples
    --------
    >>> from lambdabuildings.log_value import lg, quotient_map
    >>> str(quotient_map(lg('t^(3/2)')))
    '-3/2'
    """
    return ValueGroupElement(-_field_order(x.carrier))


def archimedean_class(x):
    """
    Archimedean class of ``|x|``, as a sortable key

    Returns
    -------
    key : tuple or None
        None for zero; ``(0, -s)`` when ``|x|`` is of the size of ``t^s`` with
        ``s > 0``; ``(1, 0)`` for nonzero constant size; ``(2, 0)`` for
        multiples of ``lg t^(-1)``
    """
    m = log_abs(x).carrier
    if compare(m, PuiseuxElement.one()) == EQ:
        return None
    order = _field_order(m)
    if order < 0:
        return (2, 0)
    m = as_puiseux(m)
    if compare(PuiseuxElement.constant(m.leading_coefficient),
               PuiseuxElement.one()) == GT:
        return (1, 0)
    rest = m - 1
    if rest.is_empty:
        raise PrecisionExhausted('archimedean class', [m])
    return (0, -rest.order)


def in_truncation(x, alpha):
    """
    Places `x` relative to the truncations determined by `alpha`

    Parameters
    ----------
    x : LogElement
        Element to classify
    alpha : LogElement
        Positive element fixing the scale

    Returns
    -------
    membership : {'in_lower', 'in_upper', 'neither'}
        'in_lower' if ``|x|`` is infinitely smaller than `alpha`; 'in_upper'
        if ``|x| <= n * alpha`` for some n but not infinitely smaller;
        'neither' if ``|x|`` is infinitely larger than `alpha`

    Examples
    --------
    >>> from lambdabuildings.log_value import in_truncation, lg
    >>> in_truncation(lg(7), lg('t^(-1)'))
    'in_lower'
    >>> in_truncation(lg('t^(-3)'), lg('t^(-1)'))
    'in_upper'
    """
    if log_compare(alpha, LogElement.zero()) != GT:
        raise ValueError('Provided `alpha` must be positive, not {}'
                         .format(alpha))
    cx, ca = archimedean_class(x), archimedean_class(alpha)
    if cx is None or cx < ca:
        return IN_LOWER
    if cx == ca:
        return IN_UPPER
    return NEITHER


def from_fraction(value):
    """Returns ``lg t^(-value)``, the element mapped to `value`"""
    return LogElement(PuiseuxElement.t(-Fraction(value)))
