# -*- coding: utf-8 -*-
"""
Exact arithmetic in ordered fields of Puiseux series and rational functions
"""

import contextlib
import math
import numbers
import os
import re
from fractions import Fraction
from functools import reduce

import sympy
from sympy.parsing.sympy_parser import (convert_xor, parse_expr,
                                        standard_transformations)

from .errors import DivisionByZero, NegativeRadicand, PrecisionExhausted

LT, EQ, GT = -1, 0, 1
DEFAULT_DEPTH = Fraction(8)
_DEPTH_STACK = []

_T = sympy.Symbol('t', positive=True)
_TRANSFORMS = standard_transformations + (convert_xor,)
_ORDER_RE = re.compile(r"(?:^|\+)\s*O\((?P<body>.*)\)\s*$")


def as_rational(value):
    """
    Converts `value` to an exact :class:`fractions.Fraction`

    Parameters
    ----------
    value : int, str, fractions.Fraction or sympy.Rational
        Value to convert. Floats are rejected to keep arithmetic exact.

    Returns
    -------
    value : fractions.Fraction
        Exact rational
    """

    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError('Provided value must be an exact rational, not {}'
                        .format(type(value).__name__))
    if isinstance(value, sympy.Basic):
        if not value.is_Rational:
            raise TypeError('Provided value {} is not rational'.format(value))
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def get_default_depth(depth=None):
    """
    Resolves the truncation depth used by inverse and square root

    Parameters
    ----------
    depth : rational, optional
        Depth to use. If not specified, will use the innermost
        :func:`default_depth` block, then check for environmental variable
        'LB_DEPTH'; if that is not set, will use 8. Default: None

    Returns
    -------
    depth : fractions.Fraction
        Positive truncation depth
    """

    if depth is None and _DEPTH_STACK:
        depth = _DEPTH_STACK[-1]
    if depth is None:
        depth = os.environ.get('LB_DEPTH', DEFAULT_DEPTH)
    if isinstance(depth, str):
        depth = depth.strip()
    depth = as_rational(depth)
    if depth <= 0:
        raise ValueError('Truncation depth must be positive, not {}'
                         .format(depth))

    return depth


@contextlib.contextmanager
def default_depth(depth=None):
    """
    Sets the depth :func:`get_default_depth` resolves to inside a block

    Parameters
    ----------
    depth : rational, optional
        Truncation depth. If not specified the current default is kept.
        Default: None

    Examples
    --------
    >>> from lambdabuildings.exact_fields import default_depth
    >>> from lambdabuildings.exact_fields import get_default_depth
    >>> with default_depth(3):
    ...     get_default_depth()
    Fraction(3, 1)
    """

    _DEPTH_STACK.append(get_default_depth(depth))
    try:
        yield _DEPTH_STACK[-1]
    finally:
        _DEPTH_STACK.pop()


# coefficients are Fractions; square roots of non-square rationals extend
# them to real algebraic numbers held as sympy expressions


def _to_sympy(c):
    if isinstance(c, Fraction):
        return sympy.Rational(c.numerator, c.denominator)
    return sympy.sympify(c)


def _coerce_coeff(c):
    """Brings coefficient `c` into canonical form"""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    c = sympy.radsimp(sympy.expand(sympy.sympify(c)))
    if c.free_symbols:
        raise ValueError('Coefficient {} is not a number'.format(c))
    if c.is_Rational:
        return Fraction(int(c.p), int(c.q))
    return c


def _coeff_is_zero(c):
    if isinstance(c, Fraction):
        return c == 0
    if c == 0:
        return True
    zero = c.is_zero
    if zero is None:
        zero = sympy.simplify(c) == 0
    return bool(zero)


def _coeff_sign(c):
    if isinstance(c, Fraction):
        return (c > 0) - (c < 0)
    if _coeff_is_zero(c):
        return 0
    if c.is_positive:
        return 1
    if c.is_negative:
        return -1
    # nonzero real algebraic number: enough digits separate it from zero
    return 1 if c.evalf(60) > 0 else -1


def _coeff_add(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a + b
    return _coerce_coeff(_to_sympy(a) + _to_sympy(b))


def _coeff_mul(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a * b
    return _coerce_coeff(_to_sympy(a) * _to_sympy(b))


def _coeff_inv(c):
    if _coeff_is_zero(c):
        raise DivisionByZero('Cannot invert zero coefficient')
    if isinstance(c, Fraction):
        return 1 / c
    return _coerce_coeff(1 / _to_sympy(c))


def _coeff_sqrt(c):
    if _coeff_sign(c) < 0:
        raise NegativeRadicand('Coefficient {} is negative'.format(c))
    if isinstance(c, Fraction):
        num, den = math.isqrt(c.numerator), math.isqrt(c.denominator)
        if num * num == c.numerator and den * den == c.denominator:
            return Fraction(num, den)
    return _coerce_coeff(sympy.sqrtdenest(sympy.sqrt(_to_sympy(c))))


def _format_coeff(c):
    if isinstance(c, Fraction):
        return str(c)
    return '({})'.format(sympy.sstr(c))


def _lcm(values):
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)


class PuiseuxElement:
    """
    Truncated or exact Puiseux series over the rationals in an infinitesimal t

    Elements are immutable. The field is ordered so that `t` is a positive
    infinitesimal: the term with the smallest exponent decides the sign.

    Parameters
    ----------
    terms : dict or iterable of (exponent, coefficient) tuples, optional
        Terms of the series. Equal exponents are merged, zero coefficients are
        dropped and terms at or beyond `certified_order` are discarded.
        Default: ()
    certified_order : rational or math.inf, optional
        Exponent up to which the series is exact. ``math.inf`` marks an exact
        element. Default: math.inf

    Attributes
    ----------
    terms : tuple of (fractions.Fraction, coefficient) tuples
        Nonzero terms sorted by strictly increasing exponent
    certified_order : fractions.Fraction or math.inf
        Exponent up to which the terms are known

    Examples
    --------
    >>> from lambdabuildings.exact_fields import PuiseuxElement
    >>> x = PuiseuxElement.parse('1 - 3/2*t^(1/2) + t^2')
    >>> x.ramification
    2
    >>> str(x * x.t())
    't - 3/2*t^(3/2) + t^3'
    """

    __slots__ = ('_terms', '_certified', '_ramification')

    def __init__(self, terms=(), certified_order=math.inf):
        if certified_order != math.inf:
            certified_order = as_rational(certified_order)
        if isinstance(terms, dict):
            terms = terms.items()
        merged = {}
        for exp, coeff in terms:
            exp = as_rational(exp)
            if exp >= certified_order:
                continue
            coeff = _coerce_coeff(coeff)
            if exp in merged:
                coeff = _coeff_add(merged[exp], coeff)
            merged[exp] = coeff
        self._terms = tuple((e, c) for e, c in sorted(merged.items())
                            if not _coeff_is_zero(c))
        self._certified = certified_order
        self._ramification = None

    # constructors

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def monomial(cls, coeff=1, exponent=1):
        """Returns the exact element ``coeff * t^exponent``"""
        return cls({exponent: coeff})

    @classmethod
    def t(cls, exponent=1):
        return cls({exponent: 1})

    @classmethod
    def parse(cls, text, depth=None):
        return parse_puiseux(text, depth=depth)

    # structure

    @property
    def terms(self):
        return self._terms

    @property
    def certified_order(self):
        return self._certified

    @property
    def is_exact(self):
        return self._certified == math.inf

    @property
    def exactness(self):
        return 'exact' if self.is_exact else 'truncated'

    @property
    def ramification(self):
        """Least common denominator of the stored exponents"""
        if self._ramification is None:
            self._ramification = _lcm(e.denominator for e, _ in self._terms)
        return self._ramification

    @property
    def is_empty(self):
        """Whether no term is known inside the certified window"""
        return not self._terms

    @property
    def order(self):
        """Smallest exponent, or None when no term is known"""
        return self._terms[0][0] if self._terms else None

    @property
    def leading_coefficient(self):
        return self._terms[0][1] if self._terms else Fraction(0)

    def leading_term(self):
        if not self._terms:
            return PuiseuxElement()
        return PuiseuxElement([self._terms[0]])

    def is_exact_zero(self):
        return self.is_exact and not self._terms

    def is_zero_through_window(self):
        """Whether every term below the certified order vanishes"""
        return not self._terms

    def coefficient(self, exponent):
        """
        Returns the coefficient of ``t^exponent``

        Raises
        ------
        PrecisionExhausted
            If `exponent` lies beyond the certified window
        """
        exponent = as_rational(exponent)
        if exponent >= self._certified:
            raise PrecisionExhausted('coefficient of t^{}'.format(exponent),
                                     (self,))
        return dict(self._terms).get(exponent, Fraction(0))

    def truncate(self, order):
        """Forgets every term at or beyond exponent `order`"""
        return PuiseuxElement(self._terms, min(self._certified,
                                               as_rational(order)))

    def substitute(self, power):
        """
        Applies the field automorphism ``t -> t^power`` for rational
        `power` > 0, which multiplies every valuation by `power`
        """
        power = as_rational(power)
        if power <= 0:
            raise ValueError('Provided `power` must be positive, not {}'
                             .format(power))
        return PuiseuxElement([(e * power, c) for e, c in self._terms],
                              self._certified * power)

    def _lowest(self):
        # lowest exponent the element could carry
        return self._terms[0][0] if self._terms else self._certified

    def is_rational_constant(self):
        return (self.is_exact and len(self._terms) <= 1
                and all(e == 0 and isinstance(c, Fraction)
                        for e, c in self._terms))

    # arithmetic

    def __add__(self, other):
        other = _coerce_operand(other)
        if other is NotImplemented:
            return other
        return PuiseuxElement(self._terms + other._terms,
                              min(self._certified, other._certified))

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxElement([(e, -c) for e, c in self._terms],
                              self._certified)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce_operand(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_operand(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_operand(other)
        if other is NotImplemented:
            return other
        cert = min(self._certified + other._lowest(),
                   other._certified + self._lowest())
        if isinstance(cert, float) and math.isnan(cert):
            cert = math.inf
        products = {}
        for ea, ca in self._terms:
            for eb, cb in other._terms:
                exp = ea + eb
                if exp >= cert:
                    continue
                prod = _coeff_mul(ca, cb)
                products[exp] = (_coeff_add(products[exp], prod)
                                 if exp in products else prod)
        return PuiseuxElement(products, cert)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_operand(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_operand(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, power):
        if not isinstance(power, int):
            return NotImplemented
        if power < 0:
            return self.inverse() ** (-power)
        result = PuiseuxElement.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def inverse(self, depth=None):
        """
        Multiplicative inverse certified to relative precision `depth`

        Parameters
        ----------
        depth : rational, optional
            Relative truncation depth. Default: see
            :func:`get_default_depth`

        Returns
        -------
        inverse : PuiseuxElement
            Series `b` with ``a * b - 1`` vanishing through the window; exact
            when `a` is an exact monomial

        Raises
        ------
        DivisionByZero
            If `a` is zero
        PrecisionExhausted
            If `a` is a truncated element with no known term
        """
        if self.is_exact_zero():
            raise DivisionByZero('Cannot invert zero')
        if self.is_empty:
            raise PrecisionExhausted('inverse', (self,))
        v, c = self._terms[0]
        lead_inv = PuiseuxElement({-v: _coeff_inv(c)})
        if self.is_exact and len(self._terms) == 1:
            return lead_inv
        rel = min(get_default_depth(depth), self._certified - v)
        # a = c t^v (1 + s) with ord(s) > 0
        s = (self * lead_inv - 1).truncate(rel)
        return lead_inv * _series(s, rel, _geometric)

    def sqrt(self, depth=None):
        """
        Nonnegative square root certified to relative precision `depth`

        Parameters
        ----------
        depth : rational, optional
            Relative truncation depth. Default: see
            :func:`get_default_depth`

        Returns
        -------
        root : PuiseuxElement
            Series `b` >= 0 with ``b * b - a`` vanishing through the window

        Raises
        ------
        NegativeRadicand
            If `a` is negative
        PrecisionExhausted
            If the sign of `a` cannot be certified
        """
        if self.is_exact_zero():
            return PuiseuxElement()
        if self.is_empty:
            raise PrecisionExhausted('sqrt', (self,))
        v, c = self._terms[0]
        if _coeff_sign(c) < 0:
            raise NegativeRadicand('Cannot take square root of negative '
                                   'element {}'.format(self))
        lead = PuiseuxElement({v / 2: _coeff_sqrt(c)})
        if self.is_exact and len(self._terms) == 1:
            return lead
        rel = min(get_default_depth(depth), self._certified - v)
        s = (self * PuiseuxElement({-v: _coeff_inv(c)}) - 1).truncate(rel)
        return lead * _series(s, rel, _binomial_half)

    def compare(self, other):
        """Returns LT, EQ or GT comparing `self` against `other`"""
        return compare(self, other)

    def sign(self):
        return compare(self, PuiseuxElement())

    def __lt__(self, other):
        return compare(self, other) == LT

    def __le__(self, other):
        return compare(self, other) != GT

    def __gt__(self, other):
        return compare(self, other) == GT

    def __ge__(self, other):
        return compare(self, other) != LT

    def __abs__(self):
        return -self if self.sign() == LT else self

    # identity is structural: same terms, same certified window

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PuiseuxElement.constant(other)
        if not isinstance(other, PuiseuxElement):
            return NotImplemented
        return (self._certified == other._certified
                and len(self._terms) == len(other._terms)
                and all(ea == eb and _coeff_is_zero(_coeff_add(ca, -cb))
                        for (ea, ca), (eb, cb) in zip(self._terms,
                                                      other._terms)))

    def __hash__(self):
        return hash((tuple(e for e, _ in self._terms), self._certified))

    def __str__(self):
        return format_puiseux(self)

    def __repr__(self):
        return "PuiseuxElement('{}')".format(format_puiseux(self))


def _coerce_operand(value):
    if isinstance(value, PuiseuxElement):
        return value
    if isinstance(value, numbers.Integral) and not isinstance(value, bool):
        value = int(value)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return PuiseuxElement.constant(value)
    return NotImplemented


def _geometric(k):
    return Fraction((-1) ** k)


def _binomial_half(k):
    coeff = Fraction(1)
    for j in range(k):
        coeff *= (Fraction(1, 2) - j) / (j + 1)
    return coeff


def _series(s, rel, coefficient):
    """
    Sums ``coefficient(k) * s^k`` for all powers below relative order `rel`
    """
    total = PuiseuxElement({0: 1}, rel)
    if s.is_empty:
        return total
    step, power, k = s.order, PuiseuxElement.one(), 0
    while True:
        k += 1
        if k * step >= rel:
            break
        power = power * s
        total = total + PuiseuxElement(
            [(e, _coeff_mul(coefficient(k), c)) for e, c in power.terms],
            power.certified_order)
    return total


def add(a, b):
    """Exact merge of the term lists of `a` and `b`"""
    return as_puiseux(a) + as_puiseux(b)


def mul(a, b):
    """Cauchy product of `a` and `b` restricted to the combined window"""
    return as_puiseux(a) * as_puiseux(b)


def inverse(a, depth=None):
    """
    Inverts `a` by its leading monomial and a geometric series

    Parameters
    ----------
    a : PuiseuxElement
        Nonzero element
    depth : rational, optional
        Relative truncation depth. Default: see :func:`get_default_depth`

    Returns
    -------
    inverse : PuiseuxElement
        Inverse certified to ``depth - ord(a)``

    Examples
    --------
    >>> from lambdabuildings.exact_fields import inverse, PuiseuxElement
    >>> str(inverse(PuiseuxElement.parse('1 + t'), depth=3))
    '1 - t + t^2 + O(t^3)'
    """
    return as_puiseux(a).inverse(depth=depth)


def sqrt(a, depth=None):
    """Nonnegative square root of `a` by its leading monomial and a binomial
    series"""
    return as_puiseux(a).sqrt(depth=depth)


def compare(a, b):
    """
    Compares `a` and `b` in the order where `t` is a positive infinitesimal

    Parameters
    ----------
    a, b : PuiseuxElement or RationalFunction
        Values to compare

    Returns
    -------
    order : {LT, EQ, GT}
        Sign of ``a - b``; EQ only when the difference is exactly zero

    Raises
    ------
    PrecisionExhausted
        If ``a - b`` vanishes through its window but is not known exact
    """
    rational = (isinstance(a, RationalFunction)
                or isinstance(b, RationalFunction))
    if rational and _is_exact_value(a) and _is_exact_value(b):
        return as_rational_function(a).compare(as_rational_function(b))
    diff = as_puiseux(a) - as_puiseux(b)
    if diff.is_empty:
        if diff.is_exact:
            return EQ
        raise PrecisionExhausted('compare', (a, b))
    return _coeff_sign(diff.leading_coefficient)


def as_puiseux(value, depth=None):
    """
    Coerces `value` to a :class:`PuiseuxElement`

    Parameters
    ----------
    value : PuiseuxElement, RationalFunction, int, fractions.Fraction or str
        Value to coerce; strings are parsed
    depth : rational, optional
        Truncation depth used to expand rational functions

    Returns
    -------
    value : PuiseuxElement
    """
    if isinstance(value, PuiseuxElement):
        return value
    if isinstance(value, RationalFunction):
        return value.to_puiseux(depth=depth)
    if isinstance(value, str):
        return parse_puiseux(value, depth=depth)
    if isinstance(value, sympy.Basic):
        return _from_sympy(value).to_puiseux(depth=depth)
    coerced = _coerce_operand(value)
    if coerced is NotImplemented:
        raise TypeError('Cannot interpret {!r} as a Puiseux series'
                        .format(value))
    return coerced


def _format_exponent(e):
    if e == 1:
        return 't'
    if e.denominator == 1 and e > 0:
        return 't^{}'.format(e)
    return 't^({})'.format(e)


def format_puiseux(a):
    """
    Serializes `a` as a sum of ``c*t^(p/q)`` terms

    Truncated elements end with ``+ O(t^k)`` naming their certified order.

    Examples
    --------
    >>> from lambdabuildings.exact_fields import format_puiseux, PuiseuxElement
    >>> format_puiseux(PuiseuxElement({0: 1, '1/2': '-3/2', 2: 1}))
    '1 - 3/2*t^(1/2) + t^2'
    """
    pieces = []
    for exp, coeff in a.terms:
        negative = _coeff_sign(coeff) < 0
        mag = -coeff if negative else coeff
        if exp == 0:
            body = _format_coeff(mag)
        elif mag == 1:
            body = _format_exponent(exp)
        else:
            body = '{}*{}'.format(_format_coeff(mag), _format_exponent(exp))
        pieces.append((negative, body))
    if not a.is_exact:
        pieces.append((False, 'O({})'.format(
            _format_exponent(a.certified_order))))
    if not pieces:
        return '0'
    out = ('-' if pieces[0][0] else '') + pieces[0][1]
    for negative, body in pieces[1:]:
        out += (' - ' if negative else ' + ') + body
    return out


class RationalFunction:
    """
    Exact quotient of two Puiseux polynomials, ordered with `t` infinitesimal

    Parameters
    ----------
    numerator : PuiseuxElement or int or fractions.Fraction
        Exact numerator
    denominator : PuiseuxElement or int or fractions.Fraction, optional
        Exact nonzero denominator. Default: 1

    Notes
    -----
    The denominator is scaled so that its leading term is 1, hence the sign
    of the quotient is the sign of its numerator and every comparison is
    decided without truncation.
    """

    __slots__ = ('numerator', 'denominator')

    def __init__(self, numerator, denominator=1):
        num, den = as_puiseux(numerator), as_puiseux(denominator)
        if not (num.is_exact and den.is_exact):
            raise ValueError('RationalFunction requires exact numerator and '
                             'denominator')
        if den.is_exact_zero():
            raise DivisionByZero('Denominator of rational function is zero')
        scale = PuiseuxElement(
            {-den.order: _coeff_inv(den.leading_coefficient)})
        self.numerator = num * scale
        self.denominator = den * scale

    @classmethod
    def parse(cls, text):
        return parse_rational_function(text)

    @property
    def is_polynomial(self):
        return self.denominator == PuiseuxElement.one()

    @property
    def order(self):
        return self.numerator.order

    def is_zero(self):
        return self.numerator.is_exact_zero()

    def cancel(self):
        """Removes common factors of numerator and denominator"""
        ram = _lcm([self.numerator.ramification,
                    self.denominator.ramification])
        num = to_sympy(self.numerator.substitute(ram))
        den = to_sympy(self.denominator.substitute(ram))
        out = from_sympy(sympy.cancel(num / den))
        back = Fraction(1, ram)
        return RationalFunction(out.numerator.substitute(back),
                                out.denominator.substitute(back))

    def to_puiseux(self, depth=None):
        """
        Expands the quotient as a Puiseux series

        Parameters
        ----------
        depth : rational, optional
            Relative truncation depth. Default: see
            :func:`get_default_depth`

        Returns
        -------
        series : PuiseuxElement
            Exact when the denominator is 1, otherwise certified to
            ``order + depth``
        """
        if self.is_polynomial:
            return self.numerator
        return self.numerator * self.denominator.inverse(depth=depth)

    def __add__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return other
        return RationalFunction(
            self.numerator * other.denominator
            + other.numerator * self.denominator,
            self.denominator * other.denominator)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.numerator * other.numerator,
                                self.denominator * other.denominator)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero('Cannot invert zero')
        return RationalFunction(self.denominator, self.numerator)

    def __truediv__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, power):
        if not isinstance(power, int):
            return NotImplemented
        if power < 0:
            return RationalFunction(self.denominator ** -power,
                                    self.numerator ** -power)
        return RationalFunction(self.numerator ** power,
                                self.denominator ** power)

    def compare(self, other):
        """Returns LT, EQ or GT; never runs out of precision"""
        diff = self - _coerce_rational(other)
        if diff.is_zero():
            return EQ
        return _coeff_sign(diff.numerator.leading_coefficient)

    def __lt__(self, other):
        return self.compare(other) == LT

    def __le__(self, other):
        return self.compare(other) != GT

    def __gt__(self, other):
        return self.compare(other) == GT

    def __ge__(self, other):
        return self.compare(other) != LT

    def __eq__(self, other):
        other = _coerce_rational(other)
        if other is NotImplemented:
            return other
        return (self - other).is_zero()

    __hash__ = None

    def __str__(self):
        if self.is_polynomial:
            return format_puiseux(self.numerator)
        return '({})/({})'.format(format_puiseux(self.numerator),
                                  format_puiseux(self.denominator))

    def __repr__(self):
        return "RationalFunction('{}')".format(self)


def _is_exact_value(value):
    if isinstance(value, PuiseuxElement):
        return value.is_exact
    return True


def _coerce_rational(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, PuiseuxElement) and value.is_exact:
        return RationalFunction(value)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return RationalFunction(value)
    return NotImplemented


def as_rational_function(value):
    """
    Coerces `value` to an exact :class:`RationalFunction`

    Raises
    ------
    ValueError
        If `value` is a truncated series
    """
    if isinstance(value, str):
        return parse_rational_function(value)
    coerced = _coerce_rational(value)
    if coerced is NotImplemented:
        raise ValueError('Cannot interpret {!r} as an exact rational '
                         'function'.format(value))
    return coerced


def _from_sympy(expr):
    """Builds an exact rational function from a sympy expression in `t`"""
    if not expr.free_symbols:
        if expr.is_real is False:
            raise ValueError('Coefficient {} is not real'.format(expr))
        return RationalFunction(PuiseuxElement.constant(_coerce_coeff(expr)))
    if expr == _T:
        return RationalFunction(PuiseuxElement.t())
    if expr.is_Add:
        return sum((_from_sympy(arg) for arg in expr.args[1:]),
                   _from_sympy(expr.args[0]))
    if expr.is_Mul:
        out = _from_sympy(expr.args[0])
        for arg in expr.args[1:]:
            out = out * _from_sympy(arg)
        return out
    if expr.is_Pow:
        base, exp = expr.args
        if base == _T and exp.is_Rational:
            return RationalFunction(PuiseuxElement.t(as_rational(exp)))
        if exp.is_Integer:
            return _from_sympy(base) ** int(exp)
        raise ValueError('Unsupported power {} in Puiseux expression'
                         .format(expr))
    raise ValueError('Unsupported term {} in Puiseux expression; only the '
                     'variable `t` may appear'.format(expr))


def _sympify_text(text):
    try:
        return parse_expr(text, local_dict={'t': _T},
                          transformations=_TRANSFORMS)
    except Exception as err:
        raise ValueError('Could not parse Puiseux expression {!r}: {}'
                         .format(text, err))


def parse_rational_function(text):
    """
    Parses `text` into an exact :class:`RationalFunction`

    Parameters
    ----------
    text : str
        Expression in the variable `t` built from rationals, real square
        roots of rationals, ``+ - * /`` and rational powers of `t`, e.g.
        ``'1 - 3/2*t^(1/2) + t^2'`` or ``'1/(1+t)'``

    Returns
    -------
    value : RationalFunction

    Raises
    ------
    ValueError
        If `text` is not a valid expression
    """
    if not isinstance(text, str):
        raise TypeError('Provided `text` must be a str, not {}'
                        .format(type(text).__name__))
    if not text.strip():
        raise ValueError('Cannot parse empty Puiseux expression')
    return _from_sympy(_sympify_text(text))


def parse_puiseux(text, depth=None):
    """
    Parses `text` into a :class:`PuiseuxElement`

    Parameters
    ----------
    text : str
        Expression as accepted by :func:`parse_rational_function`, optionally
        followed by ``+ O(t^k)`` marking a truncated element
    depth : rational, optional
        Relative depth used to expand quotients. Default: see
        :func:`get_default_depth`

    Returns
    -------
    value : PuiseuxElement

    Examples
    --------
    >>> from lambdabuildings.exact_fields import parse_puiseux
    >>> str(parse_puiseux('1/(1+t)', depth=3))
    '1 - t + t^2 + O(t^3)'
    >>> parse_puiseux('2 + t + O(t^2)').certified_order
    Fraction(2, 1)
    """
    if not isinstance(text, str):
        raise TypeError('Provided `text` must be a str, not {}'
                        .format(type(text).__name__))
    certified = None
    match = _ORDER_RE.search(text)
    if match is not None:
        body = _sympify_text(match.group('body'))
        base, exp = body.as_base_exp()
        if base != _T or not exp.is_Rational:
            raise ValueError('Invalid order term in {!r}'.format(text))
        certified = as_rational(exp)
        text = text[:match.start()]
        if not text.strip():
            return PuiseuxElement((), certified)
    value = parse_rational_function(text).to_puiseux(depth=depth)
    if certified is not None:
        value = value.truncate(certified)
    return value


def t_symbol():
    """The sympy symbol standing for the infinitesimal `t`"""
    return _T


def to_sympy(value):
    """
    Converts an exact element to a sympy expression in :func:`t_symbol`

    Raises
    ------
    ValueError
        If `value` is truncated
    """
    if isinstance(value, RationalFunction):
        return to_sympy(value.numerator) / to_sympy(value.denominator)
    value = as_puiseux(value)
    if not value.is_exact:
        raise ValueError('Cannot convert truncated element {} to sympy'
                         .format(value))
    return sympy.Add(*[_to_sympy(c) * _T ** _to_sympy(e)
                       for e, c in value.terms])


def from_sympy(expr):
    """Builds an exact :class:`RationalFunction` from a sympy expression in
    :func:`t_symbol`"""
    return _from_sympy(sympy.sympify(expr))


def coefficient_to_sympy(c):
    """Converts a series coefficient to an exact sympy number"""
    return _to_sympy(c)


def coefficient_from_sympy(c):
    """Converts an exact sympy number to canonical coefficient form"""
    return _coerce_coeff(c)
