# -*- coding: utf-8 -*-
"""
Functions for the valuation ring of finite elements and its residue field
"""

import math
from functools import partial

from .errors import NotInRing, PrecisionExhausted
from .exact_fields import (GT, LT, PuiseuxElement, RationalFunction,
                           as_puiseux, compare)
from .log_value import ValueGroupElement
from . import utils


def _as_element(r):
    if isinstance(r, RationalFunction):
        return r.to_puiseux()
    return as_puiseux(r)


class ValuationRing:
    """
    The ring ``O = {r : ord_t(r) >= 0}`` with maximal ideal
    ``M = {r : ord_t(r) > 0}`` and residue field Q

    The splitting of the residue field back into `O` is the copy of Q as
    constant series; this choice is specific to the Puiseux backend.
    """

    name = 't-adic'

    def valuate(self, r):
        if isinstance(r, RationalFunction):
            if r.is_zero():
                return math.inf
            return ValueGroupElement(r.order)
        r = as_puiseux(r)
        if r.is_empty:
            if r.is_exact:
                return math.inf
            raise PrecisionExhausted('valuate', [r])
        return ValueGroupElement(r.order)

    def contains(self, r):
        return self._lower_bound_at_least(r, 0, strict=False)

    def in_maximal_ideal(self, r):
        return self._lower_bound_at_least(r, 0, strict=True)

    def is_unit(self, r):
        r = _as_element(r)
        if r.is_empty:
            if r.is_exact or r.certified_order > 0:
                return False
            raise PrecisionExhausted('is_unit', [r])
        return r.order == 0

    def _lower_bound_at_least(self, r, bound, strict):
        r = _as_element(r)
        if r.is_empty:
            cert = r.certified_order
            if r.is_exact or cert > bound or (cert >= bound and not strict):
                return True
            raise PrecisionExhausted('ring membership', [r])
        return r.order > bound if strict else r.order >= bound

    def residue(self, r):
        r = _as_element(r)
        if not self.contains(r):
            raise NotInRing('Element {} is not in the valuation ring'
                            .format(r))
        return r.coefficient(0)

    def lift(self, c):
        """Embeds a residue `c` as a constant series"""
        return PuiseuxElement.constant(c)

    def __repr__(self):
        return 'ValuationRing({!r})'.format(self.name)


O = ValuationRing()


def valuate(r, ring=O):
    """
    Valuation of `r`, with infinitesimals positive

    Parameters
    ----------
    r : PuiseuxElement or RationalFunction
        Element to valuate
    ring : ValuationRing, optional
        Valuation ring. Default: the t-adic ring

    Returns
    -------
    value : :class:`~lambdabuildings.log_value.ValueGroupElement` or math.inf
        ``ord_t(r)``, or ``math.inf`` when `r` is zero

    Examples
    --------
    >>> from lambdabuildings.valuation import valuate
    >>> str(valuate('3 + t'))
    '0'
    >>> valuate('0')
    inf
    """
    return ring.valuate(r)


def is_in_O(r, ring=O):
    """Whether ``valuate(r) >= 0``"""
    return ring.contains(r)


def is_unit(r, ring=O):
    """Whether ``valuate(r) == 0``"""
    return ring.is_unit(r)


def in_maximal_ideal(r, ring=O):
    """Whether ``valuate(r) > 0``"""
    return ring.in_maximal_ideal(r)


def residue(r, ring=O):
    """
    Image of `r` in the residue field, i.e. its constant coefficient

    Raises
    ------
    NotInRing
        If ``valuate(r) < 0``
    """
    return ring.residue(r)


def lift(c, ring=O):
    return ring.lift(c)


def _min_val(x, y):
    return min(x, y, key=lambda v: math.inf if v == math.inf else v.value)


def _val_leq(x, y):
    if y == math.inf:
        return True
    if x == math.inf:
        return False
    return x <= y


def _check_sample(seed, ring=O):
    from .datasets import make_puiseux

    r, s = make_puiseux(seed=seed), make_puiseux(seed=seed + 1)
    vr, vs = ring.valuate(r), ring.valuate(s)
    witness = dict(seed=seed, r=str(r), s=str(s))
    problems = []

    if ring.valuate(r * s) != vr + vs:
        problems.append('multiplicativity')
    if not _val_leq(_min_val(vr, vs), ring.valuate(r + s)):
        problems.append('ultrametric')
    if not _val_leq(_min_val(vr, vs), ring.valuate(r - s)):
        problems.append('ultrametric (difference)')

    # a = |r| <= b = |r| + |s|
    a, b = abs(r), abs(r) + abs(s)
    if ring.contains(b) and not ring.contains(a):
        problems.append('o-convexity')
    if compare(a, b) == GT:
        problems.append('order')

    for x in (r, s):
        if not ring.contains(x) and not ring.in_maximal_ideal(x.inverse()):
            problems.append('complement-inverse')

    if ring.contains(r) and ring.contains(s):
        rr, rs_ = ring.residue(r), ring.residue(s)
        if ring.residue(r + s) != rr + rs_:
            problems.append('residue additivity')
        if ring.residue(r * s) != rr * rs_:
            problems.append('residue multiplicativity')
    for x in (r, s):
        if ring.contains(x) and ((ring.residue(x) == 0)
                                 != ring.in_maximal_ideal(x)):
            problems.append('residue kernel')
    if (ring.residue(ring.lift(3)) != 3
            or compare(ring.lift(2), ring.lift(3)) != LT):
        problems.append('splitting')

    witness.update(status='fail' if problems else 'pass',
                   problems=problems)
    return witness


def valuation_axioms_check(sample_size=1000, seed=None, n_jobs=1, verbose=0,
                           ring=O):
    """
    Checks the valuation axioms on randomly sampled exact elements

    Verifies multiplicativity and the ultrametric inequality of the valuation,
    o-convexity of the ring, that elements outside the ring have inverses in
    the maximal ideal, and that the residue map is a ring homomorphism with
    kernel the maximal ideal.

    Parameters
    ----------
    sample_size : int, optional
        Number of sampled pairs. Default: 1000
    seed : {int, np.random.RandomState instance, None}, optional
        Seed for random number generation. Default: None
    n_jobs : int, optional
        Number of parallel workers. Default: 1
    verbose : int, optional
        Verbosity of the package logger. Default: 0
    ring : ValuationRing, optional
        Valuation ring to check. Default: the t-adic ring

    Returns
    -------
    report : :class:`sklearn.utils.Bunch`
        See :func:`lambdabuildings.utils.run_checks`

    Examples
    --------
    >>> from lambdabuildings.valuation import valuation_axioms_check
    >>> valuation_axioms_check(sample_size=20, seed=1234).passed
    True
    """
    return utils.run_checks('valuation axioms', partial(_check_sample,
                                                        ring=ring),
                            sample_size, seed=seed, n_jobs=n_jobs,
                            verbose=verbose)
