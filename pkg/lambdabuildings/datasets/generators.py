# -*- coding: utf-8 -*-
"""
Functions for making "random" field elements, matrices and points
"""

from fractions import Fraction

import numpy as np
import sympy
from sklearn.utils.validation import check_random_state

from ..exact_fields import PuiseuxElement
from .. import matrices


def _exponent(rs, low, high, denominators):
    den = int(rs.choice(denominators))
    return Fraction(int(rs.randint(low * den, high * den + 1)), den)


def _coeff(rs, max_coeff):
    value = int(rs.randint(1, max_coeff + 1))
    return Fraction(value if rs.rand() < 0.5 else -value)


def make_puiseux(seed=None, max_terms=3, max_exponent=3, denominators=(1, 2),
                 max_coeff=4, order=None, positive=False):
    """
    Generates an exact nonzero Puiseux polynomial

    Parameters
    ----------
    seed : {int, np.random.RandomState instance, None}, optional
        Seed for random number generation. Default: None
    max_terms : int, optional
        Maximum number of terms. Default: 3
    max_exponent : int, optional
        Exponents are drawn from ``[-max_exponent, max_exponent]``. Default: 3
    denominators : tuple of int, optional
        Allowed exponent denominators. Default: (1, 2)
    max_coeff : int, optional
        Coefficients are nonzero integers in ``[-max_coeff, max_coeff]``.
        Default: 4
    order : rational, optional
        If given, the leading exponent; remaining exponents are larger.
        Default: None
    positive : bool, optional
        Whether to force a positive leading coefficient. Default: False

    Returns
    -------
    element : :class:`~lambdabuildings.exact_fields.PuiseuxElement`

    Examples
    --------
    >>> from lambdabuildings import datasets
    >>> x = datasets.make_puiseux(seed=1234, order=0, positive=True)
    >>> x.order, x.leading_coefficient > 0
    (Fraction(0, 1), True)
    """

    rs = check_random_state(seed)
    n_terms = int(rs.randint(1, max_terms + 1))
    terms = {}
    if order is not None:
        order = Fraction(order)
        terms[order] = _coeff(rs, max_coeff)
        while len(terms) < n_terms:
            exp = order + _exponent(rs, 0, max_exponent, denominators)
            if exp > order:
                terms[exp] = _coeff(rs, max_coeff)
    else:
        while len(terms) < n_terms:
            exp = _exponent(rs, -max_exponent, max_exponent, denominators)
            terms[exp] = _coeff(rs, max_coeff)
    if positive:
        lead = min(terms)
        terms[lead] = abs(terms[lead])

    return PuiseuxElement(terms)


def make_unit(seed=None, **kwargs):
    """Generates a unit of the valuation ring, with positive residue"""
    return make_puiseux(seed=seed, order=0, positive=True, **kwargs)


def _unipotent(rs, n, lower, low, high, denominators, max_coeff, density):
    mat = matrices.identity(n)
    for i in range(n):
        for j in range(i + 1, n):
            if rs.rand() >= density:
                continue
            entry = PuiseuxElement.monomial(
                _coeff(rs, max_coeff), _exponent(rs, low, high, denominators))
            if lower:
                mat[j, i] = entry
            else:
                mat[i, j] = entry
    return mat


def make_unipotent(n, seed=None, lower=False, max_exponent=2,
                   denominators=(1, 2), max_coeff=3, density=0.7):
    """
    Generates a unipotent triangular matrix with monomial entries

    Parameters
    ----------
    n : int
        Dimension
    seed : {int, np.random.RandomState instance, None}, optional
        Seed for random number generation. Default: None
    lower : bool, optional
        Whether to generate a lower (rather than upper) triangular matrix.
        Default: False
    max_exponent : int, optional
        Exponents of off-diagonal entries lie in
        ``[-max_exponent, max_exponent]``. Default: 2
    denominators : tuple of int, optional
        Allowed exponent denominators. Default: (1, 2)
    max_coeff : int, optional
        Bound on the integer coefficients. Default: 3
    density : float, optional
        Probability that an off-diagonal entry is nonzero. Default: 0.7

    Returns
    -------
    mat : (n, n) numpy.ndarray
    """

    rs = check_random_state(seed)
    return _unipotent(rs, n, lower, -max_exponent, max_exponent,
                      denominators, max_coeff, density)


def _weight(rs, n, max_exponent, denominators):
    exps = [_exponent(rs, -max_exponent, max_exponent, denominators)
            for _ in range(n - 1)]
    return exps + [-sum(exps, Fraction(0))]


def make_sl_matrix(n, seed=None, max_exponent=2, denominators=(1, 2),
                   max_coeff=3, density=0.7):
    """
    Generates an exact matrix of determinant 1 with bounded exponents

    The matrix is a product ``L @ diag(t^q) @ U`` of a lower and an upper
    unipotent matrix around a monomial diagonal with ``sum(q) = 0``.

    Parameters
    ----------
    n : int
        Dimension
    seed : {int, np.random.RandomState instance, None}, optional
        Seed for random number generation. Default: None
    max_exponent, denominators, max_coeff, density : optional
        See :func:`make_unipotent`

    Returns
    -------
    mat : (n, n) numpy.ndarray
        Object array of exact Puiseux polynomials with ``det(mat) = 1``
    """

    rs = check_random_state(seed)
    low = _unipotent(rs, n, True, -max_exponent, max_exponent,
                     denominators, max_coeff, density)
    up = _unipotent(rs, n, False, -max_exponent, max_exponent,
                    denominators, max_coeff, density)
    diag = matrices.monomial_diagonal(_weight(rs, n, max_exponent,
                                              denominators))
    return matrices.matmul(low, diag, up)


def make_integral_matrix(n, seed=None, max_exponent=2, denominators=(1, 2),
                         max_coeff=3, residue_identity=False):
    """
    Generates an element of SL_n over the valuation ring

    Parameters
    ----------
    n : int
        Dimension
    seed : {int, np.random.RandomState instance, None}, optional
        Seed for random number generation. Default: None
    max_exponent : int, optional
        Exponents of off-diagonal entries lie in ``[0, max_exponent]``.
        Default: 2
    denominators : tuple of int, optional
        Allowed exponent denominators. Default: (1, 2)
    max_coeff : int, optional
        Bound on the integer coefficients. Default: 3
    residue_identity : bool, optional
        Whether to use strictly positive exponents, so that the residue of
        the result is the identity matrix. Default: False

    Returns
    -------
    mat : (n, n) numpy.ndarray
    """

    rs = check_random_state(seed)
    low_exp = Fraction(1, max(denominators)) if residue_identity else 0
    factors = []
    for lower in (True, False, True):
        mat = matrices.identity(n)
        for i in range(n):
            for j in range(i + 1, n):
                exp = _exponent(rs, 0, max_exponent, denominators)
                exp = max(exp, low_exp)
                entry = PuiseuxElement.monomial(_coeff(rs, max_coeff), exp)
                if lower:
                    mat[j, i] = entry
                else:
                    mat[i, j] = entry
        factors.append(mat)
    return matrices.matmul(*factors)


def make_orthogonal(n, seed=None, max_coeff=3):
    """
    Generates a rational rotation through the Cayley transform

    Parameters
    ----------
    n : int
        Dimension
    seed : {int, np.random.RandomState instance, None}, optional
        Seed for random number generation. Default: None
    max_coeff : int, optional
        Bound on numerators and denominators of the antisymmetric generator.
        Default: 3

    Returns
    -------
    k : (n, n) numpy.ndarray
        Exact rational matrix with ``k.T @ k = 1`` and ``det(k) = 1``

    Examples
    --------
    >>> from lambdabuildings import datasets, matrices
    >>> k = datasets.make_orthogonal(2, seed=1234)
    >>> str(matrices.det(k))
    '1'
    """

    rs = check_random_state(seed)
    gen = sympy.zeros(n, n)
    for i in range(n):
        for j in range(i + 1, n):
            value = sympy.Rational(int(rs.randint(-max_coeff, max_coeff + 1)),
                                   int(rs.randint(1, max_coeff + 1)))
            gen[i, j], gen[j, i] = value, -value
    ident = sympy.eye(n)
    rot = (ident - gen) * (ident + gen).inv()
    return matrices.as_matrix([[Fraction(int(rot[i, j].p), int(rot[i, j].q))
                                for j in range(n)] for i in range(n)])


def make_pd_point(n, seed=None, **kwargs):
    """
    Generates a point ``g @ g.T`` of the symmetric space

    Parameters
    ----------
    n : int
        Dimension
    seed : {int, np.random.RandomState instance, None}, optional
        Seed for random number generation. Default: None
    kwargs : dict, optional
        Passed to :func:`make_sl_matrix`

    Returns
    -------
    point : :class:`~lambdabuildings.symmetric_space.PDPoint`
    """

    from ..symmetric_space import PDPoint

    g = make_sl_matrix(n, seed=seed, **kwargs)
    return PDPoint(matrices.matmul(g, matrices.transpose(g)), check=False)


def make_building_point(n, seed=None, **kwargs):
    """Generates a building point with a random determinant-1 representative
    """

    from ..building import BuildingPoint

    return BuildingPoint(make_sl_matrix(n, seed=seed, **kwargs))


def make_trajectory(n, seed=None, **kwargs):
    """
    Generates a symmetric determinant-1 trajectory in JSON form

    Returns
    -------
    trajectory : dict
        With keys 'n' and 'entries', the latter an (n, n) list of Puiseux
        strings
    """

    point = make_pd_point(n, seed=seed, **kwargs)
    return dict(n=n, entries=matrices.to_json(point.mat))


def make_weight(n, seed=None, max_exponent=2, denominators=(1, 2)):
    """Generates a rational vector of length `n` with zero sum"""
    rs = check_random_state(seed)
    return np.array(_weight(rs, n, max_exponent, denominators), dtype=object)
