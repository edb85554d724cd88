# -*- coding: utf-8 -*-
"""
Functions for working with square matrices of Puiseux series
"""

import itertools
import json
import math
from fractions import Fraction

import numpy as np

from .errors import PrecisionExhausted, SingularMatrix
from .exact_fields import (PuiseuxElement, RationalFunction, as_puiseux,
                           as_rational_function, format_puiseux)


def as_matrix(data, depth=None):
    """
    Converts `data` to a square object array of :class:`PuiseuxElement`

    Parameters
    ----------
    data : array_like
        (N, N) nested sequence of Puiseux strings, integers, fractions or
        elements
    depth : rational, optional
        Truncation depth used when entries are quotients. Default: None

    Returns
    -------
    mat : (N, N) numpy.ndarray
        Object array of :class:`PuiseuxElement`

    Examples
    --------
    >>> from lambdabuildings.matrices import as_matrix
    >>> mat = as_matrix([['t^(-1)', 0], [0, 't']])
    >>> mat.shape
    (2, 2)
    """

    if isinstance(data, np.ndarray) and data.dtype == object:
        rows = data.tolist()
    else:
        rows = [list(row) for row in data]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise ValueError('Provided matrix must be square and nonempty, not '
                         'of shape {}'.format([len(row) for row in rows]))
    out = np.empty((n, n), dtype=object)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            out[i, j] = as_puiseux(entry, depth=depth)

    return out


def _fill(n, func):
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = func(i, j)
    return out


def identity(n):
    """Returns the (n, n) identity matrix"""
    return _fill(n, lambda i, j: PuiseuxElement.one() if i == j
                 else PuiseuxElement.zero())


def diagonal(entries):
    """Returns the diagonal matrix with `entries` on its diagonal"""
    entries = [as_puiseux(e) for e in entries]
    return _fill(len(entries), lambda i, j: entries[i] if i == j
                 else PuiseuxElement.zero())


def monomial_diagonal(exponents):
    """Returns ``diag(t^e_1, ..., t^e_n)``"""
    return diagonal([PuiseuxElement.t(e) for e in exponents])


def permutation_matrix(perm):
    """Returns the matrix sending basis vector ``e_j`` to ``e_perm[j]``"""
    return _fill(len(perm), lambda i, j: PuiseuxElement.one()
                 if perm[j] == i else PuiseuxElement.zero())


def matmul(*mats):
    """Multiplies `mats` from left to right"""
    out = mats[0]
    for mat in mats[1:]:
        n, m, k = out.shape[0], mat.shape[1], out.shape[1]
        out = _fill_rect(n, m, lambda i, j, a=out, b=mat: sum(
            (a[i, r] * b[r, j] for r in range(k)), PuiseuxElement.zero()))
    return out


def _fill_rect(n, m, func):
    out = np.empty((n, m), dtype=object)
    for i in range(n):
        for j in range(m):
            out[i, j] = func(i, j)
    return out


def scale(mat, factor):
    factor = as_puiseux(factor)
    return _fill_rect(*mat.shape, lambda i, j: mat[i, j] * factor)


def _is_exact_zero(entry):
    if isinstance(entry, RationalFunction):
        return entry.is_zero()
    return entry.is_exact_zero()


def _det(mat, rows, cols, cache):
    key = (rows, cols)
    if key in cache:
        return cache[key]
    if len(rows) == 1:
        value = mat[rows[0], cols[0]]
    else:
        value = PuiseuxElement.zero()
        first, rest = rows[0], rows[1:]
        for pos, col in enumerate(cols):
            entry = mat[first, col]
            if _is_exact_zero(entry):
                continue
            sub = _det(mat, rest, cols[:pos] + cols[pos + 1:], cache)
            term = entry * sub
            value = value - term if pos % 2 else value + term
    cache[key] = value
    return value


def minor(mat, rows, cols, cache=None):
    """
    Determinant of the submatrix of `mat` on `rows` and `cols`

    Computed by cofactor expansion, so no division and no truncation occurs
    beyond what the entries carry.
    """
    if cache is None:
        cache = {}
    return _det(mat, tuple(rows), tuple(cols), cache)


def det(mat):
    """Exact determinant of square `mat`"""
    n = mat.shape[0]
    return minor(mat, range(n), range(n))


def adjugate(mat):
    """
    Adjugate of `mat`, satisfying ``mat @ adj(mat) = det(mat) * 1``

    Examples
    --------
    >>> from lambdabuildings.matrices import adjugate, as_matrix, to_json
    >>> to_json(adjugate(as_matrix([[1, 't^(-1)'], [0, 1]])))
    [['1', '-t^(-1)'], ['0', '1']]
    """
    n = mat.shape[0]
    if n == 1:
        return identity(1)
    cache = {}
    idx = tuple(range(n))
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            cof = minor(mat, idx[:i] + idx[i + 1:], idx[:j] + idx[j + 1:],
                        cache)
            out[j, i] = -cof if (i + j) % 2 else cof
    return out


def inverse(mat, depth=None):
    """Inverse of `mat`; exact whenever ``det(mat)`` is an exact monomial"""
    d = det(mat)
    if d.is_exact_zero():
        raise SingularMatrix('Matrix is singular')
    return scale(adjugate(mat), d.inverse(depth=depth))


def transpose(mat):
    return mat.T.copy()


def is_exact(mat):
    return all(entry.is_exact for entry in mat.flat)


def is_symmetric(mat):
    """Whether ``mat - mat.T`` vanishes through every certified window"""
    n = mat.shape[0]
    return all((mat[i, j] - mat[j, i]).is_zero_through_window()
               for i in range(n) for j in range(i + 1, n))


def is_upper_triangular(mat):
    n = mat.shape[0]
    return all(mat[i, j].is_zero_through_window()
               for i in range(n) for j in range(i))


def is_lower_triangular(mat):
    return is_upper_triangular(mat.T)


def is_diagonal(mat):
    return is_upper_triangular(mat) and is_lower_triangular(mat)


def leading_principal_minors(mat):
    """Returns ``[1, D_1, ..., D_n]`` for the leading principal minors"""
    n, cache = mat.shape[0], {}
    return [PuiseuxElement.one()] + [minor(mat, range(k), range(k), cache)
                                     for k in range(1, n + 1)]


def principal_minor_sums(mat):
    """Returns ``e_0, ..., e_n`` with ``e_j`` the sum of j-by-j principal
    minors"""
    n, cache = mat.shape[0], {}
    sums = [PuiseuxElement.one()]
    for size in range(1, n + 1):
        total = PuiseuxElement.zero()
        for idx in itertools.combinations(range(n), size):
            total = total + minor(mat, idx, idx, cache)
        sums.append(total)
    return sums


def charpoly(mat):
    """
    Coefficients ``c_0, ..., c_n`` of ``det(x*1 - mat) = sum_k c_k x^k``

    Examples
    --------
    >>> from lambdabuildings.matrices import as_matrix, charpoly
    >>> [str(c) for c in charpoly(as_matrix([['t^(-1)', 0], [0, 't']]))]
    ['1', '-t^(-1) - t', '1']
    """
    sums = principal_minor_sums(mat)
    n = len(sums) - 1
    return [sums[n - k] if (n - k) % 2 == 0 else -sums[n - k]
            for k in range(n + 1)]


def _lower_hull(points):
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it lies on or above the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _hull_height(hull, x):
    for (x1, y1), (x2, y2) in zip(hull[:-1], hull[1:]):
        if x1 <= x <= x2:
            return y1 + (y2 - y1) * Fraction(x - x1, x2 - x1)
    raise ValueError('Abscissa {} lies outside the hull'.format(x))


def newton_polygon_slopes(coefficients):
    """
    Valuations of the roots of ``sum_k c_k x^k`` from its Newton polygon

    Parameters
    ----------
    coefficients : list of PuiseuxElement
        Coefficients ``c_0, ..., c_n`` with ``c_0`` and ``c_n`` nonzero

    Returns
    -------
    orders : list of fractions.Fraction
        The `n` root valuations with multiplicity, sorted ascending

    Raises
    ------
    PrecisionExhausted
        If an uncertified coefficient could lie below the polygon
    """
    known, unknown = [], []
    for k, coeff in enumerate(coefficients):
        if not coeff.is_empty:
            known.append((k, coeff.order))
        elif not coeff.is_exact:
            unknown.append((k, coeff.certified_order))
    n = len(coefficients) - 1
    if not known or known[0][0] != 0 or known[-1][0] != n:
        raise PrecisionExhausted('newton polygon endpoints',
                                 [coefficients[0], coefficients[-1]])
    hull = _lower_hull(known)
    for k, height in unknown:
        if height < _hull_height(hull, k):
            raise PrecisionExhausted('newton polygon vertex at x^{}'
                                     .format(k), [coefficients[k]])
    orders = []
    for (x1, y1), (x2, y2) in zip(hull[:-1], hull[1:]):
        slope = Fraction(y2 - y1) / (x2 - x1)
        orders.extend([-slope] * (x2 - x1))
    return sorted(orders)


def charpoly_root_orders(mat):
    """
    Valuations of the eigenvalues of `mat`, with multiplicity

    Parameters
    ----------
    mat : (N, N) numpy.ndarray
        Invertible matrix of Puiseux series

    Returns
    -------
    orders : list of fractions.Fraction
        Slopes of the lower Newton polygon of ``det(x*1 - mat)`` with respect
        to the t-adic order, sorted ascending

    Raises
    ------
    SingularMatrix
        If ``det(mat)`` is exactly zero
    PrecisionExhausted
        If a coefficient needed by the polygon is not certified

    Examples
    --------
    >>> from lambdabuildings.matrices import as_matrix, charpoly_root_orders
    >>> charpoly_root_orders(as_matrix([['t^(-1)', 0], [0, 't']]))
    [Fraction(-1, 1), Fraction(1, 1)]
    """
    coeffs = charpoly(mat)
    if coeffs[0].is_exact_zero():
        raise SingularMatrix('Matrix is singular; eigenvalue orders are '
                             'undefined')
    return newton_polygon_slopes(coeffs)


def valuations(mat):
    """Matrix of entry orders, ``math.inf`` for exact zeros"""
    out = np.empty(mat.shape, dtype=object)
    for idx, entry in np.ndenumerate(mat):
        if entry.is_empty:
            if not entry.is_exact:
                raise PrecisionExhausted('valuation', [entry])
            out[idx] = math.inf
        else:
            out[idx] = entry.order
    return out


def to_json(mat):
    """Converts `mat` to nested lists of Puiseux strings"""
    return [[format_puiseux(entry) for entry in row] for row in mat]


def from_json(data, depth=None):
    """
    Reads a matrix from JSON text or decoded nested lists

    Raises
    ------
    ValueError
        If `data` is not valid JSON or not a square array of strings
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as err:
            raise ValueError('Invalid JSON matrix: {}'.format(err))
    if not isinstance(data, list) or not all(isinstance(r, list)
                                             for r in data):
        raise ValueError('JSON matrix must be an array of arrays')
    return as_matrix([[str(e) for e in row] for row in data], depth=depth)


def as_exact_matrix(data):
    """
    Parses `data` into a square object array of exact
    :class:`~lambdabuildings.exact_fields.RationalFunction`

    Used to check constraints such as symmetry and unit determinant without
    truncation before entries are expanded as series.
    """
    rows = [list(row) for row in data]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise ValueError('Provided matrix must be square and nonempty')
    out = np.empty((n, n), dtype=object)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            out[i, j] = as_rational_function(entry)
    return out


def expand(mat, depth=None):
    """Expands a matrix of rational functions as Puiseux series"""
    return _fill_rect(*mat.shape, lambda i, j: as_puiseux(mat[i, j],
                                                          depth=depth))
