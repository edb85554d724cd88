# -*- coding: utf-8 -*-
"""
Functions for the symmetric space of positive definite determinant-1 matrices
"""

import itertools
import json
import math
from fractions import Fraction
from functools import partial

import numpy as np
import sympy

from .errors import (InvariantViolation, NotSupported, PrecisionExhausted,
                     SingularMatrix)
from .exact_fields import (EQ, GT, PuiseuxElement, RationalFunction,
                           as_puiseux, compare, from_sympy, t_symbol,
                           to_sympy)
from .log_value import LogElement, log_abs, log_add, log_compare
from . import matrices, utils


class PDPoint:
    """
    Symmetric positive definite matrix with determinant 1

    Parameters
    ----------
    mat : array_like
        (N, N) matrix of Puiseux series
    check : bool, optional
        Whether to validate symmetry, unit determinant and positivity of the
        leading principal minors. Default: True
    depth : rational, optional
        Truncation depth used when parsing quotients. Default: None

    Raises
    ------
    InvariantViolation
        If `check` is set and `mat` is not a valid point
    """

    def __init__(self, mat, check=True, depth=None):
        self.mat = matrices.as_matrix(mat, depth=depth)
        if check:
            validate_pd(self.mat)

    @property
    def n(self):
        return self.mat.shape[0]

    def act(self, g):
        """Returns ``g @ P @ g.T``"""
        return PDPoint(matrices.matmul(g, self.mat, matrices.transpose(g)),
                       check=False)

    def equals(self, other):
        """Whether the entries agree through their certified windows"""
        return all((a - b).is_zero_through_window()
                   for a, b in zip(self.mat.flat, other.mat.flat))

    def to_json(self):
        return dict(n=self.n, entries=matrices.to_json(self.mat))

    def __repr__(self):
        return 'PDPoint({})'.format(matrices.to_json(self.mat))


def validate_pd(mat):
    """
    Checks that `mat` is symmetric, has determinant 1 and is positive definite

    Raises
    ------
    InvariantViolation
        Naming the first violated condition
    PrecisionExhausted
        If the sign of a leading principal minor cannot be certified
    """
    if not matrices.is_symmetric(mat):
        raise InvariantViolation('Matrix is not symmetric')
    if not (matrices.det(mat) - 1).is_zero_through_window():
        raise InvariantViolation('Matrix does not have determinant 1')
    for k, dk in enumerate(matrices.leading_principal_minors(mat)[1:], 1):
        if compare(dk, PuiseuxElement.zero()) != GT:
            raise InvariantViolation('Leading principal minor of size {} is '
                                     'not positive'.format(k))


def identity_point(n):
    return PDPoint(matrices.identity(n), check=False)


def diagonal_point(entries):
    """Returns the diagonal point with `entries`, which must multiply to 1"""
    return PDPoint(matrices.diagonal(entries))


def pd_point_from_json(data, depth=None):
    """
    Reads and validates a point from JSON

    Symmetry and unit determinant are checked exactly on the rational
    functions the entries denote, before expansion as series.

    Parameters
    ----------
    data : str or dict or list
        JSON text, a dict with key 'entries', or the entries themselves
    depth : rational, optional
        Truncation depth used to expand quotients. Default: None

    Returns
    -------
    point : PDPoint

    Raises
    ------
    ValueError
        If `data` cannot be parsed
    InvariantViolation
        If the matrix is not a valid point
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as err:
            raise ValueError('Invalid JSON point: {}'.format(err))
    if isinstance(data, dict):
        if 'entries' not in data:
            raise ValueError("JSON point must have key 'entries'")
        entries = data['entries']
        if 'n' in data and data['n'] != len(entries):
            raise ValueError('Declared n={} does not match entries of size '
                             '{}'.format(data['n'], len(entries)))
    else:
        entries = data
    exact = matrices.as_exact_matrix([[str(e) for e in row]
                                      for row in entries])
    validate_exact_pd(exact)
    return PDPoint(matrices.expand(exact, depth=depth), check=False)


def validate_exact_pd(mat):
    """Exact version of :func:`validate_pd` for rational-function entries"""
    n = mat.shape[0]
    if any(mat[i, j] != mat[j, i] for i in range(n) for j in range(i + 1, n)):
        raise InvariantViolation('Matrix is not symmetric')
    if matrices.det(mat) != 1:
        raise InvariantViolation('Matrix does not have determinant 1')
    cache = {}
    for k in range(1, n + 1):
        if compare(matrices.minor(mat, range(k), range(k), cache), 0) != GT:
            raise InvariantViolation('Leading principal minor of size {} is '
                                     'not positive'.format(k))


class WeylVector:
    """
    Unordered eigenvalue logarithms of a point, stored sorted descending

    Parameters
    ----------
    entries : list of LogElement
        Logarithms whose carriers multiply to 1
    """

    def __init__(self, entries):
        entries = [e if isinstance(e, LogElement) else LogElement(e)
                   for e in entries]
        total = LogElement.zero()
        for e in entries:
            total = log_add(total, e)
        try:
            balanced = total.is_zero()
        except PrecisionExhausted:
            # product equals 1 through its window
            balanced = True
        if not balanced:
            raise InvariantViolation('Entries of a WeylVector must sum to 0')
        self.entries = sorted(entries, key=_LogKey, reverse=True)

    def norm(self):
        """Returns ``|x_1| + ... + |x_n|``"""
        total = LogElement.zero()
        for e in self.entries:
            total = log_add(total, log_abs(e))
        return total

    def permute(self, perm):
        return WeylVector([self.entries[p] for p in perm])

    def __len__(self):
        return len(self.entries)


class _LogKey:
    __slots__ = ('value',)

    def __init__(self, value):
        self.value = value

    def __lt__(self, other):
        return log_compare(self.value, other.value) < 0


def _relative(P, Q):
    # det(P) = 1 so its adjugate is its inverse
    return matrices.matmul(matrices.adjugate(P.mat), Q.mat)


def _exact_triangular(mat):
    n = mat.shape[0]
    upper = all(mat[i, j].is_exact_zero() for i in range(n) for j in range(i))
    lower = all(mat[j, i].is_exact_zero() for i in range(n) for j in range(i))
    return upper or lower


def _factored_eigenvalues(mat):
    """Eigenvalues of exact `mat` from a factorization of its charpoly"""
    coeffs = matrices.charpoly(mat)
    if not all(c.is_exact and all(isinstance(v, Fraction) for _, v in c.terms)
               for c in coeffs):
        raise NotSupported('Characteristic polynomial must have exact '
                           'rational coefficients')
    ram = math.lcm(*[c.ramification for c in coeffs])
    x, t = sympy.Symbol('x'), t_symbol()
    poly = sum((to_sympy(c.substitute(ram)) * x ** k
                for k, c in enumerate(coeffs)), sympy.Integer(0))
    numer, _ = sympy.fraction(sympy.together(poly))
    _, factors = sympy.factor_list(numer, x, t)
    roots = []
    for factor, mult in factors:
        degree = sympy.degree(factor, x)
        if degree == 0:
            continue
        if degree > 1:
            raise NotSupported('Eigenvalues are not rational functions of t: '
                               'irreducible factor {}'.format(factor))
        lin = sympy.Poly(factor, x)
        a, b = lin.all_coeffs()
        root = from_sympy(sympy.cancel(-b / a))
        root = RationalFunction(root.numerator.substitute(Fraction(1, ram)),
                                root.denominator.substitute(Fraction(1, ram)))
        roots.extend([root] * mult)
    if len(roots) != mat.shape[0]:
        raise NotSupported('Characteristic polynomial does not split')
    return roots


def eigenvalues(mat):
    """
    Eigenvalues of `mat` when representable in the backend

    Returns the diagonal of a triangular matrix, otherwise factors an exact
    characteristic polynomial into linear factors over Q(t^(1/e)).

    Raises
    ------
    NotSupported
        If the eigenvalues are not rational functions of a root of `t`
    """
    if _exact_triangular(mat):
        return [mat[i, i] for i in range(mat.shape[0])]
    if not matrices.is_exact(mat):
        raise NotSupported('Eigenvalues of truncated non-triangular matrices '
                           'are not representable')
    return _factored_eigenvalues(mat)


def lambda_distance(P, Q):
    """
    Lambda-valued distance ``|lg x_1| + ... + |lg x_n|`` between `P` and `Q`

    The ``x_i`` are the eigenvalues of ``P^-1 @ Q``.

    Parameters
    ----------
    P, Q : PDPoint
        Points of the same dimension

    Returns
    -------
    distance : :class:`~lambdabuildings.log_value.LogElement`

    Raises
    ------
    NotSupported
        If the eigenvalues are not representable; use
        :func:`valuation_distance` instead

    Examples
    --------
    >>> from lambdabuildings.symmetric_space import (diagonal_point,
    ...                                              identity_point,
    ...                                              lambda_distance)
    >>> P = diagonal_point(['t^(-1)', 't'])
    >>> str(lambda_distance(identity_point(2), P))
    'lg(t^(-2))'
    """
    _check_pair(P, Q)
    return WeylVector(eigenvalues(_relative(P, Q))).norm()


def valuation_orders(P, Q):
    """Valuations of the eigenvalues of ``P^-1 @ Q``, ascending"""
    _check_pair(P, Q)
    return matrices.charpoly_root_orders(_relative(P, Q))


def valuation_vector(P, Q):
    """Negated eigenvalue valuations of ``P^-1 @ Q``, sorted descending"""
    return sorted((-o for o in valuation_orders(P, Q)), reverse=True)


def valuation_distance(P, Q):
    """
    Sum of the absolute valuations of the eigenvalues of ``P^-1 @ Q``

    Uses only the Newton polygon of the characteristic polynomial, so it is
    defined whenever :func:`lambda_distance` is, and agrees with its image
    under :func:`~lambdabuildings.log_value.quotient_map`.

    Returns
    -------
    distance : fractions.Fraction

    Examples
    --------
    >>> from lambdabuildings.symmetric_space import (diagonal_point,
    ...                                              identity_point,
    ...                                              valuation_distance)
    >>> P = diagonal_point(['t^(-3)', 't', 't^2'])
    >>> valuation_distance(identity_point(3), P)
    Fraction(6, 1)
    """
    return sum((abs(o) for o in valuation_orders(P, Q)), Fraction(0))


def _check_pair(P, Q):
    if P.n != Q.n:
        raise ValueError('Points must have the same dimension, not {} and {}'
                         .format(P.n, Q.n))


def _div(a, b, depth=None):
    if isinstance(a, RationalFunction) and isinstance(b, RationalFunction):
        return a / b
    return as_puiseux(a, depth=depth) * as_puiseux(b, depth=depth).inverse(
        depth=depth)


def _sqrt(value, depth=None):
    if isinstance(value, RationalFunction):
        value = value.cancel()
        if not value.is_polynomial:
            num = value.numerator.sqrt(depth=depth)
            den = value.denominator.sqrt(depth=depth)
            return num * den.inverse(depth=depth)
        value = value.numerator
    return value.sqrt(depth=depth)


def iwasawa(g, depth=None):
    """
    Decomposes `g` as ``k @ a @ u`` by Gram-Schmidt on its columns

    Parameters
    ----------
    g : (N, N) array_like
        Matrix with determinant 1
    depth : rational, optional
        Truncation depth for square roots and inverses. Default: None

    Returns
    -------
    k : (N, N) numpy.ndarray
        Orthogonal matrix
    a : (N, N) numpy.ndarray
        Positive diagonal matrix with determinant 1
    u : (N, N) numpy.ndarray
        Upper unipotent matrix

    Raises
    ------
    SingularMatrix
        If `g` is singular
    ValueError
        If ``det(g)`` is not 1

    Examples
    --------
    >>> from lambdabuildings.symmetric_space import iwasawa
    >>> from lambdabuildings import matrices
    >>> k, a, u = iwasawa([[1, 0], [1, 1]])
    >>> matrices.to_json(a)
    [['(sqrt(2))', '0'], ['0', '(sqrt(2)/2)']]
    """
    g = matrices.as_matrix(g, depth=depth)
    n = g.shape[0]
    d = matrices.det(g)
    if d.is_exact_zero():
        raise SingularMatrix('Cannot decompose a singular matrix')
    if not (d - 1).is_zero_through_window():
        raise ValueError('Provided `g` must have determinant 1, not {}'
                         .format(d))
    field = RationalFunction if matrices.is_exact(g) else as_puiseux
    cols = [[field(g[i, j]) for i in range(n)] for j in range(n)]
    ortho, norms = [], []
    u = matrices.identity(n)
    for j in range(n):
        vec = list(cols[j])
        for i in range(j):
            dot = sum((x * y for x, y in zip(cols[j], ortho[i])),
                      PuiseuxElement.zero())
            coef = _div(dot, norms[i], depth=depth)
            u[i, j] = as_puiseux(coef, depth=depth)
            vec = [_sub(x, coef, y) for x, y in zip(vec, ortho[i])]
        ortho.append(vec)
        norms.append(sum((x * x for x in vec), PuiseuxElement.zero()))
    a_diag = [_sqrt(nrm, depth=depth) for nrm in norms]
    k = np.empty((n, n), dtype=object)
    for j in range(n):
        inv = a_diag[j].inverse(depth=depth)
        for i in range(n):
            k[i, j] = as_puiseux(ortho[j][i], depth=depth) * inv
    return k, matrices.diagonal(a_diag), u


def _sub(x, coef, y):
    if all(isinstance(v, RationalFunction) for v in (x, coef, y)):
        return x - coef * y
    return as_puiseux(x) - as_puiseux(coef) * as_puiseux(y)


def ldl_decomposition(P):
    """
    Exact factorization ``P = L @ diag(D) @ L.T`` from principal minors

    Parameters
    ----------
    P : PDPoint or (N, N) array_like
        Symmetric matrix with nonzero leading principal minors

    Returns
    -------
    L : (N, N) numpy.ndarray
        Lower unipotent matrix of rational functions (series if `P` is
        truncated), ``L[i, k] = B[i, k] / Delta_k``
    D : list
        ``D_k = Delta_k / Delta_(k-1)`` with ``Delta_k`` the leading
        principal minors
    """
    mat = P.mat if isinstance(P, PDPoint) else matrices.as_matrix(P)
    n = mat.shape[0]
    exact = matrices.is_exact(mat)
    work = _exact_copy(mat) if exact else mat
    cache = {}
    deltas = [_one(exact)] + [matrices.minor(work, range(k), range(k), cache)
                              for k in range(1, n + 1)]
    L = np.empty((n, n), dtype=object)
    for k in range(n):
        for i in range(n):
            if i < k:
                L[i, k] = _zero(exact)
            elif i == k:
                L[i, k] = _one(exact)
            else:
                b_ik = matrices.minor(work, tuple(range(k)) + (i,),
                                      range(k + 1), cache)
                L[i, k] = _div(b_ik, deltas[k + 1])
    D = [_div(deltas[k + 1], deltas[k]) for k in range(n)]
    if exact:
        D = [d.cancel() for d in D]
    return L, D


def _exact_copy(mat):
    out = np.empty(mat.shape, dtype=object)
    for idx, entry in np.ndenumerate(mat):
        out[idx] = RationalFunction(entry)
    return out


def _one(exact):
    return RationalFunction(1) if exact else PuiseuxElement.one()


def _zero(exact):
    return RationalFunction(0) if exact else PuiseuxElement.zero()


def iwasawa_projection(P, depth=None):
    """
    Diagonal part ``a`` of ``g = L @ a @ k`` for any ``g`` with
    ``g @ g.T = P``

    Returns
    -------
    a : list of PuiseuxElement
        Square roots of the LDL pivots of `P`
    """
    _, D = ldl_decomposition(P)
    return [_sqrt(d, depth=depth) for d in D]


def projection_orders(P):
    """Valuations of :func:`iwasawa_projection`, computed exactly"""
    _, D = ldl_decomposition(P)
    return [Fraction(_order(d)) / 2 for d in D]


def _order(value):
    if isinstance(value, RationalFunction):
        return value.order
    if value.is_empty:
        raise PrecisionExhausted('order', [value])
    return value.order


def retraction_to_diagonal(P, depth=None):
    """
    Retracts `P` onto the diagonal points along lower unipotent orbits

    The image is ``diag(D)`` from ``P = L @ diag(D) @ L.T``, the square of the
    Iwasawa a-part of a factor of `P`. Diagonal points are fixed and valuation
    distances do not increase.

    Parameters
    ----------
    P : PDPoint
        Point to retract
    depth : rational, optional
        Truncation depth used to expand quotients. Default: None

    Returns
    -------
    image : PDPoint
        Diagonal point
    """
    _, D = ldl_decomposition(P)
    return PDPoint(matrices.diagonal([as_puiseux(d, depth=depth) for d in D]),
                   check=False)


def in_weyl_hull(vector, weight):
    """
    Whether `vector` lies in the convex hull of the permutations of `weight`

    Decided exactly by majorization: sorted partial sums of `vector` must be
    dominated by those of `weight`, with equal totals.

    Examples
    --------
    >>> from lambdabuildings.symmetric_space import in_weyl_hull
    >>> in_weyl_hull([0, 0], [1, -1]), in_weyl_hull([2, -2], [1, -1])
    (True, False)
    """
    vec = sorted((Fraction(v) for v in vector), reverse=True)
    lam = sorted((Fraction(v) for v in weight), reverse=True)
    if len(vec) != len(lam) or sum(vec) != sum(lam):
        return False
    return all(v <= w for v, w in zip(itertools.accumulate(vec),
                                      itertools.accumulate(lam)))


def _kostant_instance(seed, a=None, n=2):
    from .datasets import make_orthogonal, make_weight

    if a is None:
        a = matrices.monomial_diagonal(make_weight(n, seed=seed + 1))
    a = matrices.as_matrix(a)
    k = make_orthogonal(a.shape[0], seed=seed)
    g = matrices.matmul(k, a)
    P = PDPoint(matrices.matmul(g, matrices.transpose(g)), check=False)
    weight = [_order(a[i, i]) for i in range(a.shape[0])]
    vector = projection_orders(P)
    ok = in_weyl_hull(vector, weight)
    return dict(seed=seed, status='pass' if ok else 'fail',
                k=matrices.to_json(k), weight=[str(w) for w in weight],
                projection=[str(v) for v in vector])


def kostant_check(a=None, samples=100, n=2, seed=None, n_jobs=1, verbose=0,
                  depth=None):
    """
    Checks that Iwasawa projections of ``k @ a`` lie in the Weyl hull of `a`

    For rational rotations `k` the valuation vector of the a-part of the
    point ``(k @ a) @ (k @ a).T`` is tested for membership in the convex hull
    of the permutations of the valuation vector of `a`.

    Parameters
    ----------
    a : (N, N) array_like, optional
        Positive diagonal matrix with determinant 1. If not specified a random
        monomial diagonal of dimension `n` is drawn per sample. Default: None
    samples : int, optional
        Number of sampled rotations. Default: 100
    n : int, optional
        Dimension used when `a` is not given. Default: 2
    seed : {int, np.random.RandomState instance, None}, optional
        Seed for random number generation. Default: None
    n_jobs : int, optional
        Number of parallel workers. Default: 1
    verbose : int, optional
        Verbosity of the package logger. Default: 0
    depth : rational, optional
        Truncation depth for square roots and inverses. Default: see
        :func:`~lambdabuildings.exact_fields.get_default_depth`

    Returns
    -------
    report : :class:`sklearn.utils.Bunch`
    """
    if a is not None:
        a = matrices.as_matrix(a)
        if not matrices.is_diagonal(a):
            raise ValueError('Provided `a` must be diagonal')
    return utils.run_checks('kostant convexity',
                            partial(_kostant_instance, a=a, n=n), samples,
                            seed=seed, n_jobs=n_jobs, verbose=verbose,
                            depth=depth)


def _metric_instance(seed, n=2):
    from .datasets import make_pd_point, make_sl_matrix, make_weight

    P, Q, R = (make_pd_point(n, seed=seed + i) for i in range(3))
    g = make_sl_matrix(n, seed=seed + 3)
    problems = []

    dpq, dqp = valuation_distance(P, Q), valuation_distance(Q, P)
    dqr, dpr = valuation_distance(Q, R), valuation_distance(P, R)
    if dpq != dqp:
        problems.append('symmetry')
    if valuation_distance(P, P) != 0:
        problems.append('identity')
    if dpr > dpq + dqr:
        problems.append('triangle')
    if valuation_distance(P.act(g), Q.act(g)) != dpq:
        problems.append('invariance')
    rP, rQ = retraction_to_diagonal(P), retraction_to_diagonal(Q)
    if valuation_distance(rP, rQ) > dpq:
        problems.append('retraction contraction on pairs')

    # weyl invariance on a diagonal point
    weight = make_weight(n, seed=seed + 4)
    X = [PuiseuxElement.t(w) for w in weight]
    base = identity_point(n)
    dist = lambda_distance(base, PDPoint(matrices.diagonal(X), check=False))
    perm = list(reversed(range(n)))
    dist_perm = lambda_distance(base, PDPoint(
        matrices.diagonal([X[p] for p in perm]), check=False))
    if log_compare(dist, dist_perm) != EQ:
        problems.append('weyl invariance')

    # the diagonal retraction fixes A and diminishes distances; translating
    # a triple with two diagonal points carries the inequality to any triple
    A = PDPoint(matrices.diagonal(X), check=False)
    B = PDPoint(matrices.monomial_diagonal(make_weight(n, seed=seed + 5)),
                check=False)
    rA, rB = retraction_to_diagonal(A), retraction_to_diagonal(B)
    daq, dqb = valuation_distance(A, Q), valuation_distance(Q, B)
    if not (rA.equals(A) and rB.equals(B)):
        problems.append('retraction fixes diagonal')
    if (valuation_distance(rA, rQ) > daq
            or valuation_distance(rQ, rB) > dqb):
        problems.append('retraction contraction')
    dab = valuation_distance(A, B)
    if dab > valuation_distance(rA, rQ) + valuation_distance(rQ, rB):
        problems.append('triangle on diagonal')
    gA, gQ, gB = A.act(g), Q.act(g), B.act(g)
    if (valuation_distance(gA, gB) != dab
            or valuation_distance(gA, gQ) != daq
            or valuation_distance(gQ, gB) != dqb):
        problems.append('translated triple')
    if dab > daq + dqb:
        problems.append('triangle via retraction')

    return dict(seed=seed, status='fail' if problems else 'pass',
                problems=problems, distances=[str(d) for d in
                                              (dpq, dqr, dpr)])


def metric_axioms_check(n=2, sample_size=200, seed=None, n_jobs=1,
                        verbose=0):
    """
    Checks the metric laws of :func:`valuation_distance` on sampled points

    Verifies symmetry, identity, the triangle inequality (directly and through
    the contraction of :func:`retraction_to_diagonal`), invariance under the
    action of determinant-1 matrices and invariance of
    :func:`lambda_distance` under permutations of diagonal points.

    Parameters
    ----------
    n : int, optional
        Dimension. Default: 2
    sample_size : int, optional
        Number of sampled triples. Default: 200
    seed : {int, np.random.RandomState instance, None}, optional
        Seed for random number generation. Default: None
    n_jobs : int, optional
        Number of parallel workers. Default: 1
    verbose : int, optional
        Verbosity of the package logger. Default: 0

    Returns
    -------
    report : :class:`sklearn.utils.Bunch`
    """
    return utils.run_checks('symmetric space metric',
                            partial(_metric_instance, n=n), sample_size,
                            seed=seed, n_jobs=n_jobs, verbose=verbose)
