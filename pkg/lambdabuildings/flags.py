# -*- coding: utf-8 -*-
"""
Functions for sectors, local buildings and the building at infinity
"""

from functools import partial

import numpy as np
import sympy

from .building import ApartmentChart, _row_profile, as_model_point
from .errors import InvariantViolation, PrecisionExhausted
from .exact_fields import (PuiseuxElement, RationalFunction, as_puiseux,
                           coefficient_from_sympy, coefficient_to_sympy)
from .valuation import residue
from . import matrices, utils

FIELDS = ('residue', 'field')


def _is_dominant(q):
    return all(a >= b for a, b in zip(q[:-1], q[1:]))


def _clean(value):
    return sympy.radsimp(sympy.expand(value))


def _canonical_basis(mat):
    # unique basis of a full flag: column k is reduced against the pivots of
    # the earlier columns and scaled to have a leading 1
    n = mat.rows
    out, pivots = [], []
    for k in range(n):
        vec = mat[:, k]
        for piv, col in zip(pivots, out):
            vec = vec - vec[piv] * col
        vec = vec.applyfunc(_clean)
        nonzero = [i for i in range(n) if vec[i] != 0]
        if not nonzero:
            raise InvariantViolation('Flag basis is not invertible')
        piv = nonzero[0]
        vec = (vec / vec[piv]).applyfunc(_clean)
        out.append(vec)
        pivots.append(piv)
    return sympy.Matrix.hstack(*out)


class FlagChamber:
    """
    Full flag ``V_1 < V_2 < ... < V_(n-1)``, ``V_k`` spanned by the first k
    columns of `basis`

    Parameters
    ----------
    basis : array_like or sympy.Matrix
        Invertible (N, N) matrix. Over the residue field its entries are
        rationals (or algebraic numbers); over the field they are Puiseux
        series
    field : {'residue', 'field'}, optional
        Whether the flag lives over the residue field (a chamber of the local
        building) or over the field (a chamber at infinity). Default:
        'residue'
    """

    def __init__(self, basis, field='residue'):
        if field not in FIELDS:
            raise ValueError('Provided `field` must be one of {}, not {}'
                             .format(list(FIELDS), field))
        self.field = field
        if field == 'residue':
            basis = sympy.Matrix(basis).applyfunc(_clean)
            if basis.rank() < basis.rows:
                raise InvariantViolation('Flag basis is not invertible')
            self.basis = _canonical_basis(basis)
        else:
            self.basis = matrices.as_matrix(basis)
            if matrices.det(self.basis).is_exact_zero():
                raise InvariantViolation('Flag basis is not invertible')

    @property
    def n(self):
        return self.basis.shape[0]

    def subspace(self, k):
        """Columns spanning ``V_k``"""
        if not 0 < k < self.n:
            raise ValueError('Provided `k` must lie in [1, {}], not {}'
                             .format(self.n - 1, k))
        return self.basis[:, :k]

    def face(self, types):
        """
        Partial flag of the subspaces with dimensions in `types`

        Returns
        -------
        face : tuple of (int, basis) tuples
        """
        return tuple((k, self.subspace(k)) for k in sorted(set(types)))

    def _combined(self, other, k):
        # first k columns of self beside the first n - k columns of other
        if self.field == 'residue':
            return sympy.Matrix.hstack(self.basis[:, :k],
                                       other.basis[:, :self.n - k])
        return np.hstack([self.basis[:, :k], other.basis[:, :self.n - k]])

    def is_opposite(self, other):
        """Whether ``V_k`` and ``W_(n-k)`` are complementary for every k"""
        self._check_other(other)
        for k in range(1, self.n):
            mat = self._combined(other, k)
            if self.field == 'residue':
                if mat.det() == 0:
                    return False
            else:
                d = matrices.det(mat)
                if d.is_empty:
                    if not d.is_exact:
                        raise PrecisionExhausted('opposition', [d])
                    return False
        return True

    def _check_other(self, other):
        if self.field != other.field or self.n != other.n:
            raise ValueError('Cannot compare a {} flag of size {} with a {} '
                             'flag of size {}'.format(self.field, self.n,
                                                      other.field, other.n))

    def equals(self, other):
        self._check_other(other)
        if self.field == 'residue':
            return self.basis == other.basis
        rel = matrices.matmul(matrices.adjugate(self.basis), other.basis)
        for i in range(self.n):
            for j in range(i):
                entry = rel[i, j]
                if not entry.is_empty:
                    return False
                if not entry.is_exact:
                    raise PrecisionExhausted('flag equality', [entry])
        return True

    def __eq__(self, other):
        if not isinstance(other, FlagChamber):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def to_json(self):
        if self.field == 'residue':
            basis = [[str(self.basis[i, j]) for j in range(self.n)]
                     for i in range(self.n)]
        else:
            basis = matrices.to_json(self.basis)
        return dict(field=self.field, n=self.n, basis=basis)

    def __repr__(self):
        return 'FlagChamber({!r}, {})'.format(self.field,
                                              self.to_json()['basis'])


def standard_flag(n, field='residue'):
    """Flag ``<e_1> < <e_1, e_2> < ...``"""
    if field == 'residue':
        return FlagChamber(sympy.eye(n))
    return FlagChamber(matrices.identity(n), field='field')


def residue_flag(mat):
    """
    Flag over the residue field spanned by the residues of the columns of
    `mat`, which must lie in GL_n(O)

    Examples
    --------
    >>> from lambdabuildings.flags import residue_flag, standard_flag
    >>> residue_flag([[1, 't'], ['t^(1/2)', 1]]) == standard_flag(2)
    True
    """
    mat = matrices.as_matrix(mat)
    n = mat.shape[0]
    res = sympy.Matrix(n, n, lambda i, j: coefficient_to_sympy(
        residue(mat[i, j])))
    if res.rank() < n:
        raise ValueError('Provided matrix does not lie in GL_n(O): its '
                         'residue is singular')
    return FlagChamber(res)


def field_flag(mat):
    """Flag over the field spanned by the columns of `mat`"""
    return FlagChamber(mat, field='field')


class Sector:
    """
    Sector ``chart(tip + S_0)`` for the dominant cone
    ``S_0 = {q : q_1 >= q_2 >= ... >= q_n}``

    Parameters
    ----------
    chart : :class:`~lambdabuildings.building.ApartmentChart`
        Apartment containing the sector
    tip : sequence of rational, optional
        Model coordinates of the base point. Default: the origin
    """

    def __init__(self, chart, tip=None):
        self.chart = chart
        if tip is None:
            tip = [0] * chart.n
        self.tip = as_model_point(tip, chart.n)

    @property
    def n(self):
        return self.chart.n

    @property
    def base(self):
        return self.chart.point(self.tip)

    @property
    def frame_at_tip(self):
        """``frame @ diag(t^(-tip))``, a representative of the base point"""
        return matrices.matmul(self.chart.frame, matrices.monomial_diagonal(
            [-q for q in self.tip]))

    def _check_direction(self, direction):
        direction = as_model_point(direction, self.n)
        if not _is_dominant(direction):
            raise ValueError('Provided direction must be dominant, not {}'
                             .format([str(d) for d in direction]))
        return direction

    def point(self, direction):
        """Point of the sector at ``tip + direction``"""
        direction = self._check_direction(direction)
        return self.chart.point([a + b for a, b in zip(self.tip, direction)])

    def subsector(self, shift):
        """Sector of the same chart with tip translated by dominant `shift`"""
        shift = self._check_direction(shift)
        return Sector(self.chart, [a + b for a, b in zip(self.tip, shift)])

    def contains(self, point):
        q = self.chart.coordinates(point)
        if q is None:
            return False
        return _is_dominant([a - b for a, b in zip(q, self.tip)])

    def based_at(self, point):
        """
        Parallel sector of the same chart with its tip at `point`

        Raises
        ------
        ValueError
            If `point` is off the apartment of the chart
        """
        q = self.chart.coordinates(point)
        if q is None:
            raise ValueError('Provided point does not lie in the apartment '
                             'of the sector')
        return Sector(self.chart, q)

    def perturb(self, k):
        """
        Sector based at the same point with frame ``frame_at_tip @ k``

        For `k` in GL_n(O) with identity residue the germ at the base point
        is unchanged.
        """
        chart = ApartmentChart(matrices.matmul(self.frame_at_tip,
                                               matrices.as_matrix(k)),
                               check=False)
        return Sector(chart)

    def to_json(self):
        return dict(n=self.n, frame=matrices.to_json(self.chart.frame),
                    tip=[str(q) for q in self.tip])

    def __repr__(self):
        return 'Sector(tip={})'.format([str(q) for q in self.tip])


def sector_from_json(data, depth=None):
    """Reads a sector from a dict with keys 'frame' and optionally 'tip'"""
    if not isinstance(data, dict) or 'frame' not in data:
        raise ValueError("JSON sector must be an object with key 'frame'")
    chart = ApartmentChart(matrices.from_json(data['frame'], depth=depth))
    return Sector(chart, data.get('tip'))


def standard_sector(n):
    return Sector(ApartmentChart(matrices.identity(n), check=False))


def germ_at(x, sector):
    """
    Chamber of the local building at `x` containing the germ of `sector`

    Parameters
    ----------
    x : :class:`~lambdabuildings.building.BuildingPoint`
        Base point of `sector`
    sector : Sector
        Sector based at `x`

    Returns
    -------
    chamber : FlagChamber
        Residue flag of ``adj(x.rep) @ sector.frame_at_tip``

    Raises
    ------
    ValueError
        If `sector` is not based at `x`

    Examples
    --------
    >>> from lambdabuildings.building import base_point
    >>> from lambdabuildings.flags import germ_at, standard_sector
    >>> germ_at(base_point(2), standard_sector(2)).to_json()['basis']
    [['1', '0'], ['0', '1']]
    """
    if not sector.base.equals(x):
        raise ValueError('Provided sector is not based at `x`')
    rel = matrices.matmul(matrices.adjugate(x.rep), sector.frame_at_tip)
    return residue_flag(rel)


def chamber_at_infinity(sector):
    """Flag over the field spanned by the frame of `sector`"""
    return field_flag(sector.chart.frame)


def k_frame(mat):
    """
    Writes invertible `mat` as ``K @ U`` with `K` in GL_n(O) and `U` upper
    triangular over the field

    Columns are processed in order: each is scaled to be primitive and
    O-combinations of earlier columns are subtracted until its residue is
    independent of theirs.

    Returns
    -------
    K : (N, N) numpy.ndarray
        Matrix in GL_n(O) whose columns span the same flag as `mat`
    """
    mat = matrices.as_matrix(mat)
    n = mat.shape[0]
    cols, residues = [], []
    for k in range(n):
        col = list(mat[:, k])
        while True:
            low, res = _row_profile(col)
            col = [e * PuiseuxElement.t(-low) for e in col]
            if not residues:
                break
            span = sympy.Matrix([[coefficient_to_sympy(c) for c in r]
                                 for r in residues]).T
            target = sympy.Matrix([coefficient_to_sympy(c) for c in res])
            try:
                sol, _ = span.gauss_jordan_solve(target)
            except ValueError:
                break
            for coef, prev in zip(sol, cols):
                coef = PuiseuxElement.constant(coefficient_from_sympy(coef))
                col = [a - coef * b for a, b in zip(col, prev)]
        cols.append(col)
        residues.append(res)
    out = np.empty((n, n), dtype=object)
    for j, col in enumerate(cols):
        out[:, j] = col
    return out


def reduce_flag(chamber, x):
    """
    Image of a chamber at infinity in the local building at `x`

    This is the germ at `x` of the sector based at `x` with chamber at
    infinity `chamber`.
    """
    if chamber.field != 'field':
        raise ValueError('Provided chamber must be a flag over the field')
    rel = matrices.matmul(matrices.adjugate(x.rep), chamber.basis)
    return residue_flag(k_frame(rel))


def _is_zero(entry):
    if isinstance(entry, RationalFunction):
        return entry.is_zero()
    if entry.is_empty and not entry.is_exact:
        raise PrecisionExhausted('bruhat pivot', [entry])
    return entry.is_empty


def bruhat_decomposition(mat):
    """
    Writes invertible `mat` as ``U1 @ Pi @ U2`` with `U1`, `U2` upper
    triangular and `Pi` a permutation matrix

    Rows are reduced column by column using the lowest available pivot, which
    only adds multiples of lower rows to higher ones. Exact inputs are
    reduced over rational functions.

    Returns
    -------
    U1 : (N, N) numpy.ndarray
        Upper unipotent matrix, of rational functions when `mat` is exact
        and of Puiseux series otherwise
    perm : list of int
        ``Pi`` sends ``e_j`` to ``e_perm[j]``
    """
    mat = matrices.as_matrix(mat)
    n = mat.shape[0]
    exact = matrices.is_exact(mat)
    conv = RationalFunction if exact else as_puiseux
    work = [[conv(mat[i, j]) for j in range(n)] for i in range(n)]
    u1 = [[conv(1 if i == j else 0) for j in range(n)] for i in range(n)]
    pivots = {}
    for c in range(n):
        free = [r for r in range(n) if r not in pivots
                and not _is_zero(work[r][c])]
        if not free:
            raise InvariantViolation('Matrix is singular')
        low = max(free)
        pivots[low] = c
        inv = work[low][c].inverse()
        for r in free:
            if r == low:
                continue
            coef = work[r][c] * inv
            work[r] = [a - coef * b for a, b in zip(work[r], work[low])]
            for i in range(n):
                u1[i][low] = u1[i][low] + coef * u1[i][r]
    perm = [0] * n
    for r, c in pivots.items():
        perm[c] = r
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        out[i, :] = u1[i]
    return out, perm


def _integral_columns(u1):
    # rescales the columns of an upper unipotent matrix of rational
    # functions into exact series with unit diagonal
    n = u1.shape[0]
    out = np.empty((n, n), dtype=object)
    for j in range(n):
        col = list(u1[:, j])
        if not all(isinstance(e, RationalFunction) for e in col):
            out[:, j] = [as_puiseux(e) for e in col]
            continue
        den = PuiseuxElement.one()
        for e in col:
            if not e.is_polynomial:
                den = den * e.denominator
        lead = den.leading_term().inverse()
        scaled = [(e * RationalFunction(den)).cancel() for e in col]
        out[:, j] = [e.to_puiseux() * lead for e in scaled]
    return out


def common_apartment(first, second):
    """
    Chart of an apartment containing two chambers at infinity

    Parameters
    ----------
    first, second : FlagChamber
        Flags over the field

    Returns
    -------
    chart : :class:`~lambdabuildings.building.ApartmentChart`
        Chart whose frame spans `first`
    perm : list of int
        ``chart.frame @ permutation_matrix(perm)`` spans `second`
    """
    for chamber in (first, second):
        if chamber.field != 'field':
            raise ValueError('Chambers at infinity must be flags over the '
                             'field')
    rel = matrices.matmul(matrices.adjugate(first.basis), second.basis)
    u1, perm = bruhat_decomposition(rel)
    return ApartmentChart(matrices.matmul(first.basis, _integral_columns(u1)),
                          check=False), perm


def _epimorphism_instance(seed, n=2):
    from .datasets import (make_integral_matrix, make_sl_matrix,
                           make_unipotent, make_weight)

    chart = ApartmentChart(make_sl_matrix(n, seed=seed), check=False)
    sector = Sector(chart, make_weight(n, seed=seed + 1))
    x = sector.base
    problems = []

    germ = germ_at(x, sector)
    bump = make_integral_matrix(n, seed=seed + 2, residue_identity=True)
    if germ_at(x, sector.perturb(bump)) != germ:
        problems.append('germ under residue-trivial perturbation')

    far = chamber_at_infinity(sector)
    shift = sorted(make_weight(n, seed=seed + 3), reverse=True)
    if chamber_at_infinity(sector.subsector(shift)) != far:
        problems.append('subsector at infinity')
    upper = make_unipotent(n, seed=seed + 4)
    if field_flag(matrices.matmul(chart.frame, upper)) != far:
        problems.append('flag under upper unipotent change of frame')

    if reduce_flag(far, x) != germ:
        problems.append('residue of chamber at infinity')

    return dict(seed=seed, status='fail' if problems else 'pass',
                problems=problems, sector=sector.to_json(),
                germ=germ.to_json()['basis'])


def epimorphism_check(n=2, sample_size=100, seed=None, n_jobs=1, verbose=0):
    """
    Checks that germs and chambers at infinity are compatible on samples

    For random sectors, verifies that the germ at the tip is unchanged by
    frame perturbations with identity residue, that subsectors and upper
    unipotent changes of frame keep the chamber at infinity, and that the
    germ is the image of the chamber at infinity in the local building.

    Parameters
    ----------
    n : int, optional
        Dimension. Default: 2
    sample_size : int, optional
        Number of sampled sectors. Default: 100
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
    return utils.run_checks('germ and infinity coherence',
                            partial(_epimorphism_instance, n=n), sample_size,
                            seed=seed, n_jobs=n_jobs, verbose=verbose)
