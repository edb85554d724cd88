# -*- coding: utf-8 -*-
"""
Functions for the affine building of lattice classes SL_n(R) / SL_n(O)
"""

import itertools
import json
import logging
import math
from fractions import Fraction

import numpy as np
import sympy

from .errors import InvariantViolation, PrecisionExhausted, SingularMatrix
from .exact_fields import (PuiseuxElement, as_rational, coefficient_from_sympy,
                           coefficient_to_sympy)
from .symmetric_space import PDPoint
from .valuation import is_in_O
from . import matrices

LGR = logging.getLogger(__name__)


def _check_unit_det(mat):
    d = matrices.det(mat)
    if d.is_empty:
        if d.is_exact:
            raise SingularMatrix('Representative is singular')
        raise PrecisionExhausted('determinant', [d])
    if d.order != 0:
        raise InvariantViolation('Representative must have a determinant of '
                                 'valuation 0, not {}'.format(d.order))


def _is_integral(mat):
    return all(is_in_O(entry) for entry in mat.flat)


class BuildingPoint:
    """
    Lattice class ``g @ SL_n(O)`` represented by a matrix `g`

    Two points are equal when ``inv(g) @ h`` has all its entries in O, which
    is decided exactly through the adjugate of `g`.

    Parameters
    ----------
    rep : array_like
        (N, N) matrix whose determinant is a unit of O (usually 1)
    check : bool, optional
        Whether to validate the determinant. Default: True
    depth : rational, optional
        Truncation depth used when parsing quotients. Default: None

    Raises
    ------
    InvariantViolation
        If `check` is set and ``det(rep)`` is not a unit

    Examples
    --------
    >>> from lambdabuildings.building import BuildingPoint, base_point
    >>> x = BuildingPoint([['1 + t', 0], [0, '1/(1 + t)']])
    >>> x == base_point(2)
    True
    """

    def __init__(self, rep, check=True, depth=None):
        self.rep = matrices.as_matrix(rep, depth=depth)
        if check:
            _check_unit_det(self.rep)

    @property
    def n(self):
        return self.rep.shape[0]

    def translate(self, g):
        """Returns the point ``g @ rep``"""
        return BuildingPoint(matrices.matmul(matrices.as_matrix(g), self.rep),
                             check=False)

    def relative(self, other):
        """``adj(rep) @ other.rep``, a representative of ``inv(x) @ y``"""
        return matrices.matmul(matrices.adjugate(self.rep), other.rep)

    def equals(self, other):
        if self.n != other.n:
            return False
        return _is_integral(self.relative(other))

    def __eq__(self, other):
        if not isinstance(other, BuildingPoint):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def to_json(self):
        return dict(n=self.n, entries=matrices.to_json(self.rep))

    def __repr__(self):
        return 'BuildingPoint({})'.format(matrices.to_json(self.rep))


def base_point(n):
    """Returns the base point ``o = SL_n(O)``"""
    return BuildingPoint(matrices.identity(n), check=False)


def building_point_from_json(data, depth=None):
    """
    Reads a building point from JSON

    The determinant is checked on the exact rational functions the entries
    denote before they are expanded as series.

    Parameters
    ----------
    data : str or dict or list
        JSON text, a dict with key 'entries', or the entries themselves
    depth : rational, optional
        Truncation depth used to expand quotients. Default: None

    Returns
    -------
    point : BuildingPoint

    Raises
    ------
    ValueError
        If `data` cannot be parsed
    InvariantViolation
        If the determinant is not a unit
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as err:
            raise ValueError('Invalid JSON point: {}'.format(err))
    entries = data.get('entries') if isinstance(data, dict) else data
    if not isinstance(entries, list):
        raise ValueError("JSON point must be a matrix or have key 'entries'")
    exact = matrices.as_exact_matrix([[str(e) for e in row]
                                      for row in entries])
    d = matrices.det(exact)
    if d.is_zero():
        raise SingularMatrix('Representative is singular')
    if d.order != 0:
        raise InvariantViolation('Representative must have a determinant of '
                                 'valuation 0, not {}'.format(d.order))
    return BuildingPoint(matrices.expand(exact, depth=depth), check=False)


def _check_pair(x, y):
    if x.n != y.n:
        raise ValueError('Points must have the same dimension, not {} and {}'
                         .format(x.n, y.n))


# Smith normal form over O

def _pivot(mat, k):
    n = mat.shape[0]
    best, pos, floor = None, None, math.inf
    for i in range(k, n):
        for j in range(k, n):
            entry = mat[i, j]
            if entry.is_empty:
                if not entry.is_exact:
                    floor = min(floor, entry.certified_order)
                continue
            if best is None or entry.order < best:
                best, pos = entry.order, (i, j)
    if best is None and floor == math.inf:
        raise SingularMatrix('Matrix is singular; no pivot in column {}'
                             .format(k))
    if best is None or floor <= best:
        raise PrecisionExhausted('smith pivot in block {}'.format(k),
                                 [mat[i, j] for i in range(k, n)
                                  for j in range(k, n)])
    return pos


def _swap_rows(mat, a, b):
    if a != b:
        mat[[a, b], :] = mat[[b, a], :]


def _swap_cols(mat, a, b):
    if a != b:
        mat[:, [a, b]] = mat[:, [b, a]]


def _combine(vec, unit, coef, other):
    return [unit * x - coef * y for x, y in zip(vec, other)]


def smith_normal_form(mat):
    """
    Smith normal form of an invertible matrix over the valuation ring O

    Elimination pivots on an entry of minimal valuation, ties broken by the
    lowest (row, column) index. Row and column operations scale by units and
    add O-multiples, so no division by a non-monomial occurs until the unit
    determinants of both factors are folded into the last diagonal entry.

    Parameters
    ----------
    mat : (N, N) array_like
        Invertible matrix of Puiseux series

    Returns
    -------
    left : (N, N) numpy.ndarray
        Matrix in SL_n(O)
    diag : list of PuiseuxElement
        Diagonal entries, with nondecreasing valuations
    right : (N, N) numpy.ndarray
        Matrix in SL_n(O) with ``left @ mat @ right = diag(diag)``

    Raises
    ------
    SingularMatrix
        If `mat` is singular
    PrecisionExhausted
        If the valuation of a pivot cannot be certified

    Examples
    --------
    >>> from lambdabuildings.building import smith_normal_form
    >>> _, diag, _ = smith_normal_form([[1, 't^(-1)'], [0, 1]])
    >>> [str(d) for d in diag]
    ['t^(-1)', 't']
    """
    work = matrices.as_matrix(mat).copy()
    n = work.shape[0]
    left, right = matrices.identity(n), matrices.identity(n)
    for k in range(n):
        i, j = _pivot(work, k)
        _swap_rows(work, k, i)
        _swap_rows(left, k, i)
        _swap_cols(work, k, j)
        _swap_cols(right, k, j)
        pivot = work[k, k]
        lead_inv = pivot.leading_term().inverse()
        unit = pivot * lead_inv
        LGR.debug('Smith pivot %d at (%d, %d): %s', k, i, j, pivot)
        for r in range(k + 1, n):
            if work[r, k].is_exact_zero():
                continue
            coef = work[r, k] * lead_inv
            work[r, :] = _combine(work[r, :], unit, coef, work[k, :])
            left[r, :] = _combine(left[r, :], unit, coef, left[k, :])
            work[r, k] = PuiseuxElement.zero()
        for c in range(k + 1, n):
            if work[k, c].is_exact_zero():
                continue
            coef = work[k, c] * lead_inv
            work[:, c] = _combine(work[:, c], unit, coef, work[:, k])
            right[:, c] = _combine(right[:, c], unit, coef, right[:, k])
            work[k, c] = PuiseuxElement.zero()
    diag = [work[k, k] for k in range(n)]
    # unit determinants move to the last row of left and column of right
    u, v = (matrices.det(fac).inverse() for fac in (left, right))
    left[n - 1, :] = [e * u for e in left[n - 1, :]]
    right[:, n - 1] = [e * v for e in right[:, n - 1]]
    diag[n - 1] = diag[n - 1] * u * v
    return left, diag, right


def elementary_divisors(mat, method='smith'):
    """
    Valuations of the elementary divisors of `mat` over O, ascending

    Parameters
    ----------
    mat : (N, N) array_like
        Invertible matrix of Puiseux series
    method : {'smith', 'minors'}, optional
        Whether to read the exponents off :func:`smith_normal_form` or to
        compute them as differences of determinantal divisors (minimal
        valuations of k-by-k minors). Default: 'smith'

    Returns
    -------
    exponents : list of fractions.Fraction
    """
    if method == 'smith':
        _, diag, _ = smith_normal_form(mat)
        return [d.order for d in diag]
    elif method != 'minors':
        raise ValueError('Provided `method` must be one of [\'smith\', '
                         '\'minors\'], not {}'.format(method))
    mat = matrices.as_matrix(mat)
    n, cache = mat.shape[0], {}
    divisors = [Fraction(0)]
    for size in range(1, n + 1):
        orders, floors = [], []
        for rows in itertools.combinations(range(n), size):
            for cols in itertools.combinations(range(n), size):
                m = matrices.minor(mat, rows, cols, cache)
                if not m.is_empty:
                    orders.append(m.order)
                elif not m.is_exact:
                    floors.append(m.certified_order)
        if not orders:
            if floors:
                raise PrecisionExhausted('determinantal divisor {}'
                                         .format(size))
            raise SingularMatrix('Matrix is singular')
        low = min(orders)
        if any(f <= low for f in floors):
            raise PrecisionExhausted('determinantal divisor {}'.format(size))
        divisors.append(low)
    return [b - a for a, b in zip(divisors[:-1], divisors[1:])]


# distances

def vector_distance(x, y, method='smith'):
    """
    Vector-valued distance between building points

    Parameters
    ----------
    x, y : BuildingPoint
        Points of the same dimension
    method : {'smith', 'minors'}, optional
        See :func:`elementary_divisors`. Default: 'smith'

    Returns
    -------
    vector : list of fractions.Fraction
        Negated elementary divisors of ``inv(x) @ y``, sorted descending,
        summing to 0

    Raises
    ------
    PrecisionExhausted
        If a pivot's valuation is uncertified

    Examples
    --------
    >>> from lambdabuildings.building import (BuildingPoint, base_point,
    ...                                       vector_distance)
    >>> y = BuildingPoint([[1, 't^(-1)'], [0, 1]])
    >>> [str(q) for q in vector_distance(base_point(2), y)]
    ['1', '-1']
    """
    _check_pair(x, y)
    exps = elementary_divisors(x.relative(y), method=method)
    return sorted((-e for e in exps), reverse=True)


def scalar_distance(x, y):
    """Sum of the absolute values of :func:`vector_distance`"""
    return sum((abs(q) for q in vector_distance(x, y)), Fraction(0))


def distance_report(x, y):
    """Returns ``{'vector': [...], 'scalar': ...}`` with string entries"""
    vec = vector_distance(x, y)
    return dict(vector=[str(q) for q in vec],
                scalar=str(sum((abs(q) for q in vec), Fraction(0))))


# the model apartment

def as_model_point(q, n=None):
    """
    Converts `q` to a point of the model apartment

    Raises
    ------
    InvariantViolation
        If the coordinates do not sum to 0 or have the wrong length
    """
    q = [as_rational(v) for v in q]
    if n is not None and len(q) != n:
        raise InvariantViolation('Model point must have {} coordinates, not '
                                 '{}'.format(n, len(q)))
    if sum(q, Fraction(0)) != 0:
        raise InvariantViolation('Model point coordinates must sum to 0, not '
                                 '{}'.format(sum(q, Fraction(0))))
    return q


def weyl_act(perm, shift, q):
    """
    Applies ``w = (perm, shift)`` of the affine Weyl group to `q`

    The image has coordinates ``q[perm[i]] + shift[i]``.
    """
    if sorted(perm) != list(range(len(q))):
        raise ValueError('Provided `perm` must be a permutation of range({}), '
                         'not {}'.format(len(q), perm))
    shift = as_model_point(shift, len(q))
    return [q[p] + s for p, s in zip(perm, shift)]


def weyl_distance(p, q):
    """
    Weyl distance from `p` to `q` in the model apartment

    Returns
    -------
    vector : list of fractions.Fraction
        ``q - p`` sorted descending; its absolute sum is the taxi metric
    """
    p, q = as_model_point(p), as_model_point(q)
    return sorted((b - a for a, b in zip(p, q)), reverse=True)


def _row_profile(row):
    # valuation of a row and the residue of the row scaled by t^(-valuation)
    orders = [e.order for e in row if not e.is_empty]
    floors = [e.certified_order for e in row
              if e.is_empty and not e.is_exact]
    if not orders:
        if floors:
            raise PrecisionExhausted('row valuation', row)
        raise SingularMatrix('Matrix has a zero row')
    low = min(orders)
    if any(f <= low for f in floors):
        raise PrecisionExhausted('row valuation', row)
    residues = [e.leading_coefficient if not e.is_empty and e.order == low
                else Fraction(0) for e in row]
    return low, residues


def _residue_matrix(profiles):
    return sympy.Matrix([[coefficient_to_sympy(c) for c in res]
                         for _, res in profiles])


class ApartmentChart:
    """
    Chart of an apartment, sending a model point `q` to
    ``frame @ diag(t^(-q_1), ..., t^(-q_n))``

    Parameters
    ----------
    frame : array_like
        (N, N) matrix whose determinant is a unit of O
    check : bool, optional
        Whether to validate the determinant. Default: True

    Examples
    --------
    >>> from lambdabuildings.building import standard_chart
    >>> chart = standard_chart(2)
    >>> chart.coordinates(chart.point([1, -1]))
    [Fraction(1, 1), Fraction(-1, 1)]
    """

    def __init__(self, frame, check=True):
        self.frame = matrices.as_matrix(frame)
        if check:
            _check_unit_det(self.frame)

    @property
    def n(self):
        return self.frame.shape[0]

    def point(self, q):
        q = as_model_point(q, self.n)
        rep = matrices.matmul(self.frame,
                              matrices.monomial_diagonal([-v for v in q]))
        return BuildingPoint(rep, check=False)

    def _profiles(self, point):
        rel = matrices.matmul(matrices.adjugate(self.frame), point.rep)
        return [_row_profile(rel[i, :]) for i in range(self.n)]

    def coordinates(self, point):
        """
        Inverse of the chart

        Returns
        -------
        q : list of fractions.Fraction or None
            Model coordinates of `point`, or None if it is off the apartment
        """
        if point.n != self.n:
            raise ValueError('Point and chart dimensions differ: {} and {}'
                             .format(point.n, self.n))
        profiles = self._profiles(point)
        if _residue_matrix(profiles).rank() < self.n:
            return None
        return [-v for v, _ in profiles]

    def contains(self, point):
        return self.coordinates(point) is not None

    def translate(self, g):
        """Chart of the translated apartment ``g @ frame``"""
        return ApartmentChart(matrices.matmul(matrices.as_matrix(g),
                                              self.frame), check=False)

    def compose(self, perm, shift=None):
        """
        Returns the chart ``q -> self.point(weyl_act(perm, shift, q))``

        Parameters
        ----------
        perm : sequence of int
            Permutation part of the affine Weyl element
        shift : sequence of rational, optional
            Translation part, summing to 0. Default: zero
        """
        if shift is None:
            shift = [0] * self.n
        shift = as_model_point(shift, self.n)
        if sorted(perm) != list(range(self.n)):
            raise ValueError('Provided `perm` must be a permutation of '
                             'range({}), not {}'.format(self.n, perm))
        inv = [0] * self.n
        for i, p in enumerate(perm):
            inv[p] = i
        frame = matrices.matmul(self.frame,
                                matrices.monomial_diagonal([-s for s in
                                                            shift]),
                                matrices.permutation_matrix(inv))
        return ApartmentChart(frame, check=False)

    def to_json(self):
        return dict(n=self.n, frame=matrices.to_json(self.frame))

    def __repr__(self):
        return 'ApartmentChart({})'.format(matrices.to_json(self.frame))


def standard_chart(n):
    """Chart of the apartment of diagonal lattices"""
    return ApartmentChart(matrices.identity(n), check=False)


def apartment_through(x, y):
    """
    Chart of an apartment containing `x` and `y`

    From ``left @ inv(x) @ y @ right = diag(u_k t^(e_k))`` with `left` in
    SL_n(O) the frame is ``x @ adj(left) = x @ inv(left)``, of the same
    determinant as `x`; `x` sits at the origin and `y` at
    ``vector_distance(x, y)``.

    Parameters
    ----------
    x, y : BuildingPoint
        Points of the same dimension

    Returns
    -------
    chart : ApartmentChart
    """
    _check_pair(x, y)
    left, _, _ = smith_normal_form(x.relative(y))
    return ApartmentChart(matrices.matmul(x.rep, matrices.adjugate(left)),
                          check=False)


def retract(chart, x, target):
    """
    Retracts `target` onto `chart` from the chamber germ at `x`

    The germ is that of the standard sector of `chart` at `x`. Writing
    ``M = inv(chart.point(p)) @ target`` for ``p`` the coordinates of `x`,
    rows of `M` are reduced by the germ's stabiliser (O-multiples of later
    rows added to earlier ones, multiples in the maximal ideal of earlier
    rows added to later ones) until their normalized residues are
    independent, i.e. ``M = i @ diag(t^e) @ k``. The image is ``p - e``.

    Parameters
    ----------
    chart : ApartmentChart
        Apartment to retract onto
    x : BuildingPoint
        Point of `chart`
    target : BuildingPoint
        Point to retract

    Returns
    -------
    image : list of fractions.Fraction
        Model coordinates of the image

    Raises
    ------
    ValueError
        If `x` does not lie on `chart`
    PrecisionExhausted
        If a row valuation cannot be certified

    Examples
    --------
    >>> from lambdabuildings.building import (BuildingPoint, base_point,
    ...                                       retract, standard_chart)
    >>> y = BuildingPoint([[1, 't^(-1)'], [0, 1]])
    >>> [str(q) for q in retract(standard_chart(2), base_point(2), y)]
    ['1', '-1']
    """
    p = chart.coordinates(x)
    if p is None:
        raise ValueError('Provided `x` must lie on the chart')
    h = chart.point(p).rep
    rel = matrices.matmul(matrices.adjugate(h), target.rep)
    rows = [list(rel[i, :]) for i in range(chart.n)]
    while True:
        profiles = [_row_profile(row) for row in rows]
        null = _residue_matrix(profiles).T.nullspace()
        if not null:
            break
        dep = null[0]
        support = [j for j in range(chart.n) if dep[j] != 0]
        top = max(profiles[j][0] for j in support)
        # smallest index among the rows of top valuation
        a = min(j for j in support if profiles[j][0] == top)
        new = rows[a]
        for j in support:
            if j == a:
                continue
            coef = PuiseuxElement.monomial(
                coefficient_from_sympy(dep[j] / dep[a]),
                top - profiles[j][0])
            new = [u + coef * w for u, w in zip(new, rows[j])]
        rows[a] = new
        LGR.debug('Retraction reduced row %d at valuation %s', a, top)
    return [pi - v for pi, (v, _) in zip(p, profiles)]


# projection from the symmetric space

def project(P):
    """
    Building point of a positive definite point of determinant 1

    With ``P = L @ diag(D) @ L.T`` and ``g = L @ diag(sqrt(D))``, the result
    is the class of ``g`` under the field automorphism ``t -> t^2``. Column k
    is computed exactly from the leading principal minors ``Delta`` of `P`
    with the square roots absorbed into units, so that scalar distances of
    projections equal valuation distances of points.

    Parameters
    ----------
    P : :class:`~lambdabuildings.symmetric_space.PDPoint` or array_like
        Point of the symmetric space

    Returns
    -------
    x : BuildingPoint

    Raises
    ------
    PrecisionExhausted
        If a leading principal minor has no certified term

    Examples
    --------
    >>> from lambdabuildings.building import project
    >>> from lambdabuildings.symmetric_space import diagonal_point
    >>> x = project(diagonal_point(['t^(-1)', 't']))
    >>> [[str(e) for e in row] for row in x.rep]
    [['t^(-1)', '0'], ['0', 't']]
    """
    mat = P.mat if isinstance(P, PDPoint) else matrices.as_matrix(P)
    n, cache = mat.shape[0], {}
    deltas = matrices.leading_principal_minors(mat)
    for d in deltas[1:]:
        if d.is_empty:
            if d.is_exact:
                raise SingularMatrix('Leading principal minor vanishes')
            raise PrecisionExhausted('leading principal minor', [d])
    rep = np.empty((n, n), dtype=object)
    for k in range(n):
        dk, prev = deltas[k + 1], deltas[k]
        scale = (PuiseuxElement.constant(dk.leading_coefficient).inverse()
                 * PuiseuxElement.t(dk.order - prev.order - 2 * dk.order))
        for i in range(n):
            if i < k:
                rep[i, k] = PuiseuxElement.zero()
                continue
            b = dk if i == k else matrices.minor(
                mat, tuple(range(k)) + (i,), range(k + 1), cache)
            rep[i, k] = b.substitute(2) * scale
    return BuildingPoint(rep, check=False)


# n = 2 tree fragments

def geodesic_point(x, y, s):
    """
    Point of the apartment segment from `x` to `y` at distance `s` from `x`

    Parameters
    ----------
    x, y : BuildingPoint
        Points of the same dimension
    s : rational
        Scalar distance from `x`, between 0 and ``scalar_distance(x, y)``

    Returns
    -------
    point : BuildingPoint

    Examples
    --------
    >>> from lambdabuildings.building import (BuildingPoint, base_point,
    ...                                       geodesic_point, scalar_distance)
    >>> y = BuildingPoint([['t^(-2)', 0], [0, 't^2']])
    >>> mid = geodesic_point(base_point(2), y, 1)
    >>> str(scalar_distance(mid, y))
    '3'
    """
    d = scalar_distance(x, y)
    s = as_rational(s)
    if not 0 <= s <= d:
        raise ValueError('Provided `s` must lie in [0, {}], not {}'
                         .format(d, s))
    if s == 0:
        return x
    if s == d:
        return y
    chart = apartment_through(x, y)
    return chart.point([s / d * q for q in vector_distance(x, y)])


def tree_fragment_dot(points, names=None):
    """
    Graphviz description of the subtree of the n = 2 building spanned by
    `points`

    Points are inserted in order. Each one is joined to the nearest point of
    the subtree built so far, found by projecting it onto every edge through
    Gromov products. When that point lies inside an edge, the edge is split
    at a branch vertex ``b0``, ``b1``, ... drawn as a dot. Edges are geodesic
    segments labelled with their lengths and coinciding points share one
    vertex.

    Parameters
    ----------
    points : list of BuildingPoint
        Points of the n = 2 building
    names : list of str, optional
        Vertex labels. Default: 'x0', 'x1', ...

    Returns
    -------
    dot : str
    """
    if any(p.n != 2 for p in points):
        raise ValueError('Tree fragments are only drawn for n = 2')
    if names is None:
        names = ['x{}'.format(i) for i in range(len(points))]
    if len(names) != len(points):
        raise ValueError('Provided `names` must match `points` in length, '
                         'not {}'.format(len(names)))
    nodes, ids, labels, edges = [], [], [], []
    n_branch = 0

    def add_node(point, ident, label):
        nodes.append(point)
        ids.append(ident)
        labels.append(label)
        return len(nodes) - 1

    for name, z in zip(names, points):
        if not nodes:
            add_node(z, name, [name])
            continue
        dz = [scalar_distance(x, z) for x in nodes]
        node = min(range(len(nodes)), key=dz.__getitem__)
        dist, split = dz[node], None
        for k, (i, j, length) in enumerate(edges):
            s = (dz[i] + length - dz[j]) / 2
            if 0 < s < length and dz[i] - s < dist:
                dist, split = dz[i] - s, (k, s)
        if split is not None:
            k, s = split
            i, j, length = edges[k]
            if dist == 0:
                mid = add_node(z, name, [name])
            else:
                mid = add_node(geodesic_point(nodes[i], nodes[j], s),
                               'b{}'.format(n_branch), [])
                n_branch += 1
            edges[k] = (i, mid, s)
            edges.append((mid, j, length - s))
            if dist == 0:
                continue
            node = mid
        elif dist == 0:
            labels[node].append(name)
            continue
        edges.append((node, add_node(z, name, [name]), dist))

    lines = ['graph tree {']
    for ident, label in zip(ids, labels):
        if not label:
            lines.append('    "{}" [shape=point];'.format(ident))
        elif label == [ident]:
            lines.append('    "{}";'.format(ident))
        else:
            lines.append('    "{}" [label="{}"];'.format(ident,
                                                       ' = '.join(label)))
    for i, j, length in edges:
        lines.append('    "{}" -- "{}" [label="{}"];'.format(ids[i], ids[j],
                                                            length))
    lines.append('}')
    return '\n'.join(lines)
