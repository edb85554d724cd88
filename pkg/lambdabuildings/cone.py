# -*- coding: utf-8 -*-
"""
Functions for asymptotic cones of the symmetric space of positive definite
matrices
"""

import json
import os
from fractions import Fraction
from functools import partial

import sympy
from joblib import Parallel, delayed
from sympy.parsing.sympy_parser import (convert_xor, parse_expr,
                                        standard_transformations)

from .building import project, scalar_distance
from .errors import InvariantViolation
from .exact_fields import from_sympy, t_symbol
from .symmetric_space import PDPoint, validate_exact_pd, valuation_distance
from . import matrices, utils

_TRANSFORMS = standard_transformations + (convert_xor,)


class Trajectory:
    """
    One-parameter family of positive definite matrices of determinant 1

    Entries are expressions in ``t = 1/s`` for a classical family
    ``s -> X(s)`` with ``s -> infinity``. Symmetry and unit determinant are
    checked exactly on the rational functions the entries denote.

    Parameters
    ----------
    entries : (N, N) array_like
        Entries as Puiseux strings (or integers, fractions)
    depth : rational, optional
        Truncation depth used to expand quotients. Default: None

    Raises
    ------
    ValueError
        If an entry cannot be parsed
    InvariantViolation
        If the family is not symmetric, of determinant 1 and positive

    Examples
    --------
    >>> from lambdabuildings.cone import Trajectory
    >>> T = Trajectory([['t^(-1)', 0], [0, 't']])
    >>> T.n
    2
    """

    def __init__(self, entries, depth=None):
        self.entries = [[str(e) for e in row] for row in entries]
        self.exact = matrices.as_exact_matrix(self.entries)
        validate_exact_pd(self.exact)
        self.point = PDPoint(matrices.expand(self.exact, depth=depth),
                             check=False)

    @property
    def n(self):
        return len(self.entries)

    @classmethod
    def from_classical(cls, entries, variable='s', depth=None):
        """
        Builds a trajectory from expressions in the classical parameter

        Parameters
        ----------
        entries : (N, N) array_like
            Strings in `variable`, e.g. ``[['s', '0'], ['0', '1/s']]``
        variable : str, optional
            Name of the parameter tending to infinity. Default: 's'
        depth : rational, optional
            Truncation depth used to expand quotients. Default: None

        Returns
        -------
        trajectory : Trajectory
        """
        param = sympy.Symbol(variable, positive=True)
        out = []
        for row in entries:
            new = []
            for entry in row:
                try:
                    expr = parse_expr(str(entry), local_dict={variable: param},
                                      transformations=_TRANSFORMS)
                except Exception as err:
                    raise ValueError('Could not parse {!r}: {}'
                                     .format(entry, err))
                expr = sympy.sympify(expr).subs(param, 1 / t_symbol())
                new.append(str(from_sympy(expr)))
            out.append(new)
        return cls(out, depth=depth)

    def act(self, g, depth=None):
        """Returns the trajectory ``g @ T @ g.T`` for exact `g`"""
        g = matrices.as_exact_matrix([[str(e) for e in row]
                                      for row in matrices.to_json(
                                          matrices.as_matrix(g))])
        moved = matrices.matmul(g, self.exact, g.T)
        return Trajectory([[str(e) for e in row] for row in moved],
                          depth=depth)

    def to_json(self):
        return dict(n=self.n, entries=self.entries)

    def __repr__(self):
        return 'Trajectory({})'.format(self.entries)


def load_trajectory(source, depth=None):
    """
    Loads a trajectory from a JSON file, JSON text or decoded dict

    Parameters
    ----------
    source : str or os.PathLike or dict
        Filename, JSON text or dict with keys 'n' (optional) and 'entries'
    depth : rational, optional
        Truncation depth used to expand quotients. Default: None

    Returns
    -------
    trajectory : Trajectory

    Raises
    ------
    ValueError
        If `source` is not valid trajectory JSON
    """
    if isinstance(source, dict):
        data = source
    else:
        text = str(source)
        if not text.lstrip().startswith('{'):
            if not os.path.isfile(text):
                raise ValueError('No trajectory file at {}'.format(text))
            with open(text, 'r') as src:
                text = src.read()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            raise ValueError('Invalid JSON trajectory: {}'.format(err))
    if not isinstance(data, dict) or 'entries' not in data:
        raise ValueError("JSON trajectory must be an object with key "
                         "'entries'")
    entries = data['entries']
    if 'n' in data and data['n'] != len(entries):
        raise InvariantViolation('Declared n={} does not match entries of '
                                 'size {}'.format(data['n'], len(entries)))
    if 'classical' in data:
        return Trajectory.from_classical(entries, variable=data['classical'],
                                         depth=depth)
    return Trajectory(entries, depth=depth)


def dump_trajectory(trajectory, fname):
    """Writes `trajectory` to `fname` as JSON"""
    with open(fname, 'w') as dest:
        json.dump(trajectory.to_json(), dest, indent=2)


def cone_point(trajectory):
    """
    Point of the asymptotic cone represented by `trajectory`

    Examples
    --------
    >>> from lambdabuildings.cone import Trajectory, cone_point
    >>> from lambdabuildings.building import base_point
    >>> T = Trajectory([['1 + t', 0], [0, '1/(1 + t)']])
    >>> cone_point(T) == base_point(2)
    True
    """
    return project(trajectory.point)


def cone_distance(first, second):
    """
    Distance in the asymptotic cone between two trajectories

    Computed from the Newton polygon of ``inv(X_1) @ X_2``.

    Returns
    -------
    distance : fractions.Fraction

    Examples
    --------
    >>> from lambdabuildings.cone import Trajectory, cone_distance
    >>> one = Trajectory([[1, 0], [0, 1]])
    >>> cone_distance(one, Trajectory([['1/t', 0], [0, 't']]))
    Fraction(2, 1)
    """
    _check_pair(first, second)
    return valuation_distance(first.point, second.point)


def _check_pair(first, second):
    if first.n != second.n:
        raise ValueError('Trajectories must have the same dimension, not {} '
                         'and {}'.format(first.n, second.n))


def compare_paths(first, second):
    """
    Computes the cone distance along two independent paths

    Returns
    -------
    result : dict
        With keys 'valuation_distance' (Newton polygon of the symmetric space
        points), 'building_distance' (Smith form of the cone points) and
        'equal'
    """
    _check_pair(first, second)
    newton = cone_distance(first, second)
    smith = scalar_distance(cone_point(first), cone_point(second))
    return dict(valuation_distance=str(newton), building_distance=str(smith),
                equal=newton == smith)


def cone_batch(pairs, n_jobs=1):
    """
    Runs :func:`compare_paths` on pairs of trajectories in parallel

    Parameters
    ----------
    pairs : list of (Trajectory, Trajectory) tuples
    n_jobs : int, optional
        Number of parallel workers. Default: 1

    Returns
    -------
    results : list of dict
    """
    return Parallel(n_jobs=n_jobs)(delayed(compare_paths)(a, b)
                                   for a, b in pairs)


def basepoint_check(first, second, g):
    """
    Whether translating both trajectories by the bounded family `g`
    keeps their cone distance
    """
    moved = cone_distance(first.act(g), second.act(g))
    return moved == cone_distance(first, second)


def collapse_check(trajectory, k):
    """
    Whether ``k @ T @ k.T``, at bounded distance from `trajectory` for `k`
    in SL_n(O), has the same cone point
    """
    moved = trajectory.act(k)
    return (cone_distance(trajectory, moved) == 0
            and cone_point(moved).equals(cone_point(trajectory)))


def _cone_instance(seed, n=2):
    from .datasets import make_integral_matrix, make_trajectory

    first = load_trajectory(make_trajectory(n, seed=seed))
    second = load_trajectory(make_trajectory(n, seed=seed + 1))
    paths = compare_paths(first, second)
    problems = []
    if not paths['equal']:
        problems.append('dual path')
    k = make_integral_matrix(n, seed=seed + 2)
    if not basepoint_check(first, second, k):
        problems.append('basepoint')
    if not collapse_check(first, k):
        problems.append('collapse')
    paths.update(seed=seed, status='fail' if problems else 'pass',
                 problems=problems, trajectories=[first.to_json(),
                                                  second.to_json()])
    return paths


def cone_check(n=2, sample_size=100, seed=None, n_jobs=1, verbose=0):
    """
    Checks the cone correspondence on sampled trajectory pairs

    For each pair, the Newton polygon distance of the symmetric space points
    must equal the building distance of their cone points; translating both
    by a bounded family must keep the distance; and a trajectory at bounded
    distance from another must have the same cone point.

    Parameters
    ----------
    n : int, optional
        Dimension. Default: 2
    sample_size : int, optional
        Number of sampled pairs. Default: 100
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
    return utils.run_checks('cone correspondence',
                            partial(_cone_instance, n=n), sample_size,
                            seed=seed, n_jobs=n_jobs, verbose=verbose)


def worked_example_distances():
    """
    Cone distances of the packaged worked examples

    Returns
    -------
    results : list of dict
        :func:`compare_paths` of each example pair, with its 'name' and
        'expected' distance
    """
    from .datasets import load_worked_examples

    out = []
    for example in load_worked_examples()['cone']:
        first, second = (load_trajectory(t) for t in example['pair'])
        res = compare_paths(first, second)
        res.update(name=example['name'],
                   expected=str(Fraction(example['expected'])))
        out.append(res)
    return out
