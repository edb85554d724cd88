# -*- coding: utf-8 -*-
"""
Property checks of the affine building axioms on sampled configurations
"""

import itertools
import logging
from fractions import Fraction
from functools import partial

from sklearn.utils.validation import check_random_state

from .building import (ApartmentChart, BuildingPoint, apartment_through,
                       project, retract, scalar_distance, vector_distance,
                       weyl_act, weyl_distance)
from .exact_fields import PuiseuxElement
from .flags import Sector, chamber_at_infinity, common_apartment, field_flag
from .symmetric_space import valuation_distance
from . import matrices, utils

LGR = logging.getLogger(__name__)


def _taxi(p, q):
    return sum((abs(v) for v in weyl_distance(p, q)), Fraction(0))


def _result(seed, problems, **witness):
    witness.update(seed=seed, status='fail' if problems else 'pass',
                   problems=problems)
    return witness


def _random_perm(seed, n):
    rs = check_random_state(seed)
    return [int(p) for p in rs.permutation(n)]


def _weight(n, seed):
    from .datasets import make_weight

    return list(make_weight(n, seed=seed))


def _random_chart(n, seed):
    from .datasets import make_sl_matrix

    return ApartmentChart(make_sl_matrix(n, seed=seed), check=False)


def _weyl_chart_instance(seed, n=2):
    chart = _random_chart(n, seed)
    perm = _random_perm(seed + 1, n)
    shift = _weight(n, seed=seed + 2)
    q = _weight(n, seed=seed + 3)
    ok = chart.compose(perm, shift).point(q).equals(
        chart.point(weyl_act(perm, shift, q)))
    return _result(seed, [] if ok else ['chart composed with W'],
                   perm=perm, shift=[str(s) for s in shift],
                   q=[str(v) for v in q])


def _overlap_instance(seed, n=2):
    rs = check_random_state(seed)
    chart = _random_chart(n, seed)
    i, j = (int(v) for v in rs.choice(n, size=2, replace=False))
    level = Fraction(int(rs.randint(-4, 5)), 2)
    root = matrices.identity(n)
    root[i, j] = PuiseuxElement.monomial(int(rs.randint(1, 4)), level)
    perm = _random_perm(seed + 1, n)
    shift = _weight(n, seed=seed + 2)
    other = ApartmentChart(matrices.matmul(chart.frame, root),
                           check=False).compose(perm, shift)
    problems = []
    for k in range(4):
        q = _weight(n, seed=seed + 3 + k)
        image = weyl_act(perm, shift, q)
        inside = image[i] - image[j] >= -level
        coords = chart.coordinates(other.point(q))
        if (coords is not None) != inside:
            problems.append('overlap is not the half-apartment')
        elif coords is not None and coords != image:
            problems.append('transition is not in W')
    return _result(seed, problems, root=[i, j, str(level)], perm=perm)


def _through_instance(seed, n=2):
    from .datasets import make_building_point

    x = make_building_point(n, seed=seed)
    y = make_building_point(n, seed=seed + 1)
    chart = apartment_through(x, y)
    problems = []
    if chart.coordinates(x) != [0] * n:
        problems.append('x is not at the origin')
    qy = chart.coordinates(y)
    if qy != vector_distance(x, y):
        problems.append('y is not at its vector distance')
    elif not chart.point(qy).equals(y):
        problems.append('chart point differs from y')
    return _result(seed, problems, x=x.to_json(), y=y.to_json())


def _rho(n):
    return [n - 1 - 2 * i for i in range(n)]


def _sector_pair_instance(seed, n=2):
    sectors = [Sector(_random_chart(n, seed + 2 * k),
                      _weight(n, seed=seed + 2 * k + 1))
               for k in range(2)]
    first, second = (chamber_at_infinity(s) for s in sectors)
    chart, perm = common_apartment(first, second)
    problems = []
    permuted = matrices.matmul(chart.frame, matrices.permutation_matrix(perm))
    if field_flag(chart.frame) != first or field_flag(permuted) != second:
        problems.append('common apartment misses a chamber at infinity')
    rho = _rho(n)
    for m in (0, 1, 2, 4, 8, 16, 32):
        subs = [s.subsector([m * r for r in rho]) for s in sectors]
        if all(chart.contains(s.base) and chart.contains(s.point(rho))
               for s in subs):
            LGR.debug('Common subsectors at shift %d for seed %d', m, seed)
            break
    else:
        problems.append('no common subsectors')
    return _result(seed, problems, sectors=[s.to_json() for s in sectors])


def _retraction_instance(seed, n=2):
    from .datasets import make_building_point, make_integral_matrix

    chart = _random_chart(n, seed)
    p = _weight(n, seed=seed + 1)
    x = chart.point(p)
    y = make_building_point(n, seed=seed + 2)
    z = make_building_point(n, seed=seed + 3)
    problems = []

    q = _weight(n, seed=seed + 4)
    if retract(chart, x, chart.point(q)) != q:
        problems.append('retraction does not fix the apartment')
    ry, rz = retract(chart, x, y), retract(chart, x, z)
    if _taxi(ry, rz) > scalar_distance(y, z):
        problems.append('retraction increases distance')
    if _taxi(p, ry) != scalar_distance(x, y):
        problems.append('retraction moves distance from x')
    same = BuildingPoint(matrices.matmul(x.rep, make_integral_matrix(
        n, seed=seed + 5)), check=False)
    if retract(chart, x, same) != p:
        problems.append('retraction moves x')
    for target in (y, z, same):
        image = retract(chart, x, target)
        if image == p and not target.equals(x):
            problems.append('fibre over x is not {x}')
    return _result(seed, problems, x=x.to_json(), images=[
        [str(v) for v in ry], [str(v) for v in rz]])


def _metric_instance(seed, n=2):
    from .datasets import make_building_point, make_sl_matrix

    x, y, z = (make_building_point(n, seed=seed + k) for k in range(3))
    g = make_sl_matrix(n, seed=seed + 3)
    problems = []

    dxy, dyx = vector_distance(x, y), vector_distance(y, x)
    # swapping the points applies the opposition involution
    if dyx != [-q for q in reversed(dxy)]:
        problems.append('opposition')
    if scalar_distance(x, y) != scalar_distance(y, x):
        problems.append('symmetry')
    if dxy != vector_distance(x, y, method='minors'):
        problems.append('smith form disagrees with minors')
    if any(vector_distance(p, p) != [0] * n for p in (x, y)):
        problems.append('identity')
    if (scalar_distance(x, y) == 0) != x.equals(y):
        problems.append('indiscernibles')
    if scalar_distance(x, z) > scalar_distance(x, y) + scalar_distance(y, z):
        problems.append('triangle')
    if vector_distance(x.translate(g), y.translate(g)) != dxy:
        problems.append('left invariance')

    chart = _random_chart(n, seed + 4)
    p, q = _weight(n, seed=seed + 5), _weight(n, seed=seed + 6)
    if vector_distance(chart.point(p), chart.point(q)) != weyl_distance(p, q):
        problems.append('chart isometry')
    return _result(seed, problems, x=x.to_json(), y=y.to_json(),
                   vector=[str(v) for v in dxy])


def _four_point_instance(seed):
    from .datasets import make_building_point

    pts = [make_building_point(2, seed=seed + k) for k in range(4)]
    d = {(i, j): scalar_distance(pts[i], pts[j])
         for i, j in itertools.combinations(range(4), 2)}
    sums = [d[0, 1] + d[2, 3], d[0, 2] + d[1, 3], d[0, 3] + d[1, 2]]
    ok = all(s <= max(sums[:k] + sums[k + 1:]) for k, s in enumerate(sums))
    return _result(seed, [] if ok else ['four point condition'],
                   sums=[str(s) for s in sums])


def _quotient_instance(seed, n=2):
    from .datasets import make_pd_point

    P, Q = make_pd_point(n, seed=seed), make_pd_point(n, seed=seed + 1)
    x, y = project(P), project(Q)
    dist = valuation_distance(P, Q)
    problems = []
    if dist != scalar_distance(x, y):
        problems.append('valuation distance differs from building distance')
    if (dist == 0) != x.equals(y):
        problems.append('projection identifies the wrong points')
    if valuation_distance(P, P) != 0 or not x.equals(project(P)):
        problems.append('projection is not well defined')
    return _result(seed, problems, P=P.to_json(), Q=Q.to_json(),
                   distance=str(dist))


def halfapartment_configuration(ratio=1, g=None):
    """
    Three apartments of the n = 2 tree through a common branch vertex

    The apartments join pairs of the three ends ``e_1``, ``e_2`` and
    ``e_1 + ratio * e_2``, so any two of them share exactly one ray.

    Parameters
    ----------
    ratio : rational, optional
        Nonzero rational choosing the third end. Default: 1
    g : (2, 2) array_like, optional
        Matrix translating the whole configuration. Default: None

    Returns
    -------
    charts : list of :class:`~lambdabuildings.building.ApartmentChart`
    """
    ratio = Fraction(ratio)
    if ratio == 0:
        raise ValueError('Provided `ratio` must be nonzero')
    charts = [ApartmentChart([[1, 0], [0, 1]]),
              ApartmentChart([[0, 1], [1, ratio]]),
              ApartmentChart([[1, 1], [ratio, 0]])]
    if g is not None:
        charts = [c.translate(g) for c in charts]
    return charts


def _is_ray(mask):
    # True entries form a nonempty run touching one end of the grid
    if not any(mask):
        return False
    idx = [k for k, m in enumerate(mask) if m]
    contiguous = idx == list(range(idx[0], idx[-1] + 1))
    return contiguous and (idx[0] == 0 or idx[-1] == len(mask) - 1)


def _halfapartment_instance(seed):
    from .datasets import make_sl_matrix

    rs = check_random_state(seed)
    ratio = Fraction(int(rs.choice([-3, -2, -1, 1, 2, 3])),
                     int(rs.randint(1, 4)))
    g = make_sl_matrix(2, seed=seed) if seed % 2 else None
    charts = halfapartment_configuration(ratio, g)
    grid = [Fraction(k, 2) for k in range(-6, 7)]
    problems = []
    members = []
    for chart, others in zip(charts, (charts[1:], charts[::2], charts[:2])):
        masks = []
        for other in others:
            masks.append([other.contains(chart.point([s, -s])) for s in grid])
        if not all(_is_ray(mask) for mask in masks):
            problems.append('pairwise intersection is not a half-apartment')
        members.append([a and b for a, b in zip(*masks)])
    if not any(members[0]):
        problems.append('triple intersection is empty')
    return _result(seed, problems, ratio=str(ratio))


def _check_n(n):
    if n not in (2, 3):
        raise ValueError('Provided `n` must be one of [2, 3], not {}'
                         .format(n))


def metric_check(n=2, sample_size=200, seed=None, n_jobs=1, verbose=0):
    """
    Checks the metric laws of :func:`~lambdabuildings.building.vector_distance`

    Verifies symmetry, identity of indiscernibles, the triangle inequality,
    invariance under determinant-1 matrices, isometry of apartment charts and
    agreement of the Smith form with determinantal divisors.

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
    return utils.run_checks('building metric', partial(_metric_instance, n=n),
                            sample_size, seed=seed, n_jobs=n_jobs,
                            verbose=verbose)


def four_point_check(sample_size=500, seed=None, n_jobs=1, verbose=0):
    """
    Checks the four-point condition of the n = 2 building on sampled
    quadruples

    Examples
    --------
    >>> from lambdabuildings.axioms import four_point_check
    >>> four_point_check(sample_size=5, seed=1234).passed
    True
    """
    return utils.run_checks('four point condition', _four_point_instance,
                            sample_size, seed=seed, n_jobs=n_jobs,
                            verbose=verbose)


def retraction_check(n=2, sample_size=200, seed=None, n_jobs=1, verbose=0):
    """
    Checks that :func:`~lambdabuildings.building.retract` fixes the apartment,
    keeps distances from its centre, never increases distances and has the
    centre as the only point of its fibre
    """
    return utils.run_checks('retraction', partial(_retraction_instance, n=n),
                            sample_size, seed=seed, n_jobs=n_jobs,
                            verbose=verbose)


def quotient_check(n=2, sample_size=200, seed=None, n_jobs=1, verbose=0):
    """
    Checks that valuation distances of positive definite points equal the
    building distances of their projections
    """
    return utils.run_checks('quotient identification',
                            partial(_quotient_instance, n=n), sample_size,
                            seed=seed, n_jobs=n_jobs, verbose=verbose)


def halfapartment_check(sample_size=20, seed=None, n_jobs=1, verbose=0,
                        depth=None):
    """
    Checks that three n = 2 apartments meeting pairwise in half-apartments
    have a common point, on configurations from
    :func:`halfapartment_configuration`
    """
    return utils.run_checks('A5', _halfapartment_instance, sample_size,
                            seed=seed, n_jobs=n_jobs, verbose=verbose,
                            depth=depth)


def axiom_suite(n=2, sample_size=100, seed=None, n_jobs=1, verbose=0,
                depth=None):
    """
    Checks the assertable content of the building axioms on samples

    Parameters
    ----------
    n : {2, 3}, optional
        Dimension. Default: 2
    sample_size : int, optional
        Number of sampled configurations per axiom. Default: 100
    seed : {int, np.random.RandomState instance, None}, optional
        Seed for random number generation. Default: None
    n_jobs : int, optional
        Number of parallel workers. Default: 1
    verbose : int, optional
        Verbosity of the package logger. Default: 0
    depth : rational, optional
        Truncation depth for inverses and square roots. Default: see
        :func:`~lambdabuildings.exact_fields.get_default_depth`

    Returns
    -------
    report : :class:`sklearn.utils.Bunch`
        Merged report whose `parts` are, in order: A1 (charts composed with
        the affine Weyl group), A2 (chart overlaps), A3 (apartments through
        two points), A4 (common subsectors), A5 (handcrafted n = 2
        configurations), A6 (retraction), the metric laws and, for n = 2, the
        four-point condition

    Examples
    --------
    >>> from lambdabuildings.axioms import axiom_suite
    >>> axiom_suite(n=2, sample_size=3, seed=1).passed
    True
    """
    _check_n(n)
    seeds = utils.draw_seeds(seed, 8)
    run = partial(utils.run_checks, sample_size=sample_size, n_jobs=n_jobs,
                  verbose=verbose, depth=depth)
    reports = [
        run('A1', partial(_weyl_chart_instance, n=n), seed=seeds[0]),
        run('A2', partial(_overlap_instance, n=n), seed=seeds[1]),
        run('A3', partial(_through_instance, n=n), seed=seeds[2]),
        run('A4', partial(_sector_pair_instance, n=n), seed=seeds[3]),
        halfapartment_check(sample_size=min(sample_size, 20), seed=seeds[4],
                            n_jobs=n_jobs, verbose=verbose, depth=depth),
        run('A6', partial(_retraction_instance, n=n), seed=seeds[5]),
        run('metric', partial(_metric_instance, n=n), seed=seeds[6]),
    ]
    if n == 2:
        reports.append(run('four point condition', _four_point_instance,
                           seed=seeds[7]))
    return utils.merge_reports('axioms (n={})'.format(n), reports)
