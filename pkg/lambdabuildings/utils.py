# -*- coding: utf-8 -*-
"""
Miscellaneous functions of various utility
"""

import logging
import warnings

import numpy as np
from joblib import Parallel, delayed
from sklearn.utils import Bunch
from sklearn.utils.validation import check_random_state

from .errors import PrecisionExhausted
from .exact_fields import default_depth

LGR = logging.getLogger('lambdabuildings')


def set_verbosity(verbose):
    """
    Raises the package logger to INFO (``verbose=1``) or DEBUG
    (``verbose>1``); ``verbose=0`` leaves it untouched
    """

    if verbose > 1:
        LGR.setLevel(logging.DEBUG)
    elif verbose > 0:
        LGR.setLevel(logging.INFO)


def draw_seeds(seed, n):
    """
    Draws `n` independent integer seeds from `seed`

    Parameters
    ----------
    seed : {int, np.random.RandomState instance, None}
        Seed for random number generation
    n : int
        Number of seeds to draw

    Returns
    -------
    seeds : list of int
    """

    rs = check_random_state(seed)
    return [int(s) for s in rs.randint(np.iinfo(np.int32).max, size=n)]


def _guarded(check, seed, depth=None):
    try:
        with default_depth(depth):
            return check(seed)
    except PrecisionExhausted as err:
        return dict(seed=seed, status='skipped', detail=str(err))


def run_checks(name, check, sample_size, seed=None, n_jobs=1, verbose=0,
               depth=None):
    """
    Runs `check` on `sample_size` seeded instances and gathers a report

    Parameters
    ----------
    name : str
        Name of the property being checked
    check : callable
        Called as ``check(seed)``; returns a dict with at least the key
        'status' in {'pass', 'fail'} plus witness data
    sample_size : int
        Number of instances
    seed : {int, np.random.RandomState instance, None}, optional
        Seed for random number generation. Default: None
    n_jobs : int, optional
        Number of parallel workers. Default: 1
    verbose : int, optional
        Verbosity of the package logger. Default: 0
    depth : rational, optional
        Truncation depth used inside every instance. Default: see
        :func:`~lambdabuildings.exact_fields.get_default_depth`

    Returns
    -------
    report : :class:`sklearn.utils.Bunch`
        With keys 'name', 'n_samples', 'n_failures', 'n_skipped', 'failures'
        and 'passed'
    """

    if sample_size < 1:
        raise ValueError('Provided `sample_size` must be positive, not {}'
                         .format(sample_size))
    set_verbosity(verbose)
    seeds = draw_seeds(seed, sample_size)
    results = Parallel(n_jobs=n_jobs)(delayed(_guarded)(check, s, depth)
                                      for s in seeds)
    return make_report(name, results)


def make_report(name, results):
    """Aggregates instance results into a :class:`sklearn.utils.Bunch`"""

    failures = [r for r in results if r['status'] == 'fail']
    skipped = [r for r in results if r['status'] == 'skipped']
    for res in failures:
        LGR.debug('%s failed: %s', name, res)
    if skipped:
        warnings.warn('{} of {} instances of {} were skipped because their '
                      'precision was exhausted'.format(len(skipped),
                                                       len(results), name))
    LGR.info('%s: %d instances, %d failures', name, len(results),
             len(failures))

    return Bunch(name=name, n_samples=len(results),
                 n_failures=len(failures), n_skipped=len(skipped),
                 failures=failures, passed=not failures)


def merge_reports(name, reports):
    """Combines several reports into one whose `parts` keeps the originals"""

    failures = [f for rep in reports for f in rep.failures]
    return Bunch(name=name, parts=list(reports),
                 n_samples=sum(rep.n_samples for rep in reports),
                 n_failures=len(failures),
                 n_skipped=sum(rep.n_skipped for rep in reports),
                 failures=failures, passed=not failures)


def report_to_dict(report):
    """Converts a report into plain JSON-serializable data"""

    out = {}
    for key, value in report.items():
        if isinstance(value, Bunch):
            value = report_to_dict(value)
        elif isinstance(value, list):
            value = [report_to_dict(v) if isinstance(v, Bunch) else v
                     for v in value]
        out[key] = value
    return out
