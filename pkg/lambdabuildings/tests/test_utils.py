# -*- coding: utf-8 -*-
"""
For testing lambdabuildings.utils functionality
"""

import json
import logging
from fractions import Fraction

import pytest

from lambdabuildings import utils
from lambdabuildings.errors import PrecisionExhausted
from lambdabuildings.exact_fields import get_default_depth


def _parity(seed):
    return dict(seed=seed, status='pass' if seed % 2 else 'fail')


def _always(seed):
    return dict(seed=seed, status='pass')


def _exhausted(seed):
    if seed % 3 == 0:
        raise PrecisionExhausted('comparison', ['O(t^2)'])
    return dict(seed=seed, status='pass')


def _depth(seed):
    ok = get_default_depth() == Fraction(5, 2)
    return dict(seed=seed, status='pass' if ok else 'fail')


def test_draw_seeds():
    seeds = utils.draw_seeds(1234, 10)
    assert len(seeds) == 10 and all(isinstance(s, int) for s in seeds)
    assert utils.draw_seeds(1234, 10) == seeds
    assert utils.draw_seeds(1235, 10) != seeds


def test_run_checks():
    report = utils.run_checks('parity', _parity, 20, seed=1234)
    seeds = utils.draw_seeds(1234, 20)
    assert report.name == 'parity'
    assert report.n_samples == 20
    assert report.n_failures == sum(s % 2 == 0 for s in seeds)
    assert report.passed is (report.n_failures == 0)
    assert all(f['status'] == 'fail' for f in report.failures)
    with pytest.raises(ValueError):
        utils.run_checks('parity', _parity, 0)


def test_run_checks_parallel():
    serial = utils.run_checks('always', _always, 6, seed=1)
    parallel = utils.run_checks('always', _always, 6, seed=1, n_jobs=2)
    assert serial == parallel


def test_run_checks_depth(monkeypatch):
    monkeypatch.delenv('LB_DEPTH', raising=False)
    for n_jobs in (1, 2):
        assert utils.run_checks('depth', _depth, 4, seed=1, n_jobs=n_jobs,
                                depth='5/2').passed
    assert not utils.run_checks('depth', _depth, 4, seed=1).passed
    assert get_default_depth() == 8


def test_run_checks_skips_exhausted():
    seeds = utils.draw_seeds(1234, 30)
    n_skipped = sum(s % 3 == 0 for s in seeds)
    if n_skipped:
        with pytest.warns(UserWarning):
            report = utils.run_checks('guarded', _exhausted, 30, seed=1234)
    else:
        report = utils.run_checks('guarded', _exhausted, 30, seed=1234)
    assert report.n_skipped == n_skipped
    assert report.passed


def test_make_report():
    results = [dict(status='pass'), dict(status='fail', seed=3),
               dict(status='skipped', seed=4)]
    with pytest.warns(UserWarning):
        report = utils.make_report('mixed', results)
    assert report.n_samples == 3
    assert report.n_failures == 1 and report.n_skipped == 1
    assert not report.passed


def test_merge_reports():
    first = utils.make_report('a', [dict(status='pass')])
    second = utils.make_report('b', [dict(status='fail', seed=1)])
    merged = utils.merge_reports('both', [first, second])
    assert merged.n_samples == 2 and merged.n_failures == 1
    assert [p.name for p in merged.parts] == ['a', 'b']
    assert not merged.passed
    assert utils.merge_reports('one', [first]).passed


def test_report_to_dict():
    first = utils.make_report('a', [dict(status='pass')])
    merged = utils.merge_reports('both', [first])
    out = utils.report_to_dict(merged)
    assert out['parts'][0]['name'] == 'a'
    assert json.loads(json.dumps(out)) == out


def test_set_verbosity():
    logger = logging.getLogger('lambdabuildings')
    level = logger.level
    try:
        utils.set_verbosity(0)
        assert logger.level == level
        utils.set_verbosity(1)
        assert logger.level == logging.INFO
        utils.set_verbosity(2)
        assert logger.level == logging.DEBUG
    finally:
        logger.setLevel(level)
