# -*- coding: utf-8 -*-
"""
For testing lambdabuildings.axioms functionality
"""

import pytest

from lambdabuildings import axioms
from lambdabuildings.building import scalar_distance, vector_distance
from lambdabuildings.datasets import make_building_point


def test_vector_distance_opposition():
    x, y = (make_building_point(3, seed=s) for s in (11, 12))
    dxy, dyx = vector_distance(x, y), vector_distance(y, x)
    assert dyx == [-q for q in reversed(dxy)]
    assert scalar_distance(x, y) == scalar_distance(y, x)


@pytest.mark.parametrize('n', [2, 3])
def test_metric_check(n):
    report = axioms.metric_check(n=n, sample_size=5, seed=1234)
    assert report.passed
    assert report.n_samples == 5


def test_four_point_check():
    assert axioms.four_point_check(sample_size=10, seed=1234).passed


@pytest.mark.parametrize('n', [2, 3])
def test_retraction_check(n):
    assert axioms.retraction_check(n=n, sample_size=5, seed=1234).passed


@pytest.mark.parametrize('n', [2, 3])
def test_quotient_check(n):
    assert axioms.quotient_check(n=n, sample_size=5, seed=1234).passed


def test_halfapartment_configuration():
    charts = axioms.halfapartment_configuration(ratio='1/2')
    assert len(charts) == 3
    # the standard vertex is the common branch point
    assert all(chart.contains(charts[0].point([0, 0])) for chart in charts)
    with pytest.raises(ValueError):
        axioms.halfapartment_configuration(ratio=0)


def test_halfapartment_check():
    assert axioms.halfapartment_check(sample_size=6, seed=1234).passed


@pytest.mark.parametrize('n', [2, 3])
def test_axiom_suite(n):
    report = axioms.axiom_suite(n=n, sample_size=3, seed=1234)
    assert report.passed
    names = [part.name for part in report.parts]
    assert names[:6] == ['A1', 'A2', 'A3', 'A4', 'A5', 'A6']
    assert ('four point condition' in names) is (n == 2)


def test_axiom_suite_errors():
    with pytest.raises(ValueError):
        axioms.axiom_suite(n=4, sample_size=1)
    with pytest.raises(ValueError):
        axioms.axiom_suite(n=2, sample_size=0)


def test_axiom_suite_reproducible():
    first = axioms.axiom_suite(n=2, sample_size=2, seed=99)
    second = axioms.axiom_suite(n=2, sample_size=2, seed=99)
    assert first.n_samples == second.n_samples
    assert first.n_skipped == second.n_skipped


@pytest.mark.slow
@pytest.mark.parametrize('n', [2, 3])
def test_axiom_suite_large(n):
    assert axioms.axiom_suite(n=n, sample_size=200, seed=1).passed
