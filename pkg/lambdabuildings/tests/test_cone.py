# -*- coding: utf-8 -*-
"""
For testing lambdabuildings.cone functionality
"""

import json
from fractions import Fraction

import pytest

from lambdabuildings import cone, datasets
from lambdabuildings.building import BuildingPoint, base_point
from lambdabuildings.cone import Trajectory
from lambdabuildings.errors import InvariantViolation

DIAGONAL = [['t^(-1)', 0], [0, 't']]


def test_trajectory():
    T = Trajectory(DIAGONAL)
    assert T.n == 2
    assert T.to_json() == dict(n=2, entries=[['t^(-1)', '0'], ['0', 't']])
    Trajectory([['1 + t', 0], [0, '1/(1 + t)']])


@pytest.mark.parametrize('entries', [
    [[1, 't'], [0, 1]],
    [[2, 0], [0, 2]],
    [[-1, 0], [0, -1]],
    [['1 + t', 0], [0, '1 - t']],
])
def test_trajectory_invalid(entries):
    with pytest.raises(InvariantViolation):
        Trajectory(entries)


def test_trajectory_from_classical():
    T = Trajectory.from_classical([['s', '0'], ['0', '1/s']])
    assert cone.cone_distance(T, Trajectory(DIAGONAL)) == 0
    T = Trajectory.from_classical([['x^2', '0'], ['0', 'x^(-2)']],
                                  variable='x')
    assert cone.cone_point(T) == BuildingPoint([['t^(-2)', 0], [0, 't^2']])
    with pytest.raises(ValueError):
        Trajectory.from_classical([['s +* 1', '0'], ['0', '1']])


def test_load_trajectory(tmp_path):
    data = dict(n=2, entries=[['t^(-1)', '0'], ['0', 't']])
    fname = tmp_path / 'trajectory.json'
    fname.write_text(json.dumps(data))
    for source in (data, json.dumps(data), str(fname), fname):
        assert cone.load_trajectory(source).entries == data['entries']
    classical = dict(classical='s', entries=[['s', '0'], ['0', '1/s']])
    assert cone.cone_point(cone.load_trajectory(classical)) == \
        BuildingPoint(DIAGONAL)


def test_load_trajectory_errors(tmp_path):
    with pytest.raises(ValueError):
        cone.load_trajectory(str(tmp_path / 'missing.json'))
    with pytest.raises(ValueError):
        cone.load_trajectory('{"entries": [[1, 0]')
    with pytest.raises(ValueError):
        cone.load_trajectory({'n': 2})
    with pytest.raises(InvariantViolation):
        cone.load_trajectory({'n': 3, 'entries': [['1', '0'], ['0', '1']]})


def test_dump_trajectory(tmp_path):
    T = Trajectory([['1 + t^(-2)', 't^(-1)'], ['t^(-1)', '1']])
    fname = tmp_path / 'out.json'
    cone.dump_trajectory(T, fname)
    assert cone.load_trajectory(fname).entries == T.entries


def test_cone_point():
    assert cone.cone_point(Trajectory(DIAGONAL)) == BuildingPoint(DIAGONAL)
    bounded = Trajectory([['1 + t', 0], [0, '1/(1 + t)']])
    assert cone.cone_point(bounded) == base_point(2)


def test_cone_distance():
    one = Trajectory([[1, 0], [0, 1]])
    assert cone.cone_distance(one, Trajectory(DIAGONAL)) == 2
    assert cone.cone_distance(Trajectory(DIAGONAL), one) == 2
    with pytest.raises(ValueError):
        cone.cone_distance(one, Trajectory([[1, 0, 0], [0, 1, 0],
                                            [0, 0, 1]]))


@pytest.mark.parametrize('example', datasets.load_worked_examples('cone'),
                         ids=lambda ex: ex['name'])
def test_worked_examples(example):
    first, second = (cone.load_trajectory(t) for t in example['pair'])
    result = cone.compare_paths(first, second)
    assert result['equal']
    assert Fraction(result['building_distance']) == \
        Fraction(example['expected'])
    assert Fraction(result['valuation_distance']) == \
        Fraction(example['expected'])


def test_worked_example_distances():
    results = cone.worked_example_distances()
    assert [r['name'] for r in results] == \
        ['identity', 'diagonal', 'unipotent', 'bounded']
    assert all(r['equal'] for r in results)
    assert [r['expected'] for r in results] == ['0', '2', '2', '0']


def test_act():
    T = Trajectory(DIAGONAL)
    moved = T.act([[1, 1], [0, 1]])
    expected = Trajectory([['t^(-1) + t', 't'], ['t', 't']])
    assert cone.cone_distance(moved, expected) == 0
    assert cone.basepoint_check(T, Trajectory([[1, 0], [0, 1]]),
                                [[1, 1], [0, 1]])


def test_collapse_check():
    T = Trajectory(DIAGONAL)
    assert cone.collapse_check(T, [[1, 't'], [0, 1]])
    k = datasets.make_integral_matrix(2, seed=1234)
    assert cone.collapse_check(T, k)


def test_cone_batch():
    T = [cone.load_trajectory(datasets.make_trajectory(2, seed=s))
         for s in range(4)]
    results = cone.cone_batch([(T[0], T[1]), (T[2], T[3])])
    assert len(results) == 2
    assert all(r['equal'] for r in results)


@pytest.mark.parametrize('n', [2, 3])
def test_cone_check(n):
    report = cone.cone_check(n=n, sample_size=5, seed=1234)
    assert report.passed


@pytest.mark.slow
@pytest.mark.parametrize('n', [2, 3])
def test_cone_check_large(n):
    assert cone.cone_check(n=n, sample_size=100, seed=1).passed
