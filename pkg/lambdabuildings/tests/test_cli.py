# -*- coding: utf-8 -*-
"""
For testing lambdabuildings.cli functionality
"""

import json
from fractions import Fraction

import pytest

from lambdabuildings import cli, utils
from lambdabuildings.errors import InvariantViolation
from lambdabuildings.flags import FlagChamber

IDENTITY = {'n': 2, 'entries': [['1', '0'], ['0', '1']]}
DIAGONAL = {'n': 2, 'entries': [['t^(-1)', '0'], ['0', 't']]}


def _write(tmp_path, data, name='input.json'):
    fname = tmp_path / name
    fname.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(fname)


def _run(capsys, argv):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_make_config(monkeypatch):
    monkeypatch.delenv('LB_DEPTH', raising=False)
    config = cli.make_config()
    assert config.n == 2 and config.truncation_depth == 8
    assert config.sample_size == 50 and config.output == 'json'
    assert cli.make_config(depth='5/2').truncation_depth == Fraction(5, 2)


@pytest.mark.parametrize('kwargs', [
    dict(n=1), dict(n=5), dict(samples=0), dict(seed=-1),
    dict(seed=2 ** 64), dict(output='yaml'),
])
def test_make_config_errors(kwargs):
    with pytest.raises(InvariantViolation):
        cli.make_config(**kwargs)


def test_dist(tmp_path, capsys):
    fname = _write(tmp_path, {'points': [IDENTITY, IDENTITY]})
    code, out, _ = _run(capsys, ['dist', fname])
    assert code == cli.EXIT_OK
    assert json.loads(out) == dict(vector=['0', '0'], scalar='0')

    fname = _write(tmp_path, [IDENTITY, DIAGONAL])
    code, out, _ = _run(capsys, ['--format', 'text', 'dist', fname])
    assert code == cli.EXIT_OK
    assert 'scalar: 2' in out


def test_dist_symmetric(tmp_path, capsys):
    fname = _write(tmp_path, {'points': [IDENTITY, DIAGONAL]})
    code, out, _ = _run(capsys, ['dist', '--space', 'symmetric', fname])
    assert code == cli.EXIT_OK
    out = json.loads(out)
    assert out['scalar'] == '2' and out['vector'] == ['1', '-1']
    assert 'lambda' in out


@pytest.mark.parametrize('data', [
    '{"points": [',
    {'points': [IDENTITY]},
    {'points': [IDENTITY, {'n': 2, 'entries': [['t', '0'], ['0', '1']]}]},
    {'points': [IDENTITY, {'n': 2, 'entries': [['1', 'x'], ['0', '1']]}]},
])
def test_dist_invalid_input(tmp_path, capsys, data):
    code, out, err = _run(capsys, ['dist', _write(tmp_path, data)])
    assert code == cli.EXIT_USAGE
    assert out == '' and err.startswith('error: ')


def test_dist_missing_file(tmp_path, capsys):
    code, _, err = _run(capsys, ['dist', str(tmp_path / 'missing.json')])
    assert code == cli.EXIT_USAGE


def test_dist_precision_exhausted(tmp_path, capsys):
    fuzzy = {'n': 2, 'entries': [['O(t^(-2))', '1'], ['-1', 'O(t^(-2))']]}
    fname = _write(tmp_path, {'points': [IDENTITY, fuzzy]})
    code, _, err = _run(capsys, ['dist', fname])
    assert code == cli.EXIT_PRECISION
    assert err.startswith('precision exhausted in ')


def test_cone_examples(capsys):
    code, out, _ = _run(capsys, ['cone', '--examples'])
    assert code == cli.EXIT_OK
    names = [ex['name'] for ex in json.loads(out)['examples']]
    assert names == ['identity', 'diagonal', 'unipotent', 'bounded']


def test_cone_files(tmp_path, capsys):
    first = _write(tmp_path, IDENTITY, 'first.json')
    second = _write(tmp_path, {'classical': 's',
                               'entries': [['s', '0'], ['0', '1/s']]},
                    'second.json')
    code, out, _ = _run(capsys, ['cone', first, second])
    assert code == cli.EXIT_OK
    out = json.loads(out)
    assert out['equal'] and out['building_distance'] == '2'
    code, _, _ = _run(capsys, ['cone', first])
    assert code == cli.EXIT_USAGE


def test_flags(tmp_path, capsys):
    fname = _write(tmp_path, {'sector': {'n': 2,
                                         'frame': [['1', '0'], ['0', '1']],
                                         'tip': ['0', '0']}})
    code, out, _ = _run(capsys, ['flags', fname])
    assert code == cli.EXIT_OK
    out = json.loads(out)
    assert out['germ']['basis'] == [['1', '0'], ['0', '1']]
    assert out['infinity']['field'] == 'field'
    assert out['base']['entries'] == [['1', '0'], ['0', '1']]


def test_flags_at_point(tmp_path, capsys):
    sector = {'n': 2, 'frame': [['1', '0'], ['0', '1']]}
    point = {'n': 2, 'entries': [['0', 't^(-1)'], ['-t', '0']]}
    fname = _write(tmp_path, {'sector': sector, 'point': point})
    code, out, _ = _run(capsys, ['flags', fname])
    assert code == cli.EXIT_OK
    out = json.loads(out)
    assert FlagChamber(out['germ']['basis']) == FlagChamber([[0, 1], [1, 0]])
    assert out['base']['entries'] == point['entries']
    assert out['infinity']['field'] == 'field'

    off = {'n': 2, 'entries': [['1', 't^(-1)'], ['0', '1']]}
    fname = _write(tmp_path, {'sector': sector, 'point': off})
    code, _, err = _run(capsys, ['flags', fname])
    assert code == cli.EXIT_USAGE and err.startswith('error: ')


def test_pd_point(tmp_path, capsys):
    code, out, _ = _run(capsys, ['pd-point', _write(tmp_path, DIAGONAL)])
    assert code == cli.EXIT_OK
    out = json.loads(out)
    assert out['distance_to_identity'] == '2'
    assert out['projection_vector'] == ['1', '-1']
    fname = _write(tmp_path, {'n': 2, 'entries': [['1', 't'], ['t', '1']]})
    code, _, _ = _run(capsys, ['pd-point', fname])
    assert code == cli.EXIT_USAGE


def test_tree(capsys):
    code, out, _ = _run(capsys, ['--samples', '3', '--format', 'dot', 'tree'])
    assert code == cli.EXIT_OK
    assert out.startswith('graph tree {')
    code, out, _ = _run(capsys, ['--samples', '3', 'tree'])
    assert code == cli.EXIT_OK
    assert len(json.loads(out)['points']) == 3


def test_dot_only_for_tree(tmp_path, capsys):
    fname = _write(tmp_path, [IDENTITY, IDENTITY])
    code, _, err = _run(capsys, ['--format', 'dot', 'dist', fname])
    assert code == cli.EXIT_USAGE


def test_axioms(capsys):
    code, out, _ = _run(capsys, ['--samples', '2', '--seed', '7', 'axioms'])
    assert code == cli.EXIT_OK
    out = json.loads(out)
    assert out['passed'] and out['name'] == 'axioms (n=2)'


def test_kostant(capsys):
    code, out, _ = _run(capsys, ['--samples', '3', 'kostant'])
    assert code == cli.EXIT_OK
    assert json.loads(out)['passed']


@pytest.mark.parametrize('command, target', [
    ('axioms', 'lambdabuildings.axioms.axiom_suite'),
    ('kostant', 'lambdabuildings.symmetric_space.kostant_check'),
])
def test_depth_reaches_checks(monkeypatch, capsys, command, target):
    calls = []

    def fake(**kwargs):
        calls.append(kwargs)
        return utils.make_report(command, [dict(status='pass')])

    monkeypatch.setattr(target, fake)
    code, out, _ = _run(capsys, ['--depth', '5/2', '--samples', '2',
                                 command])
    assert code == cli.EXIT_OK
    assert calls[0]['depth'] == Fraction(5, 2)
    assert calls[0]['seed'] == 1234


@pytest.mark.parametrize('argv, code', [
    ([], 2),
    (['frobnicate'], 2),
    (['--version'], 0),
    (['--n', '7', 'axioms'], cli.EXIT_USAGE),
    (['--depth', '0', 'axioms'], cli.EXIT_USAGE),
])
def test_usage(capsys, argv, code):
    assert _run(capsys, argv)[0] == code
