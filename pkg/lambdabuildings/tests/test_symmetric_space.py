# -*- coding: utf-8 -*-
"""
For testing lambdabuildings.symmetric_space functionality
"""

from fractions import Fraction

import pytest

from lambdabuildings import matrices, symmetric_space as ss
from lambdabuildings.datasets import make_pd_point, make_sl_matrix
from lambdabuildings.errors import InvariantViolation, NotSupported
from lambdabuildings.log_value import lg, quotient_map

ROTATION = [['3/5', '-4/5'], ['4/5', '3/5']]
# R @ diag(2, 1/2) @ R.T for the 3-4-5 rotation R
ROTATED = [['26/25', '18/25'], ['18/25', '73/50']]


def _zero_through_window(mat):
    return all(entry.is_zero_through_window() for entry in mat.flat)


def test_pd_point_validation():
    P = ss.PDPoint([['t^(-1)', 0], [0, 't']])
    assert P.n == 2
    with pytest.raises(InvariantViolation):
        ss.PDPoint([[1, 't'], [0, 1]])
    with pytest.raises(InvariantViolation):
        ss.PDPoint([[2, 0], [0, 2]])
    with pytest.raises(InvariantViolation):
        ss.PDPoint([[-1, 0], [0, -1]])


def test_pd_point_from_json():
    P = ss.pd_point_from_json('{"n": 2, "entries": [["1 + t", "0"], '
                              '["0", "1/(1 + t)"]]}', depth=3)
    assert str(P.mat[1, 1]) == '1 - t + t^2 + O(t^3)'
    assert ss.pd_point_from_json(P.to_json()).n == 2
    with pytest.raises(ValueError):
        ss.pd_point_from_json('[[1, 0]')
    with pytest.raises(ValueError):
        ss.pd_point_from_json({'n': 3, 'entries': [[1, 0], [0, 1]]})
    with pytest.raises(InvariantViolation):
        ss.pd_point_from_json([['1', 't'], ['t', '1']])


def test_lambda_distance():
    one = ss.identity_point(2)
    P = ss.diagonal_point(['t^(-1)', 't'])
    assert ss.lambda_distance(one, P) == lg('t^(-2)')
    assert ss.lambda_distance(P, P).is_zero()
    g = matrices.as_matrix([[1, 1], [0, 1]])
    assert ss.lambda_distance(one.act(g), P.act(g)) == lg('t^(-2)')
    assert ss.lambda_distance(P, one) == ss.lambda_distance(one, P)


def test_lambda_distance_factored():
    one = ss.identity_point(2)
    Q = ss.PDPoint(ROTATED)
    assert ss.lambda_distance(one, Q) == lg(4)
    assert quotient_map(ss.lambda_distance(one, Q)) == \
        ss.valuation_distance(one, Q) == 0


def test_lambda_distance_not_supported():
    one = ss.identity_point(2)
    Q = ss.PDPoint([[2, 1], [1, 1]])
    with pytest.raises(NotSupported):
        ss.lambda_distance(one, Q)
    assert ss.valuation_distance(one, Q) == 0


def test_eigenvalues():
    vals = ss.eigenvalues(matrices.as_matrix([[2, 1], [1, 2]]))
    assert sorted(vals) == [1, 3]
    with pytest.raises(NotSupported):
        ss.eigenvalues(matrices.as_matrix([[1, 1], [1, 2]]))


def test_weyl_vector():
    vec = ss.WeylVector([lg('t'), lg('t^(-1)')])
    assert vec.entries[0] == lg('t^(-1)')
    assert vec.norm() == lg('t^(-2)')
    assert len(vec.permute([1, 0])) == 2
    with pytest.raises(InvariantViolation):
        ss.WeylVector([lg('t'), lg('t')])


@pytest.mark.parametrize('entries, expected', [
    (['t^(-1)', 't'], 2),
    (['1', '1'], 0),
    (['t^(-3)', 't', 't^2'], 6),
    (['t^(1/2)', 't^(-1/2)'], 1),
])
def test_valuation_distance(entries, expected):
    one = ss.identity_point(len(entries))
    P = ss.diagonal_point(entries)
    assert ss.valuation_distance(one, P) == expected
    assert ss.valuation_distance(P, one) == expected
    assert quotient_map(ss.lambda_distance(one, P)) == expected


def test_valuation_vector():
    one = ss.identity_point(3)
    P = ss.diagonal_point(['t^(-3)', 't', 't^2'])
    assert ss.valuation_vector(one, P) == [3, -1, -2]
    with pytest.raises(ValueError):
        ss.valuation_distance(one, ss.identity_point(2))


def test_iwasawa_diagonal():
    k, a, u = ss.iwasawa([['t^(-1)', 0], [0, 't']])
    assert matrices.to_json(k) == [['1', '0'], ['0', '1']]
    assert matrices.to_json(a) == [['t^(-1)', '0'], ['0', 't']]
    assert matrices.to_json(u) == [['1', '0'], ['0', '1']]


def test_iwasawa_reconstructs():
    g = matrices.as_matrix([[1, 0], [1, 1]])
    k, a, u = ss.iwasawa(g)
    assert _zero_through_window(matrices.matmul(k, a, u) - g)
    eye = matrices.identity(2)
    assert _zero_through_window(matrices.matmul(matrices.transpose(k), k)
                                - eye)
    assert matrices.is_upper_triangular(u)
    assert u[0, 0] == 1 and u[1, 1] == 1


@pytest.mark.parametrize('n', [2, 3])
@pytest.mark.parametrize('seed', range(6))
def test_iwasawa_random(n, seed):
    g = make_sl_matrix(n, seed=seed)
    k, a, u = ss.iwasawa(g)
    assert _zero_through_window(matrices.matmul(k, a, u) - g)
    assert _zero_through_window(matrices.matmul(matrices.transpose(k), k)
                                - matrices.identity(n))
    assert matrices.is_diagonal(a)
    for i in range(n):
        assert u[i, i] == 1
        for j in range(i):
            assert u[i, j].is_zero_through_window()


def test_iwasawa_orthogonal():
    k, a, u = ss.iwasawa(ROTATION)
    assert matrices.to_json(k) == matrices.to_json(
        matrices.as_matrix(ROTATION))
    assert matrices.is_diagonal(u) and matrices.is_diagonal(a)
    assert a[0, 0] == 1 and a[1, 1] == 1


def test_iwasawa_errors():
    with pytest.raises(ValueError):
        ss.iwasawa([[2, 0], [0, 1]])


def test_ldl_decomposition():
    L, D = ss.ldl_decomposition([[4, 2], [2, 5]])
    assert D == [4, 4]
    assert L[1, 0] == Fraction(1, 2)


def test_kostant_example():
    a = matrices.as_matrix([['t^(-1)', 0], [0, 't']])
    g = matrices.matmul(matrices.as_matrix(ROTATION), a)
    P = ss.PDPoint(matrices.matmul(g, matrices.transpose(g)), check=False)
    orders = ss.projection_orders(P)
    assert orders == [-1, 1]
    assert ss.in_weyl_hull(orders, [-1, 1])


@pytest.mark.parametrize('vector, weight, expected', [
    ([0, 0], [1, -1], True),
    ([2, -2], [1, -1], False),
    ([1, 0, -1], [2, -1, -1], True),
    ([Fraction(1, 2), Fraction(-1, 2)], [-1, 1], True),
    ([1, 1], [1, -1], False),
])
def test_in_weyl_hull(vector, weight, expected):
    assert ss.in_weyl_hull(vector, weight) is expected


def test_kostant_check():
    assert ss.kostant_check(samples=10, n=2, seed=1234).passed
    assert ss.kostant_check(samples=5, n=3, seed=1234).passed
    assert ss.kostant_check(a=[['t^(-1)', 0], [0, 't']], samples=5,
                            seed=1).passed
    assert ss.kostant_check(a=matrices.identity(2), samples=3).passed
    with pytest.raises(ValueError):
        ss.kostant_check(a=[[1, 1], [0, 1]], samples=1)


def test_retraction_to_diagonal():
    P = ss.diagonal_point(['t^(-1)', 't'])
    assert ss.retraction_to_diagonal(P).equals(P)
    g = matrices.as_matrix([[1, 1], [0, 1]])
    Q = P.act(g)
    rQ = ss.retraction_to_diagonal(Q)
    assert ss.retraction_to_diagonal(rQ).equals(rQ)
    one = ss.identity_point(2)
    assert ss.valuation_distance(one, rQ) <= \
        ss.valuation_distance(one, Q) == 2


@pytest.mark.parametrize('n', [2, 3])
@pytest.mark.parametrize('seed', range(8))
def test_retraction_to_diagonal_contracts(n, seed):
    P, Q = make_pd_point(n, seed=seed), make_pd_point(n, seed=seed + 100)
    rP, rQ = ss.retraction_to_diagonal(P), ss.retraction_to_diagonal(Q)
    assert matrices.is_diagonal(rP.mat) and matrices.is_diagonal(rQ.mat)
    assert ss.valuation_distance(rP, rQ) <= ss.valuation_distance(P, Q)


def test_metric_axioms_check():
    assert ss.metric_axioms_check(n=2, sample_size=10, seed=1234).passed
    assert ss.metric_axioms_check(n=3, sample_size=3, seed=1234).passed


@pytest.mark.slow
@pytest.mark.parametrize('n', [2, 3])
def test_metric_axioms_check_large(n):
    assert ss.metric_axioms_check(n=n, sample_size=200, seed=1).passed


@pytest.mark.slow
@pytest.mark.parametrize('n', [2, 3])
def test_kostant_check_large(n):
    assert ss.kostant_check(samples=100, n=n, seed=1).passed
