# -*- coding: utf-8 -*-
"""
For testing lambdabuildings.matrices functionality
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from lambdabuildings import datasets, matrices
from lambdabuildings.errors import PrecisionExhausted, SingularMatrix


def F(*values):
    return [Fraction(v) for v in values]


@pytest.mark.parametrize('data, orders', [
    ([['t^(-1)', 0], [0, 't']], F(-1, 1)),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], F(0, 0, 0)),
    ([['t^(-3)', 0, 0], [0, 't', 0], [0, 0, 't^2']], F(-3, 1, 2)),
    ([['t^(1/2)', 0], [0, 't^(-1/2)']], [Fraction(-1, 2), Fraction(1, 2)]),
])
def test_charpoly_root_orders(data, orders):
    assert matrices.charpoly_root_orders(matrices.as_matrix(data)) == orders


def test_charpoly_root_orders_unipotent_product():
    up = matrices.as_matrix([[1, 't^(-1)'], [0, 1]])
    low = matrices.as_matrix([[1, 0], ['t^(-1)', 1]])
    mat = matrices.matmul(up, low)
    assert [str(c) for c in matrices.charpoly(mat)] == \
        ['1', '-t^(-2) - 2', '1']
    assert matrices.charpoly_root_orders(mat) == F(-2, 2)


def test_charpoly_root_orders_errors():
    with pytest.raises(SingularMatrix):
        matrices.charpoly_root_orders(matrices.as_matrix([[1, 1], [1, 1]]))
    fuzzy = matrices.as_matrix([['O(t^(-2))', 1], ['-t^(-1)', 'O(t^(-2))']])
    with pytest.raises(PrecisionExhausted):
        matrices.charpoly_root_orders(fuzzy)


def test_charpoly_root_orders_conjugation_invariant():
    rs = np.random.RandomState(1234)
    for _ in range(5):
        seed = rs.randint(10000)
        mat = datasets.make_sl_matrix(3, seed=seed)
        u = datasets.make_integral_matrix(3, seed=seed + 1)
        conj = matrices.matmul(u, mat, matrices.adjugate(u))
        # adj(u) = u^-1 since det(u) = 1
        assert matrices.charpoly_root_orders(conj) == \
            matrices.charpoly_root_orders(mat)


def test_adjugate_and_det():
    mat = matrices.as_matrix([['t', 1, 0], [2, 't^(-1)', 3], [0, 1, 't']])
    d = matrices.det(mat)
    prod = matrices.matmul(mat, matrices.adjugate(mat))
    for i in range(3):
        for j in range(3):
            assert prod[i, j] == (d if i == j else 0)


def test_inverse():
    mat = matrices.as_matrix([[1, 't^(-1)'], [0, 1]])
    inv = matrices.inverse(mat)
    assert matrices.to_json(inv) == [['1', '-t^(-1)'], ['0', '1']]
    with pytest.raises(SingularMatrix):
        matrices.inverse(matrices.as_matrix([[0, 0], [0, 1]]))


def test_permutation_matrix():
    perm = matrices.permutation_matrix([1, 2, 0])
    assert matrices.to_json(perm) == [['0', '0', '1'],
                                      ['1', '0', '0'],
                                      ['0', '1', '0']]


def test_predicates():
    upper = matrices.as_matrix([[1, 't'], [0, 1]])
    assert matrices.is_upper_triangular(upper)
    assert not matrices.is_lower_triangular(upper)
    assert not matrices.is_symmetric(upper)
    assert matrices.is_diagonal(matrices.identity(3))
    assert matrices.is_exact(upper)


def test_valuations():
    mat = matrices.as_matrix([['t^(-1)', 0], ['3*t^(1/2) + t', 1]])
    vals = matrices.valuations(mat)
    assert vals[0, 0] == -1 and vals[0, 1] == math.inf
    assert vals[1, 0] == Fraction(1, 2) and vals[1, 1] == 0
    with pytest.raises(PrecisionExhausted):
        matrices.valuations(matrices.as_matrix([['O(t)', 0], [0, 1]]))


def test_json():
    mat = matrices.from_json('[["1 + t", "0"], ["0", "1/(1 + t)"]]',
                             depth=2)
    assert str(mat[1, 1]) == '1 - t + O(t^2)'
    with pytest.raises(ValueError):
        matrices.from_json('[[1, 2]')
    with pytest.raises(ValueError):
        matrices.from_json('{"a": 1}')
    with pytest.raises(ValueError):
        matrices.as_matrix([[1, 2, 3], [4, 5, 6]])


def test_exact_matrix_expand():
    exact = matrices.as_exact_matrix([['1/(1 + t)', 0], [0, '1 + t']])
    assert matrices.det(exact) == 1
    series = matrices.expand(exact, depth=3)
    assert str(series[0, 0]) == '1 - t + t^2 + O(t^3)'
