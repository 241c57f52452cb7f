# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
)

from fractions import Fraction
from itertools import combinations

import pytest

from poissonlike import *


def point(*values, **kwargs):
    prefix = kwargs.get('prefix', 'c')
    return {
        '%s%d' % (prefix, i): value
        for i, value in enumerate(values, start=1)
    }


def test_type1_matrices(type1, type1_pi_reduced):
    c2, c3, c4 = param('c2'), param('c3'), param('c4')
    complex_ = tangent_complex(type1, type1_pi_reduced)
    assert complex_.p == 1
    assert complex_.degrees == [0, 1, 2, 3]
    assert complex_.dims == [4, 6, 4, 1]
    A12, A23, A34, A45 = complex_.matrices
    assert A12.label == 'A(1,2)'
    assert A12.shape == (4, 6)
    assert A12.rows() == [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [-c3, 0, 0, 0, 0, 0],
        [c2, c4, 0, 0, 0, 0],
    ]
    assert A23.rows() == [
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [c4, 0, 0, 0],
        [-c2, -c3, 0, 0],
    ]
    assert A34.is_zero()
    assert A45.shape == (1, 0)
    assert A12.row_labels() == ['y1', 'y2', 'y3', 'y4']
    assert A12.col_labels()[:2] == ['y1^y2', 'y1^y3']
    assert A12.image((4,)) == {(1, 2): c2, (1, 3): c4}
    assert A12.parameters == ('c2', 'c3', 'c4')


@pytest.mark.parametrize('values,betti', [
    ((0, 0, 1, 1), (2, 2, 2, 1)),
    ((1, 0, 0, 0), (4, 6, 4, 1)),
    ((0, 1, 0, 0), (3, 4, 3, 1)),
    ((0, 0, 1, 0), (3, 4, 3, 1)),
])
def test_type1_betti(type1, type1_pi_reduced, values, betti):
    report = tangent_complex(type1, type1_pi_reduced).betti(point(*values))
    assert report.betti == betti
    assert report.dims == (4, 6, 4, 1)
    assert report.alt_betti_sum == 1
    assert report.alt_dim_sum == 1


def test_type1_example_tensor(type1):
    pi = parse_element('y1^y4 + y2^y3')
    report = tangent_complex(type1, pi).betti()
    assert report.betti == (2, 2, 2, 1)
    assert report.ranks == (2, 2, 0, 0)
    assert report.labels == ('A(1,2)', 'A(2,3)', 'A(3,4)', 'A(4,5)')


def test_type1_d_squared(type1, type1_pi, type1_pi_reduced):
    for residual in tangent_complex(type1, type1_pi_reduced).d_squared():
        assert residual.is_zero()
    residuals = tangent_complex(type1, type1_pi).d_squared()
    assert not all(residual.is_zero() for residual in residuals)
    for residual in tangent_complex(type1, type1_pi).d_squared(
            {'c5': 0, 'c6': 0}):
        assert residual.is_zero()


def test_zero_pi(type1):
    zero = ExteriorElement(TANGENT, 4)
    with pytest.raises(DegreeMismatch):
        tangent_complex(type1, zero)
    report = tangent_complex(type1, zero, degree=2).betti()
    assert report.betti == (4, 6, 4, 1)


def test_pi_degree_too_low(type1):
    with pytest.raises(DegreeMismatch):
        tangent_complex(type1, generator(TANGENT, 4, 1))
    with pytest.raises(DegreeMismatch):
        tangent_complex(type1, scalar(TANGENT, 4, 1))
    with pytest.raises(DegreeMismatch):
        tangent_complex(type1, ExteriorElement(TANGENT, 4), degree=1)


def test_mixed_pi(type1):
    with pytest.raises(DegreeMismatch):
        tangent_complex(type1, parse_element('y1 + y2^y3'))
    with pytest.raises(DegreeMismatch):
        form_complex(type1, parse_element('z1 + z2^z3'))


def test_type12_form_matrices(type12, type12_phi):
    c = {i: param('c%d' % i) for i in range(1, 5)}
    complex_ = form_complex(type12, type12_phi)
    assert complex_.p == 2
    assert complex_.degrees == [1, 2, 3, 4, 5]
    A02, A13, A24 = complex_.matrices[:3]
    assert A02.label == 'A(0,2)'
    assert A02.rows() == [[0, c[1], -c[2], c[2], c[1], 0]]
    assert A13.rows() == [
        [2 * c[2], 0, -c[4], c[3]],
        [-2 * c[1], 0, -c[3], -c[4]],
        [0, 0, c[2], -c[1]],
        [0, 0, c[1], c[2]],
    ]
    assert A24.rows() == [
        [-2 * c[4]], [0], [2 * c[2]], [0], [-2 * c[1]], [0]]
    squares = complex_.d_squared()
    assert squares[0].rows() == [[-2 * (c[1] ** 2 + c[2] ** 2)]]


@pytest.mark.parametrize('values,betti', [
    ((0, 0, 0, 0), (1, 4, 6, 4, 1)),
    ((0, 0, 1, 0), (1, 2, 6, 2, 1)),
    ((0, 0, 0, 1), (1, 2, 5, 2, 0)),
])
def test_type12_betti(type12, type12_phi, values, betti):
    report = form_complex(type12, type12_phi).betti(point(*values))
    assert report.betti == betti
    assert report.p == 2
    assert report.windows == ((0, (1,)), (1, (2, 3)), (2, (4, 5)))
    assert report.alt_betti_sum == -4
    assert report.alt_dim_sum == -4


def test_type12_not_a_complex(type12, type12_phi):
    with pytest.raises(NotAComplex) as exc:
        form_complex(type12, type12_phi).betti(point(1, 0, 0, 0))
    assert exc.value.degree == 1


def test_type8_ranks(type8, type8_phi):
    L = type8.subs({'u': 1})
    values = point(0, 1, 1, 0, 1, 1, 0, 1, 0, 0)
    assert form_bracket(L, type8_phi, type8_phi).subs(values) == 0
    complex_ = form_complex(L, type8_phi)
    assert complex_.p == 3
    A03, A14, A25 = complex_.matrices[:3]
    assert A03.label == 'A(0,3)'
    assert A03.evaluate(values) == [[0, 0, 0, 0, 1, 1, 0, 2, 2, 2]]
    assert rank(A03, values) == 1
    assert rank(A14, values) == 2
    assert rank(A25, values) == 1


def test_de_rham(type1, type12, abelian3):
    report = de_rham_complex(type1).betti()
    assert report.betti == (1, 2, 2, 2, 1)
    assert report.labels[0] == 'd(0,1)'
    report = de_rham_complex(abelian3).betti()
    assert report.betti == (1, 3, 3, 1)
    for residual in de_rham_complex(type12).d_squared():
        assert residual.is_zero()


def test_operator_matrix_degree_check():
    with pytest.raises(DegreeMismatch):
        operator_matrix(lambda U: U, 4, 1, 2)
    M = operator_matrix(lambda U: U, 3, 2, 2, label='id')
    assert M.label == 'id'
    assert M.evaluate() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_operator_matrix_shapes():
    with pytest.raises(ShapeMismatch):
        OperatorMatrix('bad', [(1,), (2,)], [(1, 2)], [[1, 2]])
    f = OperatorMatrix('f', [(1,), (2,)], [(1, 2)], [[1], [2]])
    g = OperatorMatrix('g', [(1, 2)], [(1,), (2,)], [[3, 4]])
    assert f.then(g).rows() == [[3, 4], [6, 8]]
    assert f.then(g).label == 'f;g'
    assert g.then(f).rows() == [[11]]
    with pytest.raises(ShapeMismatch):
        f.then(f)
    with pytest.raises(ShapeMismatch):
        f + g
    assert (f + f).rows() == [[2], [4]]
    t = f.transpose()
    assert t.shape == (1, 2)
    assert t.label == 'f^T'
    assert t.transpose() == f
    with pytest.raises(ValueError):
        f.entries[0, 0] = 5


def test_operator_matrix_subs():
    a = param('a')
    M = OperatorMatrix('m', [(1,)], [(1,), (2,)], [[a, a ** 2 - 1]])
    with pytest.raises(MissingParameter):
        M.evaluate()
    with pytest.raises(MissingParameter):
        rank(M)
    assert M.subs({'a': 1}).rows() == [[1, 0]]
    assert rank(M, {'a': 0}) == 1
    assert M.subs({'a': 0}).image(0) == {(2,): -1}


def test_betti_sequence_checks():
    f = OperatorMatrix('f', [(1,)], [(2,)], [[1]])
    g = OperatorMatrix('g', [(2,)], [(3,)], [[1]])
    with pytest.raises(NotAComplex) as exc:
        betti_sequence([f, g], [1, 1, 1])
    assert exc.value.degree == 0
    assert exc.value.residual.rows() == [[1]]
    with pytest.raises(ValueError):
        betti_sequence([f], [1, 1], p=0)
    with pytest.raises(ValueError):
        betti_sequence([f, None, None], [1, 1])
    with pytest.raises(ValueError):
        betti_sequence([f], [1, 1], degrees=[0])
    report = betti_sequence([f, None], [1, 1])
    assert report.betti == (0, 0)
    assert report.ranks == (1, 0)
    assert report.labels == ('f', '')


def test_alternating_sum_check():
    report = betti_sequence([], [])
    assert alternating_sum_check(report) == AlternatingSum(0, 0, True)
    f = OperatorMatrix('f', [(1,), (2,)], [(3,)], [[1], [1]])
    report = betti_sequence([None, f], [2, 2, 1], p=1, degrees=[3, 4, 5])
    assert report.betti == (2, 1, 0)
    assert alternating_sum_check(report) == AlternatingSum(-1, -1, True)


def test_rank_of_rows():
    assert rank_of_rows([]) == 0
    assert rank_of_rows([[0, 0], [0, 0]]) == 0
    assert rank_of_rows([[1, 2], [2, 4]]) == 1
    assert rank_of_rows([[0, 1], [1, 0]]) == 2
    assert rank_of_rows([[Fraction(1, 3), 1], [1, 3]]) == 1
    assert rank_of_rows([[0, 0, 1], [0, 2, 0], [0, 1, 1]]) == 2


def cofactor_det(matrix):
    if not matrix:
        return 1
    return sum(
        (-1) ** col * entry * cofactor_det([
            row[:col] + row[col + 1:] for row in matrix[1:]])
        for col, entry in enumerate(matrix[0])
        if entry
    )


def minor_rank(matrix):
    rows, cols = len(matrix), len(matrix[0])
    for size in range(min(rows, cols), 0, -1):
        for row_set in combinations(range(rows), size):
            for col_set in combinations(range(cols), size):
                if cofactor_det([
                        [matrix[r][c] for c in col_set] for r in row_set]):
                    return size
    return 0


def test_random_rank(rng):
    for _ in range(200):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        inner = rng.randint(1, 4)
        left = [[rng.randint(-3, 3) for _ in range(inner)] for _ in range(rows)]
        right = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(inner)]
        matrix = [
            [sum(a * b for a, b in zip(row, col)) for col in zip(*right)]
            for row in left]
        expected = minor_rank(matrix)
        assert rank_of_rows(matrix) == expected
        assert rank_of_rows([list(col) for col in zip(*matrix)]) == expected
        scaled = [
            [Fraction(v, k) for v in row]
            for k, row in enumerate(matrix, start=1)]
        assert rank_of_rows(scaled) == expected


def test_random_alternating_sums(rng, concrete_algebras, random_element):
    # the autouse fixture checks the alternating sums of every report
    for _ in range(20):
        L = rng.choice(concrete_algebras)
        phi = random_element(rng, COTANGENT, L.n, rng.randint(1, 2))
        if not phi:
            continue
        complex_ = form_complex(L, phi)
        if not all(m.is_zero() for m in complex_.d_squared()):
            continue
        report = complex_.betti()
        assert sum(report.dims) == 2 ** L.n
