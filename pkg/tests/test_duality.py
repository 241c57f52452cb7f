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

import pytest

from poissonlike import *


def z(*idx, **kwargs):
    return monomial(COTANGENT, kwargs.get('n', 4), idx, kwargs.get('c', 1))


def images(matrix, n=4):
    return [
        ExteriorElement(COTANGENT, n, matrix.image(row))
        for row in range(matrix.shape[0])
    ]


def test_type1_delta(type1, type1_pi_reduced):
    c2, c3, c4 = param('c2'), param('c3'), param('c4')
    delta = dual_operator(type1, type1_pi_reduced)
    assert [m.label for m in delta] == [
        'delta(0,-1)', 'delta(1,0)', 'delta(2,1)', 'delta(3,2)',
        'delta(4,3)']
    assert delta[0].shape == (1, 0)
    assert delta[1].shape == (4, 1)
    assert delta[1].is_zero()
    assert images(delta[2]) == [
        z(3, c=-c3) + z(4, c=c2), z(4, c=c4), 0, 0, 0, 0]
    assert images(delta[3]) == [
        z(2, 4, c=c4) + z(3, 4, c=-c2), z(3, 4, c=-c3), 0, 0]
    assert delta[4].is_zero()


def test_type1_delta_is_transpose(type1, type1_pi_reduced):
    delta = dual_operator(type1, type1_pi_reduced)
    forward = tangent_complex(type1, type1_pi_reduced).matrices
    assert delta[2].rows() == forward[0].transpose().rows()
    assert delta[3].rows() == forward[1].transpose().rows()


def test_type1_double_complex(type1, type1_pi_reduced):
    report = double_complex_report(type1, type1_pi_reduced)
    for residual in report.delta_d + report.d_delta:
        assert residual.is_zero()
    for residual in report.anticommutator:
        assert residual.is_zero()
    assert report.anticommutators == (report.delta_d, report.d_delta)


@pytest.mark.parametrize('values,r', [
    ((0, 0, 1, 1), 2),
    ((0, 1, 0, 0), 1),
    ((0, 0, 1, 0), 1),
    ((1, 0, 0, 0), 0),
])
def test_type1_delta_betti(type1, type1_pi_reduced, values, r):
    assignment = {'c%d' % i: v for i, v in enumerate(values, start=1)}
    report = double_complex_report(type1, type1_pi_reduced, assignment)
    assert report.betti_delta.betti == (1, 4 - r, 2 * (3 - r), 4 - r, 1)
    assert report.betti_delta.p == -1
    assert report.betti_delta.degrees == (1, 2, 3, 4, 5)
    assert report.betti_d.betti == (1, 2, 2, 2, 1)


def test_type2_case1_delta(type2, type2_case1):
    L = type2.subs({'a': -1})
    C2, C4, C5 = param('C2'), param('C4'), param('C5')
    delta = dual_operator(L, type2_case1)
    assert images(delta[4]) == [z(1, 3, 4, c=-C5)]
    assert images(delta[3]) == [
        z(1, 4, c=-2 * C4) + z(3, 4, c=-C2), z(1, 4, c=-2 * C5), 0, 0]
    assert images(delta[2]) == [
        z(4, c=C2) + z(1, c=-C5), 0, 0, z(4, c=2 * C4) + z(3, c=-C5),
        z(4, c=C5), 0]
    assert delta[1].is_zero()
    for square in d_squared_check(delta, p=-1):
        assert square.is_zero()


def test_type2_case1_double_complex(type2, type2_case1):
    L = type2.subs({'a': -1})
    C5 = param('C5')
    report = double_complex_report(L, type2_case1)
    assert images(report.d_delta[2]) == [
        z(1, 4, c=-C5), 0, 0, z(3, 4, c=C5), 0, 0]
    for p in (0, 1, 3, 4):
        assert report.d_delta[p].is_zero()
    assert images(report.delta_d[3]) == [z(1, 3, 4, c=C5), 0, 0, 0]
    assert images(report.delta_d[1]) == [0, z(4, c=-C5), 0, 0]
    assert report.delta_d[2].is_zero()
    assert report.delta_d[4].is_zero()
    assert images(report.anticommutator[2]) == images(report.d_delta[2])
    vanishing = double_complex_report(L, type2_case1, {'C5': 0})
    for residual in vanishing.anticommutator:
        assert residual.is_zero()


def test_dual_image_matches_matrices(type2, type2_case1):
    L = type2.subs({'a': -1})
    delta = dual_operator(L, type2_case1)
    for p in range(5):
        for row, idx in enumerate(basis_enum(4, p)):
            omega = monomial(COTANGENT, 4, idx)
            assert dual_image(L, type2_case1, omega) == ExteriorElement(
                COTANGENT, 4, delta[p].image(row))


def test_dual_operator_errors(type1):
    with pytest.raises(DegreeMismatch):
        dual_operator(type1, ExteriorElement(TANGENT, 4))
    with pytest.raises(DegreeMismatch):
        dual_operator(type1, generator(TANGENT, 4, 1))
    with pytest.raises(DegreeMismatch):
        dual_operator(type1, parse_element('y1^y2 + y1^y2^y3'))


def test_dual_operator_zero_pi(type1):
    zero = ExteriorElement(TANGENT, 4)
    delta = dual_operator(type1, zero, degree=2)
    assert [m.label for m in delta] == [
        'delta(0,-1)', 'delta(1,0)', 'delta(2,1)', 'delta(3,2)', 'delta(4,3)']
    for matrix in delta:
        assert matrix.is_zero()
    with pytest.raises(DegreeMismatch):
        dual_operator(type1, zero, degree=1)


def test_double_complex_vanishing_pi(type1, type1_pi_reduced):
    report = double_complex_report(
        type1, type1_pi_reduced, {'c1': 0, 'c2': 0, 'c3': 0, 'c4': 0})
    assert report.betti_delta.betti == (1, 4, 6, 4, 1)
    assert report.betti_d.betti == (1, 2, 2, 2, 1)
    for residual in report.delta_d + report.d_delta:
        assert residual.is_zero()
    report = double_complex_report(
        type1, ExteriorElement(TANGENT, 4), degree=2)
    assert report.betti_delta.betti == (1, 4, 6, 4, 1)


def test_compose(type1):
    d = de_rham_operator(type1)
    assert [m.label for m in d][:2] == ['d(0,1)', 'd(1,2)']
    squares = compose(d, d)
    assert len(squares) == 5
    assert squares[0].label == 'd(1,2) o d(0,1)'
    for square in squares:
        assert square.is_zero()
    lonely = OperatorMatrix('f', [(1,)], [(2,)], [[1]], source=1, target=2)
    with pytest.raises(ShapeMismatch):
        compose([lonely], d[:1])


def test_random_adjointness(rng, concrete_algebras, random_element):
    # <omega, d_pi U> = <delta omega, U>
    for _ in range(200):
        L = rng.choice(concrete_algebras)
        n = L.n
        pi = random_element(rng, TANGENT, n, rng.randint(2, min(n, 3)))
        if not pi:
            continue
        delta = dual_operator(L, pi)
        p0 = pi.degree
        q = rng.randint(1, n)
        p = q + p0 - 1
        if p > n:
            continue
        U = random_element(rng, TANGENT, n, q)
        omega = random_element(rng, COTANGENT, n, p)
        image = ExteriorElement(COTANGENT, n)
        for idx, coeff in omega.items():
            image = image + coeff * ExteriorElement(
                COTANGENT, n, delta[p].image(idx))
        assert pairing(omega, d_pi(L, pi, U)) == pairing(image, U)
        assert dual_image(L, pi, omega) == image
