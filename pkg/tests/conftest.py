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

import random

import pytest

try:
    from unittest import mock
except ImportError:
    import mock

from poissonlike import *
from poissonlike import cohomology


@pytest.fixture(autouse=True)
def alternating_sums(request):
    # Every Betti table built during a test must satisfy the alternating sum
    # theorem
    reports = []
    build = cohomology._build_report

    def record(*args):
        report = build(*args)
        reports.append(report)
        return report

    with mock.patch(
            'poissonlike.cohomology._build_report', side_effect=record):
        yield reports
    for report in reports:
        check = alternating_sum_check(report)
        assert check.equal, 'alternating sums differ for %r' % (report,)


@pytest.fixture()
def type1():
    return load_algebra('type1')


@pytest.fixture()
def type2():
    return load_algebra('type2')


@pytest.fixture()
def type8():
    return load_algebra('type8')


@pytest.fixture()
def type12():
    return load_algebra('type12')


@pytest.fixture()
def abelian3():
    return load_algebra('abelian3')


@pytest.fixture()
def type1_pi():
    return parse_element(
        'c1*y1^y2 + c2*y1^y3 + c3*y1^y4 + c4*y2^y3 + c5*y2^y4 + c6*y3^y4',
        TANGENT, 4)


@pytest.fixture()
def type1_pi_reduced(type1_pi):
    # c5 = c6 = 0 solves the Poisson conditions identically
    return type1_pi.subs({'c5': 0, 'c6': 0})


@pytest.fixture()
def type2_case1():
    return parse_element(
        'C1*y1^y2 + C2*y1^y3 + C4*y2^y3 + C5*y2^y4', TANGENT, 4)


@pytest.fixture()
def type12_phi():
    return parse_element('c1*z1 + c2*z2 + c3*z3 + c4*z4', COTANGENT, 4)


@pytest.fixture()
def type8_phi():
    return parse_element(
        'c1*z1^z2 + c2*z1^z3 + c3*z1^z4 + c4*z1^z5 + c5*z2^z3 + c6*z2^z4 + '
        'c7*z2^z5 + c8*z3^z4 + c9*z3^z5 + c10*z4^z5', COTANGENT, 5)


@pytest.fixture()
def mytgt():
    return load_tensor('mytgt')


@pytest.fixture()
def concrete_algebras(type1, type2, type8, type12, abelian3):
    return [
        type1,
        type2.subs({'a': -1}),
        type2.subs({'a': 3}),
        type8.subs({'u': 1}),
        type8.subs({'u': -2}),
        type12,
        abelian3,
    ]


@pytest.fixture()
def rng():
    return random.Random(20240601)


@pytest.fixture()
def random_element():
    def make(rng, space, n, degree, count=3, bound=3):
        return element_from_terms(space, n, [
            (rng.sample(range(1, n + 1), degree), rng.randint(-bound, bound))
            for _ in range(count)
        ])
    return make


@pytest.fixture()
def random_field():
    def make(rng, n, k, m, count=3, bound=3, side=TANGENT):
        basis = basis_Ckm(n, k, m)
        return PolyMultiVector(n, side, {
            rng.choice(basis): rng.randint(-bound, bound)
            for _ in range(count)
        })
    return make
