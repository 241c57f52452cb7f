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

import io
import json
import logging
from fractions import Fraction

import pytest

try:
    from unittest import mock
except ImportError:
    import mock

from poissonlike import *
from poissonlike.cli import run, parse_config, main


def call(*args):
    stdout, stderr = io.StringIO(), io.StringIO()
    status = run(list(args), stdout=stdout, stderr=stderr)
    return status, stdout.getvalue(), stderr.getvalue()


def call_json(*args):
    status, out, err = call(*(args + ('--format', 'json')))
    assert status == 0, err
    return json.loads(out)


def test_parse_config():
    config, level = parse_config(
        ['betti', 'type1', '--tensor', 'y1^y4', '--set', 'c1=1/2', '-v'])
    assert config.command == 'betti'
    assert config.action is None
    assert config.side == TANGENT
    assert config.assignment == {'c1': Fraction(1, 2)}
    assert config.output_format == 'table'
    assert level == logging.INFO
    config, level = parse_config(
        ['betti', 'type12', '--tensor', 'z3', '--side', 'form', '-q'])
    assert config.side == COTANGENT
    assert level == logging.ERROR
    config, level = parse_config(['polyfield', 'dims', '--n', '4', '--k', '2',
                                  '--m', '2', '-vv'])
    assert (config.command, config.action) == ('polyfield', 'dims')
    assert (config.n, config.k, config.m) == (4, 2, 2)
    assert level == logging.DEBUG


def test_validate():
    assert call('validate', 'type1') == (
        0, 'Type1: Jacobi identity holds\n', '')
    obj = call_json('validate', 'type8')
    assert obj == {'name': 'Type8', 'valid': True, 'violations': []}


def test_validate_invalid(tmpdir):
    path = tmpdir.join('broken.json')
    path.write(json.dumps({
        'dim': 3, 'name': 'broken', 'brackets': [
            {'i': 1, 'j': 2, 'rhs': [{'k': 3, 'c': '1'}]},
            {'i': 1, 'j': 3, 'rhs': [{'k': 1, 'c': '1'}]},
        ]}))
    status, out, err = call('validate', str(path))
    assert status == 1
    assert out.splitlines() == [
        'broken: 1 Jacobi violations', '  [1,2,3]: -y3']


def test_poisson_tangent():
    obj = call_json('poisson', 'type1', '--tensor', 'c3*y1^y4 + c4*y2^y3')
    assert obj['equations'] == []
    assert obj['wedgeSquare']['terms'] == [
        {'idx': [1, 2, 3, 4], 'c': '2*c3*c4'}]
    status, out, err = call('poisson', 'type1', '--tensor', 'y3^y4')
    assert status == 0
    assert out.splitlines() == [
        '[T, T] = 2*y2^y3^y4',
        'T ^ T = 0',
        'equations (1):',
        '  y2^y3^y4: 1 = 0',
    ]


def test_poisson_form():
    obj = call_json(
        'poisson', 'type8', '--side', 'form',
        '--tensor', 'c2*z1^z3 + c6*z2^z4')
    [equation] = obj['equations']
    assert equation['monomial'] == 'z1^z2^z3^z4^z5'
    c2, c6, u = param('c2'), param('c6'), param('u')
    assert parse_poly(equation['c']) == -2 * c2 * c6 * (1 + u)
    assert 'wedgeSquare' not in obj


def test_betti_table():
    status, out, err = call('betti', 'type1', '--tensor', 'y1^y4 + y2^y3')
    assert status == 0
    lines = out.splitlines()
    assert 'Betti 2 2 2 1' in lines
    assert lines[-1] == 'alternating sum check: 1 = 1'


def test_betti_json():
    obj = call_json(
        'betti', 'type1', '--tensor', 'c3*y1^y4 + c4*y2^y3',
        '--set', 'c3=1', '--set', 'c4=1')
    assert obj['report']['betti'] == [2, 2, 2, 1]
    assert obj['alternatingSum'] == {'lhs': 1, 'rhs': 1, 'equal': True}
    assert [m['label'] for m in obj['matrices']] == [
        'A(1,2)', 'A(2,3)', 'A(3,4)', 'A(4,5)']


def test_betti_form():
    obj = call_json(
        'betti', 'type12', '--side', 'form', '--tensor', 'c4*z4',
        '--set', 'c4=1')
    assert obj['report']['betti'] == [1, 2, 5, 2, 0]
    assert obj['report']['p'] == 2
    assert obj['alternatingSum']['lhs'] == -4


def test_betti_unused_assignment():
    with pytest.warns(UnusedAssignmentWarning):
        status, out, err = call(
            'betti', 'type1', '--tensor', 'y1^y4 + y2^y3', '--set', 'q=1')
    assert status == 0


def test_betti_missing_parameter():
    status, out, err = call('betti', 'type1', '--tensor', 'c3*y1^y4')
    assert status == 1
    assert out == ''
    assert err == (
        'poissonlike: MissingParameter: no value assigned to parameter c3\n')


def test_betti_not_a_complex():
    status, out, err = call(
        'betti', 'type12', '--side', 'form', '--tensor', 'z1')
    assert status == 1
    assert err.startswith('poissonlike: NotAComplex:')


def test_betti_vanishing_tensor():
    obj = call_json('betti', 'type1', '--tensor', 'c1*y1^y2', '--set', 'c1=0')
    assert obj['report']['betti'] == [4, 6, 4, 1]
    assert obj['alternatingSum']['equal']
    obj = call_json(
        'betti', 'type12', '--side', 'form', '--tensor', 'c4*z4',
        '--set', 'c4=0')
    assert obj['report']['betti'] == [1, 4, 6, 4, 1]


def test_betti_vector_tensor():
    status, out, err = call('betti', 'type1', '--tensor', 'y1')
    assert status == 1
    assert out == ''
    assert err.startswith('poissonlike: DegreeMismatch:')


def test_dual_json():
    obj = call_json(
        'dual', 'type1', '--tensor', 'c2*y1^y3 + c3*y1^y4 + c4*y2^y3',
        '--set', 'c2=0', '--set', 'c3=1', '--set', 'c4=1')
    assert obj['bettiDelta']['betti'] == [1, 2, 2, 2, 1]
    assert obj['bettiD']['betti'] == [1, 2, 2, 2, 1]
    assert all(entry['zero'] for entry in obj['anticommutator_residuals'])
    assert [m['label'] for m in obj['delta']][2] == 'delta(2,1)'


def test_dual_vanishing_tensor():
    obj = call_json(
        'dual', 'type1', '--tensor', 'c3*y1^y4 + c4*y2^y3',
        '--set', 'c3=0', '--set', 'c4=0')
    assert obj['bettiDelta']['betti'] == [1, 4, 6, 4, 1]
    assert obj['bettiD']['betti'] == [1, 2, 2, 2, 1]
    for matrix in obj['delta']:
        assert all(entry == '0' for row in matrix['entries'] for entry in row)


def test_dual_symbolic():
    status, out, err = call(
        'dual', 'type2', '--tensor', 'C1*y1^y2 + C2*y1^y3 + C4*y2^y3 + C5*y2^y4',
        '--set', 'a=-1')
    assert status == 0
    lines = out.splitlines()
    assert lines[-1] == 'Betti tables need values for: C1, C2, C4, C5'
    assert 'd o delta:' in lines
    obj = call_json(
        'dual', 'type2', '--tensor', 'C1*y1^y2 + C2*y1^y3 + C4*y2^y3 + C5*y2^y4',
        '--set', 'a=-1')
    assert obj['bettiD'] is None
    assert obj['dAfterDelta'][2]['zero'] is False
    assert obj['anticommutator_residuals'][2]['zero'] is False
    assert obj['deltaAfterD'][2]['zero'] is True


def test_polyfield_dims():
    assert call('polyfield', 'dims', '--n', '4', '--k', '2', '--m', '2') == (
        0, '60\n', '')
    obj = call_json('polyfield', 'dims', '--n', '4', '--k', '3', '--m', '3')
    assert obj['dim'] == 80


def test_polyfield_betti():
    obj = call_json(
        'polyfield', 'betti', '--tensor-file', 'mytgt', '--dual',
        '--set', 'C7=1')
    assert obj['h'] == 2
    assert obj['report']['betti'] == [1, 6, 15, 10]
    assert obj['report']['dims'] == [4, 24, 40, 20]
    assert obj['dual']['betti'] == obj['report']['betti']


def test_polyfield_betti_table():
    status, out, err = call(
        'polyfield', 'betti', '--tensor-file', 'mytgt', '--set', 'C7=1')
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == 'd_pi'
    assert 'Betti 1  6 15 10' in lines


def test_polyfield_system():
    status, out, err = call(
        'polyfield', 'system', '--n', '4', '--h', '2', '--m', '2',
        '--solution', 'mytgt_solution')
    assert status == 0
    assert out.splitlines() == [
        'parameters: 60',
        'target dimension: 80',
        'equations (0):',
        '  (none)',
    ]
    obj = call_json('polyfield', 'system', '--n', '4', '--h', '2', '--m', '2')
    assert obj['targetDim'] == 80
    assert obj['count'] == len(obj['equations']) > 0


@pytest.mark.parametrize('args', [
    ('validate',),
    ('frobnicate', 'type1'),
    ('betti', 'type1'),
    ('betti', 'type1', '--tensor', 'y1^y2', '--set', 'c1'),
    ('betti', 'type1', '--tensor', 'y1^y2', '--side', 'sideways'),
    ('polyfield', 'dims', '--n', 'four', '--k', '1', '--m', '1'),
    ('validate', 'no-such-algebra'),
    ('betti', 'type1', '--tensor', 'y1 +'),
    ('betti', 'type1', '--tensor', 'y1^y5'),
    ('dual', 'type1', '--tensor', 'y1^y5'),
])
def test_usage_errors(args):
    status, out, err = call(*args)
    assert status == 2
    assert out == ''
    assert err


def test_help():
    with mock.patch('sys.stdout', new_callable=io.StringIO) as stdout:
        status, out, err = call('--help')
    assert status == 0
    assert 'polyfield' in stdout.getvalue()


def test_main():
    with mock.patch('poissonlike.cli.run', return_value=3) as run_mock:
        with pytest.raises(SystemExit) as exc:
            main()
    assert exc.value.code == 3
    assert run_mock.call_args == mock.call()


def test_abelian_validates():
    status, out, err = call('validate', 'abelian3')
    assert status == 0
    assert out.endswith('Jacobi identity holds\n')


def test_small_dims():
    assert call('polyfield', 'dims', '--n', '4', '--k', '1', '--m', '2') == (
        0, '24\n', '')


@pytest.mark.parametrize('args', [
    ('validate', 'type2'),
    ('poisson', 'type1', '--tensor', 'c3*y1^y4 + c4*y2^y3'),
    ('betti', 'type1', '--tensor', 'y1^y4 + y2^y3'),
    ('dual', 'type1', '--tensor', 'y1^y4 + y2^y3'),
    ('polyfield', 'betti', '--tensor-file', 'mytgt', '--set', 'C7=1'),
])
def test_json_reserializes(args):
    status, out, err = call(*(args + ('--format', 'json')))
    assert status == 0
    assert dumps(json.loads(out)) + '\n' == out


def test_table_agrees_with_json():
    args = ('betti', 'type1', '--tensor', 'y1^y4 + y2^y3')
    report = call_json(*args)['report']
    status, out, err = call(*args)
    rows = {
        line.split()[0]: [int(v) for v in line.split()[1:]]
        for line in out.splitlines()
        if line.split() and line.split()[0] in ('Dim', 'Rank', 'Betti')
    }
    assert rows == {
        'Dim': report['dims'],
        'Rank': report['ranks'],
        'Betti': report['betti'],
    }
