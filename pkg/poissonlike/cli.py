# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"""
The ``poissonlike`` command line interface. :func:`run` parses *argv* into a
:class:`RunConfig`, dispatches to one of the subcommands and returns the
exit status: 0 on success, 1 when the mathematics fails (a tensor that is not
Poisson, a missing parameter value, an algebra violating Jacobi) and 2 on
usage errors (bad arguments, unreadable files, malformed literals).
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
)

import sys
import logging
import argparse
import warnings
from collections import namedtuple

from .exc import (
    ParseError,
    IndexOutOfRange,
    PoissonLikeError,
    UnusedAssignmentWarning,
)
from .scalars import format_poly
from .exterior import TANGENT, COTANGENT, format_monomial
from .formats import (
    parse_element,
    parse_assignment,
    load_tensor,
    load_solution,
    dumps,
    element_to_json,
    matrix_to_json,
    report_to_json,
    axiom_report_to_json,
    system_to_json,
    double_complex_to_json,
    format_table,
    format_matrix,
)
from .liealg import load_algebra, validate
from .schouten import poisson_residual, wedge_square
from .forms import form_bracket
from .cohomology import (
    tangent_complex,
    form_complex,
    alternating_sum_check,
    d_squared_check,
)
from .duality import dual_operator, double_complex_report
from .polyfield import (
    dim_Ckm,
    poly_betti,
    volume_dual_betti,
    general_param_tensor,
    poisson_system,
)

# Make Py2's str equivalent to Py3's
str = type('')  # pylint: disable=redefined-builtin,invalid-name

logger = logging.getLogger(__name__)

SIDES = {'tangent': TANGENT, 'form': COTANGENT}


class RunConfig(namedtuple('RunConfig', (
        'command',
        'action',
        'algebra',
        'tensor',
        'tensor_file',
        'side',
        'assignment',
        'output_format',
        'n',
        'k',
        'm',
        'h',
        'dual',
        'solution',
))):
    """
    A :func:`~collections.namedtuple` holding one parsed invocation.
    *assignment* maps parameter names to :class:`~fractions.Fraction`
    values; *side* is ``'tangent'`` or ``'cotangent'``.
    """
    __slots__ = ()


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError('%s: error: %s' % (self.prog, message))


def _common(parser):
    parser.add_argument(
        '--format', dest='output_format', choices=('table', 'json'),
        default='table', help='output format (default: %(default)s)')
    parser.add_argument(
        '-v', '--verbose', action='count', default=0,
        help='log progress to stderr; repeat for debug output')
    parser.add_argument(
        '-q', '--quiet', action='store_true',
        help='only log errors')


def _assignments(parser):
    parser.add_argument(
        '--set', dest='assignment', action='append', default=[],
        metavar='NAME=VALUE',
        help='assign a rational value to a parameter; may be repeated')


def build_parser():
    "Return the :class:`argparse.ArgumentParser` for :func:`run`."
    parser = _Parser(
        prog='poissonlike',
        description='Poisson-like cohomology of Lie superalgebras')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    sub = commands.add_parser(
        'validate', help='check the Jacobi identity of an algebra')
    sub.add_argument('algebra', help='algebra file or fixture name')
    _common(sub)

    sub = commands.add_parser(
        'poisson', help='compute [T, T] and the Poisson conditions')
    sub.add_argument('algebra', help='algebra file or fixture name')
    sub.add_argument('--tensor', required=True, help='element literal')
    sub.add_argument(
        '--side', choices=sorted(SIDES), default='tangent',
        help='multivectors or forms (default: %(default)s)')
    _common(sub)

    sub = commands.add_parser(
        'betti', help='matrices, ranks and Betti numbers of d_T')
    sub.add_argument('algebra', help='algebra file or fixture name')
    sub.add_argument('--tensor', required=True, help='element literal')
    sub.add_argument(
        '--side', choices=sorted(SIDES), default='tangent',
        help='multivectors or forms (default: %(default)s)')
    _assignments(sub)
    _common(sub)

    sub = commands.add_parser(
        'dual', help='the dual operator delta against the de Rham d')
    sub.add_argument('algebra', help='algebra file or fixture name')
    sub.add_argument('--tensor', required=True, help='multivector literal')
    _assignments(sub)
    _common(sub)

    sub = commands.add_parser(
        'polyfield', help='polynomial coefficient multivector fields on R^n')
    actions = sub.add_subparsers(dest='action', metavar='action')
    actions.required = True

    act = actions.add_parser('dims', help='dimension of C_k^m')
    act.add_argument('--n', type=int, required=True)
    act.add_argument('--k', type=int, required=True)
    act.add_argument('--m', type=int, required=True)
    _common(act)

    act = actions.add_parser('betti', help='Betti table of a tensor file')
    act.add_argument(
        '--tensor-file', required=True, help='tensor file or fixture name')
    act.add_argument(
        '--dual', action='store_true',
        help='also print the volume dual table')
    _assignments(act)
    _common(act)

    act = actions.add_parser(
        'system', help='Poisson conditions of the general tensor')
    act.add_argument('--n', type=int, required=True)
    act.add_argument('--h', type=int, required=True)
    act.add_argument('--m', type=int, required=True)
    act.add_argument(
        '--solution', default=None,
        help='solution file or fixture name to substitute')
    _assignments(act)
    _common(act)
    return parser


def parse_config(argv):
    """
    Parse *argv* into a :class:`RunConfig` and the requested log level.
    Raises :exc:`~poissonlike.exc.ParseError` for a malformed ``--set``.
    """
    args = build_parser().parse_args(argv)
    if args.quiet:
        level = logging.ERROR
    elif args.verbose > 1:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    else:
        level = logging.WARNING
    side = getattr(args, 'side', 'tangent')
    config = RunConfig(
        command=args.command,
        action=getattr(args, 'action', None),
        algebra=getattr(args, 'algebra', None),
        tensor=getattr(args, 'tensor', None),
        tensor_file=getattr(args, 'tensor_file', None),
        side=SIDES[side],
        assignment=parse_assignment(getattr(args, 'assignment', [])),
        output_format=args.output_format,
        n=getattr(args, 'n', None),
        k=getattr(args, 'k', None),
        m=getattr(args, 'm', None),
        h=getattr(args, 'h', None),
        dual=getattr(args, 'dual', False),
        solution=getattr(args, 'solution', None),
    )
    return config, level


def _check_unused(assignment, *objects):
    used = set()
    for obj in objects:
        used.update(obj.parameters)
    unused = sorted(set(assignment) - used)
    if unused:
        warnings.warn(UnusedAssignmentWarning(
            'assigned parameters never occur: %s' % ', '.join(unused)))


def _equations(element):
    return [
        (format_monomial(element.space, idx), coeff)
        for idx, coeff in element.items()
    ]


def _equations_json(equations):
    return [
        {'monomial': label, 'c': format_poly(coeff)}
        for label, coeff in equations
    ]


def _equations_table(equations):
    if not equations:
        return ['  (none)']
    width = max(len(label) for label, _ in equations)
    return [
        '  %s: %s = 0' % (label.ljust(width), format_poly(coeff))
        for label, coeff in equations
    ]


def do_validate(config):
    L = load_algebra(config.algebra)
    report = validate(L)
    if config.output_format == 'json':
        output = dumps(axiom_report_to_json(report))
    elif report.valid:
        output = '%s: Jacobi identity holds' % (report.name or config.algebra)
    else:
        lines = ['%s: %d Jacobi violations' % (
            report.name or config.algebra, len(report.violations))]
        lines.extend(
            '  [%d,%d,%d]: %s' % (v.i, v.j, v.k, v.residual)
            for v in report.violations)
        output = '\n'.join(lines)
    return (0 if report.valid else 1), output


def do_poisson(config):
    L = load_algebra(config.algebra)
    T = parse_element(config.tensor, config.side, L.n)
    if config.side == TANGENT:
        residual = poisson_residual(L, T)
        equations = [
            (label, coeff / 2) for label, coeff in _equations(residual)]
        square = wedge_square(T)
    else:
        residual = form_bracket(L, T, T)
        equations = _equations(residual)
        square = None
    if config.output_format == 'json':
        obj = {
            'tensor': element_to_json(T),
            'residual': element_to_json(residual),
            'equations': _equations_json(equations),
        }
        if square is not None:
            obj['wedgeSquare'] = element_to_json(square)
        return 0, dumps(obj)
    lines = ['[T, T] = %s' % residual]
    if square is not None:
        lines.append('T ^ T = %s' % square)
    lines.append('equations (%d):' % len(equations))
    lines.extend(_equations_table(equations))
    return 0, '\n'.join(lines)


def do_betti(config):
    L = load_algebra(config.algebra)
    T = parse_element(config.tensor, config.side, L.n)
    assignment = config.assignment
    _check_unused(assignment, L, T)
    degree = T.degree
    if assignment:
        L = L.subs(assignment)
        T = T.subs(assignment)
    if config.side == TANGENT:
        complex_ = tangent_complex(L, T, degree)
    else:
        complex_ = form_complex(L, T, degree)
    report = complex_.betti(assignment)
    check = alternating_sum_check(report)
    if config.output_format == 'json':
        return 0, dumps({
            'matrices': [matrix_to_json(m) for m in complex_.matrices],
            'report': report_to_json(report),
            'alternatingSum': {
                'lhs': check.lhs, 'rhs': check.rhs, 'equal': check.equal},
        })
    lines = [format_matrix(m) for m in complex_.matrices]
    lines.append(format_table(report, title='Betti numbers (p=%d)' % report.p))
    lines.append('alternating sum check: %d = %d' % (check.lhs, check.rhs))
    return 0, '\n'.join(lines)


def _residual_lines(title, matrices):
    lines = [title]
    for matrix in matrices:
        if matrix.is_zero():
            lines.append('  %s: 0' % matrix.label)
        else:
            lines.extend(
                '  ' + line for line in format_matrix(matrix).splitlines())
    return lines


def do_dual(config):
    L = load_algebra(config.algebra)
    pi = parse_element(config.tensor, TANGENT, L.n)
    assignment = config.assignment
    _check_unused(assignment, L, pi)
    degree = pi.degree
    if assignment:
        L = L.subs(assignment)
        pi = pi.subs(assignment)
    delta = dual_operator(L, pi, degree)
    report = double_complex_report(L, pi, assignment, degree)
    squares = d_squared_check(delta, 1 - degree)
    if config.output_format == 'json':
        obj = double_complex_to_json(report)
        obj['delta'] = [matrix_to_json(m) for m in delta]
        obj['deltaSquared'] = [matrix_to_json(m) for m in squares]
        return 0, dumps(obj)
    lines = [format_matrix(m) for m in delta]
    lines.extend(_residual_lines('delta o delta:', squares))
    lines.extend(_residual_lines('delta o d:', report.delta_d))
    lines.extend(_residual_lines('d o delta:', report.d_delta))
    lines.extend(_residual_lines(
        'delta o d + d o delta:', report.anticommutator))
    if report.betti_d is None:
        lines.append('Betti tables need values for: %s' % ', '.join(
            sorted(set(L.parameters) | set(pi.parameters))))
    else:
        lines.append(format_table(report.betti_d, title='de Rham d'))
        lines.append(format_table(report.betti_delta, title='delta'))
    return 0, '\n'.join(lines)


def do_polyfield_dims(config):
    value = dim_Ckm(config.n, config.k, config.m)
    if config.output_format == 'json':
        return 0, dumps({
            'n': config.n, 'k': config.k, 'm': config.m, 'dim': value})
    return 0, str(value)


def do_polyfield_betti(config):
    pi = load_tensor(config.tensor_file)
    bidegrees = pi.bidegrees()
    if len(bidegrees) != 1:
        raise ParseError(
            'tensor file must hold a bihomogeneous tensor, not bidegrees %r'
            % (bidegrees,))
    h, _ = bidegrees[0]
    _check_unused(config.assignment, pi)
    report = poly_betti(pi, h, assignment=config.assignment)
    dual = None
    if config.dual:
        dual = volume_dual_betti(pi, h, assignment=config.assignment)
    if config.output_format == 'json':
        obj = {'h': h, 'report': report_to_json(report)}
        if dual is not None:
            obj['dual'] = report_to_json(dual)
        return 0, dumps(obj)
    lines = [format_table(report, title='d_pi')]
    if dual is not None:
        lines.append(format_table(dual, title='volume dual'))
    return 0, '\n'.join(lines)


def do_polyfield_system(config):
    pi = general_param_tensor(config.n, config.h, config.m)
    system = poisson_system(pi, config.h, config.m)
    assignment = dict(config.assignment)
    if config.solution:
        assignment.update(load_solution(config.solution))
    if assignment:
        _check_unused(assignment, pi)
        system = system.subs(assignment)
    if config.output_format == 'json':
        return 0, dumps(system_to_json(system))
    lines = [
        'parameters: %d' % len(pi.parameters),
        'target dimension: %d' % system.target_dim,
        'equations (%d):' % system.count,
    ]
    lines.extend(_equations_table(system.equations))
    return 0, '\n'.join(lines)


COMMANDS = {
    ('validate', None): do_validate,
    ('poisson', None): do_poisson,
    ('betti', None): do_betti,
    ('dual', None): do_dual,
    ('polyfield', 'dims'): do_polyfield_dims,
    ('polyfield', 'betti'): do_polyfield_betti,
    ('polyfield', 'system'): do_polyfield_system,
}


def run(argv=None, stdout=None, stderr=None):
    """
    Run the command line *argv* (default :data:`sys.argv` without the
    program name), writing the report to *stdout*. Returns the exit status.
    """
    if argv is None:
        argv = sys.argv[1:]
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        config, level = parse_config(argv)
    except _UsageError as exc:
        stderr.write('%s\n' % exc)
        return 2
    except ParseError as exc:
        stderr.write('poissonlike: error: %s\n' % exc)
        return 2
    except SystemExit as exc:
        # --help
        return exc.code or 0
    logging.basicConfig(
        level=level, stream=stderr,
        format='%(levelname)s %(name)s: %(message)s')
    logger.debug('config: %r', config)
    handler = COMMANDS[(config.command, config.action)]
    try:
        status, output = handler(config)
    except (ParseError, IndexOutOfRange, IOError) as exc:
        stderr.write('poissonlike: error: %s\n' % exc)
        return 2
    except PoissonLikeError as exc:
        stderr.write('poissonlike: %s: %s\n' % (type(exc).__name__, exc))
        return 1
    except ValueError as exc:
        stderr.write('poissonlike: error: %s\n' % exc)
        return 2
    stdout.write(output)
    stdout.write('\n')
    return status


def main():
    "Console script entry point."
    sys.exit(run())
