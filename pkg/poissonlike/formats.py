# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"""
Defines the conversions between the text formats used by poissonlike and the
in-memory types: the polynomial and element literal parsers
(:func:`parse_poly`, :func:`parse_element`, :func:`parse_poly_multivector`),
the JSON codecs for elements, tensors, matrices and reports, and the
human-readable tables printed by the command line interface.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
)

import io
import os
import re
import json
import numbers
from fractions import Fraction

from .exc import ParseError, IndexOutOfRange
from .scalars import ParamPoly, const, param, format_poly, format_rational
from .exterior import (
    TANGENT,
    COTANGENT,
    SPACES,
    ExteriorElement,
    sort_sign,
)
from .polyfield import PolyMultiVector

# Make Py2's str equivalent to Py3's
str = type('')  # pylint: disable=redefined-builtin,invalid-name


_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))')
_GENERATOR = re.compile(r'^([yz])(\d+)$')
_COORDINATE = re.compile(r'^x(\d+)$')


class _Value(object):
    # A sparse sum of (coordinate monomial, multi-index) terms; coordinate
    # monomials are sorted tuples of (coordinate, exponent) pairs.
    __slots__ = ('terms', 'space')

    def __init__(self, terms=None, space=None):
        self.terms = terms or {}
        self.space = space

    def _merge_space(self, other, column):
        if self.space and other.space and self.space != other.space:
            raise ParseError(
                'literal mixes tangent and cotangent generators',
                column=column)
        return self.space or other.space

    def add(self, other, column):
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, const(0)) + coeff
        return _Value(
            {k: v for k, v in terms.items() if v},
            self._merge_space(other, column))

    def neg(self):
        return _Value(
            {key: -coeff for key, coeff in self.terms.items()}, self.space)

    def mul(self, other, column):
        space = self._merge_space(other, column)
        terms = {}
        for (xa, ia), ca in self.terms.items():
            for (xb, ib), cb in other.terms.items():
                sign, idx = sort_sign(ia + ib)
                if not sign:
                    continue
                exps = dict(xa)
                for coord, exp in xb:
                    exps[coord] = exps.get(coord, 0) + exp
                key = (tuple(sorted(exps.items())), idx)
                terms[key] = terms.get(key, const(0)) + sign * ca * cb
        return _Value({k: v for k, v in terms.items() if v}, space)

    def power(self, exponent, column):
        result = _Value({((), ()): const(1)})
        for _ in range(exponent):
            result = result.mul(self, column)
        return result


class _Parser(object):
    def __init__(self, text, generators=False, coordinates=False):
        self.text = text
        self.generators = generators
        self.coordinates = coordinates
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            number, ident, op = match.groups()
            column = match.start(match.lastindex) + 1
            if number is not None:
                self.tokens.append(('num', int(number), column))
            elif ident is not None:
                self.tokens.append(('id', ident, column))
            elif op in '+-*^/()':
                self.tokens.append((op, op, column))
            else:
                raise ParseError('unexpected character %r' % op, column=column)
            pos = match.end()
        self.tokens.append(('end', None, len(text) + 1))
        self.pos = 0

    def peek(self, offset=0):
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def take(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind):
        token = self.take()
        if token[0] != kind:
            raise ParseError(
                'expected %s but found %s' % (kind, token[0]),
                column=token[2])
        return token

    def parse(self):
        if self.peek()[0] == 'end':
            raise ParseError('empty literal', column=1)
        value = self.expr()
        token = self.peek()
        if token[0] != 'end':
            raise ParseError('unexpected %r' % (token[1],), column=token[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ('+', '-'):
            op, _, column = self.take()
            rhs = self.term()
            value = value.add(rhs if op == '+' else rhs.neg(), column)
        return value

    def term(self):
        value = self.unary()
        while (
                self.peek()[0] == '*' or
                (self.peek()[0] == '^' and self.peek(1)[0] != 'num')):
            _, _, column = self.take()
            value = value.mul(self.unary(), column)
        return value

    def unary(self):
        kind = self.peek()[0]
        if kind == '-':
            self.take()
            return self.unary().neg()
        elif kind == '+':
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        value = self.atom()
        while self.peek()[0] == '^' and self.peek(1)[0] == 'num':
            _, _, column = self.take()
            _, exponent, _ = self.take()
            value = value.power(exponent, column)
        return value

    def atom(self):
        kind, value, column = self.take()
        if kind == 'num':
            if self.peek()[0] == '/':
                self.take()
                _, denominator, den_column = self.expect('num')
                if not denominator:
                    raise ParseError('zero denominator', column=den_column)
                return _Value({((), ()): const(Fraction(value, denominator))})
            return _Value({((), ()): const(value)})
        elif kind == 'id':
            return self.identifier(value, column)
        elif kind == '(':
            result = self.expr()
            self.expect(')')
            return result
        elif kind == '/':
            raise ParseError(
                'division is only supported between integer literals',
                column=column)
        elif kind == 'end':
            raise ParseError('unexpected end of literal', column=column)
        raise ParseError('unexpected %r' % (value,), column=column)

    def identifier(self, name, column):
        if self.generators:
            match = _GENERATOR.match(name)
            if match:
                index = int(match.group(2))
                if index < 1:
                    raise ParseError(
                        'generator %s is not 1-based' % name, column=column)
                space = TANGENT if match.group(1) == 'y' else COTANGENT
                return _Value({((), (index,)): const(1)}, space)
        if self.coordinates:
            match = _COORDINATE.match(name)
            if match:
                index = int(match.group(1))
                if index < 1:
                    raise ParseError(
                        'coordinate %s is not 1-based' % name, column=column)
                return _Value({(((index, 1),), ()): const(1)})
        return _Value({((), ()): param(name)})


def parse_poly(text):
    """
    Parse a polynomial literal such as ``"-c2*c6 + c4*c5"`` or ``"5/2*u^2"``
    into a :class:`~poissonlike.scalars.ParamPoly`. Every identifier is a
    parameter. Integers and :class:`~fractions.Fraction` values are accepted
    as-is (JSON files may carry bare numbers).
    """
    if isinstance(text, ParamPoly):
        return text
    if isinstance(text, numbers.Rational) and not isinstance(text, bool):
        return const(text)
    if not isinstance(text, str):
        raise ParseError('expected a polynomial literal, not %r' % (text,))
    value = _Parser(text).parse()
    return value.terms.get(((), ()), const(0))


def _max_index(value):
    result = 0
    for xmono, idx in value.terms:
        if idx:
            result = max(result, idx[-1])
        for coord, _ in xmono:
            result = max(result, coord)
    return result


def parse_element(text, space=None, n=None):
    """
    Parse an element literal such as ``"c1*y1^y2 + c4*y2^y3"`` or
    ``"z1^z3"`` into an :class:`~poissonlike.exterior.ExteriorElement`.
    Generators ``y<i>`` are tangent and ``z<i>`` cotangent; ``^`` (or ``*``)
    is the wedge product and ``^`` followed by an integer is a power.

    If *space* is given the literal must agree with it (a literal with no
    generators at all is a scalar of *space*). *n* defaults to the largest
    generator index present.
    """
    value = _Parser(text, generators=True).parse()
    if space is not None and value.space not in (None, space):
        raise ParseError(
            'literal %r is not a %s element' % (text, space))
    space = space or value.space or TANGENT
    top = _max_index(value)
    if n is None:
        n = top
    elif top > n:
        raise IndexOutOfRange(top, n)
    return ExteriorElement(
        space, n, {idx: coeff for (_, idx), coeff in value.terms.items()})


def parse_poly_multivector(text, n=None, side=None):
    """
    Parse a polynomial multivector literal such as
    ``"(x1 + C7*x2)*x4*y1^y2 - x4^2*y3^y4"`` into a
    :class:`~poissonlike.polyfield.PolyMultiVector`. Coordinates are
    ``x<i>``; frames are ``y<i>`` (tangent side) or ``z<i>`` (cotangent
    side).
    """
    value = _Parser(text, generators=True, coordinates=True).parse()
    if side is not None and value.space not in (None, side):
        raise ParseError(
            'literal %r is not a %s field' % (text, side))
    side = side or value.space or TANGENT
    top = _max_index(value)
    if n is None:
        n = top
    elif top > n:
        raise IndexOutOfRange(top, n)
    terms = {}
    for (xmono, idx), coeff in value.terms.items():
        exps = [0] * n
        for coord, exp in xmono:
            exps[coord - 1] = exp
        terms[(tuple(exps), idx)] = coeff
    return PolyMultiVector(n, side, terms)


def dumps(obj):
    """
    Serialize a JSON-compatible *obj* deterministically (sorted keys, two
    space indent). Re-serializing the parsed output yields identical text.
    """
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def load_json(text, what='document'):
    "Parse JSON *text*, converting syntax errors to :exc:`ParseError`."
    try:
        return json.loads(text)
    except ValueError as exc:
        raise ParseError(
            'invalid JSON in %s: %s' % (what, getattr(exc, 'msg', exc)),
            line=getattr(exc, 'lineno', None),
            column=getattr(exc, 'colno', None))


def fixture_path(name):
    """
    Return the path of the packaged fixture *name* (with or without the
    ``.json`` suffix), or :data:`None` if there is no such fixture.
    """
    base = os.path.join(os.path.dirname(__file__), 'fixtures')
    for candidate in (name, name + '.json'):
        path = os.path.join(base, os.path.basename(candidate))
        if os.path.isfile(path):
            return path
    return None


def read_source(source):
    """
    Return the text of *source*, which is either the path of an existing file
    or the name of a packaged fixture (``type1``, ``mytgt.json``).
    """
    if os.path.isfile(source):
        path = source
    else:
        path = fixture_path(source)
        if path is None:
            raise IOError('no such file or fixture: %s' % source)
    with io.open(path, 'r', encoding='utf-8') as f:
        return f.read()


def element_to_json(element):
    "Return the JSON-compatible form of an :class:`ExteriorElement`."
    return {
        'space': element.space,
        'dim': element.n,
        'terms': [
            {'idx': list(idx), 'c': format_poly(coeff)}
            for idx, coeff in element.items()
        ],
    }


def element_from_json(obj, n=None):
    "The inverse of :func:`element_to_json`."
    try:
        space = obj['space']
        terms = obj['terms']
    except (KeyError, TypeError):
        raise ParseError('element must have "space" and "terms" keys')
    if space not in SPACES:
        raise ParseError('unknown space %r' % (space,))
    n = obj.get('dim', n)
    result = {}
    for term in terms:
        sign, idx = sort_sign(term['idx'])
        if not sign:
            continue
        result[idx] = result.get(idx, const(0)) + sign * parse_poly(term['c'])
    if n is None:
        n = max((idx[-1] for idx in result if idx), default=0)
    return ExteriorElement(space, n, result)


def tensor_to_json(field):
    "Return the JSON-compatible form of a :class:`PolyMultiVector`."
    return {
        'n': field.n,
        'side': field.side,
        'terms': [
            {'x': list(exps), 'idx': list(idx), 'c': format_poly(coeff)}
            for (exps, idx), coeff in field.items()
        ],
    }


def tensor_from_json(obj):
    "The inverse of :func:`tensor_to_json`."
    try:
        n = obj['n']
        side = obj.get('side', TANGENT)
        terms = obj['terms']
    except (KeyError, TypeError, AttributeError):
        raise ParseError('tensor must have "n" and "terms" keys')
    if side not in SPACES:
        raise ParseError('unknown side %r' % (side,))
    result = {}
    for number, term in enumerate(terms, start=1):
        try:
            exps = tuple(term['x'])
            raw_idx = term['idx']
            coeff = parse_poly(term['c'])
        except (KeyError, TypeError):
            raise ParseError(
                'tensor term %d needs "x", "idx" and "c" keys' % number)
        if len(exps) != n:
            raise ParseError(
                'tensor term %d has %d exponents for n=%d' % (
                    number, len(exps), n))
        for i in raw_idx:
            if not 1 <= i <= n:
                raise IndexOutOfRange(i, n)
        sign, idx = sort_sign(raw_idx)
        if not sign:
            continue
        key = (exps, idx)
        result[key] = result.get(key, const(0)) + sign * coeff
    return PolyMultiVector(n, side, result)


def load_tensor(source):
    "Load a tensor file (or packaged fixture) as a :class:`PolyMultiVector`."
    return tensor_from_json(load_json(read_source(source), source))


def matrix_to_json(matrix):
    "Return the JSON-compatible form of an OperatorMatrix."
    return {
        'label': matrix.label,
        'rows': [str(label) for label in matrix.row_labels()],
        'cols': [str(label) for label in matrix.col_labels()],
        'entries': [
            [format_poly(entry) for entry in row]
            for row in matrix.entries.tolist()
        ],
    }


def report_to_json(report):
    "Return the JSON-compatible form of a BettiReport."
    return {
        'degrees': list(report.degrees),
        'dims': list(report.dims),
        'ranks': list(report.ranks),
        'betti': list(report.betti),
        'p': report.p,
        'altBettiSum': report.alt_betti_sum,
        'altDimSum': report.alt_dim_sum,
        'labels': list(report.labels),
        'windows': [
            {'k': k, 'grades': list(grades)} for k, grades in report.windows
        ],
    }


def format_table(report, title=None):
    """
    Return *report* as the ``Dim / Rank / Betti`` table, one column per
    degree.
    """
    header = [''] + [str(d) for d in report.degrees]
    rows = [
        ['Dim'] + [str(v) for v in report.dims],
        ['Rank'] + [str(v) for v in report.ranks],
        ['Betti'] + [str(v) for v in report.betti],
    ]
    widths = [
        max(len(row[col]) for row in [header] + rows)
        for col in range(len(header))
    ]
    lines = []
    if title:
        lines.append(title)
    for row in [header] + rows:
        lines.append(' '.join(
            cell.rjust(width) for cell, width in zip(row, widths)).rstrip())
    lines.append('alternating sums: betti %d, dims %d' % (
        report.alt_betti_sum, report.alt_dim_sum))
    return '\n'.join(lines)


def format_matrix(matrix):
    "Return a plain text rendering of an OperatorMatrix."
    cells = [
        [format_poly(entry) for entry in row]
        for row in matrix.entries.tolist()
    ]
    lines = ['%s: %d x %d' % (matrix.label, matrix.shape[0], matrix.shape[1])]
    if cells and cells[0]:
        width = max(len(cell) for row in cells for cell in row)
        for label, row in zip(matrix.row_labels(), cells):
            lines.append('  %s | %s' % (
                label, ' '.join(cell.rjust(width) for cell in row)))
    return '\n'.join(lines)


def format_rationals(values):
    "Format a sequence of rationals as a tuple literal."
    return '(%s)' % ', '.join(format_rational(v) for v in values)


_ASSIGNMENT = re.compile(r'^\s*([A-Za-z_][A-Za-z_0-9]*)\s*=\s*(.+?)\s*$')


def parse_assignment(items):
    """
    Parse ``name=value`` strings (as given to ``--set``) into a mapping of
    parameter names to :class:`~fractions.Fraction` values. Values are
    integers or ``n/d`` rationals.
    """
    result = {}
    for item in items:
        match = _ASSIGNMENT.match(item)
        if not match:
            raise ParseError('expected name=value, not %r' % (item,))
        name, text = match.groups()
        try:
            value = parse_poly(text).to_fraction()
        except ValueError:
            raise ParseError(
                'value of %s must be a rational number, not %r' % (name, text))
        result[name] = value
    return result


def solution_from_json(obj):
    """
    Read a solution document ``{"assignments": {"C1": "0", ...}}`` into a
    mapping of parameter names to polynomials. Parameters listed under
    ``"free"`` stay symbolic.
    """
    try:
        assignments = obj['assignments']
    except (KeyError, TypeError):
        raise ParseError('solution must have an "assignments" object')
    if not isinstance(assignments, dict):
        raise ParseError('"assignments" must be an object')
    free = set(obj.get('free', ()))
    clash = free & set(assignments)
    if clash:
        raise ParseError('%s is both free and assigned' % sorted(clash)[0])
    return {name: parse_poly(value) for name, value in assignments.items()}


def load_solution(source):
    "Load a solution file (or packaged fixture); see :func:`solution_from_json`."
    return solution_from_json(load_json(read_source(source), source))


def axiom_report_to_json(report):
    "Return the JSON-compatible form of an AxiomReport."
    return {
        'name': report.name,
        'valid': report.valid,
        'violations': [
            {
                'i': v.i, 'j': v.j, 'k': v.k,
                'residual': element_to_json(v.residual),
            }
            for v in report.violations
        ],
    }


def system_to_json(system):
    "Return the JSON-compatible form of a PoissonSystem."
    return {
        'targetDim': system.target_dim,
        'count': system.count,
        'equations': [
            {'monomial': label, 'c': format_poly(poly)}
            for label, poly in system.equations
        ],
    }


def double_complex_to_json(report):
    "Return the JSON-compatible form of a DoubleComplexReport."
    def residuals(matrices):
        return [
            {
                'label': matrix.label,
                'source': matrix.source,
                'zero': matrix.is_zero(),
                'matrix': matrix_to_json(matrix),
            }
            for matrix in matrices
        ]

    return {
        'bettiD': (
            None if report.betti_d is None else
            report_to_json(report.betti_d)),
        'bettiDelta': (
            None if report.betti_delta is None else
            report_to_json(report.betti_delta)),
        'deltaAfterD': residuals(report.delta_d),
        'dAfterDelta': residuals(report.d_delta),
        'anticommutator_residuals': residuals(report.anticommutator),
    }
