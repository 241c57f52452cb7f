# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"""
Defines the :class:`LieAlgebra` class, the :class:`AxiomReport` and
:class:`JacobiViolation` tuples, and the functions for loading algebras from
structure constant files (:func:`parse_algebra`, :func:`load_algebra`),
checking them (:func:`validate`), and bracketing vectors (:func:`bracket`).
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
)

import numbers
from collections import namedtuple
from itertools import combinations

from .exc import ParseError, IndexOutOfRange, DegreeMismatch, SpaceMismatch
from .scalars import as_poly, const, format_poly
from .exterior import TANGENT, ExteriorElement
from .formats import parse_poly, load_json, read_source

# Make Py2's str equivalent to Py3's
str = type('')  # pylint: disable=redefined-builtin,invalid-name


class JacobiViolation(namedtuple('JacobiViolation', ('i', 'j', 'k', 'residual'))):
    """
    A :func:`~collections.namedtuple` recording a basis triple whose Jacobi
    expression ``[[y_i,y_j],y_k] + [[y_j,y_k],y_i] + [[y_k,y_i],y_j]`` does
    not vanish identically. *residual* is the offending
    :class:`~poissonlike.exterior.ExteriorElement`.
    """
    __slots__ = ()

    def __repr__(self):
        return 'JacobiViolation(i=%d, j=%d, k=%d, residual=%s)' % self


class AxiomReport(namedtuple('AxiomReport', ('name', 'violations'))):
    """
    A :func:`~collections.namedtuple` returned by :func:`validate`. The
    *violations* field is a tuple of :class:`JacobiViolation`, empty precisely
    when the algebra is a Lie algebra for every value of its parameters.
    """
    __slots__ = ()

    @property
    def valid(self):
        return not self.violations


class LieAlgebra(object):
    """
    A finite-dimensional Lie algebra given by structure constants.

    *n* is the dimension. *structure* maps pairs ``(i, j)`` of 1-based basis
    indices to the expansion of ``[y_i, y_j]``, either as a mapping
    ``{k: coefficient}`` or as a sequence of ``(k, coefficient)`` pairs.
    Pairs with ``i > j`` are stored negated as ``(j, i)``; absent pairs
    bracket to zero. Coefficients may be rationals or
    :class:`~poissonlike.scalars.ParamPoly` values, so parametric families are
    supported directly.

    The optional *name*, *basis_names* (default ``y1..yn``) and *parameters*
    (the declared parameter names) are carried along for reporting.
    """

    __slots__ = ('_n', '_name', '_basis_names', '_structure', '_parameters')

    def __init__(self, n, structure=None, name=None, basis_names=None,
                 parameters=()):
        if not isinstance(n, numbers.Integral) or n < 1:
            raise ValueError('dimension must be a positive integer')
        self._n = n
        self._name = name
        if basis_names is None:
            basis_names = ['y%d' % i for i in range(1, n + 1)]
        if len(basis_names) != n:
            raise ValueError('expected %d basis names' % n)
        self._basis_names = tuple(basis_names)
        self._structure = {}
        for (i, j), rhs in (structure or {}).items():
            for index in (i, j):
                if not 1 <= index <= n:
                    raise IndexOutOfRange(index, n)
            if i == j:
                raise ValueError('[y%d, y%d] must vanish' % (i, j))
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            if hasattr(rhs, 'items'):
                rhs = rhs.items()
            expansion = self._structure.setdefault((i, j), {})
            for k, coeff in rhs:
                if not 1 <= k <= n:
                    raise IndexOutOfRange(k, n)
                expansion[k] = expansion.get(k, const(0)) + sign * as_poly(coeff)
        self._structure = {
            pair: {k: c for k, c in expansion.items() if c}
            for pair, expansion in self._structure.items()
        }
        self._structure = {
            pair: expansion
            for pair, expansion in self._structure.items()
            if expansion
        }
        names = set(parameters)
        for expansion in self._structure.values():
            for coeff in expansion.values():
                names.update(coeff.names)
        self._parameters = tuple(sorted(names))

    def __repr__(self):
        return '<LieAlgebra name=%r n=%d brackets=%d parameters=%r>' % (
            self._name, self._n, len(self._structure), self._parameters)

    @property
    def n(self):
        "The dimension of the algebra."
        return self._n

    @property
    def name(self):
        "The name given in the algebra file, if any."
        return self._name

    @property
    def basis_names(self):
        return self._basis_names

    @property
    def parameters(self):
        "The sorted tuple of declared and occurring parameter names."
        return self._parameters

    @property
    def structure(self):
        """
        A copy of the structure constants as ``{(i, j): {k: coeff}}`` with
        ``i < j``.
        """
        return {pair: dict(rhs) for pair, rhs in self._structure.items()}

    def bracket_generators(self, i, j):
        "Return the expansion ``{k: coeff}`` of ``[y_i, y_j]``."
        if i == j:
            return {}
        if i < j:
            return self._structure.get((i, j), {})
        return {k: -c for k, c in self._structure.get((j, i), {}).items()}

    def structure_constant(self, i, j, k):
        "Return the coefficient of ``y_k`` in ``[y_i, y_j]``."
        return self.bracket_generators(i, j).get(k, const(0))

    def subs(self, assignment):
        """
        Return a copy of the algebra with *assignment* substituted into the
        structure constants (for instance Type[2] at ``a = -1``).
        """
        return LieAlgebra(
            self._n,
            {
                pair: {k: c.subs(assignment) for k, c in rhs.items()}
                for pair, rhs in self._structure.items()
            },
            name=self._name, basis_names=self._basis_names,
            parameters=[p for p in self._parameters if p not in assignment])


def parse_algebra(text):
    """
    Parse the JSON algebra file *text*::

        {"dim": 4, "name": "Type1",
         "brackets": [{"i": 2, "j": 4, "rhs": [{"k": 1, "c": "1"}]},
                      {"i": 3, "j": 4, "rhs": [{"k": 2, "c": "1"}]}],
         "parameters": []}

    Coefficients use the polynomial literal syntax. Duplicate pairs, brackets
    of a generator with itself and undeclared parameters raise
    :exc:`~poissonlike.exc.ParseError`; indices outside ``1..dim`` raise
    :exc:`~poissonlike.exc.IndexOutOfRange`.
    """
    obj = load_json(text, 'algebra file')
    return algebra_from_json(obj)


def algebra_from_json(obj):
    "Build a :class:`LieAlgebra` from the parsed algebra file *obj*."
    if not isinstance(obj, dict):
        raise ParseError('algebra file must contain a JSON object')
    n = obj.get('dim')
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError('"dim" must be a positive integer')
    declared = obj.get('parameters')
    if declared is not None and (
            not isinstance(declared, list) or
            not all(isinstance(p, str) for p in declared)):
        raise ParseError('"parameters" must be a list of names')
    brackets = obj.get('brackets', [])
    if not isinstance(brackets, list):
        raise ParseError('"brackets" must be a list')
    structure = {}
    for number, entry in enumerate(brackets, start=1):
        try:
            i, j, rhs = entry['i'], entry['j'], entry['rhs']
        except (KeyError, TypeError):
            raise ParseError(
                'bracket entry %d needs "i", "j" and "rhs" keys' % number)
        for index in (i, j):
            if not isinstance(index, int):
                raise ParseError(
                    'bracket entry %d has a non-integer index' % number)
            if not 1 <= index <= n:
                raise IndexOutOfRange(index, n)
        if i == j:
            raise ParseError(
                'bracket entry %d: [y%d, y%d] must vanish' % (number, i, j))
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        if (i, j) in structure:
            raise ParseError(
                'bracket entry %d duplicates [y%d, y%d]' % (number, i, j))
        expansion = {}
        for item in rhs:
            try:
                k, coeff = item['k'], item['c']
            except (KeyError, TypeError):
                raise ParseError(
                    'bracket entry %d: rhs items need "k" and "c"' % number)
            if not isinstance(k, int) or not 1 <= k <= n:
                raise IndexOutOfRange(k, n)
            try:
                coeff = parse_poly(coeff)
            except ParseError as exc:
                raise ParseError(
                    'bracket entry %d: %s' % (number, exc.reason),
                    column=exc.column)
            if declared is not None:
                unknown = set(coeff.names) - set(declared)
                if unknown:
                    raise ParseError(
                        'bracket entry %d uses undeclared parameter %s' % (
                            number, sorted(unknown)[0]))
            expansion[k] = expansion.get(k, const(0)) + sign * coeff
        structure[(i, j)] = expansion
    basis = obj.get('basis')
    if basis is not None and len(basis) != n:
        raise ParseError('"basis" must list %d names' % n)
    return LieAlgebra(
        n, structure, name=obj.get('name'), basis_names=basis,
        parameters=declared or ())


def load_algebra(source):
    """
    Load an algebra from *source*: a path, or the name of a packaged fixture
    such as ``type1`` or ``type8.json``.
    """
    return parse_algebra(read_source(source))


def algebra_to_json(L):
    "Return the JSON-compatible algebra file form of *L*."
    return {
        'dim': L.n,
        'name': L.name,
        'parameters': list(L.parameters),
        'brackets': [
            {
                'i': i, 'j': j,
                'rhs': [
                    {'k': k, 'c': format_poly(c)}
                    for k, c in sorted(rhs.items())
                ],
            }
            for (i, j), rhs in sorted(L.structure.items())
        ],
    }


def _bracket_vectors(L, x, y):
    result = {}
    for i, a in x.items():
        for j, b in y.items():
            if i == j:
                continue
            for k, c in L.bracket_generators(i, j).items():
                result[k] = result.get(k, const(0)) + a * b * c
    return {k: c for k, c in result.items() if c}


def jacobi_residual(L, i, j, k):
    """
    Return ``[[y_i,y_j],y_k] + [[y_j,y_k],y_i] + [[y_k,y_i],y_j]`` expanded
    through the structure constants.
    """
    total = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        inner = L.bracket_generators(a, b)
        for m, coeff in _bracket_vectors(L, inner, {c: const(1)}).items():
            total[m] = total.get(m, const(0)) + coeff
    return ExteriorElement(TANGENT, L.n, {(m,): c for m, c in total.items()})


def validate(L):
    """
    Check the Jacobi identity of *L* on every basis triple, as a polynomial
    identity in its parameters, and return an :class:`AxiomReport`.
    Antisymmetry holds by construction.
    """
    violations = []
    for i, j, k in combinations(range(1, L.n + 1), 3):
        residual = jacobi_residual(L, i, j, k)
        if residual:
            violations.append(JacobiViolation(i, j, k, residual))
    return AxiomReport(L.name, tuple(violations))


def _as_vector(L, X):
    if not isinstance(X, ExteriorElement) or X.space != TANGENT:
        raise SpaceMismatch('bracket takes tangent vectors')
    if X.n != L.n:
        raise SpaceMismatch(
            'vector of dimension %d used with a %d-dimensional algebra' % (
                X.n, L.n))
    if any(len(idx) != 1 for idx in X.terms):
        raise DegreeMismatch('%s is not a vector' % X)
    return {idx[0]: c for idx, c in X.terms.items()}


def bracket(L, X, Y):
    """
    Return the Lie bracket ``[X, Y]`` of the degree 1 elements *X* and *Y*.
    """
    result = _bracket_vectors(L, _as_vector(L, X), _as_vector(L, Y))
    return ExteriorElement(TANGENT, L.n, {(k,): c for k, c in result.items()})
