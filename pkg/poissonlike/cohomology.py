# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"""
Defines the :class:`OperatorMatrix` class (the matrix of a graded linear map
in fixed ordered bases), exact :func:`rank` computation, and the Betti
machinery: :func:`betti_sequence`, :func:`d_squared_check`,
:func:`alternating_sum_check`, and the :class:`ChainComplex` builders for the
multivector, form and de Rham complexes of a Lie algebra.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
)

import logging
import numbers
from collections import namedtuple
from fractions import Fraction
from math import gcd

import numpy as np

from .exc import DegreeMismatch, NotAComplex, ShapeMismatch
from .scalars import as_poly, const
from .exterior import (
    TANGENT,
    COTANGENT,
    ExteriorElement,
    basis_enum,
    format_basis_key,
)
from .schouten import d_pi
from .forms import ce_d, d_phi

# Make Py2's str equivalent to Py3's
str = type('')  # pylint: disable=redefined-builtin,invalid-name

logger = logging.getLogger(__name__)

ZERO = const(0)


def _entry_array(rows, cols):
    return np.full((rows, cols), ZERO, dtype=object)


class OperatorMatrix(object):
    """
    The matrix of a linear map between spans of basis monomials.

    *domain* and *codomain* are the ordered basis keys (multi-indices, or
    ``(exponents, multi-index)`` pairs for polynomial fields) and *entries*
    is anything :func:`numpy.array` can shape into ``len(domain)`` rows of
    ``len(codomain)`` coefficients. Row ``r`` holds the image of
    ``domain[r]``: ``entries[r, c]`` is the coefficient of ``codomain[c]``.

    *source* and *target* record the degrees the map runs between, and
    *space* selects the generator names used by :meth:`row_labels` and
    :meth:`col_labels`.
    """

    __slots__ = (
        '_label', '_domain', '_codomain', '_entries', '_space', '_source',
        '_target')

    def __init__(self, label, domain, codomain, entries=None, space=TANGENT,
                 source=None, target=None):
        self._label = label
        self._domain = tuple(domain)
        self._codomain = tuple(codomain)
        shape = (len(self._domain), len(self._codomain))
        array = _entry_array(*shape)
        if entries is not None:
            entries = np.asarray(entries, dtype=object)
            if entries.size or shape[0] * shape[1]:
                if entries.shape != shape:
                    raise ShapeMismatch(
                        '%s: entries have shape %r, expected %r' % (
                            label, entries.shape, shape))
                for pos, value in np.ndenumerate(entries):
                    array[pos] = as_poly(value)
        array.flags.writeable = False
        self._entries = array
        self._space = space
        self._source = source
        self._target = target

    @classmethod
    def _make(cls, template, label, domain, codomain, array, source, target):
        result = cls.__new__(cls)
        result._label = label
        result._domain = domain
        result._codomain = codomain
        array.flags.writeable = False
        result._entries = array
        result._space = template._space
        result._source = source
        result._target = target
        return result

    def __repr__(self):
        return '<OperatorMatrix %s %dx%d>' % ((self._label,) + self.shape)

    @property
    def label(self):
        "The display label, for example ``A(1,2)``."
        return self._label

    @property
    def domain(self):
        return self._domain

    @property
    def codomain(self):
        return self._codomain

    @property
    def entries(self):
        "The read-only :class:`numpy.ndarray` of coefficients."
        return self._entries

    @property
    def shape(self):
        return self._entries.shape

    @property
    def space(self):
        return self._space

    @property
    def source(self):
        "The degree of the domain, if known."
        return self._source

    @property
    def target(self):
        "The degree of the codomain, if known."
        return self._target

    @property
    def parameters(self):
        "The sorted tuple of parameter names occurring in any entry."
        return tuple(sorted({
            name for entry in self._entries.flat for name in entry.names}))

    def rows(self):
        "Return the entries as a list of lists."
        return self._entries.tolist()

    def row_labels(self):
        return [format_basis_key(self._space, key) for key in self._domain]

    def col_labels(self):
        return [format_basis_key(self._space, key) for key in self._codomain]

    def image(self, row):
        """
        Return the image of the domain basis element *row* (an index or a
        basis key) as a mapping of codomain keys to non-zero coefficients.
        """
        if not isinstance(row, numbers.Integral):
            row = self._domain.index(tuple(row))
        return {
            key: value
            for key, value in zip(self._codomain, self._entries[row])
            if value
        }

    def is_zero(self):
        return not any(self._entries.flat)

    def transpose(self, label=None):
        "Return the transposed matrix, mapping codomain back to domain."
        return OperatorMatrix._make(
            self, label or '%s^T' % self._label, self._codomain,
            self._domain, self._entries.T.copy(), self._target, self._source)

    def subs(self, assignment):
        "Substitute *assignment* into every entry."
        array = _entry_array(*self.shape)
        for pos, value in np.ndenumerate(self._entries):
            array[pos] = value.subs(assignment)
        return OperatorMatrix._make(
            self, self._label, self._domain, self._codomain, array,
            self._source, self._target)

    def evaluate(self, assignment=None):
        """
        Return the rows of :class:`~fractions.Fraction` values at
        *assignment*. Raises :exc:`~poissonlike.exc.MissingParameter` if an
        entry mentions an unassigned parameter.
        """
        assignment = assignment or {}
        return [
            [entry.evaluate(assignment) for entry in row]
            for row in self._entries.tolist()
        ]

    def then(self, other, label=None):
        """
        Return the matrix of the composite "apply *self*, then *other*"; with
        rows as domain this is the product ``self @ other``.
        """
        if self._codomain != other._domain:
            raise ShapeMismatch(
                'cannot follow %s (%d columns) with %s (%d rows)' % (
                    self._label, self.shape[1], other._label, other.shape[0]))
        rows, inner = self.shape
        cols = other.shape[1]
        if inner and rows and cols:
            array = np.dot(self._entries, other._entries)
            array = np.vectorize(as_poly, otypes=[object])(array)
        else:
            array = _entry_array(rows, cols)
        return OperatorMatrix._make(
            self, label or '%s;%s' % (self._label, other._label),
            self._domain, other._codomain, array, self._source,
            other._target)

    def __add__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        if (self._domain, self._codomain) != (other._domain, other._codomain):
            raise ShapeMismatch(
                'cannot add %s and %s' % (self._label, other._label))
        return OperatorMatrix._make(
            self, '%s+%s' % (self._label, other._label), self._domain,
            self._codomain, self._entries + other._entries, self._source,
            self._target)

    def __eq__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return (
            self._domain == other._domain and
            self._codomain == other._codomain and
            self.rows() == other.rows())

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None


def operator_matrix(op, n, degree, codomain_degree=None, space=TANGENT,
                    label=None):
    """
    Build the :class:`OperatorMatrix` of *op* (a callable taking and
    returning :class:`~poissonlike.exterior.ExteriorElement` values of
    *space*) on the degree *degree* basis of an *n*-dimensional space.
    *codomain_degree* defaults to ``degree + 1``; an image with a component
    outside it raises :exc:`~poissonlike.exc.DegreeMismatch`.
    """
    if codomain_degree is None:
        codomain_degree = degree + 1
    if label is None:
        label = 'A(%d,%d)' % (degree, codomain_degree)
    domain = basis_enum(n, degree)
    codomain = basis_enum(n, codomain_degree)
    columns = {idx: c for c, idx in enumerate(codomain)}
    array = _entry_array(len(domain), len(codomain))
    for r, idx in enumerate(domain):
        image = op(ExteriorElement(space, n, {idx: 1}))
        for key, coeff in image.terms.items():
            try:
                array[r, columns[key]] = coeff
            except KeyError:
                raise DegreeMismatch(
                    '%s: image of basis element %d has degree %d, not %d' % (
                        label, r + 1, len(key), codomain_degree))
    logger.debug('built %s (%dx%d)', label, len(domain), len(codomain))
    return OperatorMatrix(
        label, domain, codomain, array, space=space, source=degree,
        target=codomain_degree)


def _clear_denominators(row):
    scale = 1
    for value in row:
        scale = scale * value.denominator // gcd(scale, value.denominator)
    return [int(value * scale) for value in row]


def rank_of_rows(rows):
    """
    Return the exact rank of the rational matrix given as a list of rows,
    using fraction-free (Bareiss) elimination on integer rows.
    """
    matrix = [
        ints
        for ints in (
            _clear_denominators([Fraction(v) for v in row]) for row in rows)
        if any(ints)
    ]
    if not matrix:
        return 0
    cols = len(matrix[0])
    rank = 0
    previous = 1
    for col in range(cols):
        pivot = next(
            (r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        head = matrix[rank]
        p = head[col]
        for r in range(rank + 1, len(matrix)):
            row = matrix[r]
            factor = row[col]
            for c in range(col + 1, cols):
                row[c] = (p * row[c] - factor * head[c]) // previous
            row[col] = 0
        previous = p
        rank += 1
        if rank == len(matrix):
            break
    return rank


def rank(M, assignment=None):
    """
    Return the exact rank of the :class:`OperatorMatrix` *M* after
    substituting *assignment*. Symbolic rank is not computed: any parameter
    left unassigned raises :exc:`~poissonlike.exc.MissingParameter`.
    """
    return rank_of_rows(M.evaluate(assignment))


class BettiReport(namedtuple('BettiReport', (
        'degrees',
        'dims',
        'ranks',
        'betti',
        'p',
        'alt_betti_sum',
        'alt_dim_sum',
        'labels',
        'windows',
))):
    """
    A :func:`~collections.namedtuple` describing the cohomology of a finite
    complex. *ranks* holds the rank of the outgoing map at each degree and
    ``betti[i] = dims[i] - ranks[i] - ranks[i - p]``. The alternating sums
    group degrees into the windows ``k|p| <= degree < (k+1)|p|``; *windows*
    lists each ``(k, degrees)`` group.
    """
    __slots__ = ()


class AlternatingSum(namedtuple('AlternatingSum', ('lhs', 'rhs', 'equal'))):
    "The two sides of the alternating sum theorem and whether they agree."
    __slots__ = ()


def _windows(degrees, p):
    width = abs(p)
    groups = {}
    for degree in degrees:
        groups.setdefault(degree // width, []).append(degree)
    return [(k, tuple(groups[k])) for k in sorted(groups)]


def _alternating(values, degrees, p):
    width = abs(p)
    return sum(
        (-1 if (degree // width) % 2 else 1) * value
        for degree, value in zip(degrees, values))


def _build_report(degrees, dims, ranks, betti, p, labels):
    return BettiReport(
        tuple(degrees), tuple(dims), tuple(ranks), tuple(betti), p,
        _alternating(betti, degrees, p), _alternating(dims, degrees, p),
        tuple(labels), tuple(_windows(degrees, p)))


def _check_p(p):
    if not isinstance(p, numbers.Integral) or not p:
        raise ValueError('operator degree p must be a non-zero integer')


def _composites(matrices, p, label_format='%s;%s'):
    for i, first in enumerate(matrices):
        j = i + p
        if first is None or not 0 <= j < len(matrices):
            continue
        second = matrices[j]
        if second is None:
            continue
        yield i, first.then(
            second, label=label_format % (second.label, first.label))


def betti_sequence(matrices, dims, p=1, assignment=None, degrees=None):
    """
    Compute the :class:`BettiReport` of a complex. *matrices[i]* is the map
    leaving position *i* (or :data:`None` for a zero map) and lands at
    position ``i + p``; *dims* are the dimensions and *degrees* the grades of
    the positions (default ``0, 1, ...``), which must increase in steps of
    one.

    Consecutive maps must compose to zero after substituting *assignment*,
    otherwise :exc:`~poissonlike.exc.NotAComplex` is raised naming the
    degree at which the composite fails.
    """
    _check_p(p)
    dims = list(dims)
    matrices = list(matrices) + [None] * (len(dims) - len(matrices))
    if len(matrices) > len(dims):
        raise ValueError('more matrices than degrees')
    if degrees is None:
        degrees = list(range(len(dims)))
    degrees = list(degrees)
    if len(degrees) != len(dims):
        raise ValueError('degrees and dims differ in length')
    if assignment:
        matrices = [m if m is None else m.subs(assignment) for m in matrices]
    for i, composite in _composites(matrices, p):
        if not composite.is_zero():
            raise NotAComplex(degrees[i], composite)
    ranks = []
    for degree, matrix in zip(degrees, matrices):
        value = 0 if matrix is None else rank(matrix, assignment)
        if matrix is not None:
            logger.debug('rank %s = %d', matrix.label, value)
        ranks.append(value)
    betti = []
    for i, dim in enumerate(dims):
        incoming = ranks[i - p] if 0 <= i - p < len(dims) else 0
        betti.append(dim - ranks[i] - incoming)
    labels = ['' if m is None else m.label for m in matrices]
    report = _build_report(degrees, dims, ranks, betti, p, labels)
    logger.info(
        'betti %s over degrees %s (p=%d)', report.betti, report.degrees, p)
    return report


def d_squared_check(matrices, p=1, assignment=None):
    """
    Return the matrices of the composites ``op o op`` leaving each position
    of the complex (symbolic when *assignment* is :data:`None`). A complex
    yields all-zero residuals.
    """
    _check_p(p)
    matrices = list(matrices)
    if assignment:
        matrices = [m if m is None else m.subs(assignment) for m in matrices]
    return [
        composite for _, composite in _composites(matrices, p, '%s o %s')]


def alternating_sum_check(report):
    """
    Recompute both sides of the alternating sum theorem from *report*: the
    windowed alternating sum of Betti numbers and of dimensions.
    """
    if not report.degrees:
        return AlternatingSum(0, 0, True)
    lhs = _alternating(report.betti, report.degrees, report.p)
    rhs = _alternating(report.dims, report.degrees, report.p)
    return AlternatingSum(lhs, rhs, lhs == rhs)


class ChainComplex(namedtuple('ChainComplex', (
        'matrices', 'dims', 'p', 'degrees'))):
    """
    A :func:`~collections.namedtuple` bundling the matrices of a complex
    with its dimensions, operator degree and grades.
    """
    __slots__ = ()

    def betti(self, assignment=None):
        "Return the :class:`BettiReport` at *assignment*."
        return betti_sequence(
            self.matrices, self.dims, self.p, assignment, self.degrees)

    def d_squared(self, assignment=None):
        "Return the composite residuals; see :func:`d_squared_check`."
        return d_squared_check(self.matrices, self.p, assignment)

    def subs(self, assignment):
        return self._replace(matrices=[
            m if m is None else m.subs(assignment) for m in self.matrices])


def tangent_complex(L, pi, degree=None):
    """
    Return the :class:`ChainComplex` of ``d_pi`` on the multivectors of
    degree ``1..n`` (grades ``0..n-1``). *degree* must be given when *pi* is
    zero; otherwise it is read from *pi*. A *pi* of degree below 2 has no
    coboundary of non-zero degree and raises
    :exc:`~poissonlike.exc.DegreeMismatch`.
    """
    if pi:
        if not pi.is_homogeneous:
            raise DegreeMismatch('pi mixes degrees %r' % (pi.degrees(),))
        degree = pi.degree
    elif degree is None:
        raise DegreeMismatch('the degree of a zero pi must be given')
    if degree < 2:
        raise DegreeMismatch(
            'pi must have degree at least 2, not %d: %s' % (degree, pi))
    shift = degree - 1
    n = L.n
    matrices = [
        operator_matrix(
            lambda U: d_pi(L, pi, U), n, m, m + shift, TANGENT)
        for m in range(1, n + 1)
    ]
    dims = [len(basis_enum(n, m)) for m in range(1, n + 1)]
    return ChainComplex(matrices, dims, shift, list(range(n)))


def form_complex(L, phi, degree=None):
    """
    Return the :class:`ChainComplex` of ``d_phi`` on the forms of degree
    ``0..n`` (grades ``1..n+1``). For a ``p``-form the operator degree is
    ``p + 1``.
    """
    if phi:
        if not phi.is_homogeneous:
            raise DegreeMismatch('phi mixes degrees %r' % (phi.degrees(),))
        degree = phi.degree
    elif degree is None:
        raise DegreeMismatch('the degree of a zero phi must be given')
    shift = degree + 1
    n = L.n
    matrices = [
        operator_matrix(
            lambda U: d_phi(L, phi, U), n, a, a + shift, COTANGENT)
        for a in range(n + 1)
    ]
    dims = [len(basis_enum(n, a)) for a in range(n + 1)]
    return ChainComplex(matrices, dims, shift, list(range(1, n + 2)))


def de_rham_complex(L):
    """
    Return the :class:`ChainComplex` of the Chevalley-Eilenberg
    differential, the form complex of the constant ``1``.
    """
    n = L.n
    matrices = [
        operator_matrix(
            lambda U: ce_d(L, U), n, a, a + 1, COTANGENT,
            label='d(%d,%d)' % (a, a + 1))
        for a in range(n + 1)
    ]
    dims = [len(basis_enum(n, a)) for a in range(n + 1)]
    return ChainComplex(matrices, dims, 1, list(range(1, n + 2)))
