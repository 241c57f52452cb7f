# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"""
Defines the :class:`ExteriorElement` class along with the exterior algebra
combinatorics shared by the tangent (multivector) and cotangent (form) sides:
:func:`basis_enum`, :func:`wedge`, :func:`pairing`, and
:func:`contract_volume`.

Multi-indices are plain tuples of strictly increasing 1-based basis indices;
the empty tuple is the scalar slot. Tangent generators are written ``y1..yn``
and cotangent generators ``z1..zn``.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
)

import numbers
from itertools import combinations

from .exc import IndexOutOfRange, DegreeMismatch, SpaceMismatch
from .scalars import ParamPoly, as_poly, const, format_poly

# Make Py2's str equivalent to Py3's
str = type('')  # pylint: disable=redefined-builtin,invalid-name

TANGENT = 'tangent'
COTANGENT = 'cotangent'
SPACES = (TANGENT, COTANGENT)

GENERATOR_PREFIX = {TANGENT: 'y', COTANGENT: 'z'}


def sort_sign(indices):
    """
    Return ``(sign, idx)`` where *idx* is *indices* sorted and *sign* is the
    sign of the sorting permutation. If *indices* repeats a value the wedge
    monomial vanishes and ``(0, None)`` is returned.
    """
    indices = tuple(indices)
    if len(set(indices)) < len(indices):
        return 0, None
    sign = 1
    for i, a in enumerate(indices):
        for b in indices[i + 1:]:
            if a > b:
                sign = -sign
    return sign, tuple(sorted(indices))


def complement(idx, n):
    "Return the sorted complement of multi-index *idx* in ``1..n``."
    members = set(idx)
    return tuple(i for i in range(1, n + 1) if i not in members)


def basis_enum(n, k):
    """
    Return the lexicographically ordered list of strictly increasing
    *k*-subsets of ``1..n``. This ordering fixes the rows and columns of
    every operator matrix.
    """
    if k < 0 or k > n:
        return []
    return list(combinations(range(1, n + 1), k))


def check_space(space):
    if space not in SPACES:
        raise ValueError('space must be %r or %r, not %r' % (
            TANGENT, COTANGENT, space))


def check_idx(idx, n):
    idx = tuple(idx)
    for i in idx:
        if not isinstance(i, numbers.Integral):
            raise TypeError('basis index %r is not an integer' % (i,))
        if not 1 <= i <= n:
            raise IndexOutOfRange(i, n)
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError('multi-index %r is not strictly increasing' % (idx,))
    return idx


def format_monomial(space, idx):
    "Return the literal for the wedge monomial *idx* in *space*."
    prefix = GENERATOR_PREFIX[space]
    return '^'.join('%s%d' % (prefix, i) for i in idx)


def format_terms(items):
    """
    Join ``(coefficient, monomial)`` pairs into a literal sum. Monomials are
    already formatted text (possibly empty for the scalar slot).
    """
    pieces = []
    for coeff, mono in items:
        text = format_poly(coeff)
        if not mono:
            if len(coeff.terms) > 1:
                text = '(%s)' % text
        elif coeff == 1:
            text = mono
        elif coeff == -1:
            text = '-' + mono
        elif len(coeff.terms) == 1:
            text = '%s*%s' % (text, mono)
        else:
            text = '(%s)*%s' % (text, mono)
        if not pieces:
            pieces.append(text)
        elif text.startswith('-'):
            pieces.append(' - ' + text[1:])
        else:
            pieces.append(' + ' + text)
    return ''.join(pieces) or '0'


class ExteriorElement(object):
    """
    An immutable, possibly inhomogeneous, element of the exterior algebra of
    an *n*-dimensional space (*space* is ``'tangent'`` for multivectors and
    ``'cotangent'`` for forms).

    *terms* maps multi-indices (strictly increasing tuples drawn from
    ``1..n``) to coefficients, which may be :class:`int`,
    :class:`~fractions.Fraction`, or :class:`~poissonlike.scalars.ParamPoly`
    values. Zero coefficients are discarded.

    Elements support ``+`` and ``-``, multiplication by scalars, and the
    wedge product via ``^`` (``*`` between two elements is also the wedge).
    """

    __slots__ = ('_space', '_n', '_terms')

    def __init__(self, space, n, terms=None):
        check_space(space)
        if not isinstance(n, numbers.Integral) or n < 0:
            raise ValueError('dimension must be a natural number')
        self._space = space
        self._n = n
        self._terms = {}
        for idx, coeff in (terms or {}).items():
            idx = check_idx(idx, n)
            coeff = as_poly(coeff)
            if coeff:
                self._terms[idx] = coeff

    @classmethod
    def _make(cls, space, n, terms):
        result = cls.__new__(cls)
        result._space = space
        result._n = n
        result._terms = {idx: coeff for idx, coeff in terms.items() if coeff}
        return result

    @property
    def space(self):
        "Either ``'tangent'`` or ``'cotangent'``."
        return self._space

    @property
    def n(self):
        "The dimension of the underlying vector space."
        return self._n

    @property
    def terms(self):
        "A copy of the mapping of multi-indices to coefficients."
        return dict(self._terms)

    @property
    def parameters(self):
        "The sorted tuple of parameter names occurring in any coefficient."
        return tuple(sorted({
            name
            for coeff in self._terms.values()
            for name in coeff.names
        }))

    def items(self):
        "Return ``(idx, coeff)`` pairs ordered by degree then lexicographically."
        return sorted(
            self._terms.items(), key=lambda item: (len(item[0]), item[0]))

    def degrees(self):
        "Return the sorted list of degrees present."
        return sorted({len(idx) for idx in self._terms})

    @property
    def is_homogeneous(self):
        "Returns :data:`True` if at most one degree is present."
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        """
        The exterior degree of a homogeneous element, or :data:`None` for
        zero. Raises :exc:`~poissonlike.exc.DegreeMismatch` for mixed-degree
        elements.
        """
        degrees = self.degrees()
        if not degrees:
            return None
        if len(degrees) > 1:
            raise DegreeMismatch('%s mixes degrees %r' % (self, degrees))
        return degrees[0]

    def homogeneous_part(self, k):
        "Return the degree *k* component."
        return ExteriorElement._make(self._space, self._n, {
            idx: coeff for idx, coeff in self._terms.items()
            if len(idx) == k})

    def coefficient(self, idx):
        """
        Return the coefficient of the monomial *idx*. An unsorted *idx* is
        accepted and the sorting sign applied.
        """
        sign, key = sort_sign(idx)
        if not sign:
            return const(0)
        return sign * self._terms.get(key, const(0))

    def subs(self, assignment):
        "Substitute *assignment* into every coefficient."
        return ExteriorElement._make(self._space, self._n, {
            idx: coeff.subs(assignment)
            for idx, coeff in self._terms.items()})

    def map_coefficients(self, func):
        "Return a copy with *func* applied to every coefficient."
        return ExteriorElement._make(self._space, self._n, {
            idx: as_poly(func(coeff)) for idx, coeff in self._terms.items()})

    def _check(self, other):
        if not isinstance(other, ExteriorElement):
            raise TypeError('expected an ExteriorElement, not %r' % (other,))
        if other._space != self._space:
            raise SpaceMismatch(
                'cannot combine %s and %s elements' % (
                    self._space, other._space))
        if other._n != self._n:
            raise SpaceMismatch(
                'cannot combine elements of dimension %d and %d' % (
                    self._n, other._n))

    def __add__(self, other):
        if isinstance(other, (numbers.Rational, ParamPoly)):
            other = scalar(self._space, self._n, other)
        self._check(other)
        terms = dict(self._terms)
        for idx, coeff in other._terms.items():
            terms[idx] = terms.get(idx, const(0)) + coeff
        return ExteriorElement._make(self._space, self._n, terms)

    __radd__ = __add__

    def __neg__(self):
        return ExteriorElement._make(self._space, self._n, {
            idx: -coeff for idx, coeff in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ExteriorElement):
            return wedge(self, other)
        if isinstance(other, (numbers.Rational, ParamPoly)):
            return ExteriorElement._make(self._space, self._n, {
                idx: coeff * other for idx, coeff in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ExteriorElement._make(self._space, self._n, {
            idx: coeff / other for idx, coeff in self._terms.items()})

    __div__ = __truediv__

    def __xor__(self, other):
        return wedge(self, other)

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if isinstance(other, numbers.Rational) and not other:
            return not self._terms
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return (
            self._space == other._space and
            self._n == other._n and
            self._terms == other._terms)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __str__(self):
        return format_terms(
            (coeff, format_monomial(self._space, idx))
            for idx, coeff in self.items())

    def __repr__(self):
        return 'ExteriorElement(%r, %d, %r)' % (
            self._space, self._n, str(self))


def scalar(space, n, value):
    "Return *value* as a degree-0 element of *space*."
    return ExteriorElement._make(space, n, {(): as_poly(value)})


def monomial(space, n, idx, coeff=1):
    """
    Return ``coeff`` times the wedge of the generators in *idx* (which need
    not be sorted; the sorting sign is applied).
    """
    sign, key = sort_sign(idx)
    if not sign:
        return ExteriorElement(space, n)
    return ExteriorElement(space, n, {key: sign * as_poly(coeff)})


def element_from_terms(space, n, terms):
    """
    Return the sum of ``coeff`` times the wedge monomial of ``indices`` over
    the ``(indices, coeff)`` pairs in *terms*. Unsorted and repeated indices
    are handled as in :func:`monomial`.
    """
    result = {}
    for indices, coeff in terms:
        sign, key = sort_sign(indices)
        if sign:
            result[key] = result.get(key, const(0)) + sign * as_poly(coeff)
    return ExteriorElement(space, n, result)


def generator(space, n, i):
    "Return the *i*-th generator (``y_i`` or ``z_i``) of *space*."
    return ExteriorElement(space, n, {(i,): 1})


def wedge(a, b):
    """
    Return the wedge product of *a* and *b*, which must share space and
    dimension (otherwise :exc:`~poissonlike.exc.SpaceMismatch` is raised).
    """
    a._check(b)
    terms = {}
    for idx_a, coeff_a in a._terms.items():
        for idx_b, coeff_b in b._terms.items():
            sign, idx = sort_sign(idx_a + idx_b)
            if sign:
                value = coeff_a * coeff_b
                if sign < 0:
                    value = -value
                terms[idx] = terms.get(idx, const(0)) + value
    return ExteriorElement._make(a._space, a._n, terms)


def pairing(omega, u):
    """
    Return the natural pairing of the form *omega* with the multivector *u*,
    normalized so that ``<z_I, y_I> = 1``. Inhomogeneous arguments pair
    degree by degree.
    """
    if omega.space != COTANGENT or u.space != TANGENT:
        raise SpaceMismatch('pairing takes a form and a multivector')
    if omega.n != u.n:
        raise SpaceMismatch(
            'cannot pair dimension %d with dimension %d' % (omega.n, u.n))
    total = const(0)
    for idx, coeff in omega._terms.items():
        other = u._terms.get(idx)
        if other is not None:
            total = total + coeff * other
    return total


def volume_sign(idx, n):
    "Return the sign of the permutation (*idx* followed by its complement)."
    return sort_sign(tuple(idx) + complement(idx, n))[0]


def contract_volume(u, n=None):
    """
    Return the form ``<Vol, u>`` obtained by contracting the multivector *u*
    against the standard volume form of ``1..n``. On a monomial ``y_I`` this
    is ``eps(I, I^c) z_{I^c}``. *n* defaults to the dimension of *u*.
    """
    if u.space != TANGENT:
        raise SpaceMismatch('only multivectors contract against the volume')
    if n is None:
        n = u.n
    terms = {}
    for idx, coeff in u._terms.items():
        if len(idx) > n or (idx and idx[-1] > n):
            raise DegreeMismatch(
                'term %s exceeds dimension %d' % (
                    format_monomial(TANGENT, idx), n))
        rest = complement(idx, n)
        sign = volume_sign(idx, n)
        terms[rest] = sign * coeff
    return ExteriorElement._make(COTANGENT, n, terms)


def uncontract_volume(omega):
    """
    The inverse of :func:`contract_volume`: return the multivector *u* with
    ``contract_volume(u) == omega``.
    """
    if omega.space != COTANGENT:
        raise SpaceMismatch('only forms have a volume preimage')
    n = omega.n
    terms = {}
    for idx, coeff in omega._terms.items():
        rest = complement(idx, n)
        terms[rest] = volume_sign(rest, n) * coeff
    return ExteriorElement._make(TANGENT, n, terms)


def format_field_monomial(space, exps, idx):
    """
    Return the literal for the polynomial field monomial with coordinate
    exponents *exps* and frame multi-index *idx*, such as
    ``x1*x4^2*y1^y2``. The constant monomial is rendered as ``1``.
    """
    parts = []
    for i, exp in enumerate(exps, start=1):
        if exp == 1:
            parts.append('x%d' % i)
        elif exp > 1:
            parts.append('x%d^%d' % (i, exp))
    if idx:
        parts.append(format_monomial(space, idx))
    return '*'.join(parts) or '1'


def format_basis_key(space, key):
    """
    Return the label of an operator matrix basis *key*: either a multi-index
    or an ``(exponents, multi-index)`` pair.
    """
    if key and isinstance(key[0], tuple):
        return format_field_monomial(space, *key)
    return format_monomial(space, key) or '1'
