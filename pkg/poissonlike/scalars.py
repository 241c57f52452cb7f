# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"""
Defines the :class:`ParamPoly` class, the exact coefficient type used by every
other part of the engine, along with the :func:`poly_add`, :func:`poly_mul`,
and :func:`poly_eval` functions.

A :class:`ParamPoly` is a sparse polynomial with :class:`~fractions.Fraction`
coefficients in a set of named symbolic parameters (``c1``, ``a``, ``u``,
``C17`` and so on). A polynomial that mentions no parameters is simply a
rational constant, and compares equal to the corresponding :class:`int` or
:class:`~fractions.Fraction`.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
)

import numbers
from fractions import Fraction

from .exc import MissingParameter

# Make Py2's str equivalent to Py3's
str = type('')  # pylint: disable=redefined-builtin,invalid-name

Rational = Fraction


def _normalize(names, terms):
    terms = {
        exps: Fraction(coeff)
        for exps, coeff in terms.items()
        if coeff
    }
    used = [
        i for i in range(len(names))
        if any(exps[i] for exps in terms)
    ]
    if len(used) < len(names):
        names = tuple(names[i] for i in used)
        terms = {
            tuple(exps[i] for i in used): coeff
            for exps, coeff in terms.items()
        }
    return names, terms


def _embed(terms, old_names, new_names):
    if old_names == new_names:
        return terms
    positions = [new_names.index(name) for name in old_names]
    result = {}
    for exps, coeff in terms.items():
        new_exps = [0] * len(new_names)
        for pos, exp in zip(positions, exps):
            new_exps[pos] = exp
        result[tuple(new_exps)] = coeff
    return result


class ParamPoly(object):
    """
    An immutable multivariate polynomial over the rationals in named
    parameters.

    *terms* is a mapping of exponent tuples to coefficients, and *names* is
    the sequence of parameter names the exponent tuples refer to. Names are
    sorted, unused names are dropped, and zero coefficients are discarded, so
    two polynomials are equal precisely when their canonical term maps are
    equal. Most callers will prefer the :func:`const` and :func:`param`
    helpers, or :func:`~poissonlike.formats.parse_poly`.

    Instances support ``+``, ``-``, ``*``, ``**`` (natural exponents) and
    division by a non-zero rational, mixing freely with :class:`int` and
    :class:`~fractions.Fraction` values.
    """

    __slots__ = ('_names', '_terms', '_hash')

    def __init__(self, terms=None, names=()):
        names = tuple(names)
        if terms is None:
            terms = {}
        if list(names) != sorted(set(names)):
            order = sorted(set(names))
            if len(order) != len(names):
                raise ValueError('duplicate parameter names in %r' % (names,))
            terms = _embed(terms, names, tuple(order))
            names = tuple(order)
        for exps in terms:
            if len(exps) != len(names):
                raise ValueError(
                    'exponent vector %r does not match %d parameters' %
                    (exps, len(names)))
            if any(exp < 0 for exp in exps):
                raise ValueError('negative exponent in %r' % (exps,))
        self._names, self._terms = _normalize(names, terms)
        self._hash = None

    @classmethod
    def _make(cls, names, terms):
        result = cls.__new__(cls)
        result._names, result._terms = _normalize(names, terms)
        result._hash = None
        return result

    @property
    def names(self):
        """
        The sorted tuple of parameter names which occur in the polynomial.
        """
        return self._names

    @property
    def terms(self):
        """
        A copy of the term map; keys are exponent tuples aligned with
        :attr:`names`, values are :class:`~fractions.Fraction` coefficients.
        """
        return dict(self._terms)

    @property
    def is_constant(self):
        "Returns :data:`True` if no parameter occurs in the polynomial."
        return not self._names

    @property
    def degree(self):
        "The total degree; the zero polynomial has degree 0."
        return max((sum(exps) for exps in self._terms), default=0)

    def to_fraction(self):
        """
        Return the value of a constant polynomial as a
        :class:`~fractions.Fraction`. Raises :exc:`ValueError` if any
        parameter occurs.
        """
        if self._names:
            raise ValueError('%s is not a constant' % self)
        return self._terms.get((), Fraction(0))

    def evaluate(self, assignment):
        """
        Substitute *assignment* (a mapping of parameter names to rationals)
        and return the exact value. Raises :exc:`MissingParameter` naming the
        first parameter that *assignment* does not cover.
        """
        for name in self._names:
            if name not in assignment:
                raise MissingParameter(name)
        values = [Fraction(assignment[name]) for name in self._names]
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for value, exp in zip(values, exps):
                if exp:
                    term *= value ** exp
            total += term
        return total

    def subs(self, assignment):
        """
        Substitute the parameters named in *assignment*, leaving the rest
        symbolic. Values may be rationals or :class:`ParamPoly` instances.
        """
        hits = [name for name in self._names if name in assignment]
        if not hits:
            return self
        if all(
                isinstance(assignment[name], numbers.Rational)
                for name in hits):
            keep = [
                i for i, name in enumerate(self._names)
                if name not in assignment]
            values = {
                i: Fraction(assignment[name])
                for i, name in enumerate(self._names)
                if name in assignment}
            terms = {}
            for exps, coeff in self._terms.items():
                for i, value in values.items():
                    if exps[i]:
                        coeff *= value ** exps[i]
                key = tuple(exps[i] for i in keep)
                terms[key] = terms.get(key, 0) + coeff
            return ParamPoly._make(
                tuple(self._names[i] for i in keep), terms)
        result = ParamPoly()
        for exps, coeff in self._terms.items():
            term = const(coeff)
            for name, exp in zip(self._names, exps):
                if exp:
                    base = (
                        as_poly(assignment[name]) if name in assignment else
                        param(name))
                    term = term * base ** exp
            result = result + term
        return result

    def __repr__(self):
        return 'ParamPoly(%r)' % format_poly(self)

    def __str__(self):
        return format_poly(self)

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def __hash__(self):
        if self._hash is None:
            if not self._names:
                self._hash = hash(self._terms.get((), Fraction(0)))
            else:
                self._hash = hash(
                    (self._names, frozenset(self._terms.items())))
        return self._hash

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._names == other._names and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def _align(self, other):
        if self._names == other._names:
            return self._names, self._terms, other._terms
        names = tuple(sorted(set(self._names) | set(other._names)))
        return (
            names,
            _embed(self._terms, self._names, names),
            _embed(other._terms, other._names, names),
        )

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        names, a, b = self._align(other)
        terms = dict(a)
        for exps, coeff in b.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return ParamPoly._make(names, terms)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._make(
            self._names,
            {exps: -coeff for exps, coeff in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ParamPoly()
        names, a, b = self._align(other)
        terms = {}
        for exps_a, coeff_a in a.items():
            for exps_b, coeff_b in b.items():
                exps = tuple(x + y for x, y in zip(exps_a, exps_b))
                terms[exps] = terms.get(exps, 0) + coeff_a * coeff_b
        return ParamPoly._make(names, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, numbers.Rational):
            if isinstance(other, ParamPoly) and other.is_constant:
                other = other.to_fraction()
            else:
                return NotImplemented
        if not other:
            raise ZeroDivisionError('division of %s by zero' % self)
        other = Fraction(other)
        return ParamPoly._make(
            self._names,
            {exps: coeff / other for exps, coeff in self._terms.items()})

    __div__ = __truediv__

    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral) or exponent < 0:
            raise ValueError('exponent must be a natural number')
        result = const(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result


def _coerce(value):
    if isinstance(value, ParamPoly):
        return value
    if isinstance(value, numbers.Rational):
        return const(value)
    return NotImplemented


def as_poly(value):
    """
    Convert *value* (a :class:`ParamPoly`, :class:`int`, or
    :class:`~fractions.Fraction`) to a :class:`ParamPoly`.
    """
    result = _coerce(value)
    if result is NotImplemented:
        raise TypeError('cannot convert %r to a polynomial' % (value,))
    return result


def const(value):
    "Return the constant polynomial with rational *value*."
    value = Fraction(value)
    return ParamPoly._make((), {(): value} if value else {})


def param(name):
    "Return the polynomial consisting of the single parameter *name*."
    return ParamPoly._make((name,), {(1,): Fraction(1)})


def poly_add(p, q):
    "Return the canonical sum of *p* and *q*."
    return as_poly(p) + as_poly(q)


def poly_mul(p, q):
    "Return the canonical product of *p* and *q*."
    return as_poly(p) * as_poly(q)


def poly_eval(p, assignment):
    """
    Evaluate *p* at *assignment*, returning a :class:`~fractions.Fraction`.
    Raises :exc:`~poissonlike.exc.MissingParameter` when a parameter
    occurring in *p* is unassigned.
    """
    return as_poly(p).evaluate(assignment)


def format_rational(value):
    "Format a rational as an integer or ``n/d`` literal."
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)


def _format_monomial(names, exps):
    parts = []
    for name, exp in zip(names, exps):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append('%s^%d' % (name, exp))
    return '*'.join(parts)


def format_poly(p):
    """
    Return the canonical literal for *p*: terms in descending graded
    lexicographic order on exponent vectors, parameters in sorted name order.
    The result re-parses with :func:`~poissonlike.formats.parse_poly` to an
    equal polynomial.
    """
    p = as_poly(p)
    if not p._terms:
        return '0'
    pieces = []
    for exps in sorted(p._terms, key=lambda e: (sum(e), e), reverse=True):
        coeff = p._terms[exps]
        mono = _format_monomial(p._names, exps)
        if not mono:
            text = format_rational(coeff)
        elif coeff == 1:
            text = mono
        elif coeff == -1:
            text = '-' + mono
        else:
            text = '%s*%s' % (format_rational(coeff), mono)
        if not pieces:
            pieces.append(text)
        elif text.startswith('-'):
            pieces.append(' - ' + text[1:])
        else:
            pieces.append(' + ' + text)
    return ''.join(pieces)
