# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"""
Defines the dual coboundary operator ``delta`` on forms, characterized by
``<Omega, d_pi U> = <delta Omega, U>`` under the natural pairing, together
with :func:`compose` for families of operator matrices and the
:func:`double_complex_report` which sets ``delta`` against the de Rham
differential.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
)

import logging
from collections import namedtuple

from .exc import DegreeMismatch, ShapeMismatch
from .scalars import const
from .exterior import COTANGENT, TANGENT, ExteriorElement, basis_enum, pairing
from .schouten import d_pi
from .cohomology import (
    OperatorMatrix,
    operator_matrix,
    betti_sequence,
    de_rham_complex,
)

logger = logging.getLogger(__name__)


class DoubleComplexReport(namedtuple('DoubleComplexReport', (
        'betti_d',
        'betti_delta',
        'delta_d',
        'd_delta',
        'anticommutator',
))):
    """
    A :func:`~collections.namedtuple` returned by
    :func:`double_complex_report`. *betti_d* and *betti_delta* are the
    :class:`~poissonlike.cohomology.BettiReport` of the de Rham differential
    and of ``delta`` (:data:`None` when parameters remain); *delta_d* and
    *d_delta* hold the matrices of ``delta o d`` and ``d o delta`` per form
    degree, and *anticommutator* their sums.
    """
    __slots__ = ()

    @property
    def anticommutators(self):
        "The ``(delta o d, d o delta)`` residual families."
        return self.delta_d, self.d_delta


def _pi_degree(pi, degree=None):
    if pi:
        if not pi.is_homogeneous:
            raise DegreeMismatch('pi mixes degrees %r' % (pi.degrees(),))
        degree = pi.degree
    elif degree is None:
        raise DegreeMismatch('pi is zero and has no degree')
    if degree < 2:
        raise DegreeMismatch('pi must have degree at least 2, not %d' % degree)
    return degree


def dual_operator(L, pi, degree=None):
    """
    Return the matrices of ``delta``, one per form degree ``0..n``. For *pi*
    of degree ``p0`` the matrix at form degree ``p`` maps to degree
    ``q = p - p0 + 1`` and is the transpose of the ``d_pi`` matrix at
    multivector degree ``q``. Degree 0 multivectors are outside the
    superalgebra, so the map into degree 0 forms vanishes; maps into
    negative degrees have no columns.

    A zero *pi* needs its *degree* and gives zero matrices.
    """
    p0 = _pi_degree(pi, degree)
    n = L.n
    result = []
    for p in range(n + 1):
        q = p - p0 + 1
        domain = basis_enum(n, p)
        codomain = basis_enum(n, q)
        label = 'delta(%d,%d)' % (p, q)
        if q >= 1:
            forward = operator_matrix(
                lambda U: d_pi(L, pi, U), n, q, p, TANGENT)
            entries = forward.entries.T
        else:
            entries = None
        result.append(OperatorMatrix(
            label, domain, codomain, entries, space=COTANGENT, source=p,
            target=q))
        logger.debug('built %s', label)
    return result


def dual_image(L, pi, omega):
    """
    Return ``delta(omega)`` as ``sum_U <omega, d_pi U> Dual U`` over the
    multivector basis. This element-wise form cross-checks the matrices of
    :func:`dual_operator`.
    """
    n = L.n
    terms = {}
    for m in range(1, n + 1):
        for idx in basis_enum(n, m):
            U = ExteriorElement(TANGENT, n, {idx: 1})
            value = pairing(omega, d_pi(L, pi, U))
            if value:
                terms[idx] = terms.get(idx, const(0)) + value
    return ExteriorElement(COTANGENT, n, terms)


def compose(first, second):
    """
    Return the composites "*first*, then *second*" for two families of
    operator matrices, pairing each matrix of *first* with the matrix of
    *second* whose source degree is its target degree. A matrix of *first*
    with no columns composes to itself (its image is zero). Any other
    unmatched matrix raises :exc:`~poissonlike.exc.ShapeMismatch`.
    """
    by_source = {matrix.source: matrix for matrix in second}
    result = []
    for matrix in first:
        follow = by_source.get(matrix.target)
        if follow is None:
            if matrix.shape[1]:
                raise ShapeMismatch(
                    'nothing follows %s at degree %s' % (
                        matrix.label, matrix.target))
            result.append(matrix)
        else:
            result.append(matrix.then(
                follow, label='%s o %s' % (follow.label, matrix.label)))
    return result


def _sum_by_source(first, second):
    result = []
    others = {matrix.source: matrix for matrix in second}
    for matrix in first:
        other = others.get(matrix.source)
        if other is None or not other.shape[1]:
            result.append(matrix)
        elif not matrix.shape[1]:
            result.append(other)
        else:
            result.append(matrix + other)
    return result


def de_rham_operator(L):
    "Return the Chevalley-Eilenberg matrices on forms of degree ``0..n``."
    return de_rham_complex(L).matrices


def double_complex_report(L, pi, assignment=None, degree=None):
    """
    Substitute *assignment* into *L* and *pi*, then return a
    :class:`DoubleComplexReport` with the Betti tables of ``d`` and
    ``delta`` and the residual matrices of both compositions. The residuals
    are reported, not required to vanish, and stay symbolic in any parameter
    left unassigned. Ranks need numbers, so the Betti tables are
    :data:`None` while parameters remain.

    The degree of *pi* is read before substituting, so an assignment that
    makes *pi* vanish leaves ``delta`` zero; a *pi* that is zero from the
    start needs *degree*.
    """
    p0 = _pi_degree(pi, degree)
    if assignment:
        L = L.subs(assignment)
        pi = pi.subs(assignment)
    n = L.n
    d = de_rham_operator(L)
    delta = dual_operator(L, pi, p0)
    dims = [len(basis_enum(n, a)) for a in range(n + 1)]
    degrees = list(range(1, n + 2))
    symbolic = sorted(set(L.parameters) | set(pi.parameters))
    if symbolic:
        logger.info(
            'double complex left symbolic in %s', ', '.join(symbolic))
        betti_d = betti_delta = None
    else:
        betti_d = betti_sequence(d, dims, 1, None, degrees)
        betti_delta = betti_sequence(delta, dims, 1 - p0, None, degrees)
        logger.info(
            'double complex: d betti %s, delta betti %s',
            betti_d.betti, betti_delta.betti)
    delta_d = compose(d, delta)
    d_delta = compose(delta, d)
    return DoubleComplexReport(
        betti_d, betti_delta, delta_d, d_delta,
        _sum_by_source(delta_d, d_delta))
