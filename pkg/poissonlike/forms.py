# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"""
Defines the form side superalgebra of a Lie algebra: the Chevalley-Eilenberg
differential :func:`ce_d`, the super bracket :func:`form_bracket`, the
coboundary operator :func:`d_phi`, and :func:`exterior_multiplication`.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
)

from .exc import DegreeMismatch, InhomogeneousLeftArgument, SpaceMismatch
from .scalars import const
from .exterior import COTANGENT, ExteriorElement, sort_sign, wedge


def _check_forms(L, *elements):
    for element in elements:
        if not isinstance(element, ExteriorElement):
            raise TypeError('expected an ExteriorElement, not %r' % (element,))
        if element.space != COTANGENT:
            raise SpaceMismatch(
                'expected a form, not a %s element' % element.space)
        if element.n != L.n:
            raise SpaceMismatch(
                'form of dimension %d used with a %d-dimensional algebra' %
                (element.n, L.n))


def generator_differentials(L):
    """
    Return ``{k: {(i, j): coeff}}`` describing ``d z_k`` as
    ``-sum c^k_ij z_i ^ z_j`` over ``i < j``.
    """
    result = {}
    for (i, j), rhs in L.structure.items():
        for k, coeff in rhs.items():
            result.setdefault(k, {})[(i, j)] = -coeff
    return result


def ce_d(L, alpha):
    """
    Return the Chevalley-Eilenberg differential of the form *alpha*. It is
    fixed on generators by ``d z_k = -sum_(i<j) c^k_ij z_i ^ z_j``, vanishes
    on scalars, and extends as an odd derivation.
    """
    _check_forms(L, alpha)
    dz = generator_differentials(L)
    terms = {}
    for idx, coeff in alpha.terms.items():
        for t, k in enumerate(idx):
            parity = -1 if t % 2 else 1
            for pair, c in dz.get(k, {}).items():
                sign, key = sort_sign(idx[:t] + pair + idx[t + 1:])
                if sign:
                    terms[key] = terms.get(key, const(0)) + (
                        sign * parity * c * coeff)
    return ExteriorElement(COTANGENT, L.n, terms)


def _left_degree(alpha):
    try:
        degree = alpha.degree
    except DegreeMismatch:
        raise InhomogeneousLeftArgument(
            'left argument %s mixes degrees %r' % (alpha, alpha.degrees()))
    return degree


def form_bracket(L, alpha, beta):
    """
    Return the super bracket ``[alpha, beta] = (-1)^a d(alpha ^ beta)`` where
    *alpha* is a homogeneous ``a``-form. A mixed degree *alpha* raises
    :exc:`~poissonlike.exc.InhomogeneousLeftArgument`.
    """
    _check_forms(L, alpha, beta)
    a = _left_degree(alpha)
    if a is None:
        return ExteriorElement(COTANGENT, L.n)
    result = ce_d(L, wedge(alpha, beta))
    return -result if a % 2 else result


def d_phi(L, phi, U):
    """
    Apply the coboundary operator ``d_phi(U) = (-1)^p d(phi ^ U)`` of the
    homogeneous ``p``-form *phi*. It raises form degree by ``p + 1``; with
    ``phi = 1`` it is the de Rham differential.
    """
    return form_bracket(L, phi, U)


def exterior_multiplication(phi, U):
    "Return ``e_phi(U) = phi ^ U``."
    return wedge(phi, U)
