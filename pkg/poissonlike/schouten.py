# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"""
Defines the Schouten bracket of constant coefficient multivectors over a Lie
algebra (:func:`schouten_bracket`), the coboundary operator :func:`d_pi`, and
the Poisson residual ``[pi, pi]`` (:func:`poisson_residual`).
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
)

from .exc import DegreeMismatch, SpaceMismatch
from .scalars import const
from .exterior import TANGENT, COTANGENT, ExteriorElement, sort_sign, wedge


def _check_tangent(L, *elements):
    for element in elements:
        if not isinstance(element, ExteriorElement):
            raise TypeError('expected an ExteriorElement, not %r' % (element,))
        if element.space != TANGENT:
            raise SpaceMismatch(
                'the Schouten bracket takes multivectors, not %s elements' %
                element.space)
        if element.n != L.n:
            raise SpaceMismatch(
                'element of dimension %d used with a %d-dimensional algebra' %
                (element.n, L.n))


def _bracket_monomials(L, I, J):
    # sum over i, j of (-1)^(i+j) [y_Ii, y_Jj] ^ y_(I without i) ^ y_(J without j)
    result = {}
    for i, a in enumerate(I):
        rest_i = I[:i] + I[i + 1:]
        for j, b in enumerate(J):
            rhs = L.bracket_generators(a, b)
            if not rhs:
                continue
            rest_j = J[:j] + J[j + 1:]
            outer = -1 if (i + j) % 2 else 1
            for k, coeff in rhs.items():
                sign, idx = sort_sign((k,) + rest_i + rest_j)
                if sign:
                    result[idx] = result.get(idx, const(0)) + (
                        sign * outer * coeff)
    return result


def schouten_bracket(L, A, B):
    """
    Return the Schouten bracket ``[A, B]`` of the multivectors *A* and *B*
    over the Lie algebra *L*. On decomposable monomials this is the sum of
    ``(-1)^(i+j) [X_i, Y_j] ^ X_1..X_i-hat..X_r ^ Y_1..Y_j-hat..Y_s``,
    extended bilinearly; scalars bracket to zero.
    """
    _check_tangent(L, A, B)
    terms = {}
    for I, a in A.terms.items():
        for J, b in B.terms.items():
            for idx, coeff in _bracket_monomials(L, I, J).items():
                terms[idx] = terms.get(idx, const(0)) + a * b * coeff
    return ExteriorElement(TANGENT, L.n, terms)


def _homogeneous_degree(pi, what='pi'):
    if not pi:
        raise DegreeMismatch('%s is zero and has no degree' % what)
    if not pi.is_homogeneous:
        raise DegreeMismatch('%s mixes degrees %r' % (what, pi.degrees()))
    return pi.degree


def d_pi(L, pi, U):
    """
    Apply the coboundary operator ``d_pi = [pi, .]`` to the multivector *U*.
    For *pi* of degree ``p0`` this maps degree ``m`` to ``m + p0 - 1``.

    Scalars are not part of the multivector superalgebra, so a *U* with a
    degree 0 component raises :exc:`~poissonlike.exc.DegreeMismatch`, as does
    an inhomogeneous *pi*.
    """
    _check_tangent(L, pi, U)
    if pi and not pi.is_homogeneous:
        raise DegreeMismatch('pi mixes degrees %r' % (pi.degrees(),))
    if () in U.terms:
        raise DegreeMismatch('d_pi is not defined on scalars')
    return schouten_bracket(L, pi, U)


def poisson_residual(L, pi):
    """
    Return ``[pi, pi]``. Its non-zero coefficients form the Poisson
    condition system; :func:`poisson_conditions` lists them.
    """
    return schouten_bracket(L, pi, pi)


def poisson_conditions(L, pi):
    "Return the non-zero coefficients of ``[pi, pi] / 2`` in basis order."
    return [coeff / 2 for _, coeff in poisson_residual(L, pi).items()]


def wedge_square(pi):
    "Return ``pi ^ pi``; a non-zero top degree part marks a symplectic pi."
    return wedge(pi, pi)


def grade(U):
    """
    Return the superalgebra grade of the homogeneous element *U*: degree
    minus one for multivectors and degree plus one for forms. The zero
    element has no grade and yields :data:`None`.
    """
    degree = U.degree
    if degree is None:
        return None
    if U.space == COTANGENT:
        return degree + 1
    return degree - 1
