# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"""
Defines the :class:`PolyMultiVector` class, multivector fields and forms on
``R^n`` with polynomial coefficients, and the calculus on them: the Schouten
bracket :func:`poly_schouten`, :func:`poly_wedge`, the exterior derivative
:func:`poly_d`, the spaces ``C_k^m`` (:func:`dim_Ckm`, :func:`basis_Ckm`),
the ``d_pi`` matrices and their volume duals, and the Poisson condition
system of a parametric tensor.

Basis keys are ``(exponents, idx)`` pairs where *exponents* has one entry
per coordinate ``x1..xn`` and *idx* is the frame multi-index (``y`` frames
on the tangent side, ``z = dx`` on the cotangent side).
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
from math import comb

from .exc import DegreeMismatch, NotAComplex, SideMismatch
from .scalars import ParamPoly, as_poly, const, param
from .exterior import (
    TANGENT,
    COTANGENT,
    SPACES,
    basis_enum,
    check_idx,
    complement,
    format_field_monomial,
    format_terms,
    sort_sign,
    volume_sign,
)
from .cohomology import OperatorMatrix, betti_sequence

# Make Py2's str equivalent to Py3's
str = type('')  # pylint: disable=redefined-builtin,invalid-name

logger = logging.getLogger(__name__)


class PolyMultiVector(object):
    """
    An immutable multivector field (*side* ``'tangent'``) or differential
    form (*side* ``'cotangent'``) on ``R^n`` with polynomial coefficients.

    *terms* maps ``(exponents, idx)`` keys to coefficients; the coefficient
    of a key multiplies the coordinate monomial ``x^exponents`` and the frame
    monomial ``idx``. Coefficients are :class:`~poissonlike.scalars.ParamPoly`
    values, so tensors may carry symbolic parameters.
    """

    __slots__ = ('_n', '_side', '_terms')

    def __init__(self, n, side=TANGENT, terms=None):
        if not isinstance(n, numbers.Integral) or n < 0:
            raise ValueError('dimension must be a natural number')
        if side not in SPACES:
            raise ValueError('side must be %r or %r, not %r' % (
                TANGENT, COTANGENT, side))
        self._n = n
        self._side = side
        self._terms = {}
        for (exps, idx), coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(
                    not isinstance(e, numbers.Integral) or e < 0
                    for e in exps):
                raise ValueError(
                    'exponents %r do not describe a monomial in %d '
                    'coordinates' % (exps, n))
            idx = check_idx(idx, n)
            coeff = as_poly(coeff)
            if coeff:
                key = (exps, idx)
                self._terms[key] = self._terms.get(key, const(0)) + coeff
        self._terms = {k: c for k, c in self._terms.items() if c}

    @classmethod
    def _make(cls, n, side, terms):
        result = cls.__new__(cls)
        result._n = n
        result._side = side
        result._terms = {key: coeff for key, coeff in terms.items() if coeff}
        return result

    @property
    def n(self):
        return self._n

    @property
    def side(self):
        "Either ``'tangent'`` or ``'cotangent'``."
        return self._side

    @property
    def terms(self):
        return dict(self._terms)

    @property
    def parameters(self):
        "The sorted tuple of parameter names occurring in any coefficient."
        return tuple(sorted({
            name for coeff in self._terms.values() for name in coeff.names}))

    def items(self):
        """
        Return ``((exponents, idx), coeff)`` pairs ordered by exterior
        degree, frame multi-index, then descending coordinate monomial.
        """
        return sorted(
            self._terms.items(),
            key=lambda item: (
                len(item[0][1]), sum(item[0][0]), item[0][1],
                tuple(-e for e in item[0][0])))

    def bidegrees(self):
        "Return the sorted list of ``(k, m)`` bidegrees present."
        return sorted({(sum(exps), len(idx)) for exps, idx in self._terms})

    def homogeneous_part(self, k, m):
        "Return the part of polynomial degree *k* and exterior degree *m*."
        return PolyMultiVector._make(self._n, self._side, {
            (exps, idx): coeff
            for (exps, idx), coeff in self._terms.items()
            if sum(exps) == k and len(idx) == m})

    def coefficient(self, exps, idx):
        "Return the coefficient of ``x^exps`` times the frame monomial *idx*."
        sign, key = sort_sign(idx)
        if not sign:
            return const(0)
        return sign * self._terms.get((tuple(exps), key), const(0))

    def subs(self, assignment):
        "Substitute *assignment* into every coefficient."
        return PolyMultiVector._make(self._n, self._side, {
            key: coeff.subs(assignment)
            for key, coeff in self._terms.items()})

    def partial(self, i):
        "Return the coefficient-wise derivative by the coordinate ``x_i``."
        if not 1 <= i <= self._n:
            raise ValueError('no coordinate x%d in dimension %d' % (i, self._n))
        terms = {}
        for (exps, idx), coeff in self._terms.items():
            exp = exps[i - 1]
            if exp:
                lowered = exps[:i - 1] + (exp - 1,) + exps[i:]
                terms[(lowered, idx)] = coeff * exp
        return PolyMultiVector._make(self._n, self._side, terms)

    def _check(self, other):
        if not isinstance(other, PolyMultiVector):
            raise TypeError('expected a PolyMultiVector, not %r' % (other,))
        if other._side != self._side:
            raise SideMismatch(
                'cannot combine %s and %s fields' % (self._side, other._side))
        if other._n != self._n:
            raise SideMismatch(
                'cannot combine fields on R^%d and R^%d' % (
                    self._n, other._n))

    def __add__(self, other):
        if isinstance(other, (numbers.Rational, ParamPoly)):
            other = PolyMultiVector._make(
                self._n, self._side,
                {((0,) * self._n, ()): as_poly(other)})
        self._check(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, const(0)) + coeff
        return PolyMultiVector._make(self._n, self._side, terms)

    __radd__ = __add__

    def __neg__(self):
        return PolyMultiVector._make(self._n, self._side, {
            key: -coeff for key, coeff in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PolyMultiVector):
            return poly_wedge(self, other)
        if isinstance(other, (numbers.Rational, ParamPoly)):
            return PolyMultiVector._make(self._n, self._side, {
                key: coeff * other for key, coeff in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __xor__(self, other):
        return poly_wedge(self, other)

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if isinstance(other, numbers.Rational) and not other:
            return not self._terms
        if not isinstance(other, PolyMultiVector):
            return NotImplemented
        return (
            self._n == other._n and
            self._side == other._side and
            self._terms == other._terms)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __str__(self):
        return format_terms(
            (coeff, format_field_monomial(self._side, exps, idx)
                if exps != (0,) * self._n or idx else '')
            for (exps, idx), coeff in self.items())

    def __repr__(self):
        return 'PolyMultiVector(%d, %r, %r)' % (self._n, self._side, str(self))


def coordinate(n, i, side=TANGENT):
    "Return the coordinate function ``x_i`` on ``R^n``."
    exps = tuple(1 if j == i else 0 for j in range(1, n + 1))
    return PolyMultiVector(n, side, {(exps, ()): 1})


def frame(n, i, side=TANGENT):
    "Return the frame ``y_i`` (or the differential ``z_i = dx_i``)."
    return PolyMultiVector(n, side, {((0,) * n, (i,)): 1})


def dim_Ckm(n, k, m):
    """
    Return the dimension ``C(n, m) * C(n - 1 + k, n - 1)`` of the space of
    *m*-vector fields (or *m*-forms) on ``R^n`` with homogeneous degree *k*
    polynomial coefficients.
    """
    if m < 0 or m > n or k < 0 or n < 1:
        return 0
    return comb(n, m) * comb(n - 1 + k, n - 1)


def monomials(n, k):
    """
    Return the exponent vectors of the degree *k* monomials in ``x1..xn`` in
    descending lexicographic order (``x1^k`` first).
    """
    if k < 0:
        return []
    if n == 0:
        return [()] if k == 0 else []
    return [
        (first,) + rest
        for first in range(k, -1, -1)
        for rest in monomials(n - 1, k - first)
    ]


def basis_Ckm(n, k, m):
    """
    Return the ordered basis of ``C_k^m`` as ``(exponents, idx)`` keys: frame
    multi-indices in lexicographic order and, within each, coordinate
    monomials in descending lexicographic order.
    """
    return [
        (exps, idx)
        for idx in basis_enum(n, m)
        for exps in monomials(n, k)
    ]


def _multiply(a, b, n, side):
    terms = {}
    for (xa, ia), ca in a.items():
        for (xb, ib), cb in b.items():
            sign, idx = sort_sign(ia + ib)
            if not sign:
                continue
            key = (tuple(p + q for p, q in zip(xa, xb)), idx)
            terms[key] = terms.get(key, const(0)) + sign * ca * cb
    return PolyMultiVector._make(n, side, terms)


def poly_wedge(A, B):
    """
    Return the wedge product of *A* and *B*: coordinate monomials multiply
    and frame monomials wedge with the sorting sign. Mixing sides or
    dimensions raises :exc:`~poissonlike.exc.SideMismatch`.
    """
    A._check(B)
    return _multiply(A._terms, B._terms, A._n, A._side)


def _derive(exps, i):
    exp = exps[i - 1]
    if not exp:
        return None, 0
    return exps[:i - 1] + (exp - 1,) + exps[i:], exp


def _bracket_terms(f, I, g, J, result):
    # [f y_I, g y_J] = sum_i (-1)^(r-i) f d_(I_i) g  y_(I-i) ^ y_J
    #                - sum_j (-1)^(j+1) g d_(J_j) f  y_I ^ y_(J-j)
    (fx, fc), (gx, gc) = f, g
    r = len(I)
    for pos, a in enumerate(I, start=1):
        lowered, factor = _derive(gx, a)
        if not factor:
            continue
        sign, idx = sort_sign(I[:pos - 1] + I[pos:] + J)
        if not sign:
            continue
        if (r - pos) % 2:
            sign = -sign
        key = (tuple(p + q for p, q in zip(fx, lowered)), idx)
        result[key] = result.get(key, const(0)) + sign * factor * fc * gc
    for pos, b in enumerate(J, start=1):
        lowered, factor = _derive(fx, b)
        if not factor:
            continue
        sign, idx = sort_sign(I + J[:pos - 1] + J[pos:])
        if not sign:
            continue
        if pos % 2:
            sign = -sign
        key = (tuple(p + q for p, q in zip(lowered, gx)), idx)
        result[key] = result.get(key, const(0)) + sign * factor * fc * gc


def poly_schouten(A, B):
    """
    Return the Schouten bracket of the multivector fields *A* and *B* on
    ``R^n``, where the coordinate frames commute (``[y_i, y_j] = 0``) and
    ``[y_i, f] = df/dx_i``. On ``f y_I`` and ``g y_J`` of exterior degrees
    ``r`` and ``s`` the result has exterior degree ``r + s - 1``.
    """
    A._check(B)
    if A._side != TANGENT:
        raise SideMismatch('the Schouten bracket takes multivector fields')
    result = {}
    for (fx, I), fc in A._terms.items():
        for (gx, J), gc in B._terms.items():
            _bracket_terms((fx, fc), I, (gx, gc), J, result)
    return PolyMultiVector._make(A._n, TANGENT, result)


def poly_d(omega):
    """
    Return the exterior derivative of the form *omega*: ``d(x_i) = z_i``,
    ``d(z_i) = 0``, so ``d(f z_I) = sum_i df/dx_i z_i ^ z_I``.
    """
    if omega.side != COTANGENT:
        raise SideMismatch('the exterior derivative takes forms')
    n = omega.n
    terms = {}
    for (exps, idx), coeff in omega._terms.items():
        for i in range(1, n + 1):
            lowered, factor = _derive(exps, i)
            if not factor:
                continue
            sign, key = sort_sign((i,) + idx)
            if sign:
                key = (lowered, key)
                terms[key] = terms.get(key, const(0)) + sign * factor * coeff
    return PolyMultiVector._make(n, COTANGENT, terms)


def poly_contract_volume(U):
    """
    Return ``<Vol, U>``: the coefficient-wise contraction of the multivector
    field *U* against the standard volume form, sending ``f y_I`` to
    ``eps(I, I^c) f z_(I^c)``.
    """
    if U.side != TANGENT:
        raise SideMismatch('only multivector fields contract against Vol')
    n = U.n
    return PolyMultiVector._make(n, COTANGENT, {
        (exps, complement(idx, n)): volume_sign(idx, n) * coeff
        for (exps, idx), coeff in U._terms.items()})


def poly_uncontract_volume(omega):
    "The inverse of :func:`poly_contract_volume`."
    if omega.side != COTANGENT:
        raise SideMismatch('only forms have a volume preimage')
    n = omega.n
    result = {}
    for (exps, idx), coeff in omega._terms.items():
        rest = complement(idx, n)
        result[(exps, rest)] = volume_sign(rest, n) * coeff
    return PolyMultiVector._make(n, TANGENT, result)


def _field_matrix(op, n, side, domain, codomain, label, source, target):
    columns = {key: c for c, key in enumerate(codomain)}
    rows = [[const(0)] * len(codomain) for _ in domain]
    for r, key in enumerate(domain):
        image = op(PolyMultiVector._make(n, side, {key: const(1)}))
        for out, coeff in image._terms.items():
            try:
                rows[r][columns[out]] = coeff
            except KeyError:
                raise DegreeMismatch(
                    '%s: image of %s leaves the expected space' % (
                        label, format_field_monomial(side, *key)))
    logger.debug('built %s (%dx%d)', label, len(domain), len(codomain))
    return OperatorMatrix(
        label, domain, codomain, rows if domain and codomain else None,
        space=side, source=source, target=target)


def _check_chain(h, chain):
    for (k, m), (k2, m2) in zip(chain, chain[1:]):
        if (k2, m2) != (h + k - 1, m + 1):
            raise ValueError(
                'chain step (%d,%d) -> (%d,%d) does not follow d_pi' % (
                    k, m, k2, m2))


def _poisson_pi(pi, assignment):
    if pi.side != TANGENT:
        raise SideMismatch('pi must be a multivector field')
    if assignment:
        pi = pi.subs(assignment)
    residual = poly_schouten(pi, pi)
    if residual:
        raise NotAComplex(
            None, residual, '[pi, pi] does not vanish: %s' % residual)
    return pi


def default_chain(n, h, k0=0, m0=1):
    """
    Return the chain of ``(k, m)`` bidegrees starting at ``(k0, m0)`` and
    stepping ``(k, m) -> (h + k - 1, m + 1)`` while ``m <= n``.
    """
    chain = []
    k, m = k0, m0
    while m <= n:
        chain.append((k, m))
        k, m = h + k - 1, m + 1
    return chain


def poly_dpi_matrices(pi, h, chain=None, assignment=None):
    """
    Return the matrices of ``d_pi = [pi, .]`` from ``C_k^m`` to
    ``C_(h+k-1)^(m+1)`` for each ``(k, m)`` in *chain* (default
    :func:`default_chain` from ``(0, 1)``). Raises
    :exc:`~poissonlike.exc.NotAComplex` when ``[pi, pi]`` does not vanish
    after substituting *assignment*.
    """
    pi = _poisson_pi(pi, assignment)
    n = pi.n
    if chain is None:
        chain = default_chain(n, h)
    _check_chain(h, chain)
    return [
        _field_matrix(
            lambda U: poly_schouten(pi, U), n, TANGENT,
            basis_Ckm(n, k, m), basis_Ckm(n, h + k - 1, m + 1),
            'd_pi C_%d^%d' % (k, m), (k, m), (h + k - 1, m + 1))
        for k, m in chain
    ]


def volume_dual_matrices(pi, h, chain=None, assignment=None):
    """
    Return the matrices of the volume dual ``delta`` of ``d_pi``: for each
    ``(k, m)`` in *chain* the map on ``C^(n-m)_k`` sending a form to
    ``<Vol, d_pi U>`` where ``<Vol, U>`` is the form.
    """
    pi = _poisson_pi(pi, assignment)
    n = pi.n
    if chain is None:
        chain = default_chain(n, h)
    _check_chain(h, chain)

    def delta(omega):
        return poly_contract_volume(
            poly_schouten(pi, poly_uncontract_volume(omega)))

    return [
        _field_matrix(
            delta, n, COTANGENT,
            basis_Ckm(n, k, n - m), basis_Ckm(n, h + k - 1, n - m - 1),
            'delta C^%d_%d' % (n - m, k), (k, n - m),
            (h + k - 1, n - m - 1))
        for k, m in chain
    ]


def _chain_report(matrices, n, chain, assignment):
    dims = [dim_Ckm(n, k, m) for k, m in chain]
    degrees = [m - 1 for _, m in chain]
    return betti_sequence(matrices, dims, 1, assignment, degrees)


def poly_betti(pi, h, chain=None, assignment=None):
    """
    Return the :class:`~poissonlike.cohomology.BettiReport` of ``d_pi``
    along *chain*. Degrees are the Schouten grades ``m - 1``.
    """
    if chain is None:
        chain = default_chain(pi.n, h)
    matrices = poly_dpi_matrices(pi, h, chain, assignment)
    return _chain_report(matrices, pi.n, chain, assignment)


def volume_dual_betti(pi, h, chain=None, assignment=None):
    """
    Return the :class:`~poissonlike.cohomology.BettiReport` of the volume
    dual, indexed by the multivector degrees it is dual to so that it lines
    up with :func:`poly_betti`.
    """
    if chain is None:
        chain = default_chain(pi.n, h)
    matrices = volume_dual_matrices(pi, h, chain, assignment)
    return _chain_report(matrices, pi.n, chain, assignment)


def poly_de_rham_matrices(n, chain):
    """
    Return the matrices of :func:`poly_d` from ``C^m_k`` to
    ``C^(m+1)_(k-1)`` for each ``(k, m)`` in *chain*.
    """
    for (k, m), (k2, m2) in zip(chain, chain[1:]):
        if (k2, m2) != (k - 1, m + 1):
            raise ValueError(
                'chain step (%d,%d) -> (%d,%d) does not follow d' % (
                    k, m, k2, m2))
    return [
        _field_matrix(
            poly_d, n, COTANGENT, basis_Ckm(n, k, m),
            basis_Ckm(n, k - 1, m + 1), 'd C^%d_%d' % (m, k), (k, m),
            (k - 1, m + 1))
        for k, m in chain
    ]


def poly_de_rham_betti(n, total):
    """
    Return the :class:`~poissonlike.cohomology.BettiReport` of the
    polynomial de Rham chain ``C^0_total -> C^1_(total-1) -> ...`` up to
    ``min(n, total)``-forms. Form degrees serve as grades.
    """
    chain = [(total - m, m) for m in range(min(n, total) + 1)]
    matrices = poly_de_rham_matrices(n, chain)
    dims = [dim_Ckm(n, k, m) for k, m in chain]
    return betti_sequence(matrices, dims, 1, None, [m for _, m in chain])


def general_param_tensor(n, h, m, prefix='C'):
    """
    Return the general element of ``C_h^m`` with one fresh parameter per
    basis monomial, named ``C1, C2, ...`` in :func:`basis_Ckm` order.
    """
    return PolyMultiVector(n, TANGENT, {
        key: param('%s%d' % (prefix, number))
        for number, key in enumerate(basis_Ckm(n, h, m), start=1)
    })


class PoissonSystem(namedtuple('PoissonSystem', (
        'equations', 'target_dim'))):
    """
    A :func:`~collections.namedtuple` returned by :func:`poisson_system`.
    *equations* lists ``(label, polynomial)`` pairs, one per target basis
    monomial of ``[pi, pi]`` with a non-zero coefficient; *target_dim* is the
    dimension of the target space.
    """
    __slots__ = ()

    @property
    def count(self):
        "The number of non-zero equations."
        return len(self.equations)

    @property
    def polynomials(self):
        return [poly for _, poly in self.equations]

    def subs(self, assignment):
        """
        Substitute *assignment* into every equation, keeping those that do
        not vanish identically.
        """
        equations = [
            (label, poly.subs(assignment)) for label, poly in self.equations]
        return self._replace(
            equations=[(label, poly) for label, poly in equations if poly])


def poisson_system(pi, h=None, m=None):
    """
    Return the :class:`PoissonSystem` of the tensor *pi*: the coefficients
    of ``[pi, pi]`` in the basis of its target space ``C_(2h-1)^(2m-1)``,
    with identically zero coefficients omitted. The bidegree ``(h, m)`` is
    read from *pi* unless given.
    """
    if h is None or m is None:
        bidegrees = pi.bidegrees()
        if len(bidegrees) != 1:
            raise DegreeMismatch(
                'pi must be bihomogeneous, not of bidegrees %r' % bidegrees)
        h, m = bidegrees[0]
    n = pi.n
    residual = poly_schouten(pi, pi)
    target = basis_Ckm(n, 2 * h - 1, 2 * m - 1)
    terms = residual.terms
    equations = []
    for key in target:
        coeff = terms.get(key)
        if coeff:
            equations.append((format_field_monomial(TANGENT, *key), coeff))
    logger.info(
        '%d non-zero Poisson equations in a target of dimension %d',
        len(equations), len(target))
    return PoissonSystem(equations, len(target))
