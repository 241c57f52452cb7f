# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"""
Defines the exceptions and warnings raised by the poissonlike package.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
)


class PoissonLikeError(Exception):
    "Base class for errors raised by the poissonlike engine"


class ParseError(PoissonLikeError, ValueError):
    """
    Raised when an algebra file, tensor file, or literal cannot be parsed.
    The *reason* attribute describes the problem; *line* and *column* locate
    it when known (otherwise they are :data:`None`).
    """
    def __init__(self, reason, line=None, column=None):
        self.reason = reason
        self.line = line
        self.column = column
        if line is not None and column is not None:
            msg = 'line %d, column %d: %s' % (line, column, reason)
        elif line is not None:
            msg = 'line %d: %s' % (line, reason)
        elif column is not None:
            msg = 'column %d: %s' % (column, reason)
        else:
            msg = reason
        super(ParseError, self).__init__(msg)


class MissingParameter(PoissonLikeError, LookupError):
    "Raised when evaluation needs a parameter the assignment does not cover"
    def __init__(self, name):
        self.name = name
        super(MissingParameter, self).__init__(
            'no value assigned to parameter %s' % name)

    def __str__(self):
        return self.args[0]


class IndexOutOfRange(PoissonLikeError, IndexError):
    "Raised when a basis index lies outside 1..n"
    def __init__(self, index, n):
        self.index = index
        self.n = n
        super(IndexOutOfRange, self).__init__(
            'basis index %d is outside 1..%d' % (index, n))


class DegreeMismatch(PoissonLikeError, ValueError):
    "Raised when an operand has the wrong (or no single) exterior degree"


class InhomogeneousLeftArgument(DegreeMismatch):
    "Raised when the left argument of the form bracket mixes degrees"


class SpaceMismatch(PoissonLikeError, ValueError):
    "Raised when tangent and cotangent elements (or dimensions) are mixed"


class SideMismatch(SpaceMismatch):
    "Raised when polynomial multivectors and forms are mixed"


class ShapeMismatch(PoissonLikeError, ValueError):
    "Raised when operator matrices cannot be composed"


class NotAComplex(PoissonLikeError):
    """
    Raised when an operator does not square to zero after substitution. The
    *degree* attribute names the degree at which the composition fails, and
    *residual* holds the offending composite (an
    :class:`~poissonlike.cohomology.OperatorMatrix` or an element).
    """
    def __init__(self, degree, residual, msg=None):
        self.degree = degree
        self.residual = residual
        if msg is None:
            msg = 'operator does not square to zero at degree %s' % (degree,)
        super(NotAComplex, self).__init__(msg)


class PoissonLikeWarning(Warning):
    "Base class for warnings raised by the poissonlike package"


class UnusedAssignmentWarning(PoissonLikeWarning):
    "Warning raised when an assignment names parameters that never occur"
