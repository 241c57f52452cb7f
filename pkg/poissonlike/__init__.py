# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Poisson-like cohomology of Lie superalgebras
# Copyright (c) 2024 The poissonlike developers
#
# SPDX-License-Identifier: BSD-3-Clause

"""
The :mod:`poissonlike` module is the main namespace for the poissonlike
package; it imports (and exposes) all publically accessible classes,
functions, and constants from all the modules beneath it for convenience.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
)

from .exc import (
    PoissonLikeError,
    ParseError,
    MissingParameter,
    IndexOutOfRange,
    DegreeMismatch,
    InhomogeneousLeftArgument,
    SpaceMismatch,
    SideMismatch,
    ShapeMismatch,
    NotAComplex,
    PoissonLikeWarning,
    UnusedAssignmentWarning,
)
from .scalars import (
    ParamPoly, as_poly, const, param,
    poly_add, poly_mul, poly_eval,
    format_rational, format_poly,
)
from .exterior import (
    TANGENT, COTANGENT, SPACES,
    ExteriorElement,
    sort_sign, complement, basis_enum,
    scalar, monomial, element_from_terms, generator,
    wedge, pairing, volume_sign, contract_volume, uncontract_volume,
    format_monomial,
)
from .polyfield import (
    PolyMultiVector, PoissonSystem,
    coordinate, frame, dim_Ckm, monomials, basis_Ckm,
    poly_wedge, poly_schouten, poly_d,
    poly_contract_volume, poly_uncontract_volume,
    default_chain, poly_dpi_matrices, volume_dual_matrices,
    poly_betti, volume_dual_betti,
    poly_de_rham_matrices, poly_de_rham_betti,
    general_param_tensor, poisson_system,
)
from .formats import (
    parse_poly, parse_element, parse_poly_multivector, parse_assignment,
    dumps, load_json, fixture_path,
    element_to_json, element_from_json,
    tensor_to_json, tensor_from_json, load_tensor,
    solution_from_json, load_solution,
    matrix_to_json, report_to_json, axiom_report_to_json, system_to_json,
    double_complex_to_json,
    format_table, format_matrix, format_rationals,
)
from .liealg import (
    LieAlgebra, AxiomReport, JacobiViolation,
    parse_algebra, algebra_from_json, load_algebra, algebra_to_json,
    jacobi_residual, validate, bracket,
)
from .schouten import (
    schouten_bracket, d_pi, poisson_residual, poisson_conditions,
    wedge_square, grade,
)
from .forms import (
    generator_differentials, ce_d, form_bracket, d_phi,
    exterior_multiplication,
)
from .cohomology import (
    OperatorMatrix, BettiReport, AlternatingSum, ChainComplex,
    operator_matrix, rank_of_rows, rank,
    betti_sequence, d_squared_check, alternating_sum_check,
    tangent_complex, form_complex, de_rham_complex,
)
from .duality import (
    DoubleComplexReport,
    dual_operator, dual_image, compose, de_rham_operator,
    double_complex_report,
)
