"""Exact implicitization of rational parameterizations via approximation complexes."""

__version__ = "0.1.0"

from .arith import ParamPoly, TargetLinForm, TargetPoly, binary_form_gcd, divexact, \
    normalize, param_poly_mul, parse_poly, substitute_targets, target_poly_divexact
from .complex import ComplexSlice, assemble_slice, build_v1, build_vp, nu0, syzygy_basis
from .detcomplex import DetComplexResult, cascade, check_generic_exactness, \
    divisibility_check
from .errors import ComplexPropertyViolated, DegenerateMap, HypothesisViolation, \
    ImplicitizationError, Inconsistent, InexactDivision, InternalError, \
    NotGenericallyExact, OracleFailed, ParseError, RankDeficient
from .koszul import KoszulSlice, MonomialBasis, koszul_exterior_basis, koszul_matrix, \
    monomial_basis
from .linalg import LinFormMatrix, QMatrix, left_kernel_basis, linform_determinant, \
    rank, select_independent_columns, solve_right
from .pipeline import ImplicitizationReport, Parameterization, degree_drop, \
    expected_degree, implicitize, membership_test, verify_by_substitution

__all__ = [
    "__version__",
    "ParamPoly",
    "TargetLinForm",
    "TargetPoly",
    "binary_form_gcd",
    "divexact",
    "normalize",
    "param_poly_mul",
    "parse_poly",
    "substitute_targets",
    "target_poly_divexact",
    "ComplexSlice",
    "assemble_slice",
    "build_v1",
    "build_vp",
    "nu0",
    "syzygy_basis",
    "DetComplexResult",
    "cascade",
    "check_generic_exactness",
    "divisibility_check",
    "ComplexPropertyViolated",
    "DegenerateMap",
    "HypothesisViolation",
    "ImplicitizationError",
    "Inconsistent",
    "InexactDivision",
    "InternalError",
    "NotGenericallyExact",
    "OracleFailed",
    "ParseError",
    "RankDeficient",
    "KoszulSlice",
    "MonomialBasis",
    "koszul_exterior_basis",
    "koszul_matrix",
    "monomial_basis",
    "LinFormMatrix",
    "QMatrix",
    "left_kernel_basis",
    "linform_determinant",
    "rank",
    "select_independent_columns",
    "solve_right",
    "ImplicitizationReport",
    "Parameterization",
    "degree_drop",
    "expected_degree",
    "implicitize",
    "membership_test",
    "verify_by_substitution",
]
