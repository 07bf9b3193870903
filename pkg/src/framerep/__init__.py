"""Frame-based discretization, representation, and inversion of linear
operators on finite-dimensional complex Hilbert spaces."""

from .errors import (
    BadGeneratorParams,
    DimensionMismatch,
    FormulaMismatch,
    FramerepError,
    IllConditioned,
    NotAFrame,
    NotBijective,
    ParseError,
    XiIsRiesz,
)
from .frames import (
    Frame,
    FrameBounds,
    GramMatrix,
    RieszReport,
    analysis,
    canonical_dual,
    coefficient_projector,
    frame_bounds,
    frame_operator,
    gen_frame,
    gram,
    is_riesz_basis,
    make_frame,
    synthesis,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    kernel_basis,
    pinv,
    projector_onto_range,
    range_contained,
    rank_of,
    rel_frobenius_error,
)
from .oprep import (
    AmbientOperator,
    CoefficientMatrix,
    DecompositionReport,
    JectivityReport,
    RepresentabilityReport,
    RieszEquivalenceReport,
    build_decomposition_counterexample,
    compose_rep,
    decompose_check,
    invert_from_matrix,
    is_representable,
    matrix_rep,
    multiplier,
    op_properties_from_matrix,
    operator_synth,
    pseudo_matrix_of_inverse,
    rank_one_expansion,
    riesz_equivalence_check,
)
from .solver import SolveReport, solve, solve_via_duals
from .verify import CheckRecord, SuiteConfig, SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "AmbientOperator",
    "BadGeneratorParams",
    "CheckRecord",
    "CoefficientMatrix",
    "DEFAULT_TOL",
    "DecompositionReport",
    "DimensionMismatch",
    "FormulaMismatch",
    "Frame",
    "FrameBounds",
    "FramerepError",
    "GramMatrix",
    "IllConditioned",
    "JectivityReport",
    "NotAFrame",
    "NotBijective",
    "ParseError",
    "RepresentabilityReport",
    "RieszEquivalenceReport",
    "RieszReport",
    "SolveReport",
    "SuiteConfig",
    "SuiteReport",
    "Tolerance",
    "XiIsRiesz",
    "analysis",
    "build_decomposition_counterexample",
    "canonical_dual",
    "coefficient_projector",
    "compose_rep",
    "decompose_check",
    "frame_bounds",
    "frame_operator",
    "gen_frame",
    "gram",
    "invert_from_matrix",
    "is_representable",
    "is_riesz_basis",
    "kernel_basis",
    "make_frame",
    "matrix_rep",
    "multiplier",
    "op_properties_from_matrix",
    "operator_synth",
    "pinv",
    "projector_onto_range",
    "pseudo_matrix_of_inverse",
    "range_contained",
    "rank_of",
    "rank_one_expansion",
    "rel_frobenius_error",
    "riesz_equivalence_check",
    "run_suite",
    "solve",
    "solve_via_duals",
    "synthesis",
]
