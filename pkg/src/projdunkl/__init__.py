"""Projection-difference derivative operators on orthogonal root subsystems.

Exact rational operator calculus (divided differences against wall
projections), the intertwining map and its inverses, the confluent kernel,
and the deformed Fourier transform, plus seeded verification suites.
"""

from .rootgeom import (
    OrthogonalSubsystem,
    RationalVector,
    XiDecomposition,
    build_subsystem_A,
    build_subsystem_B,
    build_subsystem_coordinate,
    decompose_xi,
    project,
    reflect,
    validate_subsystem,
)
from .polycore import (
    LinearMap,
    MPoly,
    classical_dunkl,
    compose_linear,
    directional_derivative,
    divided_difference,
    exact_div_linear,
    partial_derivative,
    poly_eval,
    reflection_difference,
)
from .gammaratio import GammaRatio, pochhammer
from .functions import TestFunction, catalog, get_function
from .opengine import (
    LaplacianSplit,
    ProjectionDunklOperator,
    apply_T_numeric,
    apply_T_poly,
    apply_T_poly_decomposed,
    commutator_poly,
    laplacian_direct,
    one_var_T,
    one_var_T_poly,
    one_var_T_squared,
    rho_poly,
)
from .intertwine import (
    GPoly,
    chi_inverse_numeric,
    chi_inverse_one_var,
    chi_numeric,
    chi_one_var,
    chi_one_var_numeric,
    chi_poly_scaled,
    dual_chi,
    duality_pairing,
    ek_left_inverse_D,
    erdelyi_kober_I,
    erdelyi_kober_I_numeric,
    h_map,
)
from .kummer import (
    MultivarEigenfunction,
    bold_M,
    bold_M_derivative,
    bold_M_on_imaginary,
    eigen_multivar,
    eigen_rank_one,
    generalized_ode_residual,
    kernel_grid_csv,
    kummer_M,
    kummer_M_derivative,
)
from .transform import (
    TransformRequest,
    c0_decay_check,
    factorization_check,
    kummer_transform,
    l1_norm,
    sup_norm_bound_check,
    transform_csv,
    transform_grid,
)
from .prng import SplitMix64
from .suites import SUITE_NAMES, SuiteConfig, VerificationReport, run_suites

__version__ = "0.1.0"

__all__ = [
    "OrthogonalSubsystem", "RationalVector", "XiDecomposition",
    "build_subsystem_A", "build_subsystem_B", "build_subsystem_coordinate",
    "decompose_xi", "project", "reflect", "validate_subsystem",
    "LinearMap", "MPoly", "classical_dunkl", "compose_linear",
    "directional_derivative", "divided_difference", "exact_div_linear",
    "partial_derivative", "poly_eval", "reflection_difference",
    "GammaRatio", "pochhammer",
    "TestFunction", "catalog", "get_function",
    "LaplacianSplit", "ProjectionDunklOperator", "apply_T_numeric",
    "apply_T_poly", "apply_T_poly_decomposed", "commutator_poly",
    "laplacian_direct", "one_var_T", "one_var_T_poly", "one_var_T_squared",
    "rho_poly",
    "GPoly", "chi_inverse_numeric", "chi_inverse_one_var", "chi_numeric",
    "chi_one_var", "chi_one_var_numeric", "chi_poly_scaled", "dual_chi",
    "duality_pairing", "ek_left_inverse_D", "erdelyi_kober_I",
    "erdelyi_kober_I_numeric", "h_map",
    "MultivarEigenfunction", "bold_M", "bold_M_derivative",
    "bold_M_on_imaginary", "eigen_multivar", "eigen_rank_one",
    "generalized_ode_residual", "kernel_grid_csv", "kummer_M",
    "kummer_M_derivative",
    "TransformRequest", "c0_decay_check", "factorization_check",
    "kummer_transform", "l1_norm", "sup_norm_bound_check", "transform_csv",
    "transform_grid",
    "SplitMix64",
    "SUITE_NAMES", "SuiteConfig", "VerificationReport", "run_suites",
    "__version__",
]
