"""Closed-form machinery for Lorentz bivectors and their spin lifts.

The package decomposes Lorentz-algebra elements into commuting boost and
rotation parts, maps them through Clifford-algebra representations,
exponentiates the images in closed form, and lifts finite Lorentz
transformations to the spin double cover -- with an independent series oracle
validating every formula.
"""

from .bivector import (
    Bivector,
    MuPair,
    det_bivector,
    is_simple,
    mu_roots,
    orthogonal_decompose,
    plane_projection,
    tr2,
    wedge,
    wedge_factors,
)
from .clifford import (
    CliffordElement,
    Representation,
    blade_mask,
    blade_name,
    clifford_mul,
    gamma_rep,
    gamma_representation,
    lie_bracket_check,
    regular_rep,
    regular_representation,
    representation,
    spin_rep,
)
from .errors import (
    DegenerateDenominatorError,
    DegeneratePlaneError,
    InvalidBivectorError,
    InvalidMetricError,
    InvalidTransformationError,
    MalformedInputError,
    NegativeDiscriminantError,
    NonDiagonalMetricError,
    NotNonsimpleError,
    NotSimpleError,
    NotTracelessError,
    RankDeficiencyError,
    SimpleInputError,
    SimpleTransformError,
    SingularSigmaError,
    SpinLiftError,
    TracelessSimpleError,
)
from .expmap import (
    ExpCoefficients,
    exp_coefficients,
    exp_spin,
    exp_spin_factored,
    exp_spin_polynomial,
    exp_spin_simple,
    sin_ratio,
    sinh_ratio,
)
from .group_lift import (
    FactorPair,
    LorentzTransformation,
    factor_transform,
    is_simple_transform,
    lift,
    lift_nonsimple,
    lift_nonsimple_special,
    lift_simple,
    lift_special,
    log_simple,
    sign_normalize,
    simple_log_coefficients,
    tr2_transform,
)
from .metric import Metric, inner, make_metric, metric_from_matrix
from .oracle import (
    exp_series,
    intertwining_defect,
    random_bivector,
    random_transformation,
)
from .spin import (
    cross_trace_check,
    quad_trace_identity_check,
    recover_invariants,
    spin_cross_product,
    spin_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "Bivector",
    "CliffordElement",
    "DegenerateDenominatorError",
    "DegeneratePlaneError",
    "ExpCoefficients",
    "FactorPair",
    "InvalidBivectorError",
    "InvalidMetricError",
    "InvalidTransformationError",
    "LorentzTransformation",
    "MalformedInputError",
    "Metric",
    "MuPair",
    "NegativeDiscriminantError",
    "NonDiagonalMetricError",
    "NotNonsimpleError",
    "NotSimpleError",
    "NotTracelessError",
    "RankDeficiencyError",
    "Representation",
    "SimpleInputError",
    "SimpleTransformError",
    "SingularSigmaError",
    "SpinLiftError",
    "TracelessSimpleError",
    "blade_mask",
    "blade_name",
    "clifford_mul",
    "cross_trace_check",
    "det_bivector",
    "exp_coefficients",
    "exp_series",
    "exp_spin",
    "exp_spin_factored",
    "exp_spin_polynomial",
    "exp_spin_simple",
    "factor_transform",
    "gamma_rep",
    "gamma_representation",
    "inner",
    "intertwining_defect",
    "is_simple",
    "is_simple_transform",
    "lie_bracket_check",
    "lift",
    "lift_nonsimple",
    "lift_nonsimple_special",
    "lift_simple",
    "lift_special",
    "log_simple",
    "make_metric",
    "metric_from_matrix",
    "mu_roots",
    "orthogonal_decompose",
    "plane_projection",
    "quad_trace_identity_check",
    "random_bivector",
    "random_transformation",
    "recover_invariants",
    "regular_rep",
    "regular_representation",
    "representation",
    "sign_normalize",
    "simple_log_coefficients",
    "sin_ratio",
    "sinh_ratio",
    "spin_cross_product",
    "spin_decompose",
    "spin_rep",
    "tr2",
    "tr2_transform",
    "wedge",
    "wedge_factors",
]
