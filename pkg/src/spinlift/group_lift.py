"""Proper orthochronous Lorentz transformations and their spin lifts.

The trace pair (tr Lam, tr2 Lam) classifies a transformation: simple ones
(single boost or rotation plane) satisfy tr2 Lam = 2 (tr Lam - 1), and every
non-simple one factors into a commuting boost times rotation.  Each regime
admits a closed-form lift Sigma(Lam) into a spin representation, determined
up to global sign and characterized by the intertwining relation

    Sigma rho(u) Sigma^{-1} = rho(Lam u).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._linalg import maxabs, pivot_columns
from .bivector import Bivector, tr2, wedge
from .clifford import Representation, spin_rep
from .errors import (
    DegenerateDenominatorError,
    DegeneratePlaneError,
    InvalidTransformationError,
    NotNonsimpleError,
    NotSimpleError,
    NotTracelessError,
    RankDeficiencyError,
    SimpleTransformError,
    TracelessSimpleError,
)
from .metric import Metric

#: Relative tolerance for the defining invariants of a Lorentz transformation.
ORTHO_TOL = 1e-9
#: Default tolerance in the simple-transformation trace criterion.
SIMPLE_CRITERION_TOL = 1e-9
#: tr Lam at or below this routes simple transformations to the special lift.
TRACE_GATE = 1e-6
#: tr Lam at or below this is rejected by the simple logarithm.
LOG_TRACE_GATE = 1e-9
#: |tr Lam / 2 - 2| within this selects the parabolic logarithm branch (k = 1).
PARABOLIC_TOL = 1e-12
#: Minimum separation c_plus - c_minus accepted by the factorization.
FACTOR_GAP_TOL = 1e-8
#: Non-simple lifts switch to the special-case product below this denominator.
DENOMINATOR_GATE = 1e-6
#: Pivot threshold for the rank-2 test in the traceless special lift.
PIVOT_TOL = 1e-7


@dataclass(frozen=True, eq=False)
class LorentzTransformation:
    """Matrix Lam with Lam^T g Lam = g, det Lam = 1, Lam^0_0 >= 1.

    The orthochronous condition is enforced on the time-time entry (index 0
    in both supported signatures), and the trace is required non-negative as
    holds throughout the proper orthochronous component.
    """

    matrix: np.ndarray
    metric: Metric

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.shape != (4, 4):
            raise InvalidTransformationError(
                f"transformation must be 4x4, got shape {m.shape}"
            )
        if not np.isfinite(m).all():
            raise InvalidTransformationError("transformation entries must be finite")
        g = self.metric.matrix
        scale = max(1.0, maxabs(m) ** 2)
        if maxabs(m.T @ g @ m - g) > ORTHO_TOL * scale:
            raise InvalidTransformationError("matrix does not preserve the metric")
        if abs(float(np.linalg.det(m)) - 1.0) > ORTHO_TOL * scale:
            raise InvalidTransformationError("matrix is not proper (det != 1)")
        if m[0, 0] < 1.0 - ORTHO_TOL:
            raise InvalidTransformationError("matrix is not orthochronous")
        if float(np.trace(m)) < -ORTHO_TOL:
            raise InvalidTransformationError(
                "negative trace: matrix is outside the proper orthochronous component"
            )
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    def inverse(self) -> np.ndarray:
        """Inverse matrix g^{-1} Lam^T g (exact for metric-preserving Lam)."""
        g = self.metric.matrix
        return np.linalg.inv(g) @ self.matrix.T @ g

    def __matmul__(self, other: "LorentzTransformation") -> "LorentzTransformation":
        if not np.array_equal(self.metric.matrix, other.metric.matrix):
            raise InvalidTransformationError(
                "transformations live over different metrics"
            )
        return LorentzTransformation(self.matrix @ other.matrix, self.metric)


@dataclass(frozen=True, eq=False)
class FactorPair:
    """Commuting factorization Lam = Lam_plus Lam_minus with trace data.

    c_plus = cosh of the boost rapidity half-sum and c_minus = cos of the
    rotation angle, tied to the factors by tr Lam_+/- = 2 (1 + c_+/-).
    """

    lambda_plus: LorentzTransformation
    lambda_minus: LorentzTransformation
    c_plus: float
    c_minus: float
    delta: float


def tr2_transform(lam: LorentzTransformation) -> float:
    """Second trace invariant ((tr Lam)^2 - tr(Lam^2)) / 2."""
    m = lam.matrix
    t = float(np.trace(m))
    return 0.5 * (t * t - float(np.trace(m @ m)))


def is_simple_transform(
    lam: LorentzTransformation, tol: float = SIMPLE_CRITERION_TOL
) -> bool:
    """Whether Lam is the exponential of a simple bivector.

    Simple transformations are exactly those with tr2 Lam = 2 (tr Lam - 1).
    """
    t = float(np.trace(lam.matrix))
    t2 = tr2_transform(lam)
    return abs(t2 - 2.0 * (t - 1.0)) <= tol * max(1.0, t2, t)


def simple_log_coefficients(lam: LorentzTransformation):
    """Multiplier k, invariant mu, and branch name for the simple logarithm.

    Writing s = tr Lam / 2 - 1, the branch is elliptic (rotation) for s < 1,
    hyperbolic (boost) for s > 1, and parabolic (null rotation) at s = 1.
    The parabolic limit of k = x / sin x (or x / sinh x) is 1.
    """
    t = float(np.trace(lam.matrix))
    s = 0.5 * t - 1.0
    if abs(s - 1.0) <= PARABOLIC_TOL:
        return 1.0, 0.0, "parabolic"
    if s > 1.0:
        x = math.acosh(s)
        return x / math.sinh(x), x * x, "hyperbolic"
    if s < -0.9:
        # acos amplifies trace round-off by 1/sin(x) near x = pi; recover the
        # angle from the sine instead: tr2(Lam - Lam^{-1}) = 4 sin^2 x
        b = lam.matrix - lam.inverse()
        sin_x = 0.5 * math.sqrt(max(0.0, -0.5 * float(np.trace(b @ b))))
        x = math.pi - math.asin(min(sin_x, 1.0))
    else:
        x = math.acos(max(s, -1.0))
    return x / math.sin(x), -x * x, "trig"


def log_simple(
    lam: LorentzTransformation, tol: float = SIMPLE_CRITERION_TOL
) -> Bivector:
    """Principal logarithm L = k (Lam - Lam^{-1}) / 2 of a simple Lam.

    Requires tr Lam > 0; near-traceless rotations (angle near pi) have an
    ill-defined principal branch and raise :class:`TracelessSimpleError`.
    The result satisfies tr2(L) = -mu with mu as returned by
    :func:`simple_log_coefficients`.
    """
    if not is_simple_transform(lam, tol):
        raise NotSimpleError("transformation is not simple; no single-plane logarithm")
    t = float(np.trace(lam.matrix))
    if t <= LOG_TRACE_GATE:
        raise TracelessSimpleError(
            "trace too close to zero for the simple logarithm branch"
        )
    k, _, _ = simple_log_coefficients(lam)
    return Bivector(0.5 * k * (lam.matrix - lam.inverse()), lam.metric)


def factor_transform(
    lam: LorentzTransformation, tol: float = SIMPLE_CRITERION_TOL
) -> FactorPair:
    """Split a non-simple Lam into commuting simple factors.

    With Delta = (tr Lam)^2 - 4 tr2 Lam + 8 and c_+/- = (tr Lam +/- sqrt(Delta))/4,
    each factor is a cubic polynomial in Lam:

        Lam_+/- = +/- ((1 + 2 c_+/-) I - Lam^{-1} - (1 + 2 c_-/+) Lam + Lam^2)
                  / (2 (c_+ - c_-))
    """
    if is_simple_transform(lam, tol):
        raise SimpleTransformError("simple transformation does not factor further")
    m = lam.matrix
    t = float(np.trace(m))
    t2 = tr2_transform(lam)
    delta = t * t - 4.0 * t2 + 8.0
    root = math.sqrt(max(delta, 0.0))
    c_plus = 0.25 * (t + root)
    c_minus = 0.25 * (t - root)
    if c_plus - c_minus <= FACTOR_GAP_TOL:
        raise SimpleTransformError(
            f"factor separation {c_plus - c_minus} too small; "
            "transformation is numerically simple"
        )
    eye = np.eye(4)
    inv = lam.inverse()
    sq = m @ m
    denom = 2.0 * (c_plus - c_minus)
    plus = ((1.0 + 2.0 * c_plus) * eye - inv - (1.0 + 2.0 * c_minus) * m + sq) / denom
    minus = -((1.0 + 2.0 * c_minus) * eye - inv - (1.0 + 2.0 * c_plus) * m + sq) / denom
    return FactorPair(
        LorentzTransformation(plus, lam.metric),
        LorentzTransformation(minus, lam.metric),
        c_plus,
        c_minus,
        delta,
    )


def _difference_bivector(lam: LorentzTransformation) -> Bivector:
    return Bivector(lam.matrix - lam.inverse(), lam.metric)


def lift_simple(lam: LorentzTransformation, rep: Representation) -> np.ndarray:
    """Spin lift of a simple Lam with tr Lam > 0 (up to global sign):

        Sigma = (tr Lam I + 2 sigma(Lam - Lam^{-1})) / (2 sqrt(tr Lam)).
    """
    if not is_simple_transform(lam):
        raise NotSimpleError("lift_simple requires a simple transformation")
    t = float(np.trace(lam.matrix))
    if t <= TRACE_GATE:
        raise TracelessSimpleError(
            "trace too close to zero; use the traceless special-case lift"
        )
    s = spin_rep(rep, _difference_bivector(lam))
    return (t * rep.identity + 2.0 * s) / (2.0 * math.sqrt(t))


def lift_nonsimple(lam: LorentzTransformation, rep: Representation) -> np.ndarray:
    """Spin lift of a non-simple Lam away from the degenerate denominator.

    With t = tr Lam, t2 = tr2 Lam, B1 = Lam - Lam^{-1}, B2 = Lam^2 - Lam^{-2}:

        Sigma = ((2 + t + t2 - t^2/4) I + (t + 2) sigma(B1) - sigma(B2)
                 + sigma(B1)^2) / (2 sqrt(2 + 2 t + t2)).
    """
    if is_simple_transform(lam):
        raise NotNonsimpleError("lift_nonsimple requires a non-simple transformation")
    m = lam.matrix
    t = float(np.trace(m))
    t2 = tr2_transform(lam)
    den = 2.0 + 2.0 * t + t2
    if den <= DENOMINATOR_GATE:
        raise DegenerateDenominatorError(
            f"lift denominator {den} vanishes; use the special-case product lift"
        )
    inv = lam.inverse()
    s1 = spin_rep(rep, Bivector(m - inv, lam.metric))
    s2 = spin_rep(rep, Bivector(m @ m - inv @ inv, lam.metric))
    scalar = 2.0 + t + t2 - 0.25 * t * t
    return (scalar * rep.identity + (t + 2.0) * s1 - s2 + s1 @ s1) / (
        2.0 * math.sqrt(den)
    )


def lift_special(lam: LorentzTransformation, rep: Representation) -> np.ndarray:
    """Spin lift of a traceless simple Lam (rotation by pi; Lam^2 = I).

    P = (I - Lam)/2 projects onto the rotation plane; two independent columns
    u, v give Sigma = 2 sigma(u ^ v) / sqrt(tr2(u ^ v)).
    """
    if not is_simple_transform(lam):
        raise NotSimpleError("lift_special requires a simple transformation")
    t = float(np.trace(lam.matrix))
    if abs(t) > TRACE_GATE:
        raise NotTracelessError("lift_special requires a traceless transformation")
    p = 0.5 * (np.eye(4) - lam.matrix)
    order, pivots = pivot_columns(p)
    scale = max(pivots[0], 1e-300)
    if pivots[1] <= PIVOT_TOL * scale or pivots[2] > PIVOT_TOL * scale:
        raise RankDeficiencyError(
            "plane projector does not have numerical rank 2"
        )
    u = p[:, order[0]]
    v = p[:, order[1]]
    w = wedge(lam.metric, u, v)
    t2w = tr2(w)
    if t2w <= 0.0:
        raise DegeneratePlaneError("extracted rotation plane is degenerate")
    return (2.0 / math.sqrt(t2w)) * spin_rep(rep, w)


def lift_nonsimple_special(
    lam: LorentzTransformation, rep: Representation
) -> np.ndarray:
    """Spin lift of a non-simple Lam whose rotation factor has angle pi.

    Factors Lam and multiplies the simple lift of the boost factor by the
    traceless special-case lift of the rotation factor.
    """
    pair = factor_transform(lam)
    return lift_simple(pair.lambda_plus, rep) @ lift_special(pair.lambda_minus, rep)


def lift(
    lam: LorentzTransformation,
    rep: Representation,
    tol: float = SIMPLE_CRITERION_TOL,
    return_branch: bool = False,
):
    """Spin lift of any proper orthochronous Lam, up to global sign.

    Dispatches on the trace criterion and the two degenerate gates:

    * simple with tr Lam > 1e-6      -> ``lift_simple``        ("simple")
    * simple with tr Lam near 0      -> ``lift_special``       ("special/traceless")
    * non-simple, generic            -> ``lift_nonsimple``     ("nonsimple")
    * non-simple, denominator near 0 -> ``lift_nonsimple_special``
                                                                ("nonsimple/special")

    With ``return_branch=True`` returns ``(Sigma, branch)``.
    """
    if is_simple_transform(lam, tol):
        if float(np.trace(lam.matrix)) > TRACE_GATE:
            out, branch = lift_simple(lam, rep), "simple"
        else:
            out, branch = lift_special(lam, rep), "special/traceless"
    else:
        den = 2.0 + 2.0 * float(np.trace(lam.matrix)) + tr2_transform(lam)
        if den > DENOMINATOR_GATE:
            out, branch = lift_nonsimple(lam, rep), "nonsimple"
        else:
            out, branch = lift_nonsimple_special(lam, rep), "nonsimple/special"
    return (out, branch) if return_branch else out


def sign_normalize(m) -> np.ndarray:
    """Fix the global sign of a matrix defined only up to +/-1.

    The first entry (row-major) of largest modulus is made to have positive
    real part; if its real part vanishes, positive imaginary part.
    """
    m = np.asarray(m)
    if m.size == 0:
        return m
    flat = m.ravel()
    idx = int(np.argmax(np.abs(flat)))
    z = complex(flat[idx])
    if abs(z) == 0.0:
        return m
    if abs(z.real) > 1e-12 * abs(z):
        flip = z.real < 0.0
    else:
        flip = z.imag < 0.0
    return -m if flip else m
