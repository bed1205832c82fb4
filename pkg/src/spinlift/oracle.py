"""Independent reference implementations used to validate the closed forms.

Nothing in this module calls the closed-form exponential, logarithm, or lift
code, so its outputs can adjudicate them.  The exponential is a plain
scaling-and-squaring Taylor series; the generators draw seeded uniform
coefficient matrices; the intertwining defect measures how well a candidate
spin lift conjugates vector images.
"""

from __future__ import annotations

import numpy as np

from .bivector import Bivector
from .clifford import Representation
from .errors import SingularSigmaError
from .group_lift import LorentzTransformation
from .metric import Metric

#: Condition-number ceiling beyond which a lift is treated as singular.
_COND_LIMIT = 1e12


def exp_series(m, tol: float = 1e-16) -> np.ndarray:
    """Matrix exponential by scaling and squaring a Taylor series.

    The argument is halved until its 1-norm is at most 0.5, the series is
    summed until a term falls below ``tol`` relative to the running sum, and
    the result is squared back up.  Conditioning stays good for boost
    generators with entries up to about 5.
    """
    m = np.asarray(m)
    norm1 = float(np.linalg.norm(m, 1))
    squarings = 0 if norm1 <= 0.5 else int(np.ceil(np.log2(norm1 / 0.5)))
    a = m / (2.0 ** squarings)
    total = np.eye(m.shape[0], dtype=a.dtype)
    term = total
    for k in range(1, 128):
        term = term @ a / k
        total = total + term
        if np.abs(term).max() <= tol * np.abs(total).max():
            break
    else:
        raise RuntimeError("matrix exponential series failed to converge")
    for _ in range(squarings):
        total = total @ total
    return total


def _bivector_from_rng(rng: np.random.Generator, g: Metric, scale: float) -> Bivector:
    # L = F g with antisymmetric F satisfies L^T g + g L = 0 identically.
    draw = rng.uniform(-scale, scale, size=(4, 4))
    f = np.triu(draw, 1)
    f = f - f.T
    return Bivector(f @ g.matrix, g)


def random_bivector(g: Metric, seed: int, scale: float = 1.0) -> Bivector:
    """Seeded random bivector with coefficients uniform in [-scale, scale]."""
    return _bivector_from_rng(np.random.default_rng(seed), g, scale)


def random_transformation(
    g: Metric, seed: int, scale: float = 1.0
) -> LorentzTransformation:
    """Seeded random transformation: series exponential of a random bivector."""
    generator = random_bivector(g, seed, scale)
    return LorentzTransformation(exp_series(generator.matrix), g)


def intertwining_defect(
    sigma, lam: LorentzTransformation, rep: Representation
) -> float:
    """Worst-case defect of Sigma rho(e_a) Sigma^{-1} = rho(Lam e_a).

    This is the sign-blind acceptance oracle for spin lifts: it is invariant
    under Sigma -> -Sigma.
    """
    sigma = np.asarray(sigma)
    try:
        inv = np.linalg.inv(sigma)
    except np.linalg.LinAlgError as exc:
        raise SingularSigmaError("candidate lift is singular") from exc
    cond = float(np.linalg.cond(sigma))
    if not np.isfinite(cond) or cond > _COND_LIMIT:
        raise SingularSigmaError(f"candidate lift is ill-conditioned (cond={cond:g})")
    basis = np.eye(4)
    worst = 0.0
    for a in range(4):
        lhs = sigma @ rep.vector(basis[:, a]) @ inv
        rhs = rep.vector(lam.matrix[:, a])
        worst = max(worst, float(np.abs(lhs - rhs).max()))
    return worst
