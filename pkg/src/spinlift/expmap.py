"""Closed-form exponentials of spin-representation images.

For simple L the square of S = sigma(L) is the scalar -tr2(L)/4, so exp(S)
collapses to cbar I + sbar S with trigonometric (tr2 > 0), hyperbolic
(tr2 < 0), or unit (null, tr2 = 0) coefficients.  For non-simple L the
commuting split gives a four-term product formula, which regrouped in powers
of S becomes a cubic polynomial with coefficients alpha_0..alpha_3 built from
the same cbar/sbar data of the two parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._linalg import maxabs
from .bivector import Bivector, MuPair, is_simple, mu_roots, orthogonal_decompose, tr2
from .clifford import Representation, spin_rep
from .errors import SimpleInputError
from .oracle import exp_series

#: Below this angle the sbar ratios switch to their Taylor polynomials.
SBAR_TAYLOR_CUTOFF = 1e-4
#: Non-simple inputs with a relative eigenvalue gap at or below this are
#: evaluated by the series oracle instead of the polynomial closed form.
SERIES_GAP_TOL = 1e-3
#: |tr2| below this (relative) labels a simple exponential branch as null.
_NULL_TOL = 1e-12


def sin_ratio(theta: float) -> float:
    """sin(theta)/theta, with a 3-term Taylor fallback near zero."""
    if abs(theta) < SBAR_TAYLOR_CUTOFF:
        t2 = theta * theta
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0
    return math.sin(theta) / theta


def sinh_ratio(theta: float) -> float:
    """sinh(theta)/theta, with a 3-term Taylor fallback near zero."""
    if abs(theta) < SBAR_TAYLOR_CUTOFF:
        t2 = theta * theta
        return 1.0 + t2 / 6.0 + t2 * t2 / 120.0
    return math.sinh(theta) / theta


@dataclass(frozen=True)
class ExpCoefficients:
    """Scalar data for the factored and polynomial exponential formulas.

    theta_plus/theta_minus are the half-angles of the boost-like and
    rotation-like parts; cbar/sbar their cosh-cos and sinh-sin ratios; alpha
    the polynomial coefficients; gap_scale the factor 2/(mu_plus - mu_minus).
    """

    theta_plus: float
    theta_minus: float
    c_bar_plus: float
    c_bar_minus: float
    s_bar_plus: float
    s_bar_minus: float
    alpha: tuple
    gap_scale: float


def exp_coefficients(mu: MuPair) -> ExpCoefficients:
    """Exponential coefficients from the eigenvalue invariants of a bivector."""
    gap = mu.mu_plus - mu.mu_minus
    if gap <= 0.0:
        raise SimpleInputError("eigenvalue gap must be positive")
    theta_plus = 0.5 * math.sqrt(max(mu.mu_plus, 0.0))
    theta_minus = 0.5 * math.sqrt(max(-mu.mu_minus, 0.0))
    cp = math.cosh(theta_plus)
    cm = math.cos(theta_minus)
    sp = sinh_ratio(theta_plus)
    sm = sin_ratio(theta_minus)
    n = 2.0 / gap
    alpha = (
        cp * cm - 0.125 * (mu.mu_plus + mu.mu_minus) * sp * sm,
        0.25
        * n
        * (
            (mu.mu_minus + 3.0 * mu.mu_plus) * sp * cm
            - (mu.mu_plus + 3.0 * mu.mu_minus) * cp * sm
        ),
        0.5 * sp * sm,
        n * (cp * sm - sp * cm),
    )
    return ExpCoefficients(theta_plus, theta_minus, cp, cm, sp, sm, alpha, n)


def exp_spin_simple(s, tr2_l: float) -> np.ndarray:
    """exp(S) for S = sigma(L) with L simple: cbar I + sbar S.

    For tr2 > 0 (rotation) cbar = cos(theta) and sbar = sin(theta)/theta with
    theta = sqrt(tr2)/2; for tr2 < 0 (boost) their hyperbolic counterparts;
    at tr2 = 0 (null) both are 1 and the exponential is exactly I + S.
    """
    s = np.asarray(s)
    eye = np.eye(s.shape[0], dtype=s.dtype)
    if tr2_l > 0.0:
        theta = 0.5 * math.sqrt(tr2_l)
        cbar, sbar = math.cos(theta), sin_ratio(theta)
    elif tr2_l < 0.0:
        theta = 0.5 * math.sqrt(-tr2_l)
        cbar, sbar = math.cosh(theta), sinh_ratio(theta)
    else:
        cbar = sbar = 1.0
    return cbar * eye + sbar * s


def exp_spin_factored(L: Bivector, rep: Representation) -> np.ndarray:
    """exp(sigma(L)) for non-simple L via the commuting decomposition:

        cbar+ cbar- I + sbar+ cbar- sigma(L+) + cbar+ sbar- sigma(L-)
        + sbar+ sbar- sigma(L+) sigma(L-).
    """
    l_plus, l_minus = orthogonal_decompose(L)
    co = exp_coefficients(mu_roots(L))
    s_plus = spin_rep(rep, l_plus)
    s_minus = spin_rep(rep, l_minus)
    return (
        (co.c_bar_plus * co.c_bar_minus) * rep.identity
        + (co.s_bar_plus * co.c_bar_minus) * s_plus
        + (co.c_bar_plus * co.s_bar_minus) * s_minus
        + (co.s_bar_plus * co.s_bar_minus) * (s_plus @ s_minus)
    )


def exp_spin_polynomial(L: Bivector, rep: Representation) -> np.ndarray:
    """exp(sigma(L)) for non-simple L as a cubic polynomial in S = sigma(L)."""
    if is_simple(L):
        raise SimpleInputError("polynomial exponential requires a non-simple input")
    co = exp_coefficients(mu_roots(L))
    s = spin_rep(rep, L)
    s2 = s @ s
    a0, a1, a2, a3 = co.alpha
    return a0 * rep.identity + a1 * s + a2 * s2 + a3 * (s2 @ s)


def exp_spin(
    L: Bivector,
    rep: Representation,
    tol: float = 1e-9,
    return_branch: bool = False,
):
    """exp(sigma(L)) for any bivector, routed by regime.

    Simple inputs use the two-term closed form; non-simple inputs with a
    healthy eigenvalue gap use the cubic polynomial; inputs near the
    simple/non-simple tolerance boundary fall back to the series oracle
    (branch "near-degenerate/series").  With ``return_branch=True`` returns
    ``(matrix, branch)``.
    """
    mu = mu_roots(L)
    gap = mu.mu_plus - mu.mu_minus
    scale = max(1.0, maxabs(L.matrix) ** 2)
    if is_simple(L, tol):
        t2 = tr2(L)
        out = exp_spin_simple(spin_rep(rep, L), t2)
        if abs(t2) <= _NULL_TOL * scale:
            branch = "simple/null"
        elif t2 > 0.0:
            branch = "simple/trig"
        else:
            branch = "simple/hyperbolic"
    elif gap > SERIES_GAP_TOL * scale:
        out, branch = exp_spin_polynomial(L, rep), "nonsimple/polynomial"
    else:
        out, branch = exp_series(spin_rep(rep, L)), "near-degenerate/series"
    return (out, branch) if return_branch else out
