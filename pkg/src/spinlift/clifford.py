"""Clifford algebra Cl(g) over a diagonal Lorentz metric and its representations.

Basis blades are indexed by subsets S of {0,1,2,3} encoded as 4-bit masks, so
an algebra element is a length-16 coefficient vector.  Generators satisfy
e_a e_b + e_b e_a = 2 g(e_a, e_b); products of basis blades reduce to a sign
(from counting transpositions) times a metric factor (from contracting
repeated generators) times the symmetric-difference blade.

Two faithful matrix representations are provided:

* ``regular``: left multiplication on the algebra itself, 16x16 real.
* ``gamma``: the Dirac matrices, 4x4 complex (multiplied by i for the
  (-+++) signature so the defining relations keep the metric's sign).

``spin_rep`` maps a bivector L into either representation via the
antisymmetric coefficient matrix F = L g^{-1}:

    sigma(L) = sum_{a<b} F^{ab} (rho(e_a e_b) - rho(e_b e_a)) / 4

which on a wedge u ^ v reduces to rho(uv - vu)/4.  The commutation identity
[sigma(L), rho(u)] = rho(L u) makes sigma a Lie-algebra homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bivector import Bivector
from .errors import InvalidBivectorError, NonDiagonalMetricError
from .metric import Metric

BLADE_COUNT = 16

#: Bit masks of the four grade-1 blades.
VECTOR_MASKS = (1, 2, 4, 8)

#: Index pairs (a, b) with a < b, in the order used for bivector coefficients.
PAIR_INDICES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

_GAMMA_NAMES = ("1", "e0", "e1", "e01", "e2", "e02", "e12", "e012",
                "e3", "e03", "e13", "e013", "e23", "e023", "e123", "e0123")


def blade_mask(indices) -> int:
    """Bit mask of the blade with the given generator indices."""
    mask = 0
    for i in indices:
        if not 0 <= i <= 3:
            raise ValueError(f"generator index {i} out of range")
        if mask & (1 << i):
            raise ValueError(f"repeated generator index {i}")
        mask |= 1 << i
    return mask


def blade_name(mask: int) -> str:
    """Human-readable name of a basis blade ("1", "e0", "e01", ...)."""
    return _GAMMA_NAMES[mask]


def _reorder_sign(a: int, b: int) -> float:
    # Count transpositions needed to interleave the generators of blade b
    # into those of blade a (each pair i in a, j in b with i > j swaps once).
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1.0 if swaps & 1 else 1.0


def _metric_diagonal(g: Metric) -> np.ndarray:
    m = g.matrix
    d = np.diagonal(m)
    if np.any(m != np.diag(d)) or np.any(np.abs(d) != 1.0):
        raise NonDiagonalMetricError(
            "Clifford constructions need a diagonal metric with +/-1 entries"
        )
    return d


def _blade_product(a: int, b: int, diag: np.ndarray):
    sign = _reorder_sign(a, b)
    common = a & b
    for i in range(4):
        if common & (1 << i):
            sign *= diag[i]
    return a ^ b, sign


@dataclass(frozen=True, eq=False)
class CliffordElement:
    """Element of Cl(g) as 16 real coefficients indexed by blade mask."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float)
        if c.shape != (BLADE_COUNT,):
            raise ValueError(f"expected {BLADE_COUNT} coefficients, got {c.shape}")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls) -> "CliffordElement":
        return cls(np.zeros(BLADE_COUNT))

    @classmethod
    def scalar(cls, value: float) -> "CliffordElement":
        c = np.zeros(BLADE_COUNT)
        c[0] = value
        return cls(c)

    @classmethod
    def blade(cls, mask: int, value: float = 1.0) -> "CliffordElement":
        c = np.zeros(BLADE_COUNT)
        c[mask] = value
        return cls(c)

    @classmethod
    def basis_vector(cls, i: int) -> "CliffordElement":
        return cls.blade(1 << i)

    @classmethod
    def from_vector(cls, u) -> "CliffordElement":
        u = np.asarray(u, dtype=float)
        c = np.zeros(BLADE_COUNT)
        c[list(VECTOR_MASKS)] = u
        return cls(c)

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        return CliffordElement(self.coeffs + other.coeffs)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return CliffordElement(self.coeffs - other.coeffs)

    def __mul__(self, scalar) -> "CliffordElement":
        return CliffordElement(self.coeffs * float(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "CliffordElement":
        return CliffordElement(-self.coeffs)


def clifford_mul(a: CliffordElement, b: CliffordElement, g: Metric) -> CliffordElement:
    """Clifford product of two algebra elements over the metric g."""
    diag = _metric_diagonal(g)
    out = np.zeros(BLADE_COUNT)
    for i, ca in enumerate(a.coeffs):
        if ca == 0.0:
            continue
        for j, cb in enumerate(b.coeffs):
            if cb == 0.0:
                continue
            mask, sign = _blade_product(i, j, diag)
            out[mask] += sign * ca * cb
    return CliffordElement(out)


# Dirac basis for the (+---) signature: gamma^0 = diag(1,1,-1,-1) and
# gamma^i = [[0, sigma_i], [-sigma_i, 0]].
_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_Z2 = np.zeros((2, 2), dtype=complex)
_GAMMA_PMMM = np.stack(
    [np.block([[np.eye(2, dtype=complex), _Z2], [_Z2, -np.eye(2, dtype=complex)]])]
    + [np.block([[_Z2, s], [-s, _Z2]]) for s in _PAULI]
)


class Representation:
    """A concrete matrix representation of Cl(g) with cached blade images."""

    def __init__(self, kind: str, metric: Metric, blades: np.ndarray):
        self.kind = kind
        self.metric = metric
        self.blades = blades
        self.dim = blades.shape[1]
        self.is_complex = bool(np.iscomplexobj(blades))
        self.identity = blades[0]
        self.identity_trace = float(self.dim)
        self.vectors = blades[list(VECTOR_MASKS)]
        # sigma(e_a ^ e_b) = rho(e_a e_b)/2 for a < b over a diagonal metric
        self.pair_generators = 0.5 * np.stack(
            [blades[(1 << a) | (1 << b)] for a, b in PAIR_INDICES]
        )
        for arr in (self.blades, self.identity, self.vectors, self.pair_generators):
            arr.flags.writeable = False

    def of(self, x: CliffordElement) -> np.ndarray:
        """Matrix image of an algebra element."""
        return np.tensordot(x.coeffs, self.blades, axes=1)

    def vector(self, u) -> np.ndarray:
        """Matrix image u^a rho(e_a) of a 4-vector."""
        return np.tensordot(np.asarray(u, dtype=float), self.vectors, axes=1)


_REP_CACHE: dict = {}


def _regular_blades(g: Metric) -> np.ndarray:
    diag = _metric_diagonal(g)
    blades = np.zeros((BLADE_COUNT, BLADE_COUNT, BLADE_COUNT))
    for s in range(BLADE_COUNT):
        for t in range(BLADE_COUNT):
            mask, sign = _blade_product(s, t, diag)
            blades[s][mask, t] = sign
    return blades


def _gamma_blades(g: Metric) -> np.ndarray:
    diag = _metric_diagonal(g)
    if np.array_equal(diag, (1.0, -1.0, -1.0, -1.0)):
        gammas = _GAMMA_PMMM
    elif np.array_equal(diag, (-1.0, 1.0, 1.0, 1.0)):
        gammas = 1j * _GAMMA_PMMM
    else:
        raise NonDiagonalMetricError(
            "gamma representation supports only the (+---) and (-+++) signatures"
        )
    blades = np.zeros((BLADE_COUNT, 4, 4), dtype=complex)
    for mask in range(BLADE_COUNT):
        m = np.eye(4, dtype=complex)
        for i in range(4):
            if mask & (1 << i):
                m = m @ gammas[i]
        blades[mask] = m
    return blades


def regular_representation(g: Metric) -> Representation:
    """Left-multiplication representation of Cl(g) on itself (16x16 real)."""
    key = ("regular", tuple(_metric_diagonal(g)))
    if key not in _REP_CACHE:
        _REP_CACHE[key] = Representation("regular", g, _regular_blades(g))
    return _REP_CACHE[key]


def gamma_representation(g: Metric) -> Representation:
    """Dirac-matrix representation of Cl(g) (4x4 complex)."""
    key = ("gamma", tuple(_metric_diagonal(g)))
    if key not in _REP_CACHE:
        _REP_CACHE[key] = Representation("gamma", g, _gamma_blades(g))
    return _REP_CACHE[key]


def representation(kind: str, g: Metric) -> Representation:
    """Look up a representation by kind ("gamma" or "regular")."""
    if kind == "gamma":
        return gamma_representation(g)
    if kind == "regular":
        return regular_representation(g)
    raise ValueError(f"unknown representation kind {kind!r}")


def regular_rep(g: Metric, x: CliffordElement) -> np.ndarray:
    """16x16 matrix of left multiplication by x on the blade basis."""
    return regular_representation(g).of(x)


def gamma_rep(g: Metric, u) -> np.ndarray:
    """Gamma-matrix image u^a gamma_a of a 4-vector."""
    return gamma_representation(g).vector(u)


def spin_rep(rep: Representation, L: Bivector) -> np.ndarray:
    """Spin-representation image sigma(L) of a bivector (simple or not)."""
    f = L.matrix @ np.linalg.inv(rep.metric.matrix)
    if np.abs(f + f.T).max() > 1e-9 * max(1.0, np.abs(f).max()):
        raise InvalidBivectorError("coefficient matrix L g^{-1} is not antisymmetric")
    coeffs = np.array([f[a, b] for a, b in PAIR_INDICES])
    return np.tensordot(coeffs, rep.pair_generators, axes=1)


def lie_bracket_check(rep: Representation, l1: Bivector, l2: Bivector) -> float:
    """Defect of sigma([L1, L2]) = [sigma(L1), sigma(L2)]."""
    bracket = Bivector(
        l1.matrix @ l2.matrix - l2.matrix @ l1.matrix, l1.metric
    )
    s1 = spin_rep(rep, l1)
    s2 = spin_rep(rep, l2)
    defect = spin_rep(rep, bracket) - (s1 @ s2 - s2 @ s1)
    return float(np.abs(defect).max())
