"""Ising Boltzmann weights parameterized by Jacobi elliptic functions.

The star-triangle relation is the 2x2 matrix identity

    exp(L3 sx) exp(K2 sz) exp(L1 sx) = exp(K1 sz) exp(L2 sx) exp(K3 sz)

where index 2 carries the summed spectral parameter v2 = v1 + v3.  Writing
U(v) = exp(K(v) sz) and V(v) = exp(L(v) sx) turns it into the difference
form V(v3) U(v1 + v3) V(v1) = U(v1) V(v1 + v3) U(v3).

Two parameterizations are provided and kept separate:

* :func:`couplings_from_v` - sn, cn, dn at the complementary modulus k',
  with the factor k in sinh 2L.
* :func:`couplings_crossing` - sn, cn of u and of the crossed argument K - u
  at a single modulus whose reading must be chosen explicitly.
"""

import math
from dataclasses import dataclass

import numpy as np

from .elliptic import (
    POLE_TOL,
    _complement,
    amplitude,
    complete_quarter_period,
    jacobi,
    reciprocal_amplitude,
)
from .errors import BranchError, DomainError, NearPoleError
from .spherical import triangle_from_spectral
from .su2 import frobenius_distance, hyper

__all__ = [
    "CouplingSet",
    "AngleCouplings",
    "WeightPair",
    "couplings_from_v",
    "couplings_crossing",
    "star_triangle_sides",
    "star_triangle_residual",
    "boltzmann_U",
    "boltzmann_V",
    "verify_difference_property",
    "angle_form",
]


@dataclass(frozen=True)
class WeightPair:
    """(cosh 2K, sinh 2K) or (cosh 2L*, sinh 2L*) as produced by a parameterization."""

    cosh: float
    sinh: float

    @property
    def coupling(self):
        return 0.5 * math.asinh(self.sinh)

    @property
    def hyperbolic_residual(self):
        return abs(self.cosh * self.cosh - self.sinh * self.sinh - 1.0)


@dataclass(frozen=True)
class CouplingSet:
    K1: float
    K2: float
    K3: float
    L1s: float
    L2s: float
    L3s: float
    hyperbolic_residual: float = 0.0

    def __post_init__(self):
        if not all(math.isfinite(x) for x in (self.K1, self.K2, self.K3, self.L1s, self.L2s, self.L3s)):
            raise DomainError("couplings must be finite")

    @property
    def K(self):
        return (self.K1, self.K2, self.K3)

    @property
    def L(self):
        return (self.L1s, self.L2s, self.L3s)

    @classmethod
    def from_weights(cls, K_weights, L_weights):
        res = max(w.hyperbolic_residual for w in (*K_weights, *L_weights))
        return cls(*(w.coupling for w in K_weights), *(w.coupling for w in L_weights), res)


def _v_weights(v, k):
    kp = _complement(k)
    t = jacobi(v, kp)
    if t.cn <= POLE_TOL:
        raise NearPoleError(f"cn({v}, k'={kp:.6g}) = {t.cn:.3e}; v must stay below K(k')")
    return (WeightPair(1.0 / t.cn, t.sn / t.cn),
            WeightPair(t.dn / t.cn, k * t.sn / t.cn))


def couplings_from_v(v1, v3, k):
    """Couplings from spectral parameters v1, v3 (v2 = v1 + v3) at modulus k.

    cosh 2K_i = 1/cn(v_i,k'),  sinh 2K_i = sn(v_i,k')/cn(v_i,k'),
    cosh 2L*_i = dn(v_i,k')/cn(v_i,k'),  sinh 2L*_i = k sn(v_i,k')/cn(v_i,k').
    """
    if not 0.0 <= k <= 1.0:
        raise DomainError(f"modulus k={k} outside [0, 1]")
    if v1 < 0.0 or v3 < 0.0:
        raise DomainError("spectral parameters must be non-negative")
    Kw, Lw = zip(*(_v_weights(v, k) for v in (v1, v1 + v3, v3)))
    return CouplingSet.from_weights(Kw, Lw)


CROSSING_READINGS = ("k", "complement")


def couplings_crossing(u1, u3, k, *, reading):
    """Couplings from the crossed parameterization, u2 = u1 + u3.

    cosh 2K_i = 1/cn(u_i),  sinh 2K_i = sn(u_i)/cn(u_i),
    cosh 2L*_i = 1/sn(K - u_i),  sinh 2L*_i = cn(K - u_i)/sn(K - u_i).

    The modulus of sn, cn and K is not implied by the formulas, so ``reading``
    is required: ``"k"`` evaluates everything at k, ``"complement"`` at k'.
    """
    if reading not in CROSSING_READINGS:
        raise DomainError(f"reading must be one of {CROSSING_READINGS}, got {reading!r}")
    m = k if reading == "k" else _complement(k)
    K = complete_quarter_period(m)
    Kw, Lw = [], []
    for u in (u1, u1 + u3, u3):
        if not 0.0 <= u <= K:
            raise DomainError(f"argument {u} outside [0, K={K:.6g}]")
        t, c = jacobi(u, m), jacobi(K - u, m)
        if t.cn <= POLE_TOL or c.sn <= POLE_TOL:
            raise NearPoleError(f"argument {u} is at a pole of the crossed weights")
        Kw.append(WeightPair(1.0 / t.cn, t.sn / t.cn))
        Lw.append(WeightPair(1.0 / c.sn, c.cn / c.sn))
    return CouplingSet.from_weights(Kw, Lw)


def boltzmann_U(K):
    return hyper("z", K)


def boltzmann_V(L):
    return hyper("x", L)


def star_triangle_sides(c):
    left = boltzmann_V(c.L3s) @ boltzmann_U(c.K2) @ boltzmann_V(c.L1s)
    right = boltzmann_U(c.K1) @ boltzmann_V(c.L2s) @ boltzmann_U(c.K3)
    return left, right


def star_triangle_residual(c):
    """(||LHS - RHS||_F, lambda) where lambda minimizes ||LHS - lambda RHS||_F.

    The relation is checked as a strict equality; lambda is a diagnostic that
    exposes a proportional-but-unequal pair.
    """
    left, right = star_triangle_sides(c)
    scalar = complex(np.vdot(right, left) / np.vdot(right, right))
    return frobenius_distance(left, right), scalar


def verify_difference_property(v1, v3, k, middle_shift=0.0):
    """Residual of V(v3) U(v1+v3) V(v1) = U(v1) V(v1+v3) U(v3).

    ``middle_shift`` moves the parameter of both middle factors away from
    v1 + v3; any non-zero shift should break the identity.
    """
    if not 0.0 <= k <= 1.0:
        raise DomainError(f"modulus k={k} outside [0, 1]")
    wK, wL = {}, {}
    for key, v in (("1", v1), ("3", v3), ("m", v1 + v3 + middle_shift)):
        if v < 0.0:
            raise DomainError("spectral parameters must be non-negative")
        kw, lw = _v_weights(v, k)
        wK[key], wL[key] = kw.coupling, lw.coupling
    U = {key: boltzmann_U(val) for key, val in wK.items()}
    V = {key: boltzmann_V(val) for key, val in wL.items()}
    left = V["3"] @ U["m"] @ V["1"]
    right = U["1"] @ V["m"] @ U["3"]
    return frobenius_distance(left, right)


@dataclass(frozen=True)
class AngleCouplings:
    """Real angle couplings K-hat_i, L-hat_i after the imaginary rotation K = i K-hat.

    ``triangle_residual`` is the worst mismatch against the spectral triangle:
    2 K-hat_i = a_i for all i, 2 L-hat_i = A_i for i = 1, 3 and
    2 L-hat_2 = pi - A2 (A2 is the obtuse angle).
    """

    Khat1: float
    Khat2: float
    Khat3: float
    Lhat1: float
    Lhat2: float
    Lhat3: float
    triangle_residual: float = float("nan")

    @property
    def Khat(self):
        return (self.Khat1, self.Khat2, self.Khat3)

    @property
    def Lhat(self):
        return (self.Lhat1, self.Lhat2, self.Lhat3)


def angle_form(u1, u3, k):
    """Angle couplings 2 K-hat_i = am(u_i, k), 2 L-hat_i = am(k u_i, 1/k), u2 = u1 + u3.

    The result is cross-checked against :func:`triangle_from_spectral`; when
    u1 or u3 is zero (a degenerate triangle) the cross-check is skipped and
    ``triangle_residual`` is NaN.
    """
    if not 0.0 < k < 1.0:
        raise BranchError(f"angle form needs 0 < k < 1, got {k}")
    us = (u1, u1 + u3, u3)
    Kh = tuple(0.5 * amplitude(u, k) for u in us)
    Lh = tuple(0.5 * reciprocal_amplitude(k * u, k) for u in us)
    residual = float("nan")
    if u1 > 0.0 and u3 > 0.0:
        t = triangle_from_spectral(u1, u3, k)
        residual = max(
            max(abs(2 * kh - a) for kh, a in zip(Kh, t.arcs)),
            abs(2 * Lh[0] - t.A1),
            abs(2 * Lh[1] - (math.pi - t.A2)),
            abs(2 * Lh[2] - t.A3),
        )
    elif u1 < 0.0 or u3 < 0.0:
        raise BranchError("angle form needs u1, u3 >= 0")
    return AngleCouplings(*Kh, *Lh, residual)
