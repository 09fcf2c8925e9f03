"""SU(2) group elements in the spin-1/2 and spin-1 representations.

Rotations exp(i theta J) use closed forms: the half-angle formula for
J = sigma/2, and the Rodrigues form 1 - (1 - cos theta) J^2 + i sin theta J
for the spin-1 generators (J_a)_{jk} = -i eps_{ajk}.  Hyperbolic factors
exp(c sigma) exist only as 2x2 matrices.
"""

import math
from dataclasses import dataclass

import numpy as np

from .elliptic import amplitude, reciprocal_amplitude
from .errors import DomainError, UnsupportedError

SPIN_HALF = "spin_half"
SPIN_ONE = "spin_one"
REPRESENTATIONS = (SPIN_HALF, SPIN_ONE)

SIGMA = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}

SPIN_ONE_J = {
    "x": np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex),
    "y": np.array([[0, 0, 1j], [0, 0, 0], [-1j, 0, 0]], dtype=complex),
    "z": np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex),
}

__all__ = [
    "SPIN_HALF",
    "SPIN_ONE",
    "REPRESENTATIONS",
    "SIGMA",
    "SPIN_ONE_J",
    "Factor",
    "RotationWord",
    "TransportComparison",
    "generator",
    "rot",
    "hyper",
    "word_product",
    "frobenius_distance",
    "triangle_words",
    "verify_triangle_identity",
    "transport_compare",
    "spectral_angles",
    "verify_ybe_spectral",
]


def _check_rep(rep):
    if rep not in REPRESENTATIONS:
        raise DomainError(f"unknown representation {rep!r}; expected one of {REPRESENTATIONS}")


def _check_axis(axis):
    if axis not in ("x", "y", "z"):
        raise DomainError(f"unknown axis {axis!r}")


def generator(axis, rep=SPIN_HALF):
    """J_axis in the chosen representation (sigma/2 for spin-1/2)."""
    _check_axis(axis)
    _check_rep(rep)
    return SIGMA[axis] / 2 if rep == SPIN_HALF else SPIN_ONE_J[axis].copy()


def rot(axis, theta, rep=SPIN_HALF):
    """exp(i theta J_axis), closed form."""
    _check_axis(axis)
    _check_rep(rep)
    if not math.isfinite(theta):
        raise DomainError(f"angle {theta!r} is not finite")
    if rep == SPIN_HALF:
        h = 0.5 * theta
        return math.cos(h) * np.eye(2, dtype=complex) + 1j * math.sin(h) * SIGMA[axis]
    J = SPIN_ONE_J[axis]
    return np.eye(3, dtype=complex) - (1.0 - math.cos(theta)) * (J @ J) + 1j * math.sin(theta) * J


def hyper(axis, c):
    """exp(c sigma_axis) as a 2x2 matrix: cosh(c) I + sinh(c) sigma_axis."""
    _check_axis(axis)
    if not math.isfinite(c):
        raise DomainError(f"coupling {c!r} is not finite")
    if axis == "z":
        return np.diag([math.exp(c), math.exp(-c)]).astype(complex)
    return math.cosh(c) * np.eye(2, dtype=complex) + math.sinh(c) * SIGMA[axis]


@dataclass(frozen=True)
class Factor:
    axis: str
    angle: float
    kind: str = "circular"

    def __post_init__(self):
        _check_axis(self.axis)
        if self.kind not in ("circular", "hyperbolic"):
            raise DomainError(f"unknown factor kind {self.kind!r}")
        if not math.isfinite(self.angle):
            raise DomainError("factor angle must be finite")

    def inverse(self):
        return Factor(self.axis, -self.angle, self.kind)


@dataclass(frozen=True)
class RotationWord:
    """Ordered product of rotation/hyperbolic factors, multiplied left to right."""

    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise DomainError("a rotation word needs at least one factor")

    def inverse(self):
        return RotationWord(f.inverse() for f in reversed(self.factors))


def _factor_matrix(f, rep):
    if f.kind == "circular":
        return rot(f.axis, f.angle, rep)
    if rep != SPIN_HALF:
        raise UnsupportedError("hyperbolic factors exist only in the spin-1/2 representation")
    return hyper(f.axis, f.angle)


def word_product(word, rep=SPIN_HALF):
    _check_rep(rep)
    if not isinstance(word, RotationWord):
        word = RotationWord(word)
    out = _factor_matrix(word.factors[0], rep)
    for f in word.factors[1:]:
        out = out @ _factor_matrix(f, rep)
    return out


def frobenius_distance(a, b):
    return float(np.linalg.norm(a - b))


def triangle_words(t):
    """The two three-factor words of the triangle identity.

    Left:  exp(i A1 Jx) exp(i a2 Jz) exp(i A3 Jx)
    Right: exp(i a3 Jz) exp(i (pi - A2) Jx) exp(i a1 Jz)
    """
    left = RotationWord([Factor("x", t.A1), Factor("z", t.a2), Factor("x", t.A3)])
    right = RotationWord([Factor("z", t.a3), Factor("x", math.pi - t.A2), Factor("z", t.a1)])
    return left, right


def verify_triangle_identity(t, rep=SPIN_HALF):
    """Frobenius norm of left minus right word for a spherical triangle."""
    left, right = triangle_words(t)
    return frobenius_distance(word_product(left, rep), word_product(right, rep))


@dataclass(frozen=True)
class TransportComparison:
    path1: np.ndarray
    path2: np.ndarray
    residual: float

    def apply(self, vector):
        """Transport a vector along both paths; returns the two images."""
        v = np.asarray(vector)
        return self.path1 @ v, self.path2 @ v


def transport_compare(t, rep=SPIN_HALF):
    """Compose the two transport paths around the triangle.

    Path 1 applies exp(i A3 Jx), then exp(i a2 Jz), then exp(i A1 Jx);
    path 2 applies exp(i a1 Jz), then exp(i (pi - A2) Jx), then exp(i a3 Jz).
    Each composite is the product of its steps with the first step rightmost.
    """
    step1 = [rot("x", t.A3, rep), rot("z", t.a2, rep), rot("x", t.A1, rep)]
    step2 = [rot("z", t.a1, rep), rot("x", math.pi - t.A2, rep), rot("z", t.a3, rep)]
    p1 = np.eye(step1[0].shape[0], dtype=complex)
    for m in step1:
        p1 = m @ p1
    p2 = np.eye(step2[0].shape[0], dtype=complex)
    for m in step2:
        p2 = m @ p2
    return TransportComparison(p1, p2, frobenius_distance(p1, p2))


def spectral_angles(u1, u3, k):
    """Arc amplitudes am(u_i, k) and angle amplitudes am(k u_i, 1/k) for u2 = u1 + u3.

    Returns two 3-tuples ordered (1, 2, 3).  Arguments may be zero; k must lie in (0, 1].
    """
    if not 0.0 < k <= 1.0:
        raise DomainError(f"modulus k={k} must lie in (0, 1]")
    us = (u1, u1 + u3, u3)
    arcs = tuple(amplitude(u, k) for u in us)
    angles = tuple(reciprocal_amplitude(k * u, k) for u in us)
    return arcs, angles


def verify_ybe_spectral(u1, u3, k, rep=SPIN_HALF):
    """Residual of the spectral Yang-Baxter form of the triangle identity.

    exp{i am(k u1,1/k) Jx} exp{i am(u2,k) Jz} exp{i am(k u3,1/k) Jx}
      = exp{i am(u3,k) Jz} exp{i am(k u2,1/k) Jx} exp{i am(u1,k) Jz}
    """
    arcs, angles = spectral_angles(u1, u3, k)
    left = RotationWord([Factor("x", angles[0]), Factor("z", arcs[1]), Factor("x", angles[2])])
    right = RotationWord([Factor("z", arcs[2]), Factor("x", angles[1]), Factor("z", arcs[0])])
    return frobenius_distance(word_product(left, rep), word_product(right, rep))
