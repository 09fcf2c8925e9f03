"""Spherical triangles on the unit sphere.

A triangle is given by unit vectors n1, n2, n3.  Arc a1 joins n2 and n3 (and
cyclically), angle A_i sits at vertex n_i opposite arc a_i.  The dual triad
n*_i are the unit normals of the great-circle planes through the sides.

Triangles can also be built from spectral parameters (u1, u3, k): arcs are
amplitudes am(u_i, k) and angles are am(k u_i, 1/k), with the angle A2
opposite the longest arc taken on the obtuse branch so that u2 = u1 + u3.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .elliptic import (
    amplitude,
    complete_quarter_period,
    incomplete_integral,
    jacobi,
    reciprocal_amplitude,
)
from .errors import BranchError, DegeneracyError, DomainError

NORM_TOL = 1e-14
DET_TOL = 1e-9
RIGHT_ANGLE_TOL = 1e-9

__all__ = [
    "TriangleVectors",
    "DualTriad",
    "SphericalTriangle",
    "SpectralCoordinates",
    "VectorIdentityReport",
    "triangle_from_vectors",
    "dual_triad",
    "verify_vector_identities",
    "quadruple_product_residuals",
    "triangle_from_spectral",
    "spectral_coordinates",
    "differential_check",
    "solve_third_arc",
    "first_cosine_law_residuals",
    "second_cosine_law_residuals",
    "sine_law_residuals",
]


def _unit(v):
    return v / np.linalg.norm(v)


def _cross(a, b):
    # np.cross carries heavy axis handling; this is the hot path of the checks
    return np.array([a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]])


def _triple(a, b, c):
    return float(np.dot(a, _cross(b, c)))


@dataclass(frozen=True)
class TriangleVectors:
    n1: np.ndarray
    n2: np.ndarray
    n3: np.ndarray

    def __post_init__(self):
        for name in ("n1", "n2", "n3"):
            v = np.asarray(getattr(self, name), dtype=float)
            if v.shape != (3,):
                raise DomainError(f"{name} must be a 3-vector")
            if abs(np.linalg.norm(v) - 1.0) > NORM_TOL:
                raise DomainError(f"{name} is not a unit vector (norm {np.linalg.norm(v)!r})")
            object.__setattr__(self, name, v)
        if abs(self.det) < DET_TOL:
            raise DegeneracyError(f"vectors are nearly coplanar (det {self.det:.3e})")

    @classmethod
    def from_raw(cls, v1, v2, v3):
        """Normalize three arbitrary non-zero vectors."""
        return cls(*(_unit(np.asarray(v, dtype=float)) for v in (v1, v2, v3)))

    @property
    def det(self):
        return _triple(self.n1, self.n2, self.n3)

    def as_tuple(self):
        return self.n1, self.n2, self.n3


@dataclass(frozen=True)
class DualTriad:
    n1s: np.ndarray
    n2s: np.ndarray
    n3s: np.ndarray

    def as_tuple(self):
        return self.n1s, self.n2s, self.n3s


@dataclass(frozen=True)
class SphericalTriangle:
    """Arcs a1..a3 and opposite angles A1..A3 (radians).

    ``k_ratio`` is the mean of the three ratios sin(A_i)/sin(a_i) and
    ``k_spread`` their max - min, a consistency diagnostic.
    """

    a1: float
    a2: float
    a3: float
    A1: float
    A2: float
    A3: float
    k_ratio: float = field(default=float("nan"))
    k_spread: float = field(default=float("nan"))

    def __post_init__(self):
        if math.isnan(self.k_ratio):
            ratios = [math.sin(A) / math.sin(a) if math.sin(a) != 0 else math.nan
                      for a, A in zip(self.arcs, self.angles)]
            object.__setattr__(self, "k_ratio", float(np.mean(ratios)))
            object.__setattr__(self, "k_spread", float(np.ptp(ratios)))

    @property
    def arcs(self):
        return (self.a1, self.a2, self.a3)

    @property
    def angles(self):
        return (self.A1, self.A2, self.A3)

    def obtuse_indices(self):
        return [i for i, A in enumerate(self.angles) if A > 0.5 * math.pi]

    def max_law_residual(self):
        return float(max(first_cosine_law_residuals(self).max(),
                         second_cosine_law_residuals(self).max(),
                         sine_law_residuals(self).max()))


def first_cosine_law_residuals(t):
    """|cos a_i - cos a_j cos a_k - cos A_i sin a_j sin a_k| for the three cyclic cases."""
    a, A = t.arcs, t.angles
    out = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        out.append(math.cos(a[i]) - math.cos(a[j]) * math.cos(a[k])
                   - math.cos(A[i]) * math.sin(a[j]) * math.sin(a[k]))
    return np.abs(out)


def second_cosine_law_residuals(t):
    """|-cos A_i - cos A_j cos A_k + cos a_i sin A_j sin A_k| for the three cyclic cases."""
    a, A = t.arcs, t.angles
    out = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        out.append(-math.cos(A[i]) - math.cos(A[j]) * math.cos(A[k])
                   + math.cos(a[i]) * math.sin(A[j]) * math.sin(A[k]))
    return np.abs(out)


def sine_law_residuals(t):
    """Deviations of sin(A_i)/sin(a_i) from each other (two independent) and from k_ratio."""
    r = [math.sin(A) / math.sin(a) for a, A in zip(t.arcs, t.angles)]
    return np.abs([r[0] - r[1], r[1] - r[2], r[0] - t.k_ratio, r[1] - t.k_ratio, r[2] - t.k_ratio])


def _angle_between(u, v):
    # atan2 keeps full precision near 0 and pi where arccos of the dot does not
    return math.atan2(float(np.linalg.norm(_cross(u, v))), float(np.dot(u, v)))


def dual_triad(v):
    n1, n2, n3 = v.as_tuple()
    return DualTriad(_unit(_cross(n2, n3)), _unit(_cross(n3, n1)), _unit(_cross(n1, n2)))


def triangle_from_vectors(v):
    """Arcs from the vertex vectors and angles from the dual triad.

    cos a1 = n2.n3 (cyclic) and cos(A1 - pi) = n*2.n*3 (cyclic).  Returns the
    pair (SphericalTriangle, DualTriad).
    """
    n1, n2, n3 = v.as_tuple()
    d = dual_triad(v)
    s1, s2, s3 = d.as_tuple()
    arcs = (_angle_between(n2, n3), _angle_between(n3, n1), _angle_between(n1, n2))
    angles = tuple(math.pi - _angle_between(p, q) for p, q in ((s2, s3), (s3, s1), (s1, s2)))
    return SphericalTriangle(*arcs, *angles), d


def quadruple_product_residuals(a, b, c, d):
    """Residuals of the two vector quadruple-product identities.

    Returns (cross, dot):
    cross = max over both forms of |(a x b) x (c x d) - ...| (componentwise),
    dot = |(a x b).(c x d) - (a.c)(b.d) + (a.d)(b.c)|.
    """
    lhs = _cross(_cross(a, b), _cross(c, d))
    form1 = _triple(a, c, d) * b - _triple(b, c, d) * a
    form2 = _triple(a, b, d) * c - _triple(a, b, c) * d
    cross = max(np.abs(lhs - form1).max(), np.abs(lhs - form2).max())
    dot = abs(np.dot(_cross(a, b), _cross(c, d))
              - (np.dot(a, c) * np.dot(b, d) - np.dot(a, d) * np.dot(b, c)))
    return float(cross), float(dot)


@dataclass(frozen=True)
class VectorIdentityReport:
    quadruple_cross: float
    quadruple_dot: float
    dual_reconstruction: float
    dual_triple_product: float
    sine_ratio: float

    @property
    def max_residual(self):
        return max(self.quadruple_cross, self.quadruple_dot, self.dual_reconstruction,
                   self.dual_triple_product, self.sine_ratio)


def verify_vector_identities(v):
    """Check the vector-algebra identities behind the cosine and sine laws.

    Quadruple products run over every ordered choice of four vectors from
    the triad (repeats included, which covers Lagrange's identity).  The
    dual of the dual triad must give back the triad up to the orientation
    sign, and the dual triple product must equal det^2 over the product of
    the side cross-product norms.
    """
    ns = v.as_tuple()
    cross = dot = 0.0
    for a in ns:
        for b in ns:
            for c in ns:
                for d in ns:
                    rc, rd = quadruple_product_residuals(a, b, c, d)
                    cross, dot = max(cross, rc), max(dot, rd)

    duals = dual_triad(v)
    s1, s2, s3 = duals.as_tuple()
    sign = math.copysign(1.0, v.det)
    rebuilt = (_unit(_cross(s2, s3)), _unit(_cross(s3, s1)), _unit(_cross(s1, s2)))
    recon = max(float(np.abs(sign * r - n).max()) for r, n in zip(rebuilt, ns))

    n1, n2, n3 = ns
    c23, c31, c12 = (np.linalg.norm(_cross(p, q)) for p, q in ((n2, n3), (n3, n1), (n1, n2)))
    det = v.det
    triple = abs(_triple(s1, s2, s3) - det * det / (c23 * c31 * c12))

    # |n*_j x n*_k| / |n_j x n_k| is the same for all three sides
    ratios = [np.linalg.norm(_cross(p, q)) / c
              for (p, q), c in (((s2, s3), c23), ((s3, s1), c31), ((s1, s2), c12))]
    expected = abs(det) / (c12 * c23 * c31)
    sine = max(abs(r - expected) for r in ratios)
    return VectorIdentityReport(cross, dot, recon, float(triple), float(sine))


def triangle_from_spectral(u1, u3, k):
    """Triangle parameterized by (u1, u3, k) with u2 = u1 + u3.

    a_i = am(u_i, k); A1 = am(k u1, 1/k), A3 = am(k u3, 1/k) and
    A2 = pi - am(k u2, 1/k) (obtuse).  Requires 0 < k < 1, u1, u3 > 0 and
    u1 + u3 < K(k); otherwise raises BranchError naming the violated bound.
    """
    if not 0.0 < k < 1.0:
        raise BranchError(f"spectral triangle needs 0 < k < 1, got k={k}")
    if not (u1 > 0.0 and u3 > 0.0):
        raise BranchError(f"spectral triangle needs u1, u3 > 0, got ({u1}, {u3})")
    K = complete_quarter_period(k)
    u2 = u1 + u3
    if u2 >= K:
        raise BranchError(f"u1 + u3 = {u2:.6g} must stay below K({k}) = {K:.6g} "
                          "to keep every arc acute")
    arcs = tuple(amplitude(u, k) for u in (u1, u2, u3))
    A1 = reciprocal_amplitude(k * u1, k)
    A3 = reciprocal_amplitude(k * u3, k)
    A2 = math.pi - reciprocal_amplitude(k * u2, k)
    return SphericalTriangle(*arcs, A1, A2, A3)


@dataclass(frozen=True)
class SpectralCoordinates:
    """Spectral parameters recovered from a triangle.

    ``regime`` is ``"difference"`` when A2 is the obtuse angle (u2 = u1 + u3),
    otherwise ``"rotated"`` with the rule u_j = sum of the other two for the
    obtuse index j.  ``residual`` is the violation of whichever rule applies;
    ``sine_residual`` is max |sin A_i - k sn(u_i, k)|.
    """

    u1: float
    u2: float
    u3: float
    residual: float
    regime: str
    obtuse_index: int
    sine_residual: float

    @property
    def u(self):
        return (self.u1, self.u2, self.u3)


def spectral_coordinates(t):
    """Recover u_i = F(a_i, k) from a triangle, k taken from its sine ratio.

    Needs k < 1 and exactly one obtuse angle.  Triangles with k < 1 have
    either one or three obtuse angles, never none; the three-obtuse case has
    no real parameterization on this branch and raises BranchError.
    """
    k = t.k_ratio
    if not 0.0 < k < 1.0:
        raise DomainError(f"sine ratio k={k:.6g} must lie in (0, 1) for real u_i")
    obtuse = t.obtuse_indices()
    if len(obtuse) != 1:
        raise BranchError(f"expected exactly one obtuse angle, found {len(obtuse)}")
    j = obtuse[0]
    u = [incomplete_integral(a, k) for a in t.arcs]
    residual = abs(u[j] - (sum(u) - u[j]))
    sine = max(abs(math.sin(A) - k * jacobi(ui, k).sn) for A, ui in zip(t.angles, u))
    regime = "difference" if j == 1 else "rotated"
    return SpectralCoordinates(u[0], u[1], u[2], residual, regime, j, sine)


def solve_third_arc(a1, a3, cos_A3, branch=1):
    """Solve cos a3 = cos a1 cos a2 + cos A3 sin a1 sin a2 for a2 in (0, pi).

    The equation reads R cos(a2 - delta) = cos a3; ``branch`` (+1 or -1)
    picks the root delta +/- arccos(cos a3 / R).
    """
    R = math.hypot(math.cos(a1), cos_A3 * math.sin(a1))
    delta = math.atan2(cos_A3 * math.sin(a1), math.cos(a1))
    r = math.cos(a3) / R
    if abs(r) > 1.0:
        raise BranchError(f"no triangle with a1={a1}, a3={a3}: |cos a3 / R| = {abs(r):.6g} > 1")
    a2 = delta + branch * math.acos(r)
    if not 0.0 < a2 < math.pi:
        raise BranchError(f"branch {branch:+d} gives a2={a2:.6g} outside (0, pi)")
    return a2


def differential_check(a1, a3_fixed, k, h, branch=1):
    """Central-difference check of da1/cos A1 + da2/cos A2 = 0 at fixed a3 and k.

    a3 and k fix A3 (acute, sin A3 = k sin a3); a2(a1) solves the first cosine
    law; cos A1 and cos A2 are the signed values from the cosine laws.
    Returns |da2/da1 + cos A2 / cos A1|.
    """
    if not 1e-7 <= h <= 1e-4:
        raise DomainError(f"step h={h} outside [1e-7, 1e-4]")
    sA3 = k * math.sin(a3_fixed)
    if not 0.0 < sA3 < 1.0:
        raise BranchError(f"k sin a3 = {sA3:.6g} is not a valid sine")
    cA3 = math.sqrt((1.0 - sA3) * (1.0 + sA3))

    a2 = solve_third_arc(a1, a3_fixed, cA3, branch)
    slope = (solve_third_arc(a1 + h, a3_fixed, cA3, branch)
             - solve_third_arc(a1 - h, a3_fixed, cA3, branch)) / (2.0 * h)
    ca1, ca2, ca3 = math.cos(a1), math.cos(a2), math.cos(a3_fixed)
    sa1, sa2, sa3 = math.sin(a1), math.sin(a2), math.sin(a3_fixed)
    cos_A1 = (ca1 - ca2 * ca3) / (sa2 * sa3)
    cos_A2 = (ca2 - ca3 * ca1) / (sa3 * sa1)
    if abs(cos_A1) < RIGHT_ANGLE_TOL:
        raise BranchError("A1 is a right angle; the differential form is singular")
    return abs(slope + cos_A2 / cos_A1)
