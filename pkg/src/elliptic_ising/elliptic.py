"""Jacobi elliptic functions and elliptic integrals of the first kind, real arguments.

sn, cn, dn are evaluated with the descending Landen (AGM) recursion after
reducing the argument by half-periods 2K.  The two degenerate moduli are
closed-form branches: k = 0 gives the circular functions, k = 1 the
hyperbolic ones.

All functions are pure and operate on Python floats.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, NearPoleError

AGM_TOL = 1e-15
AGM_MAXITER = 64
POLE_TOL = 1e-12

__all__ = [
    "AGM_TOL",
    "POLE_TOL",
    "Modulus",
    "JacobiTriple",
    "complete_quarter_period",
    "jacobi",
    "amplitude",
    "incomplete_integral",
    "addition_eval",
    "imaginary_transform",
    "reciprocal_modulus",
    "reciprocal_map",
    "reciprocal_amplitude",
]


def _complement(k):
    # (1-k)(1+k) keeps relative precision as k -> 1
    return math.sqrt(max((1.0 - k) * (1.0 + k), 0.0))


def _check_modulus(k, allow_one=True):
    if not math.isfinite(k) or k < 0.0 or k > 1.0 or (k == 1.0 and not allow_one):
        raise DomainError(f"modulus k={k!r} outside [0, 1{']' if allow_one else ')'}")


def _check_argument(u):
    if not math.isfinite(u):
        raise DomainError(f"argument u={u!r} is not finite")


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus with its complement and quarter period K(k)."""

    k: float
    k_complement: float
    quarter_period: float

    @classmethod
    def from_k(cls, k):
        _check_modulus(k)
        K = math.inf if k == 1.0 else complete_quarter_period(k)
        return cls(k, _complement(k), K)


@dataclass(frozen=True)
class JacobiTriple:
    u: float
    sn: float
    cn: float
    dn: float

    def as_tuple(self):
        return (self.sn, self.cn, self.dn)

    def pythagorean_residuals(self, k):
        """Return (|sn^2+cn^2-1|, |dn^2+k^2 sn^2-1|)."""
        s, c, d = self.sn, self.cn, self.dn
        return abs(s * s + c * c - 1.0), abs(d * d + k * k * s * s - 1.0)


def _agm_sequence(k):
    """Descending AGM sequences (a_n, c_n) starting from (1, k', k)."""
    a, b, c = 1.0, _complement(k), k
    As, Cs = [a], [c]
    for _ in range(AGM_MAXITER):
        if abs(c) <= AGM_TOL * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        As.append(a)
        Cs.append(c)
    else:
        raise ArithmeticError(f"AGM did not converge for k={k!r}")
    return As, Cs


def complete_quarter_period(k):
    """Complete elliptic integral of the first kind K(k) = pi / (2 agm(1, k')).

    Raises DomainError for k outside [0, 1); K diverges logarithmically at k = 1.
    """
    _check_modulus(k, allow_one=False)
    if k == 0.0:
        return 0.5 * math.pi
    As, _ = _agm_sequence(k)
    return 0.5 * math.pi / As[-1]


def _am_reduced(u, k):
    """Amplitude at the reduced argument, returned as (phi_r, m) with
    am(u) = phi_r + m*pi and |phi_r| <= pi/2."""
    As, Cs = _agm_sequence(k)
    N = len(As) - 1
    K = 0.5 * math.pi / As[N]
    m = round(u / (2.0 * K))
    ur = u - 2.0 * K * m
    phi = math.ldexp(As[N] * ur, N)
    for n in range(N, 0, -1):
        phi = 0.5 * (phi + math.asin(Cs[n] / As[n] * math.sin(phi)))
    return phi, m


def _sech(u):
    e = math.exp(-abs(u))
    return 2.0 * e / (1.0 + e * e)


def jacobi(u, k):
    """Return the JacobiTriple (sn, cn, dn) at real argument u and modulus 0 <= k <= 1."""
    _check_argument(u)
    _check_modulus(k)
    if k == 0.0:
        return JacobiTriple(u, math.sin(u), math.cos(u), 1.0)
    if k == 1.0:
        sech = _sech(u)
        return JacobiTriple(u, math.tanh(u), sech, sech)
    phi, m = _am_reduced(u, k)
    sign = -1.0 if m % 2 else 1.0
    sn = sign * math.sin(phi)
    cn = sign * math.cos(phi)
    kp = _complement(k)
    # k'^2 + k^2 cn^2 avoids the cancellation in 1 - k^2 sn^2 near sn = 1
    dn = math.sqrt(kp * kp + k * k * cn * cn)
    return JacobiTriple(u, sn, cn, dn)


def amplitude(u, k):
    """Continuous, monotone branch of am(u, k) with am(0) = 0.

    For 0 < k < 1 the branch satisfies am(u + 2K) = am(u) + pi; at k = 1 it
    is the Gudermannian function and at k = 0 it is the identity.
    """
    _check_argument(u)
    _check_modulus(k)
    if k == 0.0:
        return u
    if k == 1.0:
        return 2.0 * math.atan(math.tanh(0.5 * u))
    phi, m = _am_reduced(u, k)
    return phi + m * math.pi


def _carlson_rf(x, y, z):
    # duplication theorem; ERRTOL 0.0025 gives ~1e-16 relative truncation error
    while True:
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * (sy + sz) + sy * sz
        x, y, z = 0.25 * (x + lam), 0.25 * (y + lam), 0.25 * (z + lam)
        mu = (x + y + z) / 3.0
        dx, dy, dz = 1.0 - x / mu, 1.0 - y / mu, 1.0 - z / mu
        if max(abs(dx), abs(dy), abs(dz)) < 0.0025:
            break
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / math.sqrt(mu)


def incomplete_integral(phi, k):
    """Incomplete elliptic integral of the first kind F(phi, k).

    Inverse of :func:`amplitude`: amplitude(F(phi, k), k) == phi.  Any real
    phi is accepted for k < 1 (F(phi + pi) = F(phi) + 2K); at k = 1 only
    |phi| < pi/2 is finite.
    """
    _check_argument(phi)
    _check_modulus(k)
    if k == 1.0:
        if abs(phi) >= 0.5 * math.pi:
            raise DomainError("F(phi, 1) diverges for |phi| >= pi/2")
        return math.atanh(math.sin(phi))
    m = round(phi / math.pi)
    pr = phi - m * math.pi
    s, c = math.sin(pr), math.cos(pr)
    F = s * _carlson_rf(c * c, 1.0 - k * k * s * s, 1.0)
    if m:
        F += 2.0 * m * complete_quarter_period(k)
    return F


def addition_eval(u1, u3, k):
    """Triple at u1 + u3 assembled only from the triples at u1 and u3.

    Uses the addition formulas with the common denominator
    1 - k^2 sn^2(u1) sn^2(u3); raises NearPoleError when it drops below
    POLE_TOL.
    """
    t1, t3 = jacobi(u1, k), jacobi(u3, k)
    s1, c1, d1 = t1.as_tuple()
    s3, c3, d3 = t3.as_tuple()
    den = 1.0 - k * k * s1 * s1 * s3 * s3
    if den < POLE_TOL:
        raise NearPoleError(f"addition denominator {den:.3e} below {POLE_TOL}")
    sn = (s1 * c3 * d3 + c1 * d1 * s3) / den
    cn = (c1 * c3 - s1 * d1 * s3 * d3) / den
    dn = (d1 * d3 - k * k * s1 * c1 * s3 * c3) / den
    return JacobiTriple(u1 + u3, sn, cn, dn)


def imaginary_transform(u, k):
    """Real parts of Jacobi's imaginary transformation at modulus k.

    Returns (sc, nc, dc) = (sn/cn, 1/cn, dn/cn) at (u, k), so that
    sn(iu, k') = i*sc, cn(iu, k') = nc and dn(iu, k') = dc.
    """
    t = jacobi(u, k)
    if abs(t.cn) < POLE_TOL:
        raise NearPoleError(f"cn({u}, {k}) = {t.cn:.3e} is at a pole of the transform")
    return t.sn / t.cn, 1.0 / t.cn, t.dn / t.cn


def reciprocal_map(sn, cn, dn, k):
    """Map a triple at (U/k, k) to the triple at (U, 1/k): (k sn, dn, cn).

    Works for any k > 0, so applying it with k and then with 1/k is the identity.
    """
    if k <= 0.0:
        raise DomainError("reciprocal modulus needs k > 0")
    return k * sn, dn, cn


def reciprocal_modulus(U, k):
    """(sn, cn, dn) at argument U and modulus 1/k, for 0 < k <= 1."""
    _check_argument(U)
    if not 0.0 < k <= 1.0:
        raise DomainError(f"reciprocal modulus needs 0 < k <= 1, got {k!r}")
    t = jacobi(U / k, k)
    return JacobiTriple(U, *reciprocal_map(t.sn, t.cn, t.dn, k))


def reciprocal_amplitude(U, k):
    """am(U, 1/k) for 0 < k <= 1, i.e. the angle with sine k sn(U/k, k) and cosine dn(U/k, k).

    Because dn > 0 for real arguments this angle always lies in (-pi/2, pi/2).
    """
    t = reciprocal_modulus(U, k)
    return math.atan2(t.sn, t.cn)
