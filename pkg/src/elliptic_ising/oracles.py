"""Independent reference evaluations used only to cross-check the library.

Nothing here shares code with the production routines: elliptic values come
from adaptive quadrature of the defining integral plus bracketed root finding,
matrix exponentials from scipy's Pade scaling-and-squaring, and the simple-pole
coefficients of the flow from a five-point finite-difference stencil.
"""

import math
import warnings

import numpy as np
from scipy import integrate, linalg, optimize

__all__ = [
    "quad_incomplete",
    "quad_quarter_period",
    "inversion_jacobi",
    "inversion_amplitude",
    "expm",
    "fd_simple_pole_coefficients",
]

_QUAD_OPTS = dict(epsabs=1e-15, epsrel=1e-13, limit=200)


def _integrand(theta, k):
    s = math.sin(theta)
    return 1.0 / math.sqrt(1.0 - k * k * s * s)


def quad_incomplete(phi, k):
    """F(phi, k) by adaptive Gauss-Kronrod quadrature of the defining integral."""
    with warnings.catch_warnings():
        # quad flags roundoff once it is already at machine precision
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        return integrate.quad(_integrand, 0.0, phi, args=(k,), **_QUAD_OPTS)[0]


def quad_quarter_period(k):
    return quad_incomplete(0.5 * math.pi, k)


def _invert(u, k):
    """(phi_r, m) with F(phi_r) + 2 m K = u and |phi_r| <= pi/2."""
    K = quad_quarter_period(k)
    m = round(u / (2.0 * K))
    ur = u - 2.0 * m * K
    if abs(ur) >= K:
        return math.copysign(0.5 * math.pi, ur), m
    phi = optimize.brentq(lambda p: quad_incomplete(p, k) - ur, -0.5 * math.pi, 0.5 * math.pi,
                          xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
    return phi, m


def inversion_amplitude(u, k):
    phi, m = _invert(u, k)
    return phi + m * math.pi


def inversion_jacobi(u, k):
    """(sn, cn, dn) as (sin phi, cos phi, sqrt(1 - k^2 sin^2 phi)) with phi = am(u, k)."""
    phi = inversion_amplitude(u, k)
    s = math.sin(phi)
    return s, math.cos(phi), math.sqrt(1.0 - k * k * s * s)


def expm(M):
    return linalg.expm(np.asarray(M, dtype=complex))


def fd_simple_pole_coefficients(f, points, h=1e-5):
    """b_i = d/dx [x^2 f(x) / G_i(x)^2] at x_i by a five-point central stencil."""
    x = np.asarray(points, dtype=float)
    out = np.empty(len(x))
    for i, xi in enumerate(x):
        others = np.delete(x, i)

        def a(t):
            return t * t * f(t) / np.prod(t - others) ** 2

        out[i] = (-a(xi + 2 * h) + 8 * a(xi + h) - 8 * a(xi - h) + a(xi - 2 * h)) / (12 * h)
    return out
