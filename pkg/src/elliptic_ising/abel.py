"""Divisor flow on the hyperelliptic curve y^2 = f(x), deg f = 2n - 2.

n points x_i move by

    dx_i/dt = s_i x_i sqrt(f(x_i)) / F'(x_i),     F(x) = prod (x - x_i),

where s_i = +-1 is the branch of the square root carried by each point.
The partial-fraction identities for 1/F make the sums
sum_i x_i^k dx_i / (s_i sqrt f(x_i)), k = 0..n-3, vanish identically, and
p = sum x_i obeys 2 p'' = A_{2n-3} + 2 A_{2n-2} p.

Coefficients are stored ascending: ``coeffs[j]`` multiplies x^j.
"""

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .elliptic import jacobi
from .errors import BranchError, DegeneracyError, DomainError, FlowHalt, NearPoleError

MIN_GAP = 1e-9
COLLISION_GAP = 1e-6
POLE_DISTANCE = 1e-6
ZERO_POINT = 1e-9
MAX_POINTS = 12
MAX_DT = 1e-2
PROJECT_FLOOR = 1e-3
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)

__all__ = [
    "HyperPoly",
    "Divisor",
    "Trajectory",
    "F_prime",
    "moment_sum",
    "moment_scale",
    "partial_fraction_residual",
    "double_pole_coefficients",
    "double_pole_residual",
    "flow_rhs",
    "conserved_Q1",
    "conserved_Q2",
    "reciprocal_system",
    "integrate_flow",
    "integrate_reciprocal_flow",
    "convergence_order",
    "elliptic_divisor",
    "elliptic_identity_check",
    "elliptic_interpolant_residual",
    "flow_presets",
]


@dataclass(frozen=True)
class HyperPoly:
    """f(x) = A_0 + A_1 x + ... + A_{2n-2} x^{2n-2} for an n-point divisor."""

    coeffs: np.ndarray
    degenerate: bool = False

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float)
        if c.ndim != 1 or len(c) % 2 == 0:
            raise DomainError(f"need 2n-1 coefficients, got {len(c)}")
        n = (len(c) + 1) // 2
        if not 3 <= n <= MAX_POINTS:
            raise DomainError(f"n={n} outside [3, {MAX_POINTS}]")
        if not np.all(np.isfinite(c)):
            raise DomainError("coefficients must be finite")
        if c[-1] == 0.0 and not self.degenerate:
            raise DomainError("leading coefficient is zero; pass degenerate=True to allow it")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def n(self):
        return (len(self.coeffs) + 1) // 2

    @property
    def leading(self):
        """(A_{2n-3}, A_{2n-2})."""
        return self.coeffs[-2], self.coeffs[-1]

    @property
    def trailing(self):
        """(A_1, A_0)."""
        return self.coeffs[1], self.coeffs[0]

    @property
    def scale(self):
        return float(np.max(np.abs(self.coeffs)))

    def __call__(self, x):
        return P.polyval(x, self.coeffs)

    def derivative(self, x):
        return P.polyval(x, P.polyder(self.coeffs))

    def reversed(self):
        c = self.coeffs[::-1]
        return HyperPoly(c, degenerate=c[-1] == 0.0)

    def scaled(self, factor):
        return HyperPoly(self.coeffs * factor, degenerate=self.degenerate)

    def normalized(self):
        """Copy with max |A_j| = 1."""
        return self.scaled(1.0 / self.scale)

    @classmethod
    def elliptic(cls, k):
        """(1 - x^2)(1 - k^2 x^2), the n = 3 case."""
        return cls([1.0, 0.0, -(1.0 + k * k), 0.0, k * k], degenerate=k == 0.0)


@dataclass(frozen=True)
class Divisor:
    points: np.ndarray
    signs: np.ndarray

    def __post_init__(self):
        x = np.array(self.points, dtype=float)
        s = np.array(self.signs, dtype=float)
        if x.ndim != 1 or x.shape != s.shape or len(x) < 2:
            raise DomainError("points and signs must be equal-length 1-d sequences")
        if not np.all(np.isfinite(x)):
            raise DomainError("points must be finite")
        if not np.all(np.abs(s) == 1.0):
            raise DomainError("signs must be +1 or -1")
        if _min_gap(x) < MIN_GAP:
            raise DegeneracyError(f"divisor points closer than {MIN_GAP}")
        x.setflags(write=False)
        s.setflags(write=False)
        object.__setattr__(self, "points", x)
        object.__setattr__(self, "signs", s)

    @property
    def n(self):
        return len(self.points)

    @classmethod
    def positive(cls, points):
        return cls(points, np.ones(len(points)))


def _min_gap(x):
    if len(x) < 2:
        return math.inf
    xs = np.sort(x)
    return float(np.min(np.diff(xs)))


def _F_prime(x):
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    return np.prod(diff, axis=1)


def F_prime(d):
    """F'(x_i) = prod_{j != i} (x_i - x_j) for every divisor point."""
    return _F_prime(d.points)


def moment_sum(d, k):
    """sum_i x_i^k / F'(x_i): zero for k <= n-2 and one for k = n-1."""
    if not 0 <= k <= d.n - 1:
        raise DomainError(f"moment order k={k} outside [0, {d.n - 1}]")
    return float(np.sum(d.points**k / F_prime(d)))


def moment_scale(d, k):
    """sum_i |x_i^k / F'(x_i)|, the natural scale for moment_sum residuals."""
    return float(np.sum(np.abs(d.points**k / F_prime(d))))


def partial_fraction_residual(d, k, x):
    """|x^k/F(x) - sum_i x_i^k / (F'(x_i)(x - x_i))|."""
    if not 0 <= k <= d.n - 1:
        raise DomainError(f"order k={k} outside [0, {d.n - 1}]")
    if np.min(np.abs(x - d.points)) < POLE_DISTANCE:
        raise NearPoleError(f"x={x} within {POLE_DISTANCE} of a divisor point")
    lhs = x**k / np.prod(x - d.points)
    rhs = np.sum(d.points**k / (F_prime(d) * (x - d.points)))
    return float(abs(lhs - rhs))


def _check_match(f, d):
    if f.n != d.n:
        raise DomainError(f"polynomial is for n={f.n} points, divisor has {d.n}")


def double_pole_coefficients(f, d):
    """(a_i, b_i) of the double- and simple-pole parts of x^2 f(x)/F(x)^2.

    a_i = h(x_i)/G_i^2 and b_i = d/dx [h/G_i^2] at x_i, with h = x^2 f and
    G_i = F/(x - x_i); the derivative is taken analytically:
    b_i = (h'(x_i) - 2 h(x_i) sum_{j != i} 1/(x_i - x_j)) / G_i(x_i)^2.
    """
    _check_match(f, d)
    x = d.points
    G = _F_prime(x)
    h = x * x * f(x)
    dh = 2.0 * x * f(x) + x * x * f.derivative(x)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, np.inf)
    log_deriv = np.sum(1.0 / diff, axis=1)
    a = h / (G * G)
    b = (dh - 2.0 * h * log_deriv) / (G * G)
    return a, b


def double_pole_residual(f, d, x):
    """Residual of x^2 f/F^2 - A_{2n-2} = sum_i a_i/(x-x_i)^2 + b_i/(x-x_i).

    Returned relative to max(1, largest term) so that it is scale-free.
    """
    _check_match(f, d)
    if np.min(np.abs(x - d.points)) < POLE_DISTANCE:
        raise NearPoleError(f"x={x} within {POLE_DISTANCE} of a divisor point")
    a, b = double_pole_coefficients(f, d)
    r = x - d.points
    lhs = x * x * f(x) / np.prod(r) ** 2
    terms = np.concatenate([a / (r * r), b / r])
    scale = max(1.0, abs(lhs), float(np.max(np.abs(terms))))
    return float(abs(lhs - f.coeffs[-1] - np.sum(terms)) / scale)


def _branch_values(f, x, s):
    fx = f(x)
    tol = 1e-14 * f.scale * np.maximum(1.0, np.abs(x)) ** (2 * f.n - 2)
    bad = fx < -tol
    return s * np.sqrt(np.maximum(fx, 0.0)), bad


def _velocity(f, x, s):
    root, bad = _branch_values(f, x, s)
    return x * root / _F_prime(x), bad


def flow_rhs(f, d):
    """dx_i/dt = s_i x_i sqrt(f(x_i)) / F'(x_i)."""
    _check_match(f, d)
    if _min_gap(d.points) < COLLISION_GAP:
        raise DegeneracyError(f"points closer than {COLLISION_GAP}: collision")
    v, bad = _velocity(f, d.points, d.signs)
    if np.any(bad):
        raise BranchError(f"f < 0 at points {np.flatnonzero(bad).tolist()}: no real branch")
    return v


def _q1(f, x, s):
    v = float(np.sum(s * x * np.sqrt(np.maximum(f(x), 0.0)) / _F_prime(x)))
    p = float(np.sum(x))
    a_odd, a_top = f.leading
    return v * v - a_odd * p - a_top * p * p


def _q2(f, x, s):
    if np.min(np.abs(x)) < ZERO_POINT:
        return math.nan
    v = float(np.sum(s * np.sqrt(np.maximum(f(x), 0.0)) / (x * x * _F_prime(x))) * np.prod(x))
    q = float(np.sum(1.0 / x))
    a1, a0 = f.trailing
    return v * v - a1 * q - a0 * q * q


def conserved_Q1(f, d):
    """(sum_i s_i x_i sqrt f(x_i) / F'(x_i))^2 - A_{2n-3} p - A_{2n-2} p^2, p = sum x_i."""
    _check_match(f, d)
    root, bad = _branch_values(f, d.points, d.signs)
    if np.any(bad):
        raise BranchError("f < 0 at a divisor point")
    v = float(np.sum(d.points * root / F_prime(d)))
    p = float(np.sum(d.points))
    a_odd, a_top = f.leading
    return v * v - a_odd * p - a_top * p * p


def conserved_Q2(f, d):
    """(sum_i s_i sqrt f(x_i) / (x_i^2 F'(x_i)))^2 (prod x_i)^2 - A_1 q - A_0 q^2, q = sum 1/x_i."""
    _check_match(f, d)
    x = d.points
    if np.min(np.abs(x)) < ZERO_POINT:
        raise NearPoleError("a divisor point is at zero")
    root, bad = _branch_values(f, x, d.signs)
    if np.any(bad):
        raise BranchError("f < 0 at a divisor point")
    v = float(np.sum(root / (x * x * F_prime(d))) * np.prod(x))
    q = float(np.sum(1.0 / x))
    a1, a0 = f.trailing
    return v * v - a1 * q - a0 * q * q


def reciprocal_system(f, d):
    """(g, xi-divisor) for xi = 1/x, with g the coefficient-reversed polynomial.

    g(xi) = xi^{2n-2} f(1/xi), so sqrt g(xi_i) = |xi_i|^{n-1} sqrt f(x_i); the
    branch sign of xi_i is s_i sign(x_i)^{n-1}, which makes the map an involution.
    """
    _check_match(f, d)
    x = d.points
    if np.min(np.abs(x)) < ZERO_POINT:
        raise NearPoleError("a divisor point is at zero")
    signs = d.signs * np.sign(x) ** (f.n - 1)
    return f.reversed(), Divisor(1.0 / x, signs)


# ---------------------------------------------------------------- integration


@dataclass
class Trajectory:
    """Grid-sampled flow history.

    ``abel`` holds the accumulated sums sum_i s_i int x^k dx / sqrt f for
    k = 0..n-3 (columns); ``fd_second`` is the central-difference residual of
    2 p'' - A_{2n-3} - 2 A_{2n-2} p (NaN at the ends).
    """

    f: HyperPoly
    times: np.ndarray
    points: np.ndarray
    signs: np.ndarray
    Q1: np.ndarray
    Q2: np.ndarray
    abel: np.ndarray
    fd_second: np.ndarray = None
    flips: list = field(default_factory=list)
    system: str = "direct"

    def __post_init__(self):
        if self.fd_second is None:
            self.fd_second = _second_difference_residual(self.f, self.times, self.points)

    @property
    def n(self):
        return self.points.shape[1]

    def divisor(self, j):
        return Divisor(self.points[j], self.signs[j])

    @property
    def q1_drift(self):
        return float(np.max(np.abs(self.Q1 - self.Q1[0])))

    @property
    def q2_drift(self):
        d = np.abs(self.Q2 - self.Q2[0])
        return float(np.nanmax(d)) if np.any(np.isfinite(d)) else math.nan

    @property
    def abel_max(self):
        return float(np.max(np.abs(self.abel))) if self.abel.size else 0.0

    @property
    def fd_max(self):
        r = self.fd_second
        return float(np.nanmax(r)) if np.any(np.isfinite(r)) else math.nan

    def to_csv(self, stream=None):
        """Write t, x_i, s_i, Q1, Q2, abel_k, fd_523 rows; returns the text if no stream."""
        out = stream if stream is not None else io.StringIO()
        n, m = self.n, self.abel.shape[1]
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["t", *(f"x{i + 1}" for i in range(n)), *(f"s{i + 1}" for i in range(n)),
                    "Q1", "Q2", *(f"abel{k}" for k in range(m)), "fd_523"])
        for j in range(len(self.times)):
            w.writerow([repr(float(self.times[j])),
                        *(repr(float(v)) for v in self.points[j]),
                        *(int(v) for v in self.signs[j]),
                        repr(float(self.Q1[j])), repr(float(self.Q2[j])),
                        *(repr(float(v)) for v in self.abel[j]),
                        repr(float(self.fd_second[j]))])
        return out.getvalue() if stream is None else None


def _second_difference_residual(f, times, points):
    r = np.full(len(times), np.nan)
    if len(times) < 3:
        return r
    p = points.sum(axis=1)
    dt = times[1] - times[0]
    a_odd, a_top = f.leading
    r[1:-1] = np.abs(2.0 * (p[2:] - 2.0 * p[1:-1] + p[:-2]) / (dt * dt) - a_odd - 2.0 * a_top * p[1:-1])
    return r


def _anchored_integrals(f, anchor, end, powers):
    """int_anchor^end x^k / sqrt f(x) dx via x = anchor + (end - anchor) w^2.

    The substitution cancels the inverse square-root singularity when the
    anchor is a simple root of f.
    """
    w = 0.5 * (_GL_NODES + 1.0)
    x = anchor + (end - anchor) * w * w
    jac = 2.0 * (end - anchor) * w
    fx = np.maximum(f(x), 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        base = np.where(jac == 0.0, 0.0, jac / np.sqrt(fx)) * (0.5 * _GL_WEIGHTS)
    return np.array([np.sum(base * x**k) for k in powers])


def _abel_increment(f, roots, xa, xb, sign):
    """sign * int_{xa}^{xb} x^k / sqrt f(x) dx for k = 0..n-3.

    When a root of f lies just beyond either end the integral is taken as a
    difference of two integrals anchored at that root, so the integrand stays
    smooth however close the segment comes to the branch point.
    """
    powers = range(f.n - 2)
    if xa == xb:
        return np.zeros(f.n - 2)
    lo, hi = min(xa, xb), max(xa, xb)
    if roots.size:
        r = roots[np.argmin(np.abs(roots - 0.5 * (lo + hi)))]
        outside = r <= lo or r >= hi
        if outside and min(abs(r - lo), abs(r - hi)) < 4.0 * (hi - lo):
            return sign * (_anchored_integrals(f, r, xb, powers) - _anchored_integrals(f, r, xa, powers))
    if f(xb) < f(xa):
        return -sign * _anchored_integrals(f, xb, xa, powers)
    return sign * _anchored_integrals(f, xa, xb, powers)


def _acceleration(f, x, v):
    """x_i'' = b_i / 2 + v_i sum_{j != i} v_j / (x_i - x_j), the flow differentiated once."""
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    G = np.prod(diff, axis=1)
    np.fill_diagonal(diff, np.inf)
    inv = 1.0 / diff
    fx = f(x)
    h = x * x * fx
    dh = 2.0 * x * fx + x * x * f.derivative(x)
    b = (dh - 2.0 * h * inv.sum(axis=1)) / (G * G)
    return 0.5 * b + v * (inv @ v)


def _rk4(f, x, v, h):
    k1x, k1v = v, _acceleration(f, x, v)
    k2x = v + 0.5 * h * k1v
    k2v = _acceleration(f, x + 0.5 * h * k1x, k2x)
    k3x = v + 0.5 * h * k2v
    k3v = _acceleration(f, x + 0.5 * h * k2x, k3x)
    k4x = v + h * k3v
    k4v = _acceleration(f, x + h * k3x, k4x)
    return (x + h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
            v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v))


def _branch_signs(x, v, old):
    """Sign s_i with v_i = s_i x_i sqrt f / F'; kept when v_i or x_i vanishes."""
    raw = np.sign(v * _F_prime(x) * x)
    return np.where(raw == 0.0, old, raw)


def _project(f, x, v, s):
    """Reset v_i to s_i x_i sqrt f(x_i) / F'(x_i) where sqrt f is well conditioned.

    The second-order system has directions off the constraint v_i^2 = a_i(x)
    that grow; projecting away from the roots of f keeps it on the flow, while
    near a root the integrated velocity carries the point through the turn.
    """
    fx = f(x)
    ok = fx > PROJECT_FLOOR * f.scale
    if not np.any(ok):
        return v
    exact = s * x * np.sqrt(np.maximum(fx, 0.0)) / _F_prime(x)
    return np.where(ok, exact, v)


def _turning_time(xa, xb, va, vb, h):
    """Zero of the cubic Hermite velocity on (0, h), or h/2 if none is found."""
    # x'(s h) / h for the Hermite cubic: va + s (6 dx/h - 4 va - 2 vb) + s^2 (3 va + 3 vb - 6 dx/h)
    dxh = (xb - xa) / h
    c0, c1, c2 = va, 6.0 * dxh - 4.0 * va - 2.0 * vb, 3.0 * va + 3.0 * vb - 6.0 * dxh
    roots = np.roots([c2, c1, c0]) if c2 != 0.0 else np.array([-c0 / c1])
    roots = [r.real for r in np.atleast_1d(roots) if abs(r.imag) < 1e-12 and 0.0 <= r.real <= 1.0]
    return (min(roots) if roots else 0.5) * h


def _hermite_point(xa, xb, va, vb, h, tau):
    s = tau / h
    h00, h10 = 2 * s**3 - 3 * s**2 + 1, s**3 - 2 * s**2 + s
    h01, h11 = -2 * s**3 + 3 * s**2, s**3 - s**2
    return h00 * xa + h10 * h * va + h01 * xb + h11 * h * vb


def _real_roots(f):
    r = P.polyroots(np.trim_zeros(f.coeffs, "b"))
    return np.sort(r[np.abs(r.imag) < 1e-9].real)


def integrate_flow(f, d0, t_end, dt):
    """Fixed-step RK4 integration of the divisor flow on [0, t_end].

    The state is (x, v) with v_i = dx_i/dt initialised from the flow equation
    and advanced by its time derivative, which stays smooth where sqrt f(x_i)
    vanishes.  Branch signs are read back from v each step; when s_i changes,
    the turning time is located on the step's Hermite interpolant and the
    turning point is snapped to the nearby root of f, which splits the Abel
    quadrature.  Raises FlowHalt (with the partial trajectory) on collision,
    crossing, f going negative, or overflow.
    """
    _check_match(f, d0)
    if not 0.0 < dt <= MAX_DT:
        raise DomainError(f"dt={dt} outside (0, {MAX_DT}]")
    if not t_end > 0.0:
        raise DomainError("t_end must be positive")
    v = flow_rhs(f, d0)
    steps = int(round(t_end / dt))
    if steps < 1 or abs(steps * dt - t_end) > 1e-9 * max(1.0, t_end):
        raise DomainError("t_end must be a whole number of steps dt")

    roots = _real_roots(f)
    neg_tol = 1e-8 * f.scale
    x, s = d0.points.copy(), d0.signs.copy()
    times, xs, ss, abel = [0.0], [x.copy()], [s.copy()], [np.zeros(f.n - 2)]
    flips = []

    def partial():
        return _finish(f, times, xs, ss, abel, flips)

    for j in range(steps):
        t0 = j * dt
        x_new, v_new = _rk4(f, x, v, dt)
        if not (np.all(np.isfinite(x_new)) and np.all(np.isfinite(v_new))):
            raise FlowHalt("nonfinite", f"state left the finite range near t={t0 + dt:.6g}", partial())
        if _min_gap(x_new) < COLLISION_GAP or np.any(np.argsort(x_new) != np.argsort(x)):
            raise FlowHalt("collision", f"points met or crossed near t={t0 + dt:.6g}", partial())
        if np.any(f(x_new) < -neg_tol):
            bad = np.flatnonzero(f(x_new) < -neg_tol).tolist()
            raise FlowHalt("negative_f", f"f < 0 at points {bad} near t={t0 + dt:.6g}", partial())
        s_new = _branch_signs(x_new, v_new, s)
        # a point that did not move at all sits at a fixed point; roundoff in v is not a turn
        s_new = np.where(x_new == x, s, s_new)
        v_new = _project(f, x_new, v_new, s_new)
        acc = abel[-1].copy()
        for i in range(f.n):
            if s_new[i] == s[i]:
                acc += _abel_increment(f, roots, x[i], x_new[i], s[i])
                continue
            tau = _turning_time(x[i], x_new[i], v[i], v_new[i], dt)
            turn = _hermite_point(x[i], x_new[i], v[i], v_new[i], dt, tau)
            if roots.size and np.min(np.abs(roots - turn)) < 1e-6:
                turn = roots[np.argmin(np.abs(roots - turn))]
            acc += _abel_increment(f, roots, x[i], turn, s[i])
            acc += _abel_increment(f, roots, turn, x_new[i], s_new[i])
            flips.append((t0 + tau, i))
        x, v, s = x_new, v_new, s_new
        times.append((j + 1) * dt)
        xs.append(x.copy())
        ss.append(s.copy())
        abel.append(acc)
    return partial()


def _finish(f, times, xs, ss, abel, flips, system="direct"):
    X, S = np.array(xs), np.array(ss)
    Q1 = np.array([_q1(f, x, s) for x, s in zip(X, S)])
    Q2 = np.array([_q2(f, x, s) for x, s in zip(X, S)])
    return Trajectory(f, np.array(times), X, S, Q1, Q2, np.array(abel), flips=list(flips), system=system)


def integrate_reciprocal_flow(f, d0, t_end, dt):
    """Integrate the flow of the reciprocal system (g, xi = 1/x) and map back to x.

    Q2 of f is Q1 of g, so Q2 is the first integral of this flow, just as Q1
    is the first integral of :func:`integrate_flow`.  Abel sums and the
    second-difference residual are reported in the xi variables with g.
    """
    g, e0 = reciprocal_system(f, d0)
    try:
        tr = integrate_flow(g, e0, t_end, dt)
    except FlowHalt as halt:
        if halt.trajectory is not None:
            halt.trajectory = _map_back(f, halt.trajectory)
        raise
    return _map_back(f, tr)


def _map_back(f, tr):
    X = 1.0 / tr.points
    S = tr.signs * np.sign(tr.points) ** (f.n - 1)
    Q1 = np.array([_q1(f, x, s) for x, s in zip(X, S)])
    Q2 = np.array([_q2(f, x, s) for x, s in zip(X, S)])
    return Trajectory(f, tr.times, X, S, Q1, Q2, tr.abel, fd_second=tr.fd_second, flips=tr.flips,
                      system="reciprocal")


def convergence_order(f, d0, t_end, dt, reciprocal=False):
    """Observed order from endpoint differences at dt, dt/2, dt/4.

    log2(|x_dt - x_{dt/2}| / |x_{dt/2} - x_{dt/4}|); 4 for classical RK4.
    """
    run = integrate_reciprocal_flow if reciprocal else integrate_flow
    ends = [run(f, d0, t_end, dt / m).points[-1] for m in (1, 2, 4)]
    e1 = np.max(np.abs(ends[0] - ends[1]))
    e2 = np.max(np.abs(ends[1] - ends[2]))
    if e2 == 0.0:
        return math.inf
    return float(math.log2(e1 / e2))


# ---------------------------------------------------------------- n = 3 elliptic case


def elliptic_divisor(u1, u2, k, flip=None):
    """Divisor sn(u_i) with u3 = -u1 - u2, plus the signed roots cn(u_i) dn(u_i).

    ``flip`` negates the root at that index (negative control).
    """
    if not 0.0 < k < 1.0:
        raise DomainError(f"modulus k={k} outside (0, 1)")
    us = (u1, u2, -u1 - u2)
    tri = [jacobi(u, k) for u in us]
    x = np.array([t.sn for t in tri])
    y = np.array([t.cn * t.dn for t in tri])
    if flip is not None:
        y[flip] = -y[flip]
    if np.min(np.abs(x)) < ZERO_POINT:
        raise DegeneracyError("some sn(u_i) is zero")
    if _min_gap(x) < MIN_GAP:
        raise DegeneracyError("sn values coincide")
    return x, y


def elliptic_identity_check(u1, u2, k, flip=None):
    """(res34, res35) for x_i = sn(u_i), sqrt f_4(x_i) = cn(u_i) dn(u_i), u1+u2+u3 = 0.

    res34 = |sum x_i y_i / F'(x_i) + k sum x_i|
    res35 = |x1 x2 x3 sum y_i / (x_i^2 F'(x_i)) - sum 1/x_i|
    """
    x, y = elliptic_divisor(u1, u2, k, flip)
    Fp = _F_prime(x)
    res34 = abs(np.sum(x * y / Fp) + k * np.sum(x))
    res35 = abs(np.prod(x) * np.sum(y / (x * x * Fp)) - np.sum(1.0 / x))
    return float(res34), float(res35)


def elliptic_interpolant_residual(u1, u2, k, flip=None):
    """|x1 x2 x3 sum y_i / (x_i F'(x_i)) - 1| on the same data.

    The left term is the value at x = 0 of the quadratic through the three
    points (x_i, y_i).  When u1 + u2 + u3 = 0 that quadratic also passes
    through (0, 1) = (sn 0, cn 0 dn 0), so the residual vanishes.
    """
    x, y = elliptic_divisor(u1, u2, k, flip)
    return float(abs(np.prod(x) * np.sum(y / (x * _F_prime(x))) - 1.0))


def flow_presets():
    """Named (f, initial divisor) pairs whose flows stay collision-free on [0, 1].

    ``elliptic``: (1 - x^2)(1 - 0.36 x^2) with three points, one of which
    turns at the root x = -1 during [0, 1].
    ``sextic``: -(5/9)(x^2 - 1)(x^2 - 4)(x^2 - 9) with one point in each of
    the bands [-3, -2] and [2, 3] and two in [-1, 1].
    """
    sextic = P.polyfromroots([1.0, -1.0, 2.0, -2.0, 3.0, -3.0]) * (-5.0 / 9.0)
    return {
        "elliptic": (HyperPoly.elliptic(0.6), Divisor([-0.795, -0.586, 0.675], [1.0, 1.0, 1.0])),
        "sextic": (HyperPoly(sextic), Divisor([-2.5, -0.4, 0.5, 2.4], [1.0, -1.0, -1.0, 1.0])),
    }
