"""Seeded randomized verification suites with machine-readable reports.

Each suite is a list of checks.  A check evaluates one identity over many
samples and keeps either the largest residual (``bound="max"``: pass when it
is at most the tolerance) or the smallest (``bound="min"``: a negative control
that passes when the residual stays at or above the threshold).  Checks with
``gating=False`` are recorded but do not decide the suite's pass flag.

Randomness comes from numpy's PCG64 generator seeded with (seed, suite index),
so a suite produces the same stream whether it runs alone or inside ``all``.
"""

import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import abel, elliptic, ising, oracles, spherical, su2
from .errors import BranchError, DomainError, EllipticIsingError, NearPoleError

SCHEMA_VERSION = 1
SUITES = ("elliptic", "spherical", "su2", "ising", "abel")
DEFAULT_SAMPLES = {"elliptic": 10_000, "spherical": 1000, "su2": 1000, "ising": 1000, "abel": 1000}
MAX_FAILURES = 5

__all__ = [
    "SCHEMA_VERSION",
    "SUITES",
    "RunConfig",
    "CheckReport",
    "SuiteReport",
    "run_suite",
    "run",
    "to_json",
    "to_text",
    "to_csv",
]


@dataclass(frozen=True)
class RunConfig:
    """Seed, per-suite sample count override, tolerance override and output format.

    ``samples=None`` uses each suite's default.  ``tol`` replaces the
    tolerance of every gating upper-bound check when given.
    """

    seed: int = 42
    samples: int = None
    tol: float = None
    format: str = "json"

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")
        if self.samples is not None and self.samples <= 0:
            raise DomainError("sample count must be positive")
        if self.tol is not None and not self.tol > 0.0:
            raise DomainError("tolerance must be positive")
        if self.format not in ("json", "csv", "text"):
            raise DomainError(f"unknown format {self.format!r}")

    def samples_for(self, suite):
        return self.samples if self.samples is not None else DEFAULT_SAMPLES[suite]


@dataclass
class CheckReport:
    name: str
    samples: int
    residual: float
    tolerance: float
    bound: str
    passed: bool
    failures: list
    wall_time: float
    gating: bool = True
    skipped: int = 0

    def to_dict(self):
        return {
            "name": self.name,
            "samples": self.samples,
            "skipped": self.skipped,
            "residual": _num(self.residual),
            "tolerance": self.tolerance,
            "bound": self.bound,
            "passed": self.passed,
            "gating": self.gating,
            "failures": self.failures,
            "wall_time": round(self.wall_time, 6),
        }


@dataclass
class SuiteReport:
    suite: str
    seed: int
    checks: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks if c.gating)

    @property
    def failures(self):
        return [c.name for c in self.checks if c.gating and not c.passed]

    def to_dict(self):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "failed_checks": self.failures,
            "wall_time": round(self.wall_time, 6),
            "checks": [c.to_dict() for c in self.checks],
        }


def _num(x):
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _clean(v):
    if isinstance(v, (np.floating, float)):
        return _num(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (list, tuple, np.ndarray)):
        return [_clean(x) for x in v]
    return v


class _Check:
    """Accumulates residuals for one named identity."""

    def __init__(self, suite, name, tol, bound="max", gating=True):
        self.suite, self.name, self.bound, self.gating = suite, name, bound, gating
        self.tol = tol
        self.samples = 0
        self.skipped = 0
        self.worst = -math.inf if bound == "max" else math.inf
        self.failures = []
        self.t0 = time.perf_counter()

    def add(self, residual, **inputs):
        self.samples += 1
        r = float(residual)
        bad = not (r <= self.tol) if self.bound == "max" else not (r >= self.tol)
        if self.bound == "max":
            self.worst = r if not r <= self.worst else self.worst
        else:
            self.worst = r if not r >= self.worst else self.worst
        if bad and len(self.failures) < MAX_FAILURES:
            self.failures.append({"inputs": {k: _clean(v) for k, v in inputs.items()}, "residual": _num(r)})

    def skip(self):
        self.skipped += 1

    def report(self):
        if self.samples == 0:
            worst, passed = math.nan, False
        else:
            worst = self.worst
            passed = worst <= self.tol if self.bound == "max" else worst >= self.tol
        return CheckReport(self.name, self.samples, worst, self.tol, self.bound, bool(passed),
                           self.failures, time.perf_counter() - self.t0, self.gating, self.skipped)


class _Suite:
    def __init__(self, name, config):
        self.name = name
        self.config = config
        self.n = config.samples_for(name)
        self.rng = np.random.default_rng([config.seed, SUITES.index(name)])
        self.report = SuiteReport(name, config.seed)

    def check(self, name, tol, bound="max", gating=True):
        if self.config.tol is not None and bound == "max" and gating:
            tol = self.config.tol
        return _Check(self.name, name, tol, bound, gating)

    def close(self, *checks):
        for c in checks:
            self.report.checks.append(c.report())


# ---------------------------------------------------------------- elliptic


def _suite_elliptic(s):
    rng, n = s.rng, s.n
    pyth = s.check("pythagorean", 1e-12)
    dn_floor = s.check("dn_lower_bound", 1e-12)
    add = s.check("addition_formula", 1e-10)
    for _ in range(n):
        k = rng.uniform(0.01, 0.99)
        K = elliptic.complete_quarter_period(k)
        u1, u3 = rng.uniform(-4 * K, 4 * K, size=2)
        t = elliptic.jacobi(u1, k)
        pyth.add(max(t.pythagorean_residuals(k)), u=u1, k=k)
        dn_floor.add(max(0.0, elliptic._complement(k) - t.dn), u=u1, k=k)
        try:
            a = elliptic.addition_eval(u1, u3, k)
        except EllipticIsingError:
            add.skip()
            continue
        d = elliptic.jacobi(u1 + u3, k)
        add.add(max(abs(p - q) for p, q in zip(a.as_tuple(), d.as_tuple())), u1=u1, u3=u3, k=k)
    s.close(pyth, dn_floor, add)

    m = max(1, n // 10)
    oracle = s.check("jacobi_vs_inversion_oracle", 1e-11)
    deriv = s.check("derivatives_vs_central_difference", 1e-6)
    quarter = s.check("quarter_period_vs_quadrature", 1e-12)
    for _ in range(m):
        k = rng.uniform(0.01, 0.99)
        K = elliptic.complete_quarter_period(k)
        u = rng.uniform(-4 * K, 4 * K)
        ref = oracles.inversion_jacobi(u, k)
        got = elliptic.jacobi(u, k).as_tuple()
        oracle.add(max(abs(p - q) for p, q in zip(ref, got)), u=u, k=k)
        h = 1e-6
        tp, tm, t = elliptic.jacobi(u + h, k), elliptic.jacobi(u - h, k), elliptic.jacobi(u, k)
        fd = [(p - q) / (2 * h) for p, q in zip(tp.as_tuple(), tm.as_tuple())]
        exact = [t.cn * t.dn, -t.sn * t.dn, -k * k * t.sn * t.cn]
        deriv.add(max(abs(p - q) for p, q in zip(fd, exact)), u=u, k=k)
        quarter.add(abs(K - oracles.quad_quarter_period(k)) / K, k=k)
    s.close(oracle, deriv, quarter)

    roundtrip = s.check("amplitude_of_integral_roundtrip", 1e-11)
    recip = s.check("reciprocal_modulus_roundtrip", 1e-11)
    transform = s.check("imaginary_transform_identities", 1e-11)
    for _ in range(max(1, n // 10)):
        k = rng.uniform(0.01, 0.99)
        phi = rng.uniform(0.0, 0.5 * math.pi)
        roundtrip.add(abs(elliptic.amplitude(elliptic.incomplete_integral(phi, k), k) - phi), phi=phi, k=k)
        K = elliptic.complete_quarter_period(k)
        u = rng.uniform(-4 * K, 4 * K)
        t = elliptic.jacobi(u, k)
        once = elliptic.reciprocal_map(*t.as_tuple(), k)
        twice = elliptic.reciprocal_map(*once, 1.0 / k)
        recip.add(max(abs(p - q) for p, q in zip(twice, t.as_tuple())), u=u, k=k)
        if abs(t.cn) > 1e-3:
            sc, nc, dc = elliptic.imaginary_transform(u, k)
            kp = elliptic._complement(k)
            # sn(iu,k')^2 + cn(iu,k')^2 = 1 and dn^2 + k'^2 sn^2 = 1 with sn imaginary
            transform.add(max(abs(nc * nc - sc * sc - 1.0), abs(dc * dc - kp * kp * sc * sc - 1.0))
                          / max(1.0, nc * nc), u=u, k=k)
        else:
            transform.skip()
    s.close(roundtrip, recip, transform)


# ---------------------------------------------------------------- spherical


def _random_vectors(rng):
    while True:
        raw = rng.normal(size=(3, 3))
        v = spherical.TriangleVectors.from_raw(*raw)
        if abs(v.det) >= 1e-3:
            return v


def _spectral_sample(rng):
    k = rng.uniform(0.01, 0.99)
    K = elliptic.complete_quarter_period(k)
    u2 = rng.uniform(0.02, 0.98) * K
    u1 = rng.uniform(0.01, 0.99) * u2
    return u1, u2 - u1, k


def _suite_spherical(s):
    rng, n = s.rng, s.n
    laws = s.check("cosine_and_sine_laws", 1e-10)
    ident = s.check("quadruple_product_and_dual_identities", 1e-13)
    for _ in range(n):
        v = _random_vectors(rng)
        t, _ = spherical.triangle_from_vectors(v)
        laws.add(t.max_law_residual(), vectors=[v.n1, v.n2, v.n3])
        ident.add(spherical.verify_vector_identities(v).max_residual, vectors=[v.n1, v.n2, v.n3])
    s.close(laws, ident)

    sum_rule = s.check("spectral_sum_rule", 1e-9)
    recover = s.check("spectral_roundtrip", 1e-9)
    spectral_laws = s.check("spectral_triangle_laws", 1e-10)
    for _ in range(n):
        u1, u3, k = _spectral_sample(rng)
        t = spherical.triangle_from_spectral(u1, u3, k)
        spectral_laws.add(t.max_law_residual(), u1=u1, u3=u3, k=k)
        c = spherical.spectral_coordinates(t)
        sum_rule.add(c.residual if c.regime == "difference" else math.inf, u1=u1, u3=u3, k=k)
        recover.add(max(abs(c.u1 - u1), abs(c.u2 - (u1 + u3)), abs(c.u3 - u3)), u1=u1, u3=u3, k=k)
    s.close(sum_rule, recover, spectral_laws)

    diff = s.check("differential_form_at_fixed_side", 1e-7)
    attempts = 0
    while diff.samples < max(1, n // 10) and attempts < 100 * n:
        attempts += 1
        a1, a3 = rng.uniform(0.2, 1.3, size=2)
        k = rng.uniform(0.1, 0.9)
        try:
            diff.add(spherical.differential_check(a1, a3, k, 1e-5), a1=a1, a3=a3, k=k)
        except BranchError:
            diff.skip()
    s.close(diff)


# ---------------------------------------------------------------- su2


def _suite_su2(s):
    rng, n = s.rng, s.n
    tri = {rep: s.check(f"triangle_identity_{rep}", 1e-9) for rep in su2.REPRESENTATIONS}
    transport = s.check("transport_paths_agree", 1e-9)
    for _ in range(n):
        v = _random_vectors(rng)
        t, _ = spherical.triangle_from_vectors(v)
        for rep, c in tri.items():
            c.add(su2.verify_triangle_identity(t, rep), vectors=[v.n1, v.n2, v.n3])
        tc = su2.transport_compare(t, su2.SPIN_ONE)
        w = rng.normal(size=3)
        p1, p2 = tc.apply(w)
        transport.add(max(tc.residual, float(np.linalg.norm(p1 - p2))), vectors=[v.n1, v.n2, v.n3])
    s.close(*tri.values(), transport)

    ybe = {rep: s.check(f"spectral_yang_baxter_{rep}", 1e-9) for rep in su2.REPRESENTATIONS}
    for _ in range(n):
        u1, u3, k = _spectral_sample(rng)
        for rep, c in ybe.items():
            c.add(su2.verify_ybe_spectral(u1, u3, k, rep), u1=u1, u3=u3, k=k)
    s.close(*ybe.values())

    unitary = s.check("rotation_unitarity", 1e-12)
    homo = s.check("rotation_homomorphism", 1e-12)
    expm_rot = s.check("rotation_vs_matrix_exponential", 1e-12)
    det_hyper = s.check("hyperbolic_determinant", 1e-12)
    expm_hyper = s.check("hyperbolic_vs_matrix_exponential", 1e-13)
    for _ in range(max(1, n // 10)):
        axis = ("x", "y", "z")[rng.integers(3)]
        th1, th2 = rng.uniform(-2 * math.pi, 2 * math.pi, size=2)
        c = rng.uniform(-1.0, 1.0)
        for rep in su2.REPRESENTATIONS:
            R = su2.rot(axis, th1, rep)
            unitary.add(float(np.linalg.norm(R @ R.conj().T - np.eye(len(R)))), axis=axis, theta=th1, rep=rep)
            homo.add(su2.frobenius_distance(R @ su2.rot(axis, th2, rep), su2.rot(axis, th1 + th2, rep)),
                     axis=axis, theta1=th1, theta2=th2, rep=rep)
            expm_rot.add(su2.frobenius_distance(R, oracles.expm(1j * th1 * su2.generator(axis, rep))),
                         axis=axis, theta=th1, rep=rep)
        H = su2.hyper(axis, c)
        det_hyper.add(abs(np.linalg.det(H) - 1.0), axis=axis, c=c)
        expm_hyper.add(su2.frobenius_distance(H, oracles.expm(c * su2.SIGMA[axis])), axis=axis, c=c)
    s.close(unitary, homo, expm_rot, det_hyper, expm_hyper)


# ---------------------------------------------------------------- ising

GRID_SIDE = 50
GRID_MODULI = (0.3, 0.6, 0.9)


def _v_grid(k):
    Kp = elliptic.complete_quarter_period(elliptic._complement(k))
    vals = (np.arange(GRID_SIDE) + 0.5) / GRID_SIDE * Kp
    for v1 in vals:
        for v3 in vals:
            if v1 + v3 < Kp * (1.0 - 1e-9):
                yield float(v1), float(v3)


def _suite_ising(s):
    rng, n = s.rng, s.n
    star = s.check("star_triangle_grid", 1e-9)
    scalar = s.check("star_triangle_scalar_is_one", 1e-9)
    hyperbolic = s.check("hyperbolic_identities", 1e-11)
    control = s.check("perturbed_coupling_control", 1e-3, bound="min")
    diff = s.check("difference_property_grid", 1e-9)
    shifted = s.check("difference_property_shifted_middle", 1e-3, bound="min")
    for k in GRID_MODULI:
        for v1, v3 in _v_grid(k):
            c = ising.couplings_from_v(v1, v3, k)
            res, lam = ising.star_triangle_residual(c)
            star.add(res, v1=v1, v3=v3, k=k)
            scalar.add(abs(lam - 1.0), v1=v1, v3=v3, k=k)
            hyperbolic.add(c.hyperbolic_residual, v1=v1, v3=v3, k=k)
            vals = list(c.K + c.L)
            j = int(rng.integers(6))
            vals[j] += rng.choice([-1.0, 1.0]) * rng.uniform(0.05, 0.1)
            control.add(ising.star_triangle_residual(ising.CouplingSet(*vals))[0], v1=v1, v3=v3, k=k, index=j)
            diff.add(ising.verify_difference_property(v1, v3, k), v1=v1, v3=v3, k=k)
            try:
                shifted.add(ising.verify_difference_property(v1, v3, k, middle_shift=0.05), v1=v1, v3=v3, k=k)
            except NearPoleError:
                shifted.skip()
    s.close(star, scalar, hyperbolic, control, diff, shifted)

    crossing = {r: s.check(f"crossing_parameterization_{r}", 1e-9) for r in ising.CROSSING_READINGS}
    angles = s.check("angle_form_matches_triangle", 1e-10)
    for _ in range(n):
        u1, u3, k = _spectral_sample(rng)
        angles.add(ising.angle_form(u1, u3, k).triangle_residual, u1=u1, u3=u3, k=k)
        for reading, chk in crossing.items():
            m = k if reading == "k" else elliptic._complement(k)
            K = elliptic.complete_quarter_period(m)
            w2 = rng.uniform(0.02, 0.98) * K
            w1 = rng.uniform(0.01, 0.99) * w2
            try:
                c = ising.couplings_crossing(w1, w2 - w1, k, reading=reading)
            except EllipticIsingError:
                chk.skip()
                continue
            chk.add(ising.star_triangle_residual(c)[0], u1=w1, u3=w2 - w1, k=k)
    s.close(*crossing.values(), angles)


# ---------------------------------------------------------------- abel


def _random_divisor(rng, n, lo=-2.0, hi=2.0, min_gap=0.05, signs=None):
    while True:
        x = np.sort(rng.uniform(lo, hi, size=n))
        if np.min(np.diff(x)) >= min_gap:
            s = rng.choice([-1.0, 1.0], size=n) if signs is None else signs
            return abel.Divisor(x, s)


def _positive_poly(rng, n):
    q = rng.normal(size=n)
    c = np.polynomial.polynomial.polymul(q, q)
    c[0] += rng.uniform(0.1, 1.0)
    return abel.HyperPoly(c).normalized()


def _elliptic_sample(rng):
    while True:
        k = rng.uniform(0.05, 0.95)
        K = elliptic.complete_quarter_period(k)
        u1, u2 = rng.uniform(-2 * K, 2 * K, size=2)
        x = [elliptic.jacobi(u, k).sn for u in (u1, u2, -u1 - u2)]
        gaps = [abs(x[0] - x[1]), abs(x[1] - x[2]), abs(x[0] - x[2])]
        if min(abs(v) for v in x) >= 0.05 and min(gaps) >= 0.05:
            return u1, u2, k


def _flip_index(u1, u2, k):
    """Index of the point whose term dominates the sum, so a flip cannot hide."""
    x, y = abel.elliptic_divisor(u1, u2, k)
    terms = np.abs(y / (x * abel._F_prime(x)))
    return int(np.argmax(terms))


def _suite_abel(s):
    rng, n = s.rng, s.n
    moments = s.check("moment_sums", 1e-12)
    pfrac = s.check("partial_fractions", 1e-12)
    dpole = s.check("double_pole_expansion", 1e-10)
    bfd = s.check("simple_pole_coefficients_vs_stencil", 1e-6)
    recip = s.check("reciprocal_consistency", 1e-10)
    invol = s.check("reciprocal_involution", 1e-13)
    for _ in range(n):
        m = int(rng.integers(3, 9))
        d = _random_divisor(rng, m)
        for kk in range(m):
            moments.add(abs(abel.moment_sum(d, kk) - (kk == m - 1)) / max(1.0, abel.moment_scale(d, kk)),
                        points=d.points, k=kk)
        x = rng.uniform(-3.0, 3.0)
        if np.min(np.abs(x - d.points)) < 0.1:
            pfrac.skip()
            dpole.skip()
        else:
            kk = int(rng.integers(m))
            terms = np.abs(d.points**kk / (abel.F_prime(d) * (x - d.points)))
            pfrac.add(abel.partial_fraction_residual(d, kk, x) / max(1.0, float(terms.sum())),
                      points=d.points, k=kk, x=x)
            f = abel.HyperPoly(rng.normal(size=2 * m - 1)).normalized()
            dpole.add(abel.double_pole_residual(f, d, x), coeffs=f.coeffs, points=d.points, x=x)
        m = int(rng.integers(3, 7))
        f = _positive_poly(rng, m)
        d = _random_divisor(rng, m, lo=-1.5, hi=1.5, min_gap=0.1)
        if np.min(np.abs(d.points)) < 0.05:
            recip.skip()
            invol.skip()
            bfd.skip()
            continue
        _, b = abel.double_pole_coefficients(f, d)
        ref = oracles.fd_simple_pole_coefficients(f, d.points)
        bfd.add(float(np.max(np.abs(b - ref))) / max(1.0, float(np.max(np.abs(b)))),
                coeffs=f.coeffs, points=d.points)
        g, e = abel.reciprocal_system(f, d)
        q2 = abel.conserved_Q2(f, d)
        recip.add(abs(q2 - abel.conserved_Q1(g, e)) / max(1.0, abs(q2)), coeffs=f.coeffs, points=d.points)
        f2, d2 = abel.reciprocal_system(g, e)
        invol.add(max(float(np.max(np.abs(f2.coeffs - f.coeffs))),
                      float(np.max(np.abs(d2.points - d.points) / np.maximum(1.0, np.abs(d.points)))),
                      float(np.max(np.abs(d2.signs - d.signs)))),
                  coeffs=f.coeffs, points=d.points)
    s.close(moments, pfrac, dpole, bfd, recip, invol)

    lit34 = s.check("elliptic_sum_identity_as_stated", 1e-10, gating=False)
    lit35 = s.check("elliptic_reciprocal_identity_as_stated", 1e-10, gating=False)
    interp = s.check("elliptic_interpolant_identity", 1e-10)
    flip34 = s.check("elliptic_sum_identity_branch_flip_control", 1e-3, bound="min")
    flip_interp = s.check("elliptic_interpolant_branch_flip_control", 1e-3, bound="min")
    for _ in range(n):
        u1, u2, k = _elliptic_sample(rng)
        r34, r35 = abel.elliptic_identity_check(u1, u2, k)
        lit34.add(r34, u1=u1, u2=u2, k=k)
        lit35.add(r35, u1=u1, u2=u2, k=k)
        interp.add(abel.elliptic_interpolant_residual(u1, u2, k), u1=u1, u2=u2, k=k)
        j = _flip_index(u1, u2, k)
        flip34.add(abel.elliptic_identity_check(u1, u2, k, flip=j)[0], u1=u1, u2=u2, k=k, flip=j)
        flip_interp.add(abel.elliptic_interpolant_residual(u1, u2, k, flip=j), u1=u1, u2=u2, k=k, flip=j)
    s.close(lit34, lit35, interp, flip34, flip_interp)

    q1 = s.check("flow_Q1_drift", 1e-6)
    q2 = s.check("reciprocal_flow_Q2_drift", 1e-6)
    constraints = s.check("flow_abel_constraints", 1e-6)
    second = s.check("flow_second_difference", 1e-4)
    order = s.check("flow_convergence_order_deviation", 0.3)
    q2_direct = s.check("flow_Q2_drift_on_direct_flow", 1e-6, gating=False)
    for name, (f, d0) in abel.flow_presets().items():
        direct = abel.integrate_flow(f, d0, 1.0, 1e-3)
        rflow = abel.integrate_reciprocal_flow(f, d0, 1.0, 1e-3)
        q1.add(direct.q1_drift / f.scale, preset=name)
        q2.add(rflow.q2_drift / f.scale, preset=name)
        q2_direct.add(direct.q2_drift / f.scale, preset=name)
        constraints.add(max(direct.abel_max, rflow.abel_max), preset=name)
        second.add(max(direct.fd_max, rflow.fd_max) / f.scale, preset=name)
        for recip_flag in (False, True):
            p = abel.convergence_order(f, d0, 1.0, 1e-2, reciprocal=recip_flag)
            order.add(abs(p - 4.0), preset=name, reciprocal=recip_flag, order=p)
    s.close(q1, q2, constraints, second, order, q2_direct)


_RUNNERS = {
    "elliptic": _suite_elliptic,
    "spherical": _suite_spherical,
    "su2": _suite_su2,
    "ising": _suite_ising,
    "abel": _suite_abel,
}


def run_suite(name, config=None):
    config = config or RunConfig()
    if name not in _RUNNERS:
        raise DomainError(f"unknown suite {name!r}; expected one of {SUITES + ('all',)}")
    s = _Suite(name, config)
    t0 = time.perf_counter()
    _RUNNERS[name](s)
    s.report.wall_time = time.perf_counter() - t0
    return s.report


def run(name, config=None):
    """Run one suite or ``"all"``; returns a list of SuiteReport."""
    config = config or RunConfig()
    names = SUITES if name == "all" else (name,)
    if name != "all" and name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; expected one of {SUITES + ('all',)}")
    return [run_suite(n, config) for n in names]


def _payload(reports, config):
    return {
        "schema": SCHEMA_VERSION,
        "seed": config.seed,
        "samples": config.samples,
        "tol": config.tol,
        "rng": "numpy PCG64 seeded with [seed, suite index]",
        "passed": all(r.passed for r in reports),
        "suites": [r.to_dict() for r in reports],
    }


def to_json(reports, config):
    return json.dumps(_payload(reports, config), indent=2)


def to_text(reports, config):
    lines = []
    for r in reports:
        for c in r.checks:
            tag = "PASS" if c.passed else ("FAIL" if c.gating else "NOTE")
            op = "<=" if c.bound == "max" else ">="
            lines.append(f"{tag} {r.suite}/{c.name}: residual={_num(c.residual)!s} {op} {c.tolerance:g} "
                         f"(n={c.samples}{', skipped=' + str(c.skipped) if c.skipped else ''})")
    ok = all(r.passed for r in reports)
    lines.append(f"{'PASS' if ok else 'FAIL'} overall (seed={config.seed})")
    return "\n".join(lines)


def to_csv(reports, config):
    rows = ["suite,check,samples,skipped,residual,tolerance,bound,gating,passed,wall_time"]
    for r in reports:
        for c in r.checks:
            rows.append(f"{r.suite},{c.name},{c.samples},{c.skipped},{_num(c.residual)!r},{c.tolerance!r},"
                        f"{c.bound},{c.gating},{c.passed},{c.wall_time:.6f}")
    return "\n".join(rows)
