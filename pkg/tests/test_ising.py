import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from elliptic_ising import elliptic, ising, spherical
from elliptic_ising.errors import BranchError, DomainError, NearPoleError


def complement(k):
    return math.sqrt(1 - k * k)


def test_zero_parameters_give_zero_couplings():
    c = ising.couplings_from_v(0.0, 0.0, 0.6)
    assert c.K + c.L == pytest.approx((0.0,) * 6, abs=1e-15)
    res, lam = ising.star_triangle_residual(c)
    assert res == 0.0
    assert lam == pytest.approx(1.0)


def test_example_couplings_satisfy_star_triangle():
    c = ising.couplings_from_v(0.3, 0.5, 0.6)
    res, lam = ising.star_triangle_residual(c)
    assert res <= 1e-9
    assert abs(lam - 1.0) <= 1e-9
    assert c.hyperbolic_residual <= 1e-12


def test_weights_against_direct_formula():
    k, v = 0.6, 0.45
    t = elliptic.jacobi(v, complement(k))
    c = ising.couplings_from_v(v, 0.0, k)
    assert math.sinh(2 * c.K1) == pytest.approx(t.sn / t.cn, rel=1e-14)
    assert math.cosh(2 * c.L1s) == pytest.approx(t.dn / t.cn, rel=1e-14)
    assert math.sinh(2 * c.L1s) == pytest.approx(k * t.sn / t.cn, rel=1e-14)


def test_perturbed_couplings_fail():
    c = ising.couplings_from_v(0.3, 0.5, 0.6)
    vals = list(c.K + c.L)
    for j in range(6):
        bent = list(vals)
        bent[j] += 0.05
        assert ising.star_triangle_residual(ising.CouplingSet(*bent))[0] >= 1e-3


def test_pole_and_domain_errors():
    Kp = elliptic.complete_quarter_period(complement(0.6))
    with pytest.raises(NearPoleError):
        ising.couplings_from_v(0.6 * Kp, 0.5 * Kp, 0.6)
    with pytest.raises(DomainError):
        ising.couplings_from_v(-0.1, 0.2, 0.6)
    with pytest.raises(DomainError):
        ising.couplings_from_v(0.1, 0.2, 1.5)


def test_difference_property_cases():
    assert ising.verify_difference_property(0.4, 0.0, 0.6) <= 1e-12
    assert ising.verify_difference_property(0.3, 0.3, 0.6) <= 1e-9
    assert ising.verify_difference_property(0.3, 0.3, 0.6, middle_shift=0.05) >= 1e-3


def test_grid_sweep():
    for k in (0.3, 0.6, 0.9):
        Kp = elliptic.complete_quarter_period(complement(k))
        vals = (np.arange(10) + 0.5) / 10 * Kp
        for v1 in vals:
            for v3 in vals:
                if v1 + v3 >= Kp * (1 - 1e-9):
                    continue
                c = ising.couplings_from_v(v1, v3, k)
                res, lam = ising.star_triangle_residual(c)
                assert res <= 1e-9 and abs(lam - 1) <= 1e-9
                assert ising.verify_difference_property(v1, v3, k) <= 1e-9


@pytest.mark.parametrize("reading", ising.CROSSING_READINGS)
def test_crossing_parameterization(reading):
    c = ising.couplings_crossing(0.4, 0.5, 0.7, reading=reading)
    assert ising.star_triangle_residual(c)[0] <= 1e-9
    assert c.hyperbolic_residual <= 1e-12


@pytest.mark.parametrize("reading", ising.CROSSING_READINGS)
def test_crossing_dual_ratio(reading):
    # the crossed weights give sinh 2L* = k_m' sinh 2K at every u, with m the modulus in use
    k = 0.7
    m = k if reading == "k" else complement(k)
    K = elliptic.complete_quarter_period(m)
    c = ising.couplings_crossing(0.25 * K, 0.25 * K, k, reading=reading)
    for kk, ll in zip(c.K, c.L):
        assert math.sinh(2 * ll) == pytest.approx(complement(m) * math.sinh(2 * kk), rel=1e-13)
    # so at the midpoint u = K/2 the two couplings differ rather than coincide
    assert abs(c.K2 - c.L2s) >= 1e-2


def test_crossing_errors():
    K = elliptic.complete_quarter_period(0.7)
    with pytest.raises(DomainError):
        ising.couplings_crossing(0.4, 0.5, 0.7, reading="other")
    with pytest.raises(DomainError):
        ising.couplings_crossing(0.7 * K, 0.6 * K, 0.7, reading="k")
    with pytest.raises(NearPoleError):
        ising.couplings_crossing(0.5 * K, 0.5 * K, 0.7, reading="k")


def test_angle_form():
    a = ising.angle_form(0.5, 0.7, 0.6)
    assert a.triangle_residual <= 1e-10
    t = spherical.triangle_from_spectral(0.5, 0.7, 0.6)
    assert [2 * x for x in a.Khat] == pytest.approx(list(t.arcs), abs=1e-12)
    s = ising.angle_form(0.4, 0.4, 0.8)
    assert s.Khat1 == pytest.approx(s.Khat3) and s.Lhat1 == pytest.approx(s.Lhat3)
    z = ising.angle_form(1e-9, 1e-9, 0.5)
    assert max(z.Khat + z.Lhat) <= 1e-8
    with pytest.raises(BranchError):
        ising.angle_form(0.5, 0.7, 1.0)


def test_boltzmann_factors():
    assert np.allclose(ising.boltzmann_U(0.3), np.diag([math.exp(0.3), math.exp(-0.3)]))
    V = ising.boltzmann_V(0.2)
    assert np.allclose(V, [[math.cosh(0.2), math.sinh(0.2)], [math.sinh(0.2), math.cosh(0.2)]])


@given(st.floats(0.01, 0.99), st.floats(0.01, 0.99), st.sampled_from([0.3, 0.6, 0.9]))
def test_star_triangle_property(f, g, k):
    Kp = elliptic.complete_quarter_period(complement(k))
    v2 = f * Kp
    v1 = g * v2
    res, lam = ising.star_triangle_residual(ising.couplings_from_v(v1, v2 - v1, k))
    assert res <= 1e-9
    assert abs(lam - 1.0) <= 1e-9
