import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elliptic_ising import elliptic, oracles
from elliptic_ising.errors import DomainError, NearPoleError

moduli = st.floats(0.01, 0.99)
args = st.floats(-20.0, 20.0)


def test_quarter_period_limits():
    assert elliptic.complete_quarter_period(0.0) == pytest.approx(math.pi / 2, abs=1e-16)
    with pytest.raises(DomainError):
        elliptic.complete_quarter_period(1.0)
    with pytest.raises(DomainError):
        elliptic.complete_quarter_period(-0.1)


def test_quarter_period_matches_quadrature():
    K = elliptic.complete_quarter_period(0.8)
    assert abs(K - oracles.quad_quarter_period(0.8)) <= 1e-12


def test_jacobi_special_arguments():
    assert elliptic.jacobi(0.0, 0.4).as_tuple() == pytest.approx((0.0, 1.0, 1.0), abs=1e-15)
    t = elliptic.jacobi(0.9, 0.0)
    assert t.as_tuple() == pytest.approx((math.sin(0.9), math.cos(0.9), 1.0), abs=1e-15)
    t = elliptic.jacobi(0.9, 1.0)
    sech = 1.0 / math.cosh(0.9)
    assert t.as_tuple() == pytest.approx((math.tanh(0.9), sech, sech), abs=1e-15)


@pytest.mark.parametrize("k", [0.1, 0.5, 0.9, 0.999])
def test_jacobi_at_quarter_period(k):
    K = elliptic.complete_quarter_period(k)
    t = elliptic.jacobi(K, k)
    assert t.sn == pytest.approx(1.0, abs=1e-14)
    assert abs(t.cn) <= 1e-14
    assert t.dn == pytest.approx(math.sqrt(1 - k * k), abs=1e-14)


def test_jacobi_matches_inversion_oracle():
    ref = oracles.inversion_jacobi(1.3, 0.6)
    assert elliptic.jacobi(1.3, 0.6).as_tuple() == pytest.approx(ref, abs=1e-12)


def test_jacobi_rejects_bad_input():
    with pytest.raises(DomainError):
        elliptic.jacobi(math.inf, 0.5)
    with pytest.raises(DomainError):
        elliptic.jacobi(1.0, 1.2)


def test_amplitude_values():
    assert elliptic.amplitude(0.0, 0.3) == 0.0
    K = elliptic.complete_quarter_period(0.3)
    assert elliptic.amplitude(K, 0.3) == pytest.approx(math.pi / 2, abs=1e-14)
    assert elliptic.amplitude(2.0, 0.3) == pytest.approx(oracles.inversion_amplitude(2.0, 0.3), abs=1e-12)


def test_incomplete_integral_values():
    assert elliptic.incomplete_integral(0.0, 0.4) == 0.0
    K = elliptic.complete_quarter_period(0.4)
    assert elliptic.incomplete_integral(math.pi / 2, 0.4) == pytest.approx(K, abs=1e-14)
    u = elliptic.incomplete_integral(0.7, 0.4)
    assert abs(elliptic.amplitude(u, 0.4) - 0.7) <= 1e-11
    assert u == pytest.approx(oracles.quad_incomplete(0.7, 0.4), abs=1e-13)
    with pytest.raises(DomainError):
        elliptic.incomplete_integral(math.pi / 2, 1.0)


def test_addition_special_cases():
    t = elliptic.jacobi(0.8, 0.6)
    assert elliptic.addition_eval(0.8, 0.0, 0.6).as_tuple() == pytest.approx(t.as_tuple(), abs=1e-15)
    a = elliptic.addition_eval(0.5, 0.4, 0.0)
    assert a.as_tuple() == pytest.approx((math.sin(0.9), math.cos(0.9), 1.0), abs=1e-15)
    d = elliptic.jacobi(1.3, 0.7)
    assert elliptic.addition_eval(0.9, 0.4, 0.7).as_tuple() == pytest.approx(d.as_tuple(), abs=1e-10)


def test_addition_near_pole():
    # at k = 1 the denominator 1 - sn^2 sn^2 vanishes as both arguments grow
    with pytest.raises(NearPoleError):
        elliptic.addition_eval(30.0, 30.0, 1.0)


def test_imaginary_transform():
    assert elliptic.imaginary_transform(0.0, 0.5) == pytest.approx((0.0, 1.0, 1.0), abs=1e-15)
    sc, nc, dc = elliptic.imaginary_transform(0.6, 0.0)
    assert (sc, nc, dc) == pytest.approx((math.tan(0.6), 1 / math.cos(0.6), 1 / math.cos(0.6)))
    t = elliptic.jacobi(0.8, 0.5)
    assert elliptic.imaginary_transform(0.8, 0.5) == pytest.approx((t.sn / t.cn, 1 / t.cn, t.dn / t.cn))
    K = elliptic.complete_quarter_period(0.5)
    with pytest.raises(NearPoleError):
        elliptic.imaginary_transform(K, 0.5)


def test_reciprocal_modulus():
    assert elliptic.reciprocal_modulus(0.0, 0.6).as_tuple() == pytest.approx((0.0, 1.0, 1.0), abs=1e-15)
    assert elliptic.reciprocal_modulus(0.7, 1.0).as_tuple() == pytest.approx(elliptic.jacobi(0.7, 1.0).as_tuple())
    t = elliptic.jacobi(0.75, 0.8)
    assert elliptic.reciprocal_modulus(0.6, 0.8).as_tuple() == pytest.approx((0.8 * t.sn, t.dn, t.cn), abs=1e-15)
    with pytest.raises(DomainError):
        elliptic.reciprocal_modulus(0.6, 0.0)


def test_reciprocal_modulus_solves_its_ode():
    # sn(U, 1/k) has derivative cn dn and dn^2 = 1 - sn^2 / k^2
    k, U, h = 0.7, 0.4, 1e-6
    t = elliptic.reciprocal_modulus(U, k)
    up, dn_ = elliptic.reciprocal_modulus(U + h, k), elliptic.reciprocal_modulus(U - h, k)
    assert (up.sn - dn_.sn) / (2 * h) == pytest.approx(t.cn * t.dn, abs=1e-8)
    assert t.dn**2 == pytest.approx(1 - t.sn**2 / k**2, abs=1e-14)


def test_modulus_record():
    m = elliptic.Modulus.from_k(0.6)
    assert m.k_complement == pytest.approx(0.8)
    assert elliptic.Modulus.from_k(1.0).quarter_period == math.inf


@given(args, moduli)
def test_pythagorean_identities(u, k):
    t = elliptic.jacobi(u, k)
    assert max(t.pythagorean_residuals(k)) <= 1e-12
    assert t.dn >= math.sqrt(1 - k * k) - 1e-15


@given(args, args, moduli)
def test_addition_matches_direct(u1, u3, k):
    a = elliptic.addition_eval(u1, u3, k)
    d = elliptic.jacobi(u1 + u3, k)
    assert np.max(np.abs(np.subtract(a.as_tuple(), d.as_tuple()))) <= 1e-10


@given(args, moduli)
def test_periodicity(u, k):
    K = elliptic.complete_quarter_period(k)
    t, s = elliptic.jacobi(u, k), elliptic.jacobi(u + 2 * K, k)
    assert s.sn == pytest.approx(-t.sn, abs=1e-12)
    assert s.cn == pytest.approx(-t.cn, abs=1e-12)
    assert s.dn == pytest.approx(t.dn, abs=1e-12)
    assert elliptic.amplitude(u + 2 * K, k) == pytest.approx(elliptic.amplitude(u, k) + math.pi, abs=1e-12)


@given(st.floats(-10.0, 10.0), moduli)
def test_amplitude_roundtrip(phi, k):
    assert abs(elliptic.amplitude(elliptic.incomplete_integral(phi, k), k) - phi) <= 1e-11


@given(args, moduli)
@settings(max_examples=30, deadline=None)
def test_derivatives_by_central_difference(u, k):
    h = 1e-6
    t = elliptic.jacobi(u, k)
    p, m = elliptic.jacobi(u + h, k), elliptic.jacobi(u - h, k)
    fd = (np.array(p.as_tuple()) - np.array(m.as_tuple())) / (2 * h)
    exact = [t.cn * t.dn, -t.sn * t.dn, -k * k * t.sn * t.cn]
    assert np.max(np.abs(fd - exact)) <= 1e-6
