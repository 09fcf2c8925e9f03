import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from elliptic_ising import elliptic, oracles, spherical, su2
from elliptic_ising.errors import DomainError, UnsupportedError

reps = st.sampled_from(su2.REPRESENTATIONS)
axes = st.sampled_from("xyz")
angles = st.floats(-10.0, 10.0)


def octant():
    t, _ = spherical.triangle_from_vectors(spherical.TriangleVectors(*np.eye(3)))
    return t


def test_spin_one_generators_algebra():
    J = su2.SPIN_ONE_J
    # [J_x, J_y] = i J_z and cyclic
    for a, b, c in (("x", "y", "z"), ("y", "z", "x"), ("z", "x", "y")):
        assert np.allclose(J[a] @ J[b] - J[b] @ J[a], 1j * J[c])
        assert np.allclose(J[a], J[a].conj().T)
    cas = sum(J[a] @ J[a] for a in "xyz")
    assert np.allclose(cas, 2.0 * np.eye(3))


def test_rotation_basics():
    for rep in su2.REPRESENTATIONS:
        assert np.allclose(su2.rot("y", 0.0, rep), np.eye(len(su2.generator("y", rep))))
    assert np.allclose(su2.rot("x", 2 * math.pi), -np.eye(2), atol=1e-15)
    assert np.allclose(su2.rot("x", 2 * math.pi, su2.SPIN_ONE), np.eye(3), atol=1e-15)


def test_rotation_matches_matrix_exponential():
    ref = oracles.expm(1j * 0.9 * su2.SPIN_ONE_J["x"])
    assert su2.frobenius_distance(su2.rot("x", 0.9, su2.SPIN_ONE), ref) <= 1e-12


def test_hyperbolic_factor():
    assert np.allclose(su2.hyper("y", 0.0), np.eye(2))
    assert np.allclose(su2.hyper("z", 0.5), np.diag([math.exp(0.5), math.exp(-0.5)]))
    ref = oracles.expm(0.7 * su2.SIGMA["x"])
    assert su2.frobenius_distance(su2.hyper("x", 0.7), ref) <= 1e-13


def test_bad_arguments():
    with pytest.raises(DomainError):
        su2.rot("w", 0.1)
    with pytest.raises(DomainError):
        su2.rot("x", 0.1, "spin_two")
    with pytest.raises(DomainError):
        su2.rot("x", math.nan)
    with pytest.raises(DomainError):
        su2.RotationWord([])


def test_word_products():
    f = su2.Factor("z", 0.4)
    assert np.allclose(su2.word_product([f]), su2.rot("z", 0.4))
    h = su2.Factor("x", 0.3, "hyperbolic")
    assert np.allclose(su2.word_product([h]), su2.hyper("x", 0.3))
    w = su2.RotationWord([su2.Factor("x", 0.3), su2.Factor("z", 1.1), h, su2.Factor("y", -0.8)])
    assert su2.frobenius_distance(su2.word_product(w) @ su2.word_product(w.inverse()), np.eye(2)) <= 1e-12
    with pytest.raises(UnsupportedError):
        su2.word_product(w, su2.SPIN_ONE)


def test_octant_identity_and_transport():
    t = octant()
    for rep in su2.REPRESENTATIONS:
        assert su2.verify_triangle_identity(t, rep) <= 1e-12
        assert su2.transport_compare(t, rep).residual <= 1e-12
    left, right = su2.triangle_words(t)
    assert su2.frobenius_distance(su2.word_product(left), su2.word_product(right)) <= 1e-12


def test_planar_limit():
    # a flat sliver: a2 -> 0 with A1 + A3 -> pi - A2
    n1 = np.array([1.0, 0.0, 0.0])
    n3 = np.array([0.0, 1.0, 0.0])
    n2 = np.array([1.0, 1e-4, 1e-6])
    t, _ = spherical.triangle_from_vectors(spherical.TriangleVectors.from_raw(n1, n2, n3))
    for rep in su2.REPRESENTATIONS:
        assert su2.verify_triangle_identity(t, rep) <= 1e-10


def test_zero_angle_transport_is_identity():
    t = spherical.SphericalTriangle(0.0, 0.0, 0.0, 0.0, math.pi, 0.0, k_ratio=0.0, k_spread=0.0)
    tc = su2.transport_compare(t, su2.SPIN_ONE)
    assert np.allclose(tc.path1, np.eye(3))
    assert np.allclose(tc.path2, np.eye(3))


def test_random_triangles_and_transport():
    rng = np.random.default_rng(7)
    count = 0
    while count < 200:
        v = spherical.TriangleVectors.from_raw(*rng.normal(size=(3, 3)))
        if abs(v.det) < 1e-3:
            continue
        count += 1
        t, _ = spherical.triangle_from_vectors(v)
        for rep in su2.REPRESENTATIONS:
            assert su2.verify_triangle_identity(t, rep) <= 1e-9
        tc = su2.transport_compare(t, su2.SPIN_ONE)
        p1, p2 = tc.apply(rng.normal(size=3))
        assert np.linalg.norm(p1 - p2) <= 1e-9


def test_ybe_spectral_examples():
    for rep in su2.REPRESENTATIONS:
        assert su2.verify_ybe_spectral(0.4, 0.6, 0.7, rep) <= 1e-9
        assert su2.verify_ybe_spectral(0.0, 0.6, 0.7, rep) <= 1e-12
        assert su2.verify_ybe_spectral(0.6, 0.0, 0.7, rep) <= 1e-12


def test_ybe_breaks_off_difference_form():
    # replacing the middle parameter by something other than u1 + u3 breaks the identity
    k, u1, u3 = 0.7, 0.4, 0.6
    arcs, angs = su2.spectral_angles(u1, u3, k)
    wrong = elliptic.amplitude(u1 + u3 + 0.05, k)
    left = su2.word_product([su2.Factor("x", angs[0]), su2.Factor("z", wrong), su2.Factor("x", angs[2])])
    right = su2.word_product([su2.Factor("z", arcs[2]), su2.Factor("x", angs[1]), su2.Factor("z", arcs[0])])
    assert su2.frobenius_distance(left, right) >= 1e-3


@given(axes, angles, angles, reps)
def test_rotation_homomorphism_and_unitarity(axis, a, b, rep):
    R = su2.rot(axis, a, rep)
    assert np.linalg.norm(R @ R.conj().T - np.eye(len(R))) <= 1e-12
    assert su2.frobenius_distance(R @ su2.rot(axis, b, rep), su2.rot(axis, a + b, rep)) <= 1e-12


@given(st.floats(0.02, 0.98), st.floats(0.02, 0.98), st.floats(0.05, 0.999), reps)
def test_ybe_over_spectral_domain(f2, f1, k, rep):
    K = elliptic.complete_quarter_period(k)
    u2 = f2 * K
    assert su2.verify_ybe_spectral(f1 * u2, u2 - f1 * u2, k, rep) <= 1e-9
