"""The triangle identity as a product of SU(2) factors, in spin 1/2 and spin 1."""

import numpy as np

from elliptic_ising import spherical, su2

rng = np.random.default_rng(5)
v = spherical.TriangleVectors.from_raw(*rng.normal(size=(3, 3)))
t, _ = spherical.triangle_from_vectors(v)
for rep in su2.REPRESENTATIONS:
    print(f"{rep:9s} triangle identity residual {su2.verify_triangle_identity(t, rep):.2e}")

tc = su2.transport_compare(t, su2.SPIN_ONE)
w = np.array([0.3, -1.0, 0.5])
p1, p2 = tc.apply(w)
print("transport of", w, "along both paths:")
print("  ", np.round(p1.real, 10), "\n  ", np.round(p2.real, 10))

print("\nspectral form over a few parameters (spin 1/2, spin 1):")
for u1, u3, k in [(0.4, 0.6, 0.7), (0.1, 1.2, 0.5), (0.9, 0.9, 0.95)]:
    r = [su2.verify_ybe_spectral(u1, u3, k, rep) for rep in su2.REPRESENTATIONS]
    print(f"  u1={u1} u3={u3} k={k}: {r[0]:.1e} {r[1]:.1e}")
