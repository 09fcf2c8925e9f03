"""Spherical triangles from vectors and from spectral parameters."""

import numpy as np

from elliptic_ising import spherical

rng = np.random.default_rng(3)
v = spherical.TriangleVectors.from_raw(*rng.normal(size=(3, 3)))
t, duals = spherical.triangle_from_vectors(v)
print("random triangle")
print("  arcs  ", np.round(t.arcs, 6))
print("  angles", np.round(t.angles, 6))
print("  sin A / sin a ratio", round(t.k_ratio, 6), " spread", t.k_spread)
print("  worst law residual", t.max_law_residual())
print("  vector identities ", spherical.verify_vector_identities(v).max_residual)

u1, u3, k = 0.5, 0.7, 0.6
s = spherical.triangle_from_spectral(u1, u3, k)
c = spherical.spectral_coordinates(s)
print(f"\nspectral triangle (u1, u3, k) = ({u1}, {u3}, {k})")
print("  obtuse angle index", s.obtuse_indices(), " regime", c.regime)
print("  recovered u", np.round(c.u, 12), " sum rule residual", c.residual)
print("  differential check at (0.6, 0.8, 0.5):", spherical.differential_check(0.6, 0.8, 0.5, 1e-5))
