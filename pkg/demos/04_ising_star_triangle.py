"""Elliptic Boltzmann weights satisfy the star-triangle relation; perturbed ones do not."""

import numpy as np

from elliptic_ising import elliptic, ising

k = 0.6
Kp = elliptic.complete_quarter_period(np.sqrt(1 - k * k))
print(f"k = {k}, spectral parameters must satisfy v1 + v3 < K(k') = {Kp:.6f}\n")
for v1, v3 in [(0.2, 0.3), (0.5, 0.9), (0.8, 0.9)]:
    c = ising.couplings_from_v(v1, v3, k)
    res, lam = ising.star_triangle_residual(c)
    print(f"v=({v1}, {v3})  K={np.round(c.K, 5)}  L*={np.round(c.L, 5)}  residual={res:.1e}  lambda={lam.real:.15f}")

c = ising.couplings_from_v(0.5, 0.9, k)
bent = ising.CouplingSet(c.K1, c.K2 + 0.05, c.K3, c.L1s, c.L2s, c.L3s)
print(f"\nK2 moved by 0.05: residual {ising.star_triangle_residual(bent)[0]:.3e}")
print(f"middle parameter moved by 0.05: residual "
      f"{ising.verify_difference_property(0.5, 0.9, k, middle_shift=0.05):.3e}")

a = ising.angle_form(0.5, 0.7, k)
print("\nangle couplings 2K^ =", np.round(2 * np.array(a.Khat), 6), " match with triangle:", a.triangle_residual)
