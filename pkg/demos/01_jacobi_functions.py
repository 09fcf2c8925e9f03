"""Jacobi elliptic functions: values, periods and the addition formulas."""

import numpy as np

from elliptic_ising import elliptic, oracles

k = 0.7
K = elliptic.complete_quarter_period(k)
print(f"K({k}) = {K:.15f}   (quadrature: {oracles.quad_quarter_period(k):.15f})")

print("\n   u        sn        cn        dn       am")
for u in np.linspace(0.0, 4 * K, 9):
    t = elliptic.jacobi(u, k)
    print(f"{u:6.3f}  {t.sn:8.5f}  {t.cn:8.5f}  {t.dn:8.5f}  {elliptic.amplitude(u, k):7.4f}")

u1, u3 = 0.9, 0.4
a, d = elliptic.addition_eval(u1, u3, k), elliptic.jacobi(u1 + u3, k)
print("\naddition formulas vs direct evaluation at u1 + u3 = 1.3:")
print("  max difference", max(abs(p - q) for p, q in zip(a.as_tuple(), d.as_tuple())))

U = 0.6
print(f"\nreciprocal modulus: sn({U}, 1/{k}) = {elliptic.reciprocal_modulus(U, k).sn:.12f}")
print(f"                    = {k} sn({U / k:.4f}, {k}) = {k * elliptic.jacobi(U / k, k).sn:.12f}")
