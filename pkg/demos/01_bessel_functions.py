"""
Fractional-order Bessel functions
=================================

The closed-form s-waves are built from K_nu, and the positive-energy states
from J_nu and Y_nu, all at non-integer order.  This walk-through checks the
implementations against identities that do not depend on how they are
computed.
"""

import math

import numpy as np

from pdmwave import specfun

# %%
# Half-integer orders reduce to elementary functions.
z = np.array([0.1, 1.0, 10.0, 40.0])
print("K_1/2(z) / closed form:", specfun.bessel_k(0.5, z) / (np.sqrt(np.pi / (2 * z)) * np.exp(-z)))
print("J_1/2(z) / closed form:", specfun.bessel_j(0.5, z) / (np.sqrt(2 / (np.pi * z)) * np.sin(z)))

# %%
# The modified Wronskian holds across every evaluation regime (series,
# continued fraction, asymptotic expansion).
for nu in (-0.4, 0.0, 0.3, 0.7):
    zs = np.geomspace(0.05, 60, 7)
    w = specfun.bessel_i(nu, zs) * specfun.bessel_k(nu + 1, zs) + specfun.bessel_i(nu + 1, zs) * specfun.bessel_k(nu, zs)
    print(f"nu={nu:+.1f}  max |z W - 1| = {np.max(np.abs(zs * w - 1)):.1e}")

# %%
# K_nu is even in the order, positive and decreasing.
zs = np.geomspace(1e-3, 50, 200)
k = specfun.bessel_k(0.4, zs)
print("even in nu:", np.array_equal(k, specfun.bessel_k(-0.4, zs)))
print("positive, decreasing:", bool(np.all(k > 0) and np.all(np.diff(k) < 0)))

# %%
# The normalisation of the 2D bound state rests on
# int_0^inf z K_nu(z)^2 dz = nu pi / (2 sin nu pi).
from pdmwave.quadrature import quadrature

for nu in (0.1, 0.4, 0.7):
    val = quadrature(lambda x: x * specfun.bessel_k(nu, x) ** 2, 0.0, math.inf, tol=1e-12)
    print(f"nu={nu}: {float(val):.12f} vs {nu * math.pi / (2 * math.sin(nu * math.pi)):.12f}")
