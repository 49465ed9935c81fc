"""
Localised densities of a quasi-free particle
============================================

With mu = rho**alpha in 2D the s-wave equation becomes a modified Bessel
equation of order nu = alpha / (alpha + 2).  Every negative energy gives a
normalisable state whose density vanishes at the origin and peaks nearby.
"""

import numpy as np

from pdmwave import analytic_swave as aw

# %%
# Densities at |E| = 1/2 on [0, 5].  The peak moves outward as nu grows.
r = np.linspace(0, 5, 11)
for nu in (-0.2, 0.1, 0.4, 0.7):
    t = aw.transform_from_nu(2, nu, 0.5)
    sol = aw.bound_state(t)
    r_max, w_max = aw.density_maximum(t, sol)
    norm = aw.normalization_integral(sol)
    print(f"nu={nu:+.1f} alpha={t.alpha:+.4f} r_max={r_max:.6f} W_max={w_max:.6f} int W={norm:.12f}")
    print("   W on grid:", np.array2string(sol.density(r), precision=4))

# %%
# For nu = 1/2 (alpha = 2) the state is a Gaussian and W peaks at 1/sqrt(2).
t = aw.transform(2, 2.0, 0.5)
print("Gaussian peak:", aw.density_maximum(t)[0], 1 / np.sqrt(2))

# %%
# In 3D, substituting z ~ r**(3/(2(1-nu))) into z**nu K_nu(z) gives the
# power r**(3 nu / (2 (1 - nu))).  The alternative power nu / (2 (1 - nu))
# does not normalise.
t = aw.transform_from_nu(3, 0.4, 0.5)
for which in ("derived", "printed"):
    print(which, float(aw.normalization_integral(aw.bound_state(t, which))))

# %%
# Positive energies give oscillating states whose weight keeps growing with
# the cutoff radius.
t = aw.transform_from_nu(2, 0.4, 0.5)
c = aw.ScatteringCoefficients(1.0, 0.0)
for R in (25, 50, 100, 200):
    print(f"int_0^{R} 2 pi rho u^2 = {aw.scattering_cumulative(t, c, R):.4f}")
