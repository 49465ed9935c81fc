"""
Where the effective potential comes from
========================================

A position-dependent mass contributes a potential term of its own once the
radial equation is written for the reduced function R.  Its sign depends on
the dimension and on whether the mass grows or shrinks with r.
"""

import numpy as np

from pdmwave.mass_models import Constant, Custom, PowerLaw
from pdmwave.potentials import classify_qep, qep

r = np.geomspace(0.1, 10, 5)

# %%
# In one dimension both terms carry a factor (D - 1) and vanish.
print("D=1, mu=r:       ", qep(1, PowerLaw(1.0), r))

# %%
# In three dimensions with constant mass the dimensional term has (D - 3)
# and also vanishes; a growing mass makes it attractive.
print("D=3, constant:   ", qep(3, Constant(1.0), r))
print("D=3, mu=r:       ", qep(3, PowerLaw(1.0), r))

# %%
# In 2D both terms are negative whenever mu' > 0.
print("D=2, mu=r:       ", qep(2, PowerLaw(1.0), r))

# %%
# Classification over a log grid.  A power law scales as r**(-alpha-2), so its
# verdict never depends on r.
for D, prof in [(1, PowerLaw(1.0)), (2, PowerLaw(1.0)), (3, PowerLaw(1.0)), (4, PowerLaw(-0.2)), (7, PowerLaw(2.0))]:
    print(f"D={D} {prof!r:40s} -> {classify_qep(D, prof, 0.1, 10.0).verdict}")

# %%
# A non-monotonic mass flips the sign where mu' does.
bump = Custom(lambda x: (1 + (x - 1) ** 2, 2 * (x - 1)))
result = classify_qep(3, bump, 0.1, 10.0)
print(result.verdict, result.sign_change_radii)
