# %% [markdown]
# # f(z)/z and its bounds
#
# For alpha up to 3 - 2 sqrt 2, `f(z)/z` is subordinate to
# `F(z) = ((1 + z sqrt a)/(1 - z sqrt a))^(1/(2 sqrt a))`, and on `|z| = r`
# the real part of `f(z)/z` lies between `F(-r)` and `F(r)`.

# %%
import numpy as np

from boothclass.bsclass import BigF, divided_by_z, random_members
from boothclass.subord import (
    JordanCurve,
    check_subordination,
    re_f_over_z_bounds,
    verify_bounds_on_members,
    winding_number,
)

alpha = 0.1
big = BigF(alpha)
held = sum(check_subordination(divided_by_z(f), big).holds for _, f in random_members(alpha, 20, seed=1))
print(f"{held}/20 random members have f/z inside F(disk)")

curve = JordanCurve.from_function(big)
print("winding at F(0.5):", winding_number(curve, big(0.5)), " at F(1):", winding_number(curve, big(1.0)))

# %%
for r in (0.0, 0.3, 0.6, 0.9, 0.99):
    b = re_f_over_z_bounds(alpha, r)
    print(f"r={r:<5} {b.lower:.6f} <= Re f/z <= {b.upper:.6f}   (printed lower {b.published_lower:.6f})")

v = verify_bounds_on_members(alpha, 30)
print(v.status, v.stats)
