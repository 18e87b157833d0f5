# %% [markdown]
# # Radius of starlikeness
#
# Members need not be starlike on the whole disk.  On `|z| < r` every member
# has `Re{z f'/f} >= 1 - r/(1 - alpha r^2)`, so the radius of starlikeness of
# order gamma solves `1 - r/(1 - alpha r^2) = gamma`.

# %%
import math

from boothclass.radii import alpha_for_radius, radius_starlike, sharpness_check

for a in (1e-8, 0.25, 0.5, 0.9, 1 - 1e-8):
    r = radius_starlike(a)
    print(f"alpha={a:<10.3g} r_s={r.r_bisect:.12f}  closed-form gap {r.agreement:.1e}")
print("golden ratio reciprocal:", (math.sqrt(5) - 1) / 2)

# %% [markdown]
# For gamma > 0 the printed closed form and the root of the defining
# equation part ways; both are reported.

# %%
for g in (0.0, 0.25, 0.5, 0.75):
    r = radius_starlike(0.5, g)
    print(f"gamma={g:<5} root={r.r_bisect:.10f} printed={r.published_formula_value:.10f} residual={sharpness_check(0.5, g):.1e}")

# %%
for r in (0.5, (math.sqrt(5) - 1) / 2, 0.8, 1.0):
    print(f"r={r:.6f}: every alpha below {alpha_for_radius(r):.6f} gives a starlike image")
