# %% [markdown]
# # The region D(alpha)
#
# `F_alpha(z) = z/(1 - alpha z^2)` maps the unit disk onto the domain bounded
# by a Booth lemniscate.  For alpha = 1/3 the boundary is
# `(x^2+y^2)^2 - 9x^2/4 - 9y^2/16 = 0`.

# %%
import numpy as np

from boothclass.booth import BoothRegion, curvature_min, convexity_threshold

region = BoothRegion(1 / 3)
print("axis crossings:", region.axis_crossings())

# %% [markdown]
# Membership is the sign of the quartic, with the origin counted as inside.

# %%
for w in (0, 1.49, 1.5, 0.7j, 0.76j, 1 + 0.5j):
    print(f"{w!s:>10}  inside={region.contains(w)}")

# %% [markdown]
# The boundary curve is convex up to alpha = 3 - 2 sqrt 2 and acquires
# inward dents after that.

# %%
for a in (0.0, 0.1, 0.17, 0.18, 0.3, 0.6):
    print(f"alpha={a:<5} min curvature functional = {curvature_min(a):+.5f}")
lo, hi = convexity_threshold()
print("switch bracket:", lo, hi, " 3-2sqrt2 =", 3 - 2 * np.sqrt(2))

# %% [markdown]
# Plot a few boundaries if matplotlib is around; otherwise write an SVG.

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5, 4))
    for a in (0.0, 1 / 3, 0.6, 0.9):
        _, b = BoothRegion(a).boundary(720)
        ax.plot(np.append(b.real, b.real[0]), np.append(b.imag, b.imag[0]), label=f"alpha={a:.2f}")
    ax.set_aspect("equal")
    ax.legend(fontsize=7)
    fig.savefig("booth_regions.png", dpi=120)
    print("wrote booth_regions.png")
except ImportError:
    from boothclass.cli import region_svg

    with open("booth_region.svg", "w") as fh:
        fh.write(region_svg(region, region.boundary(720)[1]))
    print("wrote booth_region.svg")
