# %% [markdown]
# # Building members of BS(alpha)
#
# Any `q` subordinate to `F_alpha` with `q(0) = 0` produces a member
# `f(z) = z exp(int_0^z q(t)/t dt)`.  Composing `F_alpha` with a Schwarz
# function gives such a `q` for free.

# %%
import numpy as np

from boothclass import series as ps
from boothclass.bsclass import (
    GnForm,
    SchwarzGenerator,
    TildeF,
    build_member,
    gn_nonmembership,
    membership_test,
    starlike_strip_check,
)

alpha = 0.3
f_tilde = build_member(alpha, ps.f_alpha_series(alpha, 8), order=8)
print("F = f~/z starts", np.round(f_tilde.series.coeffs[1:5].real, 6), " expected c3 =", (alpha + 0.5) / 3)

# %%
rng = np.random.default_rng(7)
for _ in range(5):
    g = SchwarzGenerator.random(rng)
    f = build_member(alpha, g)
    v = membership_test(f, alpha)
    print(f"{g.kind:9s} theta={g.theta:.2f}  -> {v.status}  max quartic {v.stats['max_quartic']:.3g}")

print("extremal:", membership_test(TildeF(alpha), alpha).status)

# %% [markdown]
# `z + c z^n` fails for the parameter ranges (i)-(iv); the grid test finds a
# concrete witness point.

# %%
for n, c, a in [(2, 0.8, 0.0), (5, 2.0, 0.5), (2, 1.5, 0.5), (2, 0.3, 0.0)]:
    res = gn_nonmembership(n, c, a)
    v = membership_test(GnForm(n, c), a)
    w = v.witness
    print(f"n={n} c={c} alpha={a}: {res.status} {res.reasons}  grid: {v.status}",
          "" if w is None else f"at z={w.z:.3f}")

print("strip check for g_2, c=1.5:", starlike_strip_check(GnForm(2, 1.5), 0.5).status)
