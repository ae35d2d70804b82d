"""Dispersion relation, group velocities, and the birth of saddle points.

One walk step in momentum space is a 2x2 unitary whose eigenvalue
phases omega_1,2(k) form two dispersion branches.  The origin amplitude
decays slowly (like t^{-1/2}) only if some branch has a stationary
point omega'(k0) = 0 inside the zone; otherwise the decay is
exponential and the walk is transient.

For step length r the stationary points exist exactly when
rho >= ((r-1)/(r+1))².  Below, the group-velocity curves for r=3 are
swept through the threshold rho_R(3) = 1/4: for rho < 1/4 neither
branch crosses zero, at rho = 1/4 the curves touch, and above they
cross transversally.
"""

import math
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from biasedwalk import WalkParams, eigenphases, phase_derivatives, saddle_points

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

r = 3
ks = np.linspace(-math.pi, math.pi, 2001)

fig, (ax_disp, ax_vel) = plt.subplots(1, 2, figsize=(11, 4.5))

for rho, color in [(0.10, "tab:red"), (0.25, "tab:orange"), (0.50, "tab:green")]:
    params = WalkParams(r=r, rho=rho)
    w1, w2 = eigenphases(params, ks)
    d1, d2 = phase_derivatives(params, ks)
    ax_disp.plot(ks, w1, color=color, lw=1.0, label=f"rho={rho}")
    ax_disp.plot(ks, w2, color=color, lw=1.0, ls=":")
    ax_vel.plot(ks, d1, color=color, lw=1.0, label=f"rho={rho}")
    ax_vel.plot(ks, d2, color=color, lw=1.0, ls=":")

    saddles = saddle_points(params)
    tag = ", ".join(f"{k0:+.3f}" for k0 in saddles.points) if saddles.points else "-"
    print(f"rho={rho:4.2f}: saddles exist = {saddles.exists!s:5}  k0 = {tag}")
    for k0 in saddles.points:
        d1_k0, d2_k0 = phase_derivatives(params, k0)
        branch = d1_k0 if abs(d1_k0) < abs(d2_k0) else d2_k0
        ax_vel.plot([k0], [branch], "o", color=color, ms=5)

ax_vel.axhline(0.0, color="gray", lw=0.8)
ax_disp.set_xlabel("momentum k")
ax_disp.set_ylabel("branch phases")
ax_disp.set_title(f"dispersion branches, r={r}")
ax_disp.legend()
ax_vel.set_xlabel("momentum k")
ax_vel.set_ylabel("group velocities")
ax_vel.set_title(f"zero crossings appear at rho_R({r}) = 1/4")
ax_vel.legend()
fig.tight_layout()
fig.savefig(OUT / "dispersion_and_saddles.png", dpi=150)
print(f"wrote {OUT / 'dispersion_and_saddles.png'}")
