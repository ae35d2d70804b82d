"""Parameter-space map: transient, recurrent-genuine, recurrent-unbiasable.

Two closed-form curves carve the (r, rho) plane into three regions:

  rho_R(r) = ((r-1)/(r+1))²   -- below it the walk is transient,
  rho_0(r) = ((r²-1)/(r²+1))² -- below it no initial state cancels the mean.

Since rho_R < rho_0 for every r > 1, a band of walks exists that is
recurrent yet genuinely biased: the walker keeps returning to the
origin although its mean position drifts away no matter how the coin
is initialized.  Classical walks admit no such band (recurrence and
zero mean coincide there).
"""

from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from biasedwalk import phase_diagram

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

table = phase_diagram(r_max=10, rho_steps=99)

print("r   rho_R(r)      rho_0(r)")
for r, rho_r, rho_0 in table.rows:
    print(f"{r:<3} {rho_r:<13.10g} {rho_0:<13.10g}")

counts = {}
for _, _, label in table.grid:
    counts[label] = counts.get(label, 0) + 1
print("\ngrid cells per region:", counts)

# shade the grid cells by region and overlay the exact threshold curves
colors = {"transient-genuine": 0, "recurrent-genuine": 1, "recurrent-unbiasable": 2}
rs = sorted({r for r, _, _ in table.grid})
rhos = sorted({rho for _, rho, _ in table.grid})
image = np.zeros((len(rhos), len(rs)))
for r, rho, label in table.grid:
    image[rhos.index(rho), rs.index(r)] = colors[label]

fig, ax = plt.subplots(figsize=(7.5, 5))
ax.imshow(image, origin="lower", aspect="auto", cmap="Greys", alpha=0.45,
          extent=(rs[0] - 0.5, rs[-1] + 0.5, rhos[0], rhos[-1]))
r_curve = np.array([row[0] for row in table.rows])
ax.plot(r_curve, [row[1] for row in table.rows], "o--", color="tab:blue",
        label="recurrence threshold rho_R")
ax.plot(r_curve, [row[2] for row in table.rows], "s--", color="tab:red",
        label="genuine-bias threshold rho_0")
ax.set_xlabel("right-step length r")
ax.set_ylabel("coin parameter rho")
ax.set_title("white: transient | light: recurrent genuine | dark: zero mean reachable")
ax.legend(loc="lower right")
fig.tight_layout()
fig.savefig(OUT / "phase_diagram.png", dpi=150)
print(f"wrote {OUT / 'phase_diagram.png'}")
