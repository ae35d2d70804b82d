"""Classical biased random walk: the baseline the quantum walk beats.

Classically the walker hops r sites right with probability p, one left
with 1-p.  Its origin probability is an exact binomial whose decay is
controlled by a geometric factor q(p) <= 1: recurrence survives only at
the single point p = 1/(r+1) (q = 1, diffusive 1/√t decay); ANY other p
gives q < 1 and exponential decay.  Zero mean and recurrence coincide.

The script compares the exact binomial with its large-t closed-form
approximation, plots q(p), and cross-checks mean and origin frequency
with a seeded Monte Carlo run.
"""

import math
from fractions import Fraction
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from biasedwalk import (
    classical_mean,
    classical_monte_carlo,
    classical_origin_probability,
    classical_recurrent,
    q_factor,
    stirling_asymptotic,
)
from biasedwalk.classical import ClassicalParams

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

r = 3
recurrent_point = ClassicalParams(r=r, p=Fraction(1, r + 1))
print(f"r={r}: q at p=1/{r + 1} is {q_factor(recurrent_point)} "
      f"(recurrent: {classical_recurrent(recurrent_point)})")

# --- exact binomial vs closed-form asymptotics ------------------------------
ts = np.arange(r + 1, 2000, r + 1)
exact = np.array([classical_origin_probability(recurrent_point, int(t)) for t in ts])
approx = np.array([stirling_asymptotic(recurrent_point, int(t)) for t in ts])
rel_err = np.abs(approx - exact) / exact
print(f"asymptotic relative error: {rel_err[0]:.2%} at t={ts[0]}, "
      f"{rel_err[-1]:.4%} at t={ts[-1]}")

transient = ClassicalParams(r=r, p=0.5)
print(f"transient p=0.5: q = {q_factor(transient):.6f}, "
      f"P0(400) = {classical_origin_probability(transient, 400):.3e}")

# --- Monte Carlo cross-check ------------------------------------------------
t, trials, seed = 400, 1_000_000, 7
mc_mean, mc_origin = classical_monte_carlo(recurrent_point, t, trials, seed=seed)
p0 = classical_origin_probability(recurrent_point, t)
print(f"Monte Carlo (seed={seed}, trials={trials}): mean {mc_mean:+.4f} "
      f"(exact {classical_mean(recurrent_point, t):+.1f}), "
      f"origin rate {mc_origin:.5f} (exact {p0:.5f})")

fig, (ax_p0, ax_q) = plt.subplots(1, 2, figsize=(11, 4.5))
ax_p0.loglog(ts, exact, ".", ms=3, label="exact binomial")
ax_p0.loglog(ts, approx, "r--", lw=1, label="closed-form asymptotics")
ax_p0.set_xlabel("t (occupied)")
ax_p0.set_ylabel("P0")
ax_p0.set_title(f"r={r}, p=1/{r + 1}: diffusive 1/√t return decay")
ax_p0.legend()

p_grid = np.linspace(0.001, 0.999, 500)
ax_q.plot(p_grid, [q_factor(ClassicalParams(r=r, p=float(p))) for p in p_grid], lw=1.5)
ax_q.axvline(1 / (r + 1), color="tab:red", ls="--", label=f"p = 1/{r + 1}")
ax_q.axhline(1.0, color="gray", lw=0.8)
ax_q.set_xlabel("right-step probability p")
ax_q.set_ylabel("decay base q")
ax_q.set_title("q touches 1 only at the recurrent point")
ax_q.legend()

fig.tight_layout()
fig.savefig(OUT / "classical_baseline.png", dpi=150)
print(f"wrote {OUT / 'classical_baseline.png'}")
