"""Return-probability decay: power law when recurrent, exponential when not.

The walk returns to the origin only at step counts divisible by r+1.
On those occupied times the origin probability P0(t) decays like 1/t
when the coin parameter clears the recurrence threshold (the summed
return probability then diverges, so the walker returns with
certainty) and exponentially below it.

Both regimes are fitted here for r=3: rho=0.5 (recurrent) on a log-log
axis and rho=0.1 (transient) on a log-linear axis.  The partial
return-probability products are printed alongside.
"""

from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from biasedwalk import (
    WalkParams,
    classify_recurrence,
    loglinear_fit,
    loglog_slope,
    make_initial_state,
    origin_series,
    polya_estimate_from_series,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

state = make_initial_state(1.0, 0.0)
t_max = 1000

fig, (ax_rec, ax_tra) = plt.subplots(1, 2, figsize=(11, 4.5))

# --- recurrent walk: P0 ~ 1/t --------------------------------------------
params = WalkParams(r=3, rho=0.5)
series = origin_series(state, params, t_max)
times, p0 = series.occupied()
window = (times >= 100) & (times <= t_max)
slope = loglog_slope(times[window], p0[window])
print(f"rho=0.5: recurrent={classify_recurrence(params)}, "
      f"log-log slope over t in [100, 1000] = {slope:+.3f} (expect about -1)")
print(f"         partial return product up to t={t_max}: "
      f"{polya_estimate_from_series(series):.6f} (grows toward 1)")

ax_rec.loglog(times[1:], p0[1:], ".", ms=3, label="P0(t)")
ax_rec.loglog(times[window], np.exp(slope * np.log(times[window])
                                    + np.log(p0[window]).mean()
                                    - slope * np.log(times[window]).mean()),
              "r--", label=f"fit slope {slope:+.2f}")
ax_rec.set_xlabel("t (occupied)")
ax_rec.set_ylabel("P0")
ax_rec.set_title("r=3, rho=0.5: power-law decay (recurrent)")
ax_rec.legend()

# --- transient walk: P0 ~ q^t ---------------------------------------------
params = WalkParams(r=3, rho=0.1)
series = origin_series(state, params, t_max)
times, p0 = series.occupied()
window = (times >= 100) & (times <= t_max)
lin_slope, intercept, r_squared = loglinear_fit(times[window], p0[window])
print(f"rho=0.1: recurrent={classify_recurrence(params)}, "
      f"log-linear slope = {lin_slope:+.5f}, R^2 = {r_squared:.5f}")
print(f"         partial return product saturates at "
      f"{polya_estimate_from_series(series):.6f} < 1")

positive = p0 > 0
ax_tra.semilogy(times[positive], p0[positive], ".", ms=3, label="P0(t)")
ax_tra.semilogy(times[window], np.exp(lin_slope * times[window] + intercept),
                "r--", label=f"fit slope {lin_slope:+.4f}")
ax_tra.set_xlabel("t (occupied)")
ax_tra.set_ylabel("P0")
ax_tra.set_title("r=3, rho=0.1: exponential decay (transient)")
ax_tra.legend()

fig.tight_layout()
fig.savefig(OUT / "origin_decay.png", dpi=150)
print(f"wrote {OUT / 'origin_decay.png'}")
