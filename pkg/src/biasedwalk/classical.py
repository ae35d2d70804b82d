"""Classical biased random walk baseline.

The walker moves r sites right with probability p, one site left with
probability 1-p.  The origin probability is binomial and evaluated in
log space (log-gamma) so that step counts up to 1e6 neither overflow
nor underflow prematurely; its large-t behavior is governed by the
geometric factor q <= 1, with equality (recurrence) exactly at
p = 1/(r+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import gammaln

from .core import ParameterDomainError

__all__ = [
    "ClassicalParams",
    "classical_origin_probability",
    "q_factor",
    "stirling_asymptotic",
    "classical_recurrent",
    "classical_mean",
    "classical_monte_carlo",
    "MONTE_CARLO_GENERATOR",
]

#: generator recorded in reproducibility metadata
MONTE_CARLO_GENERATOR = "numpy.random.default_rng (PCG64)"


@dataclass(frozen=True)
class ClassicalParams:
    """Right-step length r >= 1 and right-step probability p in [0, 1].

    p may be a :class:`fractions.Fraction`, in which case the recurrence
    verdict compares it to 1/(r+1) exactly.
    """

    r: int
    p: float | Fraction

    def __post_init__(self):
        if isinstance(self.r, bool) or not isinstance(self.r, (int, np.integer)):
            raise ParameterDomainError(f"step length r must be an integer, got {self.r!r}")
        if self.r < 1:
            raise ParameterDomainError(f"step length r must be >= 1, got {self.r}")
        object.__setattr__(self, "r", int(self.r))
        if not (0 <= self.p <= 1):
            raise ParameterDomainError(f"probability p must lie in [0, 1], got {self.p!r}")

    @property
    def p_float(self) -> float:
        return float(self.p)

    @property
    def period(self) -> int:
        return self.r + 1


def classical_origin_probability(params: ClassicalParams, t: int) -> float:
    """Probability of sitting at the origin after t steps.

    Returning needs n_right = t/(r+1) right steps, so the probability is
    the binomial term C(t, t·r/(r+1))·(1-p)^{t·r/(r+1)}·p^{t/(r+1)} when
    (r+1) divides t and exactly 0 otherwise.  Evaluated via log-gamma.
    """
    if t < 0:
        raise ParameterDomainError(f"step count t must be >= 0, got {t}")
    if t == 0:
        return 1.0
    if t % params.period != 0:
        return 0.0
    p = params.p_float
    if p == 0.0 or p == 1.0:
        return 0.0
    n_left = t * params.r // params.period
    n_right = t // params.period
    log_prob = (n_left * math.log1p(-p) + n_right * math.log(p)
                + gammaln(t + 1) - gammaln(n_left + 1) - gammaln(n_right + 1))
    return float(math.exp(log_prob))


def q_factor(params: ClassicalParams) -> float:
    """Geometric decay base q = (1-p)^{r/(r+1)}·p^{1/(r+1)}·(r+1)/r^{r/(r+1)}.

    q <= 1 always, with equality exactly at p = 1/(r+1); the origin
    probability decays like q^t/√t.  The degenerate walks p in {0, 1}
    never return, so q = 0 there.

    Computed as the (r+1)-th root of (1-p)^r·p·(r+1)^{r+1}/r^r, which is
    exact rational arithmetic when p is a Fraction (so the recurrent
    point yields exactly 1.0), and clamped to the theoretical bound.
    """
    if params.p == 0 or params.p == 1:
        return 0.0
    r = params.r
    if isinstance(params.p, Fraction):
        inner = float((1 - params.p) ** r * params.p
                      * Fraction((r + 1) ** (r + 1), r ** r))
    else:
        p = params.p_float
        inner = (1.0 - p) ** r * p * ((r + 1) ** (r + 1) / r ** r)
    return min(inner ** (1.0 / (r + 1)), 1.0)


def stirling_asymptotic(params: ClassicalParams, t: int) -> float:
    """Large-t origin probability (r+1)/√(2·pi·r·t) · q^t.

    Only meaningful on the return residue class; relative error against
    the exact binomial drops below 5% around t ~ 100(r+1) and keeps
    shrinking like 1/t.
    """
    if t < params.period or t % params.period != 0:
        raise ParameterDomainError(
            f"t must be a positive multiple of {params.period}, got {t}"
        )
    return (params.r + 1) / math.sqrt(2.0 * math.pi * params.r * t) * q_factor(params) ** t


def classical_recurrent(params: ClassicalParams) -> bool:
    """True iff p = 1/(r+1): the single probability at which the walk returns.

    Fraction-valued p is compared exactly; float p within 1e-12 counts.
    """
    if isinstance(params.p, Fraction):
        return params.p == Fraction(1, params.period)
    return abs(params.p_float - 1.0 / params.period) <= 1e-12


def classical_mean(params: ClassicalParams, t: int) -> float:
    """Mean position after t steps: t·[p(r+1) - 1] (steps are independent)."""
    if t < 0:
        raise ParameterDomainError(f"step count t must be >= 0, got {t}")
    return t * (params.p_float * params.period - 1.0)


def classical_monte_carlo(params: ClassicalParams, t: int, trials: int,
                          seed: int) -> tuple[float, float]:
    """Sampled (mean position, origin frequency) after t steps.

    Deterministic for a fixed seed (generator: PCG64 via
    ``numpy.random.default_rng``).  Each trial draws the number of right
    steps from Binomial(t, p); the position is n_right·(r+1) - t.
    """
    if trials < 1:
        raise ParameterDomainError(f"trials must be >= 1, got {trials}")
    if t < 0:
        raise ParameterDomainError(f"step count t must be >= 0, got {t}")
    rng = np.random.default_rng(seed)
    n_right = rng.binomial(t, params.p_float, size=trials)
    positions = n_right * params.period - t
    mean_estimate = float(np.mean(positions))
    origin_frequency = float(np.count_nonzero(positions == 0) / trials)
    return mean_estimate, origin_frequency
