"""Closed-form analytics and verdicts for the biased walk family.

Everything here is a function of the walk parameters (r, rho) and, where
relevant, the initial coin state (a, phi): the recurrence threshold and
criterion, the two peak velocities, the asymptotic position mean (closed
form and as a one-dimensional integral), the mean-minimizing initial
state, the genuine-bias threshold, return-probability estimation, and
the parameter-space phase diagram.

Boundary conventions: thresholds are single quotients of exact integer
squares (hence correctly rounded), and classifiers compare rho against
them directly, so walks sitting on a threshold classify the same way
through every equivalent predicate (criterion, saddle existence,
velocity signs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .core import CoinVector, ParameterDomainError, WalkParams
from .evolution import OriginSeries, origin_series
from .spectral import SaddleSet, saddle_points

__all__ = [
    "ClassificationReport",
    "PhaseDiagramTable",
    "recurrence_threshold",
    "classify_recurrence",
    "peak_velocities",
    "polya_estimate",
    "polya_estimate_from_series",
    "asymptotic_mean",
    "mean_integral",
    "minimizing_state",
    "minimizing_state_mean",
    "genuine_bias_threshold",
    "classify_genuine_bias",
    "classify",
    "phase_diagram",
    "loglog_slope",
    "loglinear_fit",
]


@dataclass(frozen=True)
class ClassificationReport:
    """Recurrence and bias verdicts for one (r, rho).

    ``boundary`` marks walks sitting exactly on the recurrence threshold,
    where the dispersion saddle is degenerate and decay-based diagnostics
    do not apply.
    """

    params: WalkParams
    rho_R: float
    recurrent: bool
    v_L: float
    v_R: float
    rho_0: float
    genuine_biased: bool
    saddles: SaddleSet
    boundary: bool


@dataclass(frozen=True)
class PhaseDiagramTable:
    """Threshold curves and an optional region-labeled parameter grid.

    ``rows`` holds (r, rho_R(r), rho_0(r)) per step length; ``grid``
    holds (r, rho, label) with label one of ``transient-genuine``,
    ``recurrent-genuine``, ``recurrent-unbiasable``.
    """

    rows: list[tuple[int, float, float]]
    grid: list[tuple[int, float, str]] | None = None


def _check_r(r: int) -> int:
    if isinstance(r, bool) or not isinstance(r, (int, np.integer)):
        raise ParameterDomainError(f"step length r must be an integer, got {r!r}")
    if r < 1:
        raise ParameterDomainError(f"step length r must be >= 1, got {r}")
    return int(r)


def recurrence_threshold(r: int) -> float:
    """Smallest coin parameter for which the walk is recurrent: ((r-1)/(r+1))²."""
    r = _check_r(r)
    return (r - 1) ** 2 / (r + 1) ** 2


def classify_recurrence(params: WalkParams) -> bool:
    """True iff rho >= ((r-1)/(r+1))² (non-strict at the boundary).

    The comparison is against the correctly rounded threshold, so
    decimal boundary inputs such as rho = 0.36 at r = 4 classify as
    recurrent even though their binary values sit an ulp off the exact
    rational.
    """
    return params.rho >= recurrence_threshold(params.r)


def peak_velocities(params: WalkParams) -> tuple[float, float]:
    """Propagation velocities (v_L, v_R) = (r-1)/2 ∓ (r+1)·√rho/2 of the two peaks."""
    half_drift = (params.r - 1) / 2.0
    half_spread = (params.r + 1) * math.sqrt(params.rho) / 2.0
    return half_drift - half_spread, half_drift + half_spread


def polya_estimate(initial: CoinVector, params: WalkParams, t_max: int) -> float:
    """Return-probability estimate 1 - Π(1 - P0(t)) over occupied t in [1, t_max].

    The product runs over the return times t = (r+1), 2(r+1), ... <= t_max,
    each factor using the unmeasured evolution restarted-ensemble origin
    probability.  Monotone nondecreasing in t_max; a finite product can
    only certify a lower bound, so recurrence verdicts use the closed-form
    criterion, never this estimate.
    """
    if t_max < 1:
        raise ParameterDomainError(f"t_max must be >= 1, got {t_max}")
    return polya_estimate_from_series(origin_series(initial, params, t_max))


def polya_estimate_from_series(series: OriginSeries) -> float:
    """Partial-product estimate computed from an existing origin series."""
    times, p0 = series.occupied()
    mask = times >= 1
    return float(1.0 - np.prod(1.0 - p0[mask]))


def asymptotic_mean(a: float, phi: float, params: WalkParams) -> float:
    """Long-time position mean per step, lim <x>/t, for initial state (a, phi).

    Closed form:
        (1-√(1-rho))·(a(r+1)-1)
        + √(a(1-a))·(1-√(1-rho))·(1-rho)·(r+1)·cos(phi)/√(rho(1-rho))
        + (r-1)/2·√(1-rho).

    The degenerate coins take their analytic limits: rho = 0 gives
    (r-1)/2 (strict alternation of the two step directions) and rho = 1
    gives a(r+1)-1 (straight-line motion of each coin component).
    """
    if not (0.0 <= a <= 1.0):
        raise ParameterDomainError(f"state parameter a must lie in [0, 1], got {a!r}")
    if not (0.0 <= phi < 2.0 * math.pi):
        raise ParameterDomainError(f"state parameter phi must lie in [0, 2*pi), got {phi!r}")
    r, rho = params.r, params.rho
    if rho == 0.0:
        return (r - 1) / 2.0
    if rho == 1.0:
        return a * (r + 1) - 1.0
    g = 1.0 - math.sqrt(1.0 - rho)
    drift = g * (a * (r + 1) - 1.0)
    cross = (math.sqrt(a * (1.0 - a)) * g * (1.0 - rho) * (r + 1)
             * math.cos(phi) / math.sqrt(rho * (1.0 - rho)))
    return drift + cross + (r - 1) / 2.0 * math.sqrt(1.0 - rho)


def _mean_integrand(u: float, r: int, rho: float, a: float, phi: float) -> float:
    """Integrand of the group-velocity average, reduced to one period in u.

    u = k(r+1)/2; the denominator factors are the squared eigenvector
    norms over 2, and the numerator collects the branch-weighted group
    velocities over the common denominator.
    """
    sr = math.sqrt(rho)
    x = sr * math.sin(u)
    u1 = u + math.asin(x)
    u2 = u + math.acos(x)
    num = (1.0 - rho) * (
        (r - 1) * (1.0 + rho * math.cos(2.0 * u))
        + rho * (a + r * (a - 1.0)) * (1.0 + math.cos(2.0 * u))
        + math.sqrt(a * (1.0 - a)) * math.sqrt(rho * (1.0 - rho)) * (r + 1)
        * (math.cos(phi) + math.cos(phi + 2.0 * u))
    )
    den = 2.0 * (r + 1) * math.pi * (1.0 + sr * math.cos(u1)) * (1.0 - sr * math.sin(u2))
    return num / den


def mean_integral(a: float, phi: float, params: WalkParams) -> float:
    """Asymptotic position mean as a quadrature over the dispersion.

    Averages the branch group velocities against the squared overlaps
    with the initial state, written as a single integrand in the scaled
    momentum u over [0, (r+1)·pi].  The integrand is pi-periodic in u, so
    one period is integrated and scaled; adaptive quadrature brings the
    result within 1e-8 of :func:`asymptotic_mean` away from the
    degenerate coins.
    """
    if not (0.0 <= a <= 1.0):
        raise ParameterDomainError(f"state parameter a must lie in [0, 1], got {a!r}")
    if not (0.0 <= phi < 2.0 * math.pi):
        raise ParameterDomainError(f"state parameter phi must lie in [0, 2*pi), got {phi!r}")
    r, rho = params.r, params.rho
    if rho == 0.0:
        return (r - 1) / 2.0
    if rho == 1.0:
        return a * (r + 1) - 1.0
    one_period, _ = integrate.quad(
        _mean_integrand, 0.0, math.pi, args=(r, rho, a, phi),
        epsabs=1e-12, epsrel=1e-12, limit=500,
    )
    return (r + 1) * one_period


def minimizing_state(rho: float) -> tuple[float, float]:
    """Initial-state parameters (a0, phi0) minimizing the asymptotic mean.

    For any step length the minimum over (a, phi) sits at
    a0 = (1 - √rho)/2, phi0 = pi.
    """
    if not (0.0 < rho < 1.0):
        raise ParameterDomainError(f"rho must lie in (0, 1), got {rho!r}")
    return (1.0 - math.sqrt(rho)) / 2.0, math.pi


def minimizing_state_mean(r: int, rho: float) -> float:
    """Asymptotic mean attained at the minimizing state:
    (r-1)/2 + (1 - √(1-rho) - rho)(1+r)/(2√((1-rho)·rho))."""
    r = _check_r(r)
    if not (0.0 < rho < 1.0):
        raise ParameterDomainError(f"rho must lie in (0, 1), got {rho!r}")
    return ((r - 1) / 2.0
            + (1.0 - math.sqrt(1.0 - rho) - rho) * (1 + r)
            / (2.0 * math.sqrt((1.0 - rho) * rho)))


def genuine_bias_threshold(r: int) -> float:
    """Smallest rho at which some initial state cancels the mean: ((r²-1)/(r²+1))²."""
    r = _check_r(r)
    return (r * r - 1) ** 2 / (r * r + 1) ** 2


def classify_genuine_bias(params: WalkParams) -> bool:
    """True iff no initial state gives zero asymptotic mean (rho < ((r²-1)/(r²+1))²)."""
    return params.rho < genuine_bias_threshold(params.r)


def classify(params: WalkParams) -> ClassificationReport:
    """Assemble the full recurrence / bias report for one parameter point."""
    r = params.r
    recurrent = classify_recurrence(params)
    v_l, v_r = peak_velocities(params)
    return ClassificationReport(
        params=params,
        rho_R=recurrence_threshold(r),
        recurrent=recurrent,
        v_L=v_l,
        v_R=v_r,
        rho_0=genuine_bias_threshold(r),
        genuine_biased=classify_genuine_bias(params),
        saddles=saddle_points(params),
        boundary=params.rho == recurrence_threshold(r),
    )


def _region_label(params: WalkParams) -> str:
    if not classify_recurrence(params):
        return "transient-genuine"
    if classify_genuine_bias(params):
        return "recurrent-genuine"
    return "recurrent-unbiasable"


def phase_diagram(r_max: int = 10, rho_steps: int = 99,
                  include_grid: bool = True) -> PhaseDiagramTable:
    """Threshold curves for r = 1..r_max and a region-labeled (r, rho) grid.

    Threshold values come from the closed forms, never from interpolation;
    the grid samples rho at i/(rho_steps+1) for i = 1..rho_steps.
    """
    r_max = _check_r(r_max)
    if rho_steps < 2:
        raise ParameterDomainError(f"rho_steps must be >= 2, got {rho_steps}")
    rows = [(r, recurrence_threshold(r), genuine_bias_threshold(r))
            for r in range(1, r_max + 1)]
    grid = None
    if include_grid:
        grid = []
        for r in range(1, r_max + 1):
            for i in range(1, rho_steps + 1):
                rho = i / (rho_steps + 1)
                grid.append((r, rho, _region_label(WalkParams(r=r, rho=rho))))
    return PhaseDiagramTable(rows=rows, grid=grid)


def loglog_slope(times: np.ndarray, values: np.ndarray) -> float:
    """Least-squares slope of log(values) against log(times)."""
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    mask = (times > 0) & (values > 0)
    if np.count_nonzero(mask) < 2:
        raise ParameterDomainError("need at least two positive samples for a log-log fit")
    slope, _ = np.polyfit(np.log(times[mask]), np.log(values[mask]), 1)
    return float(slope)


def loglinear_fit(times: np.ndarray, values: np.ndarray) -> tuple[float, float, float]:
    """Fit log(values) = slope·times + intercept; returns (slope, intercept, R²)."""
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    mask = values > 0
    if np.count_nonzero(mask) < 2:
        raise ParameterDomainError("need at least two positive samples for a log-linear fit")
    x, y = times[mask], np.log(values[mask])
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    total = y - np.mean(y)
    r_sq = 1.0 - float(np.sum(resid ** 2)) / float(np.sum(total ** 2))
    return float(slope), float(intercept), r_sq
