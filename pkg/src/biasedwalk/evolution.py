"""Position-space time evolution and empirical observables.

The update rule is the pair of difference equations

    psi'(m) = C_plus · psi(m - r) + C_minus · psi(m + 1),

iterated from a point source at the origin.  Internally the amplitude
field at step t is a dense (t+1, 2) array over the occupied slots
j = 0..t with position m = -t + j*(r+1); the sparse position-keyed map
of :class:`~biasedwalk.core.WaveFunction` is only the exchange format.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    CoinVector,
    DegenerateDistributionError,
    InvariantViolationError,
    ParameterDomainError,
    WalkParams,
    WaveFunction,
    coin_halves,
)

__all__ = [
    "Distribution",
    "OriginSeries",
    "step",
    "evolve",
    "distribution",
    "origin_series",
    "empirical_mean",
    "detect_peaks",
    "norm_history",
]


@dataclass(frozen=True)
class Distribution:
    """Position distribution P(m) = ||psi(m)||² at step count t."""

    t: int
    probs: dict[int, float]

    def total(self) -> float:
        return float(sum(self.probs.values()))


@dataclass(frozen=True)
class OriginSeries:
    """Probability at the origin for every step count 0..t_max.

    ``p0[t]`` is exactly 0 whenever the return period (r+1) does not
    divide t; only those occupied times carry probability.
    """

    times: np.ndarray
    p0: np.ndarray
    period: int

    def occupied(self) -> tuple[np.ndarray, np.ndarray]:
        """The (times, p0) subsequence on the return residue class."""
        mask = self.times % self.period == 0
        return self.times[mask], self.p0[mask]

    def pairs(self) -> list[tuple[int, float]]:
        return [(int(t), float(p)) for t, p in zip(self.times, self.p0)]


def _dense_from_wavefunction(state: WaveFunction, params: WalkParams) -> np.ndarray:
    """Pack a sparse wave function into the (t+1, 2) slot array."""
    t = state.t
    period = params.period
    arr = np.zeros((t + 1, 2), dtype=complex)
    for m, amp in state.amplitudes.items():
        offset = m + t
        if offset % period != 0 or not (0 <= offset // period <= t):
            raise InvariantViolationError(
                f"position {m} invalid for t={t}, r={params.r}"
            )
        arr[offset // period] = amp
    return arr


def _wavefunction_from_dense(arr: np.ndarray, t: int, params: WalkParams) -> WaveFunction:
    period = params.period
    amps = {int(-t + j * period): arr[j].copy() for j in range(t + 1)}
    return WaveFunction(t=t, amplitudes=amps)


def _step_dense(arr: np.ndarray, c_plus: np.ndarray, c_minus: np.ndarray) -> np.ndarray:
    """One update on the slot array: slot j' = C+·old[j'-1] + C-·old[j']."""
    new = np.zeros((arr.shape[0] + 1, 2), dtype=complex)
    new[1:] += arr @ c_plus.T
    new[:-1] += arr @ c_minus.T
    return new


def step(state: WaveFunction, params: WalkParams) -> WaveFunction:
    """Advance a wave function by one step of the walk.

    The input must satisfy the support and residue-class invariants for
    its step count; the norm is not checked, so the map is linear on
    arbitrary (even unnormalized) amplitude fields.
    """
    c_plus, c_minus = coin_halves(params.rho)
    arr = _dense_from_wavefunction(state, params)
    return _wavefunction_from_dense(_step_dense(arr, c_plus, c_minus), state.t + 1, params)


def evolve(initial: CoinVector, params: WalkParams, t: int) -> WaveFunction:
    """Run t steps from a point source at the origin with the given coin state."""
    if t < 0:
        raise ParameterDomainError(f"step count t must be >= 0, got {t}")
    c_plus, c_minus = coin_halves(params.rho)
    arr = initial.as_array().reshape(1, 2)
    for _ in range(t):
        arr = _step_dense(arr, c_plus, c_minus)
    return _wavefunction_from_dense(arr, t, params)


def distribution(state: WaveFunction) -> Distribution:
    """Position distribution P(m) = ||psi(m)||² of a wave function."""
    probs = {m: float(np.sum(np.abs(amp) ** 2)) for m, amp in state.amplitudes.items()}
    return Distribution(t=state.t, probs=probs)


def origin_series(initial: CoinVector, params: WalkParams, t_max: int) -> OriginSeries:
    """Probability at the origin after each of 0..t_max steps.

    Times off the return residue class are reported as exact zeros and
    are never touched by the evolution loop.
    """
    if t_max < 0:
        raise ParameterDomainError(f"t_max must be >= 0, got {t_max}")
    period = params.period
    c_plus, c_minus = coin_halves(params.rho)
    arr = initial.as_array().reshape(1, 2)
    p0 = np.zeros(t_max + 1)
    p0[0] = float(np.sum(np.abs(arr[0]) ** 2))
    for t in range(1, t_max + 1):
        arr = _step_dense(arr, c_plus, c_minus)
        if t % period == 0:
            j = t // period  # slot of m = 0
            p0[t] = float(np.sum(np.abs(arr[j]) ** 2))
    return OriginSeries(times=np.arange(t_max + 1), p0=p0, period=period)


def empirical_mean(dist: Distribution) -> float:
    """Mean position Σ m·P(m) of a distribution."""
    return float(sum(m * p for m, p in dist.probs.items()))


def norm_history(initial: CoinVector, params: WalkParams, t: int) -> np.ndarray:
    """Total probability after each of 0..t steps (conservation diagnostic)."""
    if t < 0:
        raise ParameterDomainError(f"step count t must be >= 0, got {t}")
    c_plus, c_minus = coin_halves(params.rho)
    arr = initial.as_array().reshape(1, 2)
    norms = np.empty(t + 1)
    norms[0] = float(np.sum(np.abs(arr) ** 2))
    for s in range(1, t + 1):
        arr = _step_dense(arr, c_plus, c_minus)
        norms[s] = float(np.sum(np.abs(arr) ** 2))
    return norms


def detect_peaks(dist: Distribution) -> tuple[int, int]:
    """Locate the outermost local maxima of a two-peaked distribution.

    A local maximum is taken over the occupied residue class only, i.e.
    against the neighbors at lattice distance r+1, with >= comparisons so
    that plateau ties resolve toward the extremes.  Returns the positions
    (m_left, m_right) of the outermost maxima with m_left < m_right.

    Raises
    ------
    DegenerateDistributionError
        If fewer than two local maxima exist (e.g. very small t).
    """
    if len(dist.probs) < 3:
        raise DegenerateDistributionError(
            f"need at least 3 occupied positions, got {len(dist.probs)}"
        )
    ms = np.array(sorted(dist.probs))
    q = np.array([dist.probs[m] for m in ms])
    left = np.empty_like(q)
    right = np.empty_like(q)
    left[0], left[1:] = -np.inf, q[:-1]
    right[-1], right[:-1] = -np.inf, q[1:]
    is_max = (q >= left) & (q >= right)
    locs = ms[is_max]
    if len(locs) < 2:
        raise DegenerateDistributionError("fewer than two local maxima found")
    return int(locs[0]), int(locs[-1])
