"""Shared domain types for biased quantum walks on the integer line.

The walk lives on position space ⊗ a two-dimensional coin space.  Each
step rotates the coin by a one-parameter real unitary and then shifts
the walker ``r`` sites to the right (coin ``R``) or one site to the left
(coin ``L``).  Because every path mixes steps of +r and -1, after ``t``
steps only positions with ``m ≡ -t (mod r+1)`` inside ``[-t, r*t]`` can
carry amplitude; wave functions are stored as sparse maps over that
residue class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ParameterDomainError",
    "DegenerateDistributionError",
    "InvariantViolationError",
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "WalkParams",
    "CoinVector",
    "WaveFunction",
    "make_coin",
    "coin_halves",
    "make_initial_state",
]


class ParameterDomainError(ValueError):
    """A walk, coin, or state parameter lies outside its allowed domain."""


class DegenerateDistributionError(RuntimeError):
    """A distribution lacks the structure an operation requires."""


class InvariantViolationError(RuntimeError):
    """An internal consistency check (norm, support, residue class) failed."""


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances shared by all validation helpers.

    ``probability`` bounds deviations of probability sums from 1;
    ``algebra`` bounds residuals of algebraic identities (unitarity,
    normalization, eigen-residuals).
    """

    probability: float = 1e-10
    algebra: float = 1e-12


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class WalkParams:
    """Walk family parameters: right-step length and coin parameter.

    Attributes
    ----------
    r : int
        Length of the right step, r >= 1.  The left step has unit length.
    rho : float
        Coin parameter in [0, 1].  rho = 1/2 is the Hadamard coin.
    """

    r: int
    rho: float

    def __post_init__(self):
        if isinstance(self.r, bool) or not isinstance(self.r, (int, np.integer)):
            raise ParameterDomainError(f"right-step length r must be an integer, got {self.r!r}")
        if self.r < 1:
            raise ParameterDomainError(f"right-step length r must be >= 1, got {self.r}")
        rho = float(self.rho)
        if not (0.0 <= rho <= 1.0):
            raise ParameterDomainError(f"coin parameter rho must lie in [0, 1], got {self.rho!r}")
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "rho", rho)

    @property
    def period(self) -> int:
        """Lattice stride r+1 between occupied positions (also the return period)."""
        return self.r + 1


@dataclass(frozen=True)
class CoinVector:
    """Normalized two-component coin state (amplitudes on |R> and |L>)."""

    amp_R: complex
    amp_L: complex

    def __post_init__(self):
        object.__setattr__(self, "amp_R", complex(self.amp_R))
        object.__setattr__(self, "amp_L", complex(self.amp_L))
        norm_sq = abs(self.amp_R) ** 2 + abs(self.amp_L) ** 2
        if abs(norm_sq - 1.0) > DEFAULT_TOLERANCES.algebra:
            raise ParameterDomainError(
                f"coin vector must have unit norm, got |.|^2 = {norm_sq!r}"
            )

    def as_array(self) -> np.ndarray:
        return np.array([self.amp_R, self.amp_L], dtype=complex)


def make_coin(rho: float) -> np.ndarray:
    """Return the 2x2 coin matrix [[√rho, √(1-rho)], [√(1-rho), -√rho]].

    The matrix is real and unitary for every rho in [0, 1]; rho = 1/2
    gives the Hadamard coin.  Square roots are taken here so that the
    endpoints rho = 0 and rho = 1 are exact.

    Raises
    ------
    ParameterDomainError
        If rho is outside [0, 1].
    """
    if not (0.0 <= rho <= 1.0):
        raise ParameterDomainError(f"coin parameter rho must lie in [0, 1], got {rho!r}")
    sr = math.sqrt(rho)
    sq = math.sqrt(1.0 - rho)
    return np.array([[sr, sq], [sq, -sr]], dtype=complex)


def coin_halves(rho: float) -> tuple[np.ndarray, np.ndarray]:
    """Split the coin into the shift-conditioned halves (C_plus, C_minus).

    C_plus keeps the R row (amplitude that moves right by r) and zeroes
    the L row; C_minus does the reverse.  C_plus + C_minus equals
    ``make_coin(rho)``.
    """
    if not (0.0 <= rho <= 1.0):
        raise ParameterDomainError(f"coin parameter rho must lie in [0, 1], got {rho!r}")
    sr = math.sqrt(rho)
    sq = math.sqrt(1.0 - rho)
    c_plus = np.array([[sr, sq], [0.0, 0.0]], dtype=complex)
    c_minus = np.array([[0.0, 0.0], [sq, -sr]], dtype=complex)
    return c_plus, c_minus


def make_initial_state(a: float, phi: float) -> CoinVector:
    """Build the initial coin state (√a, √(1-a)·e^{i·phi}).

    Parameters
    ----------
    a : float
        Weight on the |R> component, in [0, 1].
    phi : float
        Relative phase of the |L> component, in [0, 2π).

    Raises
    ------
    ParameterDomainError
        If a or phi is outside its domain.
    """
    if not (0.0 <= a <= 1.0):
        raise ParameterDomainError(f"state parameter a must lie in [0, 1], got {a!r}")
    if not (0.0 <= phi < 2.0 * math.pi):
        raise ParameterDomainError(f"state parameter phi must lie in [0, 2*pi), got {phi!r}")
    return CoinVector(math.sqrt(a), math.sqrt(1.0 - a) * np.exp(1j * phi))


@dataclass(frozen=True)
class WaveFunction:
    """Finite-support wave function at a fixed step count.

    ``amplitudes`` maps lattice position m to a length-2 complex array
    (components on |R> and |L>).  A wave function produced by ``t`` steps
    from the origin occupies only m ≡ -t (mod r+1) inside [-t, r*t].
    Instances are treated as immutable values; do not mutate the arrays.
    """

    t: int
    amplitudes: dict[int, np.ndarray] = field(repr=False)

    def norm_sq(self) -> float:
        """Total probability Σ_m ||ψ(m)||²."""
        return float(sum(np.sum(np.abs(v) ** 2) for v in self.amplitudes.values()))

    def amplitude(self, m: int) -> np.ndarray:
        """Amplitude vector at position m (zeros if unoccupied)."""
        return self.amplitudes.get(m, np.zeros(2, dtype=complex))

    def validate(self, params: WalkParams, tolerances: Tolerances = DEFAULT_TOLERANCES,
                 check_norm: bool = True) -> None:
        """Check support, residue-class, and (optionally) norm invariants.

        Raises
        ------
        InvariantViolationError
            On the first violated invariant.
        """
        period = params.period
        lo, hi = -self.t, params.r * self.t
        for m in self.amplitudes:
            if not (lo <= m <= hi):
                raise InvariantViolationError(
                    f"position {m} outside reachable window [{lo}, {hi}] at t={self.t}"
                )
            if (m + self.t) % period != 0:
                raise InvariantViolationError(
                    f"position {m} off the residue class m ≡ -t (mod {period}) at t={self.t}"
                )
        if check_norm:
            norm_sq = self.norm_sq()
            if abs(norm_sq - 1.0) > tolerances.probability:
                raise InvariantViolationError(
                    f"norm^2 = {norm_sq!r} deviates from 1 beyond {tolerances.probability}"
                )
