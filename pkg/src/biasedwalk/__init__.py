"""Biased discrete-time quantum walks on the integer line.

Simulation of the coined walk with right steps of length r and unit left
steps, its momentum-space spectral analysis, closed-form recurrence and
bias classification, and the classical random-walk baseline.
"""

from .core import (
    DEFAULT_TOLERANCES,
    CoinVector,
    DegenerateDistributionError,
    InvariantViolationError,
    ParameterDomainError,
    Tolerances,
    WalkParams,
    WaveFunction,
    coin_halves,
    make_coin,
    make_initial_state,
)
from .evolution import (
    Distribution,
    OriginSeries,
    detect_peaks,
    distribution,
    empirical_mean,
    evolve,
    norm_history,
    origin_series,
    step,
)
from .spectral import (
    SaddleSet,
    SpectralPoint,
    eigenphases,
    eigenvectors,
    phase_derivatives,
    propagator_k,
    reconstruct_amplitude,
    reconstruct_wavefunction,
    saddle_points,
    spectral_point,
)
from .analysis import (
    ClassificationReport,
    PhaseDiagramTable,
    asymptotic_mean,
    classify,
    classify_genuine_bias,
    classify_recurrence,
    genuine_bias_threshold,
    loglinear_fit,
    loglog_slope,
    mean_integral,
    minimizing_state,
    minimizing_state_mean,
    peak_velocities,
    phase_diagram,
    polya_estimate,
    polya_estimate_from_series,
    recurrence_threshold,
)
from .classical import (
    ClassicalParams,
    classical_mean,
    classical_monte_carlo,
    classical_origin_probability,
    classical_recurrent,
    q_factor,
    stirling_asymptotic,
)

__version__ = "0.1.0"

__all__ = [
    "CoinVector",
    "WalkParams",
    "WaveFunction",
    "Distribution",
    "OriginSeries",
    "SpectralPoint",
    "SaddleSet",
    "ClassificationReport",
    "PhaseDiagramTable",
    "ClassicalParams",
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "ParameterDomainError",
    "DegenerateDistributionError",
    "InvariantViolationError",
    "make_coin",
    "coin_halves",
    "make_initial_state",
    "step",
    "evolve",
    "distribution",
    "origin_series",
    "empirical_mean",
    "detect_peaks",
    "norm_history",
    "propagator_k",
    "eigenphases",
    "eigenvectors",
    "phase_derivatives",
    "spectral_point",
    "saddle_points",
    "reconstruct_amplitude",
    "reconstruct_wavefunction",
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
    "classical_origin_probability",
    "q_factor",
    "stirling_asymptotic",
    "classical_recurrent",
    "classical_mean",
    "classical_monte_carlo",
]
