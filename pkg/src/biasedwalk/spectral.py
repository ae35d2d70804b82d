"""Momentum-space propagator, dispersion, saddle points, and exact inversion.

Fourier transforming the difference equations turns one walk step into
multiplication by the 2x2 unitary

    U(k) = [[√rho·e^{ikr},   √(1-rho)·e^{ikr}],
            [√(1-rho)·e^{-ik}, -√rho·e^{-ik}]],

whose eigenvalue phases (the dispersion relation) and their k-derivatives
(group velocities) are available in closed form.  Because the transformed
amplitude after t steps is a trigonometric polynomial of degree at most
(r+1)·t, sampling N >= (r+1)·t + 1 equally spaced momenta inverts the
transform exactly up to roundoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import CoinVector, ParameterDomainError, WalkParams, WaveFunction

__all__ = [
    "SpectralPoint",
    "SaddleSet",
    "propagator_k",
    "eigenphases",
    "eigenvectors",
    "phase_derivatives",
    "spectral_point",
    "saddle_points",
    "reconstruct_amplitude",
    "reconstruct_wavefunction",
]

#: raw eigenvector shorter than this is treated as a degenerate
#: parameterization (only reachable at rho = 1)
_DEGENERATE_NORM = 1e-12

#: residual bound |omega'(k0)| for accepting a saddle candidate
_SADDLE_RESIDUAL = 1e-9


@dataclass(frozen=True)
class SpectralPoint:
    """Eigensystem of the momentum-space propagator at one momentum.

    ``omega`` holds the two eigenvalue phases, ``omega_prime`` their
    k-derivatives, ``vectors`` the unit-norm eigenvectors.  ``degenerate``
    marks momenta where the closed-form eigenvector parameterization
    collapsed (rho = 1) and analytic basis vectors were substituted.
    """

    k: float
    omega: tuple[float, float]
    omega_prime: tuple[float, float]
    vectors: tuple[CoinVector, CoinVector]
    degenerate: bool = False


@dataclass(frozen=True)
class SaddleSet:
    """Stationary points of the dispersion, if any exist.

    ``exists`` is decided by the closed-form criterion; ``points`` lists
    the distinct momenta in [-pi, pi] at which some branch has vanishing
    group velocity.
    """

    points: tuple[float, ...]
    exists: bool


def propagator_k(params: WalkParams, k: float) -> np.ndarray:
    """One-step propagator at momentum k (a 2x2 unitary array)."""
    sr = math.sqrt(params.rho)
    sq = math.sqrt(1.0 - params.rho)
    er = np.exp(1j * k * params.r)
    el = np.exp(-1j * k)
    return np.array([[sr * er, sq * er], [sq * el, -sr * el]])


def eigenphases(params: WalkParams, k):
    """Eigenvalue phases (omega_1, omega_2) of the propagator at momentum k.

    omega_1 = (r-1)k/2 + arcsin(√rho·sin((r+1)k/2)) and
    omega_2 = (r-1)k/2 - pi - arcsin(√rho·sin((r+1)k/2)).
    Accepts scalar or array k.
    """
    k = np.asarray(k, dtype=float)
    s = np.arcsin(math.sqrt(params.rho) * np.sin((params.r + 1) * k / 2.0))
    base = (params.r - 1) * k / 2.0
    if k.ndim == 0:
        return float(base + s), float(base - math.pi - s)
    return base + s, base - math.pi - s


def phase_derivatives(params: WalkParams, k):
    """Group velocities (omega_1', omega_2') at momentum k.

    omega_1,2' = (r-1)/2 ± √rho·(r+1)·cos((r+1)k/2) / √(4 + 2rho[cos(k(r+1)) - 1]).
    At rho = 1 the denominator vanishes where cos((r+1)k/2) = 0 and the
    branch velocities jump between r and -1; those isolated momenta are
    assigned the midpoint value (r-1)/2 (both branches).  Accepts scalar
    or array k.
    """
    k = np.asarray(k, dtype=float)
    u = (params.r + 1) * k / 2.0
    den = np.sqrt(4.0 + 2.0 * params.rho * (np.cos((params.r + 1) * k) - 1.0))
    num = math.sqrt(params.rho) * (params.r + 1) * np.cos(u)
    with np.errstate(divide="ignore", invalid="ignore"):
        term = np.where(den > 0.0, num / np.where(den > 0.0, den, 1.0), 0.0)
    base = (params.r - 1) / 2.0
    w1p = base + term
    w2p = base - term
    if k.ndim == 0:
        return float(w1p), float(w2p)
    return w1p, w2p


def _eigenvector_grid(params: WalkParams, ks: np.ndarray):
    """Vectorized eigensystem over a momentum grid.

    Returns (omega_1, omega_2, v_1, v_2, degenerate) where v_j has shape
    (n, 2).  Raw eigenvectors are (√(1-rho), -√rho + e^{i(omega_j - r·k)})
    normalized to unit length; rows where the raw vector collapses
    (rho = 1) fall back to the analytic basis: the degenerate branch's
    eigenvalue is then the R-diagonal entry e^{ikr}, so its eigenvector
    is (1, 0), and (0, 1) completes the basis if both branches collapse.
    """
    w1, w2 = eigenphases(params, ks)
    sq = math.sqrt(1.0 - params.rho)
    sr = math.sqrt(params.rho)
    vs = []
    degs = []
    for w in (w1, w2):
        raw = np.stack([np.full_like(ks, sq, dtype=complex),
                        -sr + np.exp(1j * (w - params.r * ks))], axis=1)
        norms = np.linalg.norm(raw, axis=1)
        deg = norms < _DEGENERATE_NORM
        safe = np.where(deg, 1.0, norms)
        v = raw / safe[:, None]
        v[deg] = [1.0, 0.0]
        vs.append(v)
        degs.append(deg)
    both = degs[0] & degs[1]
    vs[1][both] = [0.0, 1.0]
    return w1, w2, vs[0], vs[1], degs[0] | degs[1]


def eigenvectors(params: WalkParams, k: float) -> tuple[CoinVector, CoinVector]:
    """Unit-norm eigenvectors of the propagator at momentum k."""
    ks = np.atleast_1d(np.asarray(k, dtype=float))
    _, _, v1, v2, _ = _eigenvector_grid(params, ks)
    return (CoinVector(v1[0, 0], v1[0, 1]), CoinVector(v2[0, 0], v2[0, 1]))


def spectral_point(params: WalkParams, k: float) -> SpectralPoint:
    """Full eigensystem (phases, velocities, vectors) at one momentum."""
    ks = np.atleast_1d(np.asarray(k, dtype=float))
    w1, w2, v1, v2, deg = _eigenvector_grid(params, ks)
    w1p, w2p = phase_derivatives(params, float(ks[0]))
    return SpectralPoint(
        k=float(ks[0]),
        omega=(float(w1[0]), float(w2[0])),
        omega_prime=(w1p, w2p),
        vectors=(CoinVector(v1[0, 0], v1[0, 1]), CoinVector(v2[0, 0], v2[0, 1])),
        degenerate=bool(deg[0]),
    )


def saddle_points(params: WalkParams) -> SaddleSet:
    """Momenta where a dispersion branch has zero group velocity.

    Real saddles exist iff (1-rho)(r-1)² <= 4·rho·r, i.e. iff rho clears
    the recurrence threshold ((r-1)/(r+1))²; the comparison is against
    the correctly rounded threshold so boundary parameters classify
    consistently with the recurrence criterion.  Candidates come from
    the closed form k0 = ±(2/(r+1))·arccos(±√((1-rho)(r-1)²/(4·rho·r)));
    they are kept when some branch velocity vanishes within 1e-9 and
    deduplicated.
    """
    r, rho = params.r, params.rho
    exists = rho >= (r - 1) ** 2 / (r + 1) ** 2
    if not exists:
        return SaddleSet(points=(), exists=False)
    if r == 1:
        arg = 0.0  # (r-1)² = 0; limit value also covers rho = 0
    else:
        arg = min((1.0 - rho) * (r - 1) ** 2 / (4.0 * rho * r), 1.0)
    base = math.acos(math.sqrt(arg))
    scale = 2.0 / (r + 1)
    candidates = {scale * base, -scale * base,
                  scale * (math.pi - base), -scale * (math.pi - base)}
    folded = []
    for k0 in candidates:
        while k0 > math.pi:
            k0 -= 2.0 * math.pi
        while k0 < -math.pi:
            k0 += 2.0 * math.pi
        w1p, w2p = phase_derivatives(params, k0)
        if min(abs(w1p), abs(w2p)) <= _SADDLE_RESIDUAL:
            folded.append(k0)
    folded.sort()
    points: list[float] = []
    for k0 in folded:
        if not points or k0 - points[-1] > _SADDLE_RESIDUAL:
            points.append(k0)
    return SaddleSet(points=tuple(points), exists=True)


def _transformed_state(initial: CoinVector, params: WalkParams, t: int,
                       ks: np.ndarray) -> np.ndarray:
    """Amplitude in the momentum picture after t steps, on a k grid.

    Built from the spectral resolution sum_j e^{i·omega_j·t}·(v_j, psi)·v_j
    rather than matrix powers; (·,·) is the coin-space scalar product,
    conjugate-linear on the left.
    """
    psi0 = initial.as_array()
    _, _, v1, v2, _ = _eigenvector_grid(params, ks)
    w1, w2 = eigenphases(params, ks)
    out = np.zeros((len(ks), 2), dtype=complex)
    for w, v in ((w1, v1), (w2, v2)):
        overlap = np.sum(v.conj() * psi0, axis=1)
        out += np.exp(1j * w * t)[:, None] * overlap[:, None] * v
    return out


def reconstruct_amplitude(initial: CoinVector, params: WalkParams,
                          m: int, t: int) -> np.ndarray:
    """Amplitude vector psi(m, t) by exact inverse Fourier summation.

    Sums the spectral representation over N = (r+1)·t + 1 equally spaced
    momenta; since the momentum-picture amplitude is a trigonometric
    polynomial of degree <= (r+1)·t, the discrete sum equals the integral
    exactly up to roundoff.
    """
    if t < 0:
        raise ParameterDomainError(f"step count t must be >= 0, got {t}")
    n = (params.r + 1) * t + 1
    ks = -math.pi + 2.0 * math.pi * np.arange(n) / n
    tilde = _transformed_state(initial, params, t, ks)
    return np.mean(tilde * np.exp(-1j * m * ks)[:, None], axis=0)


def reconstruct_wavefunction(initial: CoinVector, params: WalkParams,
                             t: int) -> WaveFunction:
    """Whole wave function at step t via the exact inverse transform."""
    if t < 0:
        raise ParameterDomainError(f"step count t must be >= 0, got {t}")
    n = (params.r + 1) * t + 1
    ks = -math.pi + 2.0 * math.pi * np.arange(n) / n
    tilde = _transformed_state(initial, params, t, ks)
    period = params.period
    ms = -t + period * np.arange(t + 1)
    phases = np.exp(-1j * np.outer(ms, ks))  # (t+1, n)
    amps = phases @ tilde / n
    return WaveFunction(t=t, amplitudes={int(m): amps[j] for j, m in enumerate(ms)})
