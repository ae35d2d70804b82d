"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line.  Tolerances are pinned here and match the library's
documented guarantees; run with ``pytest tests/test_acceptance.py -v -s``
to see the lines as they go by.
"""

import math
import time
from fractions import Fraction

import numpy as np

from biasedwalk import (
    WalkParams,
    asymptotic_mean,
    classical_mean,
    classical_monte_carlo,
    classical_origin_probability,
    classical_recurrent,
    classify_recurrence,
    detect_peaks,
    distribution,
    empirical_mean,
    evolve,
    loglinear_fit,
    loglog_slope,
    make_initial_state,
    mean_integral,
    minimizing_state,
    minimizing_state_mean,
    norm_history,
    origin_series,
    peak_velocities,
    q_factor,
    reconstruct_wavefunction,
    recurrence_threshold,
    saddle_points,
    stirling_asymptotic,
)
from biasedwalk.classical import ClassicalParams


def _report(number: int, name: str, ok: bool) -> None:
    print(f"ACCEPTANCE {number} ({name}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"acceptance criterion {number} ({name}) failed"


def test_criterion_1_peak_velocities():
    started = time.monotonic()
    params = WalkParams(r=3, rho=1 / math.sqrt(2))
    v_left, v_right = peak_velocities(params)
    ok = abs(v_left - (-0.6818)) <= 5e-4 and abs(v_right - 2.6818) <= 5e-4

    t = 300
    state = make_initial_state(1 / math.sqrt(2), math.pi)
    m_left, m_right = detect_peaks(distribution(evolve(state, params, t)))
    ok &= abs(m_left / t - v_left) <= 0.05
    ok &= abs(m_right / t - v_right) <= 0.05
    ok &= (time.monotonic() - started) < 5.0
    _report(1, "peak velocities", ok)


def test_criterion_2_recurrence_threshold_and_equivalence():
    started = time.monotonic()
    ok = recurrence_threshold(3) == 0.25
    ok &= not saddle_points(WalkParams(r=3, rho=0.24)).exists
    ok &= saddle_points(WalkParams(r=3, rho=0.26)).exists
    for r in range(1, 11):
        threshold = recurrence_threshold(r)
        for i in range(1, 100):
            params = WalkParams(r=r, rho=i / 100)
            criterion = params.rho >= threshold
            saddles = saddle_points(params).exists
            v_left, v_right = peak_velocities(params)
            velocity = v_left <= 0.0 and v_right >= 0.0
            ok &= classify_recurrence(params) == criterion == saddles == velocity
    ok &= (time.monotonic() - started) < 10.0
    _report(2, "recurrence threshold and equivalence chain", ok)


def test_criterion_3_decay_exponents():
    started = time.monotonic()
    state = make_initial_state(1.0, 0.0)

    series = origin_series(state, WalkParams(r=3, rho=0.5), 1000)
    times, p0 = series.occupied()
    window = (times >= 100) & (times <= 1000)
    slope = loglog_slope(times[window], p0[window])
    ok = abs(slope - (-1.0)) <= 0.15

    series = origin_series(state, WalkParams(r=3, rho=0.1), 1000)
    times, p0 = series.occupied()
    window = (times >= 100) & (times <= 1000)
    lin_slope, _, r_squared = loglinear_fit(times[window], p0[window])
    ok &= lin_slope < 0 and r_squared >= 0.99
    ok &= (time.monotonic() - started) < 60.0
    _report(3, "origin decay exponents", ok)


def test_criterion_4_mean_value_formula():
    rng = np.random.default_rng(20260810)
    ok = True
    for _ in range(50):
        params = WalkParams(r=int(rng.integers(1, 11)), rho=float(rng.uniform(0.02, 0.98)))
        a = float(rng.uniform(0.0, 1.0))
        phi = float(rng.uniform(0.0, 2 * math.pi))
        ok &= abs(mean_integral(a, phi, params) - asymptotic_mean(a, phi, params)) <= 1e-8

    for r, rho, a, phi, target in [
        (3, 1 / math.sqrt(2), 1 / math.sqrt(2), math.pi, None),
        (1, 0.5, 1.0, 0.0, 1.0 - 1.0 / math.sqrt(2.0)),
    ]:
        params = WalkParams(r=r, rho=rho)
        closed = asymptotic_mean(a, phi, params)
        if target is not None:
            ok &= abs(closed - target) <= 1e-12
        scaled = empirical_mean(distribution(evolve(make_initial_state(a, phi), params, 400))) / 400
        ok &= abs(scaled - closed) <= 0.01
    _report(4, "mean-value formula", ok)


def test_criterion_5_genuine_bias_boundary():
    a0, phi0 = minimizing_state(0.64)
    ok = abs(a0 - 0.1) <= 1e-12 and phi0 == math.pi
    ok &= abs(asymptotic_mean(0.1, math.pi, WalkParams(r=3, rho=0.64))) <= 1e-12

    ok &= minimizing_state_mean(3, 0.60) > 0.0
    ok &= abs(minimizing_state_mean(3, 0.64)) <= 1e-12
    ok &= minimizing_state_mean(3, 0.68) < 0.0

    params = WalkParams(r=3, rho=0.5)
    a_grid = np.linspace(0.0, 1.0, 200)
    phi_grid = np.linspace(0.0, 2 * math.pi, 200, endpoint=False)
    smallest = min(asymptotic_mean(float(a), float(phi), params)
                   for a in a_grid for phi in phi_grid)
    ok &= smallest > 0.0
    _report(5, "genuine-bias boundary", ok)


def test_criterion_6_oracle_equivalence():
    started = time.monotonic()
    rng = np.random.default_rng(616)
    ok = True
    for _ in range(5):
        params = WalkParams(r=int(rng.integers(1, 9)), rho=float(rng.uniform(0.02, 0.98)))
        state = make_initial_state(float(rng.uniform(0, 1)),
                                   float(rng.uniform(0, 2 * math.pi)))
        direct = evolve(state, params, 50)
        rebuilt = reconstruct_wavefunction(state, params, 50)
        ok &= set(direct.amplitudes) == set(rebuilt.amplitudes)
        worst = max(float(np.max(np.abs(direct.amplitudes[m] - rebuilt.amplitudes[m])))
                    for m in direct.amplitudes)
        ok &= worst <= 1e-10
    ok &= (time.monotonic() - started) < 30.0
    _report(6, "spectral reconstruction vs direct evolution", ok)


def test_criterion_7_classical_baseline():
    ok = all(q_factor(ClassicalParams(r=r, p=Fraction(1, r + 1))) == 1.0
             for r in range(1, 11))

    params = ClassicalParams(r=3, p=Fraction(1, 4))
    t = 1000 * (3 + 1)
    exact = classical_origin_probability(params, t)
    ok &= abs(stirling_asymptotic(params, t) - exact) / exact <= 1e-3

    t, trials = 400, 1_000_000
    mean_estimate, origin_frequency = classical_monte_carlo(params, t, trials, seed=20260810)
    p = params.p_float
    sigma_mean = math.sqrt(t * params.period ** 2 * p * (1 - p) / trials)
    ok &= abs(mean_estimate - classical_mean(params, t)) <= 4 * sigma_mean
    p0 = classical_origin_probability(params, t)
    sigma_p0 = math.sqrt(p0 * (1 - p0) / trials)
    ok &= abs(origin_frequency - p0) <= 4 * sigma_p0
    ok &= classical_recurrent(params)
    _report(7, "classical baseline", ok)


def test_criterion_8_conservation_suite():
    rng = np.random.default_rng(808)
    ok = True
    for _ in range(10):
        params = WalkParams(r=int(rng.integers(1, 9)), rho=float(rng.uniform(0.0, 1.0)))
        state = make_initial_state(float(rng.uniform(0, 1)),
                                   float(rng.uniform(0, 2 * math.pi)))
        norms = norm_history(state, params, 1000)
        ok &= bool(np.all(np.abs(norms - 1.0) <= 1e-10))
        for checkpoint in (250, 500, 1000):
            psi = evolve(state, params, checkpoint)
            try:
                psi.validate(params)  # support, residue class, norm
            except Exception:
                ok = False
    _report(8, "conservation suite", ok)
