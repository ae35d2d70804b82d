import math
from fractions import Fraction

import numpy as np
import pytest

from biasedwalk import (
    classical_mean,
    classical_monte_carlo,
    classical_origin_probability,
    classical_recurrent,
    q_factor,
    stirling_asymptotic,
)
from biasedwalk.classical import ClassicalParams
from biasedwalk.core import ParameterDomainError


class TestOriginProbability:
    def test_starts_at_one(self):
        assert classical_origin_probability(ClassicalParams(r=4, p=0.3), 0) == 1.0

    def test_symmetric_two_steps(self):
        p0 = classical_origin_probability(ClassicalParams(r=1, p=0.5), 2)
        assert abs(p0 - 0.5) <= 1e-12

    def test_biased_four_steps(self):
        # returning in 4 steps needs exactly one right step:
        # C(4,3)·(3/4)^3·(1/4) = 27/64, confirmed by the scipy pmf oracle
        from scipy.stats import binom
        p0 = classical_origin_probability(ClassicalParams(r=3, p=0.25), 4)
        assert abs(p0 - 27.0 / 64.0) <= 1e-12
        assert abs(p0 - binom.pmf(1, 4, 0.25)) <= 1e-12

    def test_off_residue_exactly_zero(self):
        params = ClassicalParams(r=3, p=0.25)
        for t in (1, 2, 3, 5, 7, 402):
            assert classical_origin_probability(params, t) == 0.0

    def test_positive_exactly_on_residue_for_interior_p(self):
        params = ClassicalParams(r=2, p=0.4)
        for t in range(0, 40):
            p0 = classical_origin_probability(params, t)
            if t % 3 == 0:
                assert p0 > 0.0
            else:
                assert p0 == 0.0

    def test_degenerate_p_never_returns(self):
        for p in (0.0, 1.0):
            assert classical_origin_probability(ClassicalParams(r=1, p=p), 2) == 0.0

    def test_large_t_no_overflow(self):
        p0 = classical_origin_probability(ClassicalParams(r=1, p=0.5), 1_000_000)
        assert 0.0 < p0 < 1.0


class TestQFactor:
    def test_symmetric_walk(self):
        assert q_factor(ClassicalParams(r=1, p=0.5)) == 1.0

    def test_recurrent_point_exact(self):
        for r in range(1, 11):
            assert q_factor(ClassicalParams(r=r, p=Fraction(1, r + 1))) == 1.0

    def test_transient_below_one(self):
        assert q_factor(ClassicalParams(r=3, p=0.5)) < 1.0

    def test_degenerate_p(self):
        assert q_factor(ClassicalParams(r=2, p=0.0)) == 0.0
        assert q_factor(ClassicalParams(r=2, p=1.0)) == 0.0

    def test_bounded_with_equality_only_at_recurrent_point(self):
        for r in range(1, 11):
            p_star = 1.0 / (r + 1)
            for p in np.linspace(0.01, 0.99, 99):
                q = q_factor(ClassicalParams(r=r, p=float(p)))
                assert q <= 1.0
                if abs(p - p_star) > 1e-3:
                    assert q < 1.0


class TestStirling:
    def test_symmetric_walk_large_t(self):
        params = ClassicalParams(r=1, p=0.5)
        exact = classical_origin_probability(params, 1000)
        approx = stirling_asymptotic(params, 1000)
        assert abs(approx - exact) / exact <= 1e-3

    def test_recurrent_biased_walk(self):
        params = ClassicalParams(r=3, p=0.25)
        exact = classical_origin_probability(params, 400)
        approx = stirling_asymptotic(params, 400)
        assert abs(approx - exact) / exact <= 0.05

    def test_transient_walk_suppressed(self):
        assert stirling_asymptotic(ClassicalParams(r=3, p=0.5), 400) < 1e-20

    def test_relative_error_decreases(self):
        for r, p in [(1, 0.5), (3, 0.25), (2, 0.4)]:
            params = ClassicalParams(r=r, p=p)
            errors = []
            for t in range(10 * (r + 1), 100 * (r + 1) + 1, 10 * (r + 1)):
                exact = classical_origin_probability(params, t)
                errors.append(abs(stirling_asymptotic(params, t) - exact) / exact)
            assert all(e2 < e1 for e1, e2 in zip(errors, errors[1:]))

    def test_rejects_off_residue_t(self):
        with pytest.raises(ParameterDomainError):
            stirling_asymptotic(ClassicalParams(r=3, p=0.25), 402)


class TestRecurrent:
    def test_examples(self):
        assert classical_recurrent(ClassicalParams(r=1, p=0.5))
        assert classical_recurrent(ClassicalParams(r=3, p=0.25))
        assert classical_recurrent(ClassicalParams(r=3, p=Fraction(1, 4)))
        assert not classical_recurrent(ClassicalParams(r=3, p=0.26))

    def test_fraction_comparison_is_exact(self):
        assert classical_recurrent(ClassicalParams(r=2, p=Fraction(1, 3)))
        assert not classical_recurrent(ClassicalParams(r=2, p=Fraction(100, 299)))

    def test_equivalent_to_zero_mean(self):
        for r in (1, 2, 5):
            for p in list(np.linspace(0.0, 1.0, 21)) + [1.0 / (r + 1)]:
                params = ClassicalParams(r=r, p=float(p))
                zero_mean = abs(classical_mean(params, 100)) <= 100 * 1e-12
                assert classical_recurrent(params) == zero_mean


class TestMean:
    def test_recurrent_point_zero_for_all_t(self):
        for r in (1, 3, 7):
            params = ClassicalParams(r=r, p=1.0 / (r + 1))
            for t in (0, 10, 1000):
                assert abs(classical_mean(params, t)) <= t * 1e-12

    def test_examples(self):
        assert classical_mean(ClassicalParams(r=3, p=0.5), 100) == 100.0
        assert classical_mean(ClassicalParams(r=1, p=0.0), 10) == -10.0


class TestMonteCarlo:
    def test_deterministic_given_seed(self):
        params = ClassicalParams(r=2, p=0.3)
        first = classical_monte_carlo(params, 60, 10_000, seed=7)
        second = classical_monte_carlo(params, 60, 10_000, seed=7)
        assert first == second

    def test_single_trial_lands_on_lattice(self):
        params = ClassicalParams(r=3, p=0.5)
        t = 17
        for seed in range(5):
            mean_estimate, _ = classical_monte_carlo(params, t, 1, seed=seed)
            m = int(mean_estimate)
            assert m == mean_estimate
            assert -t <= m <= params.r * t
            assert (m + t) % params.period == 0

    def test_within_four_sigma(self):
        params = ClassicalParams(r=3, p=0.25)
        t, trials = 400, 200_000
        mean_estimate, origin_frequency = classical_monte_carlo(params, t, trials, seed=11)
        sigma_mean = math.sqrt(t * params.period ** 2 * 0.25 * 0.75 / trials)
        assert abs(mean_estimate - classical_mean(params, t)) <= 4 * sigma_mean
        p0 = classical_origin_probability(params, t)
        sigma_p0 = math.sqrt(p0 * (1 - p0) / trials)
        assert abs(origin_frequency - p0) <= 4 * sigma_p0

    def test_domain_errors(self):
        with pytest.raises(ParameterDomainError):
            classical_monte_carlo(ClassicalParams(r=1, p=0.5), 10, 0, seed=1)
