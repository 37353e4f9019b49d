import math

import numpy as np
import pytest

from qufti import (
    DegenerateWeightsError,
    Model,
    SensitivityMethod,
    WeightVector,
    compute_moments,
    derivative_step,
    exact_probability,
    sensitivity_analytic,
    sensitivity_numerical,
    sensitivity_ratio,
)

RNG = np.random.default_rng(4242)

INV_SQRT2 = 1.0 / math.sqrt(2.0)


class TestDerivativeStep:
    def test_floor_for_tiny_phases(self):
        assert derivative_step(0.0) == 1e-6
        assert derivative_step(1e-5) == 1e-6

    def test_proportional_for_large_phases(self):
        assert derivative_step(0.5) == pytest.approx(5e-4)
        assert derivative_step(-0.5) == pytest.approx(5e-4)


class TestNumerical:
    def test_two_mode_binary_weights_is_one_half(self):
        # P = cos(phi)**2 makes the shot-noise sensitivity exactly 1/2 at
        # every phase where the derivative is nonzero.
        w = WeightVector.index0(2)
        for phi in (1e-3, 0.1, 0.5, 1.0):
            r = sensitivity_numerical(Model.INDISTINGUISHABLE, w, phi)
            assert r.method is SensitivityMethod.NUMERICAL
            assert not r.divergent
            assert r.value == pytest.approx(0.5, rel=1e-4)

    def test_linear_three_mode_value(self):
        r = sensitivity_numerical(Model.INDISTINGUISHABLE, WeightVector.linear(3), 1e-3)
        assert r.value == pytest.approx(0.25, rel=5e-3)

    def test_rejects_zero_phase(self):
        with pytest.raises(ValueError):
            sensitivity_numerical(Model.INDISTINGUISHABLE, WeightVector.linear(3), 0.0)

    def test_equal_weights_diverge(self):
        r = sensitivity_numerical(Model.INDISTINGUISHABLE, WeightVector.constant(4), 0.2)
        assert r.divergent
        assert math.isinf(r.value)

    def test_records_step_used(self):
        r = sensitivity_numerical(Model.DISTINGUISHABLE, WeightVector.linear(3), 0.3)
        assert r.derivative_step == pytest.approx(3e-4)

    def test_derivative_matches_quadratic_slope(self):
        # Near phi = 0 the exact curve is 1 - 2 phi**2 M, so the central
        # difference of P must be close to -4 phi M.
        w = WeightVector.linear(4)
        m = compute_moments(w)
        phi, h = 1e-3, 1e-6
        lhs = (
            exact_probability(Model.INDISTINGUISHABLE, w, phi + h)
            - exact_probability(Model.INDISTINGUISHABLE, w, phi - h)
        ) / (2 * h)
        assert lhs == pytest.approx(-4.0 * phi * m.centered_square_sum, rel=1e-2)


class TestAnalytic:
    def test_two_mode_binary_weights(self):
        m = compute_moments(WeightVector.index0(2))
        r = sensitivity_analytic(Model.INDISTINGUISHABLE, m, 2)
        assert r.value == pytest.approx(0.5)
        assert r.method is SensitivityMethod.ANALYTIC

    def test_linear_three_mode_value(self):
        m = compute_moments(WeightVector.linear(3))
        assert sensitivity_analytic(Model.INDISTINGUISHABLE, m, 3).value == pytest.approx(0.25)

    def test_shifting_weights_changes_nothing(self):
        # The limit depends only on the spread of the weights, so the
        # shifted copy (1, 2) of the binary weights gives 1/2 again.  The
        # naive reading "B*n - A" would instead give sqrt(2/56) = 0.189.
        m = compute_moments(WeightVector(np.array([1.0, 2.0])))
        r = sensitivity_analytic(Model.INDISTINGUISHABLE, m, 2)
        assert r.value == pytest.approx(0.5)
        assert abs(r.value - math.sqrt(2.0 / 56.0)) > 0.25

    def test_model_ratio_is_inverse_root_two(self):
        for _ in range(10):
            n = int(RNG.integers(2, 9))
            m = compute_moments(WeightVector(RNG.uniform(-5, 5, size=n)))
            if m.is_degenerate:
                continue
            r_i = sensitivity_analytic(Model.INDISTINGUISHABLE, m, n).value
            r_d = sensitivity_analytic(Model.DISTINGUISHABLE, m, n).value
            assert r_i / r_d == pytest.approx(INV_SQRT2, rel=1e-12)

    def test_rejects_degenerate_weights(self):
        m = compute_moments(WeightVector.constant(3))
        with pytest.raises(DegenerateWeightsError):
            sensitivity_analytic(Model.INDISTINGUISHABLE, m, 3)

    def test_agrees_with_numerical_estimate(self):
        for n in (2, 4, 6):
            w = WeightVector(RNG.uniform(-4, 4, size=n))
            m = compute_moments(w)
            if m.centered_square_sum < 0.25:
                continue
            for model in Model:
                a = sensitivity_analytic(model, m, n).value
                num = sensitivity_numerical(model, w, 1e-3).value
                assert num == pytest.approx(a, rel=1e-2)


class TestRatio:
    def test_linear_weights(self):
        for n in (2, 4, 6):
            r = sensitivity_ratio(WeightVector.linear(n), 1e-3)
            assert abs(r - INV_SQRT2) <= 0.007

    def test_universality_over_random_weights(self):
        # The enhancement is independent of mode count and weight choice.
        count = 0
        while count < 50:
            n = int(RNG.integers(2, 9))
            w = WeightVector(RNG.uniform(-5.0, 5.0, size=n))
            if compute_moments(w).centered_square_sum < 0.25:
                continue
            count += 1
            assert abs(sensitivity_ratio(w, 1e-3) - INV_SQRT2) <= 0.01

    def test_rejects_divergent_inputs(self):
        with pytest.raises(DegenerateWeightsError):
            sensitivity_ratio(WeightVector.constant(3), 1e-3)
