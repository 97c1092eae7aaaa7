import math

import numpy as np
import pytest

from knentropy import (
    KNMeanInput,
    Pmf,
    affine_image,
    builtin,
    check_homogeneity,
    check_translativity,
    exponential,
    kn_equivalent,
    kn_mean,
    linear,
    make_kn_function,
    negated,
    phi_q_function,
    power,
    rng_for,
    sample_mean_input,
    uniform,
)
from knentropy.errors import DomainError, ParameterError

HALF = Pmf((("w0", 0.5), ("w1", 0.5)))


class TestBuiltins:
    def test_linear_identity(self):
        psi = linear(1.0, 0.0)
        assert float(psi.forward(3.0)) == 3.0
        assert psi.direction == "increasing"
        assert linear(-2.0, 1.0).direction == "decreasing"

    def test_exponential_hand_value(self):
        psi = exponential(2.0)
        assert float(psi.forward(math.log(2.0))) == pytest.approx(0.5, rel=1e-15)
        assert psi.direction == "decreasing"

    def test_phi_q_classical_is_identity(self):
        psi = phi_q_function(1.0)
        for x in (-2.0, 0.0, 3.7):
            assert float(psi.forward(x)) == x

    def test_phi_q_is_increasing_for_large_q(self):
        assert phi_q_function(5.0).direction == "increasing"

    def test_invalid_parameters(self):
        with pytest.raises(ParameterError):
            linear(0.0)
        with pytest.raises(ParameterError):
            exponential(1.0)
        with pytest.raises(ParameterError):
            power(0.0)
        with pytest.raises(ParameterError):
            power(-2.0)

    def test_builtin_dispatch(self):
        assert builtin("power", 2.0).name == "power(2)"
        with pytest.raises(ParameterError):
            builtin("sine", 1.0)

    def test_validation_catches_non_monotone_forward(self):
        with pytest.raises(ParameterError):
            make_kn_function("square", lambda x: np.asarray(x) ** 2,
                             lambda y: np.sqrt(y), domain=(-1.0, 1.0))

    def test_validation_catches_wrong_inverse(self):
        with pytest.raises(ParameterError):
            make_kn_function("offbyone", lambda x: np.asarray(x) + 1.0,
                             lambda y: np.asarray(y) + 1.0)


class TestKNMean:
    def test_linear_is_the_weighted_mean(self):
        inp = KNMeanInput((0.0, 1.0), HALF)
        assert kn_mean(inp, linear(1.0, 0.0)) == pytest.approx(0.5, abs=1e-15)

    def test_exponential_hand_value(self):
        inp = KNMeanInput((0.0, math.log(2.0)), HALF)
        # psi^{-1}(0.5*1 + 0.5*0.5) = -log(0.75)
        assert kn_mean(inp, exponential(2.0)) == pytest.approx(-math.log(0.75), abs=1e-14)

    def test_degenerate_weights_return_the_value(self):
        weights = Pmf((("w0", 1.0), ("w1", 0.0)))
        for psi in (linear(2.0, 1.0), exponential(0.5), power(3.0), phi_q_function(2.0)):
            assert kn_mean(KNMeanInput((3.7, 0.0), weights), psi) == 3.7

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            KNMeanInput((1.0,), HALF)

    def test_domain_violation(self):
        inp = KNMeanInput((-1.0, 2.0), HALF)
        with pytest.raises(DomainError):
            kn_mean(inp, power(2.0))

    def test_mean_bounds_over_random_inputs(self):
        rng = rng_for(3, "test:mean_bounds")
        for psi in (linear(1.0, 0.0), exponential(2.0), power(2.0), phi_q_function(0.5)):
            for _ in range(200):
                inp = sample_mean_input(rng, psi)
                m = kn_mean(inp, psi)
                vals, probs = inp.support_arrays()
                assert vals.min() - 1e-12 <= m <= vals.max() + 1e-12
                if vals.max() - vals.min() > 1e-6:
                    assert vals.min() < m < vals.max()

    def test_matches_numpy_average_for_linear(self):
        rng = rng_for(4, "test:linear_mean")
        psi = linear(3.0, -2.0)
        for _ in range(100):
            inp = sample_mean_input(rng, psi)
            vals, probs = inp.support_arrays()
            assert kn_mean(inp, psi) == pytest.approx(float(np.average(vals, weights=probs)), abs=1e-12)


class TestTranslativity:
    def test_linear_residual_vanishes(self):
        inp = KNMeanInput((0.0, 1.0), HALF)
        assert check_translativity(linear(2.0, 1.0), 5.0, inp) <= 1e-12

    def test_exponential_residual_vanishes(self):
        inp = KNMeanInput((0.0, 1.0), HALF)
        assert check_translativity(exponential(2.0), 1.0, inp) <= 1e-12

    def test_power_hand_witness(self):
        inp = KNMeanInput((0.0, 1.0), HALF)
        expected = abs(math.sqrt(2.5) - (math.sqrt(0.5) + 1.0))
        got = check_translativity(power(2.0), 1.0, inp)
        assert got == pytest.approx(expected, abs=1e-13)
        assert got == pytest.approx(0.126, abs=5e-4)

    def test_shift_outside_domain(self):
        inp = KNMeanInput((0.0, 1.0), HALF)
        with pytest.raises(DomainError):
            check_translativity(power(2.0), -0.5, inp)


class TestHomogeneity:
    def test_linear_residual_vanishes(self):
        inp = KNMeanInput((0.0, 1.0), HALF)
        assert check_homogeneity(linear(1.0, 0.0), 3.0, inp) <= 1e-12

    def test_exponential_hand_witness(self):
        inp = KNMeanInput((0.0, 1.0), HALF)
        expected = abs(-math.log(0.5 * (1 + math.exp(-2.0)))
                       - 2.0 * -math.log(0.5 * (1 + math.exp(-1.0))))
        got = check_homogeneity(exponential(2.0), 2.0, inp)
        assert got == pytest.approx(expected, abs=1e-13)
        assert got == pytest.approx(0.1937, abs=5e-4)

    def test_unit_scale_is_exact(self):
        inp = KNMeanInput((0.0, 1.0), HALF)
        for psi in (exponential(2.0), power(2.0)):
            assert check_homogeneity(psi, 1.0, inp) == 0.0

    def test_zero_scale_rejected(self):
        with pytest.raises(ParameterError):
            check_homogeneity(linear(1.0, 0.0), 0.0, KNMeanInput((0.0, 1.0), HALF))


class TestKNEquivalence:
    def test_affine_images_are_equivalent(self):
        rng = rng_for(5, "test:affine")
        for base in (linear(1.0, 0.0), exponential(2.0), power(2.0), phi_q_function(2.0)):
            a = float(rng.uniform(0.5, 2.0)) * (-1.0 if rng.uniform() < 0.5 else 1.0)
            b = float(rng.uniform(-1.0, 1.0))
            report = kn_equivalent(base, affine_image(base, a, b), trials=200, seed=9)
            assert report.verdict == "pass", report.theorem_id
            assert report.details["affine_fit_residual"] <= 1e-8

    def test_negation_is_equivalent(self):
        report = kn_equivalent(exponential(2.0), negated(exponential(2.0)), trials=200, seed=9)
        assert report.verdict == "pass"

    def test_phi_q_matches_the_exponential_family(self):
        report = kn_equivalent(exponential(2.0), phi_q_function(2.0), trials=500, seed=9)
        assert report.verdict == "pass"
        assert report.max_residual <= 1e-9
        # phi_q = a * exp((1-q)x) + b with a = 1/(1-q), b = -1/(1-q)
        assert report.details["affine_slope"] == pytest.approx(-1.0, abs=1e-6)
        assert report.details["affine_offset"] == pytest.approx(1.0, abs=1e-6)

    def test_linear_vs_power_is_not_equivalent(self):
        report = kn_equivalent(linear(1.0, 0.0), power(2.0), trials=200, seed=9)
        assert report.verdict == "counterexample_found"
        w = report.witness
        assert w["recheck_residual"] == pytest.approx(w["residual"], rel=1e-6)
        assert report.details["affine_fit_residual"] > 1e-3

    def test_disjoint_domains_raise(self):
        left = make_kn_function("left", lambda x: np.asarray(x, dtype=float),
                                lambda y: np.asarray(y, dtype=float), domain=(0.0, 1.0))
        right = make_kn_function("right", lambda x: np.asarray(x, dtype=float),
                                 lambda y: np.asarray(y, dtype=float), domain=(2.0, 3.0))
        with pytest.raises(DomainError):
            kn_equivalent(left, right, trials=10, seed=0)

    def test_trivial_witness_means_disagree(self):
        # values (0, 1) with equal weights: linear mean 0.5, quadratic mean sqrt(0.5)
        inp = KNMeanInput((0.0, 1.0), uniform(2))
        assert abs(kn_mean(inp, linear(1.0, 0.0)) - kn_mean(inp, power(2.0))) == pytest.approx(
            math.sqrt(0.5) - 0.5, abs=1e-14)
