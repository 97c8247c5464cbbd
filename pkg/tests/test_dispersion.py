"""Dispersion model construction, calibration and serialization."""
import math

import numpy as np
import pytest

from pumpslab import (
    CalibrationError,
    DispersionModel,
    OutOfBandError,
    calibrate_degenerate_angle,
)

Q_D_10DEG = math.sin(math.radians(10.0)) ** 2  # 0.030153689607...


def bisect_sqrt(target, lo=1.0, hi=3.0):
    """Independent square root via bisection on x^2 - target."""
    for _ in range(120):
        mid = 0.5 * (lo + hi)
        if mid * mid < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class TestConstantModel:
    def test_vacuum_identity(self):
        model = DispersionModel.constant(1.0)
        assert model.mu(0.7) == 1.0
        assert model.mu(123.0) == 1.0

    def test_constant_value(self):
        model = DispersionModel.constant(1.5)
        assert model.mu(0.3) == 1.5
        np.testing.assert_allclose(model.mu(np.array([0.1, 2.0])), 1.5)

    def test_below_unity_rejected(self):
        with pytest.raises(ValueError):
            DispersionModel.constant(0.8)


class TestCalibratedModel:
    def test_anchor_difference_matches_target(self):
        model = calibrate_degenerate_angle(math.radians(10.0), 1.51)
        gap = model.mu(0.5) ** 2 - model.mu(1.0) ** 2
        assert abs(gap - Q_D_10DEG) / Q_D_10DEG < 1e-10

    def test_mu1_against_bisection_oracle(self):
        model = calibrate_degenerate_angle(math.radians(10.0), 1.51)
        oracle = bisect_sqrt(1.51**2 + Q_D_10DEG)
        assert abs(model.mu(0.5) - oracle) < 1e-12
        # frozen oracle output, coarse check against the rounded quote
        assert abs(model.mu(0.5) - 1.5199518708192854) < 1e-12
        assert abs(model.mu(0.5) - 1.519945) < 1e-4

    def test_mu3_linearized_upper_anchor(self):
        model = calibrate_degenerate_angle(math.radians(10.0), 1.51)
        oracle = bisect_sqrt(1.51**2 - Q_D_10DEG)
        assert abs(model.mu(1.5) - oracle) < 1e-12
        assert abs(model.mu(1.5) - 1.4999821033575542) < 1e-12
        assert abs(model.mu(1.5) - 1.499965) < 1e-4

    def test_zero_angle_is_dispersionless(self):
        model = calibrate_degenerate_angle(0.0, 1.51)
        assert model.mu(0.5) == pytest.approx(1.51, abs=1e-15)
        assert model.mu(1.5) == pytest.approx(1.51, abs=1e-15)

    def test_interior_is_smooth_and_monotone(self):
        model = calibrate_degenerate_angle(math.radians(10.0), 1.51)
        w = np.linspace(*model.band, 800)
        mu = model.mu(w)
        assert np.all(np.diff(mu) < 0.0)  # anomalous ordering by construction
        assert np.all(mu >= 1.0)
        assert np.max(np.abs(np.diff(mu))) < 1e-3  # no jumps

    def test_anchor_difference_across_random_targets(self):
        rng = np.random.default_rng(17)
        for _ in range(30):
            theta = math.radians(rng.uniform(0.5, 20.0))
            mu2 = rng.uniform(1.2, 1.9)
            model = calibrate_degenerate_angle(theta, mu2)
            q_d = math.sin(theta) ** 2
            assert model.mu(0.5) ** 2 - model.mu(1.0) ** 2 == pytest.approx(
                q_d, rel=1e-12
            )
            assert model.mu(1.5) ** 2 == pytest.approx(
                mu2 * mu2 - q_d, rel=1e-12
            )

    def test_infeasible_target(self):
        with pytest.raises(CalibrationError):
            calibrate_degenerate_angle(math.radians(30.0), 1.05)

    def test_bad_inputs(self):
        with pytest.raises(CalibrationError):
            calibrate_degenerate_angle(math.radians(95.0), 1.5)
        with pytest.raises(CalibrationError):
            calibrate_degenerate_angle(math.radians(10.0), 0.99)


class TestBandGuard:
    def test_out_of_band_is_error_not_extrapolation(self):
        model = calibrate_degenerate_angle(math.radians(10.0), 1.51)
        lo, hi = model.band
        with pytest.raises(OutOfBandError):
            model.mu(hi * 1.01)
        with pytest.raises(OutOfBandError):
            model.mu(lo * 0.99)
        # endpoints are inclusive
        model.mu(lo)
        model.mu(hi)

    def test_array_band_check(self):
        model = DispersionModel.constant(1.2, band=(0.1, 2.0))
        with pytest.raises(OutOfBandError):
            model.mu(np.array([0.5, 3.0]))


class TestRationalModel:
    def test_monotone_within_band(self):
        model = DispersionModel.rational(2.2, -0.5, 9.0, band=(0.1, 2.0))
        w = np.linspace(0.1, 2.0, 500)
        mu = model.mu(w)
        assert np.all(np.diff(mu) < 0.0)
        assert np.all(mu >= 1.0)

    def test_pole_inside_band_rejected(self):
        with pytest.raises(ValueError):
            DispersionModel.rational(2.2, -0.5, 1.0, band=(0.1, 2.0))

    def test_deterministic(self):
        model = DispersionModel.rational(2.2, 0.3, 9.0, band=(0.1, 2.0))
        assert model.mu(0.77) == model.mu(0.77)


class TestSerialization:
    @pytest.mark.parametrize(
        "model",
        [
            DispersionModel.constant(1.5, band=(0.2, 3.0)),
            DispersionModel.rational(2.2, -0.5, 9.0, band=(0.1, 2.0)),
            calibrate_degenerate_angle(math.radians(10.0), 1.51),
        ],
        ids=["constant", "rational", "tabulated"],
    )
    def test_round_trip_full_precision(self, model):
        clone = DispersionModel.from_record(model.to_record())
        assert clone.kind == model.kind
        assert clone.band == model.band
        w = np.linspace(*model.band, 257)
        np.testing.assert_array_equal(clone.mu(w), model.mu(w))

    def test_missing_field(self):
        with pytest.raises(ValueError):
            DispersionModel.from_record("kind=constant\nvalue=1.5\n")
