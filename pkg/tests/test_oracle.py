"""Time-domain brute-force validation against the analytic line-spectrum path."""

import numpy as np
import pytest

from cipadc import (
    GridMismatchError,
    OracleConfig,
    beat_harmonics,
    compare_response,
    demultiplex,
    measured_harmonics,
    oracle_response_db,
    preset,
    reference_tone_hz,
    scenario_from_dict,
    synthesize_photocurrent,
    tone_magnitude,
)

CFG = OracleConfig()


def scenario_of(num_lines, spacing_hz, num_channels):
    return scenario_from_dict(
        {
            "comb": {"num_lines": num_lines, "spacing_hz": spacing_hz},
            "otdm": {"num_channels": num_channels},
        }
    )


class TestToneMagnitude:
    def test_constant_series(self):
        series = np.full(64, 2.5)
        assert tone_magnitude(series, 32e9, 0.0) == pytest.approx(2.5)

    def test_pure_cosine_on_bin(self):
        rate, n = 64e9, 128
        t = np.arange(n) / rate
        series = 1.7 * np.cos(2 * np.pi * 4e9 * t + 0.3)
        assert tone_magnitude(series, rate, 4e9) == pytest.approx(1.7, rel=1e-12)

    def test_off_bin_target_is_refused(self):
        series = np.zeros(64)
        with pytest.raises(GridMismatchError):
            tone_magnitude(series, 32e9, 0.7e9)

    def test_target_above_nyquist_is_refused(self):
        with pytest.raises(GridMismatchError):
            tone_magnitude(np.zeros(64), 32e9, 17e9)


class TestSynthesize:
    def test_cw_line_gives_constant_photocurrent(self):
        record = synthesize_photocurrent(scenario_of(1, 10e9, 1), 1, CFG)
        np.testing.assert_allclose(record.dense_series, 1.0, rtol=1e-12)

    def test_dense_series_is_pulse_periodic(self):
        scenario = scenario_of(3, 10e9, 1)
        record = synthesize_photocurrent(scenario, 1, CFG)
        per_period = round(record.dense_rate_hz / 10e9)
        np.testing.assert_allclose(
            record.dense_series, np.roll(record.dense_series, per_period), rtol=1e-9
        )

    def test_mean_photocurrent_is_total_line_power(self):
        scenario = scenario_of(3, 20e9, 2)
        spectrum = demultiplex(scenario.build_comb(), scenario.build_chain(), 1)
        expected = np.sum(np.abs(spectrum.amplitudes) ** 2)
        record = synthesize_photocurrent(scenario, 1, CFG)
        assert np.mean(record.dense_series) == pytest.approx(expected, rel=1e-9)

    def test_eadc_series_length_and_rate(self):
        scenario = scenario_of(3, 20e9, 2)
        record = synthesize_photocurrent(scenario, 2, CFG)
        assert record.eadc_rate_hz == 10e9
        assert record.eadc_series.size == round(10e9 / CFG.base_resolution_hz)

    def test_noncommensurate_tone_is_refused(self):
        with pytest.raises(GridMismatchError):
            synthesize_photocurrent(scenario_of(3, 10e9, 1), 1, CFG, tone_hz=0.3e9)

    def test_noncommensurate_channel_rate_is_refused(self):
        with pytest.raises(GridMismatchError):
            synthesize_photocurrent(scenario_of(3, 10.1e9, 1), 1, CFG)


class TestHarmonicEquivalence:
    def test_bare_comb_harmonics(self):
        # three unit lines beat into weights (3, 2, 1)
        weights = measured_harmonics(scenario_of(3, 10e9, 1), CFG, count=3)
        np.testing.assert_allclose(weights / weights[0], [1.0, 2 / 3, 1 / 3], rtol=1e-9)

    def test_demultiplexed_harmonics_match_edge_halved_weights(self):
        weights = measured_harmonics(scenario_of(3, 20e9, 2), CFG, count=7)
        expected = np.array([5.5, 5, 4, 3, 2, 1, 0.25])
        np.testing.assert_allclose(weights / weights[0], expected / expected[0], rtol=1e-9)

    @pytest.mark.parametrize("name", ["fig7a-7line", "fig7c-4ch-3line", "fig8-single-20g"])
    def test_matches_analytic_autocorrelation_on_presets(self, name):
        scenario = preset(name)
        analytic = beat_harmonics(demultiplex(scenario.build_comb(), scenario.build_chain(), 1))
        weights = measured_harmonics(scenario, CFG, count=analytic.num_lines)
        np.testing.assert_allclose(
            weights / weights[0], analytic.weights / analytic.weights[0], rtol=1e-9, atol=1e-12
        )


class TestToneResponse:
    def test_first_step_ratio_two_thirds(self):
        """A 12 GHz tone into the 3-line single-channel converter aliases to
        2 GHz with two thirds of the baseband response."""
        scenario = scenario_of(3, 10e9, 1)
        ref = reference_tone_hz(scenario, CFG)
        rec_ref = synthesize_photocurrent(scenario, 1, CFG, tone_hz=ref)
        mag_ref = tone_magnitude(rec_ref.eadc_series, rec_ref.eadc_rate_hz, ref)
        rec = synthesize_photocurrent(scenario, 1, CFG, tone_hz=12e9)
        mag = tone_magnitude(rec.eadc_series, rec.eadc_rate_hz, 2e9)
        assert mag / mag_ref == pytest.approx(2 / 3, rel=1e-9)

    def test_compare_response_on_clean_points(self):
        deviation = compare_response(scenario_of(3, 10e9, 1), [3e9, 12e9, 22e9], CFG)
        assert deviation < 1e-9

    def test_deviation_sits_far_under_a_linear_drive_envelope(self):
        """The neglected-beat-term budget: even a tiny envelope
        10*log10(1 + c*alpha) with c = 1e-6 dominates the measured gap."""
        scenario = scenario_of(3, 10e9, 1)
        for alpha in (0.1, 0.05, 0.01):
            cfg = OracleConfig(alpha_override=alpha)
            deviation = compare_response(scenario, [3e9, 12e9, 22e9], cfg)
            assert deviation <= 10 * np.log10(1 + 1e-6 * alpha)

    def test_deviations_identical_across_channels(self):
        scenario = scenario_of(3, 20e9, 2)
        grid = [3e9, 12e9, 22e9, 33e9]
        dev1 = compare_response(scenario, grid, CFG, channel=1)
        dev2 = compare_response(scenario, grid, CFG, channel=2)
        assert abs(dev1 - dev2) < 1e-9

    def test_per_point_values_identical_across_channels(self):
        scenario = scenario_of(3, 20e9, 2)
        grid = [1.5e9, 12e9, 28.5e9]
        db1 = oracle_response_db(scenario, grid, CFG, channel=1)
        db2 = oracle_response_db(scenario, grid, CFG, channel=2)
        for a, b in zip(db1, db2):
            assert abs(a - b) < 1e-9

    def test_boundary_point_is_rejected(self):
        with pytest.raises(ValueError):
            compare_response(scenario_of(3, 10e9, 1), [5e9], CFG)

    def test_harmonic_point_is_rejected(self):
        with pytest.raises(ValueError):
            compare_response(scenario_of(3, 10e9, 1), [10e9], CFG)

    def test_grid_without_analytic_values_is_rejected(self):
        # 3-line single channel has no harmonics past k=2
        with pytest.raises(ValueError):
            compare_response(scenario_of(3, 10e9, 1), [33e9], CFG)

    def test_oracle_response_db_marks_undefined_points(self):
        scenario = scenario_of(3, 10e9, 1)
        values = oracle_response_db(scenario, [3e9, 5e9, 10e9, 12e9], CFG)
        assert values[0] == pytest.approx(0.0, abs=1e-9)
        assert values[1] is None
        assert values[2] is None
        assert values[3] == pytest.approx(10 * np.log10(2 / 3), abs=1e-9)

    def test_below_noise_points_report_their_leftovers(self):
        # beyond the last harmonic the oracle still measures something tiny
        scenario = scenario_of(3, 10e9, 1)
        (value,) = oracle_response_db(scenario, [33e9], CFG)
        assert value is not None
        assert value < -100.0
