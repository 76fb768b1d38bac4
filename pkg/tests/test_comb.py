"""Comb construction, bandpass filtering, and field synthesis."""

import numpy as np
import pytest

from cipadc import EmptyCombError, GridSpectrum, apply_obpf, field_waveform, uniform_comb


class TestUniformComb:
    def test_three_lines(self):
        comb = uniform_comb(3, 10e9, 0.0, 1.0)
        assert comb.half_width == 1
        assert comb.amplitude(-1) == comb.amplitude(0) == comb.amplitude(1) == 1.0

    def test_single_line_degenerate(self):
        comb = uniform_comb(1, 10e9)
        assert comb.half_width == 0
        assert comb.amplitudes.tolist() == [1.0]

    def test_fifteen_lines(self):
        comb = uniform_comb(15, 10e9)
        assert comb.amplitudes.size == 15
        assert np.all(comb.amplitudes == 1.0)

    @pytest.mark.parametrize("bad", [0, -3, 2, 4])
    def test_rejects_even_or_nonpositive_counts(self, bad):
        with pytest.raises(ValueError):
            uniform_comb(bad, 10e9)

    def test_rejects_nonpositive_spacing(self):
        with pytest.raises(ValueError):
            uniform_comb(3, 0.0)
        with pytest.raises(ValueError):
            uniform_comb(3, -1e9)

    def test_rejects_nonpositive_amplitude(self):
        with pytest.raises(ValueError):
            uniform_comb(3, 10e9, amplitude=0.0)

    def test_amplitudes_are_immutable(self):
        comb = uniform_comb(3, 10e9)
        with pytest.raises(ValueError):
            comb.amplitudes[0] = 5.0


class TestApplyObpf:
    def test_masks_fifteen_lines_down_to_three(self):
        comb = uniform_comb(15, 10e9)
        filtered = apply_obpf(comb, {-1: 1.0, 0: 1.0, 1: 1.0})
        assert filtered.half_width == 1
        assert np.all(filtered.amplitudes == 1.0)

    def test_identity_weights_leave_comb_unchanged(self):
        comb = uniform_comb(3, 10e9)
        same = apply_obpf(comb, {m: 1.0 for m in (-1, 0, 1)})
        assert same.half_width == comb.half_width
        np.testing.assert_array_equal(same.amplitudes, comb.amplitudes)

    def test_halves_edge_lines(self):
        comb = uniform_comb(7, 10e9)
        weights = {m: 1.0 for m in range(-3, 4)}
        weights[-3] = weights[3] = 0.5
        filtered = apply_obpf(comb, weights)
        assert filtered.amplitude(3) == 0.5
        assert filtered.amplitude(-3) == 0.5
        assert filtered.amplitude(0) == 1.0

    def test_all_zero_result_is_an_error(self):
        comb = uniform_comb(3, 10e9)
        with pytest.raises(EmptyCombError):
            apply_obpf(comb, {})

    def test_out_of_range_key_is_an_error(self):
        comb = uniform_comb(3, 10e9)
        with pytest.raises(ValueError):
            apply_obpf(comb, {5: 1.0})

    def test_weight_outside_unit_interval_is_an_error(self):
        comb = uniform_comb(3, 10e9)
        with pytest.raises(ValueError):
            apply_obpf(comb, {0: 1.5})


class TestFieldWaveform:
    def test_single_line_is_constant(self):
        comb = uniform_comb(1, 10e9)
        for t in (0.0, 1.3e-10, 7e-9):
            assert field_waveform(comb, t) == pytest.approx(1 + 0j)

    def test_three_lines_in_phase_at_zero(self):
        comb = uniform_comb(3, 10e9)
        assert field_waveform(comb, 0.0) == pytest.approx(3 + 0j)

    def test_three_lines_at_half_period(self):
        # exp(+j*pi) + 1 + exp(-j*pi) = -1
        comb = uniform_comb(3, 10e9)
        t = 1 / (2 * 10e9)
        assert field_waveform(comb, t) == pytest.approx(-1 + 0j, abs=1e-12)

    def test_accepts_grid_spectrum(self):
        grid = GridSpectrum(5e9, np.array([0.25, 0.5, 0.25]))
        assert field_waveform(grid, 0.0) == pytest.approx(1 + 0j)

    def test_periodicity(self):
        """The waveform of any line spectrum repeats every 1/spacing."""
        rng = np.random.default_rng(7)
        comb = uniform_comb(7, 10e9)
        period = 1 / comb.line_spacing_hz
        for t in rng.uniform(0, 5 * period, size=20):
            a = field_waveform(comb, t)
            b = field_waveform(comb, t + period)
            assert abs(a - b) <= 1e-12 * max(abs(a), 1.0)

    def test_parseval(self):
        """Mean power over one period equals the summed line powers.

        Uses plain quadrature on a dense uniform grid, independent of any
        spectral identity in the implementation.
        """
        rng = np.random.default_rng(11)
        amps = rng.uniform(0.1, 2.0, size=9) * np.exp(2j * np.pi * rng.uniform(size=9))
        from cipadc import OpticalComb

        comb = OpticalComb(10e9, amps)
        period = 1 / comb.line_spacing_hz
        t = np.linspace(0.0, period, 4096, endpoint=False)
        mean_power = np.mean(np.abs(field_waveform(comb, t)) ** 2)
        expected = np.sum(np.abs(amps) ** 2)
        assert abs(mean_power - expected) <= 1e-9 * expected
