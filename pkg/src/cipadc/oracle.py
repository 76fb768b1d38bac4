"""Independent time-domain validation of the analytic response model.

The analytic path works entirely on line coefficients.  This module
cross-checks it by brute force: synthesize the modulated optical field
sample by sample, gate it with the switching windows evaluated as time
functions (never reusing the analytic Fourier coefficients), square-law
detect, band-limit with the rectangular photodetector model, and sample
at the channel quantizer instants.  Tone magnitudes are then read off
exact DFT bins.

Everything runs on a commensurate grid: every frequency in play must be
an integer multiple of the base resolution, and the record spans exactly
1 / base_resolution seconds.  DFT bins are then leak-free without
windowing, so comparisons are limited by round-off, not by estimator
bias.  Off-grid frequencies are refused, never rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import GridMismatchError
from .response import FLAG_BOUNDARY, channel_output, scenario_harmonics
from .sampling import single_tone, modulate
from .scenario import SimScenario


@dataclass(frozen=True)
class OracleConfig:
    """Commensurate-grid settings for the time-domain synthesis.

    ``base_resolution_hz`` is the frequency quantum (and the reciprocal of
    the record duration); ``oversample_factor`` scales the dense rate
    relative to the highest spectral component of the composed field;
    ``alpha_override`` is the small-signal modulation index used for swept
    tones.
    """

    base_resolution_hz: float = 0.5e9
    oversample_factor: int = 8
    alpha_override: float = 0.05

    def __post_init__(self) -> None:
        if self.base_resolution_hz <= 0:
            raise ValueError(f"base_resolution_hz must be > 0, got {self.base_resolution_hz!r}")
        if self.oversample_factor < 8:
            raise ValueError(f"oversample_factor must be >= 8, got {self.oversample_factor!r}")
        if not 0.0 < self.alpha_override <= 1.0:
            raise ValueError(f"alpha_override must be in (0, 1], got {self.alpha_override!r}")

    @property
    def duration_s(self) -> float:
        return 1.0 / self.base_resolution_hz


@dataclass(frozen=True)
class PhotocurrentRecord:
    """One synthesized channel record.

    ``dense_series`` is the raw photocurrent on the dense grid;
    ``eadc_series`` is the photodetector-filtered photocurrent decimated to
    the channel quantizer instants (n-1)*T_S + j*N*T_S.
    """

    dense_series: np.ndarray
    dense_rate_hz: float
    eadc_series: np.ndarray
    eadc_rate_hz: float
    channel: int


def _grid_multiple(freq_hz: float, base_hz: float, what: str) -> int:
    ratio = freq_hz / base_hz
    nearest = round(ratio)
    if abs(ratio - nearest) > 1e-6:
        raise GridMismatchError(
            f"{what} = {freq_hz:g} Hz is not an integer multiple of the "
            f"base resolution {base_hz:g} Hz"
        )
    return int(nearest)


def synthesize_photocurrent(
    scenario: SimScenario,
    channel: int,
    cfg: OracleConfig,
    tone_hz: Optional[float] = None,
) -> PhotocurrentRecord:
    """Brute-force photocurrent of one channel, optionally with one input tone.

    The dense rate is an integer multiple of the pulse rate (hence of the
    channel rate), chosen at least ``oversample_factor`` times the highest
    spectral component of the composed field, so both the quantizer offsets
    and the decimation stride land exactly on dense samples.
    """
    base = cfg.base_resolution_hz
    fs = scenario.spacing_hz
    n_ch = scenario.num_channels
    if not 1 <= channel <= n_ch:
        raise ValueError(f"channel must be in [1, {n_ch}], got {channel!r}")
    _grid_multiple(fs / n_ch, base, "channel rate")
    if tone_hz is not None:
        if tone_hz <= 0:
            raise ValueError(f"tone_hz must be > 0, got {tone_hz!r}")
        _grid_multiple(tone_hz, base, "input tone")

    comb = scenario.build_comb()
    if tone_hz is None:
        offsets_hz = comb.offsets * comb.line_spacing_hz
        amplitudes = np.asarray(comb.amplitudes)
    else:
        components = modulate(comb, single_tone(tone_hz, cfg.alpha_override))
        offsets_hz = components.offsets_hz
        amplitudes = components.amplitudes

    chain = scenario.build_chain()
    f_max = float(np.max(np.abs(offsets_hz)))
    f_max += sum(stage.driver_freq_hz for stage in chain.stages)
    mult = max(1, math.ceil(cfg.oversample_factor * f_max / fs))
    dense_rate = mult * fs
    n_dense = round(dense_rate / base)

    t = np.arange(n_dense) / dense_rate
    field = amplitudes @ np.exp(2j * np.pi * np.outer(offsets_hz, t))

    # Channel n sees every window delayed by its (n-1)*T_S pulse slot.
    t_slot = t - (channel - 1) * chain.sample_period_s
    for stage in chain.stages:
        inv_eps = 0.0 if math.isinf(stage.extinction_ratio) else 1.0 / stage.extinction_ratio
        window = (stage.alpha_max / 2.0) * (
            (1.0 + inv_eps)
            + (1.0 - inv_eps)
            * stage.mu
            * np.cos(2.0 * np.pi * stage.driver_freq_hz * t_slot - stage.driver_phase_rad)
        )
        field = field * window

    params = scenario.detection_params()
    photocurrent = (
        params.load_resistance_ohm * params.responsivity_a_per_w**2 * np.abs(field) ** 2
    )

    # Rectangular photodetector low-pass (closed at the channel Nyquist
    # edge), then decimation to the quantizer instants.
    spectrum = np.fft.rfft(photocurrent)
    bin_freqs = np.arange(spectrum.size) * base
    mask = bin_freqs <= params.pd_cutoff_hz * (1.0 + 1e-12)
    filtered = np.fft.irfft(spectrum * mask, n=n_dense)

    offset_idx = (channel - 1) * mult
    eadc_series = filtered[offset_idx :: mult * n_ch]
    return PhotocurrentRecord(
        dense_series=photocurrent,
        dense_rate_hz=dense_rate,
        eadc_series=eadc_series,
        eadc_rate_hz=fs / n_ch,
        channel=channel,
    )


def tone_magnitude(series: np.ndarray, sample_rate_hz: float, target_hz: float) -> float:
    """One-sided DFT magnitude at an exact bin (DC unscaled, others doubled)."""
    series = np.asarray(series, dtype=float)
    n = series.size
    if target_hz < 0:
        raise ValueError(f"target_hz must be >= 0, got {target_hz!r}")
    if target_hz > sample_rate_hz / 2 * (1.0 + 1e-12):
        raise GridMismatchError(
            f"target {target_hz:g} Hz is above the Nyquist frequency {sample_rate_hz / 2:g} Hz"
        )
    bin_width = sample_rate_hz / n
    k = _grid_multiple(target_hz, bin_width, "target frequency")
    coeff = np.fft.rfft(series)[k] / n
    magnitude = abs(coeff)
    return float(magnitude if k == 0 else 2.0 * magnitude)


def measured_harmonics(
    scenario: SimScenario,
    cfg: OracleConfig,
    channel: int = 1,
    count: Optional[int] = None,
) -> np.ndarray:
    """Harmonic weights of the unmodulated photocurrent, oracle-side.

    Reads the dense-series DFT at k * channel_rate and converts the
    one-sided magnitudes to spectral-line weights (halving the doubled
    non-DC bins) so the result is directly comparable, after normalization,
    with the analytic autocorrelation weights.
    """
    record = synthesize_photocurrent(scenario, channel, cfg, tone_hz=None)
    delta = scenario.channel_spacing_hz
    if count is None:
        count = int(record.dense_rate_hz / 2 / delta) + 1
    weights = np.empty(count)
    for k in range(count):
        mag = tone_magnitude(record.dense_series, record.dense_rate_hz, k * delta)
        weights[k] = mag if k == 0 else mag / 2.0
    return weights


def reference_tone_hz(scenario: SimScenario, cfg: OracleConfig) -> float:
    """In-band (zeroth-step) reference tone: delta/4 snapped down to the grid."""
    delta = scenario.channel_spacing_hz
    k = math.floor(delta / (4.0 * cfg.base_resolution_hz))
    if k < 1:
        raise GridMismatchError(
            f"base resolution {cfg.base_resolution_hz:g} Hz is too coarse for the "
            f"channel spacing {delta:g} Hz"
        )
    return k * cfg.base_resolution_hz


def _measured_response_db(
    scenario: SimScenario,
    f0_hz: float,
    alias_hz: float,
    cfg: OracleConfig,
    channel: int,
    ref_magnitude: float,
) -> float:
    record = synthesize_photocurrent(scenario, channel, cfg, tone_hz=f0_hz)
    magnitude = tone_magnitude(record.eadc_series, record.eadc_rate_hz, alias_hz)
    return float(10.0 * np.log10(magnitude / ref_magnitude))


def _reference_magnitude(scenario: SimScenario, cfg: OracleConfig, channel: int) -> float:
    ref_hz = reference_tone_hz(scenario, cfg)
    record = synthesize_photocurrent(scenario, channel, cfg, tone_hz=ref_hz)
    return tone_magnitude(record.eadc_series, record.eadc_rate_hz, ref_hz)


def oracle_response_db(
    scenario: SimScenario,
    f0_values: Sequence[float],
    cfg: OracleConfig,
    channel: int = 1,
) -> list[Optional[float]]:
    """Per-tone oracle response in dB relative to the zeroth-step reference.

    Entries are None where the measurement is undefined: tones exactly on a
    step boundary (the replica folds onto the channel Nyquist edge) or
    exactly on a harmonic (the replica folds onto DC under the pulse-train
    line).
    """
    delta = scenario.channel_spacing_hz
    ref_magnitude = _reference_magnitude(scenario, cfg, channel)
    results: list[Optional[float]] = []
    for f0 in f0_values:
        f0 = float(f0)
        k0 = math.floor(f0 / delta + 0.5)
        alias = abs(k0 * delta - f0)
        if alias == 0.0 or (f0 / delta) - math.floor(f0 / delta) == 0.5:
            results.append(None)
            continue
        results.append(_measured_response_db(scenario, f0, alias, cfg, channel, ref_magnitude))
    return results


def compare_response(
    scenario: SimScenario,
    f0_grid: Sequence[float],
    cfg: OracleConfig,
    channel: int = 1,
) -> float:
    """Worst |oracle - analytic| response deviation in dB over a tone grid.

    The grid must avoid step boundaries and exact harmonics (raises
    ValueError otherwise); tones beyond the last available harmonic carry
    no analytic value and are skipped.
    """
    harmonics = scenario_harmonics(scenario)
    params = scenario.detection_params()
    ref_magnitude = _reference_magnitude(scenario, cfg, channel)
    worst: Optional[float] = None
    for f0 in f0_grid:
        point = channel_output(harmonics, float(f0), params)
        if point.flag == FLAG_BOUNDARY:
            raise ValueError(f"f0 = {f0:g} Hz lies on a response step boundary")
        if point.alias_channel_hz == 0.0:
            raise ValueError(f"f0 = {f0:g} Hz lies exactly on a harmonic")
        if point.power_db_rel is None:
            continue
        measured = _measured_response_db(
            scenario, float(f0), point.alias_channel_hz, cfg, channel, ref_magnitude
        )
        deviation = abs(measured - point.power_db_rel)
        worst = deviation if worst is None else max(worst, deviation)
    if worst is None:
        raise ValueError("f0_grid contains no points with a defined analytic response")
    return worst
