"""Beat-note weights of a line spectrum after square-law photodetection.

Squaring the optical field mixes every pair of lines k grid steps apart
into a photocurrent component at k * delta.  The weight of that component
is the lag-k autocorrelation of the line amplitudes,

    w_k = | sum_r conj(a_r) * a_{r+k} |,

which for real nonnegative amplitudes is the plain sum a_r * a_{r+k}.
The same weights scale the aliased replicas of a modulating tone, so the
normalized sequence w_k / w_0 is the converter's stepped frequency
response.  When all lines are (approximately) equal the sequence is the
triangle M - k, which gives the closed-form bandwidth rule used for
quick sizing.

Relative response values are reported as 10*log10(w_k / w_0); comparisons
against measured spectra are made on these ratios, which are independent
of the field/power amplitude convention.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class HarmonicSpectrum:
    """Autocorrelation weights w_k of the harmonics at k * delta_hz."""

    delta_hz: float
    weights: np.ndarray
    num_lines: int

    def __post_init__(self) -> None:
        arr = np.array(self.weights, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "weights", arr)
        if self.delta_hz <= 0:
            raise ValueError(f"delta_hz must be > 0, got {self.delta_hz!r}")
        if arr.ndim != 1 or arr.size != self.num_lines:
            raise ValueError("weights must be 1-D with one entry per lag 0..num_lines-1")
        if arr[0] <= 0:
            raise ValueError("w_0 must be > 0 (nonempty source spectrum)")
        if np.any(arr < 0):
            raise ValueError("weights are magnitudes and must be >= 0")

    @property
    def max_harmonic(self) -> int:
        return self.num_lines - 1

    def ratio(self, k: int) -> float:
        return float(self.weights[k] / self.weights[0])

    def ratio_db(self, k: int) -> float:
        return float(10.0 * np.log10(self.ratio(k)))


@dataclass(frozen=True)
class DetectionParams:
    """Photodetector constants; the cutoff is the channel Nyquist edge.

    The resistance, responsivity and normalization constant scale absolute
    levels only and cancel in every dB-relative output; they default to 1.
    """

    pd_cutoff_hz: float
    load_resistance_ohm: float = 1.0
    responsivity_a_per_w: float = 1.0
    norm_constant: float = 1.0

    def __post_init__(self) -> None:
        for name in ("pd_cutoff_hz", "load_resistance_ohm", "responsivity_a_per_w", "norm_constant"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)!r}")


def beat_harmonics(spectrum) -> HarmonicSpectrum:
    """Harmonic weights of a line spectrum (comb or demultiplexed grid).

    Works on the dense symmetric line range of the input, so w_k is defined
    for every lag up to the full spectral span even when interior lines are
    zero.
    """
    amps = np.asarray(spectrum.amplitudes, dtype=complex)
    m = amps.size
    # np.correlate(a, a, "full")[m-1+k] = sum_r conj(a_r) a_{r+k}
    lags = np.correlate(amps, amps, mode="full")
    weights = np.abs(lags[m - 1 :])
    return HarmonicSpectrum(delta_hz=spectrum.spacing_hz, weights=weights, num_lines=m)


def triangular_gk(num_lines: int, delta_hz: float) -> HarmonicSpectrum:
    """Closed-form weights M - k for M equal-amplitude lines."""
    if num_lines < 1:
        raise ValueError(f"num_lines must be >= 1, got {num_lines!r}")
    weights = np.arange(num_lines, 0, -1, dtype=float)
    return HarmonicSpectrum(delta_hz=delta_hz, weights=weights, num_lines=num_lines)


def pd_passes(freq_hz: float, params: DetectionParams) -> bool:
    """Rectangular photodetector model: passes |f| up to and including the cutoff."""
    if freq_hz < 0:
        raise ValueError(f"freq_hz must be >= 0, got {freq_hz!r}")
    return freq_hz <= params.pd_cutoff_hz
