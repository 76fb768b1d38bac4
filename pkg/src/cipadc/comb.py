"""Line spectra of periodic photonic sampling pulse trains.

A pulse train with repetition rate f_s is a comb of discrete optical
lines spaced f_s apart around the carrier.  Everything here uses the
complex-baseband convention: line amplitudes are stored against integer
offsets from the carrier, and the carrier frequency itself is kept as
metadata only (it is a global phase that square-law detection cancels,
and keeping ~193 THz out of the arithmetic avoids precision loss).

Amplitudes are field amplitudes; electrical-spectrum comparisons happen
on normalized beat-weight ratios downstream, which makes the field/power
convention drop out.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import EmptyCombError


def _frozen_lines(values) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class OpticalComb:
    """Comb spectrum on the integer grid m * line_spacing_hz.

    ``amplitudes[i]`` is the line at offset ``i - half_width`` grid steps
    from the carrier; the array always covers the symmetric range
    [-half_width, +half_width].
    """

    line_spacing_hz: float
    amplitudes: np.ndarray
    center_freq_hz: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "amplitudes", _frozen_lines(self.amplitudes))
        if self.line_spacing_hz <= 0:
            raise ValueError(f"line_spacing_hz must be > 0, got {self.line_spacing_hz!r}")
        if self.center_freq_hz < 0:
            raise ValueError(f"center_freq_hz must be >= 0, got {self.center_freq_hz!r}")
        if self.amplitudes.ndim != 1 or self.amplitudes.size % 2 == 0:
            raise ValueError("amplitudes must be a 1-D array of odd length (symmetric offset range)")
        if not np.any(self.amplitudes != 0):
            raise EmptyCombError("comb has no nonzero lines")

    @property
    def half_width(self) -> int:
        return (self.amplitudes.size - 1) // 2

    @property
    def offsets(self) -> np.ndarray:
        """Integer line offsets -half_width .. +half_width."""
        return np.arange(-self.half_width, self.half_width + 1)

    @property
    def spacing_hz(self) -> float:
        return self.line_spacing_hz

    def amplitude(self, offset: int) -> complex:
        """Line amplitude at an integer offset (0 outside the stored range)."""
        if abs(offset) > self.half_width:
            return 0j
        return complex(self.amplitudes[offset + self.half_width])


def uniform_comb(
    num_lines: int,
    spacing_hz: float,
    center_hz: float = 0.0,
    amplitude: float = 1.0,
) -> OpticalComb:
    """Comb with ``num_lines`` equal-amplitude lines centered on the carrier.

    ``num_lines`` must be odd so the spectrum is symmetric about the carrier.
    """
    if num_lines < 1 or num_lines % 2 == 0:
        raise ValueError(f"num_lines must be an odd positive integer, got {num_lines!r}")
    if spacing_hz <= 0:
        raise ValueError(f"spacing_hz must be > 0, got {spacing_hz!r}")
    if amplitude <= 0:
        raise ValueError(f"amplitude must be > 0, got {amplitude!r}")
    return OpticalComb(
        line_spacing_hz=float(spacing_hz),
        amplitudes=np.full(num_lines, amplitude, dtype=complex),
        center_freq_hz=float(center_hz),
    )


def apply_obpf(comb: OpticalComb, weights: Mapping[int, float]) -> OpticalComb:
    """Attenuate or drop comb lines with an optical bandpass filter mask.

    ``weights`` maps integer line offsets to transmission factors in [0, 1];
    offsets absent from the map are fully blocked.  The surviving comb is
    trimmed to the largest remaining |offset|.
    """
    for m, w in weights.items():
        if abs(m) > comb.half_width:
            raise ValueError(f"weight key {m} outside comb offset range +-{comb.half_width}")
        if not 0.0 <= w <= 1.0:
            raise ValueError(f"weight for offset {m} must be in [0, 1], got {w!r}")

    hw = comb.half_width
    filtered = np.array(
        [weights.get(m, 0.0) * comb.amplitudes[m + hw] for m in range(-hw, hw + 1)],
        dtype=complex,
    )
    nonzero = np.nonzero(filtered)[0]
    if nonzero.size == 0:
        raise EmptyCombError("OBPF removed every comb line")
    new_hw = int(max(abs(nonzero - hw)))
    return OpticalComb(
        line_spacing_hz=comb.line_spacing_hz,
        amplitudes=filtered[hw - new_hw : hw + new_hw + 1],
        center_freq_hz=comb.center_freq_hz,
    )


def field_waveform(spectrum, t):
    """Complex baseband field of a line spectrum at time ``t`` (s).

    Accepts anything exposing ``offsets``, ``amplitudes`` and ``spacing_hz``
    (an OpticalComb or a demultiplexed GridSpectrum); ``t`` may be a scalar
    or an array.  The value is the sum of all lines rotating at their
    offsets from the carrier, so it is periodic with 1/spacing_hz.
    """
    t = np.asarray(t, dtype=float)
    freqs = spectrum.offsets * spectrum.spacing_hz
    field = spectrum.amplitudes @ np.exp(2j * np.pi * np.outer(freqs, t.ravel()))
    return complex(field[0]) if t.ndim == 0 else field.reshape(t.shape)
