"""Stepped frequency response and analog bandwidth of the converter.

Per channel, an input tone at f0 is digitized as the replica aliased to
|k0 * delta - f0| where delta is the channel line spacing and k0 indexes
the nearest harmonic; the replica's relative power is the harmonic weight
ratio w_{k0} / w_0.  The response is therefore piecewise constant over
frequency intervals of width delta, and the analog bandwidth ends at the
half-step boundary in front of the first step whose ratio drops below
1/2 (the 3 dB criterion).  Interleaving the channels in DSP only moves
the digitized tone to the full-rate alias position; its power is
untouched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .detection import DetectionParams, HarmonicSpectrum, beat_harmonics, triangular_gk
from .otdm import demultiplex, line_count
from .scenario import SimScenario

FLAG_OK = "ok"
FLAG_BELOW_NOISE = "below-noise"
FLAG_BOUNDARY = "boundary"


@dataclass(frozen=True)
class ResponsePoint:
    """Response of one swept input frequency.

    ``power_db_rel`` is 10*log10(w_k0 / w_0), or None when the input falls
    beyond the last available harmonic (flag "below-noise": no replica
    exists to digitize).  ``k0_full``/``alias_full_hz`` are filled by
    ``interleave``.
    """

    f0_hz: float
    k0: int
    alias_channel_hz: float
    power_db_rel: Optional[float]
    k0_full: Optional[int] = None
    alias_full_hz: Optional[float] = None
    flag: str = FLAG_OK


@dataclass(frozen=True)
class FrequencyResponse:
    """Swept response curve plus the step-criterion analog bandwidth.

    ``analog_bandwidth_hz`` is the raw half-step value, which may exceed the
    swept range; ``exceeds_sweep`` tells whether it can be confirmed within
    this sweep.
    """

    points: tuple[ResponsePoint, ...]
    analog_bandwidth_hz: float
    sweep_max_hz: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        freqs = [p.f0_hz for p in self.points]
        if any(b <= a for a, b in zip(freqs, freqs[1:])):
            raise ValueError("points must be sorted by strictly increasing f0_hz")

    @property
    def exceeds_sweep(self) -> bool:
        return self.analog_bandwidth_hz > self.sweep_max_hz

    def bandwidth_label(self) -> str:
        if self.exceeds_sweep:
            return f"exceeds-sweep({self.sweep_max_hz:.6g})"
        return f"{self.analog_bandwidth_hz:.6g}"


def _nearest_step(f0_hz: float, delta_hz: float) -> tuple[int, bool]:
    """Index of the response step containing f0, and whether f0 sits exactly
    on a step boundary (ties are assigned to the upper step)."""
    q = f0_hz / delta_hz
    k0 = math.floor(q + 0.5)
    return k0, (q - math.floor(q)) == 0.5


def channel_output(g: HarmonicSpectrum, f0_hz: float, params: DetectionParams) -> ResponsePoint:
    """Digitized per-channel output for one input tone.

    The nearest-harmonic index k0 selects the replica that lands inside the
    channel passband [0, delta/2]; its relative power is the step value.
    """
    if f0_hz <= 0:
        raise ValueError(f"f0_hz must be > 0, got {f0_hz!r}")
    delta = g.delta_hz
    k0, on_boundary = _nearest_step(f0_hz, delta)
    alias = abs(k0 * delta - f0_hz)
    if k0 > g.max_harmonic:
        return ResponsePoint(f0_hz, k0, alias, None, flag=FLAG_BELOW_NOISE)
    flag = FLAG_BOUNDARY if on_boundary else FLAG_OK
    return ResponsePoint(f0_hz, k0, alias, g.ratio_db(k0), flag=flag)


def interleave(point: ResponsePoint, num_channels: int, sample_rate_hz: float) -> ResponsePoint:
    """Relocate a digitized tone to its full-rate alias position.

    Channel interleaving in DSP only changes where the tone sits in the
    reconstructed spectrum; its power is carried over bit-identically.
    """
    if num_channels < 1:
        raise ValueError(f"num_channels must be >= 1, got {num_channels!r}")
    if sample_rate_hz <= 0:
        raise ValueError(f"sample_rate_hz must be > 0, got {sample_rate_hz!r}")
    k0_full, _ = _nearest_step(point.f0_hz, sample_rate_hz)
    alias_full = abs(k0_full * sample_rate_hz - point.f0_hz)
    return replace(point, k0_full=k0_full, alias_full_hz=alias_full)


def analog_bandwidth(g: HarmonicSpectrum) -> float:
    """Largest input frequency whose step stays within 3 dB of the maximum.

    Steps are delta wide and centered on the harmonics, so the bandwidth is
    (k* - 1/2) * delta where k* is the first index with w_k / w_0 < 1/2
    (one past the last harmonic if none drops below).
    """
    ratios = g.weights / g.weights[0]
    below = np.nonzero(ratios < 0.5)[0]
    k_star = int(below[0]) if below.size else g.num_lines
    return (k_star - 0.5) * g.delta_hz


def scenario_harmonics(scenario: SimScenario) -> HarmonicSpectrum:
    """Harmonic weights for a scenario, exact or triangular approximation."""
    if scenario.approximation == "triangular-gk":
        lines = line_count(scenario.comb_half_width, scenario.num_stages)
        return triangular_gk(lines, scenario.channel_spacing_hz)
    demuxed = demultiplex(scenario.build_comb(), scenario.build_chain(), channel=1)
    return beat_harmonics(demuxed)


def sweep(scenario: SimScenario) -> FrequencyResponse:
    """Evaluate the stepped response over the scenario's sweep grid."""
    g = scenario_harmonics(scenario)
    params = scenario.detection_params()
    points = tuple(
        interleave(channel_output(g, f0, params), scenario.num_channels, scenario.spacing_hz)
        for f0 in scenario.sweep.frequencies()
    )
    return FrequencyResponse(points, analog_bandwidth(g), scenario.sweep.stop_hz)
