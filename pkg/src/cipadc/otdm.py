"""Optical time-division demultiplexer as cascaded switching windows.

A dual-output Mach-Zehnder switch driven at f_d gates the field with the
periodic transmittance

    h(t) = (alpha_max/2) * [(1 + 1/eps) + (1 - 1/eps) * mu * cos(2*pi*f_d*t - phi)]

whose line spectrum has exactly three coefficients: b_0 at DC and b_{+-1}
at +-f_d.  In the comb picture one stage therefore convolves the line
amplitudes with (b_-1, b_0, b_+1) on a grid refined by 2 (the driver runs
at half the incoming repetition rate).  A cascade of S stages routes every
2^S-th pulse into one of N = 2^S channels and refines the line grid to
f_s / N, broadening the occupied optical bandwidth.

Channel selection: channel n keeps the pulses arriving at t = (n-1)*T_S
mod N*T_S, i.e. its composite window is the channel-1 window delayed by
(n-1)*T_S.  Per stage s this delay is a driver phase advance of
2*pi*(n-1)/2^s: the half-turn part flips the output port (bar vs cross,
read from bit s-1 of n-1) and the remainder is a fractional driver-phase
shift contributed by the lower bits.  Magnitudes of the demultiplexed
lines are identical for every channel; only a phase linear in the line
index distinguishes them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .comb import OpticalComb

BAR = "bar"
CROSS = "cross"


@dataclass(frozen=True)
class MzmStage:
    """One dual-output switch: driver frequency and window parameters.

    ``extinction_ratio`` is the linear max/min transmittance ratio
    (math.inf for the ideal switch), ``mu`` the modulation-depth index and
    ``alpha_max`` the peak transmittance.  ``driver_phase_rad`` delays the
    window; 0 puts pulse arrivals at the transmittance extrema.
    """

    driver_freq_hz: float
    extinction_ratio: float = math.inf
    mu: float = 1.0
    alpha_max: float = 1.0
    driver_phase_rad: float = 0.0

    def __post_init__(self) -> None:
        if self.driver_freq_hz <= 0:
            raise ValueError(f"driver_freq_hz must be > 0, got {self.driver_freq_hz!r}")
        if not self.extinction_ratio > 1:
            raise ValueError(
                f"extinction_ratio must be > 1 (or math.inf), got {self.extinction_ratio!r}"
            )
        if not 0.0 < self.mu <= 1.0:
            raise ValueError(f"mu must be in (0, 1], got {self.mu!r}")
        if not 0.0 < self.alpha_max <= 1.0:
            raise ValueError(f"alpha_max must be in (0, 1], got {self.alpha_max!r}")


def stage_coeffs(stage: MzmStage, port: str = BAR) -> np.ndarray:
    """Window line coefficients (b_-1, b_0, b_+1) for one switch output.

    The cross port carries the complementary window, so its b_{+-1} are
    negated; for an infinite extinction ratio the 1/eps terms are exactly 0.
    """
    inv_eps = 0.0 if math.isinf(stage.extinction_ratio) else 1.0 / stage.extinction_ratio
    b0 = (stage.alpha_max / 2.0) * (1.0 + inv_eps)
    side = (stage.alpha_max / 4.0) * (1.0 - inv_eps) * stage.mu
    if port == CROSS:
        side = -side
    elif port != BAR:
        raise ValueError(f"port must be {BAR!r} or {CROSS!r}, got {port!r}")
    phase = np.exp(1j * stage.driver_phase_rad)
    return np.array([side * phase, b0, side * np.conj(phase)])


@dataclass(frozen=True)
class OtdmChain:
    """Cascade of switches demultiplexing into 2^len(stages) channels.

    Stage s (1-based) must be driven at f_s / 2^s where f_s is the input
    repetition rate 1 / sample_period_s.
    """

    stages: tuple[MzmStage, ...]
    sample_period_s: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "stages", tuple(self.stages))
        if self.sample_period_s <= 0:
            raise ValueError(f"sample_period_s must be > 0, got {self.sample_period_s!r}")
        fs = 1.0 / self.sample_period_s
        for s, stage in enumerate(self.stages, start=1):
            expected = fs / 2**s
            if not math.isclose(stage.driver_freq_hz, expected, rel_tol=1e-9):
                raise ValueError(
                    f"stage {s} driver must run at input_rate/2^{s} = {expected:g} Hz, "
                    f"got {stage.driver_freq_hz:g} Hz"
                )

    @property
    def num_channels(self) -> int:
        return 2 ** len(self.stages)

    @property
    def input_rate_hz(self) -> float:
        return 1.0 / self.sample_period_s

    @property
    def output_spacing_hz(self) -> float:
        """Line spacing / repetition rate after the full cascade."""
        return self.input_rate_hz / self.num_channels


def ideal_chain(num_channels: int, pulse_rate_hz: float) -> OtdmChain:
    """Lossless infinite-extinction cascade for a power-of-two channel count."""
    if num_channels < 1 or num_channels & (num_channels - 1):
        raise ValueError(f"num_channels must be a power of two, got {num_channels!r}")
    if pulse_rate_hz <= 0:
        raise ValueError(f"pulse_rate_hz must be > 0, got {pulse_rate_hz!r}")
    num_stages = num_channels.bit_length() - 1
    stages = tuple(MzmStage(driver_freq_hz=pulse_rate_hz / 2**s) for s in range(1, num_stages + 1))
    return OtdmChain(stages, 1.0 / pulse_rate_hz)


@dataclass(frozen=True)
class GridSpectrum:
    """Demultiplexed line spectrum on the refined grid r * grid_spacing_hz."""

    grid_spacing_hz: float
    amplitudes: np.ndarray
    channel_index: int = 1

    def __post_init__(self) -> None:
        arr = np.array(self.amplitudes, dtype=complex)
        arr.setflags(write=False)
        object.__setattr__(self, "amplitudes", arr)
        if self.grid_spacing_hz <= 0:
            raise ValueError(f"grid_spacing_hz must be > 0, got {self.grid_spacing_hz!r}")
        if arr.ndim != 1 or arr.size % 2 == 0:
            raise ValueError("amplitudes must be a 1-D array of odd length (symmetric offset range)")
        if self.channel_index < 1:
            raise ValueError(f"channel_index must be >= 1, got {self.channel_index!r}")

    @property
    def half_range(self) -> int:
        return (self.amplitudes.size - 1) // 2

    @property
    def offsets(self) -> np.ndarray:
        return np.arange(-self.half_range, self.half_range + 1)

    @property
    def spacing_hz(self) -> float:
        return self.grid_spacing_hz


def demultiplex(comb: OpticalComb, chain: OtdmChain, channel: int) -> GridSpectrum:
    """Line spectrum of one demultiplexed channel.

    Each stage upsamples the line grid by 2 and convolves with that stage's
    three window coefficients; the stage's port and residual driver phase
    encode channel selection as described in the module docstring.  The
    final linear phase expresses the channel's (n-1)*T_S time slot.
    """
    if not math.isclose(comb.line_spacing_hz, chain.input_rate_hz, rel_tol=1e-9):
        raise ValueError(
            f"chain expects pulse rate {chain.input_rate_hz:g} Hz, "
            f"comb spacing is {comb.line_spacing_hz:g} Hz"
        )
    n = chain.num_channels
    if not 1 <= channel <= n:
        raise ValueError(f"channel must be in [1, {n}], got {channel!r}")

    amps = np.array(comb.amplitudes, dtype=complex)
    for s, stage in enumerate(chain.stages, start=1):
        bit = (channel - 1) >> (s - 1) & 1
        residual = 2.0 * np.pi * ((channel - 1) % 2 ** (s - 1)) / 2**s
        shifted = replace(stage, driver_phase_rad=stage.driver_phase_rad + residual)
        kernel = stage_coeffs(shifted, CROSS if bit else BAR)
        upsampled = np.zeros(2 * amps.size - 1, dtype=complex)
        upsampled[::2] = amps
        amps = np.convolve(upsampled, kernel)

    delta = comb.line_spacing_hz / n
    offsets = np.arange(-(amps.size // 2), amps.size // 2 + 1)
    slot_phase = np.exp(-2j * np.pi * offsets * delta * (channel - 1) * chain.sample_period_s)
    return GridSpectrum(delta, amps * slot_phase, channel)


def line_count(half_width: int, num_stages: int) -> int:
    """Nonzero line count after ``num_stages`` ideal stages on a full comb.

    Starting from 2*half_width + 1 lines, each stage maps count -> 2*count + 1.
    """
    if half_width < 0:
        raise ValueError(f"half_width must be >= 0, got {half_width!r}")
    if num_stages < 0:
        raise ValueError(f"num_stages must be >= 0, got {num_stages!r}")
    count = 2 * half_width + 1
    for _ in range(num_stages):
        count = 2 * count + 1
    return count
