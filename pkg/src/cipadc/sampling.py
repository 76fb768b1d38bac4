"""Small-signal electro-optic modulation of a line spectrum.

A sinusoidal input at f0 with modulation index a multiplies the optical
field by (1 + a*cos(2*pi*f0*t)), so each line of amplitude p gains an
upper and a lower sideband of amplitude p*a/2 at +-f0 around itself.
The modulator is assumed biased in its linear region with a small drive;
tone-tone intermodulation products are below the first-order expansion
and are not generated here (the time-domain oracle keeps them).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

CARRIER = "carrier"
UPPER_SIDEBAND = "usb"
LOWER_SIDEBAND = "lsb"


@dataclass(frozen=True)
class Tone:
    """One sinusoidal input: frequency and modulation index."""

    freq_hz: float
    mod_index: float

    def __post_init__(self) -> None:
        if self.freq_hz <= 0:
            raise ValueError(f"tone freq_hz must be > 0, got {self.freq_hz!r}")
        if not 0.0 < self.mod_index <= 1.0:
            raise ValueError(f"mod_index must be in (0, 1], got {self.mod_index!r}")


@dataclass(frozen=True)
class ToneSet:
    """Nonempty set of input tones with pairwise distinct frequencies."""

    tones: tuple[Tone, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tones", tuple(self.tones))
        if not self.tones:
            raise ValueError("ToneSet must contain at least one tone")
        freqs = [tone.freq_hz for tone in self.tones]
        if len(set(freqs)) != len(freqs):
            raise ValueError(f"tone frequencies must be pairwise distinct, got {freqs}")


def single_tone(freq_hz: float, mod_index: float) -> ToneSet:
    return ToneSet((Tone(freq_hz, mod_index),))


@dataclass(frozen=True)
class Component:
    """One spectral component of the modulated field.

    ``offset_hz`` is the physical offset from the carrier in Hz (a float:
    sidebands generally leave the comb grid); ``parent_line`` is the integer
    grid offset of the comb line this component belongs to.
    """

    offset_hz: float
    amplitude: complex
    kind: str
    parent_line: int


@dataclass(frozen=True)
class ComponentSet:
    components: tuple[Component, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("ComponentSet must be nonempty")
        keys = [(c.offset_hz, c.kind, c.parent_line) for c in self.components]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate (offset, kind, parent) component")

    @property
    def offsets_hz(self) -> np.ndarray:
        return np.array([c.offset_hz for c in self.components])

    @property
    def amplitudes(self) -> np.ndarray:
        return np.array([c.amplitude for c in self.components], dtype=complex)

    def sidebands(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if c.kind != CARRIER)


def modulate(spectrum, signal: ToneSet) -> ComponentSet:
    """Expand a line spectrum into carriers plus per-tone sidebands.

    For each line (amplitude a at offset nu) and each tone (f0, alpha) the
    output holds the carrier (nu, a) once and the pair (nu +- f0, a*alpha/2).
    Sidebands of different tones add independently (linearized small-signal
    modulation).
    """
    spacing = spectrum.spacing_hz
    components: list[Component] = []
    for m, amp in zip(spectrum.offsets, spectrum.amplitudes):
        if amp == 0:
            continue
        nu = m * spacing
        components.append(Component(nu, complex(amp), CARRIER, int(m)))
        for tone in signal.tones:
            half = complex(amp) * tone.mod_index / 2
            components.append(Component(nu + tone.freq_hz, half, UPPER_SIDEBAND, int(m)))
            components.append(Component(nu - tone.freq_hz, half, LOWER_SIDEBAND, int(m)))
    return ComponentSet(tuple(components))
