"""Frequency-response simulator for channel-interleaved photonic ADCs.

Models the signal chain of a photonically sampled, electronically
quantized converter: an optical sampling comb, small-signal electro-optic
modulation, a cascaded switching-window demultiplexer, square-law
photodetection, and per-channel digitization with DSP interleaving.  The
analytic path predicts the stepped frequency response and analog
bandwidth from line-spectrum autocorrelations; a brute-force time-domain
oracle validates it end to end.
"""

from .comb import OpticalComb, apply_obpf, field_waveform, uniform_comb
from .detection import (
    DetectionParams,
    HarmonicSpectrum,
    beat_harmonics,
    pd_passes,
    triangular_gk,
)
from .errors import EmptyCombError, GridMismatchError, ScenarioError
from .oracle import (
    OracleConfig,
    PhotocurrentRecord,
    compare_response,
    measured_harmonics,
    oracle_response_db,
    reference_tone_hz,
    synthesize_photocurrent,
    tone_magnitude,
)
from .otdm import (
    BAR,
    CROSS,
    GridSpectrum,
    MzmStage,
    OtdmChain,
    demultiplex,
    ideal_chain,
    line_count,
    stage_coeffs,
)
from .response import (
    FrequencyResponse,
    ResponsePoint,
    analog_bandwidth,
    channel_output,
    interleave,
    scenario_harmonics,
    sweep,
)
from .sampling import Component, ComponentSet, Tone, ToneSet, modulate, single_tone
from .scenario import (
    SimScenario,
    StageSpec,
    SweepSpec,
    list_presets,
    load_scenario,
    preset,
    scenario_from_dict,
)

__all__ = [
    "BAR",
    "CROSS",
    "Component",
    "ComponentSet",
    "DetectionParams",
    "EmptyCombError",
    "FrequencyResponse",
    "GridMismatchError",
    "GridSpectrum",
    "HarmonicSpectrum",
    "MzmStage",
    "OpticalComb",
    "OracleConfig",
    "OtdmChain",
    "PhotocurrentRecord",
    "ResponsePoint",
    "ScenarioError",
    "SimScenario",
    "StageSpec",
    "SweepSpec",
    "Tone",
    "ToneSet",
    "analog_bandwidth",
    "apply_obpf",
    "beat_harmonics",
    "channel_output",
    "compare_response",
    "demultiplex",
    "field_waveform",
    "ideal_chain",
    "interleave",
    "line_count",
    "list_presets",
    "load_scenario",
    "measured_harmonics",
    "modulate",
    "oracle_response_db",
    "pd_passes",
    "preset",
    "reference_tone_hz",
    "scenario_from_dict",
    "scenario_harmonics",
    "single_tone",
    "stage_coeffs",
    "sweep",
    "synthesize_photocurrent",
    "tone_magnitude",
    "triangular_gk",
    "uniform_comb",
]

__version__ = "0.1.0"
