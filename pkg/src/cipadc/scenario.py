"""Declarative simulation scenarios: JSON schema, validation, presets.

A scenario document is a UTF-8 JSON object:

    {
      "comb":      {"num_lines": 3, "spacing_hz": 10e9,
                    "amplitudes": {"-1": 0.5, "1": 0.5}},     # optional overrides
      "otdm":      {"num_channels": 2,
                    "stages": [{"extinction_db": 30, "mu": 1.0,
                                "alpha_max": 1.0}]},          # stages optional
      "detection": {"load_resistance_ohm": 1.0,
                    "responsivity_a_per_w": 1.0,
                    "norm_constant": 1.0},                    # optional
      "sweep":     {"start_hz": 0.5e9, "stop_hz": 43.5e9,
                    "step_hz": 0.5e9},                        # optional
      "mode": "analytic",                # analytic | oracle | both
      "approximation": "exact-gk"        # exact-gk | triangular-gk
    }

Unknown keys anywhere are rejected so published scenarios stay
reproducible.  "extinction_db" may be null (or omitted) for an ideal
switch; finite values convert as eps = 10^(dB/10).  The comb line
spacing doubles as the converter sampling rate, and the per-channel
quantizer runs at spacing / num_channels.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .comb import OpticalComb
from .detection import DetectionParams
from .errors import ScenarioError
from .otdm import MzmStage, OtdmChain

MODES = ("analytic", "oracle", "both")
APPROXIMATIONS = ("exact-gk", "triangular-gk")

DEFAULT_SWEEP_START_HZ = 0.5e9
DEFAULT_SWEEP_STOP_HZ = 43.5e9
DEFAULT_SWEEP_STEP_HZ = 0.5e9


@dataclass(frozen=True)
class SweepSpec:
    start_hz: float = DEFAULT_SWEEP_START_HZ
    stop_hz: float = DEFAULT_SWEEP_STOP_HZ
    step_hz: float = DEFAULT_SWEEP_STEP_HZ

    def __post_init__(self) -> None:
        if self.start_hz <= 0:
            raise ScenarioError(f"sweep start_hz must be > 0, got {self.start_hz!r}")
        if not self.start_hz < self.stop_hz:
            raise ScenarioError("sweep start_hz must be < stop_hz")
        if self.step_hz <= 0:
            raise ScenarioError(f"sweep step_hz must be > 0, got {self.step_hz!r}")

    def frequencies(self) -> np.ndarray:
        """Grid start, start+step, ... up to (and including an exact) stop."""
        count = int((self.stop_hz - self.start_hz) / self.step_hz + 1e-9) + 1
        return self.start_hz + self.step_hz * np.arange(count)


@dataclass(frozen=True)
class StageSpec:
    """Switch imperfections for one demultiplexer stage."""

    extinction_ratio: float = math.inf
    mu: float = 1.0
    alpha_max: float = 1.0


@dataclass(frozen=True)
class SimScenario:
    """One validated converter configuration plus its sweep."""

    num_lines: int
    spacing_hz: float
    amplitude_overrides: tuple[tuple[int, float], ...] = ()
    num_channels: int = 1
    stage_specs: tuple[StageSpec, ...] = ()
    load_resistance_ohm: float = 1.0
    responsivity_a_per_w: float = 1.0
    norm_constant: float = 1.0
    sweep: SweepSpec = field(default_factory=SweepSpec)
    mode: str = "analytic"
    approximation: str = "exact-gk"

    def __post_init__(self) -> None:
        if self.num_lines < 1 or self.num_lines % 2 == 0:
            raise ScenarioError(f"comb num_lines must be an odd positive integer, got {self.num_lines!r}")
        if self.spacing_hz <= 0:
            raise ScenarioError(f"comb spacing_hz must be > 0, got {self.spacing_hz!r}")
        n = self.num_channels
        if n < 1 or n & (n - 1):
            raise ScenarioError(f"num_channels must be a power of two, got {n!r}")
        if self.stage_specs and len(self.stage_specs) != self.num_stages:
            raise ScenarioError(
                f"otdm stages must list log2(num_channels) = {self.num_stages} entries, "
                f"got {len(self.stage_specs)}"
            )
        if not self.stage_specs:
            object.__setattr__(self, "stage_specs", tuple(StageSpec() for _ in range(self.num_stages)))
        hw = self.comb_half_width
        overrides = dict(self.amplitude_overrides)
        for m, value in overrides.items():
            if abs(m) > hw:
                raise ScenarioError(f"amplitude override offset {m} outside comb range +-{hw}")
            if value < 0:
                raise ScenarioError(f"amplitude override for offset {m} must be >= 0, got {value!r}")
        if len(overrides) == self.num_lines and all(v == 0 for v in overrides.values()):
            raise ScenarioError("amplitude overrides zero out every comb line")
        if self.mode not in MODES:
            raise ScenarioError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.approximation not in APPROXIMATIONS:
            raise ScenarioError(f"approximation must be one of {APPROXIMATIONS}, got {self.approximation!r}")

    @property
    def comb_half_width(self) -> int:
        return (self.num_lines - 1) // 2

    @property
    def num_stages(self) -> int:
        return self.num_channels.bit_length() - 1

    @property
    def channel_spacing_hz(self) -> float:
        """Line spacing / quantizing rate of one demultiplexed channel."""
        return self.spacing_hz / self.num_channels

    def build_comb(self) -> OpticalComb:
        amplitudes = np.ones(self.num_lines, dtype=complex)
        for m, value in self.amplitude_overrides:
            amplitudes[m + self.comb_half_width] = value
        return OpticalComb(line_spacing_hz=self.spacing_hz, amplitudes=amplitudes)

    def build_chain(self) -> OtdmChain:
        stages = tuple(
            MzmStage(
                driver_freq_hz=self.spacing_hz / 2**s,
                extinction_ratio=spec.extinction_ratio,
                mu=spec.mu,
                alpha_max=spec.alpha_max,
            )
            for s, spec in enumerate(self.stage_specs, start=1)
        )
        return OtdmChain(stages, 1.0 / self.spacing_hz)

    def detection_params(self) -> DetectionParams:
        return DetectionParams(
            pd_cutoff_hz=self.channel_spacing_hz / 2.0,
            load_resistance_ohm=self.load_resistance_ohm,
            responsivity_a_per_w=self.responsivity_a_per_w,
            norm_constant=self.norm_constant,
        )

    def with_sweep(self, start_hz: float, stop_hz: float, step_hz: float) -> "SimScenario":
        return replace(self, sweep=SweepSpec(start_hz, stop_hz, step_hz))

    def with_mode(self, mode: str) -> "SimScenario":
        return replace(self, mode=mode)


def _require_keys(obj: dict, allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise ScenarioError(f"unknown key(s) {sorted(unknown)} in {where}")


def _number(obj: dict, key: str, where: str, default=None):
    if key not in obj:
        if default is None:
            raise ScenarioError(f"missing required key {key!r} in {where}")
        return default
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"{where}.{key} must be a number, got {value!r}")
    return float(value)


def _integer(obj: dict, key: str, where: str) -> int:
    if key not in obj:
        raise ScenarioError(f"missing required key {key!r} in {where}")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioError(f"{where}.{key} must be an integer, got {value!r}")
    return value


def _parse_overrides(raw, where: str) -> tuple[tuple[int, float], ...]:
    if not isinstance(raw, dict):
        raise ScenarioError(f"{where} must be an object mapping line offsets to amplitudes")
    overrides = []
    for key, value in raw.items():
        try:
            offset = int(key)
        except (TypeError, ValueError):
            raise ScenarioError(f"{where} key {key!r} is not an integer line offset") from None
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ScenarioError(f"{where}[{key!r}] must be a number, got {value!r}")
        overrides.append((offset, float(value)))
    return tuple(overrides)


def _parse_stage(raw, index: int) -> StageSpec:
    where = f"otdm.stages[{index}]"
    if not isinstance(raw, dict):
        raise ScenarioError(f"{where} must be an object")
    _require_keys(raw, {"extinction_db", "mu", "alpha_max"}, where)
    extinction_db = raw.get("extinction_db")
    if extinction_db is None:
        ratio = math.inf
    elif isinstance(extinction_db, bool) or not isinstance(extinction_db, (int, float)):
        raise ScenarioError(f"{where}.extinction_db must be a number or null, got {extinction_db!r}")
    else:
        if extinction_db <= 0:
            raise ScenarioError(f"{where}.extinction_db must be > 0 dB, got {extinction_db!r}")
        ratio = 10.0 ** (extinction_db / 10.0)
    mu = _number(raw, "mu", where, default=1.0)
    alpha_max = _number(raw, "alpha_max", where, default=1.0)
    if not 0.0 < mu <= 1.0:
        raise ScenarioError(f"{where}.mu must be in (0, 1], got {mu!r}")
    if not 0.0 < alpha_max <= 1.0:
        raise ScenarioError(f"{where}.alpha_max must be in (0, 1], got {alpha_max!r}")
    return StageSpec(extinction_ratio=ratio, mu=mu, alpha_max=alpha_max)


def scenario_from_dict(data: dict) -> SimScenario:
    """Validate a parsed scenario document (fail-loud on unknown keys)."""
    if not isinstance(data, dict):
        raise ScenarioError("scenario document must be a JSON object")
    _require_keys(data, {"comb", "otdm", "detection", "sweep", "mode", "approximation"}, "scenario")

    comb_doc = data.get("comb")
    if not isinstance(comb_doc, dict):
        raise ScenarioError("scenario must contain a 'comb' object")
    _require_keys(comb_doc, {"num_lines", "spacing_hz", "amplitudes"}, "comb")
    num_lines = _integer(comb_doc, "num_lines", "comb")
    spacing_hz = _number(comb_doc, "spacing_hz", "comb")
    overrides = ()
    if "amplitudes" in comb_doc:
        overrides = _parse_overrides(comb_doc["amplitudes"], "comb.amplitudes")

    otdm_doc = data.get("otdm")
    if not isinstance(otdm_doc, dict):
        raise ScenarioError("scenario must contain an 'otdm' object")
    _require_keys(otdm_doc, {"num_channels", "stages"}, "otdm")
    num_channels = _integer(otdm_doc, "num_channels", "otdm")
    stage_specs: tuple[StageSpec, ...] = ()
    if "stages" in otdm_doc:
        raw_stages = otdm_doc["stages"]
        if not isinstance(raw_stages, list):
            raise ScenarioError("otdm.stages must be a list")
        stage_specs = tuple(_parse_stage(s, i) for i, s in enumerate(raw_stages))

    det_doc = data.get("detection", {})
    if not isinstance(det_doc, dict):
        raise ScenarioError("detection must be an object")
    _require_keys(det_doc, {"load_resistance_ohm", "responsivity_a_per_w", "norm_constant"}, "detection")
    load_resistance = _number(det_doc, "load_resistance_ohm", "detection", default=1.0)
    responsivity = _number(det_doc, "responsivity_a_per_w", "detection", default=1.0)
    norm_constant = _number(det_doc, "norm_constant", "detection", default=1.0)

    sweep_doc = data.get("sweep", {})
    if not isinstance(sweep_doc, dict):
        raise ScenarioError("sweep must be an object")
    _require_keys(sweep_doc, {"start_hz", "stop_hz", "step_hz"}, "sweep")
    sweep = SweepSpec(
        start_hz=_number(sweep_doc, "start_hz", "sweep", default=DEFAULT_SWEEP_START_HZ),
        stop_hz=_number(sweep_doc, "stop_hz", "sweep", default=DEFAULT_SWEEP_STOP_HZ),
        step_hz=_number(sweep_doc, "step_hz", "sweep", default=DEFAULT_SWEEP_STEP_HZ),
    )

    mode = data.get("mode", "analytic")
    approximation = data.get("approximation", "exact-gk")
    return SimScenario(
        num_lines=num_lines,
        spacing_hz=spacing_hz,
        amplitude_overrides=overrides,
        num_channels=num_channels,
        stage_specs=stage_specs,
        load_resistance_ohm=load_resistance,
        responsivity_a_per_w=responsivity,
        norm_constant=norm_constant,
        sweep=sweep,
        mode=mode,
        approximation=approximation,
    )


def load_scenario(path) -> SimScenario:
    """Load and validate a scenario JSON file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return scenario_from_dict(data)


def _preset_doc(num_lines: int, spacing_hz: float, num_channels: int) -> dict:
    return {
        "comb": {"num_lines": num_lines, "spacing_hz": spacing_hz},
        "otdm": {"num_channels": num_channels},
    }


# Configurations reproducing the published single-, two- and four-channel
# converters (10/20/40 GSa/s with a common 10 GSa/s quantizing rate, plus
# the fixed-20-GSa/s comparison pair).
PRESETS: dict[str, tuple[str, dict]] = {
    "fig7a-3line": ("single channel, 10 GSa/s, 3 comb lines", _preset_doc(3, 10e9, 1)),
    "fig7a-7line": ("single channel, 10 GSa/s, 7 comb lines", _preset_doc(7, 10e9, 1)),
    "fig7a-15line": ("single channel, 10 GSa/s, 15 comb lines", _preset_doc(15, 10e9, 1)),
    "fig7b-3line": ("two channels, 20 GSa/s, 3 comb lines", _preset_doc(3, 20e9, 2)),
    "fig7b-7line": ("two channels, 20 GSa/s, 7 comb lines", _preset_doc(7, 20e9, 2)),
    "fig7c-4ch-3line": ("four channels, 40 GSa/s, 3 comb lines", _preset_doc(3, 40e9, 4)),
    "fig8-single-20g": ("single channel, 20 GSa/s, 3 comb lines", _preset_doc(3, 20e9, 1)),
    "fig8-two-channel-20g": ("two channels, 20 GSa/s, 3 comb lines", _preset_doc(3, 20e9, 2)),
}


def preset(name: str) -> SimScenario:
    """Build one of the published configurations by name."""
    try:
        _, doc = PRESETS[name]
    except KeyError:
        raise ScenarioError(f"unknown preset {name!r}; see list_presets()") from None
    return scenario_from_dict(doc)


def list_presets() -> list[tuple[str, str]]:
    """(name, description) pairs for every built-in preset."""
    return [(name, description) for name, (description, _) in PRESETS.items()]
