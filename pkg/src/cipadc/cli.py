"""Command-line front end: load a scenario, run the sweep, emit CSV."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from .errors import GridMismatchError, ScenarioError
from .oracle import OracleConfig, oracle_response_db
from .response import FrequencyResponse, sweep
from .scenario import SimScenario, list_presets, load_scenario, preset

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_GRID_MISMATCH = 3
EXIT_IO = 4

CSV_HEADER = "f0_hz,k0_channel,alias_channel_hz,k0_full,alias_full_hz,power_db_rel,oracle_power_db_rel,flag"


def _num(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.17e}"


def _int(value: Optional[int]) -> str:
    return "" if value is None else str(value)


def render_csv(response: FrequencyResponse, oracle_db: Optional[list]) -> str:
    """Deterministic CSV for a swept response (oracle column may be absent)."""
    lines = [CSV_HEADER]
    for i, p in enumerate(response.points):
        odb = oracle_db[i] if oracle_db is not None else None
        lines.append(
            ",".join(
                (
                    _num(p.f0_hz),
                    _int(p.k0),
                    _num(p.alias_channel_hz),
                    _int(p.k0_full),
                    _num(p.alias_full_hz),
                    _num(p.power_db_rel),
                    _num(odb),
                    p.flag,
                )
            )
        )
    return "\n".join(lines) + "\n"


def run(scenario: SimScenario, out_path: Optional[Path]) -> int:
    """Run one scenario, write the CSV artifact, print a one-line summary.

    The summary goes to stderr so the CSV can be piped from stdout.
    """
    response = sweep(scenario)
    oracle_db = None
    if scenario.mode in ("oracle", "both"):
        cfg = OracleConfig()
        f0s = [p.f0_hz for p in response.points]
        oracle_db = oracle_response_db(scenario, f0s, cfg)

    csv_text = render_csv(response, oracle_db)
    if out_path is None:
        sys.stdout.write(csv_text)
    else:
        out_path.write_text(csv_text, encoding="utf-8")

    steps = {p.k0 for p in response.points if p.power_db_rel is not None}
    summary = f"analog_bandwidth_hz={response.bandwidth_label()} steps={len(steps)}"
    if oracle_db is not None:
        deviations = [
            abs(odb - p.power_db_rel)
            for p, odb in zip(response.points, oracle_db)
            if odb is not None and p.power_db_rel is not None
        ]
        if deviations:
            summary += f" max_oracle_deviation_db={max(deviations):.3e}"
    print(summary, file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cipadc",
        description="Stepped frequency response of channel-interleaved photonic ADCs.",
    )
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--scenario", type=Path, help="path to a scenario JSON file")
    source.add_argument("--preset", help="name of a built-in scenario (see --list-presets)")
    parser.add_argument(
        "--mode",
        choices=["analytic", "oracle", "both"],
        help="override the scenario's evaluation mode",
    )
    parser.add_argument("--out", type=Path, help="CSV output path (default: stdout)")
    parser.add_argument(
        "--sweep",
        nargs=3,
        type=float,
        metavar=("START", "STOP", "STEP"),
        help="override the sweep grid, in Hz",
    )
    parser.add_argument("--list-presets", action="store_true", help="list built-in scenarios and exit")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.list_presets:
        for name, description in list_presets():
            print(f"{name:24s} {description}")
        return EXIT_OK

    try:
        if args.scenario is not None:
            scenario = load_scenario(args.scenario)
        elif args.preset is not None:
            scenario = preset(args.preset)
        else:
            build_parser().error("one of --scenario or --preset is required")
            return EXIT_VALIDATION  # unreachable; argparse exits
        if args.sweep is not None:
            scenario = scenario.with_sweep(*args.sweep)
        if args.mode is not None:
            scenario = scenario.with_mode(args.mode)
        return run(scenario, args.out)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except GridMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GRID_MISMATCH
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
