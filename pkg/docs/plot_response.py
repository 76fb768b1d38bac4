#!/usr/bin/env python3
"""Plot a swept-response CSV produced by the cipadc CLI.

Usage:
    cipadc --preset fig7b-3line --out response.csv
    python docs/plot_response.py response.csv
"""

import csv
import sys

import matplotlib.pyplot as plt


def main(path):
    freqs, levels, oracle = [], [], []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            if not row["power_db_rel"]:
                continue
            freqs.append(float(row["f0_hz"]) / 1e9)
            levels.append(float(row["power_db_rel"]))
            oracle.append(float(row["oracle_power_db_rel"]) if row["oracle_power_db_rel"] else None)

    plt.step(freqs, levels, where="mid", label="analytic")
    measured = [(f, o) for f, o in zip(freqs, oracle) if o is not None]
    if measured:
        plt.plot(*zip(*measured), "x", label="oracle")
    plt.axhline(-3.0, color="gray", linestyle=":", linewidth=1)
    plt.xlabel("input frequency (GHz)")
    plt.ylabel("relative output power (dB)")
    plt.legend()
    plt.tight_layout()
    plt.show()


if __name__ == "__main__":
    main(sys.argv[1])
