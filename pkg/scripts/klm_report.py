#!/usr/bin/env python3
"""Reproduce the build-effort comparison from the bundled action traces.

Prints the simulated keystroke table (exact, derived from the traces)
next to the measured wall-clock seconds (human observations shipped as
reference constants; a simulation cannot reproduce them).

Usage: python scripts/klm_report.py [--csv]
"""

import argparse

from tutorkit.klm import (
    MEASURED_BUILD_SECONDS,
    bundled_trace,
    compare,
    estimate,
    format_reduction,
    report,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", action="store_true", help="emit the table as CSV")
    args = parser.parse_args()

    pairs = [
        ("simple", estimate(bundled_trace("classical_simple")), estimate(bundled_trace("ai_simple"))),
        ("complex", estimate(bundled_trace("classical_complex")), estimate(bundled_trace("ai_complex"))),
    ]
    print(report(pairs, csv_format=args.csv))
    if args.csv:
        return

    print()
    print("measured wall-clock build times (human reference, seconds):")
    for kind in ("simple", "complex"):
        classical = MEASURED_BUILD_SECONDS[(kind, "classical")]
        ai = MEASURED_BUILD_SECONDS[(kind, "ai")]
        drop = format_reduction((classical - ai) * 100 // classical)
        print(f"  {kind:<8} classical {classical:>3}s  ai {ai:>3}s  ({drop})")

    print()
    for name, classical, ai in pairs:
        result = compare(classical, ai)
        print(
            f"{name}: keystrokes {classical.keystrokes} -> {ai.keystrokes} "
            f"({format_reduction(result.keystrokes_reduction_percent)})"
        )


if __name__ == "__main__":
    main()
