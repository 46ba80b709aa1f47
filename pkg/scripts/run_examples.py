#!/usr/bin/env python3
"""Run all five closed-form regressions and collect their artifacts."""

import argparse
import sys

from maskit12.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="out/examples")
    parser.add_argument("--emit", default="jsonl", choices=["jsonl", "csv", "svg"])
    args = parser.parse_args()
    worst = 0
    for name in ("ex1", "ex2", "ex3", "ex3a", "ex4"):
        code = cli_main(["--out", args.out, "--emit", args.emit, "examples", name])
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
