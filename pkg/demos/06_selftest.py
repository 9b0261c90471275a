"""Run every law suite over the small grid and print the report."""
from __future__ import annotations

import argparse

from bousfield.lawcheck import FULL_GRID, SMALL_GRID, check_laws, enumerate_grid

ap = argparse.ArgumentParser()
ap.add_argument("--full", action="store_true", help="use the larger, sampled grid")
ap.add_argument("--seed", type=int, default=0)
args = ap.parse_args()

grid = enumerate_grid(FULL_GRID if args.full else SMALL_GRID)
report = check_laws(grid, seed=args.seed, samples=1000)
print(report.to_text())
print("all laws hold" if report.ok else "violations found")
