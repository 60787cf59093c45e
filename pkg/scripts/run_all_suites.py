#!/usr/bin/env python3
"""Run every verification suite at its default size and write a summary table.

usage: python3 scripts/run_all_suites.py [--seed S] [--out results/suites.md]
"""
import argparse
from pathlib import Path

from ndgtool.suites import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="results/suites.md")
    args = ap.parse_args()
    lines = ["| suite | N | trials | checks | failing | seconds |", "|---|---|---|---|---|---|"]
    for name in SUITES:
        rep = run_suite(name, seed=args.seed)
        bad = [c.name for c in rep.checks if not c.passed]
        Ns = rep.config.N_values
        lines.append(f"| {name} | {Ns[0]}..{Ns[-1]} | {rep.config.trials} | {len(rep.checks)} "
                     f"| {', '.join(bad) or '-'} | {rep.seconds:.1f} |")
        print(lines[-1], flush=True)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
