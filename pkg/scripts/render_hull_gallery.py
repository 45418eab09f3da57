#!/usr/bin/env python3
"""Render a small gallery of shaded hull figures, one SVG per scene."""

import argparse
import pathlib
import sys

from coxhull.cli import main as coxhull_main

SCENES = [
    ("a2t_pair", "a2t", "", "121323", ""),
    ("a2t_triple", "a2t", "", "1213", "2321"),
    ("c2t_triple", "c2t", "", "1312", "23213"),
    ("g2t_triple", "g2t", "", "1213", "3212"),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="figures")
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for name, code, u, v, w in SCENES:
        rc = coxhull_main([
            "hull", "--type", code, "--u", u, "--v", v, "--w", w,
            "--svg", str(out / f"{name}.svg"),
        ])
        worst = max(worst, rc)
    return worst


if __name__ == "__main__":
    sys.exit(main())
