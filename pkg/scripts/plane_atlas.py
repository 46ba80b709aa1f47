#!/usr/bin/env python3
"""Trace the four pleating planes that share the ray of T.

The curves aBT, AbT, aTAt and bTBt are all disjoint from t, so the four
planes (t, .) have the t-ray on their boundary.  This sweeps each plane
with pseudo-rays, locates the double-cusp corner where one exists, and
writes one SVG and a summary per plane.
"""

import argparse
import os
import sys

from maskit12.emit import polyline_jsonl, polyline_svg, write_text
from maskit12.errors import ContinuationError
from maskit12.tracer import find_plane_corner, trace_plane
from maskit12.words import format_complex, word

PLANES = [("t", "aBT"), ("t", "AbT"), ("t", "aTAt"), ("t", "bTBt")]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="out/planes")
    parser.add_argument("--grid", type=int, default=25)
    parser.add_argument("--theta", type=float, default=0.05)
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)

    for c1, c2 in PLANES:
        rays = trace_plane(word(c1), word(c2), args.grid, args.theta)
        stem = os.path.join(args.out, f"plane_{c1}_{c2}")
        write_text(stem + ".jsonl", polyline_jsonl(rays))
        write_text(stem + ".svg", polyline_svg(rays))
        cusps = {}
        for r in rays:
            cusps[r.cusp_curve] = cusps.get(r.cusp_curve, 0) + 1
        try:
            corner = find_plane_corner(word(c1), word(c2), rays)
            corner_txt = (
                f"corner ({format_complex(corner.tau1)}, {format_complex(corner.tau2)})"
            )
        except ContinuationError as exc:
            corner_txt = f"no corner on this grid ({exc})"
        print(f"({c1}, {c2}): {len(rays)} pseudo-rays, cusp counts {cusps}, {corner_txt}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
