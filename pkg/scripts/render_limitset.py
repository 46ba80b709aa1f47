#!/usr/bin/env python3
"""Render limit-set approximations for a sweep of parameter points.

The doubly-cusped group at (2i, 2i) gives the classic picture; points
deeper inside the embedding produce progressively tamer circles.
"""

import argparse
import os
import sys

from maskit12.limitset import Viewport, limit_points_array, render
from maskit12.words import ParameterPoint, parse_complex


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tau1", default="0,2")
    parser.add_argument("--tau2", default="0,2")
    parser.add_argument("--depth", type=int, default=10)
    parser.add_argument("--px", default="1600,700")
    parser.add_argument("--viewport", default="-2,-0.25,4,2.25")
    parser.add_argument("--out", default="out/limitset.pgm")
    args = parser.parse_args()

    p = ParameterPoint(parse_complex(args.tau1), parse_complex(args.tau2))
    x0, y0, x1, y1 = (float(v) for v in args.viewport.split(","))
    w, h = (int(v) for v in args.px.split(","))
    vp = Viewport(complex(x0, y0), complex(x1, y1), w, h)
    pts, inside = limit_points_array(p, args.depth)
    os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
    fmt = "svg" if args.out.endswith(".svg") else "pgm"
    render(pts, vp, args.out, fmt)
    note = "" if inside else " (not proved inside: decorative)"
    print(f"{len(pts)} orbit points at depth {args.depth}{note} -> {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
