"""Serialization of traced paths: JSON lines, CSV, SVG.

Formatting is fixed so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import json

from .tracer import RayPolyline, RaySample


def sample_record(sample: RaySample, flags: tuple[str, ...] = ()) -> dict:
    p = sample.point
    return {
        "theta": sample.theta_nominal,
        "tau1": [p.tau1.real, p.tau1.imag],
        "tau2": [p.tau2.real, p.tau2.imag],
        "residual": sample.residual,
        "traces": {k: v for k, v in sorted(sample.trace_values.items())},
        "flags": list(flags),
    }


def polyline_jsonl(rays: list[RayPolyline]) -> str:
    lines = []
    for ray in rays:
        n = len(ray.samples)
        for i, sample in enumerate(ray.samples):
            flags = ray.flags
            if i == n - 1 and ray.terminus == "CUSP":
                flags = flags + (f"CUSP:{ray.cusp_curve}",)
            lines.append(json.dumps(sample_record(sample, flags)))
    return "\n".join(lines) + "\n"


def polyline_csv(rays: list[RayPolyline]) -> str:
    lines = ["ray,theta,tau1_re,tau1_im,tau2_re,tau2_im,residual,terminus"]
    for idx, ray in enumerate(rays):
        for sample in ray.samples:
            p = sample.point
            lines.append(
                f"{idx},{sample.theta_nominal!r},{p.tau1.real!r},{p.tau1.imag!r},"
                f"{p.tau2.real!r},{p.tau2.imag!r},{sample.residual!r},{ray.terminus}"
            )
    return "\n".join(lines) + "\n"


def polyline_svg(rays: list[RayPolyline], width: int = 640, height: int = 480) -> str:
    """Two panels: the tau1 and tau2 projections of every path."""
    pts1, pts2 = [], []
    for ray in rays:
        pts1.append([(s.point.tau1.real, s.point.tau1.imag) for s in ray.samples])
        pts2.append([(s.point.tau2.real, s.point.tau2.imag) for s in ray.samples])
    every = [p for poly in pts1 + pts2 for p in poly]
    xs = [p[0] for p in every]
    ys = [p[1] for p in every]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    padx = 0.05 * max(x1 - x0, 1e-9)
    pady = 0.05 * max(y1 - y0, 1e-9)
    x0, x1, y0, y1 = x0 - padx, x1 + padx, y0 - pady, y1 + pady
    panel_w = width / 2

    def map_point(x, y, panel):
        px = (x - x0) / (x1 - x0) * (panel_w - 20) + 10 + panel * panel_w
        py = height - ((y - y0) / (y1 - y0) * (height - 20) + 10)
        return px, py

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{panel_w:.1f}" y1="0" x2="{panel_w:.1f}" y2="{height}" '
        'stroke="#cccccc"/>',
    ]
    for panel, polys in enumerate((pts1, pts2)):
        color = "#1f77b4" if panel == 0 else "#d62728"
        for poly in polys:
            coords = " ".join(
                f"{px:.3f},{py:.3f}"
                for px, py in (map_point(x, y, panel) for x, y in poly)
            )
            out.append(
                f'<polyline points="{coords}" fill="none" stroke="{color}" '
                'stroke-width="1"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_text(path: str, content: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(content)
