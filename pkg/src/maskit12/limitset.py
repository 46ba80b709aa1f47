"""Limit-set approximation by orbits of reduced words, plus rasterization.

The orbit of a boundary base point under all freely reduced words up to a
given length approximates the limit set.  For parameter points that are
provably inside the embedding, every finite orbit point lies in the two
horizontal strips 0 <= Im z <= 1/2 and Im tau1 - 1/2 <= Im z <= Im tau1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .domain import Membership, membership
from .errors import PreconditionError
from .words import (
    GroupWord,
    Letter,
    ParameterPoint,
    S1,
    S1_INV,
    S2,
    S2_INV,
    T,
    T_INV,
    generator_matrix,
)

_GENS: tuple[Letter, ...] = (S1, S1_INV, S2, S2_INV, T, T_INV)


def enumerate_reduced_words(max_len: int) -> Iterator[GroupWord]:
    """All nonempty freely reduced words of length <= max_len, each once.

    Counts 6 * 5^(k-1) words at each length k.
    """
    if max_len < 1:
        raise PreconditionError("max_len must be >= 1")
    frontier: list[tuple[Letter, ...]] = [()]
    for _ in range(max_len):
        nxt = []
        for tail in frontier:
            last = tail[-1] if tail else None
            for gen in _GENS:
                if last is not None and gen == last.inverse():
                    continue
                w = tail + (gen,)
                yield GroupWord(w)
                nxt.append(w)
        frontier = nxt


@dataclass(frozen=True)
class OrbitPoint:
    z: complex
    word_length: int


def _orbit_levels(p: ParameterPoint, max_len: int):
    """Yield (length, matrices) with matrices an (N, 4) complex array of
    row-major entries of all reduced words of that length.

    Level k holds, per last letter, the entries of every reduced word of
    length k ending with it; extending by one non-cancelling generator is
    a batched 2x2 product over the whole block.
    """
    mats = {
        gen: generator_matrix(gen, p.tau1, p.tau2) for gen in _GENS
    }
    flat = {g: np.array([m.a, m.b, m.c, m.d], dtype=complex) for g, m in mats.items()}
    level: dict[Letter, np.ndarray] = {}
    for k in range(1, max_len + 1):
        nxt: dict[Letter, np.ndarray] = {}
        for gen in _GENS:
            if k == 1:
                block = flat[gen][None, :]
            else:
                parts = [
                    level[last]
                    for last in _GENS
                    if last != gen.inverse() and last in level
                ]
                if not parts:
                    continue
                prev = np.concatenate(parts, axis=0)
                ga, gb, gc, gd = flat[gen]
                block = np.empty_like(prev)
                block[:, 0] = prev[:, 0] * ga + prev[:, 1] * gc
                block[:, 1] = prev[:, 0] * gb + prev[:, 1] * gd
                block[:, 2] = prev[:, 2] * ga + prev[:, 3] * gc
                block[:, 3] = prev[:, 2] * gb + prev[:, 3] * gd
            nxt[gen] = block
        level = nxt
        yield k, np.concatenate(list(level.values()), axis=0)


def limit_points_array(
    p: ParameterPoint, max_len: int, base: complex = 0j
) -> tuple[np.ndarray, bool]:
    """Finite orbit points of ``base`` as a flat complex array.

    Returns the points (identity included) and whether the parameter point
    was proved inside the embedding (otherwise the cloud is decorative).
    """
    inside = membership(p).status is Membership.PROVED_INSIDE
    chunks = [np.array([base], dtype=complex)]
    for _, block in _orbit_levels(p, max_len):
        num = block[:, 0] * base + block[:, 1]
        den = block[:, 2] * base + block[:, 3]
        ok = np.abs(den) > 1e-14
        chunks.append(num[ok] / den[ok])
    return np.concatenate(chunks), inside


def limit_points(
    p: ParameterPoint, max_len: int, base: complex = 0j
) -> tuple[list[OrbitPoint], bool]:
    """Orbit of ``base`` under words of length <= max_len, as OrbitPoints.

    The default base point 0 is the parabolic fixed point of S2, which is
    always in the limit set.
    """
    inside = membership(p).status is Membership.PROVED_INSIDE
    points: list[OrbitPoint] = [OrbitPoint(base, 0)]
    for k, block in _orbit_levels(p, max_len):
        num = block[:, 0] * base + block[:, 1]
        den = block[:, 2] * base + block[:, 3]
        ok = np.abs(den) > 1e-14
        points.extend(OrbitPoint(complex(z), k) for z in num[ok] / den[ok])
    return points, inside


@dataclass(frozen=True)
class Viewport:
    min: complex
    max: complex
    width_px: int
    height_px: int

    def __post_init__(self):
        if not (self.max.real > self.min.real and self.max.imag > self.min.imag):
            raise PreconditionError("viewport needs max - min in the open quadrant")
        if self.width_px <= 0 or self.height_px <= 0:
            raise PreconditionError("viewport needs positive pixel dimensions")


def _as_complex_array(points) -> np.ndarray:
    if isinstance(points, np.ndarray):
        return points
    return np.array(
        [pt.z if isinstance(pt, OrbitPoint) else pt for pt in points], dtype=complex
    )


def rasterize(points, vp: Viewport) -> np.ndarray:
    """Grayscale bitmap (row 0 = top) with one lit pixel per point."""
    img = np.zeros((vp.height_px, vp.width_px), dtype=np.uint8)
    zs = _as_complex_array(points)
    wx = vp.max.real - vp.min.real
    wy = vp.max.imag - vp.min.imag
    fx = (zs.real - vp.min.real) / wx
    fy = (zs.imag - vp.min.imag) / wy
    ok = (fx >= 0.0) & (fx < 1.0) & (fy >= 0.0) & (fy < 1.0)
    cols = (fx[ok] * vp.width_px).astype(int)
    rows = vp.height_px - 1 - (fy[ok] * vp.height_px).astype(int)
    img[rows, cols] = 255
    return img


def write_pgm(img: np.ndarray, out_path: str) -> None:
    """Binary PGM (P5), deterministic for fixed input."""
    h, w = img.shape
    with open(out_path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(img.tobytes())


def write_svg_points(points, vp: Viewport, out_path: str) -> None:
    """SVG scatter clipped to the viewport."""
    wx = vp.max.real - vp.min.real
    wy = vp.max.imag - vp.min.imag
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{vp.width_px}" '
        f'height="{vp.height_px}" viewBox="0 0 {vp.width_px} {vp.height_px}">',
        f'<rect width="{vp.width_px}" height="{vp.height_px}" fill="white"/>',
    ]
    for pt in points:
        z = pt.z if isinstance(pt, OrbitPoint) else pt
        fx = (z.real - vp.min.real) / wx
        fy = (z.imag - vp.min.imag) / wy
        if 0.0 <= fx < 1.0 and 0.0 <= fy < 1.0:
            cx = fx * vp.width_px
            cy = vp.height_px - fy * vp.height_px
            lines.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="0.6" fill="black"/>')
    lines.append("</svg>")
    with open(out_path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def render(points, vp: Viewport, out_path: str, emit: str = "pgm") -> str:
    """Write the point cloud as a PGM bitmap or SVG scatter."""
    if emit == "pgm":
        write_pgm(rasterize(points, vp), out_path)
    elif emit == "svg":
        write_svg_points(points, vp, out_path)
    else:
        raise ValueError(f"unknown raster format {emit!r}")
    return out_path


def strip_bounds(p: ParameterPoint, tol: float = 1e-6):
    """The two limit-set strips with tolerance slack."""
    y1 = p.tau1.imag
    return ((-tol, 0.5 + tol), (y1 - 0.5 - tol, y1 + tol))


def in_strips(z, p: ParameterPoint, tol: float = 1e-6):
    """Strip membership for one point or a numpy array of points."""
    (lo1, hi1), (lo2, hi2) = strip_bounds(p, tol)
    if isinstance(z, np.ndarray):
        y = z.imag
        return ((y >= lo1) & (y <= hi1)) | ((y >= lo2) & (y <= hi2))
    return lo1 <= z.imag <= hi1 or lo2 <= z.imag <= hi2
