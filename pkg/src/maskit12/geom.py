"""Hyperbolic-geometry helpers: complex distance, bending angle, lengths."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import PreconditionError

INF = None  # marker for the point at infinity on the Riemann sphere


@dataclass(frozen=True)
class ComplexDistance:
    """Perpendicular distance d >= 0 and rotation psi in (-pi, pi]."""

    d: float
    psi: float

    @property
    def value(self) -> complex:
        return complex(self.d, self.psi)


def cross_ratio_for_axes(z1, z2, w1, w2) -> complex:
    """[z1, w1, w2, z2] = ((z1-w2)/(z1-w1)) * ((w1-z2)/(w2-z2)).

    At most one argument may be the point at infinity (``None``); the two
    factors containing it are replaced by their limit.
    """
    pts = (z1, z2, w1, w2)
    finite = [p for p in pts if p is not INF]
    if len(set(finite)) != len(finite) or len(finite) < 3:
        raise PreconditionError("cross ratio needs four distinct points")
    if z1 is INF:
        return (w1 - z2) / (w2 - z2)
    if z2 is INF:
        return (z1 - w2) / (z1 - w1)
    if w1 is INF:  # (w1 - z2)/(z1 - w1) -> -1
        return -(z1 - w2) / (w2 - z2)
    if w2 is INF:  # (z1 - w2)/(w2 - z2) -> -1
        return -(w1 - z2) / (z1 - w1)
    return ((z1 - w2) / (z1 - w1)) * ((w1 - z2) / (w2 - z2))


def complex_distance(z1, z2, w1, w2) -> ComplexDistance:
    """Complex distance D = d + i psi between geodesics (z1 z2), (w1 w2).

    Defined by coth^2(D/2) = [z1, w1, w2, z2]; the branch with d >= 0 is
    returned and psi is normalised to (-pi, pi].
    """
    x = cross_ratio_for_axes(z1, z2, w1, w2)
    if x == 1:
        raise PreconditionError("geodesics share an endpoint (coincident)")
    s = cmath.sqrt(x)
    if s == 1 or s == -1:
        raise PreconditionError("degenerate configuration")
    half = cmath.atanh(1.0 / s)
    if half.real < 0:
        half = -half
    d = 2.0 * half.real
    psi = 2.0 * half.imag
    # fold psi into (-pi, pi]
    while psi <= -math.pi:
        psi += 2 * math.pi
    while psi > math.pi:
        psi -= 2 * math.pi
    return ComplexDistance(d=d, psi=psi)


def bending_angle(psi: float, theta: float) -> float:
    """Exterior angle of a geodesic crossing a bending line.

    The geodesic meets the line at angle psi in (0, pi/2]; the two flat
    pieces meet at bending angle theta in [0, pi).  Satisfies
    sin(phi/2) = sin(psi) sin(theta/2), so phi <= theta with equality only
    for psi = pi/2 or theta = 0.
    """
    if not (0 < psi <= math.pi / 2):
        raise PreconditionError(f"psi must be in (0, pi/2], got {psi}")
    if not (0 <= theta < math.pi):
        raise PreconditionError(f"theta must be in [0, pi), got {theta}")
    return 2.0 * math.asin(math.sin(psi) * math.sin(theta / 2.0))


class TraceClass(Enum):
    LOXODROMIC = "loxodromic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"


@dataclass(frozen=True)
class ComplexLength:
    kind: TraceClass
    value: complex | None  # None unless loxodromic


def complex_length_from_trace(tr: complex, tol: float = 1e-12) -> ComplexLength:
    """Complex translation length from 2 cosh(l/2) = +-tr.

    Computed as l = arccosh(tr^2/2 - 1), which removes the SL2 sign
    ambiguity, keeps Re l >= 0 and is continuous on the loxodromic locus.
    Real traces in [-2, 2] are flagged parabolic/elliptic instead.
    """
    if abs(tr.imag) <= tol and abs(tr.real) <= 2 + tol:
        if abs(abs(tr.real) - 2) <= tol:
            return ComplexLength(TraceClass.PARABOLIC, None)
        return ComplexLength(TraceClass.ELLIPTIC, None)
    value = cmath.acosh(tr * tr / 2.0 - 1.0)
    if value.real < 0:
        value = -value
    return ComplexLength(TraceClass.LOXODROMIC, value)
