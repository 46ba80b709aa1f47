"""Parameter-space predicates: membership bounds, twists, fundamental disks.

Only the two proved bounds are used: Im tau_i > 1 together with
Im tau1 * Im tau2 > 4 is sufficient for the group to lie in the embedding,
and Im tau_i >= 1/2 with Im tau1 * Im tau2 >= 1 is necessary.  Between the
two the verdict is UNKNOWN; the package never claims discreteness there.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .words import ParameterPoint


class Membership(Enum):
    PROVED_INSIDE = "PROVED_INSIDE"
    PROVED_OUTSIDE = "PROVED_OUTSIDE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class MembershipVerdict:
    status: Membership
    witness: str

    def __str__(self) -> str:
        return f"{self.status.value}: {self.witness}"


def membership(p: ParameterPoint) -> MembershipVerdict:
    """Classify a parameter point against the proved in/out bounds."""
    y1, y2 = p.tau1.imag, p.tau2.imag
    if y1 <= 0 or y2 <= 0:
        raise DomainError("membership needs Im tau_i > 0")
    if y1 > 1 and y2 > 1 and y1 * y2 > 4:
        return MembershipVerdict(
            Membership.PROVED_INSIDE,
            f"Im tau_i > 1 and Im tau1*Im tau2 = {y1 * y2:.6g} > 4",
        )
    if y1 < 0.5:
        return MembershipVerdict(
            Membership.PROVED_OUTSIDE, f"Im tau1 = {y1:.6g} < 1/2"
        )
    if y2 < 0.5:
        return MembershipVerdict(
            Membership.PROVED_OUTSIDE, f"Im tau2 = {y2:.6g} < 1/2"
        )
    if y1 * y2 < 1:
        return MembershipVerdict(
            Membership.PROVED_OUTSIDE, f"Im tau1*Im tau2 = {y1 * y2:.6g} < 1"
        )
    return MembershipVerdict(
        Membership.UNKNOWN,
        f"between the bounds: Im = ({y1:.6g}, {y2:.6g}), product {y1 * y2:.6g}",
    )


def dehn_twist(p: ParameterPoint, axis: int, n: int) -> ParameterPoint:
    """Translation induced by the n-th power of the twist about sigma_axis."""
    if axis == 1:
        return ParameterPoint(p.tau1 + 2 * n, p.tau2)
    if axis == 2:
        return ParameterPoint(p.tau1, p.tau2 + 2 * n)
    raise ValueError("axis must be 1 or 2")


@dataclass(frozen=True)
class FundamentalDisks:
    """The two disks paired by T in the fundamental domain picture."""

    b2_center: complex
    b3_center: complex
    radius: float


def fundamental_disks(p: ParameterPoint) -> FundamentalDisks:
    """Disks of radius 1/Im tau2 at i/Im tau2 and tau1 - i/Im tau2.

    T maps the boundary of the first onto the boundary of the second
    (exterior to interior), which tests sample pointwise.
    """
    y2 = p.tau2.imag
    if y2 <= 0:
        raise DomainError("fundamental disks need Im tau2 > 0")
    r = 1.0 / y2
    return FundamentalDisks(b2_center=1j * r, b3_center=p.tau1 - 1j * r, radius=r)
