"""Exact bivariate trace polynomials in (tau1, tau2).

Coefficients are exact rationals; the sparse representation maps degree
pairs to Fractions.  The leading block of a simple curve's trace
polynomial determines the curve's canonical coordinates, and that
inversion (``infer_coords_from_trace``) is the package's authoritative
sign convention for twist coordinates.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import CoordinateError, SizeError
from .words import Gen, GroupWord

Mono = tuple[int, int]

DEFAULT_SYMBOLIC_CAP = 40


class BiPoly:
    """Sparse polynomial in t1, t2 with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Mono, Fraction] | None = None):
        self.terms: dict[Mono, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c != 0:
                    self.terms[mono] = c

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def var(cls, axis: int) -> "BiPoly":
        if axis == 1:
            return cls({(1, 0): Fraction(1)})
        if axis == 2:
            return cls({(0, 1): Fraction(1)})
        raise ValueError("axis must be 1 or 2")

    # -- ring operations ----------------------------------------------
    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return BiPoly(out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) - c
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return BiPoly({m: c * other for m, c in self.terms.items()})
        out: dict[Mono, Fraction] = {}
        for (d1, d2), c in self.terms.items():
            for (e1, e2), k in other.terms.items():
                mono = (d1 + e1, d2 + e2)
                out[mono] = out.get(mono, Fraction(0)) + c * k
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power")
        out = BiPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self.terms)

    def coeff(self, d1: int, d2: int) -> Fraction:
        return self.terms.get((d1, d2), Fraction(0))

    def degree(self, axis: int) -> int:
        if not self.terms:
            return -1
        i = axis - 1
        return max(m[i] for m in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(d1 + d2 for d1, d2 in self.terms)

    # -- calculus / composition ----------------------------------------
    def partial(self, axis: int) -> "BiPoly":
        out: dict[Mono, Fraction] = {}
        for (d1, d2), c in self.terms.items():
            if axis == 1 and d1 > 0:
                out[(d1 - 1, d2)] = out.get((d1 - 1, d2), Fraction(0)) + c * d1
            elif axis == 2 and d2 > 0:
                out[(d1, d2 - 1)] = out.get((d1, d2 - 1), Fraction(0)) + c * d2
        return BiPoly(out)

    def eval(self, tau1: complex, tau2: complex) -> complex:
        total = 0j
        for (d1, d2), c in self.terms.items():
            total += float(c) * tau1**d1 * tau2**d2
        return total

    def eval_exact(self, t1: Fraction, t2: Fraction) -> Fraction:
        total = Fraction(0)
        for (d1, d2), c in self.terms.items():
            total += c * t1**d1 * t2**d2
        return total

    # -- presentation ---------------------------------------------------
    def _sorted_terms(self):
        return sorted(
            self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])
        )

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (d1, d2), c in self._sorted_terms():
            mono = "*".join(
                ([f"t1^{d1}" if d1 > 1 else "t1"] if d1 else [])
                + ([f"t2^{d2}" if d2 > 1 else "t2"] if d2 else [])
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def to_json_dict(self) -> dict[str, str]:
        return {
            f"[{d1},{d2}]": str(c) for (d1, d2), c in self._sorted_terms()
        }

    def __repr__(self) -> str:
        return f"BiPoly({self.pretty()})"


ZERO = BiPoly.zero()
ONE = BiPoly.const(1)


@dataclass(frozen=True)
class Mat2P:
    """2x2 matrix with polynomial entries; det is identically 1."""

    a: BiPoly
    b: BiPoly
    c: BiPoly
    d: BiPoly

    def __matmul__(self, o: "Mat2P") -> "Mat2P":
        return Mat2P(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self) -> BiPoly:
        return self.a * self.d - self.b * self.c

    def trace(self) -> BiPoly:
        return self.a + self.d

    def entries(self) -> tuple[BiPoly, BiPoly, BiPoly, BiPoly]:
        return (self.a, self.b, self.c, self.d)


_T1 = BiPoly.var(1)
_T2 = BiPoly.var(2)

_GEN_POLY = {
    (Gen.S1, False): Mat2P(ONE, BiPoly.const(2), ZERO, ONE),
    (Gen.S1, True): Mat2P(ONE, BiPoly.const(-2), ZERO, ONE),
    (Gen.S2, False): Mat2P(ONE, ZERO, BiPoly.const(2), ONE),
    (Gen.S2, True): Mat2P(ONE, ZERO, BiPoly.const(-2), ONE),
    # SL2 closed-form inverse keeps det = 1 exactly.
    (Gen.T, False): Mat2P(ONE + _T1 * _T2, _T1, _T2, ONE),
    (Gen.T, True): Mat2P(ONE, -_T1, -_T2, ONE + _T1 * _T2),
}

IDENTITY_P = Mat2P(ONE, ZERO, ZERO, ONE)


def symbolic_rep(w: GroupWord, cap: int = DEFAULT_SYMBOLIC_CAP) -> Mat2P:
    """Exact matrix of ``w``; entries agree with numeric evaluation."""
    if len(w) > cap:
        raise SizeError(f"word length {len(w)} exceeds symbolic cap {cap}")
    m = IDENTITY_P
    for let in w.letters:
        m = m @ _GEN_POLY[(let.gen, let.inverted)]
    return m


@functools.lru_cache(maxsize=4096)
def trace_poly(w: GroupWord, cap: int = DEFAULT_SYMBOLIC_CAP) -> BiPoly:
    """Exact trace polynomial of ``w``."""
    return symbolic_rep(w, cap).trace()


def substitute_shift(poly: BiPoly, axis: int, delta: Fraction) -> BiPoly:
    """Exact composition tau_axis -> tau_axis + delta."""
    delta = Fraction(delta)
    if delta == 0:
        return poly
    shifted = BiPoly.var(axis) + BiPoly.const(delta)
    out = BiPoly.zero()
    for (d1, d2), c in poly.terms.items():
        n = d1 if axis == 1 else d2
        other = (0, d2) if axis == 1 else (d1, 0)
        out = out + BiPoly({other: c}) * shifted**n
    return out


@dataclass(frozen=True)
class TopTermsReport:
    """Outcome of checking a trace polynomial's leading block."""

    sign: int
    q1: int
    p1: Fraction
    q2: int
    p2: Fraction
    remainder_total_degree: int
    passes: bool
    reason: str = ""


def _leading_block(sign: int, q1: int, p1: Fraction, q2: int, p2: Fraction) -> BiPoly:
    block = BiPoly.const(sign * 2 ** abs(q2 - q1))
    if q1 > 0:
        block = block * (_T1 + BiPoly.const(2 * Fraction(p1, q1))) ** q1
    if q2 > 0:
        block = block * (_T2 + BiPoly.const(2 * Fraction(p2, q2))) ** q2
    return block


def top_terms_check(w: GroupWord, coords) -> TopTermsReport:
    """Compare trace_poly(w) against the predicted leading block.

    ``coords`` is anything with integer attributes q1, p1, q2, p2.  The
    polynomial must equal sign * 2^|q2-q1| (t1+2p1/q1)^q1 (t2+2p2/q2)^q2
    plus a remainder of per-variable degree at most (q1, q2) and total
    degree at most q1+q2-2.
    """
    q1, p1, q2, p2 = coords.q1, Fraction(coords.p1), coords.q2, Fraction(coords.p2)
    if q1 + q2 <= 0:
        raise CoordinateError("top-terms check needs q1 + q2 > 0")
    poly = trace_poly(w)
    if poly.is_zero():
        raise CoordinateError("zero trace polynomial")

    def fail(reason: str) -> TopTermsReport:
        return TopTermsReport(0, q1, p1, q2, p2, poly.total_degree(), False, reason)

    lead = poly.coeff(q1, q2)
    expected = Fraction(2 ** abs(q2 - q1))
    if abs(lead) != expected:
        return fail(f"leading coefficient {lead} != +-{expected}")
    sign = 1 if lead > 0 else -1
    if poly.degree(1) != q1 or poly.degree(2) != q2:
        return fail(
            f"degrees ({poly.degree(1)},{poly.degree(2)}) do not match q = ({q1},{q2})"
        )
    remainder = poly - _leading_block(sign, q1, p1, q2, p2)
    rdeg = remainder.total_degree()
    ok = (
        rdeg <= q1 + q2 - 2
        and remainder.degree(1) <= q1
        and remainder.degree(2) <= q2
    )
    reason = "" if ok else f"remainder total degree {rdeg} > {q1 + q2 - 2}"
    return TopTermsReport(sign, q1, p1, q2, p2, rdeg, ok, reason)


def infer_coords_from_trace(w: GroupWord):
    """Canonical coordinates read off the trace polynomial's top terms.

    This is the authoritative coordinate oracle: q_i is the degree in
    tau_i and p_i comes from the subleading coefficients.  Raises
    CoordinateError when the polynomial does not have simple-curve shape.
    """
    from .lamination import CanonicalCoords  # local import to avoid a cycle

    poly = trace_poly(w)
    if poly.is_constant():
        raise CoordinateError(
            "constant trace polynomial: coordinates are undefined "
            "(peripheral, pinched-curve parallel, or not simple)"
        )
    q1, q2 = poly.degree(1), poly.degree(2)
    lead = poly.coeff(q1, q2)
    expected = Fraction(2 ** abs(q2 - q1))
    if abs(lead) != expected:
        raise CoordinateError(
            f"not a simple curve or convention breach: leading coefficient "
            f"{lead} at ({q1},{q2}), expected +-{expected}"
        )
    p1 = poly.coeff(q1 - 1, q2) / (2 * lead) if q1 > 0 else Fraction(0)
    p2 = poly.coeff(q1, q2 - 1) / (2 * lead) if q2 > 0 else Fraction(0)
    if p1.denominator != 1 or p2.denominator != 1:
        raise CoordinateError(
            f"not a simple curve or convention breach: non-integral twists "
            f"p = ({p1}, {p2})"
        )
    coords = CanonicalCoords(q1, int(p1), q2, int(p2))
    report = top_terms_check(w, coords)
    if not report.passes:
        raise CoordinateError(
            f"not a simple curve or convention breach: {report.reason}"
        )
    return coords
