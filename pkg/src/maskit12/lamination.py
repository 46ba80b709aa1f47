"""Canonical coordinates of simple curves and rational laminations.

A simple closed curve gamma gets an integer quadruple
(q1, p1, q2, p2): q_i is its geometric intersection with the pinched
curve sigma_i and p_i a twisting count.  Two independent computations are
provided: a combinatorial one from the curve's arc system on the
hexagonal fundamental domain (``coords_from_word``) and the trace-
polynomial oracle (``infer_coords_from_trace``), which fixes the sign
convention.  The module also carries the Thurston symplectic pairing, the
admissibility and exceptional-pair predicates, exact disjointness, wheel
search and the twist-closure curve enumeration.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from . import linkage
from .errors import AdmissibilityError, CoordinateError, NotSimpleError, WheelExhaustedError
from .tracepoly import infer_coords_from_trace
from .words import Gen, GroupWord, cyclic_reduce, parse_word, twist_word


@dataclass(frozen=True, order=True)
class CanonicalCoords:
    q1: int
    p1: int
    q2: int
    p2: int

    def __post_init__(self):
        if self.q1 < 0 or self.q2 < 0:
            raise ValueError("intersection numbers q_i must be nonnegative")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.q1, self.p1, self.q2, self.p2)

    def __str__(self) -> str:
        return f"({self.q1},{self.p1},{self.q2},{self.p2})"


def star(c) -> tuple[int, int, int, int]:
    """Dual vector (-p1, q1, -p2, q2) of the symplectic pairing."""
    return (-c.p1, c.q1, -c.p2, c.q2)


def thurston_pairing(c, cp) -> int:
    """Thurston symplectic form sum_i (q_i p'_i - q'_i p_i)."""
    return (c.q1 * cp.p1 - cp.q1 * c.p1) + (c.q2 * cp.p2 - cp.q2 * c.p2)


def is_admissible(c) -> bool:
    """Positive intersection with both pinched curves."""
    return c.q1 > 0 and c.q2 > 0


def is_exceptional_pair(c, cp) -> bool:
    """Degenerate direction pair: q1 q2' = q1' q2."""
    return c.q1 * cp.q2 == cp.q1 * c.q2


# ---------------------------------------------------------------------------
# Combinatorial coordinates from the fundamental-domain arc system.
# ---------------------------------------------------------------------------

# Sides of the hexagon; box 1 is bounded by s_S1, s_S1inv, s_Tinv and the
# middle arc s_0, box 2 by s_S2, s_S2inv, s_T and s_0.
_SIDE_OF_LETTER = {
    (Gen.S1, False): ("S1", 1),
    (Gen.S1, True): ("S1i", 1),
    (Gen.T, True): ("Ti", 1),
    (Gen.S2, False): ("S2", 2),
    (Gen.S2, True): ("S2i", 2),
    (Gen.T, False): ("Tb", 2),
}


@dataclass(frozen=True)
class BoxWeights:
    """Arc counts in one box: crossing, horizontal, four corner classes.

    ``a`` and ``b`` are the corners on the outer (T) side at s_{S} and
    s_{S^-1}; ``c`` and ``d`` the corners on the middle arc s_0.
    """

    v: int
    h: int
    a: int
    b: int
    c: int
    d: int


@dataclass(frozen=True)
class ArcSystem:
    box1: BoxWeights
    box2: BoxWeights
    n0: int        # crossings of the middle arc s_0
    cnt_s1: int    # endpoints on s_S1 (= on s_S1^-1)
    cnt_s2: int
    cnt_t: int


def arc_system(w: GroupWord) -> ArcSystem:
    """Arc classes of the curve of ``w`` on the fundamental domain.

    Arc i joins the side of e_i to the side of e_{i+1}^-1 (cyclically);
    arcs joining sides of different boxes cross s_0 once and contribute a
    corner piece to each box.
    """
    cw = cyclic_reduce(w)
    if len(cw) == 0:
        raise NotSimpleError("empty word has no arc system")
    letters = cw.letters
    n = len(letters)
    weights = {1: {"v": 0, "h": 0, "a": 0, "b": 0, "c": 0, "d": 0},
               2: {"v": 0, "h": 0, "a": 0, "b": 0, "c": 0, "d": 0}}
    n0 = 0

    def corner_at_s0(side: str) -> str:
        return {"S1": "c", "S1i": "d", "Ti": "v", "S2": "c", "S2i": "d", "Tb": "v"}[side]

    def in_box_class(s_from: str, s_to: str) -> str:
        pair = frozenset((s_from, s_to))
        table = {
            frozenset(("S1", "Ti")): "a", frozenset(("S1i", "Ti")): "b",
            frozenset(("S1", "S1i")): "h",
            frozenset(("S2", "Tb")): "a", frozenset(("S2i", "Tb")): "b",
            frozenset(("S2", "S2i")): "h",
        }
        if pair not in table:
            raise NotSimpleError(f"arc from side to itself in word {cw}")
        return table[pair]

    for i in range(n):
        s_from, box_from = _SIDE_OF_LETTER[(letters[i].gen, letters[i].inverted)]
        nxt = letters[(i + 1) % n].inverse()
        s_to, box_to = _SIDE_OF_LETTER[(nxt.gen, nxt.inverted)]
        if box_from == box_to:
            weights[box_from][in_box_class(s_from, s_to)] += 1
        else:
            n0 += 1
            weights[box_from][corner_at_s0(s_from)] += 1
            weights[box_to][corner_at_s0(s_to)] += 1

    def count(gen: Gen) -> int:
        return sum(1 for let in letters if let.gen is gen)

    return ArcSystem(
        box1=BoxWeights(**weights[1]),
        box2=BoxWeights(**weights[2]),
        n0=n0,
        cnt_s1=count(Gen.S1),
        cnt_s2=count(Gen.S2),
        cnt_t=count(Gen.T),
    )


@dataclass(frozen=True)
class CoordsResult:
    coords: CanonicalCoords
    raw: CanonicalCoords          # combinatorial values before reconciliation
    sign_flips: tuple[bool, bool]  # per-box flip applied to match the oracle
    oracle_checked: bool


def _combinatorial_coords(w: GroupWord) -> CanonicalCoords:
    sys = arc_system(w)
    b1, b2 = sys.box1, sys.box2
    if sys.n0 != sys.cnt_t:
        raise NotSimpleError(
            f"inconsistent arc system for {cyclic_reduce(w)}: "
            f"{sys.n0} middle crossings vs {sys.cnt_t} T-side endpoints"
        )
    if b1.a > 0 and b1.b > 0 and b2.a > 0 and b2.b > 0:
        raise NotSimpleError(
            f"corner arcs surround all four outer vertices for {cyclic_reduce(w)}"
        )
    missing1 = min(b1.c, b1.d) == 0
    missing2 = min(b2.c, b2.d) == 0
    if not (missing1 or missing2):
        raise NotSimpleError(
            f"corner arcs at the middle vertices of both boxes for {cyclic_reduce(w)}"
        )
    # Prefer box 1 for the missing-corner role when both qualify.
    if missing1:
        m, o = 1, 2
        box_m, box_o = b1, b2
        cnt_m, cnt_o = sys.cnt_s1, sys.cnt_s2
    else:
        m, o = 2, 1
        box_m, box_o = b2, b1
        cnt_m, cnt_o = sys.cnt_s2, sys.cnt_s1

    chi = min(box_o.c, box_o.d)
    q_m = sys.n0
    q_o = sys.n0 - 2 * chi
    p_m_abs = cnt_m
    p_o_abs = cnt_o - 2 * chi
    if q_o < 0 or p_o_abs < 0:
        raise NotSimpleError(f"negative corrected counts for {cyclic_reduce(w)}")

    def sign_of(box: BoxWeights, which: int, chi_corr: int, p_abs: int) -> int:
        if p_abs == 0:
            return 0
        c_eff, d_eff = box.c - chi_corr, box.d - chi_corr
        # Positive-twist diagonal family: (a, d) corners in box 1 and
        # (b, c) corners in box 2; the opposite family is negative.
        if which == 1:
            pos, neg = min(box.a, d_eff), min(box.b, c_eff)
        else:
            pos, neg = min(box.b, c_eff), min(box.a, d_eff)
        if pos > neg:
            return 1
        if neg > pos:
            return -1
        # Pure horizontal strands: parallel copies of sigma_i, positive.
        return 1

    sign_m = sign_of(box_m, m, 0, p_m_abs)
    sign_o = sign_of(box_o, o, chi, p_o_abs)
    q1, p1 = (q_m, sign_m * p_m_abs) if m == 1 else (q_o, sign_o * p_o_abs)
    q2, p2 = (q_o, sign_o * p_o_abs) if m == 1 else (q_m, sign_m * p_m_abs)
    if (q1 + q2) % 2 != 0:
        raise NotSimpleError(f"odd total intersection q1+q2 for {cyclic_reduce(w)}")
    return CanonicalCoords(q1, p1, q2, p2)


def coords_from_word_detailed(w: GroupWord) -> CoordsResult:
    """Combinatorial coordinates, reconciled against the trace oracle.

    Magnitudes must agree with the oracle outright; a per-box sign
    mismatch is repaired in favour of the oracle and reported through
    ``sign_flips`` (the trace polynomial fixes the convention).  Curves
    with constant trace (sigma_i parallels) skip the oracle.
    """
    raw = _combinatorial_coords(w)
    try:
        oracle = infer_coords_from_trace(cyclic_reduce(w))
    except CoordinateError as exc:
        if raw.q1 == 0 and raw.q2 == 0:
            return CoordsResult(raw, raw, (False, False), oracle_checked=False)
        raise NotSimpleError(f"trace oracle rejects {cyclic_reduce(w)}: {exc}") from exc
    if (raw.q1, raw.q2) != (oracle.q1, oracle.q2) or (
        abs(raw.p1),
        abs(raw.p2),
    ) != (abs(oracle.p1), abs(oracle.p2)):
        raise NotSimpleError(
            f"arc system of {cyclic_reduce(w)} gives {raw}, trace oracle {oracle}"
        )
    flips = (raw.p1 != oracle.p1, raw.p2 != oracle.p2)
    return CoordsResult(oracle, raw, flips, oracle_checked=True)


def coords_from_word(w: GroupWord) -> CanonicalCoords:
    """Canonical coordinates of the simple closed curve of ``w``."""
    return coords_from_word_detailed(w).coords


# ---------------------------------------------------------------------------
# Disjointness, enumeration, wheels.
# ---------------------------------------------------------------------------


def disjoint(w: GroupWord, wp: GroupWord) -> bool:
    """Whether the two simple curves admit disjoint representatives.

    A nonzero Thurston pairing certifies crossing outright; otherwise the
    exact arc-linkage test decides.
    """
    try:
        c, cp = infer_coords_from_trace(cyclic_reduce(w)), infer_coords_from_trace(
            cyclic_reduce(wp)
        )
        if thurston_pairing(c, cp) != 0:
            return False
    except CoordinateError:
        pass  # constant-trace curves carry no pairing obstruction
    return linkage.crossing_free(w, wp)


_SEED_TEXTS = ("t", "aTAt", "bTBt", "aBT", "AbT")


def seed_curves() -> list[GroupWord]:
    return [parse_word(s) for s in _SEED_TEXTS]


@functools.lru_cache(maxsize=32)
def enumerate_curves(depth: int) -> tuple[tuple[GroupWord, CanonicalCoords], ...]:
    """Distinct simple curves from twisting the seed family.

    Applies each of the four twist maps (about sigma_1 and sigma_2, both
    directions) up to ``depth`` times to the five seed curves and
    deduplicates by canonical coordinates, keeping a shortest word per
    class.  All outputs are simple because they are mapping-class images
    of simple seeds.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    best: dict[CanonicalCoords, GroupWord] = {}
    for seed in seed_curves():
        for m in range(-depth, depth + 1):
            w1 = twist_word(seed, 1, m)
            for n in range(-depth, depth + 1):
                w = cyclic_reduce(twist_word(w1, 2, n))
                coords = infer_coords_from_trace(w)
                prev = best.get(coords)
                if prev is None or (len(w), str(w)) < (len(prev), str(prev)):
                    best[coords] = w
    return tuple(sorted(((w, c) for c, w in best.items()), key=lambda t: t[1]))


def _int_rank(rows: list[tuple[int, ...]]) -> int:
    """Rank over Q of small integer vectors (fraction-free elimination)."""
    mat = [list(r) for r in rows if any(r)]
    rank, col, ncols = 0, 0, 4
    while mat and col < ncols:
        pivot = next((i for i, r in enumerate(mat) if r[col] != 0), None)
        if pivot is None:
            col += 1
            continue
        mat[0], mat[pivot] = mat[pivot], mat[0]
        head = mat.pop(0)
        mat = [
            [r[j] * head[col] - head[j] * r[col] for j in range(ncols)]
            for r in mat
        ]
        mat = [r for r in mat if any(r)]
        rank += 1
        col += 1
    return rank


def _wheel_candidates(depth: int):
    curves = list(enumerate_curves(depth))
    curves.sort(key=lambda t: (len(t[0]), sum(map(abs, t[1].as_tuple())), str(t[0])))
    return curves


def wheel_search(gamma: GroupWord, count: int, depth: int = 3) -> list[GroupWord]:
    """Curves disjoint from ``gamma`` spanning independent directions.

    Returns ``count`` members of the wheel of gamma whose coordinate
    vectors together with gamma's span dimension >= min(count+1, 3); a
    zero Thurston pairing is used as a fast necessary filter before the
    exact linkage test.
    """
    if count == 0:
        return []
    gcoords = infer_coords_from_trace(cyclic_reduce(gamma))
    chosen: list[GroupWord] = []
    taken: set[CanonicalCoords] = {gcoords}
    vectors = [gcoords.as_tuple()]
    for d in range(depth, depth + 3):
        for w, c in _wheel_candidates(d):
            if len(chosen) == count:
                return chosen
            if c in taken:
                continue
            if thurston_pairing(gcoords, c) != 0:
                continue
            # Once the span has hit 3 (its maximum on a wheel), further
            # members only need to be new classes.
            rank_now = _int_rank(vectors)
            if rank_now < 3 and _int_rank(vectors + [c.as_tuple()]) == rank_now:
                continue
            if not linkage.crossing_free(gamma, w):
                continue
            chosen.append(w)
            taken.add(c)
            vectors.append(c.as_tuple())
        if len(chosen) == count:
            return chosen
    raise WheelExhaustedError(
        f"found only {len(chosen)} of {count} independent wheel curves for {gamma}",
        depth + 2,
    )


def nonexceptional_partner(gamma: GroupWord) -> GroupWord:
    """A wheel member delta with (gamma, delta) not exceptional."""
    gcoords = infer_coords_from_trace(cyclic_reduce(gamma))
    if not is_admissible(gcoords):
        raise AdmissibilityError(f"curve {gamma} with {gcoords} is not admissible")
    for d in range(3, 6):
        for w, c in _wheel_candidates(d):
            if c == gcoords or is_exceptional_pair(gcoords, c):
                continue
            if thurston_pairing(gcoords, c) != 0:
                continue
            if linkage.crossing_free(gamma, w):
                return w
    raise WheelExhaustedError(f"no non-exceptional partner for {gamma}", 5)


# ---------------------------------------------------------------------------
# Rational laminations.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LaminationComponent:
    weight: Fraction
    word: GroupWord
    coords: CanonicalCoords


@dataclass(frozen=True)
class RationalLamination:
    """Weighted disjoint simple curves; coordinates extend linearly."""

    components: tuple[LaminationComponent, ...]

    @classmethod
    def from_components(cls, items) -> "RationalLamination":
        comps = []
        for weight, w in items:
            weight = Fraction(weight)
            if weight <= 0:
                raise AdmissibilityError("lamination weights must be positive")
            cw = cyclic_reduce(w)
            comps.append(LaminationComponent(weight, cw, infer_coords_from_trace(cw)))
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                if comps[i].coords == comps[j].coords:
                    raise AdmissibilityError("lamination components must be distinct")
                if not disjoint(comps[i].word, comps[j].word):
                    raise AdmissibilityError(
                        f"lamination components {comps[i].word} and "
                        f"{comps[j].word} intersect"
                    )
        return cls(tuple(comps))

    @classmethod
    def single(cls, w: GroupWord) -> "RationalLamination":
        return cls.from_components([(Fraction(1), w)])

    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        out = [Fraction(0)] * 4
        for comp in self.components:
            for i, x in enumerate(comp.coords.as_tuple()):
                out[i] += comp.weight * x
        return tuple(out)

    @property
    def q1(self) -> Fraction:
        return self.coords()[0]

    @property
    def p1(self) -> Fraction:
        return self.coords()[1]

    @property
    def q2(self) -> Fraction:
        return self.coords()[2]

    @property
    def p2(self) -> Fraction:
        return self.coords()[3]

    def is_admissible(self) -> bool:
        c = self.coords()
        return c[0] > 0 and c[2] > 0

    def __str__(self) -> str:
        return " + ".join(f"{c.weight}*{c.word}" for c in self.components)

    def to_json_dict(self) -> dict:
        return {
            "components": [
                {
                    "weight": str(c.weight),
                    "word": str(c.word),
                    "coords": list(c.coords.as_tuple()),
                }
                for c in self.components
            ]
        }


def parse_lamination(text: str) -> RationalLamination:
    """Parse the form ``a1*word1 + a2*word2`` with exact rational weights."""
    items = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if "*" in chunk:
            weight, wtext = chunk.split("*", 1)
            items.append((Fraction(weight.strip()), parse_word(wtext.strip())))
        else:
            items.append((Fraction(1), parse_word(chunk)))
    return RationalLamination.from_components(items)


@dataclass(frozen=True)
class AsymptoticLine:
    """Far-end direction data of a pleating ray."""

    x1_star: Fraction
    x2_star: Fraction
    psi: float
    im_ratio: Fraction


def asymptotic_line(xi: RationalLamination) -> AsymptoticLine:
    """Real-part asymptotes -2 p_i/q_i and the direction angle.

    tan(psi) = q1/q2 and Im tau1 / Im tau2 tends to q2/q1.
    """
    import math

    q1, p1, q2, p2 = xi.coords()
    if not (q1 > 0 and q2 > 0):
        raise AdmissibilityError(f"lamination {xi} is not admissible")
    return AsymptoticLine(
        x1_star=-2 * p1 / q1,
        x2_star=-2 * p2 / q2,
        psi=math.atan2(float(q1), float(q2)),
        im_ratio=q2 / q1,
    )
