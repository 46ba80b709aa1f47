"""Exact arc-linkage tests for curves on the twice punctured torus.

A curve drawn on the hexagonal fundamental domain decomposes into arcs
between the six sides; two curves are disjoint exactly when both arc
systems can be realised with no forced transversal crossing once the
endpoint orderings are propagated across the glued sides.  The bookkeeping
of those orderings is done here on the boundary circle of the universal
cover: the six sides become six disjoint intervals on R u {oo} (in the
hexagon's boundary order T, S2^-1, S1^-1, T^-1, S1, S2), the side pairings
become integer Moebius matrices mapping the exterior of one interval into
the interior of its partner, and the arcs of a cyclically reduced word are
the axes of its cyclic rotations.  Two arcs cross iff their endpoint pairs
link on the circle, which reduces to the sign of a resultant of two
integer quadratics, so every decision below is exact integer arithmetic.

The interval pattern encodes the surface's gluing; it is pinned by the
regression facts in tests/test_linkage.py (the known disjoint and crossing
pairs of the standard low-complexity curves).
"""

from __future__ import annotations

import functools

from .errors import NotSimpleError
from .words import Gen, GroupWord, cyclic_reduce

# Inversion circle (center, radius) over each side interval, in boundary
# order: T [-19,-13], S2^-1 [-11,-5], S1^-1 [-3,3], T^-1 [5,11],
# S1 [13,19], S2 [21,27].
_CIRCLES = {
    "t": (-16, 3),
    "B": (-8, 3),
    "A": (0, 3),
    "T": (8, 3),
    "a": (16, 3),
    "b": (24, 3),
}


def _reflection(m: int, r: int) -> tuple[int, int, int, int]:
    # x -> m + r^2/(x - m) as a real projective matrix (det < 0).
    return (m, r * r - m * m, 1, -m)


def _mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _adjugate(x):
    a, b, c, d = x
    return (d, -b, -c, a)


def _side_pairing(letter_char: str, inverse_char: str):
    # Maps the exterior of the letter's interval into the interval of the
    # inverse letter; composition of the two wall inversions.
    k_from = _reflection(*_CIRCLES[letter_char])
    k_to = _reflection(*_CIRCLES[inverse_char])
    return _mul(k_to, k_from)


_GEN_MATS = {
    (Gen.T, False): _side_pairing("t", "T"),
    (Gen.S1, False): _side_pairing("a", "A"),
    (Gen.S2, False): _side_pairing("b", "B"),
}
_GEN_MATS[(Gen.T, True)] = _adjugate(_GEN_MATS[(Gen.T, False)])
_GEN_MATS[(Gen.S1, True)] = _adjugate(_GEN_MATS[(Gen.S1, False)])
_GEN_MATS[(Gen.S2, True)] = _adjugate(_GEN_MATS[(Gen.S2, False)])


def _word_matrix(w: GroupWord):
    m = (1, 0, 0, 1)
    for let in w.letters:
        m = _mul(m, _GEN_MATS[(let.gen, let.inverted)])
    return m


def _axis_quadratic(mat) -> tuple[int, int, int]:
    # Fixed points of (ax+b)/(cx+d) are the roots of c x^2 + (d-a) x - b.
    a, b, c, d = mat
    return (c, d - a, -b)


def _linked(q: tuple[int, int, int], r: tuple[int, int, int]) -> bool:
    """Whether two real quadratics have interleaved root pairs.

    Res(q, r) = lc(q)^2 (r at q's roots product); negative exactly when
    one root of r lies between the roots of q.
    """
    a, b, c = q
    d, e, f = r
    res = (a * f - c * d) ** 2 - (a * e - b * d) * (b * f - c * e)
    return res < 0


@functools.lru_cache(maxsize=4096)
def _rotation_quadratics(w: GroupWord) -> tuple[tuple[int, int, int], ...]:
    return tuple(_axis_quadratic(_word_matrix(rot)) for rot in w.rotations())


def _prepared(w: GroupWord) -> GroupWord:
    cw = cyclic_reduce(w)
    if len(cw) == 0:
        raise NotSimpleError("trivial word does not define a curve")
    return cw


def is_simple(w: GroupWord) -> bool:
    """Whether the conjugacy class of ``w`` is a simple closed curve.

    The lifts of the curve crossing the fundamental domain are exactly the
    axes of the cyclic rotations of the reduced word; the curve is embedded
    iff no two of those axes link.
    """
    cw = _prepared(w)
    if cw.is_proper_power():
        return False
    quads = _rotation_quadratics(cw)
    for i in range(len(quads)):
        for j in range(i + 1, len(quads)):
            if _linked(quads[i], quads[j]):
                return False
    return True


def crossing_free(w1: GroupWord, w2: GroupWord) -> bool:
    """Whether the two curves admit disjoint representatives.

    Both words must individually be simple (checked; NotSimpleError
    otherwise).  Curves in the same class count as disjoint (parallel
    copies).
    """
    c1, c2 = _prepared(w1), _prepared(w2)
    for w in (c1, c2):
        if not is_simple(w):
            raise NotSimpleError(f"word {w} is not a simple closed curve")
    q1s = _rotation_quadratics(c1)
    q2s = _rotation_quadratics(c2)
    for qa in q1s:
        for qb in q2s:
            if _linked(qa, qb):
                return False
    return True
