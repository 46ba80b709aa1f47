"""Canonical coordinates, pairing, wheels, enumeration, laminations."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from maskit12.errors import AdmissibilityError, NotSimpleError
from maskit12.lamination import (
    CanonicalCoords,
    RationalLamination,
    asymptotic_line,
    coords_from_word,
    coords_from_word_detailed,
    disjoint,
    enumerate_curves,
    infer_coords_from_trace,
    is_admissible,
    is_exceptional_pair,
    nonexceptional_partner,
    parse_lamination,
    star,
    thurston_pairing,
    wheel_search,
)
from maskit12.words import cyclic_reduce, word

coords_st = st.builds(
    CanonicalCoords,
    st.integers(0, 6),
    st.integers(-6, 6),
    st.integers(0, 6),
    st.integers(-6, 6),
)


# -- table values ------------------------------------------------------------


SEED_TABLE = {
    "t": (1, 0, 1, 0),
    "aTAt": (0, 0, 2, 0),
    "bTBt": (2, 0, 0, 0),
    "aBT": (1, -1, 1, 1),
    "AbT": (1, 1, 1, -1),
}


def test_coords_from_word_seed_table():
    for text, expected in SEED_TABLE.items():
        assert coords_from_word(word(text)).as_tuple() == expected


def test_coords_from_word_needs_no_sign_reconciliation_on_seeds():
    for text in SEED_TABLE:
        res = coords_from_word_detailed(word(text))
        assert res.raw == res.coords
        assert res.sign_flips == (False, False)
        assert res.oracle_checked


def test_coords_from_word_sigma_parallel():
    # sigma_1 itself: no trace data, pure combinatorics
    res = coords_from_word_detailed(word("a"))
    assert res.coords.as_tuple() == (0, 1, 0, 0)
    assert not res.oracle_checked


def test_coords_from_word_rejects_non_simple():
    with pytest.raises(NotSimpleError):
        coords_from_word(word("ab"))


def test_coords_conjugation_invariant():
    w = word("aBT")
    for k in range(3):
        assert coords_from_word(w.rotated(k)) == coords_from_word(w)


# -- star and pairing --------------------------------------------------------


def test_star_examples():
    assert star(CanonicalCoords(1, 0, 1, 0)) == (0, 1, 0, 1)
    assert star(CanonicalCoords(0, 0, 0, 0)) == (0, 0, 0, 0)
    assert star(CanonicalCoords(1, -1, 1, 1)) == (1, 1, -1, 1)


def test_pairing_examples():
    assert thurston_pairing(CanonicalCoords(1, 0, 1, 0), CanonicalCoords(0, 0, 2, 0)) == 0
    assert thurston_pairing(CanonicalCoords(1, 0, 1, 0), CanonicalCoords(1, -1, 1, 1)) == 0
    assert thurston_pairing(CanonicalCoords(1, 1, 1, 0), CanonicalCoords(1, 0, 1, 0)) == -1


@given(coords_st, coords_st)
def test_pairing_antisymmetric(c, cp):
    assert thurston_pairing(c, cp) == -thurston_pairing(cp, c)
    assert thurston_pairing(c, c) == 0


@given(coords_st, coords_st)
def test_pairing_equals_dot_with_star(c, cp):
    # The dual vector pairs on the left: Om(c, c') = star(c) . c'.
    left = sum(x * y for x, y in zip(star(c), cp.as_tuple()))
    right = sum(x * y for x, y in zip(c.as_tuple(), star(cp)))
    assert thurston_pairing(c, cp) == left == -right


@given(coords_st)
def test_star_star_is_rotation_by_pi(c):
    # blockwise: star twice negates each (q, p) block
    double = star(_as_coords_like(star(c)))
    assert double == (-c.q1, -c.p1, -c.q2, -c.p2)


def _as_coords_like(vec):
    class _V:
        def __init__(self, q1, p1, q2, p2):
            self.q1, self.p1, self.q2, self.p2 = q1, p1, q2, p2

    return _V(*vec)


# -- predicates ----------------------------------------------------------------


def test_admissible_examples():
    assert is_admissible(CanonicalCoords(1, 0, 1, 0))
    assert not is_admissible(CanonicalCoords(0, 0, 2, 0))
    assert not is_admissible(CanonicalCoords(0, 0, 0, 0))


def test_exceptional_examples():
    assert is_exceptional_pair(CanonicalCoords(2, 0, 2, 1), CanonicalCoords(2, -1, 2, 2))
    assert not is_exceptional_pair(CanonicalCoords(1, 0, 1, 0), CanonicalCoords(0, 0, 2, 0))
    c = CanonicalCoords(3, 1, 2, -1)
    assert is_exceptional_pair(c, c)


# -- disjointness ----------------------------------------------------------------


def test_disjoint_examples():
    assert disjoint(word("t"), word("aTAt"))
    assert disjoint(word("t"), word("aBT"))
    # fixed by the arc-linkage oracle: the two commutator curves cross
    assert not disjoint(word("aTAt"), word("bTBt"))


def test_disjoint_propagates_not_simple():
    with pytest.raises(NotSimpleError):
        disjoint(word("ab"), word("t"))


def test_disjoint_handles_constant_trace_curves():
    assert disjoint(word("a"), word("aTAt"))  # sigma_1 misses [S1, T^-1]


# -- enumeration -----------------------------------------------------------------


def test_enumerate_depth0_is_seed_table():
    got = {c.as_tuple() for _, c in enumerate_curves(0)}
    assert got == set(SEED_TABLE.values())


def test_enumerate_depth1_contains_single_twist():
    # S1 T appears, with twist read off the trace polynomial 2+t1t2+2t2
    got = {c.as_tuple() for _, c in enumerate_curves(1)}
    assert (1, 1, 1, 0) in got


def test_enumerate_parity_and_simplicity():
    for w, c in enumerate_curves(3):
        assert (c.q1 + c.q2) % 2 == 0
        assert infer_coords_from_trace(w) == c


def test_enumerate_depth4_size():
    assert len(enumerate_curves(4)) >= 100


def test_enumerate_oracle_agreement_depth4():
    # combinatorial coordinates match the trace oracle, signs included
    flips = set()
    for w, c in enumerate_curves(4):
        res = coords_from_word_detailed(w)
        assert res.coords == c
        assert (abs(res.raw.p1), abs(res.raw.p2)) == (abs(c.p1), abs(c.p2))
        flips.add(res.sign_flips)
    assert flips == {(False, False)}


# -- wheels ---------------------------------------------------------------------


def test_wheel_search_t():
    got = wheel_search(word("t"), 2)
    classes = {infer_coords_from_trace(cyclic_reduce(w)).as_tuple() for w in got}
    allowed = {(0, 0, 2, 0), (2, 0, 0, 0), (1, -1, 1, 1), (1, 1, 1, -1)}
    assert classes <= allowed and len(classes) == 2
    for w in got:
        assert disjoint(word("t"), w)


def test_wheel_search_count_zero():
    assert wheel_search(word("t"), 0) == []


def test_wheel_search_spans_dimension_three():
    got = wheel_search(word("t"), 2)
    vecs = [infer_coords_from_trace(word("t")).as_tuple()] + [
        infer_coords_from_trace(cyclic_reduce(w)).as_tuple() for w in got
    ]
    from maskit12.lamination import _int_rank

    assert _int_rank(vecs) == 3


def test_nonexceptional_partner_t():
    w = nonexceptional_partner(word("t"))
    c = infer_coords_from_trace(cyclic_reduce(w))
    assert disjoint(word("t"), w)
    assert not is_exceptional_pair(CanonicalCoords(1, 0, 1, 0), c)


def test_nonexceptional_partner_needs_admissible():
    with pytest.raises(AdmissibilityError):
        nonexceptional_partner(word("aTAt"))


# -- laminations -----------------------------------------------------------------


def test_lamination_coords_linear():
    xi = parse_lamination("1*t + 1*aTAt")
    assert xi.coords() == (1, 0, 3, 0)
    assert xi.is_admissible()


def test_lamination_rejects_crossing_components():
    with pytest.raises(AdmissibilityError):
        parse_lamination("1*aTAt + 1*bTBt")


def test_lamination_rejects_duplicates():
    with pytest.raises(AdmissibilityError):
        parse_lamination("1*t + 1/2*t")


def test_lamination_json():
    xi = parse_lamination("1/2*t")
    assert xi.to_json_dict() == {
        "components": [{"weight": "1/2", "word": "t", "coords": [1, 0, 1, 0]}]
    }


def test_asymptotic_line_t():
    line = asymptotic_line(RationalLamination.single(word("t")))
    assert line.x1_star == 0 and line.x2_star == 0
    assert abs(line.psi - math.pi / 4) < 1e-15
    assert line.im_ratio == 1


def test_asymptotic_line_ratio_is_cot_psi():
    for text in ("t", "at", "aBT", "ttb"):
        line = asymptotic_line(RationalLamination.single(word(text)))
        assert abs(float(line.im_ratio) - 1.0 / math.tan(line.psi)) < 1e-12


def test_asymptotic_line_twisted():
    line = asymptotic_line(RationalLamination.single(word("at")))
    assert line.x1_star == -2 and line.x2_star == 0


def test_asymptotic_line_mixed_ratio():
    # linearity gives q = (1, 3), hence Im tau1 / Im tau2 -> 3
    line = asymptotic_line(parse_lamination("1*t + 1*aTAt"))
    assert line.im_ratio == 3
    assert line.x1_star == 0 and line.x2_star == 0


def test_asymptotic_line_needs_admissible():
    with pytest.raises(AdmissibilityError):
        asymptotic_line(RationalLamination.single(word("aTAt")))
