"""Exact arc-linkage oracle: pinned disjointness facts and equivariance.

The expected values below calibrate the boundary model: the first block
is read off the worked pleating-ray examples, the second is forced by
uniqueness of bending measures (two curves whose joint real-trace locus
is already exhausted by other pleating planes cannot be disjoint), and
the rest were fixed by this oracle before release.
"""

import itertools

import pytest

from maskit12 import linkage
from maskit12.errors import NotSimpleError
from maskit12.words import twist_word, word

KNOWN_DISJOINT = [
    ("t", "aTAt"),
    ("t", "bTBt"),
    ("t", "aBT"),
    ("t", "AbT"),
    ("at", "aTAt"),  # twist image of (t, aTAt)
    ("ttb", "tbtbA"),  # exceptional pair
]

KNOWN_CROSSING = [
    ("aTAt", "bTBt"),  # both commutator curves pinch into the same planes
    ("at", "bTBt"),  # trace of [S2,T^-1] is not real along the at-ray
    ("t", "at"),  # nonzero pairing
    ("t", "aatBB"),  # opposite strands: horizontal vs vertical in box 1
    ("aBT", "AbT"),  # pairing 0 but linked arcs
]


@pytest.mark.parametrize("w1,w2", KNOWN_DISJOINT)
def test_known_disjoint(w1, w2):
    assert linkage.crossing_free(word(w1), word(w2))


@pytest.mark.parametrize("w1,w2", KNOWN_CROSSING)
def test_known_crossing(w1, w2):
    assert not linkage.crossing_free(word(w1), word(w2))


def test_same_class_counts_as_disjoint():
    assert linkage.crossing_free(word("t"), word("t"))
    assert linkage.crossing_free(word("t"), word("t").inverse())


def test_simple_words():
    for text in ("t", "a", "b", "aTAt", "bTBt", "aBT", "AbT", "at", "ta", "tB", "ttb"):
        assert linkage.is_simple(word(text)), text


def test_non_simple_words():
    # ab is essential and non-peripheral but disjoint from both pinched
    # curves, which no simple curve can be; powers are never simple.
    for text in ("ab", "aa", "tt", "abab", "aabb"):
        assert not linkage.is_simple(word(text)), text


def test_trivial_word_rejected():
    with pytest.raises(NotSimpleError):
        linkage.is_simple(word("aA"))


def test_crossing_free_requires_simple_inputs():
    with pytest.raises(NotSimpleError):
        linkage.crossing_free(word("ab"), word("t"))


def test_twist_equivariance():
    base = ["t", "aTAt", "bTBt", "aBT", "AbT", "at", "tB"]
    ws = [word(s) for s in base]
    for w1, w2 in itertools.combinations(ws, 2):
        expected = linkage.crossing_free(w1, w2)
        for axis, n in ((1, 1), (2, -1), (1, -2), (2, 2)):
            got = linkage.crossing_free(twist_word(w1, axis, n), twist_word(w2, axis, n))
            assert got == expected, (str(w1), str(w2), axis, n)


def test_simplicity_twist_invariant():
    for text in ("t", "aBT", "ab", "abT"):
        expected = linkage.is_simple(word(text))
        for axis, n in ((1, 2), (2, -1)):
            assert linkage.is_simple(twist_word(word(text), axis, n)) == expected


def test_crossing_free_symmetric():
    ws = [word(s) for s in ("t", "aTAt", "bTBt", "aBT", "AbT", "at", "ttb")]
    for w1, w2 in itertools.combinations(ws, 2):
        assert linkage.crossing_free(w1, w2) == linkage.crossing_free(w2, w1)


def test_verdicts_invariant_under_inverse_words():
    ws = [word(s) for s in ("t", "aTAt", "aBT", "at")]
    for w1, w2 in itertools.combinations(ws, 2):
        base = linkage.crossing_free(w1, w2)
        assert linkage.crossing_free(w1.inverse(), w2) == base
        assert linkage.crossing_free(w1, w2.inverse()) == base
