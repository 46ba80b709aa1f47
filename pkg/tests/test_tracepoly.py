"""Exact trace polynomials, top-terms structure, coordinate inference."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from maskit12.errors import CoordinateError, SizeError
from maskit12.lamination import CanonicalCoords
from maskit12.tracepoly import (
    BiPoly,
    infer_coords_from_trace,
    substitute_shift,
    symbolic_rep,
    top_terms_check,
    trace_poly,
)
from maskit12.words import ParameterPoint, trace, word

T1 = BiPoly.var(1)
T2 = BiPoly.var(2)
ONE = BiPoly.const(1)


def test_symbolic_t():
    m = symbolic_rep(word("t"))
    assert m.a == ONE + T1 * T2
    assert m.b == T1
    assert m.c == T2
    assert m.d == ONE


def test_symbolic_commutator_matches_explicit_matrix():
    m = symbolic_rep(word("aTAt"))
    assert m.a == ONE - 2 * T2 + 4 * T2 * T2
    assert m.b == 4 * T2
    assert m.c == 2 * T2 * T2
    assert m.d == ONE + 2 * T2


def test_symbolic_det_is_one():
    for text in ("t", "aTAt", "aBT", "atbT", "aabtT"):
        assert symbolic_rep(word(text)).det() == ONE


def test_symbolic_cap():
    with pytest.raises(SizeError):
        symbolic_rep(word("at" * 30), cap=40)


def test_trace_poly_values():
    assert trace_poly(word("t")) == BiPoly({(0, 0): 2, (1, 1): 1})
    assert trace_poly(word("aTAt")) == BiPoly({(0, 0): 2, (0, 2): 4})
    assert trace_poly(word("bTBt")) == BiPoly({(0, 0): 2, (2, 0): 4})
    assert trace_poly(word("aBT")) == BiPoly(
        {(1, 1): 1, (1, 0): 2, (0, 1): -2, (0, 0): -2}
    )


def test_trace_poly_conjugation_invariant():
    w = word("aTbtB")
    base = trace_poly(w)
    for k in range(len(w)):
        assert trace_poly(w.rotated(k)) == base


def test_eval_matches_numeric_trace(rng):
    for text in ("t", "aTAt", "aBT", "atbtB", "aabT"):
        w = word(text)
        poly = trace_poly(w)
        for _ in range(20):
            tau1 = complex(rng.uniform(-5, 5), rng.uniform(0.1, 5))
            tau2 = complex(rng.uniform(-5, 5), rng.uniform(0.1, 5))
            num = trace(w, ParameterPoint(tau1, tau2))
            sym = poly.eval(tau1, tau2)
            assert abs(num - sym) <= 1e-9 * max(1.0, abs(num))


# -- substitution ----------------------------------------------------------


def test_substitute_shift_gives_twisted_trace():
    shifted = substitute_shift(trace_poly(word("t")), 1, Fraction(2))
    assert shifted == trace_poly(word("at"))
    assert shifted == BiPoly({(0, 0): 2, (1, 1): 1, (0, 1): 2})


def test_substitute_shift_zero_delta():
    poly = trace_poly(word("aBT"))
    assert substitute_shift(poly, 1, Fraction(0)) == poly


def test_substitute_shift_no_dependence():
    poly = trace_poly(word("aTAt"))  # only tau2 appears
    assert substitute_shift(poly, 1, Fraction(2)) == poly


# -- top terms -------------------------------------------------------------


def test_top_terms_t():
    rep = top_terms_check(word("t"), CanonicalCoords(1, 0, 1, 0))
    assert rep.passes and rep.sign == 1 and rep.remainder_total_degree == 0


def test_top_terms_commutator():
    rep = top_terms_check(word("aTAt"), CanonicalCoords(0, 0, 2, 0))
    assert rep.passes and rep.sign == 1
    assert rep.remainder_total_degree <= 0


def test_top_terms_subleading_coefficients():
    poly = trace_poly(word("aBT"))
    assert poly.coeff(0, 1) == -2  # 2 * p1
    assert poly.coeff(1, 0) == 2  # 2 * p2
    rep = top_terms_check(word("aBT"), CanonicalCoords(1, -1, 1, 1))
    assert rep.passes


def test_top_terms_rejects_wrong_coords():
    rep = top_terms_check(word("t"), CanonicalCoords(1, 1, 1, 0))
    assert not rep.passes


def test_top_terms_zero_poly_rejected():
    with pytest.raises(CoordinateError):
        top_terms_check(word("t"), CanonicalCoords(0, 0, 0, 0))


# -- coordinate inference ---------------------------------------------------


def test_infer_coords_table():
    table = {
        "t": (1, 0, 1, 0),
        "aTAt": (0, 0, 2, 0),
        "bTBt": (2, 0, 0, 0),
        "aBT": (1, -1, 1, 1),
        "AbT": (1, 1, 1, -1),
    }
    for text, expected in table.items():
        assert infer_coords_from_trace(word(text)).as_tuple() == expected


def test_infer_coords_constant_trace_rejected():
    with pytest.raises(CoordinateError):
        infer_coords_from_trace(word("a"))


def test_infer_coords_non_simple_rejected():
    # S1 S2 has constant trace 6: no curve shape at all
    with pytest.raises(CoordinateError):
        infer_coords_from_trace(word("ab"))


def test_infer_coords_exceptional_pair_words():
    assert infer_coords_from_trace(word("ttb")).as_tuple() == (2, 0, 2, 1)
    assert infer_coords_from_trace(word("tbtbA")).as_tuple() == (2, -1, 2, 2)


# -- polynomial ring sanity -------------------------------------------------


coeffs = st.integers(-4, 4)
monos = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monos, coeffs, max_size=6).map(BiPoly)


@given(polys, polys)
def test_ring_commutative(p, q):
    assert p * q == q * p
    assert p + q == q + p


@given(polys, polys, polys)
def test_ring_distributive(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polys)
def test_shift_inverse(p):
    assert substitute_shift(substitute_shift(p, 1, Fraction(3)), 1, Fraction(-3)) == p


def test_pretty_format():
    assert trace_poly(word("aBT")).pretty() == "t1*t2 + 2*t1 - 2*t2 - 2"
    assert trace_poly(word("t")).pretty() == "t1*t2 + 2"
    assert BiPoly.zero().pretty() == "0"


def test_json_form():
    assert trace_poly(word("t")).to_json_dict() == {"[1,1]": "1", "[0,0]": "2"}
