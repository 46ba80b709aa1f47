"""Membership bounds, twist translations, fundamental disk geometry."""

import cmath

import pytest
from hypothesis import given
from hypothesis import strategies as st

from maskit12.domain import (
    Membership,
    dehn_twist,
    fundamental_disks,
    membership,
)
from maskit12.errors import DomainError
from maskit12.words import ParameterPoint, evaluate, word

pos = st.floats(0.01, 50)
re = st.floats(-20, 20)
points = st.builds(
    lambda a, b, c, d: ParameterPoint(complex(a, b), complex(c, d)), re, pos, re, pos
)


def test_membership_examples():
    assert membership(ParameterPoint(2.5j, 2.5j)).status is Membership.PROVED_INSIDE
    assert membership(ParameterPoint(0.4j, 100j)).status is Membership.PROVED_OUTSIDE
    assert membership(ParameterPoint(1.5j, 2j)).status is Membership.UNKNOWN


def test_membership_witness_names_binding_inequality():
    v = membership(ParameterPoint(0.4j, 100j))
    assert "Im tau1" in v.witness and "< 1/2" in v.witness


def test_membership_rejects_bad_chart():
    with pytest.raises(DomainError):
        ParameterPoint(1 + 0j, 2j)


@given(points)
def test_membership_total(p):
    assert membership(p).status in set(Membership)


@given(points, st.floats(0, 10), st.floats(0, 10))
def test_membership_monotone_in_im(p, d1, d2):
    if membership(p).status is Membership.PROVED_INSIDE:
        bigger = ParameterPoint(p.tau1 + 1j * d1, p.tau2 + 1j * d2)
        assert membership(bigger).status is Membership.PROVED_INSIDE


def test_dehn_twist_translation():
    p = ParameterPoint(2j, 2j)
    q = dehn_twist(p, 1, 1)
    assert q.tau1 == 2 + 2j and q.tau2 == 2j
    assert dehn_twist(p, 2, 0) == p
    assert dehn_twist(p, 2, -3).tau2 == -6 + 2j


@given(points, st.integers(-5, 5))
def test_dehn_twist_preserves_inside(p, n):
    if membership(p).status is Membership.PROVED_INSIDE:
        assert membership(dehn_twist(p, 1, n)).status is Membership.PROVED_INSIDE


def test_fundamental_disks_values():
    d = fundamental_disks(ParameterPoint(4j, 2j))
    assert d.radius == 0.5
    assert d.b2_center == 0.5j
    assert d.b3_center == 4j - 0.5j


def test_fundamental_disks_radius_shrinks():
    r_small = fundamental_disks(ParameterPoint(4j, 1000j)).radius
    assert r_small == 1e-3


def _t_maps_boundary(p, n_samples=32, tol=1e-9):
    d = fundamental_disks(p)
    t = evaluate(word("t"), p)
    for k in range(n_samples):
        z = d.b2_center + d.radius * cmath.exp(2j * cmath.pi * k / n_samples)
        image = t.apply(z)
        assert image is not None
        assert abs(abs(image - d.b3_center) - d.radius) < tol


def test_t_pairs_disk_boundaries_sample():
    _t_maps_boundary(ParameterPoint(4j, 2j))
    _t_maps_boundary(ParameterPoint(1.3 + 5j, -2.1 + 1.2j))


def test_t_pairs_disk_boundaries_random(rng):
    for _ in range(50):
        p = ParameterPoint(
            complex(rng.uniform(-5, 5), rng.uniform(1, 10)),
            complex(rng.uniform(-5, 5), rng.uniform(1, 10)),
        )
        _t_maps_boundary(p)
