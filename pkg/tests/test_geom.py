"""Hyperbolic helper formulas against independent geometric oracles."""

import cmath
import math

import numpy as np
import pytest

from maskit12.errors import PreconditionError
from maskit12.geom import (
    TraceClass,
    bending_angle,
    complex_distance,
    complex_length_from_trace,
    cross_ratio_for_axes,
)


# -- complex distance --------------------------------------------------------


def test_parallel_axes_distance_one():
    d = complex_distance(1, -1, math.e, -math.e)
    assert abs(d.d - 1.0) < 1e-12
    assert abs(d.psi) < 1e-12


def test_perpendicular_diameters():
    d = complex_distance(1, -1, 1j, -1j)
    assert abs(d.d) < 1e-12
    assert abs(abs(d.psi) - math.pi / 2) < 1e-12


def test_translated_axis_sinh_identity():
    # endpoints c +- r e^{i a} and their +2 translates satisfy
    # sinh^2(D/2) = -1/(r^2 e^{2ia})
    r, a, c = 3.0, math.pi / 3, 0.7 + 0.2j
    z1, z2 = c + r * cmath.exp(1j * a), c - r * cmath.exp(1j * a)
    d = complex_distance(z1, z2, z1 + 2, z2 + 2)
    got = cmath.sinh(complex(d.d, d.psi) / 2) ** 2
    expected = -1.0 / (r**2 * cmath.exp(2j * a))
    assert abs(got - expected) < 1e-9


def test_cross_ratio_identity():
    z1, z2, w1, w2 = 0.3 + 0j, -1.7 + 0j, 2.5 + 1j, -0.4 - 2j
    d = complex_distance(z1, z2, w1, w2)
    x = cross_ratio_for_axes(z1, z2, w1, w2)
    roundtrip = (cmath.cosh(complex(d.d, d.psi) / 2) / cmath.sinh(complex(d.d, d.psi) / 2)) ** 2
    assert abs(roundtrip - x) < 1e-9 * max(1.0, abs(x))


def test_swap_symmetry():
    z1, z2, w1, w2 = 0.3, -1.7, 2.5 + 1j, -0.4 - 2j
    d1 = complex_distance(z1, z2, w1, w2)
    d2 = complex_distance(w1, w2, z1, z2)
    assert abs(d1.d - d2.d) < 1e-9
    # rotation part is defined up to sign mod pi under the swap
    delta = (d1.psi + d2.psi) % math.pi
    assert min(delta, math.pi - delta) < 1e-9 or abs(d1.psi - d2.psi) < 1e-9


def _random_sl2(rng):
    while True:
        m = rng.normal(size=4) + 1j * rng.normal(size=4)
        det = m[0] * m[3] - m[1] * m[2]
        if abs(det) > 1e-3:
            s = np.sqrt(det)
            return m / s


def test_moebius_invariance(rng):
    z = [0.3 + 0j, -1.7 + 0j, 2.5 + 1j, -0.4 - 2j]
    base = complex_distance(*z)
    for _ in range(25):
        a, b, c, d = _random_sl2(rng)
        img = [(a * p + b) / (c * p + d) for p in z]
        moved = complex_distance(*img)
        assert abs(moved.d - base.d) < 1e-9
        assert min(abs(moved.psi - base.psi), abs(abs(moved.psi) - abs(base.psi))) < 1e-8


def test_infinity_endpoint():
    # vertical line (0, infinity) vs unit half circle: they cross at i
    d = complex_distance(0, None, 1, -1)
    assert abs(d.d) < 1e-12
    assert abs(abs(d.psi) - math.pi / 2) < 1e-12


def test_coincident_endpoints_rejected():
    with pytest.raises(PreconditionError):
        complex_distance(1, -1, 1, 2)


# -- bending angle -----------------------------------------------------------


def test_bending_angle_right_angle_case():
    assert abs(bending_angle(math.pi / 2, 1.2) - 1.2) < 1e-15


def test_bending_angle_zero_theta():
    assert bending_angle(0.7, 0.0) == 0.0


def test_bending_angle_worked_value():
    got = bending_angle(math.pi / 6, math.pi / 2)
    assert abs(got - 2 * math.asin(0.5 * math.sqrt(2) / 2)) < 1e-12
    assert abs(got - 0.722734) < 1e-6


def _bending_oracle(psi, theta):
    """Turn angle of a geodesic crossing a bent line, built from vectors.

    The crossing line L is the x axis; the two flat pieces are planes
    through L making angle theta with each other; the geodesic leaves at
    angle psi to L in each piece.  The bend is the angle between the two
    direction vectors.
    """
    u1 = np.array(
        [math.cos(psi), math.sin(psi) * math.cos(theta / 2), math.sin(psi) * math.sin(theta / 2)]
    )
    u2 = np.array(
        [math.cos(psi), math.sin(psi) * math.cos(theta / 2), -math.sin(psi) * math.sin(theta / 2)]
    )
    return math.acos(np.clip(np.dot(u1, u2), -1.0, 1.0))


def test_bending_angle_against_vector_oracle(rng):
    for _ in range(1000):
        psi = rng.uniform(1e-6, math.pi / 2)
        theta = rng.uniform(0, math.pi - 1e-9)
        assert abs(bending_angle(psi, theta) - _bending_oracle(psi, theta)) < 1e-9


def test_bending_angle_bounded_by_theta(rng):
    for _ in range(200):
        psi = rng.uniform(1e-3, math.pi / 2)
        theta = rng.uniform(1e-3, math.pi - 1e-3)
        phi = bending_angle(psi, theta)
        assert phi <= theta + 1e-12
        if abs(psi - math.pi / 2) > 1e-3:
            assert phi < theta


def test_bending_angle_domain_checks():
    with pytest.raises(PreconditionError):
        bending_angle(0.0, 1.0)
    with pytest.raises(PreconditionError):
        bending_angle(1.0, math.pi)


# -- complex length ----------------------------------------------------------


def test_length_inverse_pair():
    got = complex_length_from_trace(2 * math.cosh(1.0))
    assert got.kind is TraceClass.LOXODROMIC
    assert abs(got.value - 2.0) < 1e-12


def test_length_sign_normalised():
    got = complex_length_from_trace(-2 * math.cosh(1.0))
    assert abs(got.value - 2.0) < 1e-12


def test_length_worked_value():
    got = complex_length_from_trace(3.0)
    assert abs(got.value - 2 * math.acosh(1.5)) < 1e-12
    assert abs(got.value - 1.92485) < 1e-5


def test_length_flags():
    assert complex_length_from_trace(2.0).kind is TraceClass.PARABOLIC
    assert complex_length_from_trace(-2.0).kind is TraceClass.PARABOLIC
    assert complex_length_from_trace(0.5).kind is TraceClass.ELLIPTIC


def test_length_roundtrip_random(rng):
    for _ in range(100):
        tr = complex(rng.uniform(-6, 6), rng.uniform(-6, 6))
        if abs(tr.imag) < 1e-3 and abs(tr.real) <= 2.1:
            continue
        cl = complex_length_from_trace(tr)
        assert cl.kind is TraceClass.LOXODROMIC
        back = 2 * cmath.cosh(cl.value / 2)
        assert min(abs(back - tr), abs(back + tr)) < 1e-10 * max(1.0, abs(tr))
