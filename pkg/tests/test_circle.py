"""Integer-lattice (circle) coherent states: overlaps and expectations."""
import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from landau_coherent.circle import (
    CirclePoint,
    coefficient,
    j_expectation,
    overlap,
    theta3,
    u_expectation,
    u_relative_expectation,
)
from landau_coherent.errors import NonConvergent

import oracles

TWO_PI = 2.0 * math.pi


def test_angular_label_is_reduced():
    assert CirclePoint(0.0, 7.0).phi == pytest.approx(7.0 - TWO_PI, abs=1e-15)
    assert CirclePoint(0.0, -1.0).phi == pytest.approx(TWO_PI - 1.0, abs=1e-15)
    assert CirclePoint(0.0, 0.5).phi == 0.5


def test_xi_label():
    p = CirclePoint(1.5, 0.25)
    assert p.xi == pytest.approx(math.exp(-1.5) * cmath.exp(0.25j), rel=1e-15)


def test_coefficient_values():
    p = CirclePoint(1.0, 0.3)
    # e^{l j - i j phi - j^2/2}
    assert coefficient(p, 2) == pytest.approx(cmath.exp(-0.6j), rel=1e-14)
    assert coefficient(p, -1) == pytest.approx(cmath.exp(complex(-1.5, 0.3)), rel=1e-14)
    assert coefficient(p, 0) == 1.0


def test_coefficient_exact_negative_one():
    # l=1, phi=pi/2, j=2: the gaussian factor cancels and e^{-i pi} remains
    got = coefficient(CirclePoint(1.0, math.pi / 2.0), 2)
    assert got == pytest.approx(-1.0 + 0j, abs=1e-15)


def test_coefficient_log_magnitude_is_concave_with_peak_near_l():
    for l in (1.3, -2.6, 0.0):
        p = CirclePoint(l, 0.7)
        logs = [math.log(abs(coefficient(p, j))) for j in range(-8, 9)]
        for left, mid, right in zip(logs, logs[1:], logs[2:]):
            assert left - 2.0 * mid + right == pytest.approx(-1.0, abs=1e-12)
        peak = max(range(-8, 9), key=lambda j: abs(coefficient(p, j)))
        assert peak == round(l)


def test_coefficient_index_must_be_an_integer():
    p = CirclePoint(0.0, 0.0)
    with pytest.raises(ValueError):
        coefficient(p, 1.5)
    assert coefficient(p, np.int64(2)) == pytest.approx(math.exp(-2.0), rel=1e-14)


@pytest.mark.parametrize("z,tau", [
    (0j, 1j / math.pi),
    (0.25 + 0j, 1j / math.pi),
    (0.3 + 0.05j, 1j / math.pi),
    (0.1 - 0.2j, 0.3 + 0.8j),
])
def test_theta3_against_mpmath(z, tau):
    want = oracles.theta3(z, tau)
    got = theta3(z, tau)
    assert got == pytest.approx(complex(want), rel=1e-13)


def test_theta3_is_one_periodic_in_z():
    tau = 1j / math.pi
    assert theta3(1.0 + 0j, tau) == pytest.approx(theta3(0j, tau), rel=1e-13)
    z = 0.3 + 0.05j
    assert theta3(z + 1.0, tau) == pytest.approx(theta3(z, tau), rel=1e-13)


def test_theta3_needs_upper_half_plane():
    with pytest.raises(NonConvergent):
        theta3(0j, 1.0 - 0.5j)
    with pytest.raises(NonConvergent):
        theta3(0j, 2.0 + 0j)


@pytest.mark.parametrize("p,q", [
    (CirclePoint(1.2, 0.5), CirclePoint(-0.7, 2.0)),
    (CirclePoint(3.5, 1.0), CirclePoint(2.5, 4.0)),
    (CirclePoint(0.0, 0.0), CirclePoint(0.0, 0.0)),
])
def test_overlap_against_oracle(p, q):
    want = oracles.overlap(p.l, p.phi, q.l, q.phi)
    assert overlap(p, q) == pytest.approx(complex(want), rel=1e-12, abs=1e-14)


def test_self_overlap_is_real_and_at_least_the_vacuum_value():
    for l in (0.0, -2.3, 4.1):
        ov = overlap(CirclePoint(l, 1.0), CirclePoint(l, 1.0))
        assert abs(ov.imag) <= 1e-13 * abs(ov)
        assert ov.real >= 1.772637204826652  # theta3(0 | i/pi), the minimum over l


@given(
    st.floats(min_value=-4.0, max_value=4.0),
    st.floats(min_value=0.0, max_value=TWO_PI),
    st.floats(min_value=-4.0, max_value=4.0),
    st.floats(min_value=0.0, max_value=TWO_PI),
)
def test_overlap_is_hermitian(l1, phi1, l2, phi2):
    p, q = CirclePoint(l1, phi1), CirclePoint(l2, phi2)
    forward = overlap(p, q)
    backward = overlap(q, p)
    # absolute budget: the overlap itself can vanish at theta-function zeros
    budget = math.exp((l1 + l2) ** 2 / 4.0) * 2.0
    assert abs(forward - backward.conjugate()) <= 1e-13 * budget


@pytest.mark.parametrize("l", [-3.0, -1.5, 0.0, 0.5, 2.0])
def test_j_expectation_exact_at_integer_and_half_integer_labels(l):
    assert abs(j_expectation(CirclePoint(l, 1.0)) - l) <= 1e-12


def test_j_expectation_frozen_value_off_the_lattice():
    got = j_expectation(CirclePoint(0.25, 0.0))
    assert got == pytest.approx(0.249675013636403693, rel=1e-13)
    assert got < 0.25  # the deviation dips below the label here


@pytest.mark.parametrize("l", [0.25, -1.37, 3.3])
def test_j_expectation_against_oracle(l):
    want = float(oracles.j_expectation(l))
    assert j_expectation(CirclePoint(l, 0.0)) == pytest.approx(want, rel=1e-13)


@settings(max_examples=40)
@given(st.floats(min_value=-3.0, max_value=3.0))
def test_j_expectation_shifts_by_one_with_the_label(l):
    lo = j_expectation(CirclePoint(l, 0.0))
    hi = j_expectation(CirclePoint(l + 1.0, 0.0))
    assert hi - lo == pytest.approx(1.0, abs=1e-10)


@settings(max_examples=40)
@given(st.floats(min_value=0.0, max_value=4.0))
def test_j_expectation_is_odd_in_the_label(l):
    plus = j_expectation(CirclePoint(l, 0.0))
    minus = j_expectation(CirclePoint(-l, 0.0))
    assert plus + minus == pytest.approx(0.0, abs=1e-12)


def test_shift_operator_mean_at_the_origin():
    # frozen from the oracle
    u = u_expectation(CirclePoint(0.0, 0.0))
    assert u.real == pytest.approx(0.77863967150613793959, rel=1e-14)
    assert u.imag == 0.0


@pytest.mark.parametrize("l", [0.6, -2.2])
def test_shift_operator_mean_against_oracle(l):
    want = float(oracles.u_magnitude(l))
    assert abs(u_expectation(CirclePoint(l, 0.0))) == pytest.approx(want, rel=1e-12)


def test_shift_operator_mean_carries_the_angular_phase():
    u = u_expectation(CirclePoint(1.2, 2.5))
    assert cmath.phase(u) == pytest.approx(2.5, abs=1e-12)
    ur = u_relative_expectation(CirclePoint(1.2, 2.5))
    assert cmath.phase(ur) == pytest.approx(2.5, abs=1e-12)


@settings(max_examples=60)
@given(st.floats(min_value=-50.0, max_value=50.0))
def test_shift_operator_mean_stays_inside_the_unit_circle(l):
    # strict bound for a unitary operator mean; the modulus is 1-periodic
    # in l and tops out near 0.7789, so the margin is wide
    mag = abs(u_expectation(CirclePoint(l, 1.0)))
    assert 0.0 < mag < 1.0


def test_normalized_shift_mean_has_unit_modulus_at_integer_labels():
    # quasi-periodicity of the lattice sum makes this exact, not asymptotic
    for k in range(-3, 4):
        ur = u_relative_expectation(CirclePoint(float(k), 0.7))
        assert abs(ur) == pytest.approx(1.0, abs=1e-13)


def test_normalized_shift_mean_is_one_at_the_origin():
    assert u_relative_expectation(CirclePoint(0.0, 0.0)) == 1.0 + 0j


@pytest.mark.parametrize("phi", [0.0, 1.234, 5.0])
def test_normalized_shift_mean_at_l_zero_is_the_pure_phase(phi):
    # numerator and denominator run the identical sum, so the ratio is 1.0
    # bit for bit and only the phase factor survives
    assert u_relative_expectation(CirclePoint(0.0, phi)) == cmath.exp(1j * phi)
