"""Truncated-basis generator matrices and algebra residuals."""
import math

import numpy as np
import pytest

from landau_coherent.errors import DimensionMismatch, DomainError, UnknownGenerator
from landau_coherent.fock import (
    GENERATOR_NAMES,
    FockTruncation,
    PhysicalParams,
    build_generator,
    casimir_residual,
    commutator_residual,
    identity_op,
    state_expectation,
    zero_op,
)

SMALL = FockTruncation(n_max=8, m_max=8)


def test_params_validation():
    with pytest.raises(ValueError):
        PhysicalParams(mu_omega=0.0)
    with pytest.raises(ValueError):
        PhysicalParams(omega=-1.0)
    p = PhysicalParams(mu_omega=4.0)
    assert p.magnetic_length == 0.5
    assert p.orbit_radius(-9.0) == 1.5
    with pytest.raises(DomainError):
        p.orbit_radius(0.5)


def test_truncation_indexing():
    t = FockTruncation(n_max=2, m_max=3)
    assert t.dim == 12
    seen = [t.index(n, m) for n, m in t.labels()]
    assert seen == list(range(12))
    with pytest.raises(IndexError):
        t.index(3, 0)
    with pytest.raises(IndexError):
        t.index(0, 4)
    with pytest.raises(ValueError):
        FockTruncation(n_max=0, m_max=3)


def test_interior_indices():
    t = FockTruncation(n_max=2, m_max=2)
    inner = t.interior_indices(1)
    assert sorted(int(i) for i in inner) == [t.index(n, m)
                                             for n in (0, 1) for m in (0, 1)]
    assert len(t.interior_indices(0)) == t.dim
    with pytest.raises(ValueError):
        t.interior_indices(-1)
    with pytest.raises(ValueError):
        t.interior_indices(3)


def test_generator_entries():
    params = PhysicalParams(mu_omega=2.0, omega=2.0)
    h = build_generator("H_perp", params, SMALL)
    assert h.entry((3, 0), (3, 0)) == pytest.approx(7.0)
    ang = build_generator("L", params, SMALL)
    assert ang.entry((4, 2), (4, 2)) == -9.0
    rp = build_generator("r_plus", params, SMALL)
    assert rp.entry((2, 1), (3, 1)) == pytest.approx(math.sqrt(3.0))
    rm = build_generator("r_minus", params, SMALL)
    assert rm.entry((3, 1), (2, 1)) == pytest.approx(math.sqrt(3.0))
    r0p = build_generator("r0_plus", params, SMALL)
    assert r0p.entry((1, 5), (1, 4)) == pytest.approx(math.sqrt(5.0))
    a = build_generator("a", params, SMALL)
    assert a.entry((1, 0), (2, 0)) == pytest.approx(math.sqrt(2.0))
    b = build_generator("b", params, SMALL)
    assert b.entry((0, 3), (0, 4)) == pytest.approx(2.0)
    assert rp.entry((0, 0), (5, 5)) == 0.0


def test_ladders_against_scaled_oscillator_pairs():
    params = PhysicalParams(mu_omega=2.0)
    scale = math.sqrt(params.mu_omega / 2.0)
    rp = build_generator("r_plus", params, SMALL)
    a = build_generator("a", params, SMALL)
    assert (scale * rp - a).max_abs() <= 1e-14
    r0m = build_generator("r0_minus", params, SMALL)
    b = build_generator("b", params, SMALL)
    assert (scale * r0m - b).max_abs() <= 1e-14


def test_unknown_generator_name():
    with pytest.raises(UnknownGenerator):
        build_generator("r_sideways")
    for name in GENERATOR_NAMES:
        build_generator(name, PhysicalParams(), SMALL)


@pytest.mark.parametrize("mu_omega", [0.5, 1.0, 2.5])
def test_commutation_relations(mu_omega):
    params = PhysicalParams(mu_omega=mu_omega)
    g = {name: build_generator(name, params, SMALL) for name in GENERATOR_NAMES}
    ident = identity_op(SMALL)
    zero = zero_op(SMALL)
    two_over = 2.0 / mu_omega
    cases = [
        (g["L"], g["r_plus"], 2.0 * g["r_plus"]),
        (g["L"], g["r_minus"], -2.0 * g["r_minus"]),
        (g["L"], g["r0_plus"], zero),
        (g["L"], g["r0_minus"], zero),
        (g["r_plus"], g["r_minus"], two_over * ident),
        (g["r0_plus"], g["r0_minus"], -two_over * ident),
        (g["r_plus"], g["r0_plus"], zero),
        (g["r_plus"], g["r0_minus"], zero),
        (g["r_minus"], g["r0_plus"], zero),
        (g["r_minus"], g["r0_minus"], zero),
    ]
    for a_op, b_op, expected in cases:
        assert commutator_residual(a_op, b_op, expected, interior_margin=1) <= 1e-12


def test_self_commutator_is_literally_zero():
    op = build_generator("L", PhysicalParams(), SMALL)
    assert commutator_residual(op, op, zero_op(SMALL), interior_margin=0) == 0.0


def test_truncation_edge_shows_up_without_the_margin():
    # [r+, r-] = 2/mu_omega fails on the last Landau row of any finite cut,
    # which is exactly what the interior margin is for
    params = PhysicalParams()
    rp = build_generator("r_plus", params, SMALL)
    rm = build_generator("r_minus", params, SMALL)
    expected = 2.0 * identity_op(SMALL)
    assert commutator_residual(rp, rm, expected, interior_margin=0) > 1.0
    assert commutator_residual(rp, rm, expected, interior_margin=1) <= 1e-12


def test_quadratic_invariant_is_exact_even_when_truncated():
    assert casimir_residual(PhysicalParams(), FockTruncation(1, 1)) <= 1e-14
    assert casimir_residual(PhysicalParams(mu_omega=0.5),
                            FockTruncation(20, 20)) <= 1e-12


def test_angular_momentum_counts_landau_quanta():
    params = PhysicalParams()
    ang = build_generator("L", params, SMALL)
    a = build_generator("a", params, SMALL)
    a_dag = build_generator("a_dag", params, SMALL)
    assert (ang + 2.0 * (a_dag @ a) + identity_op(SMALL)).max_abs() <= 1e-13


def test_transverse_energy_is_minus_half_omega_l():
    params = PhysicalParams(omega=3.0)
    h = build_generator("H_perp", params, SMALL)
    ang = build_generator("L", params, SMALL)
    assert (h + (params.omega / 2.0) * ang).max_abs() <= 1e-13


def test_operator_arithmetic():
    params = PhysicalParams()
    a = build_generator("a", params, SMALL)
    b = build_generator("b", params, SMALL)
    assert ((a + b) - b - a).max_abs() == 0.0
    assert (2.0 * a - a - a).max_abs() <= 1e-15
    assert (-a + a).max_abs() == 0.0
    with pytest.raises(TypeError):
        a * b  # only scalar products are defined


def test_mixed_truncations_are_rejected():
    small = build_generator("a", PhysicalParams(), SMALL)
    other = build_generator("a", PhysicalParams(), FockTruncation(4, 4))
    with pytest.raises(DimensionMismatch):
        small @ other
    with pytest.raises(DimensionMismatch):
        small + other


def test_state_expectation():
    params = PhysicalParams(omega=2.0)
    h = build_generator("H_perp", params, SMALL)
    vacuum = np.zeros(SMALL.dim, dtype=complex)
    vacuum[SMALL.index(0, 0)] = 1.0
    assert state_expectation(h, vacuum) == pytest.approx(1.0)
    # unnormalized input is normalized internally
    assert state_expectation(h, 3.0 * vacuum) == pytest.approx(1.0)
    mixed = np.zeros(SMALL.dim, dtype=complex)
    mixed[SMALL.index(0, 0)] = 1.0
    mixed[SMALL.index(1, 0)] = 1.0
    assert state_expectation(h, mixed) == pytest.approx(2.0)
    with pytest.raises(DimensionMismatch):
        state_expectation(h, np.ones(3, dtype=complex))
