"""Closeness-to-label figures and the family comparison sweep."""
import pytest

from landau_coherent.comparison import ComparisonRow, d, sweep
from landau_coherent.errors import DomainError
from landau_coherent.fock import PhysicalParams


@pytest.mark.parametrize("l,want", [
    (-1.0, 0.436276247509),
    (-5.0, 0.057063303145),
    (-10.0, 0.0262798188112),
])
def test_frozen_closeness_values(l, want):
    assert d(l) == pytest.approx(want, rel=1e-9)


def test_closeness_is_field_scale_invariant():
    # both deviations entering d are relative, so the field scale cancels
    assert d(-5.0, PhysicalParams(mu_omega=2.0)) == pytest.approx(d(-5.0), rel=1e-12)


def test_domain_validation():
    with pytest.raises(DomainError):
        d(0.0)
    with pytest.raises(DomainError):
        d(1.0)


def test_sweep_grid_and_rows():
    rows = sweep(-10.0, -1.0, 4)
    assert len(rows) == 4
    assert [row.l for row in rows] == [-10.0, -7.0, -4.0, -1.0]
    for row in rows:
        assert isinstance(row, ComparisonRow)
        assert row.d_mm == 1.0 / abs(row.l)
    # endpoints reproduce individual calls bit for bit
    assert rows[0].d == d(-10.0)
    assert rows[-1].d == d(-1.0)


def test_sweep_validation():
    with pytest.raises(ValueError):
        sweep(-10.0, -1.0, 1)
    with pytest.raises(DomainError):
        sweep(-1.0, -5.0, 3)
    with pytest.raises(DomainError):
        sweep(-5.0, 1.0, 3)
    with pytest.raises(DomainError):
        sweep(-5.0, 0.0, 3)


def test_damped_family_tracks_labels_more_closely():
    for k in range(1, 41):
        l = -float(k)
        assert d(l) < 1.0 / abs(l)


def test_closeness_improves_with_label_size():
    assert d(-40.0) < d(-10.0) < d(-1.0)
