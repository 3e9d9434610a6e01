"""Closeness-to-label comparison between the two coherent-state families.

For each family, measure how far the expectations (angular momentum mean,
ladder-mean radius) land from the labels (l, r(l)) and combine the two
relative deviations in quadrature:

    d(l) = sqrt(((rr - r)/r)^2 + ((<L> - l)/l)^2)

For the undamped family this is exactly 1/|l|; for the damped family it
decays much faster, and the sweep makes the gap tabulable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .fock import DEFAULT_PARAMS, PhysicalParams
from .magnetic import l_expectation, r_plus_relative
from .malkin_manko import d_mm
from .series import DEFAULT_CONFIG, SeriesConfig


@dataclass(frozen=True)
class ComparisonRow:
    """One sweep point: label l, damped-family d, undamped-family d."""

    l: float
    d: float
    d_mm: float


def d(l: float, params: PhysicalParams = DEFAULT_PARAMS,
      cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Distance-to-label figure of the damped family at label l."""
    if l >= 0.0:
        raise DomainError(f"the closeness figure needs l < 0, got {l}")
    rr = r_plus_relative(l, 0.0, params, cfg)
    # phi = 0 makes the ladder mean real by construction
    assert abs(rr.imag) < 1e-12
    r_target = params.orbit_radius(l)
    radial_dev = (rr.real - r_target) / r_target
    angular_dev = (l_expectation(l, params, cfg) - l) / l
    return math.hypot(radial_dev, angular_dev)


def sweep(l_min: float, l_max: float, steps: int,
          params: PhysicalParams = DEFAULT_PARAMS,
          cfg: SeriesConfig = DEFAULT_CONFIG) -> list[ComparisonRow]:
    """Both closeness figures on an inclusive linear grid of `steps` points."""
    if steps < 2:
        raise ValueError(f"a sweep needs at least 2 points, got {steps}")
    if not l_min < l_max < 0.0:
        raise DomainError(
            f"sweep bounds must satisfy l_min < l_max < 0, got [{l_min}, {l_max}]")
    grid = np.linspace(l_min, l_max, steps)
    return [ComparisonRow(l=float(l), d=d(float(l), params, cfg), d_mm=d_mm(float(l)))
            for l in grid]
