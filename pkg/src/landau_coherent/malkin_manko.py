"""Classic oscillator-style coherent states over the Landau levels.

The familiar double-Poisson family, the Malkin-Man'ko states of the
standard literature: both quantum numbers carry plain coherent-state
weights with no gaussian damping.  Ladder means come out exact, while the
angular momentum mean is offset from its label by exactly one unit.
Serves as the baseline the damped family is measured against in
comparison.py.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import lgamma

from .errors import DomainError
from .fock import DEFAULT_PARAMS, PhysicalParams


@dataclass(frozen=True)
class MMPoint:
    """Label (x_bar, y_bar, x0_bar, y0_bar): relative coordinate plus center."""

    x_bar: float
    y_bar: float
    x0_bar: float = 0.0
    y0_bar: float = 0.0

    @property
    def z(self) -> complex:
        """Relative-coordinate label x_bar + i*y_bar."""
        return complex(self.x_bar, self.y_bar)

    @property
    def z0(self) -> complex:
        """Center-coordinate label x0_bar - i*y0_bar."""
        return complex(self.x0_bar, -self.y0_bar)

    def l(self, params: PhysicalParams = DEFAULT_PARAMS) -> float:
        """Angular momentum label -mu_omega * (x_bar^2 + y_bar^2)."""
        return -params.mu_omega * (self.x_bar ** 2 + self.y_bar ** 2)


def _poisson_part(w: complex, k: int) -> complex:
    if k == 0:
        return 1 + 0j
    if w == 0:
        return 0j
    return cmath.exp(k * cmath.log(w) - 0.5 * lgamma(k + 1))


def coefficient_mm(p: MMPoint, n: int, m: int,
                   params: PhysicalParams = DEFAULT_PARAMS) -> complex:
    """Unnormalized expansion coefficient <n,m|p> of the undamped family."""
    if n < 0 or m < 0:
        raise ValueError(f"basis labels must be non-negative, got n={n}, m={m}")
    s = math.sqrt(params.mu_omega / 2.0)
    return _poisson_part(s * p.z, n) * _poisson_part(s * p.z0, m)


def r_plus_mm(p: MMPoint) -> complex:
    """Mean of the relative-coordinate lowering ladder; exactly the label z."""
    return p.z


def l_expectation_mm(l: float) -> float:
    """Mean angular momentum at label l; exactly l - 1."""
    if l > 0.0:
        raise DomainError(f"the angular momentum label must satisfy l <= 0, got {l}")
    return l - 1.0


def d_mm(l: float) -> float:
    """Distance-to-label figure of the undamped family: exactly 1/|l|.

    Only the angular momentum mean misses its label (by one unit), so the
    combined relative deviation collapses to 1/|l|.
    """
    if l >= 0.0:
        raise DomainError(f"the closeness figure needs l < 0, got {l}")
    return 1.0 / abs(l)
