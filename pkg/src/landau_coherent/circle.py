"""Coherent states for a particle on a circle.

States are labelled by a point ``(l, phi)`` of the cylinder phase space,
``xi = exp(-l + i*phi)``.  Expansion coefficients over the integer angular
momentum basis are ``<j|xi> = xi**(-j) * exp(-j**2 / 2)``, so every
observable below reduces to a gaussian lattice sum, i.e. a Jacobi theta
function evaluated off the real axis.
"""
from __future__ import annotations

import cmath
import math
import numbers
from dataclasses import dataclass

from .errors import NonConvergent
from .series import DEFAULT_CONFIG, LogTerm, SeriesConfig, sum_log_terms, sum_log_terms_scaled

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CirclePoint:
    """Phase-space label of a circle coherent state.

    ``l`` is the mean angular momentum, ``phi`` the mean angle; ``phi`` is
    reduced to ``[0, 2*pi)`` on construction.
    """

    l: float
    phi: float

    def __post_init__(self):
        object.__setattr__(self, "phi", self.phi % TWO_PI)

    @property
    def xi(self) -> complex:
        """Complexified label exp(-l + i*phi); overflows for l < -709."""
        return cmath.exp(complex(-self.l, self.phi))


def coefficient(p: CirclePoint, j: int) -> complex:
    """Unnormalized overlap <j|p> = exp(l*j - i*j*phi - j**2/2).

    Only integer angular momentum is supported; half-odd-integer labels
    belong to the antiperiodic sector which is out of scope here.
    """
    if not isinstance(j, numbers.Integral):
        raise ValueError(f"angular momentum index must be an integer, got {j!r}")
    j = int(j)
    return math.exp(p.l * j - j * j / 2.0) * cmath.exp(complex(0.0, -j * p.phi))


def _tail_width(rel_tol: float, quad: float = 1.0) -> int:
    # exp(-quad * d**2) tail bound: width where the remaining mass is far
    # below rel_tol relative to the peak.
    return math.ceil(math.sqrt((-math.log(rel_tol) + 4.0) / quad)) + 2


def _spiral(center: int, width: int):
    yield center
    for step in range(1, width + 1):
        yield center + step
        yield center - step


def _lattice_terms(a: float, theta: float, cfg: SeriesConfig, index_weight: bool = False):
    """Terms of sum_j w(j) * exp(a*j - j**2 + i*theta*j), peak-centered order."""
    center = round(a / 2.0)
    for j in _spiral(center, _tail_width(cfg.rel_tol)):
        if index_weight and j == 0:
            yield LogTerm.zero()
            continue
        log_mag = a * j - float(j) * j
        phase = cmath.exp(complex(0.0, theta * j)) if theta != 0.0 else (1 + 0j)
        if index_weight:
            log_mag += math.log(abs(j))
            if j < 0:
                phase = -phase
        yield LogTerm(log_mag, phase)


def _lattice_sum_scaled(a: float, theta: float, cfg: SeriesConfig, index_weight: bool = False):
    return sum_log_terms_scaled(_lattice_terms(a, theta, cfg, index_weight), cfg)


def theta3(z: complex, tau: complex, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Jacobi theta function sum_n exp(i*pi*tau*n**2 + 2*pi*i*n*z).

    Requires Im(tau) > 0; the series has no meaning otherwise.
    """
    z = complex(z)
    tau = complex(tau)
    if tau.imag <= 0.0:
        raise NonConvergent(f"theta3 series requires Im(tau) > 0, got tau={tau}")
    quad = math.pi * tau.imag

    def terms():
        center = round(-z.imag / tau.imag)
        for n in _spiral(center, _tail_width(cfg.rel_tol, quad)):
            w = 1j * math.pi * tau * n * n + 2j * math.pi * n * z
            yield LogTerm(w.real, cmath.exp(complex(0.0, w.imag)))

    return complex(sum_log_terms(terms(), cfg))


def overlap(p: CirclePoint, q: CirclePoint, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Unnormalized overlap <p|q> = sum_j conj(xi_p)**-j * xi_q**-j * exp(-j**2).

    Equals theta3 evaluated at z = (i/2pi) * log(conj(xi_p) * xi_q) with
    tau = i/pi; the direct lattice sum here is kept as an independent route.
    """
    coeff, log_scale = _lattice_sum_scaled(p.l + q.l, p.phi - q.phi, cfg)
    return complex(coeff * math.exp(log_scale))


def j_expectation(p: CirclePoint, cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Mean angular momentum <J>; equals l exactly at integer and half-integer l."""
    num_c, num_s = _lattice_sum_scaled(2.0 * p.l, 0.0, cfg, index_weight=True)
    den_c, den_s = _lattice_sum_scaled(2.0 * p.l, 0.0, cfg)
    return (num_c.real / den_c.real) * math.exp(num_s - den_s)


def _u_magnitude(l: float, cfg: SeriesConfig) -> float:
    # <U> = e^{i phi} * e^{l - 1/2} * sum e^{(2l-1)j - j^2} / sum e^{2lj - j^2}
    num_c, num_s = _lattice_sum_scaled(2.0 * l - 1.0, 0.0, cfg)
    den_c, den_s = _lattice_sum_scaled(2.0 * l, 0.0, cfg)
    return (num_c.real / den_c.real) * math.exp(l - 0.5 + num_s - den_s)


def u_expectation(p: CirclePoint, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Mean unitary angle operator <U>; modulus below 1, argument exactly phi."""
    return _u_magnitude(p.l, cfg) * cmath.exp(complex(0.0, p.phi))


def u_relative_expectation(p: CirclePoint, cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """<U> normalized by its vacuum value, <U>_p / <U>_(0,0).

    The magnitude is within a fraction of a percent of 1 everywhere and
    equals 1 exactly for integer l; the phase is exp(i*phi) exactly.
    """
    ratio = _u_magnitude(p.l, cfg) / _u_magnitude(0.0, cfg)
    return ratio * cmath.exp(complex(0.0, p.phi))
