"""Gaussian-damped coherent states over the Landau levels.

A state is labelled by a cylinder point (l, phi) for the relative motion,
with l <= 0 the angular momentum value the state is built around, plus a
center position (x0_bar, y0_bar).  Over the |n, m> basis the label enters
through x = -(l/2) * exp(-l) >= 0:

    <n,m|state>  propto  x**(n/2) e^{i n phi} / sqrt(n!) * e^{-(n+1/2)^2/2}
                         * (sqrt(mu_omega/2) z0)**m / sqrt(m!)

so the Landau-index distribution is p_n propto x**n/n! * e^{-(n+1/2)^2}
and the center distribution is Poisson.  All series are evaluated through
the log-domain engine; x reaches e.g. 25*e**50 at l = -50 and naive powers
overflow long before the gaussian factor wins.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import lgamma

from .errors import DomainError
from .fock import DEFAULT_PARAMS, PhysicalParams
from .series import DEFAULT_CONFIG, LogTerm, SeriesConfig, sum_log_terms_scaled

TWO_PI = 2.0 * math.pi
_NEG_INF = float("-inf")


@dataclass(frozen=True)
class MagneticPoint:
    """Phase-space label (l, phi, x0_bar, y0_bar) of a magnetic coherent state."""

    l: float
    phi: float = 0.0
    x0_bar: float = 0.0
    y0_bar: float = 0.0

    def __post_init__(self):
        if self.l > 0.0:
            raise DomainError(f"the angular momentum label must satisfy l <= 0, got {self.l}")

    @property
    def z0(self) -> complex:
        """Center-coordinate label x0_bar - i*y0_bar."""
        return complex(self.x0_bar, -self.y0_bar)

    def zeta(self, params: PhysicalParams = DEFAULT_PARAMS) -> complex:
        """Relative-motion label r(l) * exp(-l/2 + i*phi)."""
        return params.orbit_radius(self.l) * cmath.exp(complex(-self.l / 2.0, self.phi))


def _log_x(l: float) -> float:
    # log of x = -(l/2) e^{-l}; -inf encodes x = 0 at l = 0.  Taking logs
    # before halving keeps subnormal -l out of an underflowing division.
    if l == 0.0:
        return _NEG_INF
    return math.log(-l) - math.log(2.0) - l


def _log_weight(n: int, log_x: float, beta: float) -> float:
    if log_x == _NEG_INF:
        return -beta * beta if n == 0 else _NEG_INF
    return n * log_x - lgamma(n + 1) - (n + beta) ** 2


def _damped_terms(l: float, beta: float, cfg: SeriesConfig, odd_weight: bool = False):
    """Terms x**n/n! * exp(-(n+beta)**2), optionally weighted by (2n+1)."""
    log_x = _log_x(l)
    if log_x == _NEG_INF:
        yield LogTerm(-beta * beta, 1 + 0j)
        return
    n = 0
    while True:
        log_mag = _log_weight(n, log_x, beta)
        if odd_weight:
            log_mag += math.log(2 * n + 1)
        yield LogTerm(log_mag, 1 + 0j)
        n += 1


def peak_index_estimate(l: float) -> float:
    """Upper estimate (|l| + log(|l|/2)) / 2 of where the terms peak.

    The term ratio t_{n+1}/t_n = x * exp(-(2n+2)) / (n+1) drops below one
    before n reaches log(x)/2, so scanning to this value plus a fixed tail
    always covers the maximum; the true peak sits lower by roughly
    1 + log(n)/2.
    """
    if l >= -1.0:
        return 0.0
    return max(0.0, (-l + math.log(-l) - math.log(2.0)) / 2.0)


def _check_l(l: float) -> None:
    if l > 0.0:
        raise DomainError(f"the angular momentum label must satisfy l <= 0, got {l}")


def coefficient(p: MagneticPoint, n: int, m: int,
                params: PhysicalParams = DEFAULT_PARAMS) -> complex:
    """Unnormalized expansion coefficient <n,m|p>.

    The raw value is returned; for the magnitude of far-out coefficients at
    large |l| use log_abs_coefficient, which cannot overflow.
    """
    if n < 0 or m < 0:
        raise ValueError(f"basis labels must be non-negative, got n={n}, m={m}")
    log_n_mag = 0.5 * _log_weight(n, _log_x(p.l), 0.5)
    if log_n_mag == _NEG_INF:
        return 0j
    n_part = math.exp(log_n_mag) * cmath.exp(complex(0.0, n * p.phi))
    w = math.sqrt(params.mu_omega / 2.0) * p.z0
    if m == 0:
        m_part = 1 + 0j
    elif w == 0:
        return 0j
    else:
        m_part = cmath.exp(m * cmath.log(w) - 0.5 * lgamma(m + 1))
    return n_part * m_part


def log_abs_coefficient(p: MagneticPoint, n: int, m: int,
                        params: PhysicalParams = DEFAULT_PARAMS) -> float:
    """log|<n,m|p>|, fully in the log domain; -inf for exact zeros."""
    if n < 0 or m < 0:
        raise ValueError(f"basis labels must be non-negative, got n={n}, m={m}")
    log_n_mag = 0.5 * _log_weight(n, _log_x(p.l), 0.5)
    w_mag = math.sqrt(params.mu_omega / 2.0) * abs(p.z0)
    if m == 0:
        log_m_mag = 0.0
    elif w_mag == 0.0:
        return _NEG_INF
    else:
        log_m_mag = m * math.log(w_mag) - 0.5 * lgamma(m + 1)
    return log_n_mag + log_m_mag


def l_expectation(l: float, params: PhysicalParams = DEFAULT_PARAMS,
                  cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Mean angular momentum <L> of the state with label l.

    Approaches l as |l| grows; exactly -1 at l = 0.  Independent of phi,
    the center label, and the field scale (params is accepted for interface
    uniformity only).
    """
    del params
    _check_l(l)
    num_c, num_s = sum_log_terms_scaled(_damped_terms(l, 0.5, cfg, odd_weight=True), cfg)
    den_c, den_s = sum_log_terms_scaled(_damped_terms(l, 0.5, cfg), cfg)
    return -(num_c.real / den_c.real) * math.exp(num_s - den_s)


def _radial_ratio(l: float, params: PhysicalParams, cfg: SeriesConfig) -> float:
    # <<r+>> magnitude: r(l) e^{-l/2} * sum_n x^n/n! e^{-(n+1)^2}
    #                                 / sum_n x^n/n! e^{-(n+1/2)^2}
    if l == 0.0:
        return 0.0
    num_c, num_s = sum_log_terms_scaled(_damped_terms(l, 1.0, cfg), cfg)
    den_c, den_s = sum_log_terms_scaled(_damped_terms(l, 0.5, cfg), cfg)
    ratio = (num_c.real / den_c.real) * math.exp(-l / 2.0 + num_s - den_s)
    return params.orbit_radius(l) * ratio


def r_plus_expectation(l: float, phi: float, params: PhysicalParams = DEFAULT_PARAMS,
                       cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Mean of the relative-coordinate lowering ladder <r+>.

    Close to r(l) * exp(-1/4) * exp(i*phi) once |l| is a few units; the
    phase is exp(i*phi) with no approximation.
    """
    _check_l(l)
    return math.exp(-0.25) * _radial_ratio(l, params, cfg) * cmath.exp(complex(0.0, phi))


def r_plus_relative(l: float, phi: float, params: PhysicalParams = DEFAULT_PARAMS,
                    cfg: SeriesConfig = DEFAULT_CONFIG) -> complex:
    """Vacuum-normalized ladder mean <<r+>> = e^{1/4} <r+>, close to r(l) e^{i phi}."""
    _check_l(l)
    return _radial_ratio(l, params, cfg) * cmath.exp(complex(0.0, phi))


def _n_weights_scaled(l: float, cfg: SeriesConfig):
    return sum_log_terms_scaled(_damped_terms(l, 0.5, cfg), cfg)


def p_n(l: float, n: int, params: PhysicalParams = DEFAULT_PARAMS,
        cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Probability of Landau index n; independent of phi and the center label."""
    del params
    _check_l(l)
    if n < 0:
        raise ValueError(f"basis labels must be non-negative, got n={n}")
    den_c, den_s = _n_weights_scaled(l, cfg)
    log_mag = _log_weight(n, _log_x(l), 0.5)
    if log_mag == _NEG_INF:
        return 0.0
    return min(1.0, math.exp(log_mag - den_s) / den_c.real)


def p_m(m: int, x0_bar: float, y0_bar: float,
        params: PhysicalParams = DEFAULT_PARAMS) -> float:
    """Probability of center index m: Poisson with mean mu_omega/2 * (x0^2 + y0^2)."""
    if m < 0:
        raise ValueError(f"basis labels must be non-negative, got m={m}")
    nu = 0.5 * params.mu_omega * (x0_bar * x0_bar + y0_bar * y0_bar)
    if nu == 0.0:
        return 1.0 if m == 0 else 0.0
    return math.exp(m * math.log(nu) - lgamma(m + 1) - nu)


def p_nm(p: MagneticPoint, n: int, m: int, params: PhysicalParams = DEFAULT_PARAMS,
         cfg: SeriesConfig = DEFAULT_CONFIG) -> float:
    """Joint probability of |n, m>; factorizes into p_n * p_m exactly."""
    return p_n(p.l, n, params, cfg) * p_m(m, p.x0_bar, p.y0_bar, params)


def occupation_probabilities(l: float, n_upper: int,
                             params: PhysicalParams = DEFAULT_PARAMS,
                             cfg: SeriesConfig = DEFAULT_CONFIG) -> list[float]:
    """p_n for n = 0 .. n_upper as one normalized pass."""
    _check_l(l)
    if n_upper < 0:
        raise ValueError(f"n_upper must be non-negative, got {n_upper}")
    den_c, den_s = _n_weights_scaled(l, cfg)
    log_x = _log_x(l)
    out = []
    for n in range(n_upper + 1):
        log_mag = _log_weight(n, log_x, 0.5)
        out.append(0.0 if log_mag == _NEG_INF
                   else min(1.0, math.exp(log_mag - den_s) / den_c.real))
    return out


# Two weights count as tied when their logs agree this closely.  Exact ties
# occur at every even integer |l| (the term ratio x e^{-2n}/n is then exactly
# 1 at n = |l|/2) and show up numerically at the rounding level ~1e-15, far
# below the smallest genuine gap log(e/2) ~ 0.3 on integer scans.
_TIE_LOG_TOL = 1e-9


@dataclass(frozen=True)
class PeakInfo:
    """Most probable Landau index, with tie diagnostics."""

    n: int
    tie: bool
    predicted: int


def predicted_peak(l: float) -> int:
    """Nearest integer to -(l+1)/2, clamped at 0.

    Half-integers round down, matching the smaller-index convention used
    when the distribution has an exact two-way tie.
    """
    return max(0, math.ceil(-(l + 1.0) / 2.0 - 0.5))


def peak_info(l: float, params: PhysicalParams = DEFAULT_PARAMS,
              cfg: SeriesConfig = DEFAULT_CONFIG) -> PeakInfo:
    """Argmax of p_n; ties report the smaller index and set the flag."""
    del params
    _check_l(l)
    log_x = _log_x(l)
    scan_upper = min(cfg.max_terms,
                     math.ceil(peak_index_estimate(l)) + _scan_tail(cfg.rel_tol))
    weights = [_log_weight(n, log_x, 0.5) for n in range(scan_upper + 1)]
    best = max(weights)
    tied = [n for n, w in enumerate(weights) if best - w < _TIE_LOG_TOL]
    return PeakInfo(n=tied[0], tie=len(tied) > 1, predicted=predicted_peak(l))


def _scan_tail(rel_tol: float) -> int:
    return math.ceil(math.sqrt(-math.log(rel_tol))) + 5


def peak_n(l: float, params: PhysicalParams = DEFAULT_PARAMS,
           cfg: SeriesConfig = DEFAULT_CONFIG) -> int:
    """Most probable Landau index of the state with label l."""
    return peak_info(l, params, cfg).n


def r0_expectation(p: MagneticPoint) -> complex:
    """Mean of the m-lowering center ladder; exactly x0_bar - i*y0_bar.

    The center factor of the state is a plain coherent state of that
    ladder, so its mean is the label with no damping correction.
    """
    return p.z0


def evolve(p: MagneticPoint, t: float,
           params: PhysicalParams = DEFAULT_PARAMS) -> MagneticPoint:
    """State label after time t: phi -> (phi - omega*t) mod 2*pi, rest frozen."""
    return MagneticPoint(p.l, (p.phi - params.omega * t) % TWO_PI,
                         p.x0_bar, p.y0_bar)
