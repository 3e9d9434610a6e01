"""Coherent states of a charged particle in a uniform magnetic field.

Gaussian-damped coherent states built on the Landau levels, the
integer-lattice (circle) states underlying their radial structure, the
classic undamped family for comparison, and exact ladder-operator algebra
checks on truncated bases.
"""
from .circle import (
    CirclePoint,
    j_expectation,
    overlap,
    theta3,
    u_expectation,
    u_relative_expectation,
)
from .comparison import ComparisonRow, d, sweep
from .errors import (
    DimensionMismatch,
    DomainError,
    NonConvergent,
    NumericalError,
    TermCapExceeded,
    UnknownGenerator,
)
from .fock import (
    DEFAULT_PARAMS,
    DEFAULT_TRUNCATION,
    GENERATOR_NAMES,
    FockTruncation,
    OperatorMatrix,
    PhysicalParams,
    build_generator,
    casimir_residual,
    commutator_residual,
    state_expectation,
)
from .magnetic import (
    MagneticPoint,
    PeakInfo,
    evolve,
    l_expectation,
    occupation_probabilities,
    p_m,
    p_n,
    p_nm,
    peak_info,
    peak_n,
    predicted_peak,
    r0_expectation,
    r_plus_expectation,
    r_plus_relative,
)
from .malkin_manko import MMPoint, coefficient_mm, d_mm, l_expectation_mm, r_plus_mm
from .series import DEFAULT_CONFIG, LogTerm, SeriesConfig, sum_log_terms, sum_ratio

__all__ = [
    "CirclePoint",
    "ComparisonRow",
    "DEFAULT_CONFIG",
    "DEFAULT_PARAMS",
    "DEFAULT_TRUNCATION",
    "DimensionMismatch",
    "DomainError",
    "FockTruncation",
    "GENERATOR_NAMES",
    "LogTerm",
    "MMPoint",
    "MagneticPoint",
    "NonConvergent",
    "NumericalError",
    "OperatorMatrix",
    "PeakInfo",
    "PhysicalParams",
    "SeriesConfig",
    "TermCapExceeded",
    "UnknownGenerator",
    "build_generator",
    "casimir_residual",
    "coefficient_mm",
    "commutator_residual",
    "d",
    "d_mm",
    "evolve",
    "j_expectation",
    "l_expectation",
    "l_expectation_mm",
    "occupation_probabilities",
    "overlap",
    "p_m",
    "p_n",
    "p_nm",
    "peak_info",
    "peak_n",
    "predicted_peak",
    "r0_expectation",
    "r_plus_expectation",
    "r_plus_mm",
    "r_plus_relative",
    "state_expectation",
    "sum_log_terms",
    "sum_ratio",
    "sweep",
    "theta3",
    "u_expectation",
    "u_relative_expectation",
]

__version__ = "0.1.0"
