"""Ladder operators of the magnetic problem on a truncated |n, m> basis.

The transverse dynamics of a charge in a uniform magnetic field splits into
a Landau index n (energy) and a center index m (degeneracy).  On that basis
the relative and center coordinate ladders act as

    L  |n,m> = -(2n+1) |n,m>
    r+ |n,m> = sqrt(2n/mu_omega)     |n-1,m>
    r- |n,m> = sqrt(2(n+1)/mu_omega) |n+1,m>
    r0+|n,m> = sqrt(2(m+1)/mu_omega) |n,m+1>
    r0-|n,m> = sqrt(2m/mu_omega)     |n,m-1>

together with the dimensionless pairs a = sqrt(mu_omega/2) r+ and
b = sqrt(mu_omega/2) r0-.  Truncating at (n_max, m_max) corrupts one band
of matrix elements at the boundary, which is why residual checks accept an
interior margin.  Matrices are stored sparse: each generator has at most
one entry per column, and dense storage at the default truncation would
cost hundreds of megabytes per operator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .errors import DimensionMismatch, DomainError, UnknownGenerator


@dataclass(frozen=True)
class PhysicalParams:
    """Field and oscillator scales; hbar = c = 1 and mu_omega = |e|B/c."""

    mu_omega: float = 1.0
    omega: float = 1.0

    def __post_init__(self):
        if self.mu_omega <= 0.0:
            raise ValueError(f"mu_omega must be positive, got {self.mu_omega}")
        if self.omega <= 0.0:
            raise ValueError(f"omega must be positive, got {self.omega}")

    @property
    def magnetic_length(self) -> float:
        return 1.0 / math.sqrt(self.mu_omega)

    def orbit_radius(self, l: float) -> float:
        """Classical cyclotron radius sqrt(-l/mu_omega) for l <= 0."""
        if l > 0.0:
            raise DomainError(f"orbit radius needs non-positive l, got {l}")
        return math.sqrt(-l / self.mu_omega)


DEFAULT_PARAMS = PhysicalParams()


@dataclass(frozen=True)
class FockTruncation:
    """Basis cut 0 <= n <= n_max, 0 <= m <= m_max, flattened row-major."""

    n_max: int = 64
    m_max: int = 64

    def __post_init__(self):
        if self.n_max < 1 or self.m_max < 1:
            raise ValueError(
                f"truncation must keep at least two levels per index, "
                f"got n_max={self.n_max}, m_max={self.m_max}")

    @property
    def dim(self) -> int:
        return (self.n_max + 1) * (self.m_max + 1)

    def index(self, n: int, m: int) -> int:
        if not (0 <= n <= self.n_max and 0 <= m <= self.m_max):
            raise IndexError(f"(n={n}, m={m}) outside truncation {self}")
        return n * (self.m_max + 1) + m

    def labels(self):
        for n in range(self.n_max + 1):
            for m in range(self.m_max + 1):
                yield n, m

    def interior_indices(self, margin: int) -> np.ndarray:
        """Flat indices with n <= n_max - margin and m <= m_max - margin."""
        if margin < 0:
            raise ValueError(f"interior margin must be non-negative, got {margin}")
        if margin > min(self.n_max, self.m_max):
            raise ValueError(f"interior margin {margin} exceeds truncation {self}")
        keep = []
        for n in range(self.n_max - margin + 1):
            base = n * (self.m_max + 1)
            keep.extend(range(base, base + self.m_max - margin + 1))
        return np.asarray(keep, dtype=np.intp)


DEFAULT_TRUNCATION = FockTruncation()


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """A sparse complex matrix tied to the truncation it was built on."""

    matrix: sparse.csr_matrix
    trunc: FockTruncation

    def _require_same(self, other: "OperatorMatrix") -> None:
        if self.trunc != other.trunc:
            raise DimensionMismatch(
                f"operators built on {self.trunc} and {other.trunc} cannot be combined")

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._require_same(other)
        return OperatorMatrix(self.matrix @ other.matrix, self.trunc)

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._require_same(other)
        return OperatorMatrix((self.matrix + other.matrix).tocsr(), self.trunc)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._require_same(other)
        return OperatorMatrix((self.matrix - other.matrix).tocsr(), self.trunc)

    def __neg__(self) -> "OperatorMatrix":
        return OperatorMatrix(-self.matrix, self.trunc)

    def __mul__(self, scalar) -> "OperatorMatrix":
        if not isinstance(scalar, (int, float, complex, np.number)):
            return NotImplemented
        return OperatorMatrix(self.matrix * scalar, self.trunc)

    __rmul__ = __mul__

    def entry(self, row: tuple[int, int], col: tuple[int, int]) -> complex:
        return complex(self.matrix[self.trunc.index(*row), self.trunc.index(*col)])

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()

    def max_abs(self, interior_margin: int = 0) -> float:
        """Largest entry magnitude, optionally away from the truncation edge."""
        mat = self.matrix
        if interior_margin > 0:
            keep = self.trunc.interior_indices(interior_margin)
            mat = mat[keep][:, keep]
        if mat.nnz == 0:
            return 0.0
        return float(np.max(np.abs(mat.tocoo().data)))


GENERATOR_NAMES = ("L", "r_plus", "r_minus", "r0_plus", "r0_minus",
                   "a", "a_dag", "b", "b_dag", "H_perp")


def _one_entry_per_column(trunc, amplitude, shift_n=0, shift_m=0):
    """Matrix sending |n,m> to amplitude(n,m) |n+shift_n, m+shift_m>."""
    rows, cols, vals = [], [], []
    for n, m in trunc.labels():
        nt, mt = n + shift_n, m + shift_m
        if not (0 <= nt <= trunc.n_max and 0 <= mt <= trunc.m_max):
            continue
        amp = amplitude(n, m)
        if amp == 0.0:
            continue
        rows.append(trunc.index(nt, mt))
        cols.append(trunc.index(n, m))
        vals.append(amp)
    mat = sparse.csr_matrix((np.asarray(vals, dtype=np.complex128),
                             (rows, cols)), shape=(trunc.dim, trunc.dim))
    return OperatorMatrix(mat, trunc)


def build_generator(name: str, params: PhysicalParams = DEFAULT_PARAMS,
                    trunc: FockTruncation = DEFAULT_TRUNCATION) -> OperatorMatrix:
    """Matrix of one generator of the symmetry algebra on the truncated basis."""
    mu_omega = params.mu_omega
    table = {
        "L": lambda n, m: -(2 * n + 1),
        "H_perp": lambda n, m: params.omega * (n + 0.5),
        "r_plus": (lambda n, m: math.sqrt(2.0 * n / mu_omega), -1, 0),
        "r_minus": (lambda n, m: math.sqrt(2.0 * (n + 1) / mu_omega), +1, 0),
        "r0_plus": (lambda n, m: math.sqrt(2.0 * (m + 1) / mu_omega), 0, +1),
        "r0_minus": (lambda n, m: math.sqrt(2.0 * m / mu_omega), 0, -1),
        "a": (lambda n, m: math.sqrt(float(n)), -1, 0),
        "a_dag": (lambda n, m: math.sqrt(n + 1.0), +1, 0),
        "b": (lambda n, m: math.sqrt(float(m)), 0, -1),
        "b_dag": (lambda n, m: math.sqrt(m + 1.0), 0, +1),
    }
    if name not in table:
        raise UnknownGenerator(
            f"unknown generator {name!r}; expected one of {GENERATOR_NAMES}")
    entry = table[name]
    if callable(entry):
        return _one_entry_per_column(trunc, entry)
    amplitude, shift_n, shift_m = entry
    return _one_entry_per_column(trunc, amplitude, shift_n, shift_m)


def identity_op(trunc: FockTruncation = DEFAULT_TRUNCATION) -> OperatorMatrix:
    return OperatorMatrix(sparse.identity(trunc.dim, dtype=np.complex128, format="csr"),
                          trunc)


def zero_op(trunc: FockTruncation = DEFAULT_TRUNCATION) -> OperatorMatrix:
    return OperatorMatrix(sparse.csr_matrix((trunc.dim, trunc.dim), dtype=np.complex128),
                          trunc)


def commutator_residual(a_op: OperatorMatrix, b_op: OperatorMatrix,
                        expected: OperatorMatrix, interior_margin: int = 1) -> float:
    """Max-norm of [A, B] - expected, away from the truncation boundary.

    Raising ladders lose their topmost matrix element to the cut, so strict
    commutator identities only hold on columns at least ``interior_margin``
    levels below the edge.  Margin 0 checks the full matrix.
    """
    a_op._require_same(b_op)
    a_op._require_same(expected)
    residual = (a_op @ b_op) - (b_op @ a_op) - expected
    return residual.max_abs(interior_margin)


def casimir_residual(params: PhysicalParams = DEFAULT_PARAMS,
                     trunc: FockTruncation = DEFAULT_TRUNCATION) -> float:
    """Max-norm of r- r+ + L/mu_omega + 1/mu_omega over the full space.

    The combination is number-diagonal, so it is exact even at the boundary.
    """
    r_minus = build_generator("r_minus", params, trunc)
    r_plus = build_generator("r_plus", params, trunc)
    ell = build_generator("L", params, trunc)
    combo = (r_minus @ r_plus) + (1.0 / params.mu_omega) * (ell + identity_op(trunc))
    return combo.max_abs(0)


def state_expectation(op: OperatorMatrix, coefficients: np.ndarray) -> complex:
    """<psi|A|psi> / <psi|psi> for a coefficient vector on the same basis."""
    vec = np.asarray(coefficients, dtype=np.complex128).reshape(-1)
    if vec.size != op.trunc.dim:
        raise DimensionMismatch(
            f"coefficient vector of length {vec.size} does not match dim {op.trunc.dim}")
    norm = np.vdot(vec, vec)
    return complex(np.vdot(vec, op.matrix @ vec) / norm)
