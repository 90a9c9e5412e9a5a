"""Dense complex-matrix substrate for the bipartite Fock computations.

Matrices are plain numpy arrays (complex128, row-major). Two-mode objects
use a flat composite index with mode A as the slow index:

    i = n_A * dim_b + n_B

which is exactly numpy's C-order reshape of an (dim_a, dim_b) pair, so
np.kron and reshape-based partial operations agree with this convention.

All functions are pure; nothing here holds mutable state.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DimensionError, NumericError, ParameterError

# Default cap on the composite (two-mode) dimension; pass max_dim=None to lift.
MAX_COMPOSITE_DIM = 4096

HERMITICITY_TOL = 1e-12


@dataclass(frozen=True)
class ModeIndexing:
    """Bipartite index bookkeeping: flat index i = n_A * dim_b + n_B."""

    dim_a: int
    dim_b: int

    def __post_init__(self):
        if self.dim_a < 1 or self.dim_b < 1:
            raise DimensionError(f"mode dimensions must be >= 1, got ({self.dim_a}, {self.dim_b})")

    @property
    def total(self) -> int:
        return self.dim_a * self.dim_b

    def flat(self, n_a: int, n_b: int) -> int:
        return n_a * self.dim_b + n_b

    def pair(self, i: int) -> tuple[int, int]:
        return divmod(i, self.dim_b)


def _as_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def max_abs(m: np.ndarray) -> float:
    """Max-norm ||M||_max; 0.0 for empty input."""
    return float(np.max(np.abs(m))) if m.size else 0.0


def is_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    m = np.asarray(m)
    return max_abs(m - m.conj().T) <= tol * max(1.0, max_abs(m))


def tensor(a: np.ndarray, b: np.ndarray, max_dim: int | None = MAX_COMPOSITE_DIM) -> np.ndarray:
    """Kronecker product with the first factor as the slow (mode-A) index.

    Raises DimensionError if the composite dimension would exceed max_dim.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    composite = a.shape[0] * b.shape[0]
    if max_dim is not None and composite > max_dim:
        raise DimensionError(
            f"composite dimension {composite} exceeds the cap {max_dim}; "
            "pass a larger max_dim to allow this"
        )
    return np.kron(a, b)


def partial_transpose_a(rho: np.ndarray, idx: ModeIndexing) -> np.ndarray:
    """Transpose the mode-A indices only: out[(m,j),(n,k)] = rho[(n,j),(m,k)]."""
    rho = _as_square(rho)
    if rho.shape[0] != idx.total:
        raise DimensionError(f"matrix dim {rho.shape[0]} != dim_a*dim_b = {idx.total}")
    da, db = idx.dim_a, idx.dim_b
    return rho.reshape(da, db, da, db).transpose(2, 1, 0, 3).reshape(idx.total, idx.total)


def partial_trace_b(rho: np.ndarray, idx: ModeIndexing) -> np.ndarray:
    """Trace out mode B: out[m,n] = sum_j rho[(m,j),(n,j)]."""
    rho = _as_square(rho)
    if rho.shape[0] != idx.total:
        raise DimensionError(f"matrix dim {rho.shape[0]} != dim_a*dim_b = {idx.total}")
    da, db = idx.dim_a, idx.dim_b
    return np.einsum("mjnj->mn", rho.reshape(da, db, da, db))


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, ascending.

    The input is symmetrized as (M + M^dagger)/2 first; truncation noise makes
    nominally Hermitian matrices asymmetric at the 1e-14 level and symmetrizing
    keeps downstream results deterministic.
    """
    m = _as_square(m)
    herm = (m + m.conj().T) / 2.0
    try:
        return np.linalg.eigvalsh(herm)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigensolver failed to converge (dim {m.shape[0]})") from exc


def hermitian_eigensystem(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and eigenvectors (columns) after symmetrization."""
    m = _as_square(m)
    herm = (m + m.conj().T) / 2.0
    try:
        return np.linalg.eigh(herm)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigensolver failed to converge (dim {m.shape[0]})") from exc


def expm_antihermitian(g: np.ndarray) -> np.ndarray:
    """Unitary exp(G) of an anti-Hermitian generator via scaling-and-squaring.

    Raises ParameterError if G is not anti-Hermitian within 1e-12 (relative),
    NumericError if the result fails the unitarity check at 1e-9.
    """
    g = _as_square(g)
    if max_abs(g + g.conj().T) > 1e-12 * max(1.0, max_abs(g)):
        raise ParameterError("generator is not anti-Hermitian within 1e-12")
    u = scipy.linalg.expm(g)
    defect = max_abs(u @ u.conj().T - np.eye(g.shape[0]))
    if defect > 1e-9:
        raise NumericError(f"matrix exponential lost unitarity (defect {defect:.3e})")
    return u
