"""Dense complex linear-algebra kernels shared by every other module.

A single SVD underlies the pseudo-inverse, rank decisions, range projectors,
and kernel bases, so all cutoffs are mutually consistent. Matrices are plain
``numpy`` arrays in complex double precision; every function is pure and
never mutates its inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "as_complex_matrix",
    "as_complex_vector",
    "frobenius_norm",
    "spectral_norm",
    "rel_frobenius_error",
    "matrices_close",
    "pinv",
    "rank_of",
    "projector_onto_range",
    "kernel_basis",
    "range_contained",
]


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds used throughout the package.

    Parameters
    ----------
    rank_rel : float
        Relative singular-value cutoff: singular values below
        ``rank_rel * sigma_max`` count as zero for rank, pseudo-inverse,
        projector, and kernel computations.
    eq_rel : float
        Relative Frobenius-norm threshold for matrix equality,
        ``||A - B||_F / max(1, ||B||_F) <= eq_rel``.
    """

    rank_rel: float = 1e-10
    eq_rel: float = 1e-9

    def __post_init__(self) -> None:
        for name in ("rank_rel", "eq_rel"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"{name} must be finite and positive, got {value!r}")


DEFAULT_TOL = Tolerance()


def as_complex_matrix(a) -> np.ndarray:
    """Coerce to a nonempty 2-d complex128 array, rejecting NaN/Inf entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.size == 0:
        raise DimensionMismatch(f"expected a nonempty 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def as_complex_vector(a, dim: int | None = None) -> np.ndarray:
    """Coerce to a 1-d complex128 array; column/row shapes (n,1)/(1,n) are flattened."""
    v = np.asarray(a, dtype=np.complex128)
    if v.ndim == 2 and 1 in v.shape:
        v = v.reshape(-1)
    if v.ndim != 1 or v.size == 0:
        raise DimensionMismatch(f"expected a nonempty vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    if dim is not None and v.size != dim:
        raise DimensionMismatch(f"expected a vector of length {dim}, got {v.size}")
    return v


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(np.asarray(a, dtype=np.complex128)))


def spectral_norm(a) -> float:
    """Largest singular value (operator 2-norm)."""
    m = np.asarray(a, dtype=np.complex128)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2)) if m.ndim == 2 else float(np.linalg.norm(m))

def rel_frobenius_error(a, b) -> float:
    """Scale-free discrepancy ``||a - b||_F / max(1, ||b||_F)``."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot compare shapes {a.shape} and {b.shape}")
    return float(np.linalg.norm(a - b) / max(1.0, np.linalg.norm(b)))


def matrices_close(a, b, tol: Tolerance = DEFAULT_TOL) -> bool:
    return rel_frobenius_error(a, b) <= tol.eq_rel


def _svd(m: np.ndarray):
    return np.linalg.svd(m, full_matrices=True)


def _numeric_rank(s: np.ndarray, tol: Tolerance) -> int:
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol.rank_rel * s[0]))


def rank_of(m, tol: Tolerance = DEFAULT_TOL) -> int:
    """Number of singular values above the relative cutoff; 0 for the zero matrix."""
    m = as_complex_matrix(m)
    s = np.linalg.svd(m, compute_uv=False)
    return _numeric_rank(s, tol)


def pinv(m, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose pseudo-inverse via truncated SVD.

    Singular values below ``rank_rel * sigma_max`` are treated as exactly
    zero, so the zero matrix maps to the (transposed-shape) zero matrix.
    The result satisfies the four Penrose identities to working precision.
    """
    m = as_complex_matrix(m)
    u, s, vh = np.linalg.svd(m, full_matrices=False)
    r = _numeric_rank(s, tol)
    if r == 0:
        return np.zeros((m.shape[1], m.shape[0]), dtype=np.complex128)
    return (vh[:r].conj().T / s[:r]) @ u[:, :r].conj().T


def projector_onto_range(m, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthogonal projector onto the column space of ``m``.

    Idempotent, Hermitian, fixes every column of ``m``; rank equals
    ``rank_of(m, tol)``.
    """
    m = as_complex_matrix(m)
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    r = _numeric_rank(s, tol)
    if r == 0:
        return np.zeros((m.shape[0], m.shape[0]), dtype=np.complex128)
    ur = u[:, :r]
    p = ur @ ur.conj().T
    return (p + p.conj().T) / 2.0


def kernel_basis(m, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the (right) null space, as columns.

    Returns a ``(cols, cols - rank)`` array; the second dimension is zero
    when the kernel is trivial.
    """
    m = as_complex_matrix(m)
    _, s, vh = _svd(m)
    r = _numeric_rank(s, tol)
    return vh[r:].conj().T


def range_contained(x, y, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether the column space of ``x`` lies inside the column space of ``y``.

    Decided by the rank test rank([y | x]) == rank(y), avoiding explicit
    basis extraction.
    """
    x = as_complex_matrix(x)
    y = as_complex_matrix(y)
    if x.shape[0] != y.shape[0]:
        raise DimensionMismatch(
            f"column spaces live in different dimensions: {x.shape[0]} vs {y.shape[0]}"
        )
    return rank_of(np.hstack([y, x]), tol) == rank_of(y, tol)
