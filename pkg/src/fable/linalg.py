"""Dense complex matrix helpers used throughout the package.

Matrices and vectors are plain ``numpy`` arrays of dtype ``complex128``;
nothing here mutates its inputs.
"""
from __future__ import annotations

import warnings

import numpy as np

from .errors import InvalidMatrixError, ResourceLimitError

MAX_ENTRIES = 2**20
POWER_ITERATION_SEED = 0xFAB1E


class ConvergenceWarning(RuntimeWarning):
    pass


def as_matrix(a) -> np.ndarray:
    """Return ``a`` as a 2-D ``complex128`` array (copying only if needed)."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise InvalidMatrixError(f"expected a 2-D matrix, got shape {m.shape}")
    return m


def log2_dim(dim: int) -> int:
    """Return ``n`` with ``dim == 2**n`` and ``n >= 1``, else raise."""
    if dim < 2 or dim & (dim - 1):
        raise InvalidMatrixError(f"dimension {dim} is not a power of two >= 2")
    return dim.bit_length() - 1


def num_qubits(a: np.ndarray) -> int:
    """Number of qubits ``n`` for a square ``2**n x 2**n`` encoding target."""
    rows, cols = np.shape(a)
    if rows != cols:
        raise InvalidMatrixError(f"encoding target must be square, got {rows}x{cols}")
    return log2_dim(rows)


def kron(a, b) -> np.ndarray:
    """Kronecker product, refusing results with more than ``MAX_ENTRIES`` entries."""
    a = as_matrix(a)
    b = as_matrix(b)
    size = a.size * b.size
    if size > MAX_ENTRIES:
        raise ResourceLimitError(
            f"Kronecker product would have {size} entries (cap {MAX_ENTRIES})"
        )
    return np.kron(a, b)


def kron_all(*factors) -> np.ndarray:
    out = as_matrix(factors[0])
    for f in factors[1:]:
        out = kron(out, f)
    return out


def frobenius_norm(a) -> float:
    a = np.asarray(a, dtype=np.complex128)
    return float(np.sqrt(np.sum(a.real**2 + a.imag**2)))


def spectral_norm(a, tol: float = 1e-13, max_iter: int = 10_000,
                  return_info: bool = False):
    """Largest singular value of ``a`` by power iteration on ``a^H a``.

    Args:
        a: matrix (any shape).
        tol: relative tolerance on the Rayleigh quotient of ``a^H a``.
        max_iter: iteration cap. When it is hit the best estimate is
            returned and a :class:`ConvergenceWarning` is emitted.
        return_info: also return a ``converged`` flag.

    Returns:
        ``sigma_max`` or ``(sigma_max, converged)``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = as_matrix(a)
    rng = np.random.default_rng(POWER_ITERATION_SEED)
    cols = a.shape[1]
    v = rng.standard_normal(cols) + 1j * rng.standard_normal(cols)
    v /= np.linalg.norm(v)
    ah = a.conj().T

    rho = 0.0
    converged = False
    for _ in range(max_iter):
        w = ah @ (a @ v)
        rho_new = float(np.real(np.vdot(v, w)))
        w_norm = np.linalg.norm(w)
        if w_norm == 0.0:
            rho, converged = 0.0, True
            break
        residual = np.linalg.norm(w - rho_new * v)
        change = abs(rho_new - rho)
        rho = rho_new
        v = w / w_norm
        if change <= tol * rho and residual <= np.sqrt(tol) * rho:
            converged = True
            break

    sigma = float(np.sqrt(max(rho, 0.0)))
    if not converged:
        warnings.warn(
            f"power iteration did not converge in {max_iter} iterations",
            ConvergenceWarning,
            stacklevel=2,
        )
    if return_info:
        return sigma, converged
    return sigma


def vectorize(a) -> np.ndarray:
    """Flatten a ``2**n x 2**n`` matrix with the row index in the high bits.

    Element ``a[i, j]`` lands at position ``i * N + j``.
    """
    a = as_matrix(a)
    num_qubits(a)
    return a.reshape(-1).copy()


def devectorize(v) -> np.ndarray:
    """Inverse of :func:`vectorize`."""
    v = np.asarray(v, dtype=np.complex128).reshape(-1)
    dim = int(round(np.sqrt(v.size)))
    if dim * dim != v.size:
        raise InvalidMatrixError(f"length {v.size} is not a perfect square")
    log2_dim(dim)
    return v.reshape(dim, dim).copy()
