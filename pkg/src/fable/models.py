"""Benchmark operators: Heisenberg spin chains and discretised Laplacians."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidMatrixError, ResourceLimitError
from .linalg import as_matrix, kron_all, log2_dim

PAULI_I = np.eye(2, dtype=np.complex128)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

MAX_MODEL_QUBITS = 10


@dataclass(frozen=True)
class HeisenbergSpec:
    n: int
    jx: float = 1.0
    jy: float = 1.0
    jz: float = 1.0
    hz: float = 0.0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"Heisenberg chain needs n >= 2 sites, got {self.n}")


@dataclass(frozen=True)
class LaplacianSpec:
    points_x: int
    points_y: int | None = None
    periodic: bool = False

    @property
    def dims(self) -> int:
        return 1 if self.points_y is None else 2

    def matrix(self) -> np.ndarray:
        if self.points_y is None:
            return laplacian_1d(self.points_x, self.periodic)
        return laplacian_2d(self.points_x, self.points_y, self.periodic)


def _embed(sites: dict[int, np.ndarray], n: int) -> np.ndarray:
    return kron_all(*(sites.get(k, PAULI_I) for k in range(n)))


def heisenberg_matrix(spec: HeisenbergSpec) -> np.ndarray:
    """Dense open-chain Heisenberg Hamiltonian on ``spec.n`` qubits.

    Site ``0`` is the leftmost Kronecker factor.
    """
    n = spec.n
    if n > MAX_MODEL_QUBITS:
        raise ResourceLimitError(f"dense Heisenberg model capped at {MAX_MODEL_QUBITS} sites")
    dim = 2**n
    h = np.zeros((dim, dim), dtype=np.complex128)
    for coupling, pauli in ((spec.jx, PAULI_X), (spec.jy, PAULI_Y), (spec.jz, PAULI_Z)):
        if coupling == 0:
            continue
        for i in range(n - 1):
            h += coupling * _embed({i: pauli, i + 1: pauli}, n)
    if spec.hz != 0:
        for i in range(n):
            h += spec.hz * _embed({i: PAULI_Z}, n)
    return h


def _check_points(points: int) -> int:
    try:
        return log2_dim(points)
    except InvalidMatrixError:
        raise InvalidMatrixError(f"number of grid points {points} is not a power of two >= 2") from None


def laplacian_1d(points: int, periodic: bool = False) -> np.ndarray:
    """Three-point stencil ``[-1, 2, -1]``; periodic adds ``-1`` in both corners."""
    _check_points(points)
    lap = 2 * np.eye(points, dtype=np.complex128)
    idx = np.arange(points - 1)
    lap[idx, idx + 1] = -1
    lap[idx + 1, idx] = -1
    if periodic:
        lap[0, -1] = lap[-1, 0] = -1
    return lap


def laplacian_2d(px: int, py: int, periodic: bool = False) -> np.ndarray:
    """Five-point stencil as the Kronecker sum ``L_x (x) I + I (x) L_y``."""
    _check_points(px)
    _check_points(py)
    if px * py > 2**MAX_MODEL_QUBITS:
        raise ResourceLimitError(f"2D grid {px}x{py} exceeds {2**MAX_MODEL_QUBITS} points")
    lx = laplacian_1d(px, periodic)
    ly = laplacian_1d(py, periodic)
    return kron_all(lx, np.eye(py)) + kron_all(np.eye(px), ly)


def prescale(a) -> tuple[np.ndarray, float]:
    """Divide by the largest entry magnitude when it exceeds one.

    Returns ``(a / s, s)``; ``s == 1`` when no scaling is needed (including
    the zero matrix).
    """
    a = as_matrix(a)
    peak = float(np.max(np.abs(a))) if a.size else 0.0
    if peak <= 1.0:
        return a.copy(), 1.0
    return a / peak, peak
