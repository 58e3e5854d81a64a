"""Rotation angles for the matrix query oracle.

The oracle rotates the flag qubit by ``theta[l]`` (and, for complex data,
``phi[l]``) when the row/column registers hold ``l = i * N + j``. A uniformly
controlled rotation realises this with ``4**n`` single rotations whose angles
are the Walsh-Hadamard transform of the oracle angles, read out in Gray-code
order.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Literal

import numpy as np

from .errors import InvalidMatrixError
from .linalg import as_matrix, num_qubits, vectorize

NORM_SLACK = 1e-12
COMPLEX_TOL = 1e-14


@dataclass(frozen=True)
class AngleSet:
    """Oracle angles and the matching uniformly-controlled-rotation angles.

    All vectors have length ``4**n`` and hold half-angles in radians; gates
    built from them rotate by twice these values.
    """

    n: int
    theta_oracle: np.ndarray
    phi_oracle: np.ndarray
    is_complex: bool
    theta_circuit: np.ndarray | None = field(default=None)
    phi_circuit: np.ndarray | None = field(default=None)

    @property
    def size(self) -> int:
        return 4**self.n


def gray_code(k: int) -> np.ndarray:
    """Reflected binary Gray code ``l ^ (l >> 1)`` for ``l < 2**k``."""
    idx = np.arange(2**k, dtype=np.int64)
    return idx ^ (idx >> 1)


def _check_pow2(v: np.ndarray) -> int:
    if v.ndim != 1 or v.size == 0 or v.size & (v.size - 1):
        raise ValueError(f"angle vector length {v.size} is not a power of two")
    return v.size.bit_length() - 1


def fwht(v) -> np.ndarray:
    """Unnormalised fast Walsh-Hadamard transform ``[[1, 1], [1, -1]]^{(x) k} v``.

    Works on a private copy; ``fwht(fwht(v)) == 2**k * v``.
    """
    out = np.array(v, dtype=np.float64, copy=True).reshape(-1)
    k = _check_pow2(out)
    h = 1
    for _ in range(k):
        view = out.reshape(-1, 2, h)
        top = view[:, 0, :].copy()
        bottom = view[:, 1, :]
        view[:, 0, :] += bottom
        view[:, 1, :] = top - bottom
        h *= 2
    return out


def gray_permute(v, direction: Literal["forward", "inverse"] = "forward") -> np.ndarray:
    """Reorder ``v`` between binary and Gray-code order.

    ``forward``: ``out[l] = v[gray(l)]``. ``inverse``: ``out[gray(l)] = v[l]``.
    """
    v = np.asarray(v).reshape(-1)
    k = _check_pow2(v)
    g = gray_code(k)
    if direction == "forward":
        return v[g].copy()
    if direction == "inverse":
        out = np.empty_like(v)
        out[g] = v
        return out
    raise ValueError(f"unknown direction {direction!r}")


def oracle_angles(a) -> AngleSet:
    """Oracle angles for the matrix ``a`` (entries must satisfy ``|a_ij| <= 1``).

    Real data gives ``theta = arccos(a_ij)``; complex data gives
    ``theta = arccos(|a_ij|)`` and ``phi = -arg(a_ij)``, with ``phi = 0`` at
    zero entries.
    """
    a = as_matrix(a)
    n = num_qubits(a)
    vec = vectorize(a)
    mags = np.abs(vec)
    worst = float(mags.max())
    if worst > 1.0 + NORM_SLACK:
        raise InvalidMatrixError(
            f"matrix entries must satisfy |a_ij| <= 1, found {worst:.6g}; prescale first"
        )
    is_complex = bool(np.max(np.abs(vec.imag)) > COMPLEX_TOL)
    if is_complex:
        theta = np.arccos(np.clip(mags, 0.0, 1.0))
        phi = np.where(mags == 0.0, 0.0, -np.angle(vec))
    else:
        theta = np.arccos(np.clip(vec.real, -1.0, 1.0))
        phi = np.zeros_like(theta)
    return AngleSet(n=n, theta_oracle=theta, phi_oracle=phi, is_complex=is_complex)


def solve_circuit_angles(oracle) -> np.ndarray:
    """Solve ``(H^{(x) 2n} P_G) x = oracle`` for the rotation angles ``x``."""
    oracle = np.asarray(oracle, dtype=np.float64)
    return gray_permute(fwht(oracle), "forward") / oracle.size


def forward_map(circuit) -> np.ndarray:
    """Net oracle angle per control state produced by UCR angles ``circuit``."""
    return fwht(gray_permute(np.asarray(circuit, dtype=np.float64), "inverse"))


def circuit_angles(angles: AngleSet) -> AngleSet:
    """Fill in the circuit-angle fields of ``angles``."""
    theta = solve_circuit_angles(angles.theta_oracle)
    if angles.is_complex:
        phi = solve_circuit_angles(angles.phi_oracle)
    else:
        phi = np.zeros_like(theta)
    return replace(angles, theta_circuit=theta, phi_circuit=phi)


def compute_angles(a) -> AngleSet:
    return circuit_angles(oracle_angles(a))

