"""Statevector simulation, block extraction and encoding-error certification."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import cos, sin

import numpy as np

from .circuit import Circuit, Gate, GateKind
from .errors import ResourceLimitError
from .linalg import as_matrix, frobenius_norm, num_qubits, spectral_norm

MAX_SIM_QUBITS = 21
EXACT_TOL = 1e-10
BOUND_SLACK = 1e-9

_H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)


def gate_matrix(g: Gate) -> np.ndarray:
    """2x2 matrix of a single-qubit gate."""
    if g.kind is GateKind.H:
        return _H
    if g.kind is GateKind.RY:
        c, s = cos(g.angle / 2), sin(g.angle / 2)
        return np.array([[c, -s], [s, c]], dtype=np.complex128)
    if g.kind is GateKind.RZ:
        ph = np.exp(0.5j * g.angle)
        return np.array([[ph.conjugate(), 0], [0, ph]], dtype=np.complex128)
    raise ValueError(f"{g.kind.value} is not a single-qubit gate")


def _check_cap(num_qubits: int, max_qubits: int) -> None:
    if num_qubits > max_qubits:
        raise ResourceLimitError(
            f"refusing to simulate {num_qubits} qubits (cap {max_qubits})"
        )


def _apply(psi: np.ndarray, g: Gate, m: int) -> np.ndarray:
    """Apply ``g`` to a batch of states shaped ``(2,) * m + (batch,)``."""
    for q in g.qubits:
        if not 0 <= q < m:
            raise IndexError(f"qubit {q} out of range for {m} qubits")
    if g.kind is GateKind.SWAP:
        return np.ascontiguousarray(np.swapaxes(psi, g.target, g.second))
    if g.kind is GateKind.CX:
        c, t = g.control, g.target
        idx = [slice(None)] * (m + 1)
        idx[c] = 1
        idx = tuple(idx)
        sub = psi[idx]
        axis = t - 1 if t > c else t
        psi[idx] = np.flip(sub, axis=axis).copy()
        return psi
    u = gate_matrix(g)
    q = g.target
    lo = psi.reshape(2**q, 2, -1)
    p0 = lo[:, 0, :].copy()
    p1 = lo[:, 1, :]
    lo[:, 0, :] = u[0, 0] * p0 + u[0, 1] * p1
    lo[:, 1, :] = u[1, 0] * p0 + u[1, 1] * p1
    return psi


def evolve(c: Circuit, states: np.ndarray, max_qubits: int = MAX_SIM_QUBITS) -> np.ndarray:
    """Run ``c`` on each column of ``states`` (shape ``(2**m, batch)``)."""
    m = c.num_qubits
    _check_cap(m, max_qubits)
    states = np.asarray(states, dtype=np.complex128)
    if states.shape[0] != 2**m:
        raise ValueError(f"state length {states.shape[0]} does not match {m} qubits")
    batch = states.shape[1]
    psi = states.reshape((2,) * m + (batch,)).copy()
    for g in c.gates:
        psi = _apply(psi, g, m)
    return psi.reshape(2**m, batch)


class StateVector:
    """Amplitudes of an ``num_qubits``-qubit pure state; qubit 0 is the leading bit."""

    def __init__(self, amplitudes, num_qubits: int | None = None):
        amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        m = amps.size.bit_length() - 1
        if amps.size != 2**m:
            raise ValueError(f"{amps.size} amplitudes is not a power of two")
        if num_qubits is not None and num_qubits != m:
            raise ValueError(f"{amps.size} amplitudes do not describe {num_qubits} qubits")
        self.num_qubits = m
        self.amplitudes = amps
        self.amplitudes.setflags(write=False)

    @classmethod
    def basis(cls, num_qubits: int, index: int = 0) -> StateVector:
        amps = np.zeros(2**num_qubits, dtype=np.complex128)
        amps[index] = 1.0
        return cls(amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self.num_qubits})"


def apply_gate(state: StateVector, g: Gate) -> StateVector:
    out = evolve(Circuit(state.num_qubits, (g,)), state.amplitudes[:, None])
    return StateVector(out[:, 0])


def run(c: Circuit, state: StateVector, max_qubits: int = MAX_SIM_QUBITS) -> StateVector:
    if state.num_qubits != c.num_qubits:
        raise ValueError(
            f"state has {state.num_qubits} qubits, circuit has {c.num_qubits}"
        )
    return StateVector(evolve(c, state.amplitudes[:, None], max_qubits)[:, 0])


def circuit_unitary(c: Circuit, max_qubits: int = 12) -> np.ndarray:
    """Full unitary of ``c``; only for small circuits."""
    _check_cap(c.num_qubits, max_qubits)
    return evolve(c, np.eye(2**c.num_qubits, dtype=np.complex128), max_qubits)


def extract_block(c: Circuit, n: int, max_qubits: int = MAX_SIM_QUBITS) -> np.ndarray:
    """Top-left ``2**n x 2**n`` block of the unitary of ``c``.

    Column ``j`` comes from running ``c`` on ``|0...0>|j>``; ancillas are the
    first ``num_qubits - n`` qubits.
    """
    if c.num_qubits != 2 * n + 1:
        raise ValueError(f"expected {2 * n + 1} qubits for an n={n} block, got {c.num_qubits}")
    _check_cap(c.num_qubits, max_qubits)
    dim = 2**n
    inputs = np.zeros((2**c.num_qubits, dim), dtype=np.complex128)
    inputs[np.arange(dim), np.arange(dim)] = 1.0
    return evolve(c, inputs, max_qubits)[:dim, :]


@dataclass(frozen=True)
class EncodingReport:
    alpha: float
    ancillas: int
    epsilon_spectral: float
    epsilon_frobenius: float
    max_entry_error: float
    error_bound: float
    delta_c: float
    passed: bool
    spectral_converged: bool = True

    def to_dict(self) -> dict:
        return asdict(self)


def verify_encoding(c: Circuit, a, delta_c: float = 0.0,
                    max_qubits: int = MAX_SIM_QUBITS) -> EncodingReport:
    """Simulate ``c`` and measure how well ``2**n`` times its block matches ``a``.

    With ``delta_c > 0`` the spectral error must stay below ``N**3 * delta_c``;
    with ``delta_c == 0`` it must be below ``1e-10``.
    """
    a = as_matrix(a)
    n = num_qubits(a)
    alpha = 2.0**n
    block = extract_block(c, n, max_qubits)
    diff = a - alpha * block
    eps, converged = spectral_norm(diff, return_info=True)
    bound = float(2**n) ** 3 * delta_c
    if delta_c > 0:
        passed = eps <= bound + BOUND_SLACK
    else:
        passed = eps <= EXACT_TOL
    return EncodingReport(
        alpha=alpha,
        ancillas=n + 1,
        epsilon_spectral=eps,
        epsilon_frobenius=frobenius_norm(diff),
        max_entry_error=float(np.max(np.abs(diff))),
        error_bound=bound,
        delta_c=float(delta_c),
        passed=bool(passed),
        spectral_converged=bool(converged),
    )
