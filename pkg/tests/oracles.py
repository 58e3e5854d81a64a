"""Brute-force reference constructions used only by the tests.

None of these share code with the package paths they check.
"""
from __future__ import annotations

from functools import reduce

import numpy as np

HHAT = np.array([[1.0, 1.0], [1.0, -1.0]])
H1 = HHAT / np.sqrt(2)


def dense_walsh(k: int) -> np.ndarray:
    return reduce(np.kron, [HHAT] * k, np.eye(1))


def ucr_sign_matrix(k: int) -> np.ndarray:
    """M[b, l] = sign of rotation ``l`` seen by control state ``b``.

    Built by walking the CNOT ladder: before rotation ``l`` the control bits
    flipped so far form the Gray word of ``l``.
    """
    size = 2**k
    m = np.zeros((size, size))
    for b in range(size):
        flipped = 0
        for ell in range(size):
            m[b, ell] = (-1) ** bin(b & flipped).count("1")
            nxt = (ell + 1) % size
            flipped ^= (ell ^ (ell >> 1)) ^ (nxt ^ (nxt >> 1))
    return m


def ry(angle: float) -> np.ndarray:
    c, s = np.cos(angle / 2), np.sin(angle / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rz(angle: float) -> np.ndarray:
    return np.diag([np.exp(-0.5j * angle), np.exp(0.5j * angle)])


def multiplexed_rotation(angles, rot=ry) -> np.ndarray:
    """Naive uniformly controlled rotation: one full rotation per control word.

    Target is the most significant qubit; rotation angle for control word
    ``b`` is ``2 * angles[b]``.
    """
    angles = np.asarray(angles)
    size = angles.size
    u = np.zeros((2 * size, 2 * size), dtype=complex)
    for b, t in enumerate(angles):
        r = rot(2 * t)
        for x in range(2):
            for y in range(2):
                u[x * size + b, y * size + b] = r[x, y]
    return u


def cnot_matrix(control: int, target: int, m: int) -> np.ndarray:
    dim = 2**m
    u = np.zeros((dim, dim))
    for s in range(dim):
        bit_c = (s >> (m - 1 - control)) & 1
        t = s ^ (1 << (m - 1 - target)) if bit_c else s
        u[t, s] = 1
    return u


def naive_oracle(a) -> np.ndarray:
    """Matrix query unitary assembled entrywise from cos/sin blocks.

    Flag qubit is the leading bit; register index is ``i * N + j``. Real data
    uses ``RY(2 arccos a)`` alone, complex data ``RZ(-2 arg a) RY(2 arccos|a|)``.
    """
    a = np.asarray(a)
    real = not np.iscomplexobj(a) or not np.any(a.imag)
    vec = np.asarray(a, dtype=complex).reshape(-1)
    size = vec.size
    u = np.zeros((2 * size, 2 * size), dtype=complex)
    for ell, v in enumerate(vec):
        if real:
            block = ry(2 * np.arccos(v.real))
        else:
            phi = -np.angle(v) if v != 0 else 0.0
            block = rz(2 * phi) @ ry(2 * np.arccos(min(abs(v), 1.0)))
        for x in range(2):
            for y in range(2):
                u[x * size + ell, y * size + ell] = block[x, y]
    return u


def naive_fable_unitary(a) -> np.ndarray:
    """(I (x) H^n (x) I)(I (x) SWAP) O_A (I (x) H^n (x) I) as a dense matrix."""
    a = np.asarray(a)
    dim = a.shape[0]
    n = dim.bit_length() - 1
    hn = reduce(np.kron, [H1] * n, np.eye(1))
    had = np.kron(np.kron(np.eye(2), hn), np.eye(dim))
    swap = np.zeros((dim * dim, dim * dim))
    for i in range(dim):
        for j in range(dim):
            swap[j * dim + i, i * dim + j] = 1
    return had @ np.kron(np.eye(2), swap) @ naive_oracle(a) @ had


def jacobi_eigenvalues(s: np.ndarray, tol: float = 1e-15, sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations."""
    a = np.array(s, dtype=float)
    n = a.shape[0]
    for _ in range(sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off < tol * np.linalg.norm(a):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2 * a[p, q])
                t = np.sign(tau) / (abs(tau) + np.sqrt(1 + tau * tau)) if tau != 0 else 1.0
                c = 1 / np.sqrt(1 + t * t)
                sn = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q], rot[q, p] = sn, -sn
                a = rot.T @ a @ rot
    return np.diag(a).copy()
