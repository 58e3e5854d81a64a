import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fable.assemble import assemble_fable, encode
from fable.circuit import Circuit, Gate
from fable.errors import ResourceLimitError
from fable.simulate import (StateVector, apply_gate, circuit_unitary, extract_block,
                            run, verify_encoding)
from oracles import naive_fable_unitary


def test_hadamard_on_zero():
    out = apply_gate(StateVector.basis(1), Gate.h(0))
    np.testing.assert_allclose(out.amplitudes, [1 / np.sqrt(2)] * 2, atol=1e-15)


def test_ry_pi_flips():
    out = apply_gate(StateVector.basis(1), Gate.ry(np.pi, 0))
    np.testing.assert_allclose(out.amplitudes, [0, 1], atol=1e-15)


def test_rz_phase():
    out = apply_gate(StateVector.basis(1, 1), Gate.rz(np.pi, 0))
    np.testing.assert_allclose(out.amplitudes, [0, 1j], atol=1e-15)


def test_cnot_and_swap_on_basis_states():
    # qubit 0 is the leading bit
    assert run(Circuit(2, [Gate.cx(0, 1)]), StateVector.basis(2, 2)).amplitudes[3] == 1
    assert run(Circuit(2, [Gate.cx(1, 0)]), StateVector.basis(2, 1)).amplitudes[3] == 1
    assert run(Circuit(2, [Gate.swap(0, 1)]), StateVector.basis(2, 1)).amplitudes[2] == 1


def _random_circuit(m, length, seed):
    r = np.random.default_rng(seed)
    gates = []
    for _ in range(length):
        kind = r.integers(5)
        q = int(r.integers(m))
        other = int((q + 1 + r.integers(m - 1)) % m)
        gates.append([Gate.h(q), Gate.ry(r.normal(), q), Gate.rz(r.normal(), q),
                      Gate.cx(other, q), Gate.swap(q, other)][kind])
    return Circuit(m, gates)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 5), st.integers(0, 2**32 - 1))
def test_norm_preserved(m, seed):
    r = np.random.default_rng(seed)
    psi = r.normal(size=2**m) + 1j * r.normal(size=2**m)
    psi /= np.linalg.norm(psi)
    out = run(_random_circuit(m, 30, seed), StateVector(psi))
    assert abs(out.norm() - 1) < 1e-12


def test_linearity(rng):
    c = _random_circuit(3, 20, 7)
    u = circuit_unitary(c)
    x, y = rng.normal(size=8), rng.normal(size=8) * 1j
    lhs = run(c, StateVector(2 * x + 3 * y)).amplitudes
    np.testing.assert_allclose(lhs, u @ (2 * x + 3 * y), atol=1e-12)
    np.testing.assert_allclose(u.conj().T @ u, np.eye(8), atol=1e-12)


def test_statevector_is_read_only():
    s = StateVector.basis(2)
    with pytest.raises(ValueError):
        s.amplitudes[0] = 2


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("complex_data", [False, True])
def test_circuit_matches_naive_construction(n, complex_data, rng):
    a = rng.uniform(-1, 1, (2**n, 2**n))
    if complex_data:
        a = a * np.exp(1j * rng.uniform(-np.pi, np.pi, a.shape))
    np.testing.assert_allclose(circuit_unitary(assemble_fable(a)), naive_fable_unitary(a),
                               atol=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_block_is_scaled_matrix(n, rng):
    a = rng.uniform(-1, 1, (2**n, 2**n))
    block = extract_block(assemble_fable(a), n)
    np.testing.assert_allclose(2**n * block, a, atol=1e-13)


def test_verify_identity_exact():
    rep = verify_encoding(assemble_fable(np.eye(4)), np.eye(4))
    assert rep.passed and rep.epsilon_spectral < 1e-13
    assert rep.alpha == 4 and rep.ancillas == 3 and rep.spectral_converged


def test_verify_compressed_within_bound(rng):
    a = rng.uniform(-1, 1, (4, 4))
    enc = encode(a, delta_c=1e-2)
    rep = verify_encoding(enc.circuit, enc.matrix, 1e-2)
    assert rep.error_bound == pytest.approx(0.64)
    assert rep.passed and rep.epsilon_spectral <= 0.64


def test_verify_detects_wrong_circuit(rng):
    a = rng.uniform(-1, 1, (4, 4))
    rep = verify_encoding(assemble_fable(-a), a)
    assert not rep.passed


def test_simulation_cap():
    big = Circuit(13, [Gate.h(0)])
    with pytest.raises(ResourceLimitError):
        circuit_unitary(big)
    with pytest.raises(ResourceLimitError):
        extract_block(Circuit(23, []), 11)
