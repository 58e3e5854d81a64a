import numpy as np
import pytest

from fable.assemble import assemble_fable
from fable.circuit import (Circuit, Gate, GateKind, GateStats, QubitLayout,
                           circuit_gate_stats, synthesize_ucr)
from fable.simulate import circuit_unitary
from oracles import multiplexed_rotation, ry, rz


def test_zero_controls_is_single_rotation():
    gates = synthesize_ucr([0.3], GateKind.RY, target=0, controls=())
    assert gates == [Gate.ry(0.6, 0)]


def test_two_control_cnot_pattern():
    gates = synthesize_ucr(np.ones(4), GateKind.RY, target=0, controls=(1, 2))
    cnots = [g.control for g in gates if g.kind is GateKind.CX]
    assert cnots == [2, 1, 2, 1]
    kinds = [g.kind for g in gates]
    assert kinds == [GateKind.RY, GateKind.CX] * 4


def test_three_control_cnot_pattern():
    gates = synthesize_ucr(np.ones(8), GateKind.RY, 0, (1, 2, 3))
    assert [g.control for g in gates if g.kind is GateKind.CX] == [3, 2, 3, 1, 3, 2, 3, 1]


@pytest.mark.parametrize("k", range(0, 5))
@pytest.mark.parametrize("kind, rot", [(GateKind.RY, ry), (GateKind.RZ, rz)])
def test_ucr_matches_multiplexed_oracle(k, kind, rot, rng):
    from fable.angles import solve_circuit_angles
    theta = rng.uniform(-np.pi, np.pi, 2**k)
    gates = synthesize_ucr(solve_circuit_angles(theta), kind, 0, tuple(range(1, k + 1)))
    u = circuit_unitary(Circuit(k + 1, gates))
    np.testing.assert_allclose(u, multiplexed_rotation(theta, rot), atol=1e-12)


def test_ucr_rejects_bad_sizes():
    with pytest.raises(ValueError):
        synthesize_ucr(np.ones(3), GateKind.RY, 0, (1, 2))
    with pytest.raises(ValueError):
        synthesize_ucr(np.ones(2), GateKind.CX, 0, (1,))
    with pytest.raises(ValueError):
        synthesize_ucr(np.ones(2), GateKind.RY, 0, (1,), keep=[True])


def test_n1_uncompressed_gate_count():
    c = assemble_fable(np.array([[0.1, 0.2], [0.3, 0.4]]))
    # H, 4 RY, 4 CX, SWAP, H: one Hadamard per row qubit on each side
    assert len(c) == 11
    assert c.num_qubits == 3
    assert c.subnormalization == 2.0 and c.ancilla_count == 2


def test_complex_doubles_ucr_budget(rng):
    a = rng.uniform(-1, 1, (4, 4))
    real = circuit_gate_stats(assemble_fable(a))
    cplx = circuit_gate_stats(assemble_fable(a * np.exp(1j * rng.uniform(size=(4, 4)))))
    assert real[GateKind.CX] == 16 and cplx[GateKind.CX] == 32
    assert real[GateKind.RZ] == 0 and cplx[GateKind.RZ] == 16


def test_gate_stats_fractions():
    stats = GateStats(2, {GateKind.CX: 8, GateKind.RY: 4})
    assert stats.cnot_fraction == 0.5 and stats.roty_fraction == 0.25
    assert stats.rotz_fraction == 0 and stats.total == 12
    assert stats.to_dict()["counts"]["cx"] == 8
    assert GateStats(0, {GateKind.RY: 1}).roty_fraction == 1.0


def test_layout():
    lay = QubitLayout(3)
    assert lay.flag == 0
    assert lay.row_register == (1, 2, 3)
    assert lay.column_register == (4, 5, 6)
    assert lay.num_qubits == 7


@pytest.mark.parametrize("bad", [
    lambda: Gate.cx(1, 1),
    lambda: Gate.swap(2, 2),
    lambda: Gate(GateKind.RY, 0),
    lambda: Circuit(2, [Gate.h(2)]),
    lambda: Circuit(2, [Gate.cx(0, 5)]),
])
def test_invalid_gates_rejected(bad):
    with pytest.raises(ValueError):
        bad()


def test_circuit_counts_and_iteration():
    c = Circuit(2, [Gate.h(0), Gate.cx(0, 1), Gate.h(1)])
    assert len(c) == 3 and c.count(GateKind.H) == 2
    assert [g.kind for g in c] == [GateKind.H, GateKind.CX, GateKind.H]
    assert Gate.cx(0, 1).qubits == (0, 1)
