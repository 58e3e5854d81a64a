"""Full block-encoding circuits and the end-to-end encode pipeline."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .angles import AngleSet, compute_angles
from .circuit import Circuit, Gate, GateKind, QubitLayout, synthesize_ucr
from .compress import CompressionMask, CompressionReport, compress_ucr, threshold_mask
from .linalg import as_matrix, num_qubits
from .models import prescale


def assemble_fable(a, angles: AngleSet | None = None,
                   mask: CompressionMask | None = None) -> Circuit:
    """Block-encoding circuit for ``a`` with subnormalisation ``2**n``.

    Layout: H on the row register, the oracle as a uniformly controlled RY
    (followed by RZ for complex data) on the flag qubit, pairwise SWAPs of
    row and column registers, H on the row register again.
    """
    circuit, _ = _assemble(a, angles, mask)
    return circuit


def _assemble(a, angles, mask) -> tuple[Circuit, list[CompressionReport]]:
    a = as_matrix(a)
    n = num_qubits(a)
    if angles is None:
        angles = compute_angles(a)
    if angles.n != n or angles.theta_circuit is None:
        raise ValueError(f"angle set (n={angles.n}) does not match a {2**n}x{2**n} matrix")
    if mask is not None and mask.n != n:
        raise ValueError(f"mask (n={mask.n}) does not match a {2**n}x{2**n} matrix")

    layout = QubitLayout(n)
    controls = layout.row_register + layout.column_register
    layers = [(GateKind.RY, angles.theta_circuit,
               None if mask is None else mask.keep_theta)]
    if angles.is_complex:
        layers.append((GateKind.RZ, angles.phi_circuit,
                       None if mask is None else mask.keep_phi))

    gates = [Gate.h(q) for q in layout.row_register]
    reports = []
    for kind, values, keep in layers:
        if keep is None:
            gates += synthesize_ucr(values, kind, layout.flag, controls)
        else:
            ucr, report = compress_ucr(values, keep, kind, layout.flag, controls,
                                       threshold=mask.threshold)
            gates += ucr
            reports.append(report)
    gates += [Gate.swap(r, c) for r, c in zip(layout.row_register, layout.column_register)]
    gates += [Gate.h(q) for q in layout.row_register]

    circuit = Circuit(layout.num_qubits, gates, subnormalization=float(2**n),
                      ancilla_count=n + 1)
    return circuit, reports


@dataclass(frozen=True)
class Encoding:
    """Result of :func:`encode`.

    ``matrix`` is the (possibly prescaled) matrix actually encoded; the
    original is ``scale * matrix`` and its subnormalisation is ``alpha``.
    """

    circuit: Circuit
    matrix: np.ndarray
    scale: float
    angles: AngleSet
    mask: CompressionMask
    compression: CompressionReport

    @property
    def n(self) -> int:
        return self.angles.n

    @property
    def alpha(self) -> float:
        return self.scale * 2**self.n


def encode(a, delta_c: float = 0.0, auto_scale: bool = True) -> Encoding:
    """Prescale (optionally), compute angles, threshold and assemble."""
    a = as_matrix(a)
    if auto_scale:
        a, scale = prescale(a)
    else:
        scale = 1.0
    angles = compute_angles(a)
    mask = threshold_mask(angles, delta_c)
    circuit, reports = _assemble(a, angles, mask)
    total = reports[0]
    for r in reports[1:]:
        total = total + r
    return Encoding(circuit=circuit, matrix=a, scale=scale, angles=angles,
                    mask=mask, compression=total)
