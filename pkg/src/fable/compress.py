"""Circuit compression: drop small rotations, then cancel CNOTs by parity."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .angles import AngleSet
from .circuit import Gate, GateKind, synthesize_ucr


@dataclass(frozen=True)
class CompressionMask:
    n: int
    keep_theta: np.ndarray
    keep_phi: np.ndarray
    threshold: float


@dataclass(frozen=True)
class CompressionReport:
    """Gate bookkeeping for one or more compressed UCR layers."""

    rotations_kept: int
    rotations_removed: int
    cnots_kept: int
    cnots_removed: int
    threshold: float
    layer_size: int
    layers: int = 1

    @property
    def rotation_fraction(self) -> float:
        return self.rotations_kept / (self.layer_size * self.layers)

    @property
    def cnot_fraction(self) -> float:
        return self.cnots_kept / (self.layer_size * self.layers)

    def __add__(self, other: CompressionReport) -> CompressionReport:
        if self.layer_size != other.layer_size:
            raise ValueError("cannot combine reports of different layer sizes")
        return CompressionReport(
            rotations_kept=self.rotations_kept + other.rotations_kept,
            rotations_removed=self.rotations_removed + other.rotations_removed,
            cnots_kept=self.cnots_kept + other.cnots_kept,
            cnots_removed=self.cnots_removed + other.cnots_removed,
            threshold=self.threshold,
            layer_size=self.layer_size,
            layers=self.layers + other.layers,
        )

    def to_dict(self) -> dict:
        return {
            "rotations_kept": self.rotations_kept,
            "rotations_removed": self.rotations_removed,
            "cnots_kept": self.cnots_kept,
            "cnots_removed": self.cnots_removed,
            "rotation_fraction": self.rotation_fraction,
            "cnot_fraction": self.cnot_fraction,
            "threshold": self.threshold,
            "layer_size": self.layer_size,
            "layers": self.layers,
        }


def threshold_mask(angles: AngleSet, delta_c: float) -> CompressionMask:
    """Keep circuit angles whose magnitude strictly exceeds ``delta_c``."""
    if delta_c < 0:
        raise ValueError(f"compression threshold must be >= 0, got {delta_c}")
    if angles.theta_circuit is None:
        raise ValueError("circuit angles have not been computed")
    return CompressionMask(
        n=angles.n,
        keep_theta=np.abs(angles.theta_circuit) > delta_c,
        keep_phi=np.abs(angles.phi_circuit) > delta_c,
        threshold=float(delta_c),
    )


def _flush(run: list[Gate]) -> list[Gate]:
    target = run[0].target
    parity = Counter(g.control for g in run)
    return [Gate.cx(c, target) for c in sorted(parity) if parity[c] % 2]


def parity_cancel(gates: Sequence[Gate]) -> list[Gate]:
    """Collapse each run of consecutive same-target CNOTs to its odd-parity controls.

    CNOTs sharing a target commute, so a run is equivalent to one CNOT per
    control that appears an odd number of times. Survivors are emitted in
    ascending control order.
    """
    out: list[Gate] = []
    run: list[Gate] = []
    for g in gates:
        if g.kind is GateKind.CX and (not run or run[0].target == g.target):
            run.append(g)
            continue
        if run:
            out.extend(_flush(run))
            run = []
        if g.kind is GateKind.CX:
            run.append(g)
        else:
            out.append(g)
    if run:
        out.extend(_flush(run))
    return out


def compress_ucr(angles, keep, kind: GateKind, target: int, controls: Sequence[int],
                 threshold: float = 0.0) -> tuple[list[Gate], CompressionReport]:
    """Build a UCR with masked rotations removed and CNOT runs parity-reduced."""
    angles = np.asarray(angles, dtype=np.float64).reshape(-1)
    keep = np.asarray(keep, dtype=bool).reshape(-1)
    if keep.size != angles.size:
        raise ValueError("mask length does not match angle count")
    gates = parity_cancel(synthesize_ucr(angles, kind, target, controls, keep=keep))

    size = angles.size
    full_cnots = size if len(controls) else 0
    rotations = sum(1 for g in gates if g.is_rotation)
    cnots = sum(1 for g in gates if g.kind is GateKind.CX)
    report = CompressionReport(
        rotations_kept=rotations,
        rotations_removed=size - rotations,
        cnots_kept=cnots,
        cnots_removed=full_cnots - cnots,
        threshold=float(threshold),
        layer_size=size,
    )
    return gates, report
