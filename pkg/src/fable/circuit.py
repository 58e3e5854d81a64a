"""Gate-level circuit representation and uniformly controlled rotations.

Qubit 0 is the top wire of a circuit diagram and the most significant bit of
a basis-state index.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .angles import gray_code


class GateKind(str, enum.Enum):
    H = "h"
    RY = "ry"
    RZ = "rz"
    CX = "cx"
    SWAP = "swap"


ROTATIONS = (GateKind.RY, GateKind.RZ)


@dataclass(frozen=True)
class Gate:
    """One primitive gate.

    Rotation angles are the full gate angle, i.e. ``RY(angle) = exp(-i angle Y / 2)``.
    """

    kind: GateKind
    target: int
    control: int | None = None
    second: int | None = None
    angle: float | None = None

    def __post_init__(self):
        if self.kind is GateKind.CX:
            if self.control is None or self.control == self.target:
                raise ValueError(f"invalid CNOT control {self.control} for target {self.target}")
        if self.kind is GateKind.SWAP:
            if self.second is None or self.second == self.target:
                raise ValueError(f"invalid SWAP pair ({self.target}, {self.second})")
        if self.kind in ROTATIONS and self.angle is None:
            raise ValueError("rotation gate needs an angle")

    @classmethod
    def h(cls, q: int) -> Gate:
        return cls(GateKind.H, q)

    @classmethod
    def ry(cls, angle: float, q: int) -> Gate:
        return cls(GateKind.RY, q, angle=float(angle))

    @classmethod
    def rz(cls, angle: float, q: int) -> Gate:
        return cls(GateKind.RZ, q, angle=float(angle))

    @classmethod
    def cx(cls, control: int, target: int) -> Gate:
        return cls(GateKind.CX, target, control=control)

    @classmethod
    def swap(cls, a: int, b: int) -> Gate:
        return cls(GateKind.SWAP, a, second=b)

    @property
    def qubits(self) -> tuple[int, ...]:
        if self.kind is GateKind.CX:
            return (self.control, self.target)
        if self.kind is GateKind.SWAP:
            return (self.target, self.second)
        return (self.target,)

    @property
    def is_rotation(self) -> bool:
        return self.kind in ROTATIONS


@dataclass(frozen=True)
class QubitLayout:
    """Register assignment: flag on top, then row register, then column register."""

    n: int

    @property
    def flag(self) -> int:
        return 0

    @property
    def row_register(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @property
    def column_register(self) -> tuple[int, ...]:
        return tuple(range(self.n + 1, 2 * self.n + 1))

    @property
    def num_qubits(self) -> int:
        return 2 * self.n + 1


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    gates: tuple[Gate, ...] = ()
    subnormalization: float = 1.0
    ancilla_count: int = 0

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        self.validate()

    def validate(self) -> None:
        """Check every gate's qubit indices against ``num_qubits``."""
        for pos, g in enumerate(self.gates):
            for q in g.qubits:
                if not 0 <= q < self.num_qubits:
                    raise ValueError(
                        f"gate {pos} ({g.kind.value}) touches qubit {q}, "
                        f"circuit has {self.num_qubits}"
                    )

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def count(self, kind: GateKind) -> int:
        return sum(1 for g in self.gates if g.kind is kind)


def _cnot_controls(k: int, controls: Sequence[int]) -> list[int]:
    g = gray_code(k)
    flips = g ^ np.roll(g, -1)
    # flips are single bits; bit 0 belongs to the last control
    return [controls[k - 1 - (int(f).bit_length() - 1)] for f in flips]


def synthesize_ucr(angles, kind: GateKind, target: int, controls: Sequence[int],
                   keep: Iterable[bool] | None = None) -> list[Gate]:
    """Uniformly controlled rotation as alternating rotations and CNOTs.

    Rotation ``l`` gets gate angle ``2 * angles[l]``; the CNOT after it is
    controlled on the qubit whose Gray-code bit changes between steps ``l`` and
    ``l + 1`` (cyclically). ``controls[-1]`` carries the least significant bit.

    Args:
        angles: ``2**k`` half-angles, already in circuit (transformed) form.
        kind: ``GateKind.RY`` or ``GateKind.RZ``.
        target: qubit that is rotated.
        controls: ``k`` control qubits, most significant first.
        keep: optional mask; rotations with a false entry are left out
            (their CNOTs stay).
    """
    angles = np.asarray(angles, dtype=np.float64).reshape(-1)
    k = len(controls)
    if angles.size != 2**k:
        raise ValueError(f"{angles.size} angles do not match {k} controls")
    if kind not in ROTATIONS:
        raise ValueError(f"{kind} is not a rotation")
    keep = np.ones(angles.size, dtype=bool) if keep is None else np.asarray(list(keep), dtype=bool)
    if keep.size != angles.size:
        raise ValueError("mask length does not match angle count")

    make = Gate.ry if kind is GateKind.RY else Gate.rz
    if k == 0:
        return [make(2 * angles[0], target)] if keep[0] else []

    gates: list[Gate] = []
    for ell, ctrl in enumerate(_cnot_controls(k, controls)):
        if keep[ell]:
            gates.append(make(2 * angles[ell], target))
        gates.append(Gate.cx(ctrl, target))
    return gates


@dataclass(frozen=True)
class GateStats:
    """Gate counts and fractions of the ``4**n`` per-layer maximum."""

    n: int
    counts: dict = field(default_factory=dict)

    def __getitem__(self, kind: GateKind) -> int:
        return self.counts.get(kind, 0)

    @property
    def max_per_layer(self) -> int:
        return 4**self.n if self.n > 0 else 1

    @property
    def cnot_fraction(self) -> float:
        return self[GateKind.CX] / self.max_per_layer

    @property
    def roty_fraction(self) -> float:
        return self[GateKind.RY] / self.max_per_layer

    @property
    def rotz_fraction(self) -> float:
        return self[GateKind.RZ] / self.max_per_layer

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        return {
            "counts": {k.value: self[k] for k in GateKind},
            "total": self.total,
            "cnot_fraction": self.cnot_fraction,
            "roty_fraction": self.roty_fraction,
            "rotz_fraction": self.rotz_fraction,
        }


def circuit_gate_stats(c: Circuit) -> GateStats:
    n = max((c.num_qubits - 1) // 2, 0)
    return GateStats(n=n, counts=dict(Counter(g.kind for g in c.gates)))
