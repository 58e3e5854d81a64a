"""Matrix Market input; OpenQASM 2.0, CSV and JSON output.

Every writer is byte-deterministic for a fixed input.
"""
from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .circuit import Circuit, Gate, GateKind
from .errors import InvalidMatrixError, MatrixMarketError, QasmParseError
from .linalg import log2_dim

REPORT_SCHEMA = 1

_MM_FORMATS = ("array", "coordinate")
_MM_FIELDS = ("real", "complex", "integer")
_MM_SYMMETRIES = ("general", "symmetric", "hermitian")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


# -- Matrix Market ----------------------------------------------------------

def _parse_header(line: str) -> tuple[str, str, str]:
    parts = line.strip().split()
    if len(parts) != 5 or parts[0].lower() != "%%matrixmarket" or parts[1].lower() != "matrix":
        raise MatrixMarketError(f"malformed Matrix Market header: {line.strip()!r}", "header")
    fmt, fld, sym = (p.lower() for p in parts[2:])
    if fmt not in _MM_FORMATS or fld not in _MM_FIELDS or sym not in _MM_SYMMETRIES:
        raise MatrixMarketError(f"unsupported Matrix Market type: {fmt} {fld} {sym}", "header")
    if sym == "hermitian" and fld != "complex":
        raise MatrixMarketError("hermitian storage requires the complex field", "header")
    return fmt, fld, sym


def _value(tokens: Sequence[str], fld: str) -> complex:
    try:
        if fld == "complex":
            return complex(float(tokens[0]), float(tokens[1]))
        return complex(float(tokens[0]))
    except (ValueError, IndexError):
        raise MatrixMarketError(f"bad entry value {' '.join(tokens)!r}", "body") from None


def read_matrix_market(text: str | bytes) -> np.ndarray:
    """Parse a Matrix Market document into a dense complex matrix.

    Both ``array`` (column-major, lower triangle only for symmetric storage)
    and ``coordinate`` (1-indexed) layouts are accepted. The result must be
    square with a power-of-two dimension.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = text.splitlines()
    if not lines:
        raise MatrixMarketError("empty input", "header")
    fmt, fld, sym = _parse_header(lines[0])
    body = [ln.split() for ln in lines[1:] if ln.strip() and not ln.lstrip().startswith("%")]
    if not body:
        raise MatrixMarketError("missing size line", "body")

    try:
        size = [int(t) for t in body[0]]
    except ValueError:
        raise MatrixMarketError(f"bad size line {' '.join(body[0])!r}", "body") from None
    width = 2 if fld == "complex" else 1
    if fmt == "array":
        if len(size) != 2:
            raise MatrixMarketError("array size line needs 'rows cols'", "body")
        rows, cols = size
    else:
        if len(size) != 3:
            raise MatrixMarketError("coordinate size line needs 'rows cols nnz'", "body")
        rows, cols, nnz = size
    if rows != cols:
        raise MatrixMarketError(f"matrix is {rows}x{cols}, not square", "dimension")
    try:
        log2_dim(rows)
    except InvalidMatrixError:
        raise MatrixMarketError(f"dimension {rows} is not a power of two", "dimension") from None

    a = np.zeros((rows, cols), dtype=np.complex128)
    entries = body[1:]
    if fmt == "array":
        if sym == "general":
            positions = [(i, j) for j in range(cols) for i in range(rows)]
        else:
            positions = [(i, j) for j in range(cols) for i in range(j, rows)]
        if len(entries) != len(positions):
            raise MatrixMarketError(
                f"expected {len(positions)} array entries, found {len(entries)}", "body")
        triples = [(i, j, _value(tok, fld)) for (i, j), tok in zip(positions, entries)]
    else:
        if len(entries) != nnz:
            raise MatrixMarketError(f"expected {nnz} coordinate entries, found {len(entries)}", "body")
        triples = []
        for tok in entries:
            if len(tok) != 2 + width:
                raise MatrixMarketError(f"bad coordinate entry {' '.join(tok)!r}", "body")
            try:
                i, j = int(tok[0]) - 1, int(tok[1]) - 1
            except ValueError:
                raise MatrixMarketError(f"bad coordinate indices {' '.join(tok)!r}", "body") from None
            if not (0 <= i < rows and 0 <= j < cols):
                raise MatrixMarketError(f"entry ({i + 1}, {j + 1}) outside {rows}x{cols}", "bounds")
            triples.append((i, j, _value(tok[2:], fld)))

    for i, j, v in triples:
        a[i, j] = v
        if i != j and sym == "symmetric":
            a[j, i] = v
        elif i != j and sym == "hermitian":
            a[j, i] = v.conjugate()
    return a


def write_matrix_market(a) -> str:
    """Dense ``array general`` document; ``complex`` only if any entry is."""
    a = np.asarray(a, dtype=np.complex128)
    is_complex = bool(np.any(a.imag != 0))
    out = [f"%%MatrixMarket matrix array {'complex' if is_complex else 'real'} general",
           f"{a.shape[0]} {a.shape[1]}"]
    for v in a.T.reshape(-1):
        if is_complex:
            out.append(f"{_fmt(v.real)} {_fmt(v.imag)}")
        else:
            out.append(_fmt(v.real))
    return "\n".join(out) + "\n"


# -- OpenQASM 2.0 -----------------------------------------------------------

def write_qasm(c: Circuit) -> str:
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{c.num_qubits}];"]
    for g in c.gates:
        if g.kind is GateKind.H:
            lines.append(f"h q[{g.target}];")
        elif g.kind in (GateKind.RY, GateKind.RZ):
            lines.append(f"{g.kind.value}({_fmt(g.angle)}) q[{g.target}];")
        elif g.kind is GateKind.CX:
            lines.append(f"cx q[{g.control}],q[{g.target}];")
        else:
            lines.append(f"swap q[{g.target}],q[{g.second}];")
    return "\n".join(lines) + "\n"


_QREG = re.compile(r"^qreg\s+q\[(\d+)\];$")
_GATE = re.compile(r"^(h|ry|rz|cx|swap)(?:\(([^)]*)\))?\s+q\[(\d+)\](?:\s*,\s*q\[(\d+)\])?;$")


def read_qasm(text: str, subnormalization: float = 1.0, ancilla_count: int = 0) -> Circuit:
    """Parse the subset of OpenQASM 2.0 produced by :func:`write_qasm`."""
    num_qubits = None
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("//", 1)[0].strip()
        if not line or line.startswith(("OPENQASM", "include")):
            continue
        m = _QREG.match(line)
        if m:
            if num_qubits is not None:
                raise QasmParseError(f"line {lineno}: only one qreg is supported")
            num_qubits = int(m.group(1))
            continue
        m = _GATE.match(line)
        if not m:
            raise QasmParseError(f"line {lineno}: unsupported statement {line!r}")
        name, param, q0, q1 = m.groups()
        q0 = int(q0)
        two = name in ("cx", "swap")
        if two != (q1 is not None) or (param is not None) != (name in ("ry", "rz")):
            raise QasmParseError(f"line {lineno}: wrong operands for {name}")
        if name == "h":
            gates.append(Gate.h(q0))
        elif name in ("ry", "rz"):
            try:
                angle = float(param)
            except ValueError:
                raise QasmParseError(f"line {lineno}: angle must be a decimal literal") from None
            gates.append(Gate.ry(angle, q0) if name == "ry" else Gate.rz(angle, q0))
        else:
            try:
                gates.append(Gate.cx(q0, int(q1)) if name == "cx" else Gate.swap(q0, int(q1)))
            except ValueError as exc:
                raise QasmParseError(f"line {lineno}: {exc}") from None
    if num_qubits is None:
        raise QasmParseError("missing qreg declaration")
    try:
        return Circuit(num_qubits, gates, subnormalization=subnormalization,
                       ancilla_count=ancilla_count)
    except ValueError as exc:
        raise QasmParseError(str(exc)) from None


# -- CSV ------------------------------------------------------------------------

BENCH_COLUMNS = ("model", "n", "cnot", "roty", "rotz", "cnot_fraction", "roty_fraction")


@dataclass(frozen=True)
class BenchRow:
    model: str
    n: int
    cnot: int
    roty: int
    rotz: int
    cnot_fraction: float
    roty_fraction: float


def write_bench_csv(rows: Iterable[BenchRow | Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for row in rows:
        model, n, cnot, roty, rotz, fc, fr = (
            row if not isinstance(row, BenchRow) else
            (row.model, row.n, row.cnot, row.roty, row.rotz, row.cnot_fraction, row.roty_fraction))
        writer.writerow([model, n, cnot, roty, rotz, f"{fc:.6f}", f"{fr:.6f}"])
    return buf.getvalue()


# -- JSON report ----------------------------------------------------------------

@dataclass
class ReportDocument:
    """Everything the ``encode``/``verify`` commands record about one run."""

    input_sha256: str
    n: int
    delta_c: float
    scale: float
    alpha: float
    ancillas: int
    is_complex: bool
    gates: dict
    compression: dict
    error_bound: float
    verification: dict | None = None
    timing_ms: float | None = None
    notes: list = field(default_factory=list)
    schema: int = REPORT_SCHEMA

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        data = json.loads(text)
        if data.get("schema") != REPORT_SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(**data)
