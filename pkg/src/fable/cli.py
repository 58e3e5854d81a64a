"""Command-line driver: ``fable encode | verify | bench | model``."""
from __future__ import annotations

import argparse
import hashlib
import logging
import sys
import time
from pathlib import Path

import numpy as np

from .assemble import Encoding, encode
from .circuit import GateKind, circuit_gate_stats
from .errors import (InvalidMatrixError, MatrixMarketError, QasmParseError,
                     ResourceLimitError)
from .formats import (BenchRow, ReportDocument, read_matrix_market, read_qasm,
                      write_bench_csv, write_matrix_market, write_qasm)
from .models import (HeisenbergSpec, heisenberg_matrix, laplacian_1d,
                     laplacian_2d)
from .simulate import MAX_SIM_QUBITS, verify_encoding

log = logging.getLogger("fable")

EXIT_OK = 0
EXIT_IO = 2
EXIT_INVALID = 3
EXIT_RESOURCE = 4
EXIT_BOUND = 5
EXIT_MODEL = 6

BENCH_DELTA_C = 1e-15
BENCH_VERIFY_MAX_N = 5
DEFAULT_SIM_QUBITS = 13
BENCH_MODELS = ("heisenberg-xxx", "laplacian-1d", "laplacian-2d")
MODEL_NAMES = ("heisenberg", "laplacian-1d", "laplacian-2d", "random")


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_bytes(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise _Exit(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from None


def _write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise _Exit(EXIT_IO, f"cannot write {path}: {exc.strerror or exc}") from None


def _check_output_dir(*paths: str | None) -> None:
    for p in paths:
        if p is not None and not Path(p).resolve().parent.is_dir():
            raise _Exit(EXIT_IO, f"output directory for {p} does not exist")


def _load_encoding(path: str, delta_c: float, auto_scale: bool) -> tuple[bytes, Encoding]:
    raw = _read_bytes(path)
    a = read_matrix_market(raw)
    return raw, encode(a, delta_c=delta_c, auto_scale=auto_scale)


def _report(raw: bytes, enc: Encoding, delta_c: float) -> ReportDocument:
    stats = circuit_gate_stats(enc.circuit)
    notes = []
    if enc.scale != 1.0:
        notes.append(f"input divided by {enc.scale!r} so that max |a_ij| = 1")
    if not np.any(enc.matrix):
        notes.append("zero matrix: the encoded block vanishes, so post-selection never succeeds")
    return ReportDocument(
        input_sha256=hashlib.sha256(raw).hexdigest(),
        n=enc.n,
        delta_c=delta_c,
        scale=enc.scale,
        alpha=enc.alpha,
        ancillas=enc.circuit.ancilla_count,
        is_complex=enc.angles.is_complex,
        gates=stats.to_dict(),
        compression=enc.compression.to_dict(),
        error_bound=float(2**enc.n) ** 3 * delta_c,
        notes=notes,
    )


def _print_summary(enc: Encoding, delta_c: float) -> None:
    stats = circuit_gate_stats(enc.circuit)
    print(f"n = {enc.n} ({2**enc.n}x{2**enc.n}), qubits = {enc.circuit.num_qubits}, "
          f"{'complex' if enc.angles.is_complex else 'real'} data")
    print(f"scale = {enc.scale:.17g}, alpha = {enc.alpha:.17g}, delta_c = {delta_c:g}")
    print(f"CNOT {stats[GateKind.CX]} ({stats.cnot_fraction:.2%}), "
          f"RY {stats[GateKind.RY]} ({stats.roty_fraction:.2%}), "
          f"RZ {stats[GateKind.RZ]} ({stats.rotz_fraction:.2%}), total {stats.total}")


def cmd_encode(args) -> int:
    _check_output_dir(args.qasm, args.json)
    start = time.perf_counter()
    raw, enc = _load_encoding(args.input, args.delta_c, args.auto_scale)
    elapsed = (time.perf_counter() - start) * 1e3
    _print_summary(enc, args.delta_c)
    doc = _report(raw, enc, args.delta_c)
    if args.timing:
        doc.timing_ms = round(elapsed, 3)
    for note in doc.notes:
        print(f"note: {note}")
    if args.qasm:
        _write_text(args.qasm, write_qasm(enc.circuit))
    if args.json:
        _write_text(args.json, doc.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_output_dir(args.json)
    raw, enc = _load_encoding(args.input, args.delta_c, args.auto_scale)
    circuit = enc.circuit
    if args.circuit:
        text = _read_bytes(args.circuit).decode("utf-8")
        circuit = read_qasm(text, subnormalization=float(2**enc.n), ancilla_count=enc.n + 1)
        if circuit.num_qubits != enc.circuit.num_qubits:
            raise _Exit(EXIT_INVALID, f"circuit has {circuit.num_qubits} qubits, "
                                      f"expected {enc.circuit.num_qubits}")
    if circuit.num_qubits > args.max_qubits:
        raise _Exit(EXIT_RESOURCE, f"{circuit.num_qubits} qubits exceeds the simulation cap "
                                   f"{args.max_qubits} (raise with --max-qubits, up to {MAX_SIM_QUBITS})")
    rep = verify_encoding(circuit, enc.matrix, args.delta_c, max_qubits=args.max_qubits)
    _print_summary(enc, args.delta_c)
    print(f"epsilon_spectral  = {rep.epsilon_spectral:.6e}")
    print(f"epsilon_frobenius = {rep.epsilon_frobenius:.6e}")
    print(f"max_entry_error   = {rep.max_entry_error:.6e}")
    if args.delta_c > 0:
        print(f"bound N^3 delta_c = {rep.error_bound:.6e}")
    else:
        print("bound (exact)     = 1e-10")
    print("PASS" if rep.passed else "FAIL")
    if args.json:
        doc = _report(raw, enc, args.delta_c)
        doc.verification = rep.to_dict()
        _write_text(args.json, doc.to_json())
    return EXIT_OK if rep.passed else EXIT_BOUND


def bench_matrices(model: str, n: int, periodic: bool = False):
    """Yield ``(label, matrix)`` benchmark points of ``model`` on ``n`` qubits."""
    suffix = "-periodic" if periodic else ""
    if model == "heisenberg-xxx":
        yield model, heisenberg_matrix(HeisenbergSpec(n, 1.0, 1.0, 1.0, 0.0))
    elif model == "laplacian-1d":
        yield model + suffix, laplacian_1d(2**n, periodic)
    elif model == "laplacian-2d":
        for bits_x in range(1, n):
            px, py = 2**bits_x, 2 ** (n - bits_x)
            yield f"{model}-{px}x{py}{suffix}", laplacian_2d(px, py, periodic)
    else:
        raise KeyError(model)


def cmd_bench(args) -> int:
    if args.model not in BENCH_MODELS:
        raise _Exit(EXIT_MODEL, f"unknown model {args.model!r}; choose from {', '.join(BENCH_MODELS)}")
    if args.min_n < 2 or args.max_n < args.min_n:
        raise _Exit(EXIT_MODEL, f"invalid size range {args.min_n}..{args.max_n}")
    _check_output_dir(args.csv)
    rows = []
    failures = 0
    for n in range(args.min_n, args.max_n + 1):
        for label, a in bench_matrices(args.model, n, args.periodic):
            enc = encode(a, delta_c=args.delta_c)
            stats = circuit_gate_stats(enc.circuit)
            rows.append(BenchRow(label, n, stats[GateKind.CX], stats[GateKind.RY],
                                 stats[GateKind.RZ], stats.cnot_fraction, stats.roty_fraction))
            line = (f"{label:<28} n={n}  CNOT {stats[GateKind.CX]:>7} ({stats.cnot_fraction:7.2%})"
                    f"  RY {stats[GateKind.RY]:>7} ({stats.roty_fraction:7.2%})")
            if args.verify and n <= BENCH_VERIFY_MAX_N:
                rep = verify_encoding(enc.circuit, enc.matrix, args.delta_c)
                failures += not rep.passed
                line += f"  eps {rep.epsilon_spectral:.2e} {'PASS' if rep.passed else 'FAIL'}"
            print(line)
    rows.sort(key=lambda r: (r.n, r.model))
    if args.csv:
        _write_text(args.csv, write_bench_csv(rows))
    return EXIT_BOUND if failures else EXIT_OK


def cmd_model(args) -> int:
    _check_output_dir(args.output)
    try:
        if args.name == "heisenberg":
            a = heisenberg_matrix(HeisenbergSpec(args.n, args.jx, args.jy, args.jz, args.hz))
        elif args.name == "laplacian-1d":
            a = laplacian_1d(args.points, args.periodic)
        elif args.name == "laplacian-2d":
            a = laplacian_2d(args.px, args.py, args.periodic)
        elif args.name == "random":
            rng = np.random.default_rng(args.seed)
            dim = 2**args.n
            a = rng.uniform(-1, 1, (dim, dim))
            if args.complex:
                a = a * np.exp(2j * np.pi * rng.uniform(size=(dim, dim)))
        else:
            raise _Exit(EXIT_MODEL, f"unknown model {args.name!r}; choose from {', '.join(MODEL_NAMES)}")
    except (ValueError, TypeError) as exc:
        raise _Exit(EXIT_MODEL, f"bad model parameters: {exc}") from None
    text = write_matrix_market(a)
    if args.output:
        _write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _nonnegative(value: str) -> float:
    x = float(value)
    if not x >= 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return x


def _sim_cap(value: str) -> int:
    x = int(value)
    if not 1 <= x <= MAX_SIM_QUBITS:
        raise argparse.ArgumentTypeError(f"must be between 1 and {MAX_SIM_QUBITS}")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fable",
        description="Compile matrices into block-encoding circuits, compress and verify them.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_args(p):
        p.add_argument("--input", required=True, help="Matrix Market file")
        p.add_argument("--delta-c", type=_nonnegative, default=0.0,
                       help="compression threshold on circuit angles (default 0: exact)")
        p.add_argument("--no-scale", dest="auto_scale", action="store_false",
                       help="reject entries with |a_ij| > 1 instead of rescaling")
        p.add_argument("--json", help="write a JSON report here")

    p = sub.add_parser("encode", help="compile a matrix to an OpenQASM circuit")
    matrix_args(p)
    p.add_argument("--qasm", help="write the circuit as OpenQASM 2.0 here")
    p.add_argument("--timing", action="store_true",
                   help="record wall time in the report (makes it non-reproducible)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("verify", help="simulate the circuit and check the encoding error")
    matrix_args(p)
    p.add_argument("--circuit", help="replay this OpenQASM file instead of recompiling")
    p.add_argument("--max-qubits", type=_sim_cap, default=DEFAULT_SIM_QUBITS,
                   help=f"simulation cap (default {DEFAULT_SIM_QUBITS}, max {MAX_SIM_QUBITS})")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="gate counts for the benchmark operators")
    p.add_argument("--model", required=True, help=", ".join(BENCH_MODELS))
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--periodic", action="store_true")
    p.add_argument("--delta-c", type=_nonnegative, default=BENCH_DELTA_C)
    p.add_argument("--csv", help="write the table here")
    p.add_argument("--verify", action="store_true",
                   help=f"also simulate points with n <= {BENCH_VERIFY_MAX_N}")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("model", help="write a benchmark matrix as Matrix Market")
    p.add_argument("name", help=", ".join(MODEL_NAMES))
    p.add_argument("--n", type=int, default=2, help="qubits (heisenberg, random)")
    p.add_argument("--jx", type=float, default=1.0)
    p.add_argument("--jy", type=float, default=1.0)
    p.add_argument("--jz", type=float, default=1.0)
    p.add_argument("--hz", type=float, default=0.0)
    p.add_argument("--points", type=int, default=4, help="grid points (laplacian-1d)")
    p.add_argument("--px", type=int, default=2)
    p.add_argument("--py", type=int, default=2)
    p.add_argument("--periodic", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--complex", action="store_true", help="random complex entries")
    p.add_argument("--output", help="destination (default: stdout)")
    p.set_defaults(func=cmd_model)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"fable: {exc}", file=sys.stderr)
        return exc.code
    except (MatrixMarketError, QasmParseError, InvalidMatrixError) as exc:
        print(f"fable: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitError as exc:
        print(f"fable: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
