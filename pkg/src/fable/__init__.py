"""Fast approximate block-encoding circuits.

Compile a ``2**n x 2**n`` matrix into a circuit of H, RY, RZ, CNOT and SWAP
gates whose top-left block is the matrix divided by ``2**n``, compress it by
thresholding Walsh-Hadamard-domain angles, and check the result by
statevector simulation.

>>> import numpy as np
>>> from fable import encode, verify_encoding
>>> enc = encode(np.array([[0.1, 0.2], [0.3, -0.2]]))
>>> verify_encoding(enc.circuit, enc.matrix).passed
True
"""
from .angles import (AngleSet, circuit_angles, compute_angles, fwht,
                     gray_permute, oracle_angles)
from .assemble import Encoding, assemble_fable, encode
from .circuit import (Circuit, Gate, GateKind, GateStats, QubitLayout,
                      circuit_gate_stats, synthesize_ucr)
from .compress import (CompressionMask, CompressionReport, compress_ucr,
                       parity_cancel, threshold_mask)
from .errors import (FableError, InvalidMatrixError, MatrixMarketError,
                     QasmParseError, ResourceLimitError)
from .linalg import frobenius_norm, kron, spectral_norm, vectorize
from .models import (HeisenbergSpec, LaplacianSpec, heisenberg_matrix,
                     laplacian_1d, laplacian_2d, prescale)
from .simulate import (EncodingReport, StateVector, apply_gate, extract_block,
                       run, verify_encoding)

__all__ = [
    "AngleSet", "Circuit", "CompressionMask", "CompressionReport", "Encoding",
    "EncodingReport", "FableError", "Gate", "GateKind", "GateStats",
    "HeisenbergSpec", "InvalidMatrixError", "LaplacianSpec", "MatrixMarketError",
    "QasmParseError", "QubitLayout", "ResourceLimitError", "StateVector",
    "apply_gate", "assemble_fable", "circuit_angles", "circuit_gate_stats",
    "compress_ucr", "compute_angles", "encode", "extract_block", "frobenius_norm",
    "fwht", "gray_permute", "heisenberg_matrix", "kron", "laplacian_1d",
    "laplacian_2d", "oracle_angles", "parity_cancel", "prescale", "run",
    "spectral_norm", "synthesize_ucr", "threshold_mask", "vectorize",
    "verify_encoding",
]
