"""Exception hierarchy shared by every stage of the pipeline."""


class FableError(Exception):
    """Base class for all errors raised by this package."""


class InvalidMatrixError(FableError, ValueError):
    """The matrix cannot be used as an encoding target as given."""


class ResourceLimitError(FableError):
    """A dimension or qubit count exceeds the configured cap."""


class MatrixMarketError(FableError, ValueError):
    """Malformed Matrix Market input.

    ``code`` distinguishes the failure: ``"header"``, ``"bounds"``,
    ``"dimension"`` or ``"body"``.
    """

    def __init__(self, message: str, code: str):
        super().__init__(message)
        self.code = code


class QasmParseError(FableError, ValueError):
    """The OpenQASM text uses constructs outside the emitted subset."""
