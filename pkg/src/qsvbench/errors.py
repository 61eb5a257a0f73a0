"""Exception taxonomy shared across the package.

Resource failures (MemoryLimitError, TimeLimitError, DesignLimitError) are
typed outcomes: the bench layer converts them into record outcome classes
instead of propagating them as crashes.
"""
from __future__ import annotations


class QsvError(Exception):
    """Base class for all package errors."""


# --- circuit validation -----------------------------------------------------

class CircuitError(QsvError):
    def __init__(self, message: str, op_index: int | None = None):
        super().__init__(message)
        self.op_index = op_index


class QubitOutOfRange(CircuitError):
    pass


class DuplicateQubit(CircuitError):
    pass


class ParamArityMismatch(CircuitError):
    pass


# --- qasm -------------------------------------------------------------------

class QasmError(QsvError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"{message} (line {line}, col {col})")
        self.line = line
        self.col = col


class QasmSyntaxError(QasmError):
    pass


class UnsupportedStatement(QasmError):
    pass


class UnknownGate(QasmError):
    pass


# --- task generation --------------------------------------------------------

class InvalidParams(QsvError):
    pass


class GridTooSmall(QsvError):
    pass


# --- engine resource limits -------------------------------------------------

class ResourceLimit(QsvError):
    """Base for typed resource-failure outcomes (CLI exit code 2)."""


class MemoryLimitError(ResourceLimit):
    def __init__(self, num_qubits: int, required_bytes: int, max_bytes: int):
        super().__init__(
            f"statevector for N={num_qubits} needs {required_bytes} bytes, "
            f"budget is {max_bytes}"
        )
        self.num_qubits = num_qubits
        self.required_bytes = required_bytes
        self.max_bytes = max_bytes


class TimeLimitError(ResourceLimit):
    def __init__(self, num_qubits: int, gate_index: int):
        super().__init__(
            f"deadline exceeded at N={num_qubits} after gate {gate_index}"
        )
        self.num_qubits = num_qubits
        self.gate_index = gate_index


class DesignLimitError(ResourceLimit):
    pass


# --- validation oracles -----------------------------------------------------

class TooLargeForOracle(QsvError):
    pass


class LengthMismatch(QsvError):
    pass


class DimensionMismatch(QsvError):
    pass


# --- analysis ---------------------------------------------------------------

class InsufficientPoints(QsvError):
    pass


class NoOverlap(QsvError):
    pass
