"""Gate-level circuit representation.

Convention: qubit 0 is the least-significant bit of the basis-state index
(little-endian).  For two-qubit gates the 4x4 matrix index is
``b_first + 2 * b_second`` where ``first``/``second`` are the listed qubit
order of the op.  Global phase is not part of circuit semantics.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import DuplicateQubit, ParamArityMismatch, QubitOutOfRange

__all__ = [
    "GateKind",
    "GateOp",
    "Circuit",
    "GateStats",
    "validate_circuit",
    "gate_stats",
]


class GateKind(Enum):
    H = "h"
    X = "x"
    Y = "y"
    Z = "z"
    SX = "sx"     # sqrt(X)
    SY = "sy"     # sqrt(Y)
    SW = "sw"     # sqrt((X+Y)/sqrt(2))
    RX = "rx"
    RY = "ry"
    RZ = "rz"
    P = "p"       # phase gate diag(1, e^{i*lambda})
    CX = "cx"
    CZ = "cz"
    CP = "cp"
    SWAP = "swap"
    FSIM = "fsim"

    @property
    def arity(self) -> int:
        return 2 if self in _TWO_QUBIT else 1

    @property
    def num_params(self) -> int:
        if self is GateKind.FSIM:
            return 2
        if self in (GateKind.RX, GateKind.RY, GateKind.RZ, GateKind.P, GateKind.CP):
            return 1
        return 0


_TWO_QUBIT = frozenset(
    {GateKind.CX, GateKind.CZ, GateKind.CP, GateKind.SWAP, GateKind.FSIM}
)


@dataclass(frozen=True)
class GateOp:
    kind: GateKind
    params: tuple[float, ...] = ()
    qubits: tuple[int, ...] = ()

    def __repr__(self) -> str:
        p = f"({', '.join(f'{x:g}' for x in self.params)})" if self.params else ""
        return f"{self.kind.value}{p} {list(self.qubits)}"


def op(kind: GateKind, *qubits: int, params: tuple[float, ...] = ()) -> GateOp:
    """Shorthand constructor used by the generators."""
    return GateOp(kind, tuple(float(p) for p in params), tuple(qubits))


@dataclass
class Circuit:
    num_qubits: int
    ops: list[GateOp] = field(default_factory=list)
    label: str = ""

    def append(self, kind: GateKind, *qubits: int,
               params: tuple[float, ...] = ()) -> None:
        self.ops.append(op(kind, *qubits, params=params))

    def __len__(self) -> int:
        return len(self.ops)


@dataclass(frozen=True)
class GateStats:
    sqg_count: int
    tqg_count: int

    @property
    def total(self) -> int:
        return self.sqg_count + self.tqg_count


def validate_circuit(c: Circuit) -> None:
    """Raise the first structural violation, or return None if well formed."""
    for i, g in enumerate(c.ops):
        if len(g.qubits) != g.kind.arity:
            raise ParamArityMismatch(
                f"op {i}: {g.kind.value} takes {g.kind.arity} qubit(s), "
                f"got {len(g.qubits)}", op_index=i)
        if len(g.params) != g.kind.num_params:
            raise ParamArityMismatch(
                f"op {i}: {g.kind.value} takes {g.kind.num_params} param(s), "
                f"got {len(g.params)}", op_index=i)
        if len(set(g.qubits)) != len(g.qubits):
            raise DuplicateQubit(f"op {i}: repeated qubit in {g}", op_index=i)
        for q in g.qubits:
            if not 0 <= q < c.num_qubits:
                raise QubitOutOfRange(
                    f"op {i}: qubit {q} out of range for N={c.num_qubits}",
                    op_index=i)


def gate_stats(c: Circuit) -> GateStats:
    sqg = sum(1 for g in c.ops if g.kind.arity == 1)
    return GateStats(sqg_count=sqg, tqg_count=len(c.ops) - sqg)
