"""Statevector engine: O(2^m * 2^N) index-based gate kernels.

At import time the compiled kernel module is selected if available,
otherwise the numpy fallback.  Set QSV_BACKEND=python to force the
fallback (used by the backend-comparison benchmark and tests).
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..circuit import Circuit, GateKind, GateOp
from ..errors import MemoryLimitError, TimeLimitError
from ..gates import op_matrix

if os.environ.get("QSV_BACKEND", "") == "python":
    from . import kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import kernels_py as kernels

__all__ = [
    "Precision",
    "ThreadMode",
    "MemoryBudget",
    "StateVector",
    "backend_name",
    "init_state",
    "apply_gate",
    "run_circuit",
    "expectation_z_all",
    "norm",
    "kernels",
]


def backend_name() -> str:
    return kernels.BACKEND


class Precision(Enum):
    SINGLE = "single"
    DOUBLE = "double"

    @property
    def dtype(self):
        return np.complex64 if self is Precision.SINGLE else np.complex128

    @property
    def bytes_per_amp(self) -> int:
        return 8 if self is Precision.SINGLE else 16

    @property
    def norm_tol(self) -> float:
        return 1e-6 if self is Precision.SINGLE else 1e-12


def _default_workers() -> int:
    env = os.environ.get("QSV_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class ThreadMode:
    workers: int = 1

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")

    @staticmethod
    def single() -> "ThreadMode":
        return ThreadMode(1)

    @staticmethod
    def multi(workers: int | None = None) -> "ThreadMode":
        return ThreadMode(workers or _default_workers())


@dataclass(frozen=True)
class MemoryBudget:
    max_bytes: int | None = None  # None = unlimited

    def check(self, n: int, precision: Precision) -> None:
        required = (1 << n) * precision.bytes_per_amp
        if self.max_bytes is not None and required > self.max_bytes:
            raise MemoryLimitError(n, required, self.max_bytes)


@dataclass
class StateVector:
    num_qubits: int
    precision: Precision
    amps: np.ndarray


def init_state(n: int, precision: Precision = Precision.DOUBLE,
               budget: MemoryBudget = MemoryBudget()) -> StateVector:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    budget.check(n, precision)
    amps = np.zeros(1 << n, dtype=precision.dtype)
    amps[0] = 1.0
    return StateVector(n, precision, amps)


# chunks below this pair count run inline: thread overhead dominates
_MIN_PARALLEL_PAIRS = 1 << 14


def _chunks(total: int, workers: int) -> list[tuple[int, int]]:
    if workers <= 1 or total < _MIN_PARALLEL_PAIRS:
        return [(0, total)]
    step = -(-total // workers)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _kernel_call(g: GateOp, vec: np.ndarray, n: int):
    """Bind a gate to its kernel; returns (fn, args, pair_count)."""
    k = g.kind
    if k.arity == 1:
        t = g.qubits[0]
        pairs = 1 << (n - 1)
        if k in (GateKind.Z, GateKind.RZ, GateKind.P):
            u = op_matrix(g)
            return kernels.apply1q_diag, (vec, t, u[0, 0], u[1, 1]), pairs
        u = np.ascontiguousarray(op_matrix(g))
        return kernels.apply1q, (vec, t, u), pairs
    ta, tb = g.qubits
    quads = 1 << (n - 2)
    if k is GateKind.CX:
        return kernels.apply2q_cx, (vec, ta, tb), quads
    if k in (GateKind.CZ, GateKind.CP):
        u = op_matrix(g)
        return kernels.apply2q_cphase, (vec, ta, tb, u[3, 3]), quads
    if k is GateKind.SWAP:
        return kernels.apply2q_swap, (vec, ta, tb), quads
    if k is GateKind.FSIM:
        theta, phi = g.params
        return (kernels.apply2q_fsim,
                (vec, ta, tb, np.cos(theta), np.sin(theta), np.exp(-1j * phi)),
                quads)
    u = np.ascontiguousarray(op_matrix(g))
    return kernels.apply2q, (vec, ta, tb, u), quads


def apply_gate(s: StateVector, g: GateOp, mode: ThreadMode = ThreadMode(),
               pool: ThreadPoolExecutor | None = None) -> None:
    fn, args, total = _kernel_call(g, s.amps, s.num_qubits)
    parts = _chunks(total, mode.workers)
    if len(parts) == 1 or pool is None:
        for lo, hi in parts:
            fn(*args, lo, hi)
    else:
        futs = [pool.submit(fn, *args, lo, hi) for lo, hi in parts]
        for f in futs:
            f.result()


def run_circuit(s: StateVector, c: Circuit, mode: ThreadMode = ThreadMode(),
                deadline_s: float | None = None) -> None:
    """Apply all ops in order.  The deadline is checked between gates only;
    on expiry TimeLimitError carries the count of completed gates.
    """
    if s.num_qubits != c.num_qubits:
        raise ValueError(
            f"state has {s.num_qubits} qubits, circuit has {c.num_qubits}")
    t0 = time.monotonic()
    pool = ThreadPoolExecutor(mode.workers) if mode.workers > 1 else None
    try:
        for i, g in enumerate(c.ops):
            if deadline_s is not None and time.monotonic() - t0 >= deadline_s:
                raise TimeLimitError(s.num_qubits, i)
            apply_gate(s, g, mode, pool)
    finally:
        if pool is not None:
            pool.shutdown(wait=False)


def _probs(s: StateVector) -> np.ndarray:
    re = s.amps.real.astype(np.float64, copy=False)
    im = s.amps.imag.astype(np.float64, copy=False)
    return re * re + im * im


def expectation_z_all(s: StateVector) -> np.ndarray:
    """Per-site <sigma_z>, accumulated in double with numpy's pairwise
    (tree) summation; independent of thread mode by construction.
    """
    p = _probs(s)
    z = np.empty(s.num_qubits)
    for i in range(s.num_qubits):
        v = p.reshape(-1, 2, 1 << i)
        z[i] = v[:, 0, :].sum() - v[:, 1, :].sum()
    return z


def norm(s: StateVector) -> float:
    return float(np.sqrt(_probs(s).sum()))
