"""Brute-force oracles and cross-configuration validation metrics.

The dense oracle composes full 2^N x 2^N per-gate embeddings with tensor
contractions (numpy reshape/tensordot), a route independent of the
engine's bit-indexing kernels.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, GateOp, validate_circuit
from .errors import DimensionMismatch, LengthMismatch, TooLargeForOracle
from .gates import op_matrix

__all__ = [
    "ValidationReport",
    "dense_unitary",
    "oracle_state",
    "qft_sigma_z_metric",
    "delta_expectation",
    "compare_states",
    "compare_vectors",
]

_ORACLE_MAX_QUBITS = 12
_LOG_CLAMP = 1e-300


@dataclass(frozen=True)
class ValidationReport:
    metric: str
    value: float
    threshold: float
    config_a: str = ""
    config_b: str = ""

    @property
    def passed(self) -> bool:
        return self.value <= self.threshold


def _apply_op_tensor(psi: np.ndarray, g: GateOp, n: int) -> np.ndarray:
    """Contract a gate into a state tensor of shape (2,)*n (+ extra axes).

    Tensor axis k holds qubit n-1-k (numpy reshape puts the most
    significant bit first; qubit 0 is the least significant).
    """
    u = op_matrix(g)
    m = len(g.qubits)
    axes = [n - 1 - q for q in g.qubits]
    # op_matrix index convention: j = b_first + 2*b_second, so the first
    # listed qubit is the *low* bit of the 4x4 index -> last tensor axis
    ut = u.reshape((2,) * (2 * m))
    out = np.tensordot(ut, psi, axes=(list(range(m, 2 * m))[::-1], axes))
    # tensordot puts the gate's output axes first, in reversed qubit order
    return np.moveaxis(out, range(m), axes[::-1])


def oracle_state(c: Circuit) -> np.ndarray:
    """Final state of the circuit from |0...0>, complex128, via the dense
    tensor-contraction route.
    """
    validate_circuit(c)
    n = c.num_qubits
    if n > _ORACLE_MAX_QUBITS:
        raise TooLargeForOracle(f"oracle capped at N={_ORACLE_MAX_QUBITS}")
    psi = np.zeros((2,) * n, dtype=complex)
    psi[(0,) * n] = 1.0
    for g in c.ops:
        psi = _apply_op_tensor(psi, g, n)
    return psi.reshape(-1)


def dense_unitary(c: Circuit) -> np.ndarray:
    """Full 2^N x 2^N matrix of the circuit (leftmost op acts first)."""
    validate_circuit(c)
    n = c.num_qubits
    if n > _ORACLE_MAX_QUBITS:
        raise TooLargeForOracle(f"oracle capped at N={_ORACLE_MAX_QUBITS}")
    dim = 1 << n
    # columns are states; carry the column index as a trailing axis
    u = np.eye(dim, dtype=complex).reshape((2,) * n + (dim,))
    for g in c.ops:
        u = _apply_op_tensor(u, g, n)
    return u.reshape(dim, dim)


def qft_sigma_z_metric(z: np.ndarray) -> float:
    """log10 of the summed per-site |<sigma_z>| divided by N, clamped so an
    exact zero gives a finite sentinel instead of -inf.
    """
    z = np.asarray(z, dtype=float)
    if z.size < 1:
        raise LengthMismatch("empty expectation vector")
    return float(np.log10(max(np.abs(z).sum(), _LOG_CLAMP)) / z.size)


def delta_expectation(z1: np.ndarray, z2: np.ndarray) -> float:
    """log10 of the summed per-site expectation differences between two
    configurations, clamped at a finite floor for exact matches.
    """
    z1 = np.asarray(z1, dtype=float)
    z2 = np.asarray(z2, dtype=float)
    if z1.shape != z2.shape:
        raise LengthMismatch(f"shapes {z1.shape} vs {z2.shape}")
    return float(np.log10(max(np.abs(z1 - z2).sum(), _LOG_CLAMP)))


def compare_vectors(a: np.ndarray, b: np.ndarray) -> float:
    """Max amplitude difference up to global phase.  The phase is fixed by
    the largest-magnitude amplitude of the first vector.
    """
    a = np.asarray(a).ravel()
    b = np.asarray(b).ravel()
    if a.shape != b.shape:
        raise DimensionMismatch(f"lengths {a.size} vs {b.size}")
    j = int(np.argmax(np.abs(a)))
    if b[j] == 0:
        return float(np.max(np.abs(a - b)))
    phase = a[j] / b[j]
    phase /= abs(phase)
    return float(np.max(np.abs(a - phase * b)))


def compare_states(s1, s2) -> float:
    """compare_vectors over StateVector amplitudes (promoted to double)."""
    if s1.num_qubits != s2.num_qubits:
        raise DimensionMismatch(
            f"{s1.num_qubits} vs {s2.num_qubits} qubits")
    return compare_vectors(s1.amps.astype(np.complex128),
                           s2.amps.astype(np.complex128))
