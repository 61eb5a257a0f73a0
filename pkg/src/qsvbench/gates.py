"""Dense gate matrices, always built in double precision.

Two-qubit matrices use the index convention b_first + 2 * b_second.
"""
from __future__ import annotations

import math

import numpy as np

from .circuit import GateKind, GateOp

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_W = (_X + _Y) / math.sqrt(2)


def _sqrt_involution(p: np.ndarray) -> np.ndarray:
    # principal square root of a Hermitian involution (eigenvalues +-1)
    return ((1 + 1j) * _I2 + (1 - 1j) * p) / 2


_FIXED = {
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2),
    GateKind.X: _X,
    GateKind.Y: _Y,
    GateKind.Z: _Z,
    GateKind.SX: _sqrt_involution(_X),
    GateKind.SY: _sqrt_involution(_Y),
    GateKind.SW: _sqrt_involution(_W),
    GateKind.CX: np.array([[1, 0, 0, 0],
                           [0, 0, 0, 1],
                           [0, 0, 1, 0],
                           [0, 1, 0, 0]], dtype=complex),
    GateKind.CZ: np.diag([1, 1, 1, -1]).astype(complex),
    GateKind.SWAP: np.array([[1, 0, 0, 0],
                             [0, 0, 1, 0],
                             [0, 1, 0, 0],
                             [0, 0, 0, 1]], dtype=complex),
}


def gate_matrix(kind: GateKind, params: tuple[float, ...] = ()) -> np.ndarray:
    """Return the 2x2 or 4x4 unitary for a gate kind, complex128."""
    if kind in _FIXED:
        return _FIXED[kind]
    if kind is GateKind.RX:
        (t,) = params
        c, s = math.cos(t / 2), math.sin(t / 2)
        return np.array([[c, -1j * s], [-1j * s, c]])
    if kind is GateKind.RY:
        (t,) = params
        c, s = math.cos(t / 2), math.sin(t / 2)
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind is GateKind.RZ:
        (t,) = params
        return np.diag([np.exp(-0.5j * t), np.exp(0.5j * t)])
    if kind is GateKind.P:
        (t,) = params
        return np.diag([1.0, np.exp(1j * t)])
    if kind is GateKind.CP:
        (t,) = params
        return np.diag([1.0, 1.0, 1.0, np.exp(1j * t)])
    if kind is GateKind.FSIM:
        theta, phi = params
        c, s = math.cos(theta), math.sin(theta)
        return np.array([[1, 0, 0, 0],
                         [0, c, -1j * s, 0],
                         [0, -1j * s, c, 0],
                         [0, 0, 0, np.exp(-1j * phi)]])
    raise ValueError(f"no matrix for {kind}")


def op_matrix(g: GateOp) -> np.ndarray:
    return gate_matrix(g.kind, g.params)
