"""Generators for the three benchmark circuit families.

All generators are pure and deterministic in their parameter records.
Exact gate counts (asserted by tests):

  heisenberg: per Trotter step each bond contributes 3 CX + 4 rotations,
              plus one RZ per site, so tqg = 3*M*(N-1) and
              sqg = M*(5*(N-1) + N)  (5 = 1 RZ pre + 2 mid + 1 mid + 1 post).
  qft:        N(N+1)/2 gates + floor(N/2) swaps.
  rqc:        cycles*N single-qubit gates + one fsim per active coupler.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .circuit import Circuit, GateKind
from .errors import GridTooSmall, InvalidParams

__all__ = [
    "HeisenbergParams",
    "RqcParams",
    "build_heisenberg",
    "build_qft",
    "build_rqc",
    "nsim_decompose",
]


@dataclass(frozen=True)
class HeisenbergParams:
    """XYZ spin chain with transverse field, open boundary."""
    jx: float = 1.0
    jy: float = 0.1
    jz: float = 0.1
    hz: float = 0.1
    dt: float = 0.01
    tf: float = 1.0

    @property
    def m_steps(self) -> int:
        return round(self.tf / self.dt)

    @property
    def alpha(self) -> float:
        return self.jx * self.dt

    @property
    def beta(self) -> float:
        return self.jy * self.dt

    @property
    def gamma(self) -> float:
        return self.jz * self.dt

    def check(self) -> None:
        if self.dt <= 0:
            raise InvalidParams(f"dt must be positive, got {self.dt}")
        if self.tf < 0:
            raise InvalidParams(f"tf must be non-negative, got {self.tf}")


def nsim_decompose(alpha: float, beta: float, gamma: float,
                   q0: int = 0, q1: int = 1) -> list:
    """Two-qubit circuit equal (up to global phase) to
    exp(i*(alpha XX + beta YY + gamma ZZ)), using exactly 3 CX.
    """
    from .circuit import op
    hp = math.pi / 2
    return [
        op(GateKind.RZ, q1, params=(hp,)),
        op(GateKind.CX, q1, q0),
        op(GateKind.RZ, q0, params=(hp - 2 * gamma,)),
        op(GateKind.RY, q1, params=(hp - 2 * alpha,)),
        op(GateKind.CX, q0, q1),
        op(GateKind.RY, q1, params=(2 * beta - hp,)),
        op(GateKind.CX, q1, q0),
        op(GateKind.RZ, q0, params=(-hp,)),
    ]


def build_heisenberg(n: int, p: HeisenbergParams = HeisenbergParams()) -> Circuit:
    """First-order Trotter circuit: per step, even bonds, odd bonds, then
    the field rotation RZ(2*hz*dt) on every site.
    """
    p.check()
    if n < 1:
        raise InvalidParams(f"need n >= 1, got {n}")
    c = Circuit(n, label=f"heisenberg n={n} m={p.m_steps}")
    a, b, g = p.alpha, p.beta, p.gamma
    even = [j for j in range(0, n - 1, 2)]
    odd = [j for j in range(1, n - 1, 2)]
    for _ in range(p.m_steps):
        for j in even + odd:
            c.ops.extend(nsim_decompose(a, b, g, j, j + 1))
        for j in range(n):
            c.append(GateKind.RZ, j, params=(2 * p.hz * p.dt,))
    return c


def build_qft(n: int) -> Circuit:
    """Hadamard / controlled-phase ladder plus the final qubit-reversal
    swaps, so the dense unitary is exactly the DFT matrix in the
    little-endian convention.
    """
    if n < 1:
        raise InvalidParams(f"need n >= 1, got {n}")
    c = Circuit(n, label=f"qft n={n}")
    for k in range(n - 1, -1, -1):
        c.append(GateKind.H, k)
        for j in range(k - 1, -1, -1):
            c.append(GateKind.CP, j, k, params=(math.pi / 2 ** (k - j),))
    for i in range(n // 2):
        c.append(GateKind.SWAP, i, n - 1 - i)
    return c


@dataclass(frozen=True)
class RqcParams:
    """Seeded stand-in for the hardware-style random circuit fixtures.

    The grid is factored automatically unless rows/cols are given; couplers
    are partitioned into four classes (E/F/G/H) by direction and parity and
    activated cyclically.  All fsim gates share one (theta, phi) pair.
    """
    seed: int = 2019
    cycles: int = 14
    theta: float = math.pi / 2
    phi: float = math.pi / 6
    grid_rows: int = 0   # 0 = derive from n
    grid_cols: int = 0


_SQG_CHOICES = (GateKind.SX, GateKind.SY, GateKind.SW)


def _grid_shape(n: int, p: RqcParams) -> tuple[int, int]:
    if p.grid_rows and p.grid_cols:
        if p.grid_rows * p.grid_cols < n:
            raise GridTooSmall(
                f"{p.grid_rows}x{p.grid_cols} grid holds fewer than {n} qubits")
        return p.grid_rows, p.grid_cols
    rows = max(1, int(math.floor(math.sqrt(n))))
    cols = math.ceil(n / rows)
    return rows, cols


def _pattern_edges(n: int, rows: int, cols: int) -> list[list[tuple[int, int]]]:
    """E/F/G/H coupler classes: horizontal edges split by column parity,
    vertical edges split by row parity.  Qubits are laid out row-major;
    cells >= n are unused.
    """
    classes: list[list[tuple[int, int]]] = [[], [], [], []]
    for r in range(rows):
        for cc in range(cols):
            q = r * cols + cc
            if q >= n:
                continue
            right = q + 1
            if cc + 1 < cols and right < n:
                classes[cc % 2].append((q, right))
            down = q + cols
            if r + 1 < rows and down < n:
                classes[2 + r % 2].append((q, down))
    return classes


def build_rqc(n: int, p: RqcParams = RqcParams()) -> Circuit:
    if n < 2:
        raise InvalidParams(f"need n >= 2, got {n}")
    rows, cols = _grid_shape(n, p)
    c = Circuit(n, label=f"rqc n={n} cycles={p.cycles} seed={p.seed}")
    classes = _pattern_edges(n, rows, cols)
    rng = random.Random(p.seed)
    prev = [None] * n
    for cyc in range(p.cycles):
        for q in range(n):
            kinds = [k for k in _SQG_CHOICES if k is not prev[q]]
            k = rng.choice(kinds)
            prev[q] = k
            c.append(k, q)
        for (a, b) in classes[cyc % 4]:
            c.append(GateKind.FSIM, a, b, params=(p.theta, p.phi))
    return c
