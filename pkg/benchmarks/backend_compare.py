#!/usr/bin/env python3
"""Compare the compiled kernel backend against the numpy fallback.

Usage: python benchmarks/backend_compare.py [--n 20] [--reps 3]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from qsvbench.circuit import gate_stats
from qsvbench.engine import StateVector, Precision, apply_gate, init_state
from qsvbench.engine import kernels_py
from qsvbench.taskgen import build_heisenberg, build_qft, build_rqc

try:
    from qsvbench.engine import _kernels
    BACKENDS = [("cython", _kernels), ("numpy", kernels_py)]
except ImportError:
    BACKENDS = [("numpy", kernels_py)]


def run_with(kernels, circuit, n, precision):
    import qsvbench.engine as eng
    saved = eng.kernels
    eng.kernels = kernels
    try:
        s = init_state(n, precision)
        t0 = time.perf_counter()
        for g in circuit.ops:
            apply_gate(s, g)
        return time.perf_counter() - t0, s.amps
    finally:
        eng.kernels = saved


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=20)
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args()

    tasks = [
        ("qft", build_qft(args.n)),
        ("rqc", build_rqc(args.n)),
        ("heisenberg", build_heisenberg(args.n)),
    ]
    print(f"N={args.n}, min of {args.reps} reps, double precision")
    print(f"{'task':<12}{'gates':>8}" +
          "".join(f"{name:>12}" for name, _ in BACKENDS) + f"{'speedup':>10}")
    for name, circuit in tasks:
        times, amps = {}, {}
        for bname, mod in BACKENDS:
            best = min(run_with(mod, circuit, args.n, Precision.DOUBLE)[0]
                       for _ in range(args.reps))
            times[bname] = best
            _, amps[bname] = run_with(mod, circuit, args.n, Precision.DOUBLE)
        if len(BACKENDS) == 2:
            diff = np.max(np.abs(amps["cython"] - amps["numpy"]))
            assert diff < 1e-12, f"backend mismatch: {diff}"
            ratio = times["numpy"] / times["cython"]
        row = f"{name:<12}{gate_stats(circuit).total:>8}"
        row += "".join(f"{times[b]:>11.3f}s" for b, _ in BACKENDS)
        if len(BACKENDS) == 2:
            row += f"{ratio:>9.2f}x"
        print(row)


if __name__ == "__main__":
    main()
