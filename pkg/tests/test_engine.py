import math

import numpy as np
import pytest

from qsvbench.circuit import Circuit, GateKind, GateOp
from qsvbench.engine import (MemoryBudget, Precision, StateVector, ThreadMode,
                             apply_gate, backend_name, expectation_z_all,
                             init_state, norm, run_circuit)
from qsvbench.engine import kernels_py
from qsvbench.errors import MemoryLimitError, TimeLimitError
from qsvbench.gates import gate_matrix
from qsvbench.taskgen import build_heisenberg, build_qft, build_rqc
from qsvbench.validate import compare_vectors, oracle_state

GIB = 1 << 30


def test_init_state_double():
    s = init_state(1, Precision.DOUBLE)
    assert s.amps.tolist() == [1 + 0j, 0 + 0j]
    assert s.amps.dtype == np.complex128


def test_init_state_single_dtype():
    assert init_state(3, Precision.SINGLE).amps.dtype == np.complex64


def test_memory_budget_boundary():
    # 2^26 * 16 B is exactly 1 GiB: allowed
    init_state(26, Precision.DOUBLE, MemoryBudget(GIB))
    with pytest.raises(MemoryLimitError) as e:
        init_state(27, Precision.DOUBLE, MemoryBudget(GIB))
    assert e.value.num_qubits == 27


def test_x_flips():
    s = init_state(1)
    apply_gate(s, GateOp(GateKind.X, (), (0,)))
    assert s.amps.tolist() == [0, 1]


def test_h_superposition():
    s = init_state(1)
    apply_gate(s, GateOp(GateKind.H, (), (0,)))
    assert np.allclose(s.amps, [1 / math.sqrt(2)] * 2, atol=1e-15)


def test_fsim_swaps_with_phase():
    # |q0=1, q1=0> -> -i |q0=0, q1=1> at theta = pi/2
    s = init_state(2)
    apply_gate(s, GateOp(GateKind.X, (), (0,)))
    apply_gate(s, GateOp(GateKind.FSIM, (math.pi / 2, math.pi / 6), (0, 1)))
    expect = np.zeros(4, dtype=complex)
    expect[2] = -1j
    assert np.max(np.abs(s.amps - expect)) < 1e-15


def test_fsim_11_phase():
    s = init_state(2)
    apply_gate(s, GateOp(GateKind.X, (), (0,)))
    apply_gate(s, GateOp(GateKind.X, (), (1,)))
    phi = math.pi / 6
    apply_gate(s, GateOp(GateKind.FSIM, (1.0, phi), (0, 1)))
    assert abs(s.amps[3] - np.exp(-1j * phi)) < 1e-15


def test_run_circuit_qubit_mismatch():
    with pytest.raises(ValueError):
        run_circuit(init_state(2), build_qft(3))


def test_qft3_uniform():
    s = init_state(3)
    run_circuit(s, build_qft(3))
    assert np.max(np.abs(s.amps - 1 / math.sqrt(8))) < 1e-12


def test_deadline_zero_aborts_at_gate_zero():
    s = init_state(2)
    with pytest.raises(TimeLimitError) as e:
        run_circuit(s, build_qft(2), deadline_s=0.0)
    assert e.value.gate_index == 0


def test_expectation_basics():
    s = init_state(1)
    assert expectation_z_all(s).tolist() == [1.0]
    apply_gate(s, GateOp(GateKind.H, (), (0,)))
    assert abs(expectation_z_all(s)[0]) < 1e-15


def test_expectation_bit_order():
    s = init_state(2)
    apply_gate(s, GateOp(GateKind.X, (), (1,)))
    assert expectation_z_all(s).tolist() == [1.0, -1.0]


def test_norm_fresh():
    assert norm(init_state(8)) == 1.0


@pytest.mark.parametrize("precision,tol", [
    (Precision.DOUBLE, 1e-12), (Precision.SINGLE, 1e-5)])
def test_norm_after_heisenberg(precision, tol):
    s = init_state(10, precision)
    run_circuit(s, build_heisenberg(10))
    assert abs(norm(s) - 1.0) <= tol


def test_unitarity_random_gates():
    rng = np.random.default_rng(5)
    n = 8
    s = init_state(n)
    v = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    s.amps[:] = v / np.linalg.norm(v)
    kinds1 = [GateKind.H, GateKind.X, GateKind.Y, GateKind.Z, GateKind.SX,
              GateKind.SY, GateKind.SW, GateKind.RX, GateKind.RY, GateKind.RZ,
              GateKind.P]
    kinds2 = [GateKind.CX, GateKind.CZ, GateKind.CP, GateKind.SWAP,
              GateKind.FSIM]
    for _ in range(2000):
        if rng.random() < 0.6:
            k = kinds1[rng.integers(len(kinds1))]
            qs = (int(rng.integers(n)),)
        else:
            k = kinds2[rng.integers(len(kinds2))]
            qs = tuple(rng.choice(n, 2, replace=False).tolist())
        params = tuple(rng.uniform(-np.pi, np.pi, k.num_params))
        apply_gate(s, GateOp(k, params, qs))
        assert abs(norm(s) - 1.0) <= 1e-12


def random_circuit(n, depth, seed):
    rng = np.random.default_rng(seed)
    c = Circuit(n)
    kinds = list(GateKind)
    for _ in range(depth):
        k = kinds[rng.integers(len(kinds))]
        qs = tuple(rng.choice(n, k.arity, replace=False).tolist())
        params = tuple(rng.uniform(-np.pi, np.pi, k.num_params))
        c.ops.append(GateOp(k, params, qs))
    return c


@pytest.mark.parametrize("n", [2, 5, 10])
def test_kernels_match_dense_oracle(n):
    c = random_circuit(n, 60, seed=n)
    s = init_state(n)
    run_circuit(s, c)
    assert compare_vectors(oracle_state(c), s.amps) < 1e-10


def test_thread_count_bitwise_identity():
    # disjoint chunk partitions: identical arithmetic per amplitude
    c = build_rqc(16)
    results = []
    for k in (1, 2, 4, 8):
        s = init_state(16)
        run_circuit(s, c, ThreadMode(k))
        results.append(s.amps.copy())
    for r in results[1:]:
        assert np.array_equal(results[0], r)


def test_thread_count_expectation_identity():
    c = build_heisenberg(14)
    zs = []
    for k in (1, 4):
        s = init_state(14)
        run_circuit(s, c, ThreadMode(k))
        zs.append(expectation_z_all(s))
    assert np.max(np.abs(zs[0] - zs[1])) <= 1e-14


def test_single_precision_rounds_per_gate():
    s = init_state(10, Precision.SINGLE)
    run_circuit(s, build_heisenberg(10))
    d = init_state(10, Precision.DOUBLE)
    run_circuit(d, build_heisenberg(10))
    diff = np.max(np.abs(s.amps.astype(np.complex128) - d.amps))
    assert 0 < diff < 1e-4


def test_python_backend_agrees():
    import qsvbench.engine as eng
    c = random_circuit(9, 80, seed=3)
    s1 = init_state(9)
    run_circuit(s1, c)
    saved = eng.kernels
    eng.kernels = kernels_py
    try:
        s2 = init_state(9)
        run_circuit(s2, c)
    finally:
        eng.kernels = saved
    assert np.max(np.abs(s1.amps - s2.amps)) < 1e-12


def test_backend_name_reported():
    assert backend_name() in ("cython", "python")
