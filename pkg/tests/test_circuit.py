import pytest

from qsvbench.circuit import (Circuit, GateKind, GateOp, GateStats,
                              gate_stats, validate_circuit)
from qsvbench.errors import DuplicateQubit, ParamArityMismatch, QubitOutOfRange
from qsvbench.taskgen import build_heisenberg, build_qft


def test_arity_and_param_counts():
    assert GateKind.H.arity == 1
    assert GateKind.FSIM.arity == 2
    assert GateKind.FSIM.num_params == 2
    assert GateKind.RZ.num_params == 1
    assert GateKind.CP.num_params == 1
    assert GateKind.CX.num_params == 0


def test_validate_minimal_ok():
    c = Circuit(2, [GateOp(GateKind.CX, (), (0, 1))])
    validate_circuit(c)  # no raise


def test_validate_qubit_out_of_range():
    c = Circuit(1, [GateOp(GateKind.CX, (), (0, 1))])
    with pytest.raises(QubitOutOfRange) as e:
        validate_circuit(c)
    assert e.value.op_index == 0


def test_validate_param_arity():
    c = Circuit(2, [GateOp(GateKind.FSIM, (1.0,), (0, 1))])
    with pytest.raises(ParamArityMismatch):
        validate_circuit(c)


def test_validate_duplicate_qubit():
    c = Circuit(2, [GateOp(GateKind.CX, (), (1, 1))])
    with pytest.raises(DuplicateQubit):
        validate_circuit(c)


def test_validate_is_pure():
    c = Circuit(1, [GateOp(GateKind.CX, (), (0, 1))])
    for _ in range(3):
        with pytest.raises(QubitOutOfRange):
            validate_circuit(c)


def test_gate_stats_empty():
    assert gate_stats(Circuit(3)) == GateStats(0, 0)
    assert gate_stats(Circuit(3)).total == 0


def test_gate_stats_qft3():
    st = gate_stats(build_qft(3))
    assert (st.sqg_count, st.tqg_count, st.total) == (3, 4, 7)


def test_gate_stats_heisenberg_counts():
    # 3 CX per bond per step, N-1 bonds, 100 steps
    st = gate_stats(build_heisenberg(4))
    assert st.tqg_count == 100 * 3 * 3 == 900
    assert st.total == len(build_heisenberg(4).ops)


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_qft_quadratic_count(n):
    st = gate_stats(build_qft(n))
    assert st.total == n * (n + 1) // 2 + n // 2
