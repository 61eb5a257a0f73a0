import math

import pytest
from hypothesis import given, settings, strategies as st

from qsvbench.circuit import Circuit, GateKind, GateOp
from qsvbench.errors import (QasmSyntaxError, UnknownGate,
                             UnsupportedStatement)
from qsvbench.qasm import emit_qasm, parse_qasm
from qsvbench.taskgen import build_heisenberg, build_qft, build_rqc, RqcParams, HeisenbergParams


def test_parse_minimal():
    c = parse_qasm("OPENQASM 2.0; qreg q[1]; h q[0];")
    assert c.num_qubits == 1
    assert c.ops == [GateOp(GateKind.H, (), (0,))]


def test_parse_measure_unsupported():
    with pytest.raises(UnsupportedStatement) as e:
        parse_qasm('OPENQASM 2.0; qreg q[2]; creg c[2]; measure q -> c;')
    assert "creg" in str(e.value)


def test_parse_measure_named():
    with pytest.raises(UnsupportedStatement) as e:
        parse_qasm('OPENQASM 2.0; qreg q[1]; measure q[0] -> c[0];')
    assert "measure" in str(e.value)


def test_parse_unknown_gate():
    with pytest.raises(UnknownGate):
        parse_qasm("OPENQASM 2.0; qreg q[1]; frobnicate q[0];")


def test_parse_error_carries_position():
    with pytest.raises(QasmSyntaxError) as e:
        parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[0;\n")
    assert e.value.line == 3
    assert e.value.col > 0


def test_parser_total_on_garbage():
    for text in ["", "banana", "OPENQASM 3.0;", "OPENQASM 2.0; qreg", "\x00"]:
        with pytest.raises((QasmSyntaxError, UnsupportedStatement, UnknownGate)):
            parse_qasm(text)


def test_alias_normalization():
    c = parse_qasm("OPENQASM 2.0; qreg q[2]; u1(0.5) q[0]; cu1(0.25) q[0], q[1];")
    assert c.ops[0].kind is GateKind.P
    assert c.ops[1].kind is GateKind.CP


def test_expressions():
    c = parse_qasm("OPENQASM 2.0; qreg q[1]; rz(pi/2) q[0]; rz(-pi) q[0]; "
                   "rz(2*pi/4 + 1) q[0]; rz(cos(0)) q[0];")
    assert c.ops[0].params[0] == pytest.approx(math.pi / 2)
    assert c.ops[1].params[0] == pytest.approx(-math.pi)
    assert c.ops[2].params[0] == pytest.approx(math.pi / 2 + 1)
    assert c.ops[3].params[0] == pytest.approx(1.0)


def test_inline_gate_definition_expands():
    text = """
    OPENQASM 2.0;
    include "qelib1.inc";
    qreg q[2];
    gate foo(t) a, b { h a; cx a, b; rz(2*t) b; }
    foo(0.7) q[1], q[0];
    """
    c = parse_qasm(text)
    assert c.ops == [
        GateOp(GateKind.H, (), (1,)),
        GateOp(GateKind.CX, (), (1, 0)),
        GateOp(GateKind.RZ, (1.4,), (0,)),
    ]


def test_emit_minimal():
    text = emit_qasm(Circuit(1, [GateOp(GateKind.H, (), (0,))]))
    assert text.splitlines() == [
        "OPENQASM 2.0;", 'include "qelib1.inc";', "qreg q[1];", "h q[0];"]


def test_emit_empty_circuit():
    text = emit_qasm(Circuit(2))
    assert text.splitlines() == [
        "OPENQASM 2.0;", 'include "qelib1.inc";', "qreg q[2];"]


def test_fsim_round_trip():
    c = Circuit(2, [GateOp(GateKind.FSIM, (math.pi / 2, math.pi / 6), (0, 1))])
    back = parse_qasm(emit_qasm(c))
    assert back.ops == c.ops


@pytest.mark.parametrize("circuit", [
    build_qft(5),
    build_heisenberg(4, HeisenbergParams(tf=0.05)),
    build_rqc(6, RqcParams(seed=7, cycles=5)),
], ids=["qft", "heisenberg", "rqc"])
def test_generator_round_trip_exact(circuit):
    back = parse_qasm(emit_qasm(circuit))
    assert back.num_qubits == circuit.num_qubits
    assert back.ops == circuit.ops


def test_emit_is_deterministic():
    a = emit_qasm(build_rqc(6, RqcParams(seed=3)))
    b = emit_qasm(build_rqc(6, RqcParams(seed=3)))
    assert a == b


_angle = st.floats(-10.0, 10.0, allow_nan=False, allow_subnormal=False,
                   width=64)


@st.composite
def _circuits(draw):
    n = draw(st.integers(2, 6))
    ops = []
    for _ in range(draw(st.integers(0, 12))):
        kind = draw(st.sampled_from(sorted(GateKind, key=lambda k: k.value)))
        qubits = tuple(draw(st.permutations(range(n)))[:kind.arity])
        params = tuple(draw(_angle) for _ in range(kind.num_params))
        ops.append(GateOp(kind, params, qubits))
    return Circuit(n, ops)


@given(_circuits())
@settings(max_examples=60, deadline=None)
def test_round_trip_property(circuit):
    back = parse_qasm(emit_qasm(circuit))
    assert back.num_qubits == circuit.num_qubits
    assert back.ops == circuit.ops
