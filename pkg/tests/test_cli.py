import json

import pytest

from qsvbench.cli import dispatch, _parse_range
from qsvbench.qasm import parse_qasm
from qsvbench.taskgen import build_qft


def test_parse_range():
    assert _parse_range("16") == (16,)
    assert _parse_range("4:8:2") == (4, 6, 8)
    assert _parse_range("4:9:2") == (4, 6, 8)
    assert _parse_range("4:6") == (4, 5, 6)


def test_gen_then_run_qft(tmp_path, capsys):
    out = tmp_path / "qft3.qasm"
    assert dispatch(["gen", "--task", "qft", "--n", "3",
                     "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("// config:")
    circuit = parse_qasm(text)
    assert circuit.ops == build_qft(3).ops
    capsys.readouterr()

    assert dispatch(["run", str(out), "--precision", "double"]) == 0
    printed = capsys.readouterr().out
    zs = [float(x) for x in printed.splitlines()[0].split()[1:]]
    assert len(zs) == 3 and all(abs(z) <= 1e-13 for z in zs)
    assert "norm: 1.000000000000000" in printed


def test_gen_stable_across_runs(tmp_path):
    a, b = tmp_path / "a.qasm", tmp_path / "b.qasm"
    for p in (a, b):
        dispatch(["gen", "--task", "rqc", "--n", "6", "--seed", "5",
                  "--out", str(p)])
    assert a.read_text() == b.read_text()


def test_bench_to_csv_row_count(tmp_path, capsys):
    out = tmp_path / "h.csv"
    code = dispatch(["bench", "--task", "heisenberg", "--n", "4:8:2",
                     "--reps", "1", "--out", str(out)])
    assert code == 0
    lines = [l for l in out.read_text().splitlines()
             if l and not l.startswith("#")]
    assert len(lines) == 1 + 3  # header + one row per N
    assert lines[0].startswith("task,n,precision")


def test_bench_then_fit(tmp_path, capsys):
    csv_path, fit_path = tmp_path / "q.csv", tmp_path / "fit.json"
    dispatch(["bench", "--task", "qft", "--n", "4:10:1", "--reps", "1",
              "--out", str(csv_path)])
    capsys.readouterr()
    assert dispatch(["fit", str(csv_path), "--nmin", "4",
                     "--out", str(fit_path)]) == 0
    doc = json.loads(fit_path.read_text())
    assert {"a", "b", "stderr_a", "stderr_b", "config"} <= set(doc)


def test_run_memory_budget_exit_code_2(tmp_path, capsys):
    out = tmp_path / "c.qasm"
    dispatch(["gen", "--task", "qft", "--n", "8", "--out", str(out)])
    code = dispatch(["run", str(out), "--budget-bytes", "1024"])
    assert code == 2


def test_run_deadline_exit_code_2(tmp_path, capsys):
    out = tmp_path / "c.qasm"
    dispatch(["gen", "--task", "qft", "--n", "8", "--out", str(out)])
    assert dispatch(["run", str(out), "--deadline-s", "0"]) == 2


def test_bench_resource_failure_exit_code_2(tmp_path, capsys):
    out = tmp_path / "m.csv"
    code = dispatch(["bench", "--task", "qft", "--n", "4:10:2", "--reps", "1",
                     "--budget-bytes", "4096", "--out", str(out)])
    assert code == 2
    assert "MemoryLimit" in out.read_text()


def test_usage_error_exit_code_1(capsys):
    assert dispatch(["bench", "--task", "nope", "--n", "4", "--out", "x"]) == 1
    assert dispatch(["frobnicate"]) == 1


def test_validate_jsonl(capsys):
    assert dispatch(["validate", "--task", "qft", "--n", "5"]) == 0
    lines = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    metrics = {d["metric"] for d in lines}
    assert {"qft_sigma_z", "oracle_max_diff"} <= metrics
    assert all(d["pass"] for d in lines if d["metric"] != "delta_expectation")


def test_missing_file_exit_code_1(capsys):
    assert dispatch(["run", "/nonexistent/file.qasm"]) == 1
