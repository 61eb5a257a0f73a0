"""Command-line entry point.

Subcommands: gen (task -> QASM), run (QASM -> <sigma_z> vector + norm),
bench (sweep -> CSV), fit (CSV -> scaling-fit JSON), validate (analytic
and cross-configuration checks as JSON lines).

Exit codes: 0 success, 1 usage error, 2 typed resource limit.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys

import numpy as np

from . import analysis, bench, validate as val
from .circuit import gate_stats
from .engine import (MemoryBudget, Precision, ThreadMode, backend_name,
                     expectation_z_all, init_state, norm, run_circuit)
from .errors import QsvError, ResourceLimit
from .qasm import emit_qasm, parse_qasm
from .taskgen import HeisenbergParams, RqcParams

TASKS = ("heisenberg", "rqc", "qft")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_range(text: str) -> tuple[int, ...]:
    """N range: a single integer or inclusive start:stop:step."""
    if ":" in text:
        parts = [int(x) for x in text.split(":")]
        if len(parts) == 2:
            parts.append(1)
        start, stop, step = parts
        return tuple(range(start, stop + 1, step))
    return (int(text),)


def _precision(text: str) -> Precision:
    return Precision(text)


def _threads(workers: int) -> ThreadMode:
    return ThreadMode.multi(workers) if workers != 1 else ThreadMode(1)


def _task_params(args) -> tuple[HeisenbergParams, RqcParams]:
    hp = HeisenbergParams(jx=args.jx, jy=args.jy, jz=args.jz, hz=args.hz,
                          dt=args.dt, tf=args.tf)
    rp = RqcParams(seed=args.seed, cycles=args.cycles,
                   theta=args.theta, phi=args.phi)
    return hp, rp


def _add_task_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jx", type=float, default=1.0)
    p.add_argument("--jy", type=float, default=0.1)
    p.add_argument("--jz", type=float, default=0.1)
    p.add_argument("--hz", type=float, default=0.1)
    p.add_argument("--dt", type=float, default=0.01)
    p.add_argument("--tf", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=2019)
    p.add_argument("--cycles", type=int, default=14)
    p.add_argument("--theta", type=float, default=float(np.pi / 2))
    p.add_argument("--phi", type=float, default=float(np.pi / 6))


def _build_parser() -> _Parser:
    p = _Parser(prog="qsvbench")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", parents=[], help="write a task circuit as QASM")
    g.add_argument("--task", choices=TASKS, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--out", required=True)
    _add_task_flags(g)

    r = sub.add_parser("run", help="execute a QASM file")
    r.add_argument("qasm")
    r.add_argument("--precision", type=_precision, default=Precision.DOUBLE)
    r.add_argument("--threads", type=int, default=1)
    r.add_argument("--deadline-s", type=float, default=None)
    r.add_argument("--budget-bytes", type=int, default=None)

    b = sub.add_parser("bench", help="timing sweep over N")
    b.add_argument("--task", choices=TASKS, required=True)
    b.add_argument("--n", type=_parse_range, required=True,
                   metavar="START:STOP:STEP")
    b.add_argument("--precision", type=_precision, default=Precision.DOUBLE)
    b.add_argument("--threads", type=int, default=1)
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--deadline-s", type=float, default=None)
    b.add_argument("--budget-bytes", type=int, default=None)
    b.add_argument("--out", required=True)
    b.add_argument("--json", dest="json_out", default=None)
    _add_task_flags(b)

    f = sub.add_parser("fit", help="fit ln(t) = a + b*N to a bench CSV")
    f.add_argument("csv")
    f.add_argument("--nmin", default="auto",
                   help="'auto' (first point with t >= 1 s) or an integer")
    f.add_argument("--out", default=None)

    v = sub.add_parser("validate", help="validation checks as JSON lines")
    v.add_argument("--task", choices=TASKS, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--check", choices=("qft", "delta", "oracle"),
                   action="append", default=None)
    v.add_argument("--precision", type=_precision, default=Precision.DOUBLE)
    v.add_argument("--threads", type=int, default=1)
    _add_task_flags(v)
    return p


def _cmd_gen(args) -> int:
    hp, rp = _task_params(args)
    cfg = bench.BenchConfig(task=args.task, n_range=(args.n,),
                            heisenberg=hp, rqc=rp)
    circuit = bench.build_task(cfg, args.n)
    text = emit_qasm(circuit)
    header = f"// config: {json.dumps({'task': args.task, 'n': args.n, 'seed': args.seed})}\n"
    with open(args.out, "w") as fh:
        fh.write(header + text)
    print(f"wrote {args.out}: N={args.n}, {gate_stats(circuit).total} gates")
    return 0


def _cmd_run(args) -> int:
    with open(args.qasm) as fh:
        circuit = parse_qasm(fh.read())
    budget = MemoryBudget(args.budget_bytes)
    state = init_state(circuit.num_qubits, args.precision, budget)
    run_circuit(state, circuit, _threads(args.threads), args.deadline_s)
    z = expectation_z_all(state)
    print("sigma_z:", " ".join(f"{x:+.15e}" for x in z))
    print(f"norm: {norm(state):.15f}")
    return 0


def _bench_config(args) -> bench.BenchConfig:
    hp, rp = _task_params(args)
    return bench.BenchConfig(
        task=args.task, n_range=args.n, precision=args.precision,
        threads=_threads(args.threads), repetitions=args.reps,
        deadline_s=args.deadline_s, budget=MemoryBudget(args.budget_bytes),
        heisenberg=hp, rqc=rp)


def _cmd_bench(args) -> int:
    cfg = _bench_config(args)
    records = bench.sweep(cfg)
    bench.write_csv(args.out, records, cfg)
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(bench.records_json(records, cfg))
    for r in records:
        wall = "-" if r.wall_seconds is None else f"{r.wall_seconds:.4f}s"
        print(f"{r.task} N={r.n}: {r.outcome.value} {wall}")
    if any(r.outcome is not bench.Outcome.OK for r in records):
        return 2
    return 0


def _cmd_fit(args) -> int:
    records = bench.read_csv(args.csv)
    n_min = None if args.nmin == "auto" else int(args.nmin)
    fit = analysis.fit_scaling(records, n_min)
    doc = json.loads(fit.to_json())
    doc["config"] = {"csv": args.csv, "nmin": args.nmin}
    out = json.dumps(doc, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    print(out)
    return 0


def _run_task_z(args, precision: Precision, workers: int) -> np.ndarray:
    hp, rp = _task_params(args)
    cfg = bench.BenchConfig(task=args.task, n_range=(args.n,),
                            heisenberg=hp, rqc=rp)
    circuit = bench.build_task(cfg, args.n)
    state = init_state(args.n, precision)
    run_circuit(state, circuit, _threads(workers))
    return expectation_z_all(state)


def _cmd_validate(args) -> int:
    checks = args.check
    if not checks:
        checks = (["qft"] if args.task == "qft" else []) + ["delta"]
        if args.n <= 12:
            checks.append("oracle")
    reports: list[val.ValidationReport] = []
    for check in checks:
        if check == "qft":
            if args.task != "qft":
                raise QsvError("--check qft requires --task qft")
            z = _run_task_z(args, args.precision, args.threads)
            thr = -12.0 if args.precision is Precision.DOUBLE else -5.0
            reports.append(val.ValidationReport(
                "qft_sigma_z", val.qft_sigma_z_metric(z), thr,
                f"{args.task}/{args.precision.value}"))
        elif check == "delta":
            z1 = _run_task_z(args, Precision.SINGLE, args.threads)
            z2 = _run_task_z(args, Precision.DOUBLE, args.threads)
            reports.append(val.ValidationReport(
                "delta_expectation", val.delta_expectation(z1, z2), -4.0,
                f"{args.task}/single", f"{args.task}/double"))
        elif check == "oracle":
            if args.n > 12:
                raise QsvError("--check oracle needs --n <= 12")
            hp, rp = _task_params(args)
            cfg = bench.BenchConfig(task=args.task, n_range=(args.n,),
                                    heisenberg=hp, rqc=rp)
            circuit = bench.build_task(cfg, args.n)
            state = init_state(args.n, args.precision)
            run_circuit(state, circuit, _threads(args.threads))
            diff = val.compare_vectors(val.oracle_state(circuit),
                                       state.amps.astype(np.complex128))
            tol = 1e-10 if args.precision is Precision.DOUBLE else 1e-4
            reports.append(val.ValidationReport(
                "oracle_max_diff", diff, tol,
                f"{args.task}/{args.precision.value}", "dense-oracle"))
    ok = True
    for rep in reports:
        doc = dataclasses.asdict(rep)
        doc["pass"] = rep.passed
        print(json.dumps(doc))
        ok = ok and rep.passed
    return 0 if ok else 2


def dispatch(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.cmd == "gen":
            return _cmd_gen(args)
        if args.cmd == "run":
            return _cmd_run(args)
        if args.cmd == "bench":
            return _cmd_bench(args)
        if args.cmd == "fit":
            return _cmd_fit(args)
        if args.cmd == "validate":
            return _cmd_validate(args)
    except ResourceLimit as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except (QsvError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 1


def main() -> None:
    sys.exit(dispatch())
