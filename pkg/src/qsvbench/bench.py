"""Wall-clock benchmarking of circuit execution.

Timers bracket run_circuit only: circuit generation, state allocation and
expectation computation are outside the timed region.  Resource failures
surface as typed outcome classes on the record, never as exceptions.
"""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field, asdict
from enum import Enum

from .circuit import Circuit, gate_stats
from .engine import (MemoryBudget, Precision, ThreadMode, init_state,
                     run_circuit)
from .errors import DesignLimitError, MemoryLimitError, TimeLimitError
from .taskgen import HeisenbergParams, RqcParams, build_heisenberg, build_qft, build_rqc

__all__ = ["Outcome", "BenchConfig", "BenchRecord", "build_task",
           "run_benchmark", "sweep", "write_csv", "read_csv", "records_json"]

CSV_FIELDS = ["task", "n", "precision", "threads", "repetitions",
              "wall_seconds", "outcome", "gate_total", "seed", "timestamp"]


class Outcome(Enum):
    OK = "OK"
    TIME_LIMIT = "TimeLimit"
    MEMORY_LIMIT = "MemoryLimit"
    DESIGN_LIMIT = "DesignLimit"


@dataclass(frozen=True)
class BenchConfig:
    task: str                      # heisenberg | rqc | qft
    n_range: tuple[int, ...]
    precision: Precision = Precision.DOUBLE
    threads: ThreadMode = ThreadMode(1)
    repetitions: int = 3           # reported time is the minimum
    deadline_s: float | None = None
    budget: MemoryBudget = MemoryBudget()
    heisenberg: HeisenbergParams = field(default_factory=HeisenbergParams)
    rqc: RqcParams = field(default_factory=RqcParams)

    def __post_init__(self):
        if list(self.n_range) != sorted(set(self.n_range)):
            raise ValueError("n_range must be strictly increasing")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")

    @property
    def seed(self) -> int:
        return self.rqc.seed

    def describe(self) -> dict:
        return {
            "task": self.task,
            "n_range": list(self.n_range),
            "precision": self.precision.value,
            "threads": self.threads.workers,
            "repetitions": self.repetitions,
            "deadline_s": self.deadline_s,
            "max_bytes": self.budget.max_bytes,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class BenchRecord:
    task: str
    n: int
    precision: str
    threads: int
    repetitions: int
    wall_seconds: float | None
    outcome: Outcome
    gate_total: int
    seed: int
    timestamp: float


def build_task(cfg: BenchConfig, n: int) -> Circuit:
    if cfg.task == "heisenberg":
        return build_heisenberg(n, cfg.heisenberg)
    if cfg.task == "qft":
        return build_qft(n)
    if cfg.task == "rqc":
        return build_rqc(n, cfg.rqc)
    raise ValueError(f"unknown task {cfg.task!r}")


def run_benchmark(cfg: BenchConfig, n: int) -> BenchRecord:
    """One timed point: build the circuit, then time run_circuit alone,
    keeping the minimum over repetitions.
    """
    circuit = build_task(cfg, n)
    total = gate_stats(circuit).total

    def record(outcome: Outcome, wall: float | None) -> BenchRecord:
        return BenchRecord(cfg.task, n, cfg.precision.value,
                           cfg.threads.workers, cfg.repetitions, wall,
                           outcome, total, cfg.seed, time.time())

    best: float | None = None
    try:
        for _ in range(cfg.repetitions):
            state = init_state(n, cfg.precision, cfg.budget)
            t0 = time.monotonic()
            run_circuit(state, circuit, cfg.threads, cfg.deadline_s)
            wall = time.monotonic() - t0
            best = wall if best is None else min(best, wall)
    except MemoryLimitError:
        return record(Outcome.MEMORY_LIMIT, None)
    except TimeLimitError:
        return record(Outcome.TIME_LIMIT, None)
    except DesignLimitError:
        return record(Outcome.DESIGN_LIMIT, None)
    return record(Outcome.OK, best)


def sweep(cfg: BenchConfig, warmup: bool = True) -> list[BenchRecord]:
    """Ascending-N sweep, stopping after the first resource failure
    (larger N can only fail harder).  The failing record is kept.
    """
    records: list[BenchRecord] = []
    if warmup and cfg.n_range:
        # one untimed run at the smallest N to absorb one-time costs
        n0 = cfg.n_range[0]
        try:
            state = init_state(n0, cfg.precision, cfg.budget)
            run_circuit(state, build_task(cfg, n0), cfg.threads, cfg.deadline_s)
        except (MemoryLimitError, TimeLimitError, DesignLimitError):
            pass
    for n in cfg.n_range:
        rec = run_benchmark(cfg, n)
        records.append(rec)
        if rec.outcome is not Outcome.OK:
            break
    return records


# --- persistence ------------------------------------------------------------

def write_csv(path: str, records: list[BenchRecord],
              cfg: BenchConfig | None = None) -> None:
    with open(path, "w", newline="") as f:
        if cfg is not None:
            f.write(f"# config: {json.dumps(cfg.describe())}\n")
        w = csv.DictWriter(f, fieldnames=CSV_FIELDS)
        w.writeheader()
        for r in records:
            row = asdict(r)
            row["outcome"] = r.outcome.value
            row["wall_seconds"] = ("" if r.wall_seconds is None
                                   else f"{r.wall_seconds:.9f}")
            w.writerow(row)


def read_csv(path: str) -> list[BenchRecord]:
    with open(path) as f:
        body = "".join(line for line in f if not line.startswith("#"))
    records = []
    for row in csv.DictReader(io.StringIO(body)):
        records.append(BenchRecord(
            task=row["task"], n=int(row["n"]), precision=row["precision"],
            threads=int(row["threads"]), repetitions=int(row["repetitions"]),
            wall_seconds=(float(row["wall_seconds"])
                          if row["wall_seconds"] else None),
            outcome=Outcome(row["outcome"]), gate_total=int(row["gate_total"]),
            seed=int(row["seed"]), timestamp=float(row["timestamp"])))
    return records


def records_json(records: list[BenchRecord],
                 cfg: BenchConfig | None = None) -> str:
    rows = []
    for r in records:
        row = asdict(r)
        row["outcome"] = r.outcome.value
        rows.append(row)
    doc = {"records": rows}
    if cfg is not None:
        doc["config"] = cfg.describe()
    return json.dumps(doc, indent=2)
