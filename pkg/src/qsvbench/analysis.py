"""Log-linear scaling fits and cross-configuration speedup ratios.

The model is ln(t) = a + b * N; an ideal statevector engine approaches
b = ln(2) at large N, and exp(a) is the constant-factor overhead.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, asdict

import numpy as np
from scipy import stats

from .bench import BenchRecord, Outcome
from .errors import InsufficientPoints, NoOverlap

__all__ = ["ScalingFit", "fit_scaling", "speedup_ratio"]

MIN_FIT_POINTS = 4


@dataclass(frozen=True)
class ScalingFit:
    a: float
    b: float
    stderr_a: float
    stderr_b: float
    n_window: tuple[int, int]
    points_used: int
    r_squared: float

    def to_json(self) -> str:
        d = asdict(self)
        d["n_window"] = list(self.n_window)
        return json.dumps(d, indent=2)


def _ok_points(records: list[BenchRecord]) -> list[tuple[int, float]]:
    pts = {}
    for r in records:
        if r.outcome is Outcome.OK and r.wall_seconds and r.wall_seconds > 0:
            pts[r.n] = r.wall_seconds
    return sorted(pts.items())


def fit_scaling(records: list[BenchRecord],
                n_min: int | None = None) -> ScalingFit:
    """OLS of ln(wall_seconds) on N.

    Window: points with N >= n_min; when n_min is None it defaults to the
    smallest N whose time reaches 1 s (the large-N regime), falling back
    to the largest 5 points if none does.
    """
    pts = _ok_points(records)
    if n_min is None:
        above = [n for n, t in pts if t >= 1.0]
        if above:
            n_min = above[0]
        else:
            pts_win = pts[-5:]
            n_min = pts_win[0][0] if pts_win else 0
    window = [(n, t) for n, t in pts if n >= n_min]
    if len(window) < MIN_FIT_POINTS:
        raise InsufficientPoints(
            f"{len(window)} usable points in window (need {MIN_FIT_POINTS})")
    ns = np.array([n for n, _ in window], dtype=float)
    ys = np.log([t for _, t in window])
    res = stats.linregress(ns, ys)
    return ScalingFit(
        a=float(res.intercept), b=float(res.slope),
        stderr_a=float(res.intercept_stderr), stderr_b=float(res.stderr),
        n_window=(int(ns[0]), int(ns[-1])), points_used=len(window),
        r_squared=float(res.rvalue ** 2))


def speedup_ratio(base: list[BenchRecord],
                  other: list[BenchRecord]) -> dict[int, float]:
    """Per-N wall-time ratio base/other over the shared OK points.
    Values above 1 mean `other` is faster.
    """
    tb = dict(_ok_points(base))
    to = dict(_ok_points(other))
    shared = sorted(set(tb) & set(to))
    if not shared:
        raise NoOverlap("no shared N with OK outcomes")
    return {n: tb[n] / to[n] for n in shared}
