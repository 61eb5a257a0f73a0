"""Pure-numpy fallback kernels, API-identical to the compiled module.

Index arithmetic matches ``_kernels.pyx`` exactly; arithmetic is carried
out in complex128 and rounded to the vector dtype on store.
"""
from __future__ import annotations

import numpy as np

BACKEND = "python"


def _pair_idx(t: int, p0: int, p1: int) -> tuple[np.ndarray, np.ndarray]:
    p = np.arange(p0, p1, dtype=np.int64)
    step = 1 << t
    low = p & (step - 1)
    i0 = ((p - low) << 1) | low
    return i0, i0 | step


def apply1q(vec, t, u, p0, p1):
    i0, i1 = _pair_idx(t, p0, p1)
    a = vec[i0].astype(np.complex128)
    b = vec[i1].astype(np.complex128)
    vec[i0] = u[0, 0] * a + u[0, 1] * b
    vec[i1] = u[1, 0] * a + u[1, 1] * b


def apply1q_diag(vec, t, d0, d1, p0, p1):
    i0, i1 = _pair_idx(t, p0, p1)
    vec[i0] = d0 * vec[i0].astype(np.complex128)
    vec[i1] = d1 * vec[i1].astype(np.complex128)


def _quad_base(ta: int, tb: int, p0: int, p1: int) -> np.ndarray:
    sa, sb = 1 << ta, 1 << tb
    slo, shi = min(sa, sb), max(sa, sb)
    p = np.arange(p0, p1, dtype=np.int64)
    low = p & (slo - 1)
    p = ((p - low) << 1) | low
    low = p & (shi - 1)
    return ((p - low) << 1) | low


def apply2q(vec, ta, tb, u, p0, p1):
    i0 = _quad_base(ta, tb, p0, p1)
    sa, sb = 1 << ta, 1 << tb
    idx = [i0, i0 | sa, i0 | sb, i0 | sa | sb]
    v = [vec[i].astype(np.complex128) for i in idx]
    for j in range(4):
        vec[idx[j]] = u[j, 0] * v[0] + u[j, 1] * v[1] + u[j, 2] * v[2] + u[j, 3] * v[3]


def apply2q_cx(vec, ta, tb, p0, p1):
    i1 = _quad_base(ta, tb, p0, p1) | (1 << ta)
    i3 = i1 | (1 << tb)
    a = vec[i1].copy()
    vec[i1] = vec[i3]
    vec[i3] = a


def apply2q_cphase(vec, ta, tb, d3, p0, p1):
    i3 = _quad_base(ta, tb, p0, p1) | (1 << ta) | (1 << tb)
    vec[i3] = d3 * vec[i3].astype(np.complex128)


def apply2q_swap(vec, ta, tb, p0, p1):
    i0 = _quad_base(ta, tb, p0, p1)
    i1 = i0 | (1 << ta)
    i2 = i0 | (1 << tb)
    a = vec[i1].copy()
    vec[i1] = vec[i2]
    vec[i2] = a


def apply2q_fsim(vec, ta, tb, c, s, ph, p0, p1):
    i0 = _quad_base(ta, tb, p0, p1)
    sa, sb = 1 << ta, 1 << tb
    i1, i2, i3 = i0 | sa, i0 | sb, i0 | sa | sb
    ms = -1j * s
    v1 = vec[i1].astype(np.complex128)
    v2 = vec[i2].astype(np.complex128)
    vec[i1] = c * v1 + ms * v2
    vec[i2] = ms * v1 + c * v2
    vec[i3] = ph * vec[i3].astype(np.complex128)
