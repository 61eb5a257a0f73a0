# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled gate-application kernels.

Each function updates a slice of the pair (or quadruple) index space
[p0, p1), so callers can fan chunks out to threads; distinct chunks touch
disjoint amplitudes.  Arithmetic is double complex regardless of storage
dtype; single-precision states are rounded to storage on write.
"""
import numpy as np

BACKEND = "cython"

ctypedef fused cplx:
    float complex
    double complex


def apply1q(cplx[::1] vec, int t, double complex[:, ::1] u,
            long p0, long p1):
    cdef long p, i0, i1, low
    cdef long step = 1 << t
    cdef double complex u00 = u[0, 0], u01 = u[0, 1]
    cdef double complex u10 = u[1, 0], u11 = u[1, 1]
    cdef double complex a, b
    with nogil:
        for p in range(p0, p1):
            low = p & (step - 1)
            i0 = ((p - low) << 1) | low
            i1 = i0 | step
            a = vec[i0]
            b = vec[i1]
            vec[i0] = <cplx> (u00 * a + u01 * b)
            vec[i1] = <cplx> (u10 * a + u11 * b)


def apply1q_diag(cplx[::1] vec, int t, double complex d0, double complex d1,
                 long p0, long p1):
    cdef long p, i0, low
    cdef long step = 1 << t
    with nogil:
        for p in range(p0, p1):
            low = p & (step - 1)
            i0 = ((p - low) << 1) | low
            vec[i0] = <cplx> (d0 * vec[i0])
            vec[i0 | step] = <cplx> (d1 * vec[i0 | step])


cdef inline long _quad_base(long p, long slo, long shi) nogil:
    cdef long low = p & (slo - 1)
    p = ((p - low) << 1) | low
    low = p & (shi - 1)
    return ((p - low) << 1) | low


def apply2q(cplx[::1] vec, int ta, int tb, double complex[:, ::1] u,
            long p0, long p1):
    # matrix index convention: j = bit(ta) + 2 * bit(tb)
    cdef long sa = 1 << ta, sb = 1 << tb
    cdef long slo = sa if sa < sb else sb
    cdef long shi = sb if sa < sb else sa
    cdef long p, i0, i1, i2, i3
    cdef double complex v0, v1, v2, v3
    with nogil:
        for p in range(p0, p1):
            i0 = _quad_base(p, slo, shi)
            i1 = i0 | sa
            i2 = i0 | sb
            i3 = i1 | sb
            v0 = vec[i0]
            v1 = vec[i1]
            v2 = vec[i2]
            v3 = vec[i3]
            vec[i0] = <cplx> (u[0, 0] * v0 + u[0, 1] * v1 + u[0, 2] * v2 + u[0, 3] * v3)
            vec[i1] = <cplx> (u[1, 0] * v0 + u[1, 1] * v1 + u[1, 2] * v2 + u[1, 3] * v3)
            vec[i2] = <cplx> (u[2, 0] * v0 + u[2, 1] * v1 + u[2, 2] * v2 + u[2, 3] * v3)
            vec[i3] = <cplx> (u[3, 0] * v0 + u[3, 1] * v1 + u[3, 2] * v2 + u[3, 3] * v3)


def apply2q_cx(cplx[::1] vec, int ta, int tb, long p0, long p1):
    # control = ta bit, target = tb bit: swap |10> <-> |11> (j = 1 and 3)
    cdef long sa = 1 << ta, sb = 1 << tb
    cdef long slo = sa if sa < sb else sb
    cdef long shi = sb if sa < sb else sa
    cdef long p, i1, i3
    cdef cplx tmp
    with nogil:
        for p in range(p0, p1):
            i1 = _quad_base(p, slo, shi) | sa
            i3 = i1 | sb
            tmp = vec[i1]
            vec[i1] = vec[i3]
            vec[i3] = tmp


def apply2q_cphase(cplx[::1] vec, int ta, int tb, double complex d3,
                   long p0, long p1):
    cdef long sa = 1 << ta, sb = 1 << tb
    cdef long slo = sa if sa < sb else sb
    cdef long shi = sb if sa < sb else sa
    cdef long p, i3
    with nogil:
        for p in range(p0, p1):
            i3 = _quad_base(p, slo, shi) | sa | sb
            vec[i3] = <cplx> (d3 * vec[i3])


def apply2q_swap(cplx[::1] vec, int ta, int tb, long p0, long p1):
    cdef long sa = 1 << ta, sb = 1 << tb
    cdef long slo = sa if sa < sb else sb
    cdef long shi = sb if sa < sb else sa
    cdef long p, i1, i2
    cdef cplx tmp
    with nogil:
        for p in range(p0, p1):
            i1 = _quad_base(p, slo, shi) | sa
            i2 = (i1 ^ sa) | sb
            tmp = vec[i1]
            vec[i1] = vec[i2]
            vec[i2] = tmp


def apply2q_fsim(cplx[::1] vec, int ta, int tb, double c, double s,
                 double complex ph, long p0, long p1):
    cdef long sa = 1 << ta, sb = 1 << tb
    cdef long slo = sa if sa < sb else sb
    cdef long shi = sb if sa < sb else sa
    cdef long p, i0, i1, i2, i3
    cdef double complex v1, v2, ms = -1j * s
    with nogil:
        for p in range(p0, p1):
            i0 = _quad_base(p, slo, shi)
            i1 = i0 | sa
            i2 = i0 | sb
            i3 = i1 | sb
            v1 = vec[i1]
            v2 = vec[i2]
            vec[i1] = <cplx> (c * v1 + ms * v2)
            vec[i2] = <cplx> (ms * v1 + c * v2)
            vec[i3] = <cplx> (ph * vec[i3])
