# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels (see ``_pykernels`` for semantics)."""
import numpy as np

from libc.math cimport sqrt, log, fabs

cdef extern from "complex.h" nogil:
    double creal(double complex)
    double cimag(double complex)
    double complex conj(double complex)
    double cabs(double complex)

cdef double LOG2 = log(2.0)


def jacobi_eigh4(m, int max_sweeps=100):
    cdef double complex[:, ::1] a = np.array(m, dtype=np.complex128, order="C")
    cdef Py_ssize_t n = a.shape[0]
    vv = np.eye(n, dtype=np.complex128)
    cdef double complex[:, ::1] v = vv
    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef double scale = 0.0, off, g, theta, t, c, s
    cdef double complex e, ec, akp, akq, apk, aqk
    for p in range(n):
        for q in range(n):
            scale += creal(a[p, q]) * creal(a[p, q]) + cimag(a[p, q]) * cimag(a[p, q])
    scale = sqrt(scale)
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += creal(a[p, q]) * creal(a[p, q]) + cimag(a[p, q]) * cimag(a[p, q])
        if sqrt(2.0 * off) <= 1e-16 * scale:
            w = np.array([creal(a[k, k]) for k in range(n)])
            return w, vv, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = cabs(a[p, q])
                if g == 0.0:
                    continue
                e = a[p, q] / g
                ec = conj(e)
                theta = (creal(a[q, q]) - creal(a[p, p])) / (2.0 * g)
                t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                # columns: A <- A G, G = [[c, s], [-s*ec, c*ec]]
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * ec * akq
                    a[k, q] = s * akp + c * ec * akq
                # rows: A <- G^H A
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * e * aqk
                    a[q, k] = s * apk + c * e * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = creal(a[p, p])
                a[q, q] = creal(a[q, q])
                for k in range(n):
                    akp = v[k, p]
                    akq = v[k, q]
                    v[k, p] = c * akp - s * ec * akq
                    v[k, q] = s * akp + c * ec * akq
    w = np.array([creal(a[k, k]) for k in range(n)])
    return w, vv, -1


cdef inline double _h2(double x) nogil:
    cdef double y, out = 0.0
    if x < 0.0:
        x = 0.0
    elif x > 1.0:
        x = 1.0
    y = 1.0 - x
    if x > 0.0:
        out -= x * log(x)
    if y > 0.0:
        out -= y * log(y)
    return out / LOG2


def cond_entropy_dirs(a, t, b, dirs):
    cdef const double[::1] av = np.ascontiguousarray(a, dtype=np.float64)
    cdef const double[:, ::1] tv = np.ascontiguousarray(t, dtype=np.float64)
    cdef const double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    cdef const double[:, ::1] dv = np.ascontiguousarray(np.atleast_2d(dirs), dtype=np.float64)
    cdef Py_ssize_t n = dv.shape[0], i, j, k
    out = np.zeros(n)
    cdef double[::1] ov = out
    cdef double bn, w, prob, ell, tn[3], vec
    cdef double sgn
    cdef int si
    with nogil:
        for i in range(n):
            bn = 0.0
            for j in range(3):
                bn += bv[j] * dv[i, j]
                tn[j] = 0.0
                for k in range(3):
                    tn[j] += tv[j, k] * dv[i, k]
            for si in range(2):
                sgn = 1.0 if si == 0 else -1.0
                w = 1.0 + sgn * bn
                prob = 0.5 * w
                if prob <= 1e-14:
                    continue
                ell = 0.0
                for j in range(3):
                    vec = av[j] + sgn * tn[j]
                    ell += vec * vec
                ell = sqrt(ell) / w
                if ell > 1.0:
                    ell = 1.0
                ov[i] += prob * _h2(0.5 * (1.0 + ell))
    return out
