"""Pure-Python/numpy versions of the hot kernels.

Used when the compiled ``_ckernels`` extension is not available.  Both
implementations expose the same two functions with identical semantics.
"""
import math

import numpy as np

_LOG2 = math.log(2.0)


def jacobi_eigh4(m, max_sweeps=100):
    """Cyclic complex Jacobi on a Hermitian 4x4 matrix.

    Returns ``(w, v, sweeps)`` with unsorted eigenvalues ``w`` and
    eigenvectors as the columns of ``v``.  ``sweeps`` is -1 when the sweep
    cap was hit before convergence.
    """
    a = np.array(m, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    scale = math.sqrt(float(np.sum(a.real**2 + a.imag**2)))
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                z = a[p, q]
                off += z.real * z.real + z.imag * z.imag
        if math.sqrt(2.0 * off) <= 1e-16 * scale:
            return a.diagonal().real.copy(), v, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = abs(apq)
                if g == 0.0:
                    continue
                e = apq / g
                theta = (a[q, q].real - a[p, p].real) / (2.0 * g)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # G acts on columns p, q: [[c, s], [-s*conj(e), c*conj(e)]]
                ec = e.conjugate()
                g2 = np.array([[c, s], [-s * ec, c * ec]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g2
                a[idx, :] = g2.conj().T @ a[idx, :]
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ g2
    return a.diagonal().real.copy(), v, -1


def _h2(x):
    # binary entropy in bits, elementwise, with 0 log 0 = 0
    x = np.clip(x, 0.0, 1.0)
    y = 1.0 - x
    out = np.zeros_like(x)
    m = x > 0.0
    out[m] -= x[m] * np.log(x[m])
    m = y > 0.0
    out[m] -= y[m] * np.log(y[m])
    return out / _LOG2


def cond_entropy_dirs(a, t, b, dirs):
    """Measured conditional entropy for each unit direction in ``dirs``.

    The state is given by its Bloch data: ``a`` (unmeasured qubit),
    ``b`` (measured qubit) and correlation tensor ``t`` with rows indexed
    by the unmeasured qubit.  For direction n the outcomes s = +1, -1
    occur with probability (1 + s b.n)/2 and leave the unmeasured qubit
    with Bloch vector (a + s T n)/(1 + s b.n).
    """
    a = np.asarray(a, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    dirs = np.atleast_2d(np.asarray(dirs, dtype=np.float64))
    bn = dirs @ b
    tn = dirs @ t.T
    total = np.zeros(dirs.shape[0])
    for s in (1.0, -1.0):
        w = 1.0 + s * bn
        prob = 0.5 * w
        vec = a[None, :] + s * tn
        length = np.sqrt(np.sum(vec * vec, axis=1))
        ok = prob > 1e-14
        ell = np.zeros_like(length)
        ell[ok] = length[ok] / w[ok]
        ell = np.minimum(ell, 1.0)
        contrib = np.where(ok, prob * _h2(0.5 * (1.0 + ell)), 0.0)
        total += contrib
    return total
