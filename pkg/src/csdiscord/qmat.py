"""Fixed-size complex linear algebra for one- and two-qubit operators.

Matrices are plain ``numpy`` ``complex128`` arrays of shape (2, 2) or
(4, 4).  Two-qubit indices follow the computational basis
|00>, |01>, |10>, |11>, with the first qubit as the most significant bit.
"""
from typing import NamedTuple

import numpy as np

from .errors import DomainError, NoConvergence, NotHermitian
from .kernels import jacobi_eigh4

HERMITIAN_TOL = 1e-10
MAX_SWEEPS = 100

I2 = np.eye(2, dtype=np.complex128)
SX = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SY = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SZ = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULI = (I2, SX, SY, SZ)

for _m in PAULI:
    _m.setflags(write=False)


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_cmat(m, shape=None):
    """Return ``m`` as a finite complex128 array, checking its shape."""
    a = np.asarray(m, dtype=np.complex128)
    if shape is not None and a.shape != shape:
        raise ValueError(f"expected shape {shape}, got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def kron(a, b):
    """Kronecker product; row index of ``a`` is the slow index."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    return np.einsum("ij,kl->ikjl", a, b).reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])


def dagger(m):
    return np.conj(np.asarray(m)).T


def hermiticity_residual(m):
    """Max entry of |m - m^H| and the index where it occurs."""
    d = np.abs(m - dagger(m))
    idx = np.unravel_index(int(np.argmax(d)), d.shape)
    return float(d[idx]), (int(idx[0]), int(idx[1]))


def herm_eig(m, tol=HERMITIAN_TOL):
    """Eigendecomposition of a Hermitian 4x4 matrix.

    The input is symmetrized as (m + m^H)/2 before a cyclic Jacobi
    iteration.  Eigenvalues are returned in ascending order with the
    matching eigenvectors as columns.

    Raises
    ------
    NotHermitian
        If any entry of m - m^H exceeds ``tol`` in modulus.
    NoConvergence
        If the Jacobi iteration needs more than 100 sweeps.
    """
    a = as_cmat(m, (4, 4))
    res, idx = hermiticity_residual(a)
    if res > tol:
        raise NotHermitian(res, idx)
    a = 0.5 * (a + dagger(a))
    w, v, sweeps = jacobi_eigh4(a, MAX_SWEEPS)
    if sweeps < 0:
        raise NoConvergence(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(np.asarray(w)[order], np.asarray(v)[:, order])


def eigvalsh(m):
    """Ascending eigenvalues of a Hermitian 2x2 or 4x4 matrix."""
    a = np.asarray(m, dtype=np.complex128)
    if a.shape == (2, 2):
        res, idx = hermiticity_residual(a)
        if res > HERMITIAN_TOL:
            raise NotHermitian(res, idx)
        mean = 0.5 * (a[0, 0].real + a[1, 1].real)
        half = 0.5 * (a[0, 0].real - a[1, 1].real)
        off = 0.5 * (a[0, 1] + np.conj(a[1, 0]))
        rad = float(np.hypot(half, abs(off)))
        return np.array([mean - rad, mean + rad])
    return herm_eig(a).eigenvalues


def matrix_function(m, f):
    """Apply a real function to a Hermitian 4x4 matrix through its spectrum.

    ``f`` is called once with the array of eigenvalues and must return an
    array of the same length.  Non-finite results raise ``DomainError``.
    """
    w, v = herm_eig(m)
    with np.errstate(all="ignore"):
        try:
            fw = np.asarray(f(w), dtype=np.float64)
        except (ValueError, ArithmeticError) as exc:
            raise DomainError(f"function undefined on spectrum {w}: {exc}") from exc
    if fw.shape != w.shape or not np.all(np.isfinite(fw)):
        raise DomainError(f"function undefined on spectrum {w}")
    return (v * fw) @ dagger(v)


def partial_trace(rho, keep):
    """Reduced 2x2 operator of a two-qubit operator.

    ``keep`` is ``"first"``/``0`` or ``"second"``/``1``: the subsystem
    that survives.
    """
    t = np.asarray(rho, dtype=np.complex128).reshape(2, 2, 2, 2)
    k = subsystem_index(keep)
    if k == 0:
        return np.einsum("ijkj->ik", t)
    return np.einsum("ijil->jl", t)


def subsystem_index(which):
    if which in (0, "first", "A", "a"):
        return 0
    if which in (1, "second", "B", "b"):
        return 1
    raise ValueError(f"unknown subsystem {which!r}; use 'first' or 'second'")
