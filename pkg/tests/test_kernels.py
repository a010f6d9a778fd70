import numpy as np
import pytest

from csdiscord import kernels, qmat
from conftest import BACKENDS, random_hermitian


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


def test_jacobi_reconstructs(backend, rng):
    for _ in range(200):
        h = random_hermitian(rng)
        w, v, sweeps = backend.jacobi_eigh4(h, 100)
        assert sweeps >= 0
        assert np.abs(v @ np.diag(w) @ v.conj().T - h).max() < 1e-12
        assert np.abs(v.conj().T @ v - np.eye(4)).max() < 1e-12


def test_jacobi_already_diagonal(backend):
    w, v, sweeps = backend.jacobi_eigh4(np.diag([3.0, -1.0, 2.0, 0.5]).astype(complex), 100)
    assert sweeps == 0
    np.testing.assert_array_equal(w, [3.0, -1.0, 2.0, 0.5])


def test_jacobi_reports_sweep_cap(backend, rng):
    h = random_hermitian(rng)
    _, _, sweeps = backend.jacobi_eigh4(h, 0)
    assert sweeps == -1


def _literal_cond_entropy(rho, n):
    # projector construction on the second qubit, independent of the kernel
    ns = n[0] * qmat.SX + n[1] * qmat.SY + n[2] * qmat.SZ
    total = 0.0
    for s in (1, -1):
        op = qmat.kron(qmat.I2, (qmat.I2 + s * ns) / 2)
        post = op @ rho @ op
        pk = np.trace(post).real
        if pk > 1e-14:
            lam = np.linalg.eigvalsh(qmat.partial_trace(post, 0) / pk)
            lam = lam[lam > 1e-300]
            total -= pk * np.sum(lam * np.log2(lam))
    return total


def test_cond_entropy_matches_projectors(backend, rng):
    from csdiscord.localops import bloch_decompose
    from csdiscord.states import random_state

    for _ in range(20):
        rho = np.asarray(random_state(rng))
        bc = bloch_decompose(rho)
        dirs = rng.normal(size=(16, 3))
        dirs /= np.linalg.norm(dirs, axis=1)[:, None]
        got = backend.cond_entropy_dirs(bc.a, bc.t, bc.b, dirs)
        want = [_literal_cond_entropy(rho, n) for n in dirs]
        np.testing.assert_allclose(got, want, atol=1e-12)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
def test_backends_agree(rng):
    py, cy = BACKENDS
    for _ in range(50):
        h = random_hermitian(rng)
        w1 = np.sort(py.jacobi_eigh4(h, 100)[0])
        w2 = np.sort(cy.jacobi_eigh4(h, 100)[0])
        np.testing.assert_allclose(w1, w2, atol=1e-13)
        a, b = rng.uniform(-0.4, 0.4, 3), rng.uniform(-0.4, 0.4, 3)
        t = rng.uniform(-0.3, 0.3, (3, 3))
        d = rng.normal(size=(64, 3))
        d /= np.linalg.norm(d, axis=1)[:, None]
        np.testing.assert_allclose(py.cond_entropy_dirs(a, t, b, d), cy.cond_entropy_dirs(a, t, b, d), atol=1e-14)
