import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from csdiscord import localops as lo, qmat, states
from csdiscord.errors import NotUnitary
from csdiscord.models import nanopore_matrix


def test_hadamard_involution():
    h = lo.hadamard2()
    np.testing.assert_allclose(h @ h, np.eye(2), atol=1e-15)


def test_rotation_r_pattern():
    r = lo.rotation_r()
    signs = np.array([[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]])
    np.testing.assert_allclose(r, signs / 2, atol=1e-15)
    assert np.all(r.imag == 0)
    np.testing.assert_array_equal(r, r.T)
    np.testing.assert_allclose(r @ r, np.eye(4), atol=1e-15)


def test_cs_to_x_mixed():
    assert lo.cs_to_x_params((0.25, 0, 0, 0, 0, 0, 0)) == pytest.approx((0.25, 0.25, 0.25, 0, 0, 0, 0))


def test_x_to_cs_mixed():
    assert lo.x_to_cs_params((0.25, 0.25, 0.25, 0, 0, 0, 0)) == pytest.approx((0.25, 0, 0, 0, 0, 0, 0))


def test_cs_to_x_nanopore():
    p, q, r, u = 0.11, 0.05, 0.02, 0.03
    cs = (0.25, p / 2, -u, p / 2, -u, q - r, q + r)
    x = lo.cs_to_x_params(cs)
    assert x == pytest.approx((0.25 + p + q, 0.25 - q, 0.25 - q, -r, 2 * u, r, 0.0), abs=1e-16)
    assert lo.x_to_cs_params(x) == pytest.approx(cs, abs=1e-16)


def test_parameter_maps_match_conjugation(rng):
    r4 = lo.rotation_r()
    for _ in range(1000):
        rho = states.random_cs_state(rng)
        p = states.extract_cs(rho)
        direct = r4 @ rho.m @ r4
        via_map = states.x_matrix(lo.cs_to_x_params(p))
        assert np.abs(direct - via_map).max() <= 1e-13
        assert np.abs(np.array(states.extract_x(direct)) - lo.cs_to_x_params(p)).max() <= 1e-13
        assert np.abs(np.array(lo.x_to_cs_params(lo.cs_to_x_params(p))) - p).max() <= 1e-14


@settings(max_examples=300, deadline=None)
@given(st.lists(st.floats(-1, 1), min_size=7, max_size=7))
def test_maps_are_inverse(vals):
    p = lo.CSParams(*vals)
    back = lo.x_to_cs_params(lo.cs_to_x_params(p))
    assert np.allclose(back, p, atol=1e-14, rtol=0)
    q = lo.XParams(*vals)
    assert np.allclose(lo.cs_to_x_params(lo.x_to_cs_params(q)), q, atol=1e-14, rtol=0)


def test_conjugate_identity(rng):
    rho = states.random_state(rng)
    np.testing.assert_allclose(lo.conjugate_local(rho, np.eye(2), np.eye(2)).m, rho.m, atol=1e-15)


def test_hadamard_maps_cs_to_x_and_back(rng):
    for _ in range(200):
        rho = states.random_cs_state(rng)
        x = lo.hadamard_transform(rho)
        assert states.is_x(x)
        back = lo.hadamard_transform(x)
        assert np.abs(back.m - rho.m).max() <= 1e-13
        assert states.is_cs(back)


def _random_unitary(rng):
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    qm, rm = np.linalg.qr(g)
    return qm * (np.diag(rm) / abs(np.diag(rm)))


def test_conjugation_preserves_trace_and_spectrum(rng):
    for _ in range(200):
        rho = states.random_state(rng)
        out = lo.conjugate_local(rho, _random_unitary(rng), _random_unitary(rng))
        assert abs(np.trace(out.m) - 1) <= 1e-13
        assert np.abs(out.eigenvalues - rho.eigenvalues).max() <= 1e-12


def test_not_unitary():
    with pytest.raises(NotUnitary):
        lo.conjugate_local(np.eye(4) / 4, np.eye(2) * 1.01, np.eye(2))


def test_bloch_mixed():
    c = lo.bloch_decompose(np.eye(4) / 4).coefficients()
    expect = np.zeros((4, 4))
    expect[0, 0] = 1
    np.testing.assert_allclose(c, expect, atol=1e-16)


def test_bloch_cs_coefficients():
    p1, p2, p3, p4, p5, p6, p7 = 0.2, 0.01, -0.02, 0.03, 0.04, 0.05, -0.06
    bc = lo.bloch_decompose(states.cs_matrix((p1, p2, p3, p4, p5, p6, p7)))
    c = bc.coefficients()
    expect = np.zeros((4, 4))
    expect[0, 0] = 1
    expect[1, 0] = 4 * p4
    expect[0, 1] = 4 * p2
    expect[1, 1] = 2 * (p6 + p7)
    expect[2, 2] = 2 * (p7 - p6)
    expect[3, 3] = 4 * p1 - 1
    expect[3, 2] = -4 * p3
    expect[2, 3] = -4 * p5
    np.testing.assert_allclose(c, expect, atol=1e-15)


def test_bloch_x_coefficients():
    q1, q2, q3, q4, q5, q6, q7 = 0.3, 0.2, 0.1, 0.05, 0.01, 0.02, -0.03
    c = lo.bloch_decompose(states.x_matrix((q1, q2, q3, q4, q5, q6, q7))).coefficients()
    expect = np.zeros((4, 4))
    expect[0, 0] = 1
    expect[3, 0] = -(1 - 2 * (q1 + q2))
    expect[0, 3] = -(1 - 2 * (q1 + q3))
    expect[1, 1] = 2 * (q4 + q6)
    expect[2, 2] = 2 * (q6 - q4)
    expect[3, 3] = 1 - 2 * (q2 + q3)
    expect[1, 2] = -2 * (q5 - q7)
    expect[2, 1] = -2 * (q5 + q7)
    np.testing.assert_allclose(c, expect, atol=1e-15)


def test_hadamard_swaps_bloch_axes(rng):
    # H sx H = sz, H sy H = -sy: swap x<->z, negate y, on both qubits
    perm = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0]], dtype=float)
    for _ in range(50):
        rho = states.random_state(rng)
        c = lo.bloch_decompose(rho).coefficients()
        c2 = lo.bloch_decompose(lo.hadamard_transform(rho)).coefficients()
        np.testing.assert_allclose(c2, perm @ c @ perm.T, atol=1e-14)


def test_bloch_reconstruction(rng):
    for _ in range(200):
        rho = states.random_state(rng)
        bc = lo.bloch_decompose(rho)
        assert bc.c0 == 1.0
        assert np.abs(bc.matrix() - rho.m).max() <= 1e-13


def test_nanopore_image_cross_terms():
    # direct conjugation gives -4u (sx sy + sy sx) inside the 1/4[...] bracket
    p, q, r, u = 0.11, 0.05, 0.02, 0.03
    c = lo.bloch_decompose(lo.rotation_r() @ nanopore_matrix(p, q, r, u) @ lo.rotation_r()).coefficients()
    assert c[1, 2] == pytest.approx(-4 * u, abs=1e-15)
    assert c[2, 1] == pytest.approx(-4 * u, abs=1e-15)
    assert c[2, 2] == pytest.approx(4 * r, abs=1e-15)
    assert c[3, 3] == pytest.approx(4 * q, abs=1e-15)
    assert c[3, 0] == pytest.approx(2 * p, abs=1e-15)


def test_phase_reduce_trivial():
    q = lo.XParams(0.3, 0.2, 0.1, 0.05, 0.0, -0.02, 0.0)
    red = lo.phase_reduce_x(q)
    assert (red.phi_a, red.phi_b) == (0.0, 0.0)
    assert red.real_x == q


@pytest.mark.parametrize("r,u", [(0.02, 0.03), (0.05, -0.01), (0.0, 0.04), (0.03, 0.0)])
def test_phase_reduce_nanopore(r, u):
    p, q = 0.1, 0.04
    x = lo.XParams(0.25 + p + q, 0.25 - q, 0.25 - q, -r, 2 * u, r, 0.0)
    red = lo.phase_reduce_x(x)
    phi = -0.5 * math.atan2(2 * u, r) if (u or r) else 0.0
    assert red.phi_a == pytest.approx(phi, abs=1e-15)
    assert red.phi_b == pytest.approx(phi, abs=1e-15)
    assert red.real_x.q4 == pytest.approx(2 * u * math.sin(2 * phi) - r * math.cos(2 * phi), abs=1e-15)
    assert red.real_x.q6 == pytest.approx(r, abs=1e-15)
    assert red.real_x[:3] == x[:3]


def test_phase_reduce_matches_conjugation(rng):
    for _ in range(300):
        rho = states.random_x_state(rng)
        q = states.extract_x(rho)
        red = lo.phase_reduce_x(q)
        assert -math.pi < red.phi_a <= math.pi and -math.pi < red.phi_b <= math.pi
        out = lo.conjugate_local(rho, lo.z_phase(red.phi_a), lo.z_phase(red.phi_b))
        assert np.abs(out.m - states.x_matrix(red.real_x)).max() <= 1e-12
        assert abs(out.m[0, 3].imag) <= 1e-14 and abs(out.m[1, 2].imag) <= 1e-14
        assert abs(red.real_x.q4) == pytest.approx(abs(complex(q.q4, q.q5)), abs=1e-15)
        assert abs(red.real_x.q6) == pytest.approx(abs(complex(q.q6, q.q7)), abs=1e-15)
        assert np.abs(out.eigenvalues - rho.eigenvalues).max() <= 1e-12
        for k in (0, 1):
            np.testing.assert_allclose(
                np.diag(qmat.partial_trace(out, k)), np.diag(qmat.partial_trace(rho, k)), atol=1e-12
            )
