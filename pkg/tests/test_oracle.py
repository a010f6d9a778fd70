import math

import numpy as np
import pytest

from csdiscord import discord as dc, qmat, states
from csdiscord.localops import conjugate_local, hadamard_transform
from csdiscord.models import (
    NanoporeSettings,
    PseudopureSettings,
    nanopore_correlations,
    nanopore_state,
    pseudopure_state,
)
from csdiscord.oracle import (
    MeasurementBasis,
    OracleSettings,
    Z_BASIS,
    classical_correlation,
    conditional_entropy_after_measurement,
    discord_numeric,
    minimize_conditional_entropy,
)

BELL = np.zeros((4, 4))
BELL[np.ix_([0, 3], [0, 3])] = 0.5
PRODUCT = qmat.kron(np.array([[0.7, 0.1], [0.1, 0.3]]), np.array([[0.6, 0.2j], [-0.2j, 0.4]]))


def _random_unitary(rng):
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    qm, rm = np.linalg.qr(g)
    return qm * (np.diag(rm) / abs(np.diag(rm)))


def test_basis_projectors():
    for theta, phi in [(0.0, 0.0), (1.1, 2.3), (math.pi, 5.0)]:
        plus, minus = MeasurementBasis(theta, phi).projectors()
        np.testing.assert_allclose(plus + minus, np.eye(2), atol=1e-14)
        np.testing.assert_allclose(plus @ plus, plus, atol=1e-14)
        np.testing.assert_allclose(minus @ minus, minus, atol=1e-14)


def test_settings_validation():
    with pytest.raises(ValueError):
        OracleSettings(grid=(4, 128))
    with pytest.raises(ValueError):
        OracleSettings(tol=0.0)


def test_conditional_entropy_product_state():
    sa = dc.von_neumann_entropy(qmat.partial_trace(PRODUCT, 0))
    for basis in (Z_BASIS, MeasurementBasis(0.7, 1.9), MeasurementBasis(2.0, 4.0)):
        assert conditional_entropy_after_measurement(PRODUCT, basis) == pytest.approx(sa, abs=1e-12)


def test_conditional_entropy_bell_z():
    assert conditional_entropy_after_measurement(BELL, Z_BASIS) == pytest.approx(0.0, abs=1e-12)


def test_conditional_entropy_nanopore_z():
    p, q, r, u = nanopore_correlations(NanoporeSettings(20, 1.0, 0.3, 1.0))
    f = dc.NanoporeFamilyParams.from_correlations(p, q, r, u)
    terms = [
        (0.25 + p + q, 0.5 + p),
        (0.25 - q, 0.5 + p),
        (0.25 - p + q, 0.5 - p),
        (0.25 - q, 0.5 - p),
    ]
    expected = -sum(n * math.log2(n / d) for n, d in terms)
    assert conditional_entropy_after_measurement(f.state(), Z_BASIS) == pytest.approx(expected, abs=1e-12)


def test_classical_correlation_examples():
    c, _ = classical_correlation(PRODUCT)
    assert c == pytest.approx(0.0, abs=1e-9)
    c, basis = classical_correlation(BELL)
    assert c == pytest.approx(1.0, abs=1e-9)
    rho = nanopore_state(*nanopore_correlations(NanoporeSettings(20, 1.0, 0.0, 1.0)))
    c, _ = classical_correlation(rho)
    assert c == pytest.approx(dc.mutual_information(rho), abs=1e-9)


def test_discord_numeric_examples():
    assert discord_numeric(np.eye(4) / 4).q == pytest.approx(0.0, abs=1e-12)
    bell = pseudopure_state(PseudopureSettings(1.0, 1 / math.sqrt(2), 0.0))
    np.testing.assert_allclose(bell.m, BELL, atol=1e-15)
    assert discord_numeric(bell).q == pytest.approx(1.0, abs=1e-6)


def test_discord_cs_vs_x(rng):
    for _ in range(20):
        rho = states.random_cs_state(rng)
        assert discord_numeric(rho).q == pytest.approx(discord_numeric(hadamard_transform(rho)).q, abs=1e-6)


def test_local_unitary_invariance(rng):
    worst = 0.0
    for _ in range(200):
        rho = states.random_cs_state(rng)
        out = conjugate_local(rho, _random_unitary(rng), _random_unitary(rng))
        worst = max(worst, abs(discord_numeric(rho).q - discord_numeric(out).q))
    assert worst <= 5e-6


def test_refinement_is_monotone(rng):
    for _ in range(50):
        res = minimize_conditional_entropy(states.random_state(rng))
        assert all(b <= a for a, b in zip(res.history, res.history[1:]))
        assert res.value == res.history[-1]


def test_found_basis_reproduces_value(rng):
    for _ in range(20):
        rho = states.random_state(rng)
        res = minimize_conditional_entropy(rho)
        assert 0.0 <= res.basis.theta <= math.pi and 0.0 <= res.basis.phi < 2 * math.pi
        assert conditional_entropy_after_measurement(rho, res.basis) == pytest.approx(res.value, abs=1e-12)


def test_bounds_on_random_states(rng):
    for _ in range(200):
        rho = states.random_state(rng)
        res = discord_numeric(rho)
        sa = dc.von_neumann_entropy(qmat.partial_trace(rho, 0))
        sb = dc.von_neumann_entropy(qmat.partial_trace(rho, 1))
        assert res.q >= 0.0
        assert res.q <= min(sa, sb) + 1e-9
        assert res.q == min(res.q1, res.q2)


def test_measured_first_is_swapped_second(rng):
    swap = np.eye(4)[[0, 2, 1, 3]]
    for _ in range(20):
        rho = states.random_state(rng)
        swapped = states.validate_density(swap @ rho.m @ swap)
        a = discord_numeric(rho, measured="first").q
        b = discord_numeric(swapped, measured="second").q
        assert a == pytest.approx(b, abs=1e-10)


def test_oracle_vs_analytic_general_family(rng):
    # real-X family states with independent outer coherence
    for _ in range(30):
        rho = states.random_x_state(rng)
        x = states.extract_x(rho)
        m = states.x_matrix((x.q1, 0.5 * (x.q2 + x.q3), 0.5 * (x.q2 + x.q3), x.q4, x.q5, x.q6, x.q7))
        cs = hadamard_transform(states.validate_density(m))
        assert dc.analytic_discord(cs).q == pytest.approx(discord_numeric(cs).q, abs=1e-5)
