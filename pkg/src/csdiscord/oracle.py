"""Brute-force quantum discord by optimizing projective measurements.

One qubit (the second, unless asked otherwise) is measured along a Bloch
direction n(theta, phi).  A dense (theta, phi) grid is scanned first, then
the best grid point is refined by a shrinking pattern search.  The
conditional entropies are evaluated by the compiled kernel when it is
available (see :mod:`csdiscord.kernels`).
"""
from dataclasses import dataclass, field
from functools import lru_cache
import math

import numpy as np

from . import qmat
from .discord import make_result, mutual_information, von_neumann_entropy
from .kernels import cond_entropy_dirs
from .localops import bloch_decompose
from .states import validate_density

MIN_STEP = 1e-7
MAX_MOVES = 10_000
TINY_PROB = 1e-14


@dataclass(frozen=True)
class MeasurementBasis:
    """Projectors onto +-n with n = (sin t cos f, sin t sin f, cos t)."""

    theta: float
    phi: float

    @property
    def direction(self):
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])

    def projectors(self):
        n = self.direction
        ns = n[0] * qmat.SX + n[1] * qmat.SY + n[2] * qmat.SZ
        return 0.5 * (qmat.I2 + ns), 0.5 * (qmat.I2 - ns)

    def canonical(self):
        """Same direction with theta in [0, pi] and phi in [0, 2 pi)."""
        return basis_from_direction(self.direction)


Z_BASIS = MeasurementBasis(0.0, 0.0)


@dataclass(frozen=True)
class OracleSettings:
    grid: tuple = (64, 128)
    refine_iterations: int = 60
    refine_shrink: float = 0.5
    tol: float = 1e-9

    def __post_init__(self):
        if len(self.grid) != 2 or min(self.grid) < 8:
            raise ValueError(f"grid must be at least 8x8, got {self.grid}")
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")
        if not 0.0 < self.refine_shrink < 1.0:
            raise ValueError("refine_shrink must lie in (0, 1)")


@dataclass
class SearchResult:
    value: float
    basis: MeasurementBasis
    history: list = field(default_factory=list)


@lru_cache(maxsize=8)
def _grid(n_theta, n_phi):
    theta = np.linspace(0.0, math.pi, n_theta)
    phi = np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False)
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    tt = tt.ravel()
    pp = pp.ravel()
    st = np.sin(tt)
    dirs = np.column_stack([st * np.cos(pp), st * np.sin(pp), np.cos(tt)])
    dirs.setflags(write=False)
    return tt, pp, dirs


def _tangent_frame(n):
    # two unit vectors orthogonal to n and to each other
    helper = np.array([1.0, 0.0, 0.0]) if abs(n[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = np.cross(n, helper)
    e1 /= np.linalg.norm(e1)
    return e1, np.cross(n, e1)


def _bloch_for(rho, measured):
    # kernel convention: rows of t index the unmeasured qubit
    bc = bloch_decompose(rho)
    if qmat.subsystem_index(measured) == 1:
        return bc.a, bc.t, bc.b
    return bc.b, bc.t.T.copy(), bc.a


_STEPS = np.array([[1, 0], [-1, 0], [0, 1], [0, -1], [1, 1], [1, -1], [-1, 1], [-1, -1]], dtype=float)


def minimize_conditional_entropy(rho, settings=OracleSettings(), measured="second"):
    """Minimum measured conditional entropy with the search trace.

    ``history`` records the best value after the grid scan and after every
    refinement iteration; it never increases.
    """
    a, t, b = _bloch_for(rho, measured)
    tt, pp, dirs = _grid(*settings.grid)
    vals = cond_entropy_dirs(a, t, b, dirs)
    k = int(np.argmin(vals))
    best = float(vals[k])
    n = dirs[k].copy()
    history = [best]
    # pattern search in the tangent plane at n (no trouble at the poles);
    # one iteration = poll at a fixed step until no neighbour improves
    step = math.pi / (settings.grid[0] - 1)
    for _ in range(settings.refine_iterations):
        if step < MIN_STEP:
            break
        for _ in range(MAX_MOVES):
            e1, e2 = _tangent_frame(n)
            cand = n[None, :] + step * (_STEPS[:, :1] * e1 + _STEPS[:, 1:] * e2)
            cand /= np.linalg.norm(cand, axis=1)[:, None]
            cv = cond_entropy_dirs(a, t, b, cand)
            j = int(np.argmin(cv))
            if not cv[j] < best:
                break
            best = float(cv[j])
            n = cand[j]
        step *= settings.refine_shrink
        history.append(best)
    return SearchResult(best, basis_from_direction(n), history)


def basis_from_direction(n):
    x, y, z = (float(v) for v in n)
    norm = math.sqrt(x * x + y * y + z * z)
    theta = math.acos(max(-1.0, min(1.0, z / norm)))
    phi = math.atan2(y, x) % (2.0 * math.pi) if math.hypot(x, y) > 0.0 else 0.0
    return MeasurementBasis(theta, phi)


def conditional_entropy_after_measurement(rho, basis, measured="second"):
    """sum_k p_k S(rho_other|k) for a projective measurement, built from projectors.

    This is the direct matrix construction; the optimizer uses an
    equivalent Bloch-vector formula.
    """
    m = np.asarray(rho, dtype=np.complex128)
    k = qmat.subsystem_index(measured)
    keep = 1 - k
    total = 0.0
    for proj in basis.projectors():
        op = qmat.kron(qmat.I2, proj) if k == 1 else qmat.kron(proj, qmat.I2)
        post = op @ m @ op
        prob = float(np.trace(post).real)
        if prob <= TINY_PROB:
            continue
        total += prob * von_neumann_entropy(qmat.partial_trace(post, keep) / prob)
    return total


def classical_correlation(rho, settings=OracleSettings(), measured="second"):
    """Maximal classical correlation and the measurement basis achieving it."""
    rho = validate_density(rho)
    res = minimize_conditional_entropy(rho, settings, measured)
    s_other = von_neumann_entropy(qmat.partial_trace(rho, 1 - qmat.subsystem_index(measured)))
    return s_other - res.value, res.basis


def discord_numeric(rho, settings=OracleSettings(), measured="second"):
    """Discord as mutual information minus the optimized classical correlation.

    ``q1`` is the sigma_z-measurement value and ``q2`` the free optimum, so
    ``q`` is their minimum.
    """
    rho = validate_density(rho)
    k = qmat.subsystem_index(measured)
    s = von_neumann_entropy(rho)
    s_measured = von_neumann_entropy(qmat.partial_trace(rho, k))
    res = minimize_conditional_entropy(rho, settings, measured)
    a, t, b = _bloch_for(rho, measured)
    cz = float(cond_entropy_dirs(a, t, b, Z_BASIS.direction[None, :])[0])
    # Q = I - J = S(measured) - S + min conditional entropy
    base = s_measured - s
    return make_result(base + cz, base + res.value, s, s_measured)


def discord_upper_bounds(rho):
    """(S(rho_A), S(rho_B)), used by tests as a sanity bound."""
    return (
        von_neumann_entropy(qmat.partial_trace(rho, 0)),
        von_neumann_entropy(qmat.partial_trace(rho, 1)),
    )


__all__ = [
    "MeasurementBasis",
    "OracleSettings",
    "SearchResult",
    "classical_correlation",
    "conditional_entropy_after_measurement",
    "discord_numeric",
    "minimize_conditional_entropy",
    "mutual_information",
]
