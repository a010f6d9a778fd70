"""Generators for three physical families of CS two-qubit states."""
from dataclasses import dataclass
import math
from typing import NamedTuple

import numpy as np

from . import qmat
from .errors import DomainError
from .states import validate_density


@dataclass(frozen=True)
class XxzDmCouplings:
    """Two-spin XXZ couplings with a Dzyaloshinsky-Moriya vector along x."""

    j: float
    jz: float
    dx: float
    beta: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.beta) and self.beta >= 0.0):
            raise DomainError(f"beta must be finite and >= 0, got {self.beta}")


def xxz_dm_hamiltonian(c):
    """H = J(sx sx + sy sy) + Jz sz sz + Dx(sy sz - sz sy) as a 4x4 matrix."""
    j, jz, d = float(c.j), float(c.jz), float(c.dx)
    i = 1j
    return np.array(
        [
            [jz, i * d, -i * d, 0],
            [-i * d, -jz, 2 * j, i * d],
            [i * d, 2 * j, -jz, -i * d],
            [0, -i * d, i * d, jz],
        ],
        dtype=np.complex128,
    )


def gibbs_state(h, beta):
    """exp(-beta H) / Z with the spectrum of -beta H shifted by its maximum.

    Energies are measured from the ground state, so every Boltzmann weight
    lies in (0, 1] and nothing overflows at large beta.
    """
    beta = float(beta)
    if not (math.isfinite(beta) and beta >= 0.0):
        raise DomainError(f"beta must be finite and >= 0, got {beta}")
    w = qmat.herm_eig(h).eigenvalues
    # -beta(H - e_min) has its largest eigenvalue at 0
    shift = w[0]
    m = qmat.matrix_function(h, lambda lam: np.exp(-beta * (lam - shift)))
    return validate_density(m / np.trace(m).real)


class NanoporeCorrelations(NamedTuple):
    p: float
    q: float
    r: float
    u: float


@dataclass(frozen=True)
class NanoporeSettings:
    """N spins in a closed nanopore; ``a * t`` is the dimensionless time."""

    n: int
    a: float = 1.0
    t: float = 0.0
    beta: float = 1.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 3:
            raise DomainError(f"particle count must be an integer >= 3, got {self.n}")


def nanopore_correlations(s):
    at = s.a * s.t
    th = math.tanh(0.5 * s.beta)
    c = math.cos(at)
    # integer powers keep the sign of cos for odd exponents
    c_n1 = c ** (s.n - 1)
    c_n2 = c ** (s.n - 2)
    c2_n2 = math.cos(2.0 * at) ** (s.n - 2)
    return NanoporeCorrelations(
        0.5 * th * c_n1,
        0.125 * th * th * (1.0 + c2_n2),
        0.125 * th * th * (1.0 - c2_n2),
        0.25 * th * c_n2 * math.sin(at),
    )


def nanopore_matrix(p, q, r, u):
    """The nanopore two-spin matrix, unvalidated."""
    lo = complex(0.5 * p, -u)
    hi = complex(0.5 * p, u)
    return np.array(
        [
            [0.25, lo, lo, q - r],
            [hi, 0.25, q + r, hi],
            [hi, q + r, 0.25, hi],
            [q - r, lo, lo, 0.25],
        ],
        dtype=np.complex128,
    )


def nanopore_state(p, q, r, u):
    return validate_density(nanopore_matrix(p, q, r, u))


@dataclass(frozen=True)
class PseudopureSettings:
    """alpha |psi><psi| + (1 - alpha) I/4, psi = a(|00> + |11>) + b(|01> + |10>)."""

    alpha: float
    a: complex
    b: complex = 0.0

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in [0, 1], got {self.alpha}")
        norm = abs(self.a) ** 2 + abs(self.b) ** 2
        if abs(norm - 0.5) > 1e-12:
            raise DomainError(f"|a|^2 + |b|^2 must be 1/2, got {norm!r}")


def pseudopure_state(s):
    psi = np.array([s.a, s.b, s.b, s.a], dtype=np.complex128)
    m = s.alpha * np.outer(psi, psi.conj()) + 0.25 * (1.0 - s.alpha) * np.eye(4)
    return validate_density(m)
