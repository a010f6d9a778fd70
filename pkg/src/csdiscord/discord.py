"""Entropies and the closed-form discord of the real-X nanopore family.

All logarithms are base 2.  The family is the real X state

    diag(1/4 + p + q, 1/4 - q, 1/4 - q, 1/4 - p + q)
    rho14 = 2u sin(2 phi) - r cos(2 phi),  rho23 = r

reached from the nanopore CS state by R = H (x) H followed by the
z-phase rotation with phi = -atan2(2u, r)/2.
"""
from dataclasses import dataclass
import enum
import math

import numpy as np

from . import qmat
from .errors import AnalyticNotApplicable, DomainError, NegativeEigenvalue
from .states import XParams, validate_density, x_matrix

CLAMP = 1e-10
SUM_TOL = 1e-9
Q_CLAMP = 1e-9


class Branch(str, enum.Enum):
    Z = "Z"
    XY = "XY"


@dataclass(frozen=True)
class DiscordResult:
    """Discord in bits with the two candidate branch values.

    ``q1`` is the value for a sigma_z measurement; ``q2`` the value for the
    competing branch (analytic: the xy-plane measurement; oracle: the free
    optimum over the Bloch sphere).  ``s`` and ``sr`` are the entropies of
    the full and measured-reduced states.
    """

    q: float
    q1: float
    q2: float
    branch: Branch
    s: float
    sr: float

    def as_dict(self):
        return {
            "Q": self.q,
            "Q1": self.q1,
            "Q2": self.q2,
            "branch": self.branch.value,
            "S": self.s,
            "Sr": self.sr,
        }


def make_result(q1, q2, s, sr):
    """Assemble a result from the two branch values, clamping noise at 0."""
    q1 = float(q1)
    q2 = float(q2)
    branch = Branch.Z if q1 <= q2 else Branch.XY
    q = min(q1, q2)
    if -Q_CLAMP <= q < 0.0:
        q = 0.0
    return DiscordResult(q, q1, q2, branch, float(s), float(sr))


def _xlog2x(x):
    return 0.0 if x <= 0.0 else x * math.log2(x)


def entropy_bits(eigenvalues):
    """von Neumann entropy of a spectrum, 0 log 0 = 0.

    Values in [-1e-10, 0) are treated as zero; anything lower raises
    ``NegativeEigenvalue``.  The spectrum must sum to 1 within 1e-9.
    """
    lam = np.asarray(eigenvalues, dtype=np.float64).ravel()
    if lam.size and lam.min() < -CLAMP:
        raise NegativeEigenvalue(lam.min())
    if abs(lam.sum() - 1.0) > SUM_TOL:
        raise DomainError(f"eigenvalues sum to {lam.sum()!r}, not 1")
    return -sum(_xlog2x(x) for x in lam)


def binary_entropy(x):
    return -_xlog2x(x) - _xlog2x(1.0 - x)


def reduced_entropy(p):
    """Entropy of a single qubit with populations 1/2 + p and 1/2 - p."""
    if abs(p) > 0.5:
        raise DomainError(f"|p| = {abs(p)} exceeds 1/2")
    return binary_entropy(0.5 + p)


def von_neumann_entropy(rho):
    a = np.asarray(rho, dtype=np.complex128)
    return entropy_bits(qmat.eigvalsh(a))


def mutual_information(rho):
    """S(rho_A) + S(rho_B) - S(rho) in bits."""
    rho = validate_density(rho)
    sa = von_neumann_entropy(qmat.partial_trace(rho, "first"))
    sb = von_neumann_entropy(qmat.partial_trace(rho, "second"))
    return sa + sb - entropy_bits(rho.eigenvalues)


@dataclass(frozen=True)
class NanoporeFamilyParams:
    """Correlation functions p, q, r, u and the reduction angle phi."""

    p: float
    q: float
    r: float
    u: float
    phi: float

    @classmethod
    def from_correlations(cls, p, q, r, u):
        """Family parameters with the angle that removes the xy cross terms."""
        phi = 0.0 if (u == 0.0 and r == 0.0) else -0.5 * math.atan2(2.0 * u, r)
        return cls(float(p), float(q), float(r), float(u), phi)

    @classmethod
    def from_real_x(cls, q):
        """Family parameters for a real X state with equal middle diagonals.

        The outer coherence ``q4`` is carried by ``u`` with phi = pi/4, where
        2u sin(2 phi) - r cos(2 phi) = 2u.
        """
        q1, q2, q3, q4, q5, q6, q7 = q
        qq = 0.25 - 0.5 * (q2 + q3)
        return cls(q1 - 0.25 - qq, qq, float(q6), 0.5 * q4, 0.25 * math.pi)

    @property
    def outer(self):
        """The real rho14 coherence 2u sin(2 phi) - r cos(2 phi)."""
        return 2.0 * self.u * math.sin(2.0 * self.phi) - self.r * math.cos(2.0 * self.phi)

    def x_params(self):
        return XParams(
            0.25 + self.p + self.q,
            0.25 - self.q,
            0.25 - self.q,
            self.outer,
            0.0,
            self.r,
            0.0,
        )

    def matrix(self):
        return x_matrix(self.x_params())

    def state(self):
        return validate_density(self.matrix())


def family_eigenvalues(f):
    """Spectrum of the reduced family state, in closed form (unsorted)."""
    rad = math.hypot(f.p, f.outer)
    return np.array(
        [
            0.25 + f.q + rad,
            0.25 + f.q - rad,
            0.25 - f.q + abs(f.r),
            0.25 - f.q - abs(f.r),
        ]
    )


def _ratio_term(num, den):
    # num log2(num/den), removable singularities set to 0
    if num <= 0.0:
        if num < -CLAMP:
            raise NegativeEigenvalue(num)
        return 0.0
    return num * math.log2(num / den)


def discord_family(f):
    """Closed-form discord of the reduced family state.

    Q1 (sigma_z measurement) and Q2 (xy-plane measurement) are both
    evaluated; the discord is the smaller.
    """
    p, q = f.p, f.q
    if abs(p) > 0.5:
        raise DomainError(f"|p| = {abs(p)} exceeds 1/2")
    s = entropy_bits(family_eigenvalues(f))
    sr = reduced_entropy(p)
    q1 = (
        sr
        - s
        - _ratio_term(0.25 + p + q, 0.5 + p)
        - _ratio_term(0.25 - q, 0.5 + p)
        - _ratio_term(0.25 - p + q, 0.5 - p)
        - _ratio_term(0.25 - q, 0.5 - p)
    )
    rad = math.sqrt(p * p + (abs(f.r) + abs(f.outer)) ** 2)
    d1 = 0.5 * (1.0 + 2.0 * rad)
    d2 = 0.5 * (1.0 - 2.0 * rad)
    if d2 < -CLAMP:
        raise NegativeEigenvalue(d2)
    q2 = sr - s - _xlog2x(d1) - _xlog2x(d2)
    return make_result(q1, q2, s, sr)


def reduce_to_family(rho, tol=1e-10):
    """Carry a CS state to the real-X family and return its parameters.

    The path is: read the CS parameters, map them to X parameters
    (the H (x) H image), then apply the z-phase reduction.  Raises
    ``AnalyticNotApplicable`` when the two middle diagonal entries of the
    X image differ by more than ``tol``; ``NotCentrosymmetric`` propagates
    for non-CS input.
    """
    from .localops import cs_to_x_params, phase_reduce_x
    from .states import extract_cs

    rho = validate_density(rho)
    x = cs_to_x_params(extract_cs(rho, tol))
    if abs(x.q2 - x.q3) > tol:
        raise AnalyticNotApplicable(
            f"X image has unequal middle diagonals ({x.q2:.6g} vs {x.q3:.6g}); "
            "use the oracle method"
        )
    return NanoporeFamilyParams.from_real_x(phase_reduce_x(x).real_x)


def analytic_discord(rho, tol=1e-10):
    """Closed-form discord of a CS state whose X image fits the family."""
    return discord_family(reduce_to_family(rho, tol))
