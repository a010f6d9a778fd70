"""Local unitary machinery linking CS and X states.

Conjugation by R = H (x) H maps every CS matrix to an X matrix and back
(R is real, symmetric and its own inverse).  The parameter maps below give
the same correspondence directly on (p1..p7) <-> (q1..q7).
"""
from dataclasses import dataclass
import math

import numpy as np

from . import qmat
from .errors import NotUnitary
from .states import CSParams, XParams, validate_density

UNITARY_TOL = 1e-12

_H = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / math.sqrt(2.0)
_H.setflags(write=False)


def hadamard2():
    return _H.copy()


def rotation_r():
    """R = H (x) H; every entry is +-1/2."""
    return qmat.kron(_H, _H).real.astype(np.complex128)


def cs_to_x_params(p):
    """X parameters of R rho_CS R for the CS state with parameters ``p``."""
    p1, p2, p3, p4, p5, p6, p7 = p
    s = 0.5 * (p6 + p7)
    d = 0.5 * (p6 - p7)
    return XParams(
        0.25 + p2 + p4 + s,
        0.25 - p2 + p4 - s,
        0.25 + p2 - p4 - s,
        -0.25 + p1 + d,
        -p3 - p5,
        -0.25 + p1 - d,
        p3 - p5,
    )


def x_to_cs_params(q):
    """Inverse of :func:`cs_to_x_params`."""
    q1, q2, q3, q4, q5, q6, q7 = q
    return CSParams(
        0.25 + 0.5 * (q4 + q6),
        -0.25 + 0.5 * (q1 + q3),
        -0.5 * (q5 - q7),
        -0.25 + 0.5 * (q1 + q2),
        -0.5 * (q5 + q7),
        0.25 - 0.5 * (q2 + q3 - q4 + q6),
        0.25 - 0.5 * (q2 + q3 + q4 - q6),
    )


def check_unitary(u, tol=UNITARY_TOL):
    u = qmat.as_cmat(u, (2, 2))
    res = float(np.max(np.abs(qmat.dagger(u) @ u - qmat.I2)))
    if res > tol:
        raise NotUnitary(res)
    return u


def conjugate_local(rho, ua, ub):
    """(ua (x) ub) rho (ua (x) ub)^H, revalidated as a density matrix."""
    u = qmat.kron(check_unitary(ua), check_unitary(ub))
    m = u @ np.asarray(rho, dtype=np.complex128) @ qmat.dagger(u)
    return validate_density(m)


def hadamard_transform(rho):
    """R rho R; CS states come out in X form and vice versa."""
    return conjugate_local(rho, _H, _H)


def z_phase(phi):
    """exp(-i phi sigma_z / 2)."""
    return np.diag([np.exp(-0.5j * phi), np.exp(0.5j * phi)])


@dataclass(frozen=True)
class BlochCoefficients:
    """rho = 1/4 sum_{mu,nu} c[mu,nu] sigma_mu (x) sigma_nu, sigma_0 = I.

    ``a`` and ``b`` are the local Bloch vectors of the first and second
    qubit, ``t`` the 3x3 correlation tensor (row: first qubit).
    """

    c0: float
    a: np.ndarray
    b: np.ndarray
    t: np.ndarray

    def coefficients(self):
        c = np.empty((4, 4))
        c[0, 0] = self.c0
        c[1:, 0] = self.a
        c[0, 1:] = self.b
        c[1:, 1:] = self.t
        return c

    def matrix(self):
        c = self.coefficients()
        m = np.zeros((4, 4), dtype=np.complex128)
        for mu in range(4):
            for nu in range(4):
                if c[mu, nu] != 0.0:
                    m += c[mu, nu] * qmat.kron(qmat.PAULI[mu], qmat.PAULI[nu])
        return 0.25 * m


def bloch_decompose(rho):
    m = np.asarray(rho, dtype=np.complex128)
    c = np.empty((4, 4))
    for mu in range(4):
        for nu in range(4):
            c[mu, nu] = float(np.trace(m @ qmat.kron(qmat.PAULI[mu], qmat.PAULI[nu])).real)
    return BlochCoefficients(1.0, c[1:, 0].copy(), c[0, 1:].copy(), c[1:, 1:].copy())


@dataclass(frozen=True)
class PhaseReduction:
    """Result of making an X state real by local z rotations.

    ``real_x`` has q5 = q7 = 0; applying z_phase(phi_a) (x) z_phase(phi_b)
    to the source state reproduces it.
    """

    real_x: XParams
    phi_a: float
    phi_b: float


def phase_reduce_x(q):
    """Local z rotations that make both X off-diagonals real.

    Under z_phase(phi_a) (x) z_phase(phi_b), rho14 picks up the factor
    exp(-i(phi_a + phi_b)) and rho23 the factor exp(-i(phi_a - phi_b)).
    The sum angle is -atan2(q5, -q4), which for the nanopore X form
    (q4 = -r, q5 = 2u) gives phi_a = phi_b = -atan2(2u, r)/2.  The
    difference angle is the principal value of arg(rho23) folded into
    (-pi/2, pi/2], so an already real rho23 is left untouched.  Resulting
    real off-diagonals keep whatever sign falls out.
    """
    q1, q2, q3, q4, q5, q6, q7 = (float(v) for v in q)
    s = 0.0 if q5 == 0.0 else -math.atan2(q5, -q4)
    d = 0.0
    if q7 != 0.0:
        d = math.atan2(q7, q6)
        if d > 0.5 * math.pi:
            d -= math.pi
        elif d <= -0.5 * math.pi:
            d += math.pi
    z14 = complex(q4, q5) * complex(math.cos(s), -math.sin(s))
    z23 = complex(q6, q7) * complex(math.cos(d), -math.sin(d))
    real_x = XParams(q1, q2, q3, z14.real, 0.0, z23.real, 0.0)
    return PhaseReduction(real_x, _wrap(0.5 * (s + d)), _wrap(0.5 * (s - d)))


def _wrap(angle):
    # map into (-pi, pi]
    a = math.remainder(angle, 2.0 * math.pi)
    return math.pi if a == -math.pi else a
