"""Validated two-qubit density matrices and the CS / X parameter families.

A centrosymmetric (CS) 4x4 matrix satisfies a[i, j] == a[3 - i, 3 - j]
(zero-based).  A Hermitian unit-trace CS matrix has seven real
parameters p1..p7 laid out as::

    [[p1,       p2 + ip3, p4 + ip5, p6      ],
     [p2 - ip3, 1/2 - p1, p7,       p4 - ip5],
     [p4 - ip5, p7,       1/2 - p1, p2 - ip3],
     [p6,       p4 + ip5, p2 + ip3, p1      ]]

An X matrix is non-zero only on the diagonal and anti-diagonal::

    [[q1,       0,        0,        q4 + iq5    ],
     [0,        q2,       q6 + iq7, 0           ],
     [0,        q6 - iq7, q3,       0           ],
     [q4 - iq5, 0,        0,        1 - q1 - q2 - q3]]
"""
from dataclasses import dataclass
import json
from typing import NamedTuple

import numpy as np

from . import qmat
from .errors import NotCentrosymmetric, NotHermitian, NotPSD, NotXForm, ParseError, TraceNotOne

PATTERN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10


class CSParams(NamedTuple):
    p1: float
    p2: float
    p3: float
    p4: float
    p5: float
    p6: float
    p7: float


class XParams(NamedTuple):
    q1: float
    q2: float
    q3: float
    q4: float
    q5: float
    q6: float
    q7: float


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated two-qubit density matrix.

    Build instances with :func:`validate_density`; the constructor itself
    does not check anything.  ``eigenvalues`` holds the ascending spectrum
    computed during validation.
    """

    m: np.ndarray
    eigenvalues: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return self.m if dtype is None else self.m.astype(dtype)

    def __repr__(self):
        return f"DensityMatrix(\n{np.array2string(self.m, precision=6, suppress_small=True)})"


def validate_density(m, tol=PSD_TOL):
    """Check Hermiticity, unit trace and positivity, in that order.

    Returns a :class:`DensityMatrix` holding a read-only, exactly Hermitian
    copy of ``m``.
    """
    if isinstance(m, DensityMatrix):
        return m
    a = qmat.as_cmat(m, (4, 4))
    res, idx = qmat.hermiticity_residual(a)
    if res > qmat.HERMITIAN_TOL:
        raise NotHermitian(res, idx)
    a = 0.5 * (a + qmat.dagger(a))
    tr = float(np.trace(a).real)
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceNotOne(tr)
    w = qmat.herm_eig(a).eigenvalues
    if w[0] < -tol:
        raise NotPSD(w[0])
    a.setflags(write=False)
    w.setflags(write=False)
    return DensityMatrix(a, w)


def cs_violation(m):
    """Largest |a[i,j] - a[3-i,3-j]| and its (1-based) index pair."""
    a = np.asarray(m, dtype=np.complex128)
    d = np.abs(a - a[::-1, ::-1])
    i, j = np.unravel_index(int(np.argmax(d)), d.shape)
    return float(d[i, j]), (int(i) + 1, int(j) + 1)


def x_violation(m):
    """Largest off-X entry modulus and its (1-based) index pair."""
    a = np.asarray(m, dtype=np.complex128)
    mask = ~(np.eye(4, dtype=bool) | np.eye(4, dtype=bool)[::-1])
    d = np.where(mask, np.abs(a), 0.0)
    i, j = np.unravel_index(int(np.argmax(d)), d.shape)
    return float(d[i, j]), (int(i) + 1, int(j) + 1)


def is_cs(m, tol=PATTERN_TOL):
    return cs_violation(m)[0] <= tol


def is_x(m, tol=PATTERN_TOL):
    return x_violation(m)[0] <= tol


def extract_cs(rho, tol=PATTERN_TOL):
    """Read the seven CS parameters off a density matrix.

    Raises ``NotCentrosymmetric`` (with the worst entry) when the matrix is
    not CS to within ``tol``.
    """
    a = np.asarray(rho, dtype=np.complex128)
    res, idx = cs_violation(a)
    if res > tol:
        raise NotCentrosymmetric(res, idx)
    return CSParams(
        float(a[0, 0].real),
        float(a[0, 1].real),
        float(a[0, 1].imag),
        float(a[0, 2].real),
        float(a[0, 2].imag),
        float(a[0, 3].real),
        float(a[1, 2].real),
    )


def extract_x(rho, tol=PATTERN_TOL):
    a = np.asarray(rho, dtype=np.complex128)
    # rho12, rho13, rho24, rho34 (and by Hermiticity their transposes)
    for i, j in ((0, 1), (0, 2), (1, 3), (2, 3), (1, 0), (2, 0), (3, 1), (3, 2)):
        if abs(a[i, j]) > tol:
            raise NotXForm(abs(a[i, j]), (i + 1, j + 1))
    return XParams(
        float(a[0, 0].real),
        float(a[1, 1].real),
        float(a[2, 2].real),
        float(a[0, 3].real),
        float(a[0, 3].imag),
        float(a[1, 2].real),
        float(a[1, 2].imag),
    )


def cs_matrix(p):
    """The CS matrix for parameters ``p`` without validation."""
    p1, p2, p3, p4, p5, p6, p7 = (float(v) for v in p)
    z12 = complex(p2, p3)
    z13 = complex(p4, p5)
    h = 0.5 - p1
    return np.array(
        [
            [p1, z12, z13, p6],
            [z12.conjugate(), h, p7, z13.conjugate()],
            [z13.conjugate(), p7, h, z12.conjugate()],
            [p6, z13, z12, p1],
        ],
        dtype=np.complex128,
    )


def x_matrix(q):
    """The X matrix for parameters ``q`` without validation."""
    q1, q2, q3, q4, q5, q6, q7 = (float(v) for v in q)
    z14 = complex(q4, q5)
    z23 = complex(q6, q7)
    return np.array(
        [
            [q1, 0, 0, z14],
            [0, q2, z23, 0],
            [0, z23.conjugate(), q3, 0],
            [z14.conjugate(), 0, 0, 1.0 - q1 - q2 - q3],
        ],
        dtype=np.complex128,
    )


def embed_cs(p):
    return validate_density(cs_matrix(p))


def embed_x(q):
    return validate_density(x_matrix(q))


def _gram_state(rng, mask, centro=False):
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    g = np.where(mask, g, 0.0)
    if centro:
        g = 0.5 * (g + g[::-1, ::-1])
    m = g @ qmat.dagger(g)
    return m / np.trace(m).real


def random_cs_state(rng=None):
    """Random CS density matrix as a normalized Gram matrix G G^H, G CS."""
    rng = np.random.default_rng(rng)
    m = _gram_state(rng, np.ones((4, 4), dtype=bool), centro=True)
    # G G^H is CS exactly in exact arithmetic; remove the roundoff
    m = 0.5 * (m + m[::-1, ::-1])
    return validate_density(m)


def random_x_state(rng=None):
    """Random X density matrix as a normalized Gram matrix G G^H, G X-shaped."""
    rng = np.random.default_rng(rng)
    mask = np.eye(4, dtype=bool) | np.eye(4, dtype=bool)[::-1]
    return validate_density(_gram_state(rng, mask))


def random_state(rng=None):
    """Random full-rank two-qubit density matrix (no sparsity pattern)."""
    rng = np.random.default_rng(rng)
    return validate_density(_gram_state(rng, np.ones((4, 4), dtype=bool)))


# ---- file formats -------------------------------------------------------

def state_to_json(rho):
    a = np.asarray(rho, dtype=np.complex128)
    return {"matrix": [[[float(z.real), float(z.imag)] for z in row] for row in a]}


def matrix_from_json(doc):
    """Parse a state or parameter document into a raw 4x4 matrix.

    Accepts ``{"matrix": [[[re, im], ...], ...]}``, ``{"cs": {"p1": ...}}``
    and ``{"x": {"q1": ...}}``.  Validation is left to the caller.
    """
    if not isinstance(doc, dict):
        raise ParseError("state document must be a JSON object")
    try:
        if "matrix" in doc:
            rows = doc["matrix"]
            if len(rows) != 4 or any(len(r) != 4 for r in rows):
                raise ParseError("'matrix' must be 4 rows of 4 [re, im] pairs")
            out = np.empty((4, 4), dtype=np.complex128)
            for i, row in enumerate(rows):
                for j, z in enumerate(row):
                    if len(z) != 2:
                        raise ParseError(f"entry ({i + 1},{j + 1}) is not a [re, im] pair")
                    out[i, j] = complex(float(z[0]), float(z[1]))
            return out
        if "cs" in doc:
            return cs_matrix(CSParams(*(float(doc["cs"][f"p{k}"]) for k in range(1, 8))))
        if "x" in doc:
            return x_matrix(XParams(*(float(doc["x"][f"q{k}"]) for k in range(1, 8))))
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed state document: {exc!r}") from exc
    raise ParseError("state document needs one of the keys 'matrix', 'cs', 'x'")


def load_matrix(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    return matrix_from_json(doc)


def save_state(rho, path):
    with open(path, "w") as fh:
        json.dump(state_to_json(rho), fh, indent=1)
        fh.write("\n")


def params_to_json(params):
    if isinstance(params, CSParams):
        return {"cs": params._asdict()}
    if isinstance(params, XParams):
        return {"x": params._asdict()}
    raise TypeError(f"expected CSParams or XParams, got {type(params).__name__}")
