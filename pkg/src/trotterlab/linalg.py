"""Dense complex matrices: norms, commutators, exponentials, determinants.

Matrices are plain complex128 numpy arrays, validated at the API edges by
:func:`as_matrix`.  They are treated as immutable values; every function
returns a fresh array.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ShapeError

# Scaling threshold for the exponential: the order-13 approximant is accurate
# to well below 1e-13 once the scaled one-norm is at most this.
EXPM_THETA = 0.5

_PADE13_B = (
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
)


def as_matrix(x) -> np.ndarray:
    """Coerce to a square complex128 array with all-finite entries."""
    a = np.asarray(x, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ShapeError(f"expected a square matrix, got shape {a.shape}")
    if not (np.isfinite(a.real).all() and np.isfinite(a.imag).all()):
        raise ValueError("matrix entries must be finite")
    return a


def matrix_unit(d: int, row: int, col: int) -> np.ndarray:
    """The d x d matrix with a single 1 at (row, col), zero-based."""
    m = np.zeros((d, d), dtype=np.complex128)
    m[row, col] = 1.0
    return m


def matmul(x, y) -> np.ndarray:
    a, b = as_matrix(x), as_matrix(y)
    if a.shape != b.shape:
        raise ShapeError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b


def matrix_norm(x, kind: str = "frobenius") -> float:
    """Sub-multiplicative norms: ``frobenius``, induced ``one`` (max column
    sum), induced ``inf`` (max row sum)."""
    a = as_matrix(x)
    if kind == "frobenius":
        return float(np.sqrt((np.abs(a) ** 2).sum()))
    if kind == "one":
        return float(np.abs(a).sum(axis=0).max())
    if kind == "inf":
        return float(np.abs(a).sum(axis=1).max())
    raise ValueError(f"unknown norm kind {kind!r}")


def commutator(a, b) -> np.ndarray:
    """AB - BA."""
    x, y = as_matrix(a), as_matrix(b)
    if x.shape != y.shape:
        raise ShapeError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return x @ y - y @ x


def _lu_decompose(a: np.ndarray):
    # Doolittle LU with partial pivoting; returns (combined LU, pivot rows, sign).
    lu = a.copy()
    d = lu.shape[0]
    pivots = np.arange(d)
    sign = 1
    for k in range(d):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            pivots[[k, p]] = pivots[[p, k]]
            sign = -sign
        pivot = lu[k, k]
        if pivot == 0:
            continue
        lu[k + 1 :, k] /= pivot
        lu[k + 1 :, k + 1 :] -= np.outer(lu[k + 1 :, k], lu[k, k + 1 :])
    return lu, pivots, sign


def determinant(x) -> complex:
    """Determinant via LU with partial pivoting."""
    a = as_matrix(x)
    lu, _, sign = _lu_decompose(a)
    return complex(sign * np.prod(np.diag(lu)))


def solve(a, b) -> np.ndarray:
    """Solve AX = B by LU with partial pivoting."""
    a = as_matrix(a)
    b = np.asarray(b, dtype=np.complex128)
    lu, pivots, _ = _lu_decompose(a)
    if np.any(np.diag(lu) == 0):
        raise np.linalg.LinAlgError("matrix is singular")
    d = a.shape[0]
    x = b[pivots].astype(np.complex128, copy=True)
    for k in range(1, d):  # forward: L y = Pb, unit diagonal
        x[k] -= lu[k, :k] @ x[:k]
    for k in range(d - 1, -1, -1):  # backward: U x = y
        x[k] -= lu[k, k + 1 :] @ x[k + 1 :]
        x[k] /= lu[k, k]
    return x


def _pade13(a: np.ndarray) -> np.ndarray:
    b = _PADE13_B
    d = a.shape[0]
    ident = np.eye(d, dtype=np.complex128)
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a4 @ a2
    u = a @ (a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident)
    v = a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident
    return solve(v - u, v + u)


def expm(x) -> np.ndarray:
    """Matrix exponential by scaling and squaring.

    Scales by the smallest power of two bringing the one-norm at or below
    ``EXPM_THETA``, applies the fixed order-13 rational approximant, and
    squares back.
    """
    a = as_matrix(x)
    nrm = matrix_norm(a, "one")
    if nrm == 0.0:
        return np.eye(a.shape[0], dtype=np.complex128)
    squarings = 0
    if nrm > EXPM_THETA:
        squarings = int(math.ceil(math.log2(nrm / EXPM_THETA)))
    r = _pade13(a / (2.0**squarings))
    for _ in range(squarings):
        r = r @ r
    return r


def expm_series(x, terms: int) -> np.ndarray:
    """Partial sum of the exponential power series, sum_{k<=terms} X^k / k!.

    Independent oracle for :func:`expm`; the caller picks ``terms`` so the
    tail (see :func:`series_tail_bound`) is negligible.
    """
    a = as_matrix(x)
    total = np.eye(a.shape[0], dtype=np.complex128)
    term = np.eye(a.shape[0], dtype=np.complex128)
    for k in range(1, terms + 1):
        term = term @ a / k
        total = total + term
    return total


def series_tail_bound(x, terms: int) -> float:
    """Upper bound on the norm of the series tail past ``terms`` terms."""
    nrm = matrix_norm(x, "one")
    if nrm == 0.0:
        return 0.0
    log_tail = (terms + 1) * math.log(nrm) - math.lgamma(terms + 2) + nrm
    return math.exp(log_tail)


def matrix_to_json(x) -> dict:
    """JSON form {"d": d, "re": [[...]], "im": [[...]]}; "im" omitted when zero."""
    a = as_matrix(x)
    obj = {"d": int(a.shape[0]), "re": [[float(v) for v in row] for row in a.real]}
    if np.any(a.imag != 0.0):
        obj["im"] = [[float(v) for v in row] for row in a.imag]
    return obj


def matrix_from_json(obj) -> np.ndarray:
    """Parse and validate the matrix JSON form."""
    if not isinstance(obj, dict):
        raise ShapeError("matrix JSON must be an object")
    if "d" not in obj or "re" not in obj:
        raise ShapeError('matrix JSON needs "d" and "re" fields')
    d = obj["d"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ShapeError('"d" must be a positive integer')
    parts = []
    for key in ("re", "im"):
        rows = obj.get(key)
        if rows is None and key == "im":
            parts.append(np.zeros((d, d)))
            continue
        if (
            not isinstance(rows, list)
            or len(rows) != d
            or any(not isinstance(r, list) or len(r) != d for r in rows)
        ):
            raise ShapeError(f'"{key}" must be a {d}x{d} array of numbers')
        try:
            parts.append(np.asarray(rows, dtype=np.float64))
        except (TypeError, ValueError) as exc:
            raise ShapeError(f'"{key}" must contain only numbers') from exc
    a = parts[0] + 1j * parts[1]
    return as_matrix(a)
