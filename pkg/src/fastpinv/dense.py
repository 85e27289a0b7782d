"""Dense real-matrix kernels.

Matrices are plain 2-D ``float64`` numpy arrays in row-major order.  The
helpers here add the shape checks and the symmetric-matrix conventions
the pseudoinverse algorithms rely on; raw products go through numpy and
the SPD inverse through LAPACK.
"""

import math

import numpy as np
from scipy.linalg import lapack

from ._validation import check_matrix, check_square
from .exceptions import DefinitenessError, ShapeError

__all__ = [
    "identity",
    "zeros",
    "matmul",
    "transpose",
    "gram",
    "spd_inverse",
    "subtract",
    "scale",
    "max_abs",
    "frobenius_norm",
    "one_norm",
    "inf_norm",
    "column",
    "format_matrix",
    "parse_matrix",
    "read_matrix",
    "write_matrix",
]


def identity(n):
    return np.eye(n)


def zeros(rows, cols):
    return np.zeros((rows, cols))


def matmul(a, b):
    """Matrix product ``a @ b`` with a shape check naming both operands."""
    a = check_matrix(a, "a")
    b = check_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(
            f"cannot multiply {a.shape[0]}x{a.shape[1]} by {b.shape[0]}x{b.shape[1]}"
        )
    return a @ b


def transpose(a):
    # A fresh C-ordered copy, so the result is row-major like every other matrix.
    return np.ascontiguousarray(check_matrix(a).T)


def _mirror_upper(p):
    out = np.triu(p)
    out += np.triu(p, 1).T
    return out


def gram(g, side="left"):
    """Gram matrix of ``g``: ``G'G`` for ``side="left"``, ``GG'`` for ``"right"``.

    Only the upper triangle of the product is kept; the lower triangle is
    its mirror image, so the result is bit-exactly symmetric.
    """
    g = check_matrix(g, "g")
    if side == "left":
        p = g.T @ g
    elif side == "right":
        p = g @ g.T
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return _mirror_upper(p)


def spd_inverse(a):
    """Inverse of a symmetric positive definite matrix.

    LAPACK ``potrf`` (unpivoted Cholesky) followed by ``potri`` (inverse
    from the triangular factor).  The result is symmetrised the same way
    :func:`gram` is.

    Raises
    ------
    DefinitenessError
        A non-positive pivot was met, so ``a`` is not positive definite.
    """
    a = check_square(check_matrix(a, "a"), "a")
    if a.shape[0] == 0:
        return a.copy()
    # a is exactly symmetric, so the memory order LAPACK sees is irrelevant
    factor, info = lapack.dpotrf(a, lower=1, clean=0)
    if info > 0:
        raise DefinitenessError(
            f"matrix is not positive definite (pivot {info - 1} is not positive)"
        )
    if info < 0:
        raise ValueError(f"dpotrf rejected argument {-info}")
    inv, info = lapack.dpotri(factor, lower=1)
    if info != 0:
        raise DefinitenessError(f"triangular factor is singular (info={info})")
    # potri fills only the lower triangle
    low = np.tril(inv)
    low += np.tril(inv, -1).T
    return np.ascontiguousarray(low)


def subtract(a, b):
    a = check_matrix(a, "a")
    b = check_matrix(b, "b")
    if a.shape != b.shape:
        raise ShapeError(f"cannot subtract {b.shape} from {a.shape}")
    return a - b


def scale(a, s):
    return check_matrix(a) * float(s)


def max_abs(a):
    """Largest absolute entry; 0.0 for an empty or all-zero matrix."""
    a = np.asarray(a, dtype=np.float64)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a)))


def frobenius_norm(a):
    a = np.asarray(a, dtype=np.float64)
    return float(math.sqrt(np.sum(a * a)))


def one_norm(a):
    """Maximum absolute column sum."""
    a = np.asarray(a, dtype=np.float64)
    if a.size == 0:
        return 0.0
    return float(np.max(np.sum(np.abs(a), axis=0)))


def inf_norm(a):
    """Maximum absolute row sum."""
    a = np.asarray(a, dtype=np.float64)
    if a.size == 0:
        return 0.0
    return float(np.max(np.sum(np.abs(a), axis=1)))


def column(a, j):
    """Column ``j`` of ``a`` as an ``rows x 1`` matrix."""
    a = check_matrix(a)
    return a[:, j : j + 1].copy()


# -- text format ------------------------------------------------------------
#
#   rows cols
#   v11 v12 ... v1c
#   ...
#
# Values are written with repr(), the shortest string that round-trips a
# double exactly.


def format_matrix(a):
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2:
        raise ShapeError(f"can only format 2-D matrices, got shape {a.shape}")
    lines = [f"{a.shape[0]} {a.shape[1]}"]
    lines.extend(" ".join(repr(float(v)) for v in row) for row in a)
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    """Parse the text format produced by :func:`format_matrix`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header line {lines[0]!r}; expected 'rows cols'")
    rows, cols = (int(h) for h in header)
    if rows < 1 or cols < 1:
        raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"expected {rows} data rows, found {len(body)}")
    values = []
    for i, line in enumerate(body):
        fields = line.split()
        if len(fields) != cols:
            raise ValueError(f"row {i + 1} has {len(fields)} values, expected {cols}")
        values.append([float(f) for f in fields])
    return check_matrix(values)


def read_matrix(path):
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def write_matrix(path, a):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(a))
