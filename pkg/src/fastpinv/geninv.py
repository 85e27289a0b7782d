"""Moore-Penrose inverse through a full-rank Cholesky factor of the Gram matrix.

With ``G'G = LL'`` and ``L`` of full column rank ``r``::

    G+ = L (L'L)^-1 (L'L)^-1 L' G'

For wide inputs (``m < n``) the smaller Gram matrix ``GG' = LL'`` is
factored instead and ``G+ = G' L (L'L)^-1 (L'L)^-1 L'``.
"""

from dataclasses import dataclass

import numpy as np

from . import dense
from ._validation import check_matrix
from .cholesky import full_rank_cholesky
from .exceptions import ShapeError

__all__ = ["GeninvResult", "geninv", "pinv_geninv", "solve_min_norm"]


@dataclass(frozen=True)
class GeninvResult:
    pinv: np.ndarray
    rank: int
    tol: float
    transposed: bool
    # 1-norm condition number of L'L; nan when rank is 0
    ltl_condition: float


def geninv(g, cfg=None):
    """Pseudoinverse of ``g`` together with the factorization diagnostics."""
    g = check_matrix(g, "g")
    m, n = g.shape
    transposed = m < n
    a = dense.gram(g, "right" if transposed else "left")
    fac = full_rank_cholesky(a, cfg)
    low = fac.L
    if fac.rank == 0:
        return GeninvResult(np.zeros((n, m)), 0, fac.tol, transposed, float("nan"))

    ltl = dense.gram(low, "left")
    inv_ltl = dense.spd_inverse(ltl)
    cond = dense.one_norm(ltl) * dense.one_norm(inv_ltl)

    # Keep every intermediate at r x max(m, n) or smaller.
    if transposed:
        y = g.T @ low
        y = y @ inv_ltl
        y = y @ inv_ltl
        x = y @ low.T
    else:
        y = low.T @ g.T
        y = inv_ltl @ y
        y = inv_ltl @ y
        x = low @ y
    return GeninvResult(np.ascontiguousarray(x), fac.rank, fac.tol, transposed, cond)


def pinv_geninv(g, cfg=None):
    """Moore-Penrose inverse of any real ``m x n`` matrix ``g``.

    Examples
    --------
    >>> pinv_geninv([[1.0, 2.0], [2.0, 4.0]]) * 25
    array([[1., 2.],
           [2., 4.]])
    """
    return geninv(g, cfg).pinv


def solve_min_norm(g, f, cfg=None):
    """Minimum-norm least-squares solution ``W = G+ F``.

    Each column of the result minimises ``||G w - f||`` and has the
    smallest Euclidean norm among all minimisers.  ``f`` may be a vector
    or an ``m x k`` matrix; the result has matching dimensionality.
    """
    g = check_matrix(g, "g")
    f_arr = np.asarray(f, dtype=np.float64)
    vector = f_arr.ndim == 1
    f2 = check_matrix(f_arr.reshape(-1, 1) if vector else f_arr, "f")
    if f2.shape[0] != g.shape[0]:
        raise ShapeError(
            f"g has {g.shape[0]} rows but f has {f2.shape[0]} (shapes {g.shape} and {f2.shape})"
        )
    w = pinv_geninv(g, cfg) @ f2
    return w.ravel() if vector else w
