"""Full-rank Cholesky factorization of symmetric positive semidefinite matrices."""

from dataclasses import dataclass
import math

import numpy as np

from ._validation import check_matrix, check_positive, check_square
from .exceptions import DefinitenessError, ShapeError, SpecError

__all__ = ["ToleranceConfig", "FullRankCholesky", "full_rank_cholesky"]


@dataclass(frozen=True)
class ToleranceConfig:
    """Pivot threshold policy.

    By default the threshold is ``relative_floor`` times the smallest
    strictly positive diagonal entry of the matrix being factored.  Setting
    ``absolute`` replaces that with a fixed threshold.
    """

    relative_floor: float = 1e-9
    absolute: float | None = None

    def __post_init__(self):
        check_positive(self.relative_floor, "relative_floor")
        if self.absolute is not None:
            check_positive(self.absolute, "absolute")

    @property
    def mode(self):
        return "relative" if self.absolute is None else "absolute"

    def threshold(self, diag):
        """Pivot threshold for a matrix with diagonal ``diag``.

        Returns 0.0 when no diagonal entry is positive (the zero matrix).
        """
        if self.absolute is not None:
            return float(self.absolute)
        positive = diag[diag > 0]
        if positive.size == 0:
            return 0.0
        return float(positive.min()) * self.relative_floor


@dataclass(frozen=True)
class FullRankCholesky:
    """``A = L L'`` with ``L`` of shape ``n x rank`` and full column rank."""

    L: np.ndarray
    rank: int
    tol: float


def full_rank_cholesky(a, cfg=None):
    """Factor a symmetric PSD matrix as ``L L'``, dropping zero pivots.

    Column ``r`` of ``L`` is formed from column ``k`` of ``a`` minus the
    contribution of the ``r`` columns accepted so far.  When the pivot
    ``L[k, r]`` exceeds the tolerance the column is kept and scaled by its
    square root; otherwise row ``k`` is dependent on the earlier rows and
    the column is dropped.

    Parameters
    ----------
    a : array_like, shape (n, n)
        Exactly symmetric, positive semidefinite.  :func:`fastpinv.dense.gram`
        produces such matrices.
    cfg : ToleranceConfig, optional

    Returns
    -------
    FullRankCholesky
        ``L`` is lower trapezoidal: column ``j`` is zero above the row at
        which its pivot was accepted.

    Raises
    ------
    ShapeError
        ``a`` is not square or not exactly symmetric.
    DefinitenessError
        ``a`` is detectably not positive semidefinite.
    """
    cfg = ToleranceConfig() if cfg is None else cfg
    if not isinstance(cfg, ToleranceConfig):
        raise SpecError(f"cfg must be a ToleranceConfig, got {type(cfg).__name__}")
    a = check_square(check_matrix(a, "a"), "a")
    if not np.array_equal(a, a.T):
        raise ShapeError("a must be symmetric")
    n = a.shape[0]
    diag = np.diag(a)
    tol = cfg.threshold(diag)

    if not np.any(diag > 0):
        if np.any(a != 0.0):
            raise DefinitenessError(
                "matrix has no positive diagonal entry but is not zero; not PSD"
            )
        return FullRankCholesky(np.zeros((n, 0)), 0, tol)

    neg_limit = -tol * n
    # Row j of lt is column j of L; with a symmetric, row k of a is column k.
    lt = np.zeros((n, n))
    r = 0
    for k in range(n):
        # tentative column r, rows k..n-1
        col = a[k, k:] - lt[:r, k] @ lt[:r, k:]
        pivot = col[0]
        if pivot > tol:
            d = math.sqrt(pivot)
            lt[r, k] = d
            lt[r, k + 1:] = col[1:] / d
            r += 1
        elif pivot < neg_limit:
            raise DefinitenessError(
                f"matrix is not positive semidefinite (pivot {pivot:.3e} at row {k})"
            )
    return FullRankCholesky(np.ascontiguousarray(lt[:r].T), r, tol)
