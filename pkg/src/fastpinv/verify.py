"""Penrose-condition residuals and the minimum-norm check."""

from dataclasses import dataclass
import math


from . import dense
from ._validation import check_matrix, check_vector
from .exceptions import DegenerateInputError, ShapeError

__all__ = [
    "DEFAULT_BOUND",
    "PenroseReport",
    "penrose_residuals",
    "is_valid_pinv",
    "nullspace_orthogonality",
]

DEFAULT_BOUND = 2e-10


@dataclass(frozen=True)
class PenroseReport:
    """Largest absolute coefficient of each Penrose error matrix.

    ``r1 = GXG - G``, ``r2 = XGX - X``, ``r3 = (GX)' - GX``,
    ``r4 = (XG)' - XG``.
    """

    r1: float
    r2: float
    r3: float
    r4: float

    def as_tuple(self):
        return (self.r1, self.r2, self.r3, self.r4)

    @property
    def worst(self):
        return max(self.as_tuple())


def penrose_residuals(g, x):
    """Residuals of candidate pseudoinverse ``x`` (n x m) of ``g`` (m x n)."""
    g = check_matrix(g, "g")
    x = check_matrix(x, "x")
    if x.shape != (g.shape[1], g.shape[0]):
        raise ShapeError(
            f"candidate of shape {x.shape} cannot invert g of shape {g.shape}; "
            f"expected {(g.shape[1], g.shape[0])}"
        )
    gx = g @ x
    xg = x @ g
    return PenroseReport(
        r1=dense.max_abs(gx @ g - g),
        r2=dense.max_abs(xg @ x - x),
        r3=dense.max_abs(gx.T - gx),
        r4=dense.max_abs(xg.T - xg),
    )


def is_valid_pinv(report, bound=DEFAULT_BOUND):
    """True iff every residual is at most ``bound`` (inclusive)."""
    if not bound > 0:
        raise ValueError(f"bound must be positive, got {bound!r}")
    return all(r <= bound for r in report.as_tuple())


def nullspace_orthogonality(g, w, z):
    """Normalised inner product ``|w'z| / (||w|| ||z||)``.

    ``z`` should be a null vector of ``g``; a value near zero shows that
    ``w`` has no component along it, i.e. ``w`` is the minimum-norm
    solution in that direction.  ``g`` is only used to check dimensions.
    """
    g = check_matrix(g, "g")
    w = check_vector(w, "w")
    z = check_vector(z, "z")
    if w.shape[0] != g.shape[1] or z.shape[0] != g.shape[1]:
        raise ShapeError(
            f"w ({w.shape[0]}) and z ({z.shape[0]}) must have length g.cols ({g.shape[1]})"
        )
    nw = math.sqrt(w @ w)
    nz = math.sqrt(z @ z)
    if nw == 0.0 or nz == 0.0:
        raise DegenerateInputError("w and z must both be nonzero")
    return float(abs(w @ z) / (nw * nz))
