"""Input validation helpers.

Every public routine funnels its matrix arguments through
:func:`check_matrix`, so the rest of the code can assume a C-ordered
(row-major) 2-D float64 array with finite entries.
"""

import numbers

import numpy as np

from .exceptions import ShapeError, SpecError


def check_matrix(a, name="matrix", copy=False):
    """Return ``a`` as a finite, row-major, 2-D float64 array.

    Lists of lists and other array-likes are accepted.  A 1-D input is
    rejected rather than guessed into a row or a column.
    """
    arr = np.array(a, dtype=np.float64, order="C") if copy else np.ascontiguousarray(a, dtype=np.float64)
    if arr.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or infinite entries")
    return arr


def check_vector(v, name="vector"):
    """Flatten a vector-like (1-D, n x 1 or 1 x n) into a 1-D float64 array."""
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim == 2 and 1 in arr.shape:
        arr = arr.reshape(-1)
    if arr.ndim != 1:
        raise ShapeError(f"{name} must be a vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or infinite entries")
    return arr


def check_square(a, name="matrix"):
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"{name} must be square, got shape {a.shape}")
    return a


def check_positive(value, name, integer=False, minimum=None):
    """Validate a scalar configuration value; returns it unchanged."""
    kind = numbers.Integral if integer else numbers.Real
    if isinstance(value, bool) or not isinstance(value, kind):
        raise SpecError(f"{name} must be {'an integer' if integer else 'a real number'}, got {value!r}")
    if minimum is None:
        if not value > 0:
            raise SpecError(f"{name} must be positive, got {value!r}")
    elif value < minimum:
        raise SpecError(f"{name} must be >= {minimum}, got {value!r}")
    if not integer and not np.isfinite(value):
        raise SpecError(f"{name} must be finite, got {value!r}")
    return value
