"""Exception types shared across the package."""

import numpy as np


class ShapeError(ValueError):
    """Operand shapes are incompatible, or a square/symmetric input was not."""


class DefinitenessError(np.linalg.LinAlgError):
    """A matrix that must be positive (semi)definite is not."""


class ConvergenceError(np.linalg.LinAlgError):
    """An iterative method did not converge.

    The last measured residual is kept on ``residual`` so callers can
    tell slow convergence from outright divergence.
    """

    def __init__(self, message, residual=float("nan")):
        super().__init__(message)
        self.residual = residual


class SpecError(ValueError):
    """A configuration object violates its invariants."""


class DegenerateInputError(ValueError):
    """An input has zero norm where a direction is required."""
