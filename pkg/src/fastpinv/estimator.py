"""scikit-learn compatible estimators built on the pseudoinverse routines."""

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted, validate_data

from .algorithms import PinvAlgorithm
from .cholesky import ToleranceConfig
from .geninv import geninv

__all__ = ["MinNormLeastSquares", "PseudoInverseProjector"]


def _pinv(X, algorithm, tol):
    alg = PinvAlgorithm.parse(algorithm)
    if alg is PinvAlgorithm.GENINV:
        cfg = None if tol is None else ToleranceConfig(relative_floor=tol)
        res = geninv(X, cfg)
        return res.pinv, res.rank
    return alg(X), None


class MinNormLeastSquares(RegressorMixin, BaseEstimator):
    """Least-squares regression returning the minimum-norm coefficients.

    Unlike ordinary least squares this is well defined when the design
    matrix is rank deficient: among all coefficient vectors minimising
    ``||X w - y||`` the one of smallest Euclidean norm is chosen.  No
    intercept is fitted; centre the data or add a column of ones.

    Parameters
    ----------
    algorithm : {"geninv", "greville", "gso-qr", "hyperpower", "svd"}
        Pseudoinverse method.
    tol : float, optional
        Relative pivot floor for ``geninv`` (default 1e-9).  Ignored by
        the other methods.

    Attributes
    ----------
    coef_ : ndarray of shape (n_features,) or (n_targets, n_features)
    pinv_ : ndarray of shape (n_features, n_samples)
    rank_ : int or None
        Rank detected by the factorization (``geninv`` only).
    """

    def __init__(self, algorithm="geninv", tol=None):
        self.algorithm = algorithm
        self.tol = tol

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.target_tags.multi_output = True
        return tags

    def fit(self, X, y):
        X, y = validate_data(self, X, y, multi_output=True, y_numeric=True, dtype=np.float64)
        self.pinv_, self.rank_ = _pinv(X, self.algorithm, self.tol)
        w = self.pinv_ @ y
        self.coef_ = w.T if w.ndim == 2 else w
        return self

    def predict(self, X):
        check_is_fitted(self, "coef_")
        X = validate_data(self, X, reset=False, dtype=np.float64)
        return X @ self.coef_.T


class PseudoInverseProjector(TransformerMixin, BaseEstimator):
    """Project samples onto the row space of the training matrix.

    ``fit`` stores ``P = X+ X``; ``transform`` maps each row ``x`` to
    ``x P``, its orthogonal projection onto the span of the training rows.
    """

    def __init__(self, algorithm="geninv", tol=None):
        self.algorithm = algorithm
        self.tol = tol

    def fit(self, X, y=None):
        X = validate_data(self, X, dtype=np.float64)
        pinv, self.rank_ = _pinv(X, self.algorithm, self.tol)
        p = pinv @ X
        self.projection_ = 0.5 * (p + p.T)
        return self

    def transform(self, X):
        check_is_fitted(self, "projection_")
        X = validate_data(self, X, reset=False, dtype=np.float64)
        return X @ self.projection_
