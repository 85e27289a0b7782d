import numpy as np
import pytest
from sklearn.base import clone
from sklearn.utils.estimator_checks import parametrize_with_checks

from fastpinv import dense
from fastpinv.estimator import MinNormLeastSquares, PseudoInverseProjector


@parametrize_with_checks([MinNormLeastSquares(), PseudoInverseProjector()])
def test_sklearn_compatible(estimator, check):
    check(estimator)


def test_fit_matches_min_norm_solution(family):
    g, _, _ = family(32, 0)
    y = np.sin(np.arange(g.shape[0]))
    est = MinNormLeastSquares().fit(g, y)
    expected = np.linalg.pinv(g) @ y
    assert dense.max_abs(est.coef_ - expected) <= 1e-8
    assert est.rank_ == 28
    np.testing.assert_allclose(est.predict(g), g @ expected, atol=1e-8)


@pytest.mark.parametrize("algorithm", ["greville", "gso-qr", "hyperpower", "svd"])
def test_other_algorithms(family, algorithm):
    g, _, _ = family(16, 1)
    y = np.cos(np.arange(g.shape[0]))
    ref = MinNormLeastSquares().fit(g, y).coef_
    est = MinNormLeastSquares(algorithm=algorithm).fit(g, y)
    assert est.rank_ is None
    assert dense.max_abs(est.coef_ - ref) <= 1e-8


def test_multi_target_orientation(family):
    g, _, _ = family(16, 2)
    y = np.column_stack([np.arange(g.shape[0]), np.ones(g.shape[0])]).astype(float)
    est = MinNormLeastSquares().fit(g, y)
    assert est.coef_.shape == (2, 16)
    assert est.predict(g).shape == (g.shape[0], 2)


def test_params_and_clone():
    est = MinNormLeastSquares(algorithm="svd", tol=1e-8)
    assert est.get_params() == {"algorithm": "svd", "tol": 1e-8}
    c = clone(est)
    assert c.get_params() == est.get_params() and c is not est


def test_projector_is_orthogonal_projection(family):
    g, _, _ = family(16, 3)
    proj = PseudoInverseProjector().fit(g)
    p = proj.projection_
    assert dense.max_abs(p @ p - p) <= 1e-10
    assert np.array_equal(p, p.T)
    assert dense.max_abs(proj.transform(g) - g) <= 1e-10
    assert round(np.trace(p)) == 14


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        MinNormLeastSquares(algorithm="lu").fit(np.eye(3), np.ones(3))
