import numpy as np
import pytest

from fastpinv import dense
from fastpinv.baselines import pinv_svd_reference
from fastpinv.benchgen import null_space_vectors, uniform_array
from fastpinv.cholesky import ToleranceConfig, full_rank_cholesky
from fastpinv.exceptions import ShapeError
from fastpinv.geninv import geninv, pinv_geninv, solve_min_norm
from fastpinv.verify import is_valid_pinv, nullspace_orthogonality, penrose_residuals

from conftest import HAND_FIXTURES

FAMILY_SIZES = [16, 32, 64, 128]
SEEDS = range(10)


@pytest.mark.parametrize("name,g,expected", HAND_FIXTURES, ids=[f[0] for f in HAND_FIXTURES])
def test_hand_fixtures(name, g, expected):
    x = pinv_geninv(g)
    assert x.shape == expected.shape
    assert dense.max_abs(x - expected) <= 1e-12


def test_wide_input_takes_transpose_branch():
    res = geninv([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
    assert res.transposed and res.rank == 2
    assert not geninv(np.eye(2)).transposed


def test_zero_matrix_diagnostics():
    res = geninv(np.zeros((3, 2)))
    assert res.rank == 0 and np.isnan(res.ltl_condition)


def test_condition_estimate_is_one_norm_condition_of_ltl(family):
    g, _, _ = family(16, 0)
    res = geninv(g)
    low = full_rank_cholesky(dense.gram(g)).L
    assert res.ltl_condition == pytest.approx(np.linalg.cond(low.T @ low, 1), rel=1e-6)


@pytest.mark.parametrize("n", FAMILY_SIZES)
def test_penrose_suite_on_family(family, n):
    for seed in SEEDS:
        g, _, _ = family(n, seed)
        rep = penrose_residuals(g, pinv_geninv(g))
        assert is_valid_pinv(rep, 2e-10), (seed, rep)


@pytest.mark.parametrize("n", [16, 32, 64])
def test_agrees_with_svd_oracle(family, n):
    for seed in SEEDS:
        g, _, _ = family(n, seed)
        ref = pinv_svd_reference(g)
        diff = dense.max_abs(pinv_geninv(g) - ref)
        assert diff <= 1e-8 * max(1.0, dense.max_abs(ref)), seed


@pytest.mark.parametrize("n", FAMILY_SIZES)
def test_involution(family, n):
    for seed in SEEDS:
        g, _, _ = family(n, seed)
        back = pinv_geninv(pinv_geninv(g))
        assert dense.max_abs(back - g) <= 1e-8 * max(1.0, dense.max_abs(g)), seed


@pytest.mark.parametrize("n", FAMILY_SIZES)
def test_transpose_commutes(family, n):
    for seed in SEEDS:
        g, _, _ = family(n, seed)
        lhs = pinv_geninv(dense.transpose(g))
        rhs = dense.transpose(pinv_geninv(g))
        assert dense.max_abs(lhs - rhs) <= 1e-10, seed


@pytest.mark.parametrize("n", [16, 32, 64])
def test_full_rank_reduces_to_normal_equations(n):
    # iid uniform 2n x n matrices are full column rank and well conditioned
    for seed in range(5):
        g = uniform_array(seed, 2 * n * n).reshape(2 * n, n)
        direct = np.linalg.solve(g.T @ g, g.T)
        assert dense.max_abs(pinv_geninv(g) - direct) <= 1e-10, seed


def test_full_rank_family_member(family):
    g, _, _ = family(4, 1, m=8, rank=4)
    res = geninv(g)
    assert res.rank == 4
    direct = np.linalg.solve(g.T @ g, g.T)
    assert dense.max_abs(res.pinv - direct) <= 1e-10


def test_tolerance_config_is_used():
    g = np.diag([1.0, 1e-6])
    assert geninv(g).rank == 2
    # squared singular value 1e-12 falls below an absolute pivot floor of 1e-10
    res = geninv(g, ToleranceConfig(absolute=1e-10))
    assert res.rank == 1
    np.testing.assert_allclose(res.pinv, np.diag([1.0, 0.0]))


class TestSolveMinNorm:
    def test_identity(self):
        np.testing.assert_allclose(solve_min_norm(np.eye(2), [[3.0], [7.0]]), [[3.0], [7.0]])

    def test_mean(self):
        np.testing.assert_allclose(solve_min_norm([[1.0], [1.0]], [[1.0], [3.0]]), [[2.0]], atol=1e-15)

    def test_equal_split(self):
        np.testing.assert_allclose(solve_min_norm([[1.0, 1.0]], [[2.0]]), [[1.0], [1.0]], atol=1e-15)

    def test_vector_rhs_keeps_vector_shape(self):
        w = solve_min_norm([[1.0, 1.0]], [2.0])
        assert w.shape == (2,)

    def test_shape_error(self):
        with pytest.raises(ShapeError):
            solve_min_norm(np.eye(3), np.ones((2, 1)))

    def test_multiple_right_hand_sides(self, family, rng):
        g, _, _ = family(32, 2)
        f = rng.uniform(-1, 1, (g.shape[0], 4))
        w = solve_min_norm(g, f)
        for k in range(4):
            np.testing.assert_allclose(w[:, k], solve_min_norm(g, f[:, k]), atol=1e-13)

    def test_orthogonal_to_null_space(self, family, rng):
        for seed in range(5):
            g, _, c = family(32, seed)
            f = rng.uniform(-1, 1, g.shape[0])
            w = solve_min_norm(g, f)
            z = null_space_vectors(c, 5, seed=seed)
            assert dense.max_abs(g @ z) <= 1e-12 * dense.max_abs(z) * g.shape[1]
            for j in range(z.shape[1]):
                assert nullspace_orthogonality(g, w, z[:, j]) <= 1e-8
            # same solution as the SVD oracle
            ref = pinv_svd_reference(g) @ f
            assert dense.max_abs(w - ref) <= 1e-8 * max(1.0, dense.max_abs(ref))

    def test_smaller_norm_than_other_minimisers(self, family, rng):
        g, _, c = family(16, 4)
        f = rng.uniform(-1, 1, g.shape[0])
        w = solve_min_norm(g, f)
        z = null_space_vectors(c, 3, seed=9)
        for j in range(3):
            other = w + z[:, j]
            assert np.linalg.norm(g @ other - f) == pytest.approx(np.linalg.norm(g @ w - f), rel=1e-9)
            assert np.linalg.norm(other) > np.linalg.norm(w)
