"""Fast Moore-Penrose pseudoinverses through full-rank Cholesky factorization.

>>> import numpy as np
>>> from fastpinv import pinv_geninv
>>> x = pinv_geninv(np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]))
>>> np.round(3 * x, 12)
array([[ 2., -1.,  1.],
       [-1.,  2.,  1.]])
"""

from .algorithms import ALGORITHM_NAMES, PinvAlgorithm, compute_pinv
from .baselines import (
    IterativeConfig,
    JacobiSVD,
    SvdConfig,
    full_rank_qr,
    jacobi_svd,
    pinv_greville,
    pinv_gso_qr,
    pinv_hyperpower,
    pinv_svd_reference,
)
from .bench import BenchReport, BenchRow, BenchSpec, emit_report, parse_csv, run_bench
from .benchgen import MatrixFamilySpec, null_space_vectors, random_rank_deficient, uniform_stream
from .cholesky import FullRankCholesky, ToleranceConfig, full_rank_cholesky
from .estimator import MinNormLeastSquares, PseudoInverseProjector
from .exceptions import (
    ConvergenceError,
    DefinitenessError,
    DegenerateInputError,
    ShapeError,
    SpecError,
)
from .geninv import GeninvResult, geninv, pinv_geninv, solve_min_norm
from .verify import PenroseReport, is_valid_pinv, nullspace_orthogonality, penrose_residuals

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_NAMES",
    "BenchReport",
    "BenchRow",
    "BenchSpec",
    "ConvergenceError",
    "DefinitenessError",
    "DegenerateInputError",
    "FullRankCholesky",
    "GeninvResult",
    "IterativeConfig",
    "JacobiSVD",
    "MatrixFamilySpec",
    "MinNormLeastSquares",
    "PenroseReport",
    "PinvAlgorithm",
    "PseudoInverseProjector",
    "ShapeError",
    "SpecError",
    "SvdConfig",
    "ToleranceConfig",
    "compute_pinv",
    "emit_report",
    "full_rank_cholesky",
    "full_rank_qr",
    "geninv",
    "is_valid_pinv",
    "jacobi_svd",
    "null_space_vectors",
    "nullspace_orthogonality",
    "parse_csv",
    "penrose_residuals",
    "pinv_geninv",
    "pinv_greville",
    "pinv_gso_qr",
    "pinv_hyperpower",
    "pinv_svd_reference",
    "random_rank_deficient",
    "run_bench",
    "solve_min_norm",
    "uniform_stream",
]
