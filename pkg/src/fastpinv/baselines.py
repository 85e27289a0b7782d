"""Comparison algorithms for the Moore-Penrose inverse.

* :func:`pinv_greville`: column-recursive construction.
* :func:`pinv_gso_qr`: full-rank QR by modified Gram-Schmidt.
* :func:`pinv_hyperpower`: hyper-power iteration of order ``p``.
* :func:`pinv_svd_reference`: one-sided Jacobi SVD, used as the
  accuracy oracle for everything else.
"""

from dataclasses import dataclass
import math

import numpy as np

from . import dense
from ._validation import check_matrix, check_positive
from .cholesky import ToleranceConfig
from .exceptions import ConvergenceError, SpecError

__all__ = [
    "IterativeConfig",
    "SvdConfig",
    "JacobiSVD",
    "full_rank_qr",
    "pinv_greville",
    "pinv_gso_qr",
    "pinv_hyperpower",
    "jacobi_svd",
    "pinv_svd_reference",
]


# -- Greville ----------------------------------------------------------------


def pinv_greville(g, tol=1e-11):
    """Pseudoinverse by Greville's column recursion.

    Column ``a_k`` is treated as dependent on the previous ones when its
    residual ``c = a_k - A_{k-1} A_{k-1}^+ a_k`` satisfies
    ``||c|| <= tol * ||a_k||``.
    """
    g = check_matrix(g, "g")
    check_positive(tol, "tol")
    m, n = g.shape
    x = np.zeros((n, m))
    if n == 0:
        return x
    a = g[:, 0]
    aa = a @ a
    if aa > 0.0:
        x[0] = a / aa
    for k in range(1, n):
        a = g[:, k]
        d = x[:k] @ a
        c = a - g[:, :k] @ d
        if math.sqrt(c @ c) > tol * math.sqrt(a @ a):
            b = c / (c @ c)
        else:
            b = (d @ x[:k]) / (1.0 + d @ d)
        x[:k] -= np.outer(d, b)
        x[k] = b
    return x


# -- Gram-Schmidt QR ---------------------------------------------------------


def full_rank_qr(g, cfg=None):
    """Full-rank factorization ``G = Q R`` by modified Gram-Schmidt.

    Each accepted column is subtracted from all remaining columns as soon
    as it is normalised (modified GS), and every candidate is
    reorthogonalised once against the accepted basis before its norm is
    tested.  A column is skipped when its squared residual norm does not
    exceed ``cfg.threshold`` of the squared column norms, which is the
    quantity the full-rank Cholesky pivot measures.

    Returns ``(Q, R)`` with ``Q`` of shape ``m x r`` and ``R`` of shape ``r x n``.
    """
    cfg = ToleranceConfig() if cfg is None else cfg
    g = check_matrix(g, "g")
    m, n = g.shape
    work = g.copy()
    tol = cfg.threshold(np.einsum("ij,ij->j", g, g))
    q = np.zeros((m, min(m, n)))
    r = 0
    for k in range(n):
        if r == m:
            break
        v = work[:, k].copy()
        if r:
            basis = q[:, :r]
            v -= basis @ (basis.T @ v)
        nrm2 = v @ v
        if nrm2 > tol and nrm2 > 0.0:
            qk = v / math.sqrt(nrm2)
            q[:, r] = qk
            r += 1
            if k + 1 < n:
                rest = work[:, k + 1:]
                rest -= np.outer(qk, qk @ rest)
    q = np.ascontiguousarray(q[:, :r])
    return q, q.T @ g


def pinv_gso_qr(g, cfg=None):
    """Pseudoinverse ``R' (R R')^-1 Q'`` from the full-rank QR factorization."""
    g = check_matrix(g, "g")
    q, rmat = full_rank_qr(g, cfg)
    if q.shape[1] == 0:
        return np.zeros((g.shape[1], g.shape[0]))
    inner = dense.spd_inverse(dense.gram(rmat, "right"))
    return rmat.T @ (inner @ q.T)


# -- hyper-power iteration ---------------------------------------------------


@dataclass(frozen=True)
class IterativeConfig:
    """Settings for :func:`pinv_hyperpower`.

    ``init_scale=None`` selects ``1 / (||G||_1 ||G||_inf)``.
    """

    order: int = 512
    max_sweeps: int = 200
    residual_tol: float = 1e-12
    init_scale: float | None = None

    def __post_init__(self):
        check_positive(self.order, "order", integer=True, minimum=2)
        check_positive(self.max_sweeps, "max_sweeps", integer=True, minimum=1)
        check_positive(self.residual_tol, "residual_tol")
        if self.init_scale is not None:
            check_positive(self.init_scale, "init_scale")


def pinv_hyperpower(g, cfg=None):
    """Pseudoinverse by the hyper-power iteration of order ``p``.

    Starting from ``X = alpha G'``, each sweep applies::

        T = I - X G
        X <- (I + T + T^2 + ... + T^(p-1)) X

    with the polynomial evaluated by Horner's scheme.  The iteration works
    on whichever of ``XG`` (n x n) and ``GX`` (m x m) is smaller; the two
    forms give the same iterates in exact arithmetic.

    Before every sweep the first Penrose residual ``max|G - GXG|`` is
    measured, and the iteration stops once it is at most
    ``residual_tol * max(1, max|G|)``.

    Raises
    ------
    ConvergenceError
        The residual is still above tolerance after ``max_sweeps`` sweeps,
        or the iterates overflowed.
    """
    cfg = IterativeConfig() if cfg is None else cfg
    if not isinstance(cfg, IterativeConfig):
        raise SpecError(f"cfg must be an IterativeConfig, got {type(cfg).__name__}")
    g = check_matrix(g, "g")
    m, n = g.shape
    if not np.any(g):
        return np.zeros((n, m))

    alpha = cfg.init_scale
    if alpha is None:
        alpha = 1.0 / (dense.one_norm(g) * dense.inf_norm(g))
    x = alpha * g.T
    limit = cfg.residual_tol * max(1.0, dense.max_abs(g))
    left = n <= m
    size = n if left else m
    eye = np.eye(size)
    diag = np.diag_indices(size)

    residual = float("nan")
    with np.errstate(over="ignore", invalid="ignore"):
        for sweep in range(cfg.max_sweeps + 1):
            if left:
                t = eye - x @ g
                residual = dense.max_abs(g @ t)
            else:
                t = eye - g @ x
                residual = dense.max_abs(t @ g)
            if not math.isfinite(residual):
                raise ConvergenceError("hyper-power iteration diverged", residual)
            if residual <= limit:
                return x
            if sweep == cfg.max_sweeps:
                break
            s = eye.copy()
            for _j in range(cfg.order - 1):
                s = t @ s
                s[diag] += 1.0
            x = s @ x if left else x @ s
    raise ConvergenceError(
        f"hyper-power iteration did not converge in {cfg.max_sweeps} sweeps "
        f"(residual {residual:.3e})",
        residual,
    )


# -- one-sided Jacobi SVD ----------------------------------------------------


@dataclass(frozen=True)
class SvdConfig:
    """``truncation=None`` means ``max(m, n) * eps``; the cutoff is that times the largest singular value."""

    sweep_tol: float = 1e-14
    truncation: float | None = None

    def __post_init__(self):
        check_positive(self.sweep_tol, "sweep_tol")
        if self.truncation is not None:
            check_positive(self.truncation, "truncation")


@dataclass(frozen=True)
class JacobiSVD:
    """Thin SVD ``G = U diag(s) V'``, singular values in descending order.

    Columns of ``U`` belonging to an exactly zero singular value are zero.
    """

    U: np.ndarray
    s: np.ndarray
    V: np.ndarray
    sweeps: int


MAX_JACOBI_SWEEPS = 50


def _round_robin(n):
    # Tournament schedule: n-1 rounds of n/2 disjoint pairs covering every pair once.
    players = list(range(n))
    rounds = []
    for _ in range(n - 1):
        half = n // 2
        top = np.array(players[:half])
        bot = np.array(players[half:][::-1])
        rounds.append((np.minimum(top, bot), np.maximum(top, bot)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_svd(g, cfg=None):
    """One-sided (Hestenes) Jacobi SVD.

    Column pairs of the working matrix are rotated until every pair is
    orthogonal to within ``sweep_tol`` relative to the column norms.  Each
    round of the tournament ordering rotates ``n/2`` disjoint pairs at once.
    """
    cfg = SvdConfig() if cfg is None else cfg
    g = check_matrix(g, "g")
    m, n = g.shape
    if m < n:
        t = jacobi_svd(g.T, cfg)
        return JacobiSVD(t.V, t.s, t.U, t.sweeps)

    padded = n + (n % 2)
    # Rows of wt are the columns of the working matrix (contiguous gathers);
    # rows of vt are the columns of V.
    wt = np.zeros((padded, m))
    wt[:n] = g.T
    vt = np.eye(padded)
    rounds = _round_robin(padded) if padded > 1 else []

    sweeps = 0
    converged = padded < 2
    while not converged:
        if sweeps == MAX_JACOBI_SWEEPS:
            raise ConvergenceError(
                f"Jacobi SVD did not converge in {MAX_JACOBI_SWEEPS} sweeps"
            )
        sweeps += 1
        rotated = 0
        for i, j in rounds:
            wi = wt[i]
            wj = wt[j]
            alpha = np.einsum("ij,ij->i", wi, wi)
            beta = np.einsum("ij,ij->i", wj, wj)
            gamma = np.einsum("ij,ij->i", wi, wj)
            active = np.abs(gamma) > cfg.sweep_tol * np.sqrt(alpha * beta)
            if not active.any():
                continue
            rotated += int(active.sum())
            if not active.all():
                i, j = i[active], j[active]
                wi, wj = wi[active], wj[active]
                alpha, beta, gamma = alpha[active], beta[active], gamma[active]
            zeta = (beta - alpha) / (2.0 * gamma)
            tan = np.copysign(1.0, zeta) / (np.abs(zeta) + np.sqrt(1.0 + zeta * zeta))
            cos = (1.0 / np.sqrt(1.0 + tan * tan))[:, None]
            sin = cos * tan[:, None]
            wt[i] = cos * wi - sin * wj
            wt[j] = sin * wi + cos * wj
            vi, vj = vt[i], vt[j]
            vt[i] = cos * vi - sin * vj
            vt[j] = sin * vi + cos * vj
        converged = rotated == 0

    wt = wt[:n]
    s = np.sqrt(np.einsum("ij,ij->i", wt, wt))
    order = np.argsort(-s, kind="stable")
    s = s[order]
    wt = wt[order]
    v = np.ascontiguousarray(vt[order][:, :n].T)
    u = np.zeros((m, n))
    nz = s > 0
    u[:, nz] = (wt[nz] / s[nz, None]).T
    return JacobiSVD(u, s, v, sweeps)


def pinv_svd_reference(g, cfg=None):
    """Pseudoinverse ``V diag(1/s) U'`` over singular values above the cutoff."""
    cfg = SvdConfig() if cfg is None else cfg
    g = check_matrix(g, "g")
    m, n = g.shape
    svd = jacobi_svd(g, cfg)
    if svd.s.size == 0 or svd.s[0] == 0.0:
        return np.zeros((n, m))
    rel = cfg.truncation if cfg.truncation is not None else max(m, n) * np.finfo(float).eps
    keep = svd.s > rel * svd.s[0]
    return (svd.V[:, keep] / svd.s[keep]) @ svd.U[:, keep].T
