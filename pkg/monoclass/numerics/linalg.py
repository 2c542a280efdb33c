from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence

import numpy as np

from monoclass.errors import ConvergenceError, DimensionError
from monoclass.numerics.tolerance import Tolerance, resolve_tolerance

logger = logging.getLogger(__name__)

# Off-diagonal Frobenius mass, relative to ‖M‖_F, at which Jacobi stops.
JACOBI_OFF_RATIO = 1e-12


class EigenDecomposition(NamedTuple):
    values: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True)
class PsdVerdict:
    """Outcome of a PSD test; truthy when the matrix is PSD within tolerance."""

    psd: bool
    min_eigenvalue: float
    threshold: float
    witness: Optional[np.ndarray] = None

    def __bool__(self) -> bool:
        return self.psd


def as_matrix(data: Sequence[Sequence[float]] | np.ndarray) -> np.ndarray:
    """
    Coerce input into a finite 2-D float array (rows × cols, both positive).
    """
    try:
        matrix = np.array(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DimensionError(f"Cannot interpret input as a real matrix: {exc}") from exc
    if matrix.ndim != 2 or matrix.shape[0] == 0 or matrix.shape[1] == 0:
        raise DimensionError(f"Expected a non-empty 2-D matrix, got shape {matrix.shape}")
    bad = np.argwhere(~np.isfinite(matrix))
    if bad.size:
        row, col = bad[0]
        raise DimensionError(f"Non-finite entry at ({row}, {col})")
    return matrix


def require_square(matrix: np.ndarray) -> np.ndarray:
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionError(f"Expected a square matrix, got shape {matrix.shape}")
    return matrix


def max_abs(matrix: np.ndarray) -> float:
    if matrix.size == 0:
        return 0.0
    return float(np.max(np.abs(matrix)))


def symmetrize(matrix: np.ndarray) -> np.ndarray:
    return (matrix + matrix.T) / 2.0


def round_robin_pairs(n: int) -> List[tuple[np.ndarray, np.ndarray]]:
    """
    Cyclic Jacobi ordering as a round-robin tournament: each round is a set of
    disjoint (p, q) pairs, and every pair p < q appears once per sweep.
    """
    players = list(range(n + (n % 2)))
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        pairs = [
            (min(players[i], players[m - 1 - i]), max(players[i], players[m - 1 - i]))
            for i in range(m // 2)
        ]
        pairs = [(p, q) for p, q in pairs if q < n]
        rounds.append(
            (np.array([p for p, _ in pairs], dtype=int), np.array([q for _, q in pairs], dtype=int))
        )
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _rotate_round(a: np.ndarray, v: np.ndarray, p: np.ndarray, q: np.ndarray) -> None:
    apq = a[p, q]
    active = apq != 0.0
    if not np.any(active):
        return
    p, q, apq = p[active], q[active], apq[active]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = np.where(theta >= 0.0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
    c = 1.0 / np.hypot(t, 1.0)
    s = t * c

    # Rotations on disjoint index pairs commute, so one round is applied at once.
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q

    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c[:, None] * row_p - s[:, None] * row_q
    a[q, :] = s[:, None] * row_p + c[:, None] * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0

    vec_p = v[:, p].copy()
    vec_q = v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def sym_eigen(matrix: np.ndarray, tol: Tolerance | None = None) -> EigenDecomposition:
    """
    Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Non-symmetric input is replaced by its symmetric part (M + Mᵀ)/2. Eigenvalues
    come back ascending, eigenvectors as the matching orthonormal columns.
    """
    tol = resolve_tolerance(tol)
    m = require_square(np.asarray(matrix, dtype=float))
    if max_abs(m - m.T) > tol.abs * max(1.0, max_abs(m)):
        logger.warning("sym_eigen received a non-symmetric matrix; using its symmetric part")
    a = symmetrize(m)
    n = a.shape[0]
    v = np.eye(n)

    total = float(np.linalg.norm(a))
    if n > 1 and total > 0.0:
        target = JACOBI_OFF_RATIO * total
        rounds = round_robin_pairs(n)
        for sweep in range(tol.max_iter):
            off = float(np.linalg.norm(a - np.diag(np.diag(a))))
            if off <= target:
                logger.debug("Jacobi converged after %d sweeps (n=%d)", sweep, n)
                break
            for p, q in rounds:
                _rotate_round(a, v, p, q)
        else:
            raise ConvergenceError(
                f"Jacobi did not converge in {tol.max_iter} sweeps (n={n})"
            )

    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return EigenDecomposition(values[order], v[:, order])


def min_eig_sym(matrix: np.ndarray, tol: Tolerance | None = None) -> float:
    return float(sym_eigen(matrix, tol).values[0])


def is_psd(matrix: np.ndarray, tol: Tolerance | None = None) -> PsdVerdict:
    """
    Decide whether (M + Mᵀ)/2 is positive semidefinite.

    PSD means λ_min ≥ −eig_rel·max(1, ‖M‖_max). On failure the unit eigenvector of
    λ_min is returned as a witness w with wᵀMw < 0.
    """
    tol = resolve_tolerance(tol)
    m = require_square(np.asarray(matrix, dtype=float))
    sym = symmetrize(m)
    decomposition = sym_eigen(sym, tol)
    lam = float(decomposition.values[0])
    threshold = -tol.scaled(max_abs(sym))
    if lam >= threshold:
        return PsdVerdict(psd=True, min_eigenvalue=lam, threshold=threshold)
    return PsdVerdict(
        psd=False,
        min_eigenvalue=lam,
        threshold=threshold,
        witness=decomposition.vectors[:, 0].copy(),
    )


def psd_noise_floor(matrix: np.ndarray) -> float:
    """Rounding-level eigenvalue floor used where a tolerance band would bias a search."""
    n = matrix.shape[0]
    return 64.0 * np.finfo(float).eps * max(n, 1) * max(1.0, max_abs(matrix))


def kernel_basis(matrix: np.ndarray, tol: Tolerance | None = None) -> "Subspace":
    """
    Numerical kernel {x : ‖Mx‖ ≤ eig_rel·max(1, ‖M‖_max)·‖x‖}.

    Symmetric input is decomposed directly. Otherwise the symmetric embedding
    [[0, M], [Mᵀ, 0]] is used, whose eigenvalues are ±σ_i, so singular values are
    compared without squaring.
    """
    from monoclass.numerics.subspace import Subspace, span_of

    tol = resolve_tolerance(tol)
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2:
        raise DimensionError(f"Expected a 2-D matrix, got shape {m.shape}")
    rows, cols = m.shape
    cutoff = tol.scaled(max_abs(m))

    if rows == cols and max_abs(m - m.T) <= tol.abs * max(1.0, max_abs(m)):
        decomposition = sym_eigen(symmetrize(m), tol)
        mask = np.abs(decomposition.values) <= cutoff
        vectors = decomposition.vectors[:, mask]
        return Subspace(cols, vectors.copy()) if vectors.shape[1] else Subspace.zero(cols)

    embedding = np.zeros((rows + cols, rows + cols))
    embedding[:rows, rows:] = m
    embedding[rows:, :rows] = m.T
    decomposition = sym_eigen(embedding, tol)
    mask = np.abs(decomposition.values) <= cutoff
    right_parts = decomposition.vectors[rows:, mask]
    # Right parts of the near-null eigenvectors span the right singular vectors
    # with σ ≤ cutoff; pure ker Mᵀ components leave only rounding noise here.
    candidates = [right_parts[:, j] for j in range(right_parts.shape[1])]
    return span_of(candidates, ambient_dim=cols, tol=tol)
