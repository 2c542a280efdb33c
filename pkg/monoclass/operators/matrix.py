from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from monoclass.errors import ArgumentError, ConvergenceError, PreconditionError
from monoclass.numerics import (
    Subspace,
    Tolerance,
    as_matrix,
    is_psd,
    kernel_basis,
    max_abs,
    min_eig_sym,
    psd_noise_floor,
    require_square,
    resolve_tolerance,
    sym_eigen,
    symmetrize,
)
from monoclass.operators.models import UNBOUNDED, AlphaStar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatrixOperator:
    """Single-valued linear operator on R^dim with full domain, x ↦ Mx."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = require_square(as_matrix(self.matrix)).copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "MatrixOperator":
        return cls(np.asarray(rows, dtype=float))

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    def apply(self, x: Iterable[float]) -> np.ndarray:
        return self.matrix @ np.asarray(x, dtype=float)

    def scaled(self, factor: float) -> "MatrixOperator":
        return MatrixOperator(factor * self.matrix)

    def is_zero(self, tol: Tolerance | None = None) -> bool:
        tol = resolve_tolerance(tol)
        return max_abs(self.matrix) <= tol.abs

    def to_lists(self) -> list[list[float]]:
        return [[float(x) for x in row] for row in self.matrix]


def symmetric_part(op: MatrixOperator) -> np.ndarray:
    """A₊ = ½(A + Aᵀ); carries the quadratic form ⟨x, Ax⟩."""
    return symmetrize(op.matrix)


def is_symmetric(op: MatrixOperator, tol: Tolerance | None = None) -> bool:
    tol = resolve_tolerance(tol)
    return max_abs(op.matrix - op.matrix.T) <= tol.scaled(max_abs(op.matrix))


def is_monotone(op: MatrixOperator, tol: Tolerance | None = None) -> bool:
    return is_psd(symmetric_part(op), tol).psd


def symmetric_kernel(op: MatrixOperator, tol: Tolerance | None = None) -> Subspace:
    return kernel_basis(symmetric_part(op), tol)


def is_strictly_monotone(op: MatrixOperator, tol: Tolerance | None = None) -> bool:
    """
    ⟨x, Ax⟩ = ⟨x, A₊x⟩ vanishes exactly on ker A₊ once A₊ is PSD, so strict
    monotonicity is monotone plus a trivial kernel of the symmetric part.
    """
    if not is_monotone(op, tol):
        return False
    return symmetric_kernel(op, tol).is_trivial


def is_paramonotone(op: MatrixOperator, tol: Tolerance | None = None) -> bool:
    """Monotone and ker(A₊) ⊆ ker(A)."""
    tol = resolve_tolerance(tol)
    if not is_monotone(op, tol):
        return False
    cutoff = tol.scaled(max_abs(op.matrix))
    return all(
        float(np.linalg.norm(op.matrix @ v)) <= cutoff
        for v in symmetric_kernel(op, tol).vectors()
    )


def _alpha_feasible(sym: np.ndarray, gram: np.ndarray, alpha: float) -> bool:
    shifted = sym - alpha * gram
    return min_eig_sym(shifted) >= -psd_noise_floor(shifted)


@dataclass(frozen=True)
class ReducedAlphaForm:
    """A₊ and AᵀA restricted to the range of A₊: diag(λ) and QᵀAᵀAQ."""

    eigenvalues: np.ndarray
    gram: np.ndarray

    @property
    def is_empty(self) -> bool:
        return self.eigenvalues.size == 0

    def lower_bound(self) -> float:
        """λ_min(D)/λ_max(G); D − αG is PSD for every α up to this value."""
        top = float(np.linalg.norm(self.gram, 2))
        return float(self.eigenvalues.min()) / top if top > 0.0 else float("inf")


def reduced_alpha_form(op: MatrixOperator, tol: Tolerance | None = None) -> ReducedAlphaForm | None:
    """
    Split R^d by the eigendecomposition of A₊ into its numerical kernel K and
    the span Q of the eigenvalues above the kernel cutoff.

    None when some v ∈ K has ‖Av‖ above the cutoff used by is_paramonotone: then
    A₊ − αAᵀA has a negative direction for every α > 0. Otherwise AK = 0 and
    A₊ − αAᵀA is PSD on R^d exactly when diag(λ_Q) − α·QᵀAᵀAQ is.
    """
    tol = resolve_tolerance(tol)
    sym = symmetric_part(op)
    decomposition = sym_eigen(sym, tol)
    eig_cutoff = tol.scaled(max_abs(sym))
    image_cutoff = tol.scaled(max_abs(op.matrix))
    null = np.abs(decomposition.values) <= eig_cutoff
    for v in decomposition.vectors[:, null].T:
        if float(np.linalg.norm(op.matrix @ v)) > image_cutoff:
            return None
    keep = decomposition.values > eig_cutoff
    q = decomposition.vectors[:, keep]
    image = op.matrix @ q
    return ReducedAlphaForm(eigenvalues=decomposition.values[keep], gram=image.T @ image)


def brezis_haraux_alpha(op: MatrixOperator, tol: Tolerance | None = None) -> AlphaStar:
    """
    α* = sup{α ≥ 0 : A₊ − α·AᵀA is PSD}, i.e. the best constant in
    ⟨x, Ax⟩ ≥ α⟨Ax, Ax⟩.

    Computed on the reduced form, so α* is 0 exactly when is_paramonotone
    fails. Doubling brackets α* from the closed-form lower bound, then
    bisection shrinks the bracket to relative width tol.bisect_rel.
    """
    tol = resolve_tolerance(tol)
    if not is_monotone(op, tol):
        raise PreconditionError("brezis_haraux_alpha requires a monotone operator")
    if op.is_zero(tol):
        return UNBOUNDED
    form = reduced_alpha_form(op, tol)
    if form is None:
        return 0.0
    if form.is_empty:
        logger.debug("A vanishes on R^%d within tolerance; α* unbounded", op.dim)
        return UNBOUNDED

    sym, gram = np.diag(form.eigenvalues), form.gram
    lo = form.lower_bound()
    if np.isinf(lo):
        return UNBOUNDED
    hi = max(lo, 1.0 / max_abs(op.matrix))
    steps = 0
    while _alpha_feasible(sym, gram, hi):
        lo, hi = hi, 2.0 * hi
        steps += 1
        if steps > tol.max_iter:
            raise ConvergenceError("α* doubling did not terminate")
    while hi - lo > tol.bisect_rel * hi:
        mid = 0.5 * (lo + hi)
        if _alpha_feasible(sym, gram, mid):
            lo = mid
        else:
            hi = mid
        steps += 1
        if steps > 2 * tol.max_iter:
            logger.warning("α* bisection stopped at step budget with bracket [%g, %g]", lo, hi)
            break
    logger.debug("α* bracket [%g, %g] after %d steps", lo, hi, steps)
    return lo


def star3_from_alpha(alpha: AlphaStar) -> bool:
    return alpha == UNBOUNDED or float(alpha) > 0.0


def is_3star(op: MatrixOperator, tol: Tolerance | None = None) -> bool:
    """Monotone and (A = 0 or α* > 0); the latter holds iff the reduced form exists."""
    tol = resolve_tolerance(tol)
    if not is_monotone(op, tol):
        return False
    return op.is_zero(tol) or reduced_alpha_form(op, tol) is not None


def is_maximal(op: MatrixOperator, tol: Tolerance | None = None) -> bool:
    """Monotone linear operators with full domain are maximal monotone."""
    return is_monotone(op, tol)


def _entries_2x2(op: MatrixOperator) -> tuple[float, float, float, float]:
    if op.dim != 2:
        raise ArgumentError(f"Expected a 2×2 operator, got {op.dim}×{op.dim}")
    m = op.matrix
    # Layout: [[a, c], [b, d]].
    return float(m[0, 0]), float(m[1, 0]), float(m[0, 1]), float(m[1, 1])


def necessary_3cm_2x2(op: MatrixOperator, tol: Tolerance | None = None) -> bool:
    """Necessary condition for 3-cyclic monotonicity in R²: max{|b|, |c|} ≤ a + d."""
    tol = resolve_tolerance(tol)
    a, b, c, d = _entries_2x2(op)
    return max(abs(b), abs(c)) - a - d <= tol.scaled(max_abs(op.matrix))


def _eigen_slack(op: MatrixOperator, tol: Tolerance) -> float:
    return tol.scaled(max_abs(symmetric_part(op)))


def monotone_2x2_closed_form(op: MatrixOperator, tol: Tolerance | None = None) -> bool:
    """
    a + d ≥ 0 and 4ad ≥ (b + c)², evaluated on A + εI with ε the eigenvalue
    tolerance, so it agrees with λ_min(A₊) ≥ −ε.
    """
    tol = resolve_tolerance(tol)
    a, b, c, d = _entries_2x2(op)
    eps = _eigen_slack(op, tol)
    return a + d + 2 * eps >= 0 and 4 * (a + eps) * (d + eps) >= (b + c) ** 2


def paramonotone_2x2_closed_form(op: MatrixOperator, tol: Tolerance | None = None) -> bool:
    """In R², paramonotone ⟺ strictly monotone or symmetric."""
    tol = resolve_tolerance(tol)
    a, b, c, d = _entries_2x2(op)
    if not monotone_2x2_closed_form(op, tol):
        return False
    eps = _eigen_slack(op, tol)
    # λ_min(A₊) > ε, i.e. A − εI has a positive definite symmetric part.
    strictly = a + d - 2 * eps > 0 and 4 * (a - eps) * (d - eps) > (b + c) ** 2
    return strictly or is_symmetric(op, tol)
