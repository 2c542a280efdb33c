from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from monoclass.errors import ArgumentError
from monoclass.numerics import PsdVerdict, Tolerance, is_psd, resolve_tolerance, symmetrize
from monoclass.operators.matrix import MatrixOperator
from monoclass.operators.models import CycleWitness, cycle_sum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CyclicVerdict:
    cyclic: bool
    min_eigenvalue: float
    witness: Optional[CycleWitness] = None

    def __bool__(self) -> bool:
        return self.cyclic


def require_cycle_length(n: int) -> None:
    if n < 2:
        raise ArgumentError(f"Cycle length must be at least 2, got {n}")


def cyclic_block_form(block: np.ndarray, n: int) -> np.ndarray:
    """
    Symmetrized quadratic form of the cycle sum.

    With D on the diagonal blocks and −D on the cyclic subdiagonal blocks
    (block row i+1, block column i, indices mod n), the stacked cycle
    c = (c_1..c_n) satisfies cᵀCc = Σ c_iᵀDc_i − c_{i+1}ᵀDc_i. Returns (C + Cᵀ)/2.
    """
    require_cycle_length(n)
    k = block.shape[0]
    form = np.zeros((n * k, n * k))
    for i in range(n):
        j = (i + 1) % n
        form[i * k:(i + 1) * k, i * k:(i + 1) * k] += block
        form[j * k:(j + 1) * k, i * k:(i + 1) * k] -= block
    return symmetrize(form)


def cyclic_gram(op: MatrixOperator, n: int) -> np.ndarray:
    return cyclic_block_form(op.matrix, n)


def unstack_cycle(vector: np.ndarray, n: int) -> np.ndarray:
    return np.asarray(vector, dtype=float).reshape(n, -1)


def is_n_cyclic(op: MatrixOperator, n: int, tol: Tolerance | None = None) -> CyclicVerdict:
    """
    n-cyclic monotonicity as PSD-ness of the cyclic block form. On failure the
    negative eigenvector is unstacked into a cycle x_1..x_n with x_i* = Ax_i.
    """
    tol = resolve_tolerance(tol)
    verdict: PsdVerdict = is_psd(cyclic_gram(op, n), tol)
    if verdict.psd:
        return CyclicVerdict(cyclic=True, min_eigenvalue=verdict.min_eigenvalue)
    points = unstack_cycle(verdict.witness, n)
    images = points @ op.matrix.T
    value = cycle_sum(points, images)
    logger.debug("n=%d cycle witness with sum %g", n, value)
    return CyclicVerdict(
        cyclic=False,
        min_eigenvalue=verdict.min_eigenvalue,
        witness=CycleWitness(
            points=points.tolist(),
            images=images.tolist(),
            cycle_sum=value,
        ),
    )
