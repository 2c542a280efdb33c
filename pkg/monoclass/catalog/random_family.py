from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from monoclass.numerics import Tolerance, resolve_tolerance
from monoclass.operators.matrix import MatrixOperator
from monoclass.relations.graph import LinearRelation, relation_from_graph

logger = logging.getLogger(__name__)

# Nonzero eigenvalues of generated symmetric parts stay in this band.
EIGEN_BAND = (0.1, 2.0)
SKEW_BAND = (0.5, 2.0)


def random_orthogonal(rng: np.random.Generator, d: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((d, d)))
    return q * np.sign(np.diag(r))


def random_skew(rng: np.random.Generator, d: int) -> np.ndarray:
    """Skew matrix with Frobenius norm drawn from SKEW_BAND (zero when d = 1)."""
    g = rng.standard_normal((d, d))
    k = (g - g.T) / 2.0
    norm = float(np.linalg.norm(k))
    if norm == 0.0:
        return k
    return k * (rng.uniform(*SKEW_BAND) / norm)


def _psd_spectrum(rng: np.random.Generator, d: int, rank: int) -> np.ndarray:
    values = np.zeros(d)
    values[:rank] = rng.uniform(*EIGEN_BAND, size=rank)
    return values


def random_monotone_matrix(
    rng: np.random.Generator,
    d: int,
    *,
    paramonotone: Optional[bool] = None,
    rank: Optional[int] = None,
) -> MatrixOperator:
    """
    A = S + K with S PSD of the given rank and K skew.

    paramonotone=True confines K to range(S), so ker A₊ = ker S ⊆ ker A.
    paramonotone=False uses a generic K and resamples until K moves every
    kernel direction of S by at least 0.1. None picks either at random.
    """
    if paramonotone is None:
        paramonotone = bool(rng.integers(0, 2))
    if rank is None:
        rank = int(rng.integers(0, d + 1))
    u = random_orthogonal(rng, d)
    s = u @ np.diag(_psd_spectrum(rng, d, rank)) @ u.T
    s = (s + s.T) / 2.0

    if paramonotone:
        q = u[:, :rank] @ u[:, :rank].T
        return MatrixOperator(s + q @ random_skew(rng, d) @ q)

    kernel = u[:, rank:]
    for _ in range(100):
        k = random_skew(rng, d)
        if kernel.shape[1] == 0 or np.min(np.linalg.norm(k @ kernel, axis=0)) >= 0.1:
            return MatrixOperator(s + k)
    logger.debug("could not move the kernel of S (d=%d, rank=%d); returning S + K as drawn", d, rank)
    return MatrixOperator(s + k)


def random_monotone_2x2(rng: np.random.Generator) -> MatrixOperator:
    """2×2 monotone matrix mixing strict, symmetric-singular and non-PM shapes."""
    return random_monotone_matrix(rng, 2, rank=int(rng.choice([0, 1, 1, 2])))


def random_matrix(rng: np.random.Generator, d: int, scale: float = 1.0) -> MatrixOperator:
    return MatrixOperator(scale * rng.standard_normal((d, d)))


def random_monotone_relation(
    rng: np.random.Generator,
    d: int,
    tol: Tolerance | None = None,
    *,
    maximal: Optional[bool] = None,
    paramonotone: Optional[bool] = None,
) -> LinearRelation:
    """
    Monotone relation with dom A = D and A0 = Z ⊆ D⊥, in rotated coordinates.

    Points x ∈ D (dim p ≥ 1) map to Mx = Sx + Kx + Rx: S PSD and K skew act
    inside D, R maps D into D⊥ and adds nothing to ⟨x, Mx⟩. Z is all of D⊥
    when `maximal`, otherwise a random coordinate slice of it. `paramonotone`
    confines K to range(S) as in `random_monotone_matrix`.
    """
    tol = resolve_tolerance(tol)
    if maximal is None:
        maximal = bool(rng.integers(0, 2))
    if paramonotone is None:
        paramonotone = bool(rng.integers(0, 2))

    u = random_orthogonal(rng, d)
    p = int(rng.integers(1, d + 1))
    inner = random_monotone_matrix(rng, p, paramonotone=paramonotone).matrix

    images = np.zeros((d, p))
    images[:p, :] = inner
    if p < d:
        images[p:, :] = rng.standard_normal((d - p, p))

    if maximal:
        z_indices = list(range(p, d))
    else:
        z_indices = [i for i in range(p, d) if rng.random() < 0.5]

    vectors = [np.concatenate([u[:, i], u @ images[:, i]]) for i in range(p)]
    vectors += [np.concatenate([np.zeros(d), u[:, j]]) for j in z_indices]
    return relation_from_graph(vectors, tol, ambient_dim=d)
