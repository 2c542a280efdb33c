from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

from monoclass.errors import DimensionError
from monoclass.numerics.tolerance import Tolerance, resolve_tolerance


@dataclass(frozen=True)
class Subspace:
    """
    Subspace of R^ambient_dim held as an orthonormal column basis.

    `basis` has shape (ambient_dim, dim); dim may be 0.
    """

    ambient_dim: int
    basis: np.ndarray

    def __post_init__(self) -> None:
        if self.ambient_dim < 1:
            raise DimensionError(f"Ambient dimension must be positive, got {self.ambient_dim}")
        if self.basis.ndim != 2 or self.basis.shape[0] != self.ambient_dim:
            raise DimensionError(
                f"Basis shape {self.basis.shape} does not fit ambient dimension {self.ambient_dim}"
            )
        if self.basis.shape[1] > self.ambient_dim:
            raise DimensionError("More basis vectors than the ambient dimension")
        self.basis.setflags(write=False)

    @property
    def dim(self) -> int:
        return int(self.basis.shape[1])

    @property
    def is_trivial(self) -> bool:
        return self.dim == 0

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, np.zeros((ambient_dim, 0)))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, np.eye(ambient_dim))

    @classmethod
    def coordinates(cls, ambient_dim: int, indices: Iterable[int]) -> "Subspace":
        eye = np.eye(ambient_dim)
        return cls(ambient_dim, eye[:, sorted(set(indices))])

    def vectors(self) -> List[np.ndarray]:
        return [self.basis[:, i].copy() for i in range(self.dim)]

    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.T

    def to_lists(self) -> List[List[float]]:
        return [[float(x) for x in vec] for vec in self.vectors()]


def _as_vector(x: Iterable[float], ambient_dim: Optional[int] = None) -> np.ndarray:
    vec = np.asarray(x, dtype=float)
    if vec.ndim != 1:
        raise DimensionError(f"Expected a vector, got shape {vec.shape}")
    if ambient_dim is not None and vec.shape[0] != ambient_dim:
        raise DimensionError(f"Vector length {vec.shape[0]} != ambient dimension {ambient_dim}")
    return vec


def _check_same_ambient(s1: Subspace, s2: Subspace) -> None:
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionError(
            f"Ambient dimensions differ: {s1.ambient_dim} vs {s2.ambient_dim}"
        )


def span_of(
    vectors: Iterable[Iterable[float]],
    ambient_dim: Optional[int] = None,
    tol: Tolerance | None = None,
) -> Subspace:
    """
    Orthonormal basis of the span, by modified Gram–Schmidt with one
    reorthogonalization pass. A vector is dropped when its residual is at most
    tol.abs·max(1, ‖v‖).
    """
    tol = resolve_tolerance(tol)
    arrays = [_as_vector(v) for v in vectors]
    if ambient_dim is None:
        if not arrays:
            raise DimensionError("span_of needs vectors or an explicit ambient dimension")
        ambient_dim = arrays[0].shape[0]
    basis: List[np.ndarray] = []
    for vec in arrays:
        if vec.shape[0] != ambient_dim:
            raise DimensionError(
                f"Vector length {vec.shape[0]} != ambient dimension {ambient_dim}"
            )
        w = vec.copy()
        for _ in range(2):
            for b in basis:
                w -= (b @ w) * b
        norm = float(np.linalg.norm(w))
        if norm > tol.abs * max(1.0, float(np.linalg.norm(vec))):
            basis.append(w / norm)
        if len(basis) == ambient_dim:
            break
    if not basis:
        return Subspace.zero(ambient_dim)
    return Subspace(ambient_dim, np.column_stack(basis))


def project(subspace: Subspace, x: Iterable[float]) -> np.ndarray:
    vec = _as_vector(x, subspace.ambient_dim)
    if subspace.is_trivial:
        return np.zeros_like(vec)
    return subspace.basis @ (subspace.basis.T @ vec)


def contains(subspace: Subspace, x: Iterable[float], tol: Tolerance | None = None) -> bool:
    tol = resolve_tolerance(tol)
    vec = _as_vector(x, subspace.ambient_dim)
    residual = float(np.linalg.norm(vec - project(subspace, vec)))
    return residual <= tol.abs * max(1.0, float(np.linalg.norm(vec)))


def is_subset(s1: Subspace, s2: Subspace, tol: Tolerance | None = None) -> bool:
    _check_same_ambient(s1, s2)
    if s1.dim > s2.dim:
        return False
    return all(contains(s2, vec, tol) for vec in s1.vectors())


def equals(s1: Subspace, s2: Subspace, tol: Tolerance | None = None) -> bool:
    return s1.dim == s2.dim and is_subset(s1, s2, tol)


def orth_complement(subspace: Subspace) -> Subspace:
    """
    Orthogonal complement built from coordinate vectors: at each step the unit
    vector e_i with the largest residual is kept, so the basis is exact for
    coordinate subspaces and well conditioned otherwise.
    """
    n = subspace.ambient_dim
    q = subspace.basis
    residuals = np.eye(n) - q @ q.T
    chosen: List[np.ndarray] = []
    for _ in range(n - subspace.dim):
        norms = np.linalg.norm(residuals, axis=0)
        i = int(np.argmax(norms))
        u = residuals[:, i].copy()
        u -= q @ (q.T @ u)
        for b in chosen:
            u -= (b @ u) * b
        u /= np.linalg.norm(u)
        chosen.append(u)
        residuals -= np.outer(u, u @ residuals)
    if not chosen:
        return Subspace.zero(n)
    return Subspace(n, np.column_stack(chosen))


def intersect(s1: Subspace, s2: Subspace, tol: Tolerance | None = None) -> Subspace:
    """S1 ∩ S2 = (S1⊥ + S2⊥)⊥."""
    _check_same_ambient(s1, s2)
    perp_sum = span_of(
        orth_complement(s1).vectors() + orth_complement(s2).vectors(),
        ambient_dim=s1.ambient_dim,
        tol=tol,
    )
    return orth_complement(perp_sum)


def subspace_sum(s1: Subspace, s2: Subspace, tol: Tolerance | None = None) -> Subspace:
    _check_same_ambient(s1, s2)
    return span_of(s1.vectors() + s2.vectors(), ambient_dim=s1.ambient_dim, tol=tol)
