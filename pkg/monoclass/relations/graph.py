from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional

import numpy as np

from monoclass.errors import DimensionError, DomainError, PreconditionError
from monoclass.numerics import (
    Subspace,
    Tolerance,
    contains,
    intersect,
    is_subset,
    orth_complement,
    project,
    resolve_tolerance,
    span_of,
    symmetrize,
)
from monoclass.operators.matrix import MatrixOperator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonotoneForm:
    """
    Quadratic form of ⟨y, y*⟩ over graph coefficients: for a graph point
    (Xc, Yc), cᵀBc = ⟨Xc, Yc⟩ with B = ½(XᵀY + YᵀX). `cross` keeps XᵀY itself.
    """

    B: np.ndarray
    cross: np.ndarray


@dataclass(frozen=True)
class LinearRelation:
    """
    Linear relation on R^d held as its graph, a subspace of R^{2d}; the first
    d coordinates of a graph vector are the point x, the last d its image x*.
    """

    ambient_dim: int
    graph: Subspace
    dom: Subspace
    ran: Subspace
    a0: Subspace
    ker: Subspace

    @property
    def graph_dim(self) -> int:
        return self.graph.dim

    @property
    def X(self) -> np.ndarray:
        return self.graph.basis[: self.ambient_dim, :]

    @property
    def Y(self) -> np.ndarray:
        return self.graph.basis[self.ambient_dim:, :]

    def monotone_form(self) -> MonotoneForm:
        cross = self.X.T @ self.Y
        return MonotoneForm(B=symmetrize(cross), cross=cross)

    def point(self, coefficients: Iterable[float]) -> tuple[np.ndarray, np.ndarray]:
        c = np.asarray(coefficients, dtype=float)
        return self.X @ c, self.Y @ c

    def contains_pair(
        self,
        x: Iterable[float],
        xstar: Iterable[float],
        tol: Tolerance | None = None,
    ) -> bool:
        pair = np.concatenate([np.asarray(x, dtype=float), np.asarray(xstar, dtype=float)])
        if pair.shape[0] != 2 * self.ambient_dim:
            raise DimensionError(
                f"Pair of length {pair.shape[0]} does not fit R^{self.ambient_dim} × R^{self.ambient_dim}"
            )
        return contains(self.graph, pair, tol)

    def is_single_valued(self) -> bool:
        return self.a0.is_trivial

    def graph_vectors(self) -> List[np.ndarray]:
        return self.graph.vectors()


def _assemble(graph: Subspace, d: int, tol: Tolerance) -> LinearRelation:
    x_part = graph.basis[:d, :]
    y_part = graph.basis[d:, :]
    dom = span_of([x_part[:, j] for j in range(graph.dim)], ambient_dim=d, tol=tol)
    ran = span_of([y_part[:, j] for j in range(graph.dim)], ambient_dim=d, tol=tol)

    zero_times_image = intersect(graph, Subspace.coordinates(2 * d, range(d, 2 * d)), tol)
    a0 = span_of([v[d:] for v in zero_times_image.vectors()], ambient_dim=d, tol=tol)
    point_times_zero = intersect(graph, Subspace.coordinates(2 * d, range(d)), tol)
    ker = span_of([v[:d] for v in point_times_zero.vectors()], ambient_dim=d, tol=tol)

    return LinearRelation(ambient_dim=d, graph=graph, dom=dom, ran=ran, a0=a0, ker=ker)


def relation_from_graph(
    vectors: Iterable[Iterable[float]],
    tol: Tolerance | None = None,
    *,
    ambient_dim: Optional[int] = None,
) -> LinearRelation:
    """
    Build a linear relation from spanning vectors of its graph in R^{2d}.

    Vectors are orthonormalized and numerically dependent ones dropped; dom,
    ran, A0 and ker are computed once and cached on the result.
    """
    tol = resolve_tolerance(tol)
    arrays = [np.asarray(v, dtype=float) for v in vectors]
    if ambient_dim is None:
        if not arrays:
            raise DimensionError("An empty graph needs an explicit ambient dimension")
        length = arrays[0].shape[0]
        if length == 0 or length % 2:
            raise DimensionError(f"Graph vectors must have even positive length, got {length}")
        ambient_dim = length // 2
    for vec in arrays:
        if vec.ndim != 1 or vec.shape[0] != 2 * ambient_dim:
            raise DimensionError(
                f"Graph vector of shape {vec.shape} does not fit R^{2 * ambient_dim}"
            )
    graph = span_of(arrays, ambient_dim=2 * ambient_dim, tol=tol)
    return _assemble(graph, ambient_dim, tol)


def relation_from_operator(op: MatrixOperator, tol: Tolerance | None = None) -> LinearRelation:
    d = op.dim
    eye = np.eye(d)
    return relation_from_graph(
        [np.concatenate([eye[:, i], op.matrix[:, i]]) for i in range(d)],
        tol,
        ambient_dim=d,
    )


def trivial_relation(d: int, tol: Tolerance | None = None) -> LinearRelation:
    """The relation {0} × {0} on R^d."""
    return relation_from_graph([], tol, ambient_dim=d)


class Image(NamedTuple):
    representative: np.ndarray
    a0: Subspace


def image_of(rel: LinearRelation, x: Iterable[float], tol: Tolerance | None = None) -> Image:
    """
    Ax = x₀* + A0, where x₀* is the unique element of P_{A0⊥}Ax.
    """
    tol = resolve_tolerance(tol)
    vec = np.asarray(x, dtype=float)
    if vec.shape != (rel.ambient_dim,):
        raise DimensionError(f"Point of shape {vec.shape} does not fit R^{rel.ambient_dim}")
    if not contains(rel.dom, vec, tol):
        raise DomainError("Point lies outside dom A")
    if rel.graph_dim == 0:
        return Image(np.zeros(rel.ambient_dim), rel.a0)
    coefficients, *_ = np.linalg.lstsq(rel.X, vec, rcond=None)
    image = rel.Y @ coefficients
    return Image(image - project(rel.a0, image), rel.a0)


def selection(
    rel: LinearRelation,
    subspace: Optional[Subspace] = None,
    tol: Tolerance | None = None,
) -> LinearRelation:
    """
    Ãx := P_V Ax. Requires dom A ⊂ V and A0 ⊂ V⊥; the default V = A0⊥ gives the
    canonical single-valued selection, whose graph sits inside the graph of A.
    """
    tol = resolve_tolerance(tol)
    if subspace is None:
        subspace = orth_complement(rel.a0)
    if subspace.ambient_dim != rel.ambient_dim:
        raise DimensionError(
            f"Subspace lives in R^{subspace.ambient_dim}, relation in R^{rel.ambient_dim}"
        )
    if not is_subset(rel.dom, subspace, tol):
        raise PreconditionError("selection requires dom A ⊂ V")
    if not is_subset(rel.a0, orth_complement(subspace), tol):
        raise PreconditionError("selection requires A0 ⊂ V⊥")
    d = rel.ambient_dim
    vectors = [
        np.concatenate([g[:d], project(subspace, g[d:])])
        for g in rel.graph_vectors()
    ]
    return relation_from_graph(vectors, tol, ambient_dim=d)


def extend_by_domain_perp(rel: LinearRelation, tol: Tolerance | None = None) -> LinearRelation:
    """Ãx := Ax + (dom A)⊥, so that Ã0 = (dom A)⊥."""
    tol = resolve_tolerance(tol)
    d = rel.ambient_dim
    extra = [np.concatenate([np.zeros(d), w]) for w in orth_complement(rel.dom).vectors()]
    return relation_from_graph(rel.graph_vectors() + extra, tol, ambient_dim=d)
