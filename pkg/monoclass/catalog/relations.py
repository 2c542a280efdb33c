from __future__ import annotations

import math
from functools import partial
from typing import List

import numpy as np

from monoclass.catalog.operators import CatalogEntry, identity, make_entry, rotation
from monoclass.numerics import Tolerance
from monoclass.relations.graph import (
    LinearRelation,
    extend_by_domain_perp,
    relation_from_graph,
    relation_from_operator,
)


def max_r2(tol: Tolerance | None = None) -> LinearRelation:
    """gra A = span{(1,0;1,0), (0,0;0,1)}: A e₁ = e₁, A0 = span{e₂}."""
    return relation_from_graph([[1, 0, 1, 0], [0, 0, 0, 1]], tol)


def non_max(tol: Tolerance | None = None) -> LinearRelation:
    """gra A = span{(1,0;1,0)}: monotone with a one-dimensional graph in R²."""
    return relation_from_graph([[1, 0, 1, 0]], tol)


def star_not_pm(tol: Tolerance | None = None) -> LinearRelation:
    """
    gra A = span{(e₁; e₂), (0; e₃)} in R³.

    ⟨x, x*⟩ vanishes on the whole graph, yet every null point (e₁, e₂ + te₃)
    has its image orthogonal to dom A = span{e₁} and its point orthogonal to
    ran A = span{e₂, e₃}: 3* without paramonotonicity.
    """
    e = np.eye(3)
    return relation_from_graph(
        [np.concatenate([e[0], e[1]]), np.concatenate([np.zeros(3), e[2]])],
        tol,
    )


def star_not_pm_extended(tol: Tolerance | None = None) -> LinearRelation:
    return extend_by_domain_perp(star_not_pm(tol), tol)


def identity_graph(d: int = 2, tol: Tolerance | None = None) -> LinearRelation:
    return relation_from_operator(identity(d), tol)


def rotation_graph(theta: float, tol: Tolerance | None = None) -> LinearRelation:
    return relation_from_operator(rotation(theta), tol)


def relation_catalog() -> List[CatalogEntry]:
    return [
        make_entry(
            "max_r2",
            max_r2,
            "11111",
            "graph of dimension 2 in R², A0 = (dom A)⊥ = span{e₂}",
        ),
        make_entry(
            "star_not_pm",
            star_not_pm,
            "00101",
            "{(e₁; e₂), (0; e₃)} in R³: 3* and 3-cyclic monotone, neither PM nor maximal",
        ),
        make_entry(
            "star_not_pm_extended",
            star_not_pm_extended,
            "10111",
            "star_not_pm plus (dom A)⊥ in A0: a 3* relation extended this way is paramonotone",
        ),
        make_entry(
            "non_max",
            non_max,
            "11101",
            "{(1,0;1,0)} in R²: graph dimension 1 < 2, so not maximal",
        ),
        make_entry("identity_graph", identity_graph, "11111", "graph of the identity on R²"),
        make_entry(
            "rotation_half_pi_graph",
            partial(rotation_graph, math.pi / 2),
            "00010",
            "graph of the rotation by π/2",
        ),
    ]

