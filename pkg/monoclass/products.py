from __future__ import annotations

from functools import reduce

import numpy as np
from scipy.linalg import block_diag

from monoclass.errors import ArgumentError
from monoclass.numerics import Tolerance
from monoclass.operators.matrix import MatrixOperator
from monoclass.operators.models import ClassCode
from monoclass.relations.graph import LinearRelation, relation_from_graph


def product_op(a: MatrixOperator, b: MatrixOperator) -> MatrixOperator:
    """(A × B)(x_a, x_b) = (Ax_a, Bx_b), i.e. diag(A, B)."""
    return MatrixOperator(block_diag(a.matrix, b.matrix))


def product_many(*ops: MatrixOperator) -> MatrixOperator:
    if not ops:
        raise ArgumentError("product_many needs at least one factor")
    return reduce(product_op, ops)


def product_relation(
    a: LinearRelation,
    b: LinearRelation,
    tol: Tolerance | None = None,
) -> LinearRelation:
    """
    gra(A × B) = {((x_a, x_b), (x_a*, x_b*))}: the first d_A coordinates of each
    half belong to A, the next d_B to B.
    """
    da, db = a.ambient_dim, b.ambient_dim
    vectors = []
    for g in a.graph_vectors():
        vectors.append(np.concatenate([g[:da], np.zeros(db), g[da:], np.zeros(db)]))
    for g in b.graph_vectors():
        vectors.append(np.concatenate([np.zeros(da), g[:db], np.zeros(da), g[db:]]))
    return relation_from_graph(vectors, tol, ambient_dim=da + db)


def class_and(c1: ClassCode, c2: ClassCode) -> ClassCode:
    """Each class survives a product exactly when both factors have it."""
    return c1 & c2


def class_and_many(*codes: ClassCode) -> ClassCode:
    if not codes:
        raise ArgumentError("class_and_many needs at least one code")
    return reduce(class_and, codes)
