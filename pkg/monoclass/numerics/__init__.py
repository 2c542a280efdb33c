from .tolerance import Tolerance, resolve_tolerance
from .linalg import (
    EigenDecomposition,
    PsdVerdict,
    as_matrix,
    is_psd,
    kernel_basis,
    max_abs,
    min_eig_sym,
    psd_noise_floor,
    require_square,
    sym_eigen,
    symmetrize,
)
from .subspace import (
    Subspace,
    contains,
    equals,
    intersect,
    is_subset,
    orth_complement,
    project,
    span_of,
    subspace_sum,
)

__all__ = [
    "Tolerance",
    "resolve_tolerance",
    "EigenDecomposition",
    "PsdVerdict",
    "as_matrix",
    "is_psd",
    "kernel_basis",
    "max_abs",
    "min_eig_sym",
    "psd_noise_floor",
    "require_square",
    "sym_eigen",
    "symmetrize",
    "Subspace",
    "contains",
    "equals",
    "intersect",
    "is_subset",
    "orth_complement",
    "project",
    "span_of",
    "subspace_sum",
]
