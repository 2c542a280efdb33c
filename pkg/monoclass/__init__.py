"""Classify monotone linear operators and relations into the PM-SM-3CM-MM-3* classes."""

from .errors import (
    ArgumentError,
    ConfigError,
    ConvergenceError,
    DimensionError,
    DomainError,
    InputError,
    InvariantError,
    MonoclassError,
    PreconditionError,
)
from .numerics import Subspace, Tolerance
from .operators import (
    UNBOUNDED,
    ClassCode,
    ClassificationReport,
    CycleWitness,
    MatrixOperator,
    brezis_haraux_alpha,
    classify,
    is_3star,
    is_maximal,
    is_monotone,
    is_n_cyclic,
    is_paramonotone,
    is_strictly_monotone,
)
from .relations import (
    LinearRelation,
    classify_relation,
    extend_by_domain_perp,
    image_of,
    is_maximal_relation,
    monotonically_related,
    relation_from_graph,
    relation_from_operator,
    selection,
)
from .products import class_and, class_and_many, product_many, product_op, product_relation
from .oracle import probe_3star_growth, probe_extension, sample_cycle
from .verify import run_suites

__all__ = [
    "ArgumentError",
    "ConfigError",
    "ConvergenceError",
    "DimensionError",
    "DomainError",
    "InputError",
    "InvariantError",
    "MonoclassError",
    "PreconditionError",
    "Subspace",
    "Tolerance",
    "UNBOUNDED",
    "ClassCode",
    "ClassificationReport",
    "CycleWitness",
    "MatrixOperator",
    "brezis_haraux_alpha",
    "classify",
    "is_3star",
    "is_maximal",
    "is_monotone",
    "is_n_cyclic",
    "is_paramonotone",
    "is_strictly_monotone",
    "LinearRelation",
    "classify_relation",
    "extend_by_domain_perp",
    "image_of",
    "is_maximal_relation",
    "monotonically_related",
    "relation_from_graph",
    "relation_from_operator",
    "selection",
    "class_and",
    "class_and_many",
    "product_many",
    "product_op",
    "product_relation",
    "probe_3star_growth",
    "probe_extension",
    "sample_cycle",
    "run_suites",
]
