from .models import (
    CLASS_LABELS,
    CLASS_ORDER,
    UNBOUNDED,
    AlphaStar,
    ClassCode,
    ClassificationReport,
    CycleWitness,
    RelationSummary,
    cycle_sum,
)
from .matrix import (
    MatrixOperator,
    brezis_haraux_alpha,
    reduced_alpha_form,
    is_3star,
    is_maximal,
    is_monotone,
    is_paramonotone,
    is_strictly_monotone,
    is_symmetric,
    monotone_2x2_closed_form,
    necessary_3cm_2x2,
    paramonotone_2x2_closed_form,
    star3_from_alpha,
    symmetric_kernel,
    symmetric_part,
)
from .cyclic import CyclicVerdict, cyclic_block_form, cyclic_gram, is_n_cyclic, unstack_cycle
from .classify import classify

__all__ = [
    "CLASS_LABELS",
    "CLASS_ORDER",
    "UNBOUNDED",
    "AlphaStar",
    "ClassCode",
    "ClassificationReport",
    "CycleWitness",
    "RelationSummary",
    "cycle_sum",
    "MatrixOperator",
    "brezis_haraux_alpha",
    "reduced_alpha_form",
    "is_3star",
    "is_maximal",
    "is_monotone",
    "is_paramonotone",
    "is_strictly_monotone",
    "is_symmetric",
    "monotone_2x2_closed_form",
    "necessary_3cm_2x2",
    "paramonotone_2x2_closed_form",
    "star3_from_alpha",
    "symmetric_kernel",
    "symmetric_part",
    "CyclicVerdict",
    "cyclic_block_form",
    "cyclic_gram",
    "is_n_cyclic",
    "unstack_cycle",
    "classify",
]
