from .graph import (
    Image,
    LinearRelation,
    MonotoneForm,
    extend_by_domain_perp,
    image_of,
    relation_from_graph,
    relation_from_operator,
    selection,
    trivial_relation,
)
from .classify import (
    classify_relation,
    is_3star_relation,
    is_maximal_relation,
    is_monotone_relation,
    is_n_cyclic_relation,
    is_paramonotone_relation,
    is_strict_relation,
    RelatedForm,
    monotonically_related,
    related_form,
    related_infimum,
)

__all__ = [
    "Image",
    "LinearRelation",
    "MonotoneForm",
    "extend_by_domain_perp",
    "image_of",
    "relation_from_graph",
    "relation_from_operator",
    "selection",
    "trivial_relation",
    "classify_relation",
    "is_3star_relation",
    "is_maximal_relation",
    "is_monotone_relation",
    "is_n_cyclic_relation",
    "is_paramonotone_relation",
    "is_strict_relation",
    "RelatedForm",
    "monotonically_related",
    "related_form",
    "related_infimum",
]
