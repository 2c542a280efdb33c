from .operators import (
    CatalogEntry,
    chain_alpha,
    chain_angle,
    coordinate_projection,
    example_3x3,
    identity,
    operator_catalog,
    rotation,
    rotation_chain,
    symmetric_pm_family,
    tilde_r,
    zero,
    zero_times_chain,
)
from .relations import (
    identity_graph,
    max_r2,
    non_max,
    relation_catalog,
    rotation_graph,
    star_not_pm,
    star_not_pm_extended,
)
from .tables import (
    FIGURE_SETTINGS,
    IMPOSSIBLE_RULES,
    TABLE_IDS,
    AlphaDecayPoint,
    ImpossibleRule,
    Region,
    TableRow,
    alpha_decay_series,
    impossible_rules,
    membership_regions,
    pattern_matches,
    regions_to_csv,
    regions_to_dot,
    rows_to_csv,
    rows_to_markdown,
    rows_to_text,
    table_rows,
)
from .random_family import (
    random_matrix,
    random_monotone_2x2,
    random_monotone_matrix,
    random_monotone_relation,
    random_orthogonal,
    random_skew,
)

__all__ = [
    "CatalogEntry",
    "chain_alpha",
    "chain_angle",
    "coordinate_projection",
    "example_3x3",
    "identity",
    "operator_catalog",
    "rotation",
    "rotation_chain",
    "symmetric_pm_family",
    "tilde_r",
    "zero",
    "zero_times_chain",
    "identity_graph",
    "max_r2",
    "non_max",
    "relation_catalog",
    "rotation_graph",
    "star_not_pm",
    "star_not_pm_extended",
    "FIGURE_SETTINGS",
    "IMPOSSIBLE_RULES",
    "TABLE_IDS",
    "AlphaDecayPoint",
    "ImpossibleRule",
    "Region",
    "TableRow",
    "alpha_decay_series",
    "impossible_rules",
    "membership_regions",
    "pattern_matches",
    "regions_to_csv",
    "regions_to_dot",
    "rows_to_csv",
    "rows_to_markdown",
    "rows_to_text",
    "table_rows",
    "random_matrix",
    "random_monotone_2x2",
    "random_monotone_matrix",
    "random_monotone_relation",
    "random_orthogonal",
    "random_skew",
]
