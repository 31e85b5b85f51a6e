from .aggregates import (
    ARGMAX,
    ARGMIN,
    DIHEDRAL,
    SCHEME_PARTNERS,
    SCHEME_TABLE,
    WindowAggregate,
    agg_classical,
    agg_fuzzy_pairwise,
    agg_fuzzy_triples_full,
    agg_fuzzy_triples_scheme,
    agg_fuzzy_tuples,
    apply_symmetry,
    classical_values,
    fuzzy_pixel_metric,
    fuzzy_triple_metric,
    lp_distance,
    ordered_sum,
    scheme_agreement,
    scheme_partners,
    scheme_values,
    select_index,
    select_indices,
    select_output,
    tuple_values,
)
from .filters import (
    FILTERS,
    FuzzyVectorMedianFilter,
    FuzzyVectorMedianLikeFilter,
    SchemeFVMLF,
    VectorFilter,
    VectorMedianFilter,
    build_filter,
    filter_image,
)
