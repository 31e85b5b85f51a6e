from .tnorms import TNorm, tnorm_apply
from .generalized import (
    GeneralizedNMetric,
    absolute_difference,
    euclidean_distance,
    gn_from_metric,
    gn_metric_from,
    gn_rho,
    gn_rho_metric,
)
from .fuzzy import (
    BoundedBox,
    FuzzyNMetric,
    bounded_ratio_product,
    fuzzy_from_gn,
    fuzzy_gn_metric,
    induced_metric,
    induced_pairwise,
    product_construction,
    product_metric,
    standard_fuzzy,
    stationary_frn,
    stationary_frn_metric,
    std_fuzzy_metric,
    subset_identity_residual,
)
