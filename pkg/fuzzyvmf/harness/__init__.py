from .sampling import SampleSpec, DEFAULT_T_GRID
from .report import AxiomReport, Violation, format_reports, parse_reports
from .axioms import (
    TOL,
    ball_contains,
    check_ball_containment,
    check_f_bounded,
    check_fn_axioms,
    check_gn_axioms,
    check_hausdorff_separation,
    check_induced_metric,
    check_monotone_t,
    check_power_inequality,
    check_stationary,
    check_subset_identity,
)
from .suite import run_default_suite, DEFAULT_SEEDS
