"""
The default axiom suite: every construction with the parameters used for
colour filtering, checked against every axiom and proposition.
"""

from typing import Iterable, List

import numpy as np
from tqdm import tqdm

from ..metrics import (
    BoundedBox,
    euclidean_distance,
    fuzzy_gn_metric,
    gn_metric_from,
    gn_rho_metric,
    product_metric,
    standard_fuzzy,
    stationary_frn_metric,
)
from ..utils import logger, synchronize_timer
from .axioms import (
    TOL,
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
from .report import AxiomReport
from .sampling import SampleSpec

DEFAULT_SEEDS = (1, 2, 3)
RGB_BOX = BoundedBox(a=0.0, b=255.0, K=1024.0, n=3)


def _suite(seed: int, samples: int):
    real = lambda n: SampleSpec(n, count=samples, seed=seed, domain='real', lo=0.0, hi=10.0)
    rgb = lambda n: SampleSpec(n, count=samples, seed=seed, domain='rgb')

    for n in (3, 4, 5):
        yield lambda n=n: check_gn_axioms(gn_rho_metric(n), real(n))
    for mode in ('sum', 'max'):
        yield lambda mode=mode: check_gn_axioms(gn_metric_from(n=3, mode=mode), real(3))
        yield lambda mode=mode: check_gn_axioms(gn_metric_from(euclidean_distance, n=4, mode=mode), rgb(4))

    for n in (3, 4):
        fn = fuzzy_gn_metric(gn_rho_metric(n))
        yield lambda fn=fn, n=n: check_fn_axioms(fn, real(n))
        yield lambda fn=fn, n=n: [check_power_inequality(fn, real(n)), check_monotone_t(fn, real(n))]

    pair = standard_fuzzy()
    for n in (3, 4, 5):
        fn = product_metric(pair, n)
        yield lambda fn=fn, n=n: check_fn_axioms(fn, real(n))
        yield lambda n=n: [check_subset_identity(pair, real(n))]
    yield lambda: [check_power_inequality(product_metric(pair, 3), real(3)),
                   check_monotone_t(product_metric(pair, 3), real(3))]

    for r in (2, 3):
        fn = stationary_frn_metric(RGB_BOX, r)
        yield lambda fn=fn, r=r: check_fn_axioms(fn, rgb(r))
        yield lambda fn=fn, r=r: [check_stationary(fn, rgb(r)),
                                  check_monotone_t(fn, rgb(r)),
                                  check_f_bounded(fn, rgb(r), RGB_BOX.lower_bound - TOL)]

    frn3 = stationary_frn_metric(RGB_BOX, 3)
    gn3 = fuzzy_gn_metric(gn_rho_metric(3))
    yield lambda: [check_power_inequality(frn3, rgb(3)),
                   check_ball_containment(frn3, rgb(3), radius=0.3, t=1.0),
                   check_ball_containment(gn3, real(3), radius=0.3, t=1.0),
                   check_hausdorff_separation(frn3, np.array([0, 0, 0]), np.array([255, 255, 255]), 1.0, rgb(3)),
                   check_hausdorff_separation(frn3, np.array([10, 120, 200]), np.array([14, 118, 190]), 1.0, rgb(3)),
                   check_hausdorff_separation(gn3, 2.0, 3.0, 1.0, real(3))]
    yield lambda: check_induced_metric(frn3, rgb(3))
    yield lambda: check_induced_metric(gn3, real(3))


@synchronize_timer('Axiom suite')
def run_default_suite(seeds: Iterable[int] = DEFAULT_SEEDS, samples: int = 1000,
                      enable_pbar: bool = False) -> List[AxiomReport]:
    reports = []
    jobs = [job for seed in seeds for job in _suite(int(seed), samples)]
    for job in tqdm(jobs, disable=not enable_pbar, desc="Axiom checks:"):
        result = job()
        reports.extend(result if isinstance(result, list) else [result])
    failed = [r for r in reports if not r.passed]
    logger.info(f'{len(reports)} axiom reports, {len(failed)} with violations')
    return reports
