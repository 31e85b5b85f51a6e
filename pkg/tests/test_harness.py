import numpy as np
import pytest

from fuzzyvmf.errors import ArityError, DomainError, PreconditionError
from fuzzyvmf.harness import (
    AxiomReport,
    SampleSpec,
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
    format_reports,
    parse_reports,
    run_default_suite,
)
from fuzzyvmf.metrics import (
    BoundedBox,
    FuzzyNMetric,
    GeneralizedNMetric,
    TNorm,
    fuzzy_gn_metric,
    gn_metric_from,
    gn_rho_metric,
    product_metric,
    standard_fuzzy,
    stationary_frn_metric,
)

K = 1024.0
BOX = BoundedBox(K=K)


def rgb(n, count=300, seed=1):
    return SampleSpec(n, count=count, seed=seed, domain='rgb')


def real(n, count=300, seed=1):
    return SampleSpec(n, count=count, seed=seed, domain='real')


def failed(reports):
    return [r.axiom_id for r in reports if not r.passed]


def test_default_suite_passes():
    reports = run_default_suite(seeds=(1, 2, 3), samples=1000)
    assert failed(reports) == []
    ids = {r.axiom_id for r in reports}
    assert {'G1', 'G2', 'G3', 'G4', 'G5', 'M1', 'M2', 'M3', 'M4', 'M5', 'M6'} <= ids
    assert {'P3.4', 'P3.13', 'P3.12', 'P3.15', 'P3.17', 'stationary', 'F-bounded'} <= ids
    assert {r.seed for r in reports} == {1, 2, 3}


@pytest.mark.parametrize('gn, spec', [
    (gn_rho_metric(3), real(3)),
    (gn_rho_metric(5), real(5)),
    (gn_metric_from(n=3, mode='max'), real(3)),
])
def test_gn_axioms(gn, spec):
    reports = check_gn_axioms(gn, spec)
    assert [r.axiom_id for r in reports] == ['G1', 'G2', 'G3', 'G4', 'G5']
    assert failed(reports) == []
    assert all(r.checked > 0 for r in reports)


def test_zero_evaluator_breaks_positivity():
    zero = GeneralizedNMetric(3, lambda points: 0.0, name='zero')
    assert 'G2' in failed(check_gn_axioms(zero, real(3)))


@pytest.mark.parametrize('fn, spec', [
    (stationary_frn_metric(BOX, 3), rgb(3)),
    (product_metric(standard_fuzzy(), 4), real(4)),
    (fuzzy_gn_metric(gn_rho_metric(3)), real(3)),
])
def test_fn_axioms(fn, spec):
    reports = check_fn_axioms(fn, spec)
    assert [r.axiom_id for r in reports] == ['M1', 'M2', 'M3', 'M4', 'M5', 'M6']
    assert failed(reports) == []


def test_constant_one_breaks_coincidence():
    one = FuzzyNMetric(3, TNorm.PRODUCT, lambda points, t: 1.0, name='one')
    assert 'M3' in failed(check_fn_axioms(one, real(3)))


def test_arity_mismatch():
    with pytest.raises(ArityError):
        check_gn_axioms(gn_rho_metric(3), real(4))
    with pytest.raises(ArityError):
        check_fn_axioms(stationary_frn_metric(BOX, 3), rgb(2))
    with pytest.raises(ArityError):
        check_power_inequality(stationary_frn_metric(BOX, 2), rgb(2))


def _drop_k_in_first_channel(points, t):
    v = np.asarray(points, dtype=np.float64)
    lo, hi = v.min(axis=0), v.max(axis=0)
    with np.errstate(divide='ignore', invalid='ignore'):
        first = lo[0] / hi[0]
    return first * np.prod((lo[1:] + K) / (hi[1:] + K))


def _swap_min_max(points, t):
    v = np.asarray(points, dtype=np.float64)
    return np.prod((v.max(axis=0) + K) / (v.min(axis=0) + K))


@pytest.mark.parametrize('evaluator', [_drop_k_in_first_channel, _swap_min_max])
def test_mutations_are_detected(evaluator):
    mutant = FuzzyNMetric(3, TNorm.PRODUCT, evaluator, stationary=True, name=evaluator.__name__)
    spec = rgb(3)
    reports = check_fn_axioms(mutant, spec) + [check_f_bounded(mutant, spec, BOX.lower_bound - 1e-12)]
    assert failed(reports)


def test_power_inequality_and_monotone():
    for fn, spec in [(stationary_frn_metric(BOX, 3), rgb(3)), (fuzzy_gn_metric(gn_rho_metric(3)), real(3))]:
        assert check_power_inequality(fn, spec).passed
        assert check_monotone_t(fn, spec).passed


def test_monotone_detects_decreasing_evaluator():
    decreasing = FuzzyNMetric(3, TNorm.PRODUCT, lambda points, t: min(1.0, 1.0 / t), name='1/t')
    assert not check_monotone_t(decreasing, real(3, count=5)).passed
    with pytest.raises(PreconditionError):
        check_monotone_t(decreasing, SampleSpec(3, count=5, t_grid=(1.0,)))


def test_stationary_check():
    assert check_stationary(stationary_frn_metric(BOX, 2), rgb(2)).passed
    report = check_stationary(fuzzy_gn_metric(gn_rho_metric(3)), real(3))
    assert not report.passed


def test_f_bounded():
    fn = stationary_frn_metric(BOX, 3)
    assert check_f_bounded(fn, rgb(3), BOX.lower_bound - 1e-12).passed
    assert check_f_bounded(fn, rgb(3), 0.0).passed
    assert not check_f_bounded(fn, rgb(3), 1.0).passed
    with pytest.raises(DomainError):
        check_f_bounded(fn, rgb(3), 1.5)


def test_ball_contains_examples():
    fn = stationary_frn_metric(BOX, 3)
    black, white = np.array([0, 0, 0]), np.array([255, 255, 255])
    assert ball_contains(fn, black, black, 0.01, 1.0)
    assert not ball_contains(fn, black, white, 0.4, 1.0)
    assert ball_contains(fn, black, white, 0.99, 1.0)
    assert ball_contains(fn, black, black, 0.01, 1.0, which='M')
    with pytest.raises(DomainError):
        ball_contains(fn, black, white, 1.0, 1.0)
    with pytest.raises(DomainError):
        ball_contains(fn, black, white, 0.5, 1.0, which='G')


def test_ball_containment():
    report = check_ball_containment(stationary_frn_metric(BOX, 3), rgb(3), radius=0.3, t=1.0)
    assert report.passed
    assert report.checked == 2 * 300
    minimum = FuzzyNMetric(3, TNorm.MINIMUM, lambda points, t: 1.0)
    with pytest.raises(PreconditionError):
        check_ball_containment(minimum, real(3), radius=0.3, t=1.0)


def test_hausdorff_separation():
    fn = stationary_frn_metric(BOX, 3)
    report = check_hausdorff_separation(fn, [0, 0, 0], [255, 255, 255], 1.0, rgb(3))
    assert report.passed
    assert report.checked == 2 + 2 * 300
    gn = fuzzy_gn_metric(gn_rho_metric(3))
    assert check_hausdorff_separation(gn, 2.0, 3.0, 1.0, real(3)).passed
    with pytest.raises(PreconditionError):
        check_hausdorff_separation(fn, [5, 5, 5], [5, 5, 5], 1.0, rgb(3))


def test_hausdorff_flags_degree_one_on_distinct_points():
    one = FuzzyNMetric(3, TNorm.PRODUCT, lambda points, t: 1.0)
    assert not check_hausdorff_separation(one, 1.0, 2.0, 1.0, real(3)).passed


@pytest.mark.parametrize('n', [3, 4, 5])
def test_subset_identity(n):
    report = check_subset_identity(standard_fuzzy(), real(n))
    assert report.axiom_id == 'P3.15'
    assert report.passed
    with pytest.raises(ArityError):
        check_subset_identity(standard_fuzzy(), real(2))


def test_induced_metric():
    assert failed(check_induced_metric(stationary_frn_metric(BOX, 3), rgb(3))) == []
    assert failed(check_induced_metric(fuzzy_gn_metric(gn_rho_metric(4)), real(4))) == []


def test_checks_are_deterministic():
    fn = stationary_frn_metric(BOX, 3)
    first = format_reports(check_fn_axioms(fn, rgb(3, count=100, seed=9)))
    second = format_reports(check_fn_axioms(fn, rgb(3, count=100, seed=9)))
    assert first == second


def test_report_text_format():
    report = AxiomReport('M5', subject='F_3', seed=2)
    report.record(True, {}, 0.5, 0.6, 1e-12)
    report.record(False, {'t': 1.0}, 0.7, 0.6, 1e-12)
    text = format_reports([report])
    assert text == '# F_3 seed=2\nM5\t2\t1\n-\tt=1.0\t0.7\t0.6\t1e-12\n'
    parsed = parse_reports(text)
    assert len(parsed) == 1
    assert (parsed[0].axiom_id, parsed[0].subject, parsed[0].seed, parsed[0].checked) == ('M5', 'F_3', 2, 2)
    assert parsed[0].violations == report.violations


@pytest.mark.parametrize('kwargs', [
    {'count': 0},
    {'domain': 'complex'},
    {'t_grid': (1.0, 0.5)},
    {'t_grid': (0.0, 1.0)},
    {'lo': 5.0, 'hi': 5.0},
    {'tuple_arity': 1},
])
def test_sample_spec_validation(kwargs):
    params = {'tuple_arity': 3, **kwargs}
    with pytest.raises(DomainError):
        SampleSpec(**params)


def test_sample_spec_draws_from_domain():
    spec = rgb(3, count=50)
    tuples = spec.draw_tuples(spec.rng())
    assert len(tuples) == 50
    assert all(t.shape == (3, 3) and t.min() >= 0 and t.max() <= 255 for t in tuples)
    spec = real(4, count=50)
    assert all(t.shape == (4,) and 0 <= t.min() and t.max() <= 10 for t in spec.draw_tuples(spec.rng()))
