"""
Sampling-based checks of the generalized (fuzzy) n-metric axioms and of the
propositions derived from them.

Every check is deterministic given its ``SampleSpec``: tuples, permutations,
witness points and ``(t, s)`` pairs are all drawn from the SampleSpec's seeded
generator in sample order, whether or not a given axiom applies to a sample.
"""

from typing import List

import numpy as np

from ..errors import ArityError, DomainError, PreconditionError
from ..metrics import FuzzyNMetric, GeneralizedNMetric, TNorm, induced_metric, induced_pairwise
from ..metrics.fuzzy import subset_identity_residual
from ..metrics.generalized import same_point
from .report import AxiomReport
from .sampling import SampleSpec

TOL = 1e-12
# largest jump allowed between adjacent t-grid values for the continuity surrogate
M6_JUMP = 0.5


def _require_arity(arity: int, spec: SampleSpec):
    if spec.tuple_arity != arity:
        raise ArityError(f"sample arity {spec.tuple_arity} does not match metric arity {arity}")


def _repeat(first, rest, n) -> np.ndarray:
    """(first, rest, rest, ..., rest) with n entries."""
    return np.stack([first] + [rest] * (n - 1))


def _head(x1, x2, n) -> np.ndarray:
    """(x1, x1, ..., x1, x2) with n entries."""
    return np.stack([x1] * (n - 1) + [x2])


def _tail_has_distinct(xs) -> bool:
    tail = xs[1:]
    return any(not same_point(tail[0], p) for p in tail[1:])


def _all_equal(xs) -> bool:
    return all(same_point(xs[0], p) for p in xs[1:])


def check_gn_axioms(gn: GeneralizedNMetric, spec: SampleSpec) -> List[AxiomReport]:
    _require_arity(gn.arity, spec)
    n = gn.arity
    rng = spec.rng()
    reports = {k: AxiomReport(k, subject=gn.name, seed=spec.seed) for k in ('G1', 'G2', 'G3', 'G4', 'G5')}
    for index in range(spec.count):
        xs = spec.draw_tuple(rng, index)
        perm = rng.permutation(n)
        witness = spec.draw_point(rng)
        x1, x2 = xs[0], xs[1]
        value = gn(xs)
        # G_n is unbounded; slack is relative to the compared magnitude
        slack = TOL * max(1.0, abs(value))

        coincident = gn(_repeat(x1, x1, n))
        reports['G1'].record(coincident == 0.0, {'x': x1}, coincident, 0.0)

        head = gn(_head(x1, x2, n))
        if not same_point(x1, x2):
            reports['G2'].record(head > 0.0, {'x1': x1, 'x2': x2}, head, 0.0)
        if _tail_has_distinct(xs):
            reports['G3'].record(head <= value + slack, {'xs': xs}, head, value, slack)

        permuted = gn(xs[perm])
        reports['G4'].record(abs(permuted - value) <= slack, {'xs': xs, 'perm': perm}, permuted, value, slack)

        rhs = gn(_repeat(x1, witness, n)) + gn(np.stack([witness] + list(xs[1:])))
        g5_slack = TOL * max(1.0, rhs)
        reports['G5'].record(value <= rhs + g5_slack, {'xs': xs, 'w': witness}, value, rhs, g5_slack)
    return list(reports.values())


def check_fn_axioms(fn: FuzzyNMetric, spec: SampleSpec) -> List[AxiomReport]:
    _require_arity(fn.arity, spec)
    n = fn.arity
    grid = spec.t_grid
    rng = spec.rng()
    reports = {k: AxiomReport(k, subject=fn.name, seed=spec.seed) for k in ('M1', 'M2', 'M3', 'M4', 'M5', 'M6')}
    for index in range(spec.count):
        xs = spec.draw_tuple(rng, index)
        perm = rng.permutation(n)
        t_perm = float(rng.choice(grid))
        t, s = (float(v) for v in rng.choice(grid, size=2))
        witness = spec.draw_point(rng)
        x1, x2 = xs[0], xs[1]
        values = [fn(xs, tk) for tk in grid]
        heads = [fn(_head(x1, x2, n), tk) for tk in grid]
        distinct_pair = not same_point(x1, x2)
        tail_distinct = _tail_has_distinct(xs)
        all_equal = _all_equal(xs)

        for tk, head, value in zip(grid, heads, values):
            if distinct_pair:
                reports['M1'].record(head > 0.0, {'x1': x1, 'x2': x2, 't': tk}, head, 0.0)
            if tail_distinct:
                reports['M2'].record(head >= value - TOL, {'xs': xs, 't': tk}, head, value, TOL)
            coincident = fn(_repeat(x1, x1, n), tk)
            reports['M3'].record(coincident == 1.0, {'x': x1, 't': tk}, coincident, 1.0)
            if all_equal:
                reports['M3'].record(value == 1.0, {'xs': xs, 't': tk}, value, 1.0)
            else:
                reports['M3'].record(value < 1.0, {'xs': xs, 't': tk}, value, 1.0)

        value = fn(xs, t_perm)
        permuted = fn(xs[perm], t_perm)
        reports['M4'].record(abs(permuted - value) <= TOL, {'xs': xs, 'perm': perm, 't': t_perm},
                             permuted, value, TOL)

        lhs = fn.tnorm.apply(fn(_repeat(x1, witness, n), t), fn(np.stack([witness] + list(xs[1:])), s))
        rhs = fn(xs, t + s)
        reports['M5'].record(lhs <= rhs + TOL, {'xs': xs, 'w': witness, 't': t, 's': s}, lhs, rhs, TOL)

        jump = float(np.max(np.abs(np.diff(values)))) if len(values) > 1 else 0.0
        reports['M6'].record(jump <= M6_JUMP, {'xs': xs, 't_grid': list(grid)}, jump, M6_JUMP)
    return list(reports.values())


def check_power_inequality(fn: FuzzyNMetric, spec: SampleSpec) -> AxiomReport:
    """F(x, y, ..., y, t) >= F(y, x, ..., x, t/(n-1)) ** (n-1)."""
    if fn.arity < 3:
        raise ArityError(f"the power inequality needs arity >= 3, got {fn.arity}")
    _require_arity(fn.arity, spec)
    n = fn.arity
    rng = spec.rng()
    report = AxiomReport('P3.4', subject=fn.name, seed=spec.seed)
    for index in range(spec.count):
        xs = spec.draw_tuple(rng, index)
        x, y = xs[0], xs[1]
        for t in spec.t_grid:
            lhs = fn(_repeat(x, y, n), t)
            rhs = fn(_repeat(y, x, n), t / (n - 1)) ** (n - 1)
            report.record(lhs >= rhs - TOL, {'x': x, 'y': y, 't': t}, lhs, rhs, TOL)
    return report


def check_monotone_t(fn: FuzzyNMetric, spec: SampleSpec) -> AxiomReport:
    if len(spec.t_grid) < 2:
        raise PreconditionError("monotonicity in t needs a t_grid with at least two values")
    _require_arity(fn.arity, spec)
    rng = spec.rng()
    report = AxiomReport('P3.13', subject=fn.name, seed=spec.seed)
    for index in range(spec.count):
        xs = spec.draw_tuple(rng, index)
        values = [fn(xs, t) for t in spec.t_grid]
        for (t1, v1), (t2, v2) in zip(zip(spec.t_grid, values), zip(spec.t_grid[1:], values[1:])):
            report.record(v1 <= v2 + TOL, {'xs': xs, 't1': t1, 't2': t2}, v1, v2, TOL)
    return report


def check_stationary(fn: FuzzyNMetric, spec: SampleSpec) -> AxiomReport:
    _require_arity(fn.arity, spec)
    rng = spec.rng()
    report = AxiomReport('stationary', subject=fn.name, seed=spec.seed)
    for index in range(spec.count):
        xs = spec.draw_tuple(rng, index)
        values = [fn(xs, t) for t in spec.t_grid]
        report.record(min(values) == max(values), {'xs': xs}, min(values), max(values))
    return report


def check_f_bounded(fn: FuzzyNMetric, spec: SampleSpec, bound: float) -> AxiomReport:
    if not 0.0 <= bound <= 1.0:
        raise DomainError(f"bound must lie in [0, 1], got {bound}")
    _require_arity(fn.arity, spec)
    rng = spec.rng()
    report = AxiomReport('F-bounded', subject=fn.name, seed=spec.seed)
    for index in range(spec.count):
        xs = spec.draw_tuple(rng, index)
        for t in spec.t_grid:
            value = fn(xs, t)
            report.record(value > bound, {'xs': xs, 't': t}, value, bound)
    return report


def ball_contains(fn: FuzzyNMetric, center, candidate, radius: float, t: float, which: str = 'F') -> bool:
    """Membership of ``candidate`` in B_F(center, radius, t), or in B_M for the induced metric."""
    if not 0.0 < radius < 1.0:
        raise DomainError(f"ball radius must lie in (0, 1), got {radius}")
    if not t > 0:
        raise DomainError(f"t must be strictly positive, got {t}")
    if which == 'F':
        value = fn(_repeat(np.asarray(center), np.asarray(candidate), fn.arity), t)
    elif which == 'M':
        value = induced_pairwise(fn, center, candidate, t)
    else:
        raise DomainError(f"Unknown ball kind {which!r}, expected 'F' or 'M'")
    return value > 1.0 - radius


def check_ball_containment(fn: FuzzyNMetric, spec: SampleSpec, radius: float, t: float) -> AxiomReport:
    """y in B_F(x, radius/n, t/(n-1)) implies y in B_M(x, s, 2t) with s = 1 - (1 - radius/n)**n."""
    if fn.tnorm is not TNorm.PRODUCT:
        raise PreconditionError("ball containment is checked under the product t-norm only")
    if not 0.0 < radius < 1.0:
        raise DomainError(f"ball radius must lie in (0, 1), got {radius}")
    _require_arity(fn.arity, spec)
    n = fn.arity
    s = 1.0 - (1.0 - radius / n) ** n
    rng = spec.rng()
    report = AxiomReport('P3.17', subject=fn.name, seed=spec.seed)
    for index in range(spec.count):
        xs = spec.draw_tuple(rng, index)
        x = xs[0]
        for y in (xs[1], spec.perturb(x, rng)):
            if ball_contains(fn, x, y, radius / n, t / (n - 1), 'F'):
                inside = ball_contains(fn, x, y, s, 2 * t, 'M')
                report.record(inside, {'x': x, 'y': y, 'r': radius, 's': s, 't': t},
                              induced_pairwise(fn, x, y, 2 * t), 1.0 - s)
            else:
                report.record(True, {}, 0.0, 0.0)
    return report


def check_hausdorff_separation(fn: FuzzyNMetric, x, y, t: float, spec: SampleSpec) -> AxiomReport:
    """No sampled point lies in both B_F(x, 1-r1, t/n) and B_F(y, 1-r1, t/n)."""
    x = np.asarray(x)
    y = np.asarray(y)
    if same_point(x, y):
        raise PreconditionError("Hausdorff separation needs two distinct points")
    n = fn.arity
    report = AxiomReport('P3.12', subject=fn.name, seed=spec.seed)
    r = fn(_repeat(x, y, n), t)
    if not 0.0 < r < 1.0:
        # distinct points must have a degree strictly inside (0, 1); anything else is a metric bug
        report.record(False, {'x': x, 'y': y, 't': t}, r, 1.0)
        return report
    r0 = (r + 1.0) / 2.0
    r1 = r0 ** (1.0 / n) if fn.tnorm is TNorm.PRODUCT else r0
    rng = spec.rng()
    candidates = [x, y]
    for index in range(spec.count):
        candidates.append(spec.draw_tuple(rng, index)[0])
        candidates.append(spec.perturb(x if index % 2 == 0 else y, rng))
    for z in candidates:
        in_x = fn(_repeat(x, z, n), t / n)
        in_y = fn(_repeat(y, z, n), t / n)
        report.record(not (in_x > r1 and in_y > r1), {'x': x, 'y': y, 'z': z, 't': t},
                      min(in_x, in_y), r1)
    return report


def check_subset_identity(pair_metric: FuzzyNMetric, spec: SampleSpec) -> AxiomReport:
    if spec.tuple_arity < 3:
        raise ArityError(f"the subset identity needs n >= 3, got {spec.tuple_arity}")
    rng = spec.rng()
    report = AxiomReport('P3.15', subject=f'prod_{spec.tuple_arity}[{pair_metric.name}]', seed=spec.seed)
    for index in range(spec.count):
        xs = spec.draw_tuple(rng, index)
        t = float(rng.choice(spec.t_grid))
        residual = subset_identity_residual(pair_metric, xs, t)
        report.record(residual <= TOL, {'xs': xs, 't': t}, residual, 0.0, TOL)
    return report


def check_induced_metric(fn: FuzzyNMetric, spec: SampleSpec) -> List[AxiomReport]:
    """The pairwise metric induced by ``fn`` satisfies the fuzzy metric axioms."""
    return check_fn_axioms(induced_metric(fn), spec.with_arity(2))
