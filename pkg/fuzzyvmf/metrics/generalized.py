"""
Generalized n-metrics: nonnegative distance functionals on n points.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from ..errors import ArityError, DomainError

GN_MODES = ('sum', 'max')


def as_points(points) -> np.ndarray:
    """Stack a sequence of points (reals or channel vectors) into one array, point index first."""
    points = np.asarray(points)
    if points.ndim == 0:
        raise ArityError("expected a sequence of points")
    return points


def same_point(x, y) -> bool:
    return bool(np.array_equal(x, y))


def absolute_difference(x, y) -> float:
    """The usual metric |x - y| on the real line."""
    return float(abs(float(x) - float(y)))


def euclidean_distance(x, y) -> float:
    diff = np.asarray(x, dtype=np.float64) - np.asarray(y, dtype=np.float64)
    return float(np.sqrt(np.sum(diff * diff)))


def gn_rho(points) -> float:
    points = as_points(points)
    if points.ndim != 1:
        raise DomainError("gn_rho is defined on real numbers only")
    n = points.shape[0]
    if n < 3:
        raise ArityError(f"a generalized n-metric needs n >= 3 points, got {n}")
    total = 0.0
    for r, s in combinations(range(n), 2):
        total += abs(float(points[r]) - float(points[s]))
    return total


def gn_from_metric(points, base: Callable = absolute_difference, mode: str = 'sum') -> float:
    points = as_points(points)
    n = points.shape[0]
    if n < 3:
        raise ArityError(f"a generalized n-metric needs n >= 3 points, got {n}")
    if mode not in GN_MODES:
        raise DomainError(f"Unknown mode {mode!r}, expected one of {GN_MODES}")
    distances = [base(points[r], points[s]) for r, s in combinations(range(n), 2)]
    if mode == 'max':
        return float(max(distances))
    total = 0.0
    for d in distances:
        total += d
    return total


@dataclass(frozen=True)
class GeneralizedNMetric:
    arity: int
    evaluator: Callable[[np.ndarray], float]
    name: str = 'G_n'

    def __post_init__(self):
        if self.arity < 3:
            raise ArityError(f"a generalized n-metric needs arity >= 3, got {self.arity}")

    def __call__(self, points) -> float:
        points = as_points(points)
        if points.shape[0] != self.arity:
            raise ArityError(f"{self.name} takes {self.arity} points, got {points.shape[0]}")
        return float(self.evaluator(points))


def gn_rho_metric(n: int) -> GeneralizedNMetric:
    return GeneralizedNMetric(arity=n, evaluator=gn_rho, name=f'rho_{n}')


def gn_metric_from(base: Callable = absolute_difference, n: int = 3, mode: str = 'sum') -> GeneralizedNMetric:
    if mode not in GN_MODES:
        raise DomainError(f"Unknown mode {mode!r}, expected one of {GN_MODES}")
    label = 'K1' if mode == 'sum' else 'K2'
    return GeneralizedNMetric(
        arity=n,
        evaluator=lambda points: gn_from_metric(points, base=base, mode=mode),
        name=f'{label}_{n}[{getattr(base, "__name__", "d")}]',
    )
