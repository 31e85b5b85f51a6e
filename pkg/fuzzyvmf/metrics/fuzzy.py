"""
Generalized fuzzy n-metrics.

A fuzzy n-metric maps n points and a parameter ``t > 0`` to a degree of
nearness in (0, 1]. Arity-2 instances are ordinary fuzzy metrics. All
constructions are pure functions; stationary ones accept and ignore ``t``.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from ..errors import ArityError, DomainError, UnsupportedConstructionError
from .generalized import GeneralizedNMetric, absolute_difference, as_points
from .tnorms import TNorm


def _check_t(t) -> float:
    t = float(t)
    if not t > 0.0:
        raise DomainError(f"t must be strictly positive, got {t!r}")
    return t


@dataclass(frozen=True)
class FuzzyNMetric:
    arity: int
    tnorm: TNorm
    evaluator: Callable[[np.ndarray, float], float]
    stationary: bool = False
    name: str = 'F_n'

    def __post_init__(self):
        if self.arity < 2:
            raise ArityError(f"a fuzzy n-metric needs arity >= 2, got {self.arity}")

    def __call__(self, points, t: float) -> float:
        t = _check_t(t)
        points = as_points(points)
        if points.shape[0] != self.arity:
            raise ArityError(f"{self.name} takes {self.arity} points, got {points.shape[0]}")
        return float(self.evaluator(points, t))


@dataclass(frozen=True)
class BoundedBox:
    """Channel box [a, b]^n with smoothing constant K."""
    a: float = 0.0
    b: float = 255.0
    K: float = 1024.0
    n: int = 3

    def __post_init__(self):
        if not self.b > self.a:
            raise DomainError(f"box needs b > a, got a={self.a}, b={self.b}")
        if not self.K > 0:
            raise DomainError(f"K must be positive, got {self.K}")
        # a >= 0 only needs K > 0
        if self.a < 0 and not self.K > abs(self.a):
            raise DomainError(f"K must exceed |a| when a < 0, got K={self.K}, a={self.a}")
        if self.n < 1:
            raise DomainError(f"channel count must be positive, got {self.n}")

    @property
    def lower_bound(self) -> float:
        return ((self.a + self.K) / (self.b + self.K)) ** self.n

    def contains(self, vectors) -> bool:
        vectors = np.asarray(vectors)
        return bool(np.all(vectors >= self.a) and np.all(vectors <= self.b))


def bounded_ratio_product(vectors, K: float) -> np.ndarray:
    """Product over channels of (min + K) / (max + K), the min/max taken across vectors.

    ``vectors`` has shape ``(..., r, n)``; the result has shape ``(...)``. Every
    caller shares this kernel, so single evaluations and window batches agree
    bit for bit, and permuting the channels leaves the result unchanged.
    """
    vectors = np.asarray(vectors)
    lo = vectors.min(axis=-2).astype(np.float64)
    hi = vectors.max(axis=-2).astype(np.float64)
    ratio = np.sort((lo + K) / (hi + K), axis=-1)
    out = ratio[..., 0]
    for channel in range(1, ratio.shape[-1]):
        out = out * ratio[..., channel]
    return out


def std_fuzzy_metric(base: Callable, x, y, t: float) -> float:
    t = _check_t(t)
    return t / (t + float(base(x, y)))


def standard_fuzzy(base: Callable = absolute_difference) -> FuzzyNMetric:
    return FuzzyNMetric(
        arity=2,
        tnorm=TNorm.PRODUCT,
        evaluator=lambda points, t: std_fuzzy_metric(base, points[0], points[1], t),
        name=f'M_d[{getattr(base, "__name__", "d")}]',
    )


def fuzzy_from_gn(gn: GeneralizedNMetric, points, t: float) -> float:
    t = _check_t(t)
    return t / (t + gn(points))


def fuzzy_gn_metric(gn: GeneralizedNMetric) -> FuzzyNMetric:
    return FuzzyNMetric(
        arity=gn.arity,
        tnorm=TNorm.PRODUCT,
        evaluator=lambda points, t: fuzzy_from_gn(gn, points, t),
        name=f't/(t+{gn.name})',
    )


def _require_product_pair(pair_metric: FuzzyNMetric):
    if pair_metric.arity != 2:
        raise ArityError(f"expected a pairwise fuzzy metric, got arity {pair_metric.arity}")
    if pair_metric.tnorm is not TNorm.PRODUCT:
        raise UnsupportedConstructionError(
            f"the pairwise product construction is only valid under the product t-norm, "
            f"got {pair_metric.tnorm.value}"
        )


def _pairwise_product(pair_metric: FuzzyNMetric, points: np.ndarray, t: float) -> float:
    pairs = combinations(range(points.shape[0]), 2)
    return pair_metric.tnorm.fold(pair_metric(points[[i, j]], t) for i, j in pairs)


def product_construction(pair_metric: FuzzyNMetric, points, t: float) -> float:
    _require_product_pair(pair_metric)
    t = _check_t(t)
    points = as_points(points)
    if points.shape[0] < 3:
        raise ArityError(f"the product construction needs n >= 3 points, got {points.shape[0]}")
    return _pairwise_product(pair_metric, points, t)


def product_metric(pair_metric: FuzzyNMetric, n: int) -> FuzzyNMetric:
    _require_product_pair(pair_metric)
    if n < 3:
        raise ArityError(f"the product construction needs n >= 3, got {n}")
    return FuzzyNMetric(
        arity=n,
        tnorm=TNorm.PRODUCT,
        evaluator=lambda points, t: product_construction(pair_metric, points, t),
        stationary=pair_metric.stationary,
        name=f'prod_{n}[{pair_metric.name}]',
    )


def subset_identity_residual(pair_metric: FuzzyNMetric, points, t: float) -> float:
    """|F_n^(n-2) - product of F_(n-1) over all (n-1)-subsets|; F_2 is the pair metric itself."""
    lhs_base = product_construction(pair_metric, points, t)
    points = as_points(points)
    n = points.shape[0]
    lhs = lhs_base ** (n - 2)
    rhs = 1.0
    for subset in combinations(range(n), n - 1):
        rhs *= _pairwise_product(pair_metric, points[list(subset)], t)
    return abs(lhs - rhs)


def stationary_frn(vectors, box: BoundedBox = BoundedBox()) -> float:
    vectors = np.asarray(vectors)
    if vectors.ndim != 2:
        raise ArityError(f"expected r vectors of {box.n} channels, got shape {vectors.shape}")
    r, n = vectors.shape
    if r < 2:
        raise ArityError(f"F_r needs r >= 2 vectors, got {r}")
    if n != box.n:
        raise ArityError(f"expected {box.n} channels per vector, got {n}")
    if not box.contains(vectors):
        raise DomainError(f"channel values must lie in [{box.a}, {box.b}]")
    return float(bounded_ratio_product(vectors, box.K))


def stationary_frn_metric(box: BoundedBox = BoundedBox(), r: int = 3) -> FuzzyNMetric:
    return FuzzyNMetric(
        arity=r,
        tnorm=TNorm.PRODUCT,
        evaluator=lambda points, t: stationary_frn(points, box),
        stationary=True,
        name=f'F_{r}^({box.n})[K={box.K:g}]',
    )


def induced_pairwise(fn: FuzzyNMetric, x, y, t: float) -> float:
    """M(x, y, t) = F(x, y, ..., y, t/2) * F(x, ..., x, y, t/2) under the metric's t-norm."""
    t = _check_t(t)
    n = fn.arity
    x = np.asarray(x)
    y = np.asarray(y)
    towards_y = np.stack([x] + [y] * (n - 1))
    towards_x = np.stack([x] * (n - 1) + [y])
    return fn.tnorm.apply(fn(towards_y, t / 2.0), fn(towards_x, t / 2.0))


def induced_metric(fn: FuzzyNMetric) -> FuzzyNMetric:
    return FuzzyNMetric(
        arity=2,
        tnorm=fn.tnorm,
        evaluator=lambda points, t: induced_pairwise(fn, points[0], points[1], t),
        stationary=fn.stationary,
        name=f'M[{fn.name}]',
    )
