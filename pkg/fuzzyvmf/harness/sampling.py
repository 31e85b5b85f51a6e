"""
Reproducible sample generation for the axiom checks.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..errors import DomainError

DOMAINS = ('real', 'rgb')
DEFAULT_T_GRID = (0.25, 0.5, 1.0, 2.0, 4.0, 8.0)


@dataclass(frozen=True)
class SampleSpec:
    tuple_arity: int
    count: int = 1000
    seed: int = 1
    t_grid: Tuple[float, ...] = DEFAULT_T_GRID
    domain: str = 'real'
    lo: float = 0.0
    hi: float = 10.0

    def __post_init__(self):
        if self.domain not in DOMAINS:
            raise DomainError(f"Unknown sample domain {self.domain!r}, expected one of {DOMAINS}")
        if self.count < 1:
            raise DomainError(f"sample count must be >= 1, got {self.count}")
        if self.tuple_arity < 2:
            raise DomainError(f"tuple arity must be >= 2, got {self.tuple_arity}")
        grid = np.asarray(self.t_grid, dtype=np.float64)
        if grid.size == 0 or np.any(grid <= 0) or np.any(np.diff(grid) <= 0):
            raise DomainError(f"t_grid must be strictly positive and increasing, got {self.t_grid}")
        if self.domain == 'real' and not self.hi > self.lo:
            raise DomainError(f"real interval needs hi > lo, got [{self.lo}, {self.hi}]")

    def with_arity(self, arity: int) -> 'SampleSpec':
        return SampleSpec(arity, self.count, self.seed, self.t_grid, self.domain, self.lo, self.hi)

    def rng(self, stream: int = 0) -> np.random.Generator:
        return np.random.default_rng([self.seed, stream])

    def draw_point(self, rng: np.random.Generator) -> np.ndarray:
        if self.domain == 'rgb':
            return rng.integers(0, 256, size=3)
        return np.float64(rng.uniform(self.lo, self.hi))

    def perturb(self, point, rng: np.random.Generator) -> np.ndarray:
        """A point close to ``point``; used to populate small balls."""
        if self.domain == 'rgb':
            return np.clip(np.asarray(point) + rng.integers(-12, 13, size=3), 0, 255)
        width = 0.05 * (self.hi - self.lo)
        return np.float64(np.clip(float(point) + rng.uniform(-width, width), self.lo, self.hi))

    def draw_tuple(self, rng: np.random.Generator, index: int) -> np.ndarray:
        # every fourth tuple is drawn from a two-point pool so coincidences get exercised
        if index % 4 == 3:
            pool = [self.draw_point(rng), self.draw_point(rng)]
            picks = rng.integers(0, 2, size=self.tuple_arity)
            return np.stack([pool[k] for k in picks])
        return np.stack([self.draw_point(rng) for _ in range(self.tuple_arity)])

    def draw_tuples(self, rng: np.random.Generator) -> List[np.ndarray]:
        return [self.draw_tuple(rng, k) for k in range(self.count)]
