"""
Continuous t-norms used to combine fuzzy degrees.
"""

from enum import Enum
from functools import reduce

from ..errors import DomainError


class TNorm(str, Enum):
    PRODUCT = 'product'
    MINIMUM = 'minimum'

    def apply(self, a: float, b: float) -> float:
        for value in (a, b):
            if not 0.0 <= value <= 1.0:
                raise DomainError(f"t-norm arguments must lie in [0, 1], got {value!r}")
        if self is TNorm.PRODUCT:
            return a * b
        return min(a, b)

    def fold(self, values) -> float:
        """Combine any number of degrees, left to right, with identity 1."""
        return reduce(self.apply, values, 1.0)


def tnorm_apply(tnorm: TNorm, a: float, b: float) -> float:
    return TNorm(tnorm).apply(a, b)
