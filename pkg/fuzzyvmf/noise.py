"""
Seeded impulse noise.

Randomness comes from SplitMix64, a 64-bit generator with a published
reference sequence, so corrupted images can be reproduced bit for bit by
any implementation:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)                       (all arithmetic mod 2**64)

Draws are consumed in a fixed order. First one uniform float per pixel in
row-major order decides whether the pixel is hit (hit iff float < density).
Then, for each hit pixel in row-major order, one value per pixel
(``per_channel=False``) or one value per channel (``per_channel=True``):
fixed-value noise takes the top bit (0 -> 0, 1 -> 255), random-value noise
the top byte.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .image import RgbImage
from .utils import logger

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

NOISE_KINDS = ('fixed-value', 'random-value')


class SplitMix64:
    def __init__(self, seed: int):
        self.state = int(seed) & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def next_byte(self) -> int:
        return self.next_u64() >> 56

    def next_bit(self) -> int:
        return self.next_u64() >> 63


@dataclass(frozen=True)
class NoiseSpec:
    kind: str = 'fixed-value'
    density: float = 0.1
    per_channel: bool = False
    seed: int = 42

    def __post_init__(self):
        if self.kind not in NOISE_KINDS:
            raise DomainError(f"Unknown noise kind {self.kind!r}, available: {list(NOISE_KINDS)}")
        if not 0.0 <= float(self.density) <= 1.0:
            raise DomainError(f"noise density must lie in [0, 1], got {self.density}")


def _draw_value(rng: SplitMix64, kind: str) -> int:
    if kind == 'fixed-value':
        return 255 * rng.next_bit()
    return rng.next_byte()


def impulse_mask(height: int, width: int, spec: NoiseSpec, rng: SplitMix64 = None) -> np.ndarray:
    """Boolean (H, W) map of the pixels a NoiseSpec corrupts."""
    rng = SplitMix64(spec.seed) if rng is None else rng
    density = float(spec.density)
    hits = [rng.next_float() < density for _ in range(height * width)]
    return np.array(hits, dtype=bool).reshape(height, width)


def add_impulse(image: RgbImage, spec: NoiseSpec) -> RgbImage:
    rng = SplitMix64(spec.seed)
    mask = impulse_mask(image.height, image.width, spec, rng)
    out = image.copy_pixels()
    for row, col in zip(*np.nonzero(mask)):
        if spec.per_channel:
            out[row, col] = [_draw_value(rng, spec.kind) for _ in range(3)]
        else:
            out[row, col] = _draw_value(rng, spec.kind)
    logger.debug(f'{spec.kind} noise hit {int(mask.sum())} of {mask.size} pixels (density {spec.density})')
    return RgbImage(out)
