"""
Deterministic synthetic test image: a colour gradient with a filled
rectangle, a disc and a diagonal band on top.
"""

import numpy as np

from .errors import DomainError
from .image import RgbImage

RECTANGLE_COLOR = (200, 40, 40)
DISC_COLOR = (30, 60, 200)
BAND_COLOR = (20, 160, 60)


def synthetic_image(width: int = 64, height: int = 64) -> RgbImage:
    if width < 8 or height < 8:
        raise DomainError(f"synthetic image needs at least 8x8 pixels, got {width}x{height}")
    y, x = np.mgrid[0:height, 0:width].astype(np.float64)
    u = x / (width - 1)
    v = y / (height - 1)

    pixels = np.empty((height, width, 3), dtype=np.float64)
    pixels[..., 0] = 40.0 + 200.0 * u
    pixels[..., 1] = 40.0 + 180.0 * v
    pixels[..., 2] = 220.0 - 140.0 * (u + v) / 2.0
    pixels = np.rint(pixels)

    rectangle = (v >= 0.125) & (v < 0.375) & (u >= 0.125) & (u < 0.5)
    disc = (u - 0.65) ** 2 + (v - 0.65) ** 2 <= 0.18 ** 2
    band = np.abs(u + v - 1.0) < 0.06
    pixels[rectangle] = RECTANGLE_COLOR
    pixels[disc] = DISC_COLOR
    pixels[band] = BAND_COLOR
    return RgbImage(pixels.astype(np.uint8))


def two_cluster_windows(count: int, seed: int = 0, min_majority: int = 5):
    """Random 3x3 windows holding ``k`` identical pixels and ``9 - k`` uniform outliers.

    Returns the windows, shaped (count, 9, 3), and the majority size ``k`` of each;
    ``k`` is drawn uniformly from ``min_majority..8``.
    """
    if count < 1:
        raise DomainError(f"window count must be positive, got {count}")
    if not 1 <= min_majority <= 8:
        raise DomainError(f"majority size must lie in 1..8, got {min_majority}")
    rng = np.random.default_rng(seed)
    windows = rng.integers(0, 256, size=(count, 9, 3))
    majority = rng.integers(min_majority, 9, size=count)
    for index in range(count):
        positions = rng.permutation(9)[:majority[index]]
        windows[index, positions] = rng.integers(0, 256, size=3)
    return windows.astype(np.uint8), majority
