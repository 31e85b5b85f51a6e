import numpy as np
import pytest

from fuzzyvmf.image import RgbImage
from fuzzyvmf.noise import NoiseSpec, add_impulse
from fuzzyvmf.synthetic import synthetic_image

BLACK = (0, 0, 0)
WHITE = (255, 255, 255)


@pytest.fixture(scope='session')
def synthetic():
    return synthetic_image(64, 64)


@pytest.fixture(scope='session')
def noisy(synthetic):
    return add_impulse(synthetic, NoiseSpec('fixed-value', 0.1, False, 42))


@pytest.fixture
def black_window_white_center():
    pixels = np.zeros((9, 3), dtype=np.uint8)
    pixels[4] = WHITE
    return pixels


@pytest.fixture
def random_image():
    rng = np.random.default_rng(7)
    return RgbImage(rng.integers(0, 256, size=(12, 10, 3)))
