import numpy as np
import pytest

from fuzzyvmf.errors import DomainError
from fuzzyvmf.synthetic import BAND_COLOR, DISC_COLOR, RECTANGLE_COLOR, synthetic_image, two_cluster_windows


def test_synthetic_image_is_deterministic():
    first = synthetic_image()
    assert (first.width, first.height) == (64, 64)
    assert synthetic_image().pixels.tobytes() == first.pixels.tobytes()


def test_synthetic_image_contents(synthetic):
    colours = {tuple(int(c) for c in p) for p in synthetic.pixels.reshape(-1, 3)}
    assert {RECTANGLE_COLOR, DISC_COLOR, BAND_COLOR} <= colours
    assert len(colours) > 100
    assert synthetic.pixels.min() > 0 and synthetic.pixels.max() < 255
    with pytest.raises(DomainError):
        synthetic_image(4, 64)


def test_two_cluster_windows():
    windows, majority = two_cluster_windows(200, seed=4)
    assert windows.shape == (200, 9, 3) and windows.dtype == np.uint8
    assert majority.min() >= 5 and majority.max() <= 8
    for window, k in zip(windows, majority):
        _, counts = np.unique(window, axis=0, return_counts=True)
        assert counts.max() >= k
    again, _ = two_cluster_windows(200, seed=4)
    assert np.array_equal(windows, again)
    with pytest.raises(DomainError):
        two_cluster_windows(0)
