"""
RGB images and the sliding windows the vector filters operate on.
"""

from dataclasses import dataclass

import numpy as np
from einops import rearrange
from numpy.lib.stride_tricks import sliding_window_view

from .errors import DimensionMismatchError, DomainError, UnsupportedWindowError


def as_pixel(value) -> np.ndarray:
    """Validate a single RGB pixel: three integer channels in 0..255."""
    pixel = np.asarray(value)
    if pixel.shape != (3,):
        raise DomainError(f"an RGB pixel has 3 channels, got shape {pixel.shape}")
    if not np.issubdtype(pixel.dtype, np.integer):
        if not np.all(np.mod(pixel, 1) == 0):
            raise DomainError(f"RGB channels must be integers, got {pixel.tolist()}")
    if np.any(pixel < 0) or np.any(pixel > 255):
        raise DomainError(f"RGB channels must lie in 0..255, got {pixel.tolist()}")
    return pixel.astype(np.uint8)


@dataclass(frozen=True, eq=False)
class RgbImage:
    pixels: np.ndarray

    def __post_init__(self):
        pixels = np.asarray(self.pixels)
        if pixels.ndim != 3 or pixels.shape[2] != 3:
            raise DimensionMismatchError(f"expected an (H, W, 3) array, got shape {pixels.shape}")
        if pixels.shape[0] < 1 or pixels.shape[1] < 1:
            raise DimensionMismatchError(f"image must be non-empty, got shape {pixels.shape}")
        if pixels.dtype != np.uint8:
            if np.any(pixels < 0) or np.any(pixels > 255) or np.any(np.mod(pixels, 1) != 0):
                raise DomainError("RGB channels must be integers in 0..255")
            pixels = pixels.astype(np.uint8)
        pixels = np.ascontiguousarray(pixels)
        pixels.setflags(write=False)
        object.__setattr__(self, 'pixels', pixels)

    @classmethod
    def filled(cls, width: int, height: int, color) -> 'RgbImage':
        return cls(np.broadcast_to(as_pixel(color), (height, width, 3)).copy())

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def shape(self):
        return self.pixels.shape

    def __eq__(self, other) -> bool:
        return isinstance(other, RgbImage) and np.array_equal(self.pixels, other.pixels)

    def copy_pixels(self) -> np.ndarray:
        return self.pixels.copy()


def require_same_size(reference: RgbImage, test: RgbImage):
    if reference.shape != test.shape:
        raise DimensionMismatchError(
            f"images differ in size: {reference.width}x{reference.height} vs {test.width}x{test.height}"
        )


def check_side(side: int) -> int:
    side = int(side)
    if side < 3 or side % 2 == 0:
        raise UnsupportedWindowError(f"window side must be an odd integer >= 3, got {side}")
    return side


@dataclass(frozen=True, eq=False)
class Window:
    """A side x side neighbourhood, pixels flattened row-major."""
    side: int
    pixels: np.ndarray

    def __post_init__(self):
        check_side(self.side)
        pixels = np.asarray(self.pixels)
        if pixels.shape != (self.side * self.side, 3):
            raise UnsupportedWindowError(
                f"a {self.side}x{self.side} window holds {self.side ** 2} pixels, got shape {pixels.shape}"
            )
        object.__setattr__(self, 'pixels', pixels.astype(np.uint8))

    @classmethod
    def from_pixels(cls, pixels) -> 'Window':
        pixels = np.asarray(pixels)
        side = int(round(np.sqrt(pixels.shape[0])))
        return cls(side, pixels)

    @property
    def size(self) -> int:
        return self.side * self.side

    @property
    def center_index(self) -> int:
        return self.size // 2

    @property
    def center(self) -> np.ndarray:
        return self.pixels[self.center_index]


def extract_windows(image: RgbImage, side: int = 3) -> np.ndarray:
    """All windows of ``image`` as an array of shape (H, W, side*side, 3).

    Borders use replicate padding, so every pixel gets a full window centered on it.
    """
    side = check_side(side)
    half = side // 2
    padded = np.pad(image.pixels, ((half, half), (half, half), (0, 0)), mode='edge')
    views = sliding_window_view(padded, (side, side), axis=(0, 1))
    return rearrange(views, 'h w c wy wx -> h w (wy wx) c')


def window_at(image: RgbImage, row: int, col: int, side: int = 3) -> Window:
    if not (0 <= row < image.height and 0 <= col < image.width):
        raise DomainError(f"pixel ({row}, {col}) lies outside a {image.width}x{image.height} image")
    side = check_side(side)
    half = side // 2
    rows = np.clip(np.arange(row - half, row + half + 1), 0, image.height - 1)
    cols = np.clip(np.arange(col - half, col + half + 1), 0, image.width - 1)
    block = image.pixels[np.ix_(rows, cols)]
    return Window(side, rearrange(block, 'wy wx c -> (wy wx) c'))
