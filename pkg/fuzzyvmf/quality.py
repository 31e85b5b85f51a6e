"""
Image quality measures: MAE, PSNR and NCD.

NCD is measured in CIELAB with these pinned constants:

  * sRGB decoding: c = v / 255; linear = c / 12.92 if c <= 0.04045
    else ((c + 0.055) / 1.055) ** 2.4
  * linear RGB -> XYZ:
        [[0.4124564, 0.3575761, 0.1804375],
         [0.2126729, 0.7151522, 0.0721750],
         [0.0193339, 0.1191920, 0.9503041]]
  * white point D65: (0.95047, 1.0, 1.08883)
  * f(t) = t ** (1/3) if t > (6/29) ** 3 else t / (3 * (6/29) ** 2) + 4/29
  * L = 116 f(Y/Yn) - 16, a = 500 (f(X/Xn) - f(Y/Yn)), b = 200 (f(Y/Yn) - f(Z/Zn))
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import UndefinedMetricError
from .image import RgbImage, require_same_size

PEAK = 255.0

SRGB_TO_XYZ = np.array([
    [0.4124564, 0.3575761, 0.1804375],
    [0.2126729, 0.7151522, 0.0721750],
    [0.0193339, 0.1191920, 0.9503041],
])
D65_WHITE = np.array([0.95047, 1.0, 1.08883])
LAB_DELTA = 6.0 / 29.0

CSV_HEADER = 'mae,psnr,ncd'


def mae(reference: RgbImage, test: RgbImage) -> float:
    require_same_size(reference, test)
    diff = reference.pixels.astype(np.float64) - test.pixels.astype(np.float64)
    return float(np.mean(np.abs(diff)))


def psnr(reference: RgbImage, test: RgbImage) -> float:
    """Peak signal-to-noise ratio in dB; identical images give ``math.inf``."""
    require_same_size(reference, test)
    diff = reference.pixels.astype(np.float64) - test.pixels.astype(np.float64)
    mse = float(np.mean(diff ** 2))
    if mse == 0.0:
        return math.inf
    return float(10.0 * np.log10(PEAK ** 2 / mse))


def srgb_to_lab(pixels) -> np.ndarray:
    """Convert 8-bit sRGB values, shape (..., 3), to CIELAB (D65)."""
    c = np.asarray(pixels, dtype=np.float64) / PEAK
    linear = np.where(c <= 0.04045, c / 12.92, ((c + 0.055) / 1.055) ** 2.4)
    xyz = linear @ SRGB_TO_XYZ.T / D65_WHITE
    f = np.where(xyz > LAB_DELTA ** 3, np.cbrt(xyz), xyz / (3.0 * LAB_DELTA ** 2) + 4.0 / 29.0)
    fx, fy, fz = f[..., 0], f[..., 1], f[..., 2]
    return np.stack([116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)], axis=-1)


def ncd(reference: RgbImage, test: RgbImage) -> float:
    """Normalized colour difference: summed CIELAB error over summed CIELAB norm of the reference."""
    require_same_size(reference, test)
    if not np.any(reference.pixels):
        raise UndefinedMetricError("NCD is undefined for an all-black reference image")
    lab_ref = srgb_to_lab(reference.pixels)
    lab_test = srgb_to_lab(test.pixels)
    numerator = float(np.sum(np.linalg.norm(lab_ref - lab_test, axis=-1)))
    denominator = float(np.sum(np.linalg.norm(lab_ref, axis=-1)))
    if denominator == 0.0:
        raise UndefinedMetricError("NCD is undefined: the reference has zero CIELAB norm")
    return numerator / denominator


def format_value(value) -> str:
    """CSV rendering: positional notation, no trailing zeros, ``inf`` for infinity."""
    value = float(value)
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return np.format_float_positional(value, trim='-')


@dataclass(frozen=True)
class QualityReport:
    mae: float
    psnr: float
    ncd: float

    def csv_row(self) -> str:
        return ','.join(format_value(v) for v in (self.mae, self.psnr, self.ncd))


def evaluate(reference: RgbImage, test: RgbImage) -> QualityReport:
    return QualityReport(mae(reference, test), psnr(reference, test), ncd(reference, test))
