"""
Generalized fuzzy n-metrics and fuzzy vector median-like filtering of
impulse noise in RGB images.
"""

from .errors import FuzzyVMFError
from .image import RgbImage, Window, extract_windows, window_at
from .noise import NoiseSpec, add_impulse
from .quality import QualityReport, evaluate, mae, ncd, psnr
from .filters import FILTERS, filter_image
from .image_io import read_image, write_image
from .synthetic import synthetic_image

__version__ = '0.1.0'
