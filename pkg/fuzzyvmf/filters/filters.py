"""
Vector filters for impulse noise in RGB images.

Each filter ranks the pixels of a sliding window by an accumulated distance
(VMF) or an accumulated fuzzy measure (fuzzy VMF, FVMLF) and replaces the
center with the best-ranked window pixel.
"""

import inspect

import numpy as np
from tqdm import tqdm

from ..errors import DomainError, UnsupportedWindowError
from ..image import RgbImage, check_side, extract_windows
from ..utils import logger, synchronize_timer
from .aggregates import ARGMAX, ARGMIN, classical_values, scheme_values, select_indices, tuple_values


class VectorFilter:
    name = 'base'
    sense = ARGMAX

    def check_window(self, side: int):
        check_side(side)

    def values(self, stack: np.ndarray) -> np.ndarray:
        """
        Abstract method computing one aggregate per window pixel.

        This method should be implemented by subclasses.

        Args:
            stack (np.ndarray): Windows shaped (..., side*side, 3).

        Returns:
            np.ndarray: Aggregates shaped (..., side*side).
        """
        raise NotImplementedError

    def __call__(self, stack: np.ndarray) -> np.ndarray:
        """
        Select the output pixel of every window in a batch.

        Args:
            stack (np.ndarray): Windows shaped (batch, side*side, 3).

        Returns:
            np.ndarray: The selected pixels, shaped (batch, 3).
        """
        center = stack.shape[-2] // 2
        selected = select_indices(self.values(stack), self.sense, center)
        return stack[np.arange(stack.shape[0]), selected]

    def __repr__(self):
        params = ', '.join(f'{k}={v!r}' for k, v in vars(self).items())
        return f'{type(self).__name__}({params})'


class VectorMedianFilter(VectorFilter):
    name = 'vmf'
    sense = ARGMIN

    def __init__(self, p: float = 2.0):
        if not float(p) >= 1.0:
            raise DomainError(f"L_p needs p >= 1, got {p}")
        self.p = float(p)

    def values(self, stack):
        return classical_values(stack, self.p)


class _FuzzyFilter(VectorFilter):
    def __init__(self, K: float = 1024.0):
        if not float(K) > 0:
            raise DomainError(f"K must be positive, got {K}")
        self.K = float(K)


class FuzzyVectorMedianFilter(_FuzzyFilter):
    """Pairwise accumulated fuzzy distance, M^i = sum_j M(I_i, I_j)."""
    name = 'fvmf'

    def values(self, stack):
        return tuple_values(stack, self.K, r=2)


class FuzzyVectorMedianLikeFilter(_FuzzyFilter):
    """Accumulated measure over every r-tuple of the window (r=3: 28 triples on 3x3)."""
    name = 'fvmlf-full'

    def __init__(self, K: float = 1024.0, r: int = 3):
        super().__init__(K)
        if int(r) < 2:
            raise DomainError(f"tuple size must be >= 2, got {r}")
        self.r = int(r)

    def check_window(self, side: int):
        side = check_side(side)
        if self.r > side * side:
            raise UnsupportedWindowError(f"tuple size {self.r} exceeds the {side * side} pixels of the window")

    def values(self, stack):
        return tuple_values(stack, self.K, self.r)


class SchemeFVMLF(_FuzzyFilter):
    """Four partner triples per position instead of all 28."""
    name = 'fvmlf-scheme'

    def check_window(self, side: int):
        if check_side(side) != 3:
            raise UnsupportedWindowError(f"the partner scheme is defined on 3x3 windows only, got side {side}")

    def values(self, stack):
        return scheme_values(stack, self.K)


FILTERS = {
    'vmf': VectorMedianFilter,
    'fvmf': FuzzyVectorMedianFilter,
    'fvmlf-full': FuzzyVectorMedianLikeFilter,
    'fvmlf-scheme': SchemeFVMLF,
}


def build_filter(kind: str, **params) -> VectorFilter:
    if kind not in FILTERS:
        raise DomainError(f'Unsupported filter kind {kind!r}, available: {list(FILTERS.keys())}')
    accepted = set(inspect.signature(FILTERS[kind].__init__).parameters.keys()) - {"self"}
    unknown = set(params) - accepted
    if unknown:
        raise DomainError(f"{kind} does not take {sorted(unknown)}, accepted parameters: {sorted(accepted)}")
    return FILTERS[kind](**params)


def filter_image(image: RgbImage, kind: str = 'fvmlf-scheme', side: int = 3,
                 enable_pbar: bool = False, **params) -> RgbImage:
    """
    Move a window over the image and replace every pixel by the filter's pick.

    Args:
        image (RgbImage): Input image; it is never modified.
        kind (str): One of the keys of ``FILTERS``.
        side (int): Odd window side, at least 3.
        enable_pbar (bool): Show a per-row progress bar.
        **params: Filter parameters, ``p`` for vmf and ``K`` (plus ``r``) for the fuzzy kinds.

    Returns:
        RgbImage: Filtered image with the same dimensions.
    """
    filt = build_filter(kind, **params)
    filt.check_window(side)
    windows = extract_windows(image, side)
    out = np.empty_like(image.pixels)
    with synchronize_timer(f'Filter {kind}'):
        # rows are independent; each reads only the immutable input windows
        for row in tqdm(range(image.height), disable=not enable_pbar, desc=f"Filtering ({kind}):"):
            out[row] = filt(windows[row])
    logger.debug(f'{filt!r} filtered a {image.width}x{image.height} image with {side}x{side} windows')
    return RgbImage(out)
