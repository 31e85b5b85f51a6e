"""
Accumulated distances and fuzzy measures over a window, and the rank
selection the vector filters are built on.

Every aggregate is computed by a batched ``*_values`` kernel over a stack of
windows shaped ``(..., n, 3)``; the single-window functions run the same
kernel on a batch of one, so a window filtered on its own and inside a
whole image produce bit-identical aggregates.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Tuple

import numpy as np

from ..errors import ArityError, DomainError, UnsupportedWindowError
from ..image import Window
from ..metrics import bounded_ratio_product

ARGMIN = 'argmin'
ARGMAX = 'argmax'

# Partner pairs of the 3x3 scheme, positions numbered 1..9 row-major.
# Only these three are fixed; the rest follow by grid symmetry (see scheme_partners).
SCHEME_PARTNERS = {
    1: ((2, 4), (3, 7), (6, 8), (5, 9)),
    2: ((1, 3), (4, 6), (7, 9), (5, 8)),
    5: ((1, 9), (2, 4), (3, 7), (6, 8)),
}

# The 8 symmetries of the 3x3 grid acting on 0-based (row, col).
DIHEDRAL = {
    'identity': lambda r, c: (r, c),
    'rot90': lambda r, c: (c, 2 - r),
    'rot180': lambda r, c: (2 - r, 2 - c),
    'rot270': lambda r, c: (2 - c, r),
    'flip_h': lambda r, c: (r, 2 - c),
    'flip_v': lambda r, c: (2 - r, c),
    'transpose': lambda r, c: (c, r),
    'anti_transpose': lambda r, c: (2 - c, 2 - r),
}


def apply_symmetry(name: str, index: int) -> int:
    """Image of a 0-based 3x3 position under a grid symmetry."""
    r, c = DIHEDRAL[name](*divmod(index, 3))
    return 3 * r + c


def _map_pairs(name: str, pairs):
    return tuple(tuple(sorted(apply_symmetry(name, k) for k in pair)) for pair in pairs)


def scheme_partners() -> Dict[int, Tuple[Tuple[int, int], ...]]:
    """0-based partner pairs for all nine positions.

    Corners are images of position 0 and edges images of position 1 under
    the grid symmetry that carries them there; the center keeps its own row.
    """
    literal = {k - 1: tuple((a - 1, b - 1) for a, b in pairs) for k, pairs in SCHEME_PARTNERS.items()}
    table = dict(literal)
    for base in (0, 1):
        for name in DIHEDRAL:
            target = apply_symmetry(name, base)
            if target not in table:
                table[target] = _map_pairs(name, literal[base])
    return dict(sorted(table.items()))


SCHEME_TABLE = scheme_partners()


@dataclass(frozen=True, eq=False)
class WindowAggregate:
    values: np.ndarray
    selected: int
    sense: str


def _check_K(K: float) -> float:
    K = float(K)
    if not K > 0:
        raise DomainError(f"K must be positive, got {K}")
    return K


def lp_distance(a, b, p: float = 2.0) -> float:
    p = float(p)
    if not p >= 1.0:
        raise DomainError(f"L_p needs p >= 1, got {p}")
    diff = np.abs(np.asarray(a, dtype=np.float64) - np.asarray(b, dtype=np.float64))
    return float(np.sum(diff ** p) ** (1.0 / p))


def fuzzy_pixel_metric(a, b, K: float = 1024.0) -> float:
    return float(bounded_ratio_product(np.stack([a, b]), _check_K(K)))


def fuzzy_triple_metric(a, b, c, K: float = 1024.0) -> float:
    return float(bounded_ratio_product(np.stack([a, b, c]), _check_K(K)))


def select_indices(values: np.ndarray, sense: str, center: int) -> np.ndarray:
    """Optimal position along the last axis; the center wins ties, then the lowest index."""
    if sense == ARGMAX:
        best, first = values.max(axis=-1), values.argmax(axis=-1)
    elif sense == ARGMIN:
        best, first = values.min(axis=-1), values.argmin(axis=-1)
    else:
        raise DomainError(f"Unknown selection sense {sense!r}")
    return np.where(values[..., center] == best, center, first)


def select_index(values, sense: str, center: int) -> int:
    return int(select_indices(np.asarray(values), sense, center))


def ordered_sum(terms: np.ndarray) -> np.ndarray:
    """Sum along the last axis in ascending order.

    Equal multisets of terms give bit-identical sums wherever they sit, so
    mathematically tied aggregates stay tied and the center tie-break holds.
    """
    terms = np.sort(terms, axis=-1)
    out = terms[..., 0]
    for k in range(1, terms.shape[-1]):
        out = out + terms[..., k]
    return out


def classical_values(stack: np.ndarray, p: float = 2.0) -> np.ndarray:
    """Sum of L_p distances from each window pixel to every pixel of its window."""
    p = float(p)
    if not p >= 1.0:
        raise DomainError(f"L_p needs p >= 1, got {p}")
    stack = np.asarray(stack, dtype=np.float64)
    diff = np.abs(stack[..., :, None, :] - stack[..., None, :, :])
    dist = ordered_sum(diff ** p) ** (1.0 / p)
    return ordered_sum(dist)


def tuple_values(stack: np.ndarray, K: float = 1024.0, r: int = 3) -> np.ndarray:
    """D^i = sum of F_r over every (r-1)-subset of the other window pixels."""
    K = _check_K(K)
    stack = np.asarray(stack)
    n = stack.shape[-2]
    if not 2 <= r <= n:
        raise ArityError(f"tuple size must satisfy 2 <= r <= {n}, got {r}")
    # F_r is symmetric, so each r-subset is evaluated once and shared by its members
    cache = {subset: bounded_ratio_product(stack[..., list(subset), :], K)
             for subset in combinations(range(n), r)}
    columns = []
    for i in range(n):
        others = [j for j in range(n) if j != i]
        terms = [cache[tuple(sorted((i,) + rest))] for rest in combinations(others, r - 1)]
        columns.append(ordered_sum(np.stack(terms, axis=-1)))
    return np.stack(columns, axis=-1)


def scheme_values(stack: np.ndarray, K: float = 1024.0) -> np.ndarray:
    K = _check_K(K)
    stack = np.asarray(stack)
    if stack.shape[-2] != 9:
        raise UnsupportedWindowError(f"the partner scheme is defined on 3x3 windows only, got {stack.shape[-2]} pixels")
    columns = []
    for i, pairs in SCHEME_TABLE.items():
        terms = [bounded_ratio_product(stack[..., [i, a, b], :], K) for a, b in pairs]
        columns.append(ordered_sum(np.stack(terms, axis=-1)))
    return np.stack(columns, axis=-1)


def _aggregate(window: Window, values: np.ndarray, sense: str) -> WindowAggregate:
    values = values[0]
    return WindowAggregate(values, select_index(values, sense, window.center_index), sense)


def agg_classical(window: Window, p: float = 2.0) -> WindowAggregate:
    return _aggregate(window, classical_values(window.pixels[None], p), ARGMIN)


def agg_fuzzy_tuples(window: Window, K: float = 1024.0, r: int = 3) -> WindowAggregate:
    return _aggregate(window, tuple_values(window.pixels[None], K, r), ARGMAX)


def agg_fuzzy_pairwise(window: Window, K: float = 1024.0) -> WindowAggregate:
    return agg_fuzzy_tuples(window, K, r=2)


def agg_fuzzy_triples_full(window: Window, K: float = 1024.0) -> WindowAggregate:
    return agg_fuzzy_tuples(window, K, r=3)


def agg_fuzzy_triples_scheme(window: Window, K: float = 1024.0) -> WindowAggregate:
    if window.side != 3:
        raise UnsupportedWindowError(f"the partner scheme is defined on 3x3 windows only, got side {window.side}")
    return _aggregate(window, scheme_values(window.pixels[None], K), ARGMAX)


def select_output(agg: WindowAggregate, window: Window) -> np.ndarray:
    if len(agg.values) != window.size:
        raise ArityError(f"aggregate has {len(agg.values)} values for a window of {window.size} pixels")
    return window.pixels[agg.selected]


def scheme_agreement(windows, K: float = 1024.0) -> float:
    """Fraction of 3x3 windows where the partner scheme and the full 28-term
    aggregate select the same pixel value."""
    windows = np.asarray(windows)
    if windows.ndim != 3 or windows.shape[1:] != (9, 3):
        raise UnsupportedWindowError(f"expected a stack of 3x3 windows shaped (N, 9, 3), got {windows.shape}")
    if windows.shape[0] == 0:
        raise DomainError("scheme agreement needs at least one window")
    rows = np.arange(windows.shape[0])
    scheme = windows[rows, select_indices(scheme_values(windows, K), ARGMAX, 4)]
    full = windows[rows, select_indices(tuple_values(windows, K, 3), ARGMAX, 4)]
    return float(np.mean(np.all(scheme == full, axis=-1)))
