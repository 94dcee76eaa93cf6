"""Reference codecs used for comparison.

Two desk-scale stand-ins for the classic transform coders:

* an 8x8 DCT coder that keeps the lowest-frequency coefficients per
  block in zig-zag order (JPEG-style zonal truncation, no quantization
  or entropy coding),
* a multi-level 2D Haar coder that keeps the globally
  largest-magnitude coefficients (JPEG2000-flavoured, same caveat).

Both are rate-matched by element count: a compression ratio of ``cr``
means exactly total/cr retained coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

BLOCK = 8

ZIGZAG = np.array([
     0,  1,  8, 16,  9,  2,  3, 10,
    17, 24, 32, 25, 18, 11,  4,  5,
    12, 19, 26, 33, 40, 48, 41, 34,
    27, 20, 13,  6,  7, 14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36,
    29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46,
    53, 60, 61, 54, 47, 55, 62, 63,
], dtype=np.int64)


@dataclass(frozen=True)
class BaselineConfig:
    """One benchmark configuration for a reference codec."""

    method: str  # "dct8x8" or "haarDwt"
    cr: int
    dwt_levels: int | None = None

    def __post_init__(self):
        if self.method not in ("dct8x8", "haarDwt"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.cr not in (2, 4, 8):
            raise ValueError(f"cr must be one of 2, 4, 8, got {self.cr}")
        if self.method == "haarDwt" and self.dwt_levels is None:
            object.__setattr__(self, "dwt_levels", default_dwt_levels(self.cr))


def default_dwt_levels(cr: int) -> int:
    """Decomposition depth paired with each ratio: 2->1, 4->2, 8->3."""
    return max(1, int(round(math.log2(cr))))


def _dct_matrix(n: int = BLOCK) -> np.ndarray:
    d = np.zeros((n, n))
    for u in range(n):
        alpha = math.sqrt(1.0 / n) if u == 0 else math.sqrt(2.0 / n)
        for x in range(n):
            d[u, x] = alpha * math.cos((2 * x + 1) * u * math.pi / (2 * n))
    return d


_DCT = _dct_matrix()


def dct8_forward(block) -> np.ndarray:
    """Orthonormal type-II 2D DCT of one 8x8 block."""
    arr = np.asarray(block, dtype=np.float64)
    if arr.shape != (BLOCK, BLOCK):
        raise ValueError(f"expected an 8x8 block, got {arr.shape}")
    return _DCT @ arr @ _DCT.T


def dct8_inverse(block) -> np.ndarray:
    """Exact inverse of :func:`dct8_forward`."""
    arr = np.asarray(block, dtype=np.float64)
    if arr.shape != (BLOCK, BLOCK):
        raise ValueError(f"expected an 8x8 block, got {arr.shape}")
    return _DCT.T @ arr @ _DCT


def _round_clamp_u8(arr: np.ndarray) -> np.ndarray:
    rounded = np.where(arr >= 0, np.floor(arr + 0.5), np.ceil(arr - 0.5))
    return np.clip(rounded, 0, 255).astype(np.uint8)


def _zonal_mask(cr: int) -> np.ndarray:
    if cr < 1 or BLOCK * BLOCK % cr:
        raise ValueError(f"cr must divide {BLOCK * BLOCK}, got {cr}")
    keep = BLOCK * BLOCK // cr
    mask = np.zeros(BLOCK * BLOCK, dtype=bool)
    mask[ZIGZAG[:keep]] = True
    return mask.reshape(BLOCK, BLOCK)


def jpeg_like_compress(img, cr: int) -> np.ndarray:
    """Blockwise DCT with zonal truncation at element-count ratio ``cr``.

    Keeps the 64/cr lowest zig-zag coefficients of every 8x8 block,
    zeroes the rest, inverse transforms, rounds, and clamps.  Edges are
    replicated out to full blocks and cropped afterwards.
    """
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError("expected a non-empty 2D image")
    mask = _zonal_mask(cr)
    h, w = arr.shape
    pad_h = (-h) % BLOCK
    pad_w = (-w) % BLOCK
    if pad_h or pad_w:
        arr = np.pad(arr, ((0, pad_h), (0, pad_w)), mode="edge")
    ph, pw = arr.shape
    blocks = arr.reshape(ph // BLOCK, BLOCK, pw // BLOCK, BLOCK).transpose(0, 2, 1, 3)
    coeffs = np.einsum("ux,abxy,vy->abuv", _DCT, blocks, _DCT)
    coeffs *= mask
    recon = np.einsum("ux,abuv,vy->abxy", _DCT, coeffs, _DCT)
    full = recon.transpose(0, 2, 1, 3).reshape(ph, pw)
    return _round_clamp_u8(full[:h, :w])


def haar_analysis(img, levels: int) -> np.ndarray:
    """Multi-level orthonormal 2D Haar analysis (standard nested layout).

    After each level the running low-pass quadrant occupies the top-left
    corner and is decomposed again.
    """
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError("expected a non-empty 2D image")
    if levels < 1:
        raise ValueError("levels must be >= 1")
    h, w = arr.shape
    if h % (1 << levels) or w % (1 << levels):
        raise ValueError(f"dimensions {arr.shape} not divisible by 2^{levels}")
    out = arr.copy()
    for k in range(levels):
        rh, rw = h >> k, w >> k
        region = out[:rh, :rw]
        a = region[0::2, 0::2]
        b = region[0::2, 1::2]
        c = region[1::2, 0::2]
        d = region[1::2, 1::2]
        ll = (a + b + c + d) / 2.0
        lh = (a - b + c - d) / 2.0
        hl = (a + b - c - d) / 2.0
        hh = (a - b - c + d) / 2.0
        region[: rh // 2, : rw // 2] = ll
        region[: rh // 2, rw // 2:] = lh
        region[rh // 2:, : rw // 2] = hl
        region[rh // 2:, rw // 2:] = hh
    return out


def haar_synthesis(coeffs, levels: int) -> np.ndarray:
    """Exact inverse of :func:`haar_analysis`."""
    arr = np.asarray(coeffs, dtype=np.float64)
    h, w = arr.shape
    if levels < 1 or h % (1 << levels) or w % (1 << levels):
        raise ValueError(f"bad coefficient layout {arr.shape} for {levels} levels")
    out = arr.copy()
    for k in range(levels - 1, -1, -1):
        rh, rw = h >> k, w >> k
        region = out[:rh, :rw]
        ll = region[: rh // 2, : rw // 2].copy()
        lh = region[: rh // 2, rw // 2:].copy()
        hl = region[rh // 2:, : rw // 2].copy()
        hh = region[rh // 2:, rw // 2:].copy()
        region[0::2, 0::2] = (ll + lh + hl + hh) / 2.0
        region[0::2, 1::2] = (ll - lh + hl - hh) / 2.0
        region[1::2, 0::2] = (ll + lh - hl - hh) / 2.0
        region[1::2, 1::2] = (ll - lh - hl + hh) / 2.0
    return out


def haar_dwt_compress(img, cr: int, levels: int | None = None) -> np.ndarray:
    """Multi-level Haar coder keeping the total/cr largest coefficients.

    The deepest low-pass quadrant is always retained in full; the rest of
    the retention budget goes to the largest-magnitude detail
    coefficients, ties broken toward lower row-major positions.
    """
    arr = np.asarray(img, dtype=np.float64)
    if cr < 1:
        raise ValueError(f"cr must be >= 1, got {cr}")
    if levels is None:
        levels = default_dwt_levels(cr)
    coeffs = haar_analysis(arr, levels)
    h, w = coeffs.shape
    total = h * w
    if total % cr:
        raise ValueError(f"cr {cr} does not divide the pixel count {total}")
    budget = total // cr

    ll_rows, ll_cols = h >> levels, w >> levels
    ll_mask = np.zeros((h, w), dtype=bool)
    ll_mask[:ll_rows, :ll_cols] = True
    detail_budget = budget - ll_rows * ll_cols
    if detail_budget < 0:
        raise ValueError(f"cr {cr} exceeds the capacity of {levels} levels")

    flat = coeffs.ravel()
    detail_idx = np.flatnonzero(~ll_mask.ravel())
    order = np.lexsort((detail_idx, -np.abs(flat[detail_idx])))
    keep = ll_mask.ravel().copy()
    keep[detail_idx[order[:detail_budget]]] = True

    kept = np.where(keep.reshape(h, w), coeffs, 0.0)
    return _round_clamp_u8(haar_synthesis(kept, levels))
