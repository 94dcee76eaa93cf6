"""Parity-coded 2x2 block compression and decompression.

Each 2x2 block is reduced to two stored integers, ``lh`` and ``hl``:
roughly the block mean plus/minus a weighted copy of the largest diagonal
spread.  Two extra bits ride along in the parities of the stored values:

* parity of ``hl`` records the orientation of the minor diagonal (even
  when its upper element is the larger),
* parity of ``lh`` records the column order (even when the left column
  sum is at least the right column sum).

The decoder re-expands the major diagonal around the mean, reuses the two
stored values verbatim as the minor-diagonal estimates, and uses the two
parity bits to place everything back in its original corner.

Scalar functions (``block_stats``, ``encode_block``, ``decode_block``) are
pure Python and serve as the reference; ``compress``/``decompress`` are
the vectorized equivalents and must match them bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

I16_MIN = -(1 << 15)
I16_MAX = (1 << 15) - 1


@dataclass(frozen=True)
class BlockStats:
    """Per-block integer summary used by the encoder.

    mean:        rounded (half away from zero) block mean
    d_primary:   x11 - x22, the main-diagonal difference
    d_secondary: x12 - x21, the anti-diagonal difference
    gap:         |d_primary| - |d_secondary|
    span:        2 * the larger-magnitude diagonal difference, carrying
                 that difference's sign (ties go to the primary diagonal)
    """

    mean: int
    d_primary: int
    d_secondary: int
    gap: int
    span: int


@dataclass(frozen=True)
class CodecParams:
    """Encoder/decoder weights.

    ``lam`` scales the span into the stored difference (exact rational so
    the ceiling/floor arithmetic stays integer-exact).  ``mu`` scales the
    re-expansion of the major diagonal on decode.
    """

    lam: Fraction = field(default=Fraction(1, 8))
    mu: float = 0.97

    def __post_init__(self):
        lam = self.lam
        if not isinstance(lam, Fraction):
            lam = Fraction(lam)
            object.__setattr__(self, "lam", lam)
        if not 0 < lam <= 1:
            raise ValueError(f"lam must be in (0, 1], got {lam}")
        if not 0.0 < self.mu <= 1.0:
            raise ValueError(f"mu must be in (0, 1], got {self.mu}")


@dataclass(frozen=True)
class SubbandPair:
    """The two stored half-size matrices (int16).

    ``lh`` carries the column-order bit in its parity, ``hl`` the
    minor-diagonal orientation bit.
    """

    lh: np.ndarray
    hl: np.ndarray

    def __post_init__(self):
        if self.lh.shape != self.hl.shape:
            raise ValueError(
                f"sub-band shapes differ: {self.lh.shape} vs {self.hl.shape}"
            )

    @property
    def sample_count(self) -> int:
        return self.lh.size + self.hl.size


@dataclass(frozen=True)
class BlockEncoding:
    """Full encoder trace for one block (handy for tests and debugging)."""

    stats: BlockStats
    raw_lh: int
    raw_hl: int
    lh_parity: int  # column-order bit: 0 even, 1 odd
    hl_parity: int  # minor-orientation bit: 0 even, 1 odd
    lh: int
    hl: int


def _round_half_away(numer: int, denom: int) -> int:
    """Round numer/denom to the nearest integer, halves away from zero."""
    if numer >= 0:
        return (2 * numer + denom) // (2 * denom)
    return -((-2 * numer + denom) // (2 * denom))


def _as_block(block) -> tuple[int, int, int, int]:
    arr = np.asarray(block)
    if arr.shape != (2, 2):
        raise ValueError(f"expected a 2x2 block, got shape {arr.shape}")
    return int(arr[0, 0]), int(arr[0, 1]), int(arr[1, 0]), int(arr[1, 1])


def block_stats(block) -> BlockStats:
    """Integer summary of one 2x2 block."""
    x11, x12, x21, x22 = _as_block(block)
    mean = _round_half_away(x11 + x12 + x21 + x22, 4)
    d1 = x11 - x22
    d2 = x12 - x21
    gap = abs(d1) - abs(d2)
    major = d1 if abs(d1) >= abs(d2) else d2
    sign = (major > 0) - (major < 0)
    span = sign * 2 * max(abs(d1), abs(d2))
    return BlockStats(mean=mean, d_primary=d1, d_secondary=d2, gap=gap, span=span)


def _match_parity(value: int, want_odd: bool) -> int:
    """Force the low bit of ``value`` by stepping down one (up at INT16 min)."""
    if (value & 1 == 1) == want_odd:
        return value
    return value + 1 if value == I16_MIN else value - 1


def trace_block(block, params: CodecParams | None = None) -> BlockEncoding:
    """Encode one block, keeping every intermediate."""
    params = params or CodecParams()
    x11, x12, x21, x22 = _as_block(block)
    stats = block_stats(block)
    num = params.lam.numerator * stats.span
    den = params.lam.denominator
    if stats.span >= 0:
        raw_lh = stats.mean + -((-num) // den)  # ceil of mean + lam*span
        raw_hl = stats.mean + (-num) // den     # floor of mean - lam*span
    else:
        raw_lh = stats.mean + num // den        # floor
        raw_hl = stats.mean + -(num // den)     # ceil
    # Minor diagonal: the smaller-magnitude difference; ties make the
    # secondary diagonal the minor one.
    minor = stats.d_secondary if abs(stats.d_primary) >= abs(stats.d_secondary) else stats.d_primary
    hl_parity = 1 if minor < 0 else 0
    lh_parity = 1 if (x11 + x21) < (x12 + x22) else 0
    return BlockEncoding(
        stats=stats,
        raw_lh=raw_lh,
        raw_hl=raw_hl,
        lh_parity=lh_parity,
        hl_parity=hl_parity,
        lh=_match_parity(raw_lh, lh_parity == 1),
        hl=_match_parity(raw_hl, hl_parity == 1),
    )


def encode_block(block, params: CodecParams | None = None) -> tuple[int, int]:
    """Encode one 2x2 block to its stored (lh, hl) pair."""
    enc = trace_block(block, params)
    return enc.lh, enc.hl


def decode_block(lh: int, hl: int, params: CodecParams | None = None,
                 *, clamp: bool = True) -> np.ndarray:
    """Reconstruct a 2x2 block from its stored pair.

    ``clamp`` limits the result to [0, 255]; turn it off when the decoded
    values are sub-band samples rather than final pixels.
    """
    params = params or CodecParams()
    lh, hl = int(lh), int(hl)
    mean = (lh + hl) / 2.0
    spread = params.mu * abs(lh - hl)
    if lh >= hl:
        up_major, down_major = mean + spread, mean - spread
    else:
        up_major, down_major = mean - spread, mean + spread
    # The stored values double as minor-diagonal estimates; hl's parity
    # says whether the upper minor element is the larger one.
    if (hl >= lh) == (hl & 1 == 1):
        up_minor, down_minor = float(lh), float(hl)
    else:
        up_minor, down_minor = float(hl), float(lh)
    left_sum = up_major + down_minor
    right_sum = down_major + up_minor
    # lh's parity says which column sum was larger originally; swap the
    # columns if the candidate layout disagrees.
    if (left_sum >= right_sum) != (lh & 1 == 1):
        cells = (up_major, up_minor, down_minor, down_major)
    else:
        cells = (up_minor, up_major, down_major, down_minor)
    out = []
    for v in cells:
        r = math.floor(v + 0.5) if v >= 0 else math.ceil(v - 0.5)
        if clamp:
            r = min(max(r, 0), 255)
        out.append(r)
    return np.array([[out[0], out[1]], [out[2], out[3]]], dtype=np.int64)


def _corners(img: np.ndarray):
    return img[0::2, 0::2], img[0::2, 1::2], img[1::2, 0::2], img[1::2, 1::2]


def compress(img: np.ndarray, params: CodecParams | None = None) -> SubbandPair:
    """Encode every 2x2 block of an even-dimensioned nonnegative matrix.

    Output holds half as many samples as the input.  Bit-identical to
    applying :func:`encode_block` block by block.
    """
    params = params or CodecParams()
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2D array, got {arr.ndim}D")
    if arr.shape[0] % 2 or arr.shape[1] % 2:
        raise ValueError(f"dimensions must be even, got {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise TypeError("pixel matrix must have an integer dtype")
    if arr.size == 0:
        raise ValueError("empty image")
    if arr.min() < 0:
        raise ValueError("encoder input must be nonnegative")

    x11, x12, x21, x22 = (c.astype(np.int64) for c in _corners(arr))
    total = x11 + x12 + x21 + x22
    mean = (total + 2) // 4  # half-away rounding; inputs are nonnegative
    d1 = x11 - x22
    d2 = x12 - x21
    a1, a2 = np.abs(d1), np.abs(d2)
    primary_major = a1 >= a2
    span = np.where(primary_major, np.sign(d1), np.sign(d2)) * 2 * np.maximum(a1, a2)

    num = params.lam.numerator * span
    den = params.lam.denominator
    nonneg = span >= 0
    raw_lh = mean + np.where(nonneg, -((-num) // den), num // den)
    raw_hl = mean + np.where(nonneg, (-num) // den, -(num // den))

    minor = np.where(primary_major, d2, d1)
    lh = _match_parity_array(raw_lh, (x11 + x21) < (x12 + x22))
    hl = _match_parity_array(raw_hl, minor < 0)

    for name, band in (("lh", lh), ("hl", hl)):
        if band.min() < I16_MIN or band.max() > I16_MAX:
            raise ValueError(f"{name} sample out of 16-bit range; input too large")
    return SubbandPair(lh=lh.astype(np.int16), hl=hl.astype(np.int16))


def _match_parity_array(values: np.ndarray, want_odd: np.ndarray) -> np.ndarray:
    mismatch = ((values & 1) == 1) != want_odd
    stepped = np.where(values == I16_MIN, values + 1, values - 1)
    return np.where(mismatch, stepped, values)


def decompress(pair: SubbandPair, params: CodecParams | None = None,
               *, clamp: bool = True) -> np.ndarray:
    """Rebuild the full-size matrix from a stored sub-band pair.

    Bit-identical to applying :func:`decode_block` block by block.
    Returns int64; with ``clamp`` the values lie in [0, 255].
    """
    params = params or CodecParams()
    lh = pair.lh.astype(np.int64)
    hl = pair.hl.astype(np.int64)

    mean = (lh + hl) / 2.0
    spread = params.mu * np.abs(lh - hl)
    lh_ge = lh >= hl
    up_major = np.where(lh_ge, mean + spread, mean - spread)
    down_major = np.where(lh_ge, mean - spread, mean + spread)

    take_lh_up = (hl >= lh) == ((hl & 1) == 1)
    up_minor = np.where(take_lh_up, lh, hl).astype(np.float64)
    down_minor = np.where(take_lh_up, hl, lh).astype(np.float64)

    keep = ((up_major + down_minor) >= (down_major + up_minor)) != ((lh & 1) == 1)
    x11 = np.where(keep, up_major, up_minor)
    x12 = np.where(keep, up_minor, up_major)
    x21 = np.where(keep, down_minor, down_major)
    x22 = np.where(keep, down_major, down_minor)

    rows, cols = lh.shape
    out = np.empty((2 * rows, 2 * cols), dtype=np.float64)
    out[0::2, 0::2] = x11
    out[0::2, 1::2] = x12
    out[1::2, 0::2] = x21
    out[1::2, 1::2] = x22
    rounded = np.where(out >= 0, np.floor(out + 0.5), np.ceil(out - 0.5)).astype(np.int64)
    if clamp:
        rounded = np.clip(rounded, 0, 255)
    return rounded
