"""Multi-level compression orchestration and the GHWC container format.

A single level halves the sample count.  Deeper levels re-encode the two
stored sub-band matrices: they are stacked vertically (hl on top of lh)
into one matrix, shifted by their minimum so the encoder sees nonnegative
integers, and compressed again.  Only the innermost pair is stored, so the
stored sample count is exactly padded_pixels / 2**levels.

Container layout (all multi-byte integers little-endian):

    magic          4 bytes   "GHWC"
    version        u8        1
    levels         u8
    lambda_num     u8
    lambda_den     u8
    mu_fixed       u16       mu * 10000
    orig_width     u32
    orig_height    u32
    padded_width   u32
    padded_height  u32
    per level, outermost first:
        offset     i32       shift applied to that level's encoder input
        samples for the level that stores them (the innermost):
                   hl then lh, row-major i16
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .codec import CodecParams, SubbandPair, compress, decompress

MAGIC = b"GHWC"
VERSION = 1
MAX_LEVELS = 3
_HEADER = struct.Struct("<4sBBBBHIIII")


class ContainerError(ValueError):
    """Raised for malformed, truncated, or inconsistent containers."""


@dataclass(frozen=True)
class CompressedImage:
    """Parsed container: geometry, codec parameters, and the payload."""

    orig_width: int
    orig_height: int
    padded_width: int
    padded_height: int
    levels: int
    lam: Fraction
    mu: float
    offsets: tuple[int, ...]
    hl: np.ndarray
    lh: np.ndarray

    @property
    def sample_count(self) -> int:
        return self.hl.size + self.lh.size


def pad_to_even(img: np.ndarray) -> np.ndarray:
    """Replicate the last row/column as needed to make both dimensions even."""
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2D array, got {arr.ndim}D")
    pad_r = arr.shape[0] % 2
    pad_c = arr.shape[1] % 2
    if pad_r or pad_c:
        arr = np.pad(arr, ((0, pad_r), (0, pad_c)), mode="edge")
    return arr


def compress_multilevel(img: np.ndarray, levels: int,
                        params: CodecParams | None = None) -> CompressedImage:
    """Compress a grayscale image through ``levels`` encoder passes."""
    params = params or CodecParams()
    if not 1 <= levels <= MAX_LEVELS:
        raise ValueError(f"levels must be in [1, {MAX_LEVELS}], got {levels}")
    arr = np.asarray(img)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError("expected a non-empty 2D pixel matrix")
    if not np.issubdtype(arr.dtype, np.integer):
        raise TypeError("pixel matrix must have an integer dtype")
    if arr.min() < 0 or arr.max() > 255:
        raise ValueError("pixel values must lie in [0, 255]")
    orig_h, orig_w = arr.shape

    current = pad_to_even(arr).astype(np.int64)
    padded_h, padded_w = current.shape
    offsets: list[int] = []
    pair: SubbandPair | None = None
    for level in range(1, levels + 1):
        if current.shape[0] % 2 or current.shape[1] % 2:
            raise ValueError(
                f"sub-band dimensions {current.shape} are odd at level {level}; "
                f"cannot reach depth {levels}"
            )
        offset = 0 if level == 1 else int(current.min())
        offsets.append(offset)
        pair = compress(current - offset, params)
        if level < levels:
            current = np.vstack((pair.hl, pair.lh)).astype(np.int64)
    assert pair is not None
    return CompressedImage(
        orig_width=orig_w,
        orig_height=orig_h,
        padded_width=padded_w,
        padded_height=padded_h,
        levels=levels,
        lam=params.lam,
        mu=params.mu,
        offsets=tuple(offsets),
        hl=pair.hl,
        lh=pair.lh,
    )


def decompress_multilevel(comp: CompressedImage,
                          params: CodecParams | None = None) -> np.ndarray:
    """Invert :func:`compress_multilevel`; returns uint8 at the original size.

    ``params`` overrides the parameters recorded in the container (the
    decoder only uses ``mu``).
    """
    effective = params if params is not None else CodecParams(lam=comp.lam, mu=comp.mu)
    hl, lh = comp.hl, comp.lh
    matrix: np.ndarray | None = None
    for level in range(comp.levels, 0, -1):
        final = level == 1
        matrix = decompress(SubbandPair(lh=lh, hl=hl), effective, clamp=final)
        matrix = matrix + comp.offsets[level - 1]
        if not final:
            half = matrix.shape[0] // 2
            hl = matrix[:half]
            lh = matrix[half:]
    assert matrix is not None
    cropped = matrix[: comp.orig_height, : comp.orig_width]
    return np.clip(cropped, 0, 255).astype(np.uint8)


def serialize(comp: CompressedImage) -> bytes:
    """Encode a container to bytes (bit-exact round trip with deserialize)."""
    num, den = comp.lam.numerator, comp.lam.denominator
    if not (1 <= num <= 255 and 1 <= den <= 255):
        raise ValueError(f"lambda {comp.lam} does not fit u8/u8")
    mu_fixed = round(comp.mu * 10_000)
    if not 1 <= mu_fixed <= 10_000:
        raise ValueError(f"mu {comp.mu} out of range")
    if len(comp.offsets) != comp.levels:
        raise ValueError("offset count does not match level count")
    header = _HEADER.pack(
        MAGIC,
        VERSION,
        comp.levels,
        num,
        den,
        mu_fixed,
        comp.orig_width,
        comp.orig_height,
        comp.padded_width,
        comp.padded_height,
    )
    parts = [header, struct.pack(f"<{comp.levels}i", *comp.offsets)]
    parts.append(np.ascontiguousarray(comp.hl, dtype="<i2").tobytes())
    parts.append(np.ascontiguousarray(comp.lh, dtype="<i2").tobytes())
    return b"".join(parts)


def _subband_shape(padded_w: int, padded_h: int, levels: int) -> tuple[int, int]:
    return padded_h // 2, padded_w >> levels


def deserialize(data: bytes) -> CompressedImage:
    """Parse container bytes, validating structure and payload size."""
    if len(data) < _HEADER.size:
        raise ContainerError("truncated header")
    magic, version, levels, num, den, mu_fixed, ow, oh, pw, ph = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ContainerError(f"bad magic {magic!r}")
    if version != VERSION:
        raise ContainerError(f"unsupported format version {version}")
    if not 1 <= levels <= MAX_LEVELS:
        raise ContainerError(f"level count {levels} out of range")
    if den == 0 or num == 0 or num > den:
        raise ContainerError(f"bad lambda {num}/{den}")
    if not 1 <= mu_fixed <= 10_000:
        raise ContainerError(f"bad mu field {mu_fixed}")
    if ow == 0 or oh == 0 or pw < ow or ph < oh or pw % 2 or ph % 2:
        raise ContainerError(f"bad geometry {ow}x{oh} padded to {pw}x{ph}")
    if pw % (1 << levels):
        raise ContainerError(f"padded width {pw} not divisible by 2^{levels}")

    pos = _HEADER.size
    if len(data) < pos + 4 * levels:
        raise ContainerError("truncated offset table")
    offsets = struct.unpack_from(f"<{levels}i", data, pos)
    pos += 4 * levels

    rows, cols = _subband_shape(pw, ph, levels)
    per_band = rows * cols
    need = pos + 2 * 2 * per_band
    if len(data) < need:
        raise ContainerError("truncated sample payload")
    if len(data) > need:
        raise ContainerError("trailing bytes after sample payload")
    hl = np.frombuffer(data, dtype="<i2", count=per_band, offset=pos).reshape(rows, cols)
    pos += 2 * per_band
    lh = np.frombuffer(data, dtype="<i2", count=per_band, offset=pos).reshape(rows, cols)
    return CompressedImage(
        orig_width=ow,
        orig_height=oh,
        padded_width=pw,
        padded_height=ph,
        levels=levels,
        lam=Fraction(num, den),
        mu=mu_fixed / 10_000,
        offsets=offsets,
        hl=hl.astype(np.int16),
        lh=lh.astype(np.int16),
    )
