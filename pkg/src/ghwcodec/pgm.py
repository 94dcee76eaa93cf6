"""Portable graymap (PGM) reading and writing, 8-bit only.

Supports the Netpbm P2 (ASCII) and P5 (binary) forms with ``#`` comments
in the header.  The only accepted maxval is 255.
"""

from __future__ import annotations

import numpy as np

_WHITESPACE = b" \t\r\n\x0b\x0c"


class PgmError(ValueError):
    """Raised for malformed, unsupported, or truncated PGM data."""


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    n = len(data)
    while pos < n:
        ch = data[pos:pos + 1]
        if ch == b"#":
            while pos < n and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
        elif ch in _WHITESPACE:
            pos += 1
        else:
            break
    if pos >= n:
        raise PgmError("malformed header: unexpected end of data")
    start = pos
    while pos < n and data[pos:pos + 1] not in _WHITESPACE and data[pos:pos + 1] != b"#":
        pos += 1
    return data[start:pos], pos


def _header_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    token, pos = _next_token(data, pos)
    try:
        value = int(token)
    except ValueError:
        raise PgmError(f"malformed header: bad {what} {token!r}") from None
    return value, pos


def read_pgm(data: bytes) -> np.ndarray:
    """Parse PGM bytes into a (height, width) uint8 matrix."""
    magic, pos = _next_token(data, 0)
    if magic not in (b"P2", b"P5"):
        raise PgmError(f"malformed header: unknown magic {magic!r}")
    width, pos = _header_int(data, pos, "width")
    height, pos = _header_int(data, pos, "height")
    maxval, pos = _header_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise PgmError(f"malformed header: bad dimensions {width}x{height}")
    if maxval != 255:
        raise PgmError(f"unsupported maxval {maxval}; only 255 is handled")
    count = width * height

    if magic == b"P5":
        # Exactly one whitespace byte separates the header from the raster.
        if pos >= len(data) or data[pos:pos + 1] not in _WHITESPACE:
            raise PgmError("malformed header: missing raster separator")
        pos += 1
        raster = data[pos:pos + count]
        if len(raster) < count:
            raise PgmError(f"truncated raster: expected {count} bytes, got {len(raster)}")
        pixels = np.frombuffer(raster, dtype=np.uint8, count=count)
    else:
        values = []
        while len(values) < count:
            try:
                token, pos = _next_token(data, pos)
            except PgmError:
                raise PgmError(
                    f"truncated raster: expected {count} values, got {len(values)}"
                ) from None
            try:
                v = int(token)
            except ValueError:
                raise PgmError(f"malformed raster value {token!r}") from None
            if not 0 <= v <= 255:
                raise PgmError(f"raster value {v} out of range")
            values.append(v)
        pixels = np.array(values, dtype=np.uint8)
    return pixels.reshape(height, width).copy()


def write_pgm(img, fmt: str = "P5") -> bytes:
    """Serialize a pixel matrix as PGM bytes in the P2 or P5 form."""
    arr = np.asarray(img)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError("expected a non-empty 2D pixel matrix")
    if not np.issubdtype(arr.dtype, np.integer):
        raise TypeError("pixel matrix must have an integer dtype")
    if arr.min() < 0 or arr.max() > 255:
        raise ValueError("pixel values must lie in [0, 255]")
    h, w = arr.shape
    if fmt == "P5":
        return b"P5\n%d %d\n255\n" % (w, h) + arr.astype(np.uint8).tobytes()
    if fmt == "P2":
        lines = [b"P2", b"%d %d" % (w, h), b"255"]
        flat = arr.astype(np.uint8).ravel()
        for start in range(0, flat.size, 16):  # keep lines comfortably short
            lines.append(" ".join(str(v) for v in flat[start:start + 16]).encode())
        return b"\n".join(lines) + b"\n"
    raise ValueError(f"unknown format {fmt!r}; use 'P2' or 'P5'")


def read_pgm_file(path) -> np.ndarray:
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def write_pgm_file(path, img, fmt: str = "P5") -> None:
    with open(path, "wb") as fh:
        fh.write(write_pgm(img, fmt))
