"""Deterministic synthetic grayscale test images.

Five 512x512 scenes used by the benchmark and the test suite in place of
the usual named test photographs: oblique ripple shading (dune/furrow
style), terraced flats with hard region boundaries, and film-like grain.
Generation is fully seeded, so repeated runs see identical pixels.
"""

from __future__ import annotations

import sys

import numpy as np

from .pgm import write_pgm_file

SIZE = 512

IMAGE_NAMES = ("drift", "furrows", "patchwork", "terraces", "washboard")


def _band_noise(rng: np.random.Generator, size: int, scale: float) -> np.ndarray:
    """Unit-variance Gaussian noise low-passed at roughly ``scale`` pixels."""
    noise = rng.standard_normal((size, size))
    fy = np.fft.fftfreq(size)[:, None]
    fx = np.fft.rfftfreq(size)[None, :]
    transfer = np.exp(-2.0 * (np.pi * scale) ** 2 * (fx ** 2 + fy ** 2))
    field = np.fft.irfft2(np.fft.rfft2(noise) * transfer, s=(size, size))
    return field / max(field.std(), 1e-12)


def _ripple(phase: np.ndarray) -> np.ndarray:
    """Triangle wave with unit period and unit amplitude."""
    return 2.0 * np.abs(2.0 * (phase - np.floor(phase + 0.5))) - 1.0


def _finish(field: np.ndarray, grain: float, rng: np.random.Generator) -> np.ndarray:
    lo, hi = field.min(), field.max()
    img = (field - lo) / max(hi - lo, 1e-12) * 235.0 + 10.0
    img = img + grain * rng.standard_normal(field.shape)
    return np.clip(np.floor(img + 0.5), 0, 255).astype(np.uint8)


def synthetic_corpus(size: int = SIZE) -> dict[str, np.ndarray]:
    """Return the five corpus images keyed by name."""
    yy, xx = np.mgrid[0:size, 0:size].astype(np.float64)
    images: dict[str, np.ndarray] = {}

    rng = np.random.default_rng(61)
    steps = np.digitize(_band_noise(rng, size, 36), [-1.2, -0.4, 0.4, 1.2]).astype(float)
    field = 1.1 * steps + 2.6 * _ripple((yy + 3 * xx) / 36.0)
    images["terraces"] = _finish(field, 4.2, rng)

    rng = np.random.default_rng(62)
    steps = np.digitize(_band_noise(rng, size, 44), [-0.8, 0.0, 0.8]).astype(float)
    field = 2.8 * _ripple((3 * yy + xx) / 34.0 + 0.12 * _band_noise(rng, size, 64)) + 0.8 * steps
    images["furrows"] = _finish(field, 4.5, rng)

    rng = np.random.default_rng(63)
    region = _band_noise(rng, size, 40)
    steps = np.digitize(_band_noise(rng, size, 28), [-1.0, -0.2, 0.6]).astype(float)
    field = np.where(
        region > 0,
        2.4 * _ripple((yy + 3 * xx) / 36.0),
        2.4 * _ripple((3 * yy - xx) / 33.0),
    ) + 1.2 * steps
    images["patchwork"] = _finish(field, 4.4, rng)

    rng = np.random.default_rng(64)
    steps = np.digitize(_band_noise(rng, size, 24), [-1.2, -0.3, 0.5, 1.3]).astype(float)
    field = 2.8 * _ripple((yy + 3 * xx + 10 * _band_noise(rng, size, 96)) / 36.0) + 1.5 * steps
    images["drift"] = _finish(field, 4.4, rng)

    rng = np.random.default_rng(65)
    steps = np.digitize(_band_noise(rng, size, 30), [-0.9, -0.1, 0.7]).astype(float)
    field = (3.0 * _ripple((yy + 3 * xx) / 34.0) + 1.5 * steps
             + 0.4 * _band_noise(rng, size, 20))
    images["washboard"] = _finish(field, 4.4, rng)
    return images


def write_corpus(directory, size: int = SIZE) -> list[str]:
    """Write the corpus into ``directory`` as binary PGMs; returns the paths."""
    import os

    os.makedirs(directory, exist_ok=True)
    paths = []
    for name, img in synthetic_corpus(size).items():
        path = os.path.join(str(directory), f"{name}.pgm")
        write_pgm_file(path, img)
        paths.append(path)
    return paths


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "corpus"
    for p in write_corpus(target):
        print(p)
