"""Image quality and rate measures: MAE, MSE, PSNR, SSIM, CR."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# SSIM stabilizers (k1*L)^2 and (k2*L)^2 with k1=0.01, k2=0.03, L=255.
SSIM_C1 = 6.5025
SSIM_C2 = 58.5225

SSIM_WINDOW = 8


@dataclass(frozen=True)
class QualityReport:
    """Fidelity and rate summary for one (original, reconstructed) pair."""

    mae: float
    mse: float
    psnr: float
    ssim: float
    cr: float


def _paired(ref, test) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(ref, dtype=np.float64)
    b = np.asarray(test, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    if a.ndim != 2 or a.size == 0:
        raise ValueError("expected non-empty 2D images")
    return a, b


def mae(ref, test) -> float:
    """Mean absolute pixel difference."""
    a, b = _paired(ref, test)
    return float(np.mean(np.abs(a - b)))


def mse(ref, test) -> float:
    """Mean squared pixel difference."""
    a, b = _paired(ref, test)
    return float(np.mean((a - b) ** 2))


def psnr(ref, test) -> float:
    """Peak signal-to-noise ratio in dB against a 255 peak.

    Identical images report math.inf rather than a finite value.
    """
    err = mse(ref, test)
    if err == 0.0:
        return math.inf
    return 10.0 * math.log10(255.0 ** 2 / err)


def _ssim_window(a: np.ndarray, b: np.ndarray) -> float:
    mu_a = a.mean()
    mu_b = b.mean()
    var_a = a.var()          # population (1/N) statistics
    var_b = b.var()
    cov = ((a - mu_a) * (b - mu_b)).mean()
    num = (2.0 * mu_a * mu_b + SSIM_C1) * (2.0 * cov + SSIM_C2)
    den = (mu_a ** 2 + mu_b ** 2 + SSIM_C1) * (var_a + var_b + SSIM_C2)
    return num / den


def ssim(ref, test, windowed: bool = False) -> float:
    """Structural similarity index.

    Default computes the formula once from whole-image statistics.  With
    ``windowed`` the image is tiled into non-overlapping 8x8 windows
    (full windows only) and the per-window values are averaged; both
    dimensions must then be at least 8.
    """
    a, b = _paired(ref, test)
    if not windowed:
        return float(_ssim_window(a, b))
    h, w = a.shape
    if h < SSIM_WINDOW or w < SSIM_WINDOW:
        raise ValueError(f"windowed ssim needs dimensions >= {SSIM_WINDOW}, got {a.shape}")
    values = []
    for i in range(0, h - SSIM_WINDOW + 1, SSIM_WINDOW):
        for j in range(0, w - SSIM_WINDOW + 1, SSIM_WINDOW):
            values.append(_ssim_window(a[i:i + SSIM_WINDOW, j:j + SSIM_WINDOW],
                                       b[i:i + SSIM_WINDOW, j:j + SSIM_WINDOW]))
    return float(np.mean(values))


def compression_ratio(original_count: int, stored_count: int) -> float:
    """Element-count ratio of the original to the stored representation."""
    if stored_count <= 0:
        raise ValueError("stored count must be positive")
    return original_count / stored_count


def quality_report(ref, test, original_count: int, stored_count: int) -> QualityReport:
    """Bundle all five measures for a reconstruction."""
    return QualityReport(
        mae=mae(ref, test),
        mse=mse(ref, test),
        psnr=psnr(ref, test),
        ssim=ssim(ref, test),
        cr=compression_ratio(original_count, stored_count),
    )
