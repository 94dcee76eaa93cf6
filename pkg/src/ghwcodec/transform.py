"""Gradient Haar wavelet kernel.

The gradient Haar wavelet (GHW) replaces the flat step of the classical
Haar scaling function with a sloped step of slope ``gamma``.  ``gamma = 0``
recovers plain Haar.  A particular purely imaginary slope (the "balanced"
slope) makes the four sub-band images of a one-level 2D decomposition carry
equal totals; with it, every 2x2 pixel block maps to four complex numbers
of identical modulus, which is what the block codec exploits.

Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GhwParams:
    """Scaling-function coefficients for one slope value.

    ``p0``/``p1`` are the raw two-tap coefficients, ``p0n``/``p1n`` the same
    pair scaled to unit total energy (|p0n|^2 + |p1n|^2 = 1).
    """

    gamma: complex
    p0: complex
    p1: complex
    p0n: complex
    p1n: complex


@dataclass(frozen=True)
class ComplexSubbands:
    """The four quadrant matrices of a one-level 2D decomposition."""

    ll: np.ndarray
    lh: np.ndarray
    hl: np.ndarray
    hh: np.ndarray


def eval_scaling(x: float, gamma: complex) -> complex:
    """Sloped-step scaling function: gamma*(x - 1/2) + 1 on [0, 1), else 0."""
    if 0.0 <= x < 1.0:
        return gamma * (x - 0.5) + 1.0
    return 0.0


def eval_wavelet(x: float, gamma: complex) -> complex:
    """Wavelet built from the sloped step via the two-scale relation.

    Piecewise: p1 * phi(2x) on [0, 1/2), -p0 * phi(2x - 1) on [1/2, 1),
    zero elsewhere.
    """
    p0 = gamma * gamma / 24.0 - gamma / 4.0 + 1.0
    p1 = gamma * gamma / 24.0 + gamma / 4.0 + 1.0
    if 0.0 <= x < 0.5:
        return p1 * (2.0 * gamma * x - gamma / 2.0 + 1.0)
    if 0.5 <= x < 1.0:
        return -p0 * (2.0 * gamma * x - 3.0 * gamma / 2.0 + 1.0)
    return 0.0


def coefficients(gamma: complex) -> GhwParams:
    """Compute the two-tap coefficients and their normalized form.

    Raises ValueError if the pair has (numerically) zero total energy and
    cannot be normalized.
    """
    gamma = complex(gamma)
    p0 = gamma * gamma / 24.0 - gamma / 4.0 + 1.0
    p1 = gamma * gamma / 24.0 + gamma / 4.0 + 1.0
    energy = abs(p0) ** 2 + abs(p1) ** 2
    if energy < 1e-15:
        raise ValueError("degenerate coefficients: |p0|^2 + |p1|^2 is zero")
    norm = math.sqrt(energy)
    return GhwParams(gamma=gamma, p0=p0, p1=p1, p0n=p0 / norm, p1n=p1 / norm)


def solve_balanced_gamma() -> complex:
    """The slope that balances the four sub-band totals.

    Purely imaginary: i*sqrt(42 - 6*sqrt(33)) = i*(sqrt(33) - 3)
    = 2.7445626465380280i.  With it the normalized coefficients become
    0.5*(1 - i) and 0.5*(1 + i).
    """
    return cmath.sqrt(complex(6.0 * math.sqrt(33.0) - 42.0, 0.0))


def solve_gamma(k: float, c_minus_a: float) -> complex:
    """General slope making the LH sub-band total exceed HL's by ``k``.

    ``c_minus_a`` is the difference between the two cross-position pixel
    sums the imbalance is measured against; it scales how much slope a
    given ``k`` requires.  ``k = 0`` reduces to :func:`solve_balanced_gamma`
    for any nonzero ``c_minus_a``.
    """
    if c_minus_a == 0:
        raise ZeroDivisionError("c_minus_a must be nonzero")
    return cmath.sqrt(6.0 * (cmath.sqrt(33.0 + 8.0 * k / c_minus_a) - 7.0))


def build_transform_matrix_4(gamma: complex) -> np.ndarray:
    """Two-stage 4x4 analysis matrix (second stage folded onto the first).

    Built only for size 4; larger inputs are handled blockwise.  At
    gamma = 0 this is the classical two-level Haar analysis matrix.
    """
    p = coefficients(gamma)
    g1 = np.array(
        [
            [p.p0n, p.p1n, 0, 0],
            [0, 0, p.p0n, p.p1n],
            [p.p1n, -p.p0n, 0, 0],
            [0, 0, p.p1n, -p.p0n],
        ],
        dtype=complex,
    )
    g2 = np.array(
        [
            [p.p0n, p.p1n, 0, 0],
            [p.p1n, -p.p0n, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ],
        dtype=complex,
    )
    return g2 @ g1


def _block_corners(img: np.ndarray):
    """Views of the four corner positions of every 2x2 block."""
    return img[0::2, 0::2], img[0::2, 1::2], img[1::2, 0::2], img[1::2, 1::2]


def _require_even_2d(img: np.ndarray) -> np.ndarray:
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2D array, got {arr.ndim}D")
    if arr.shape[0] % 2 or arr.shape[1] % 2:
        raise ValueError(f"dimensions must be even, got {arr.shape}")
    return arr


def decompose(img: np.ndarray) -> ComplexSubbands:
    """One-level complex decomposition at the balanced slope.

    Per 2x2 block with corners x11, x12, x21, x22, let
    a = (x11 - x22) / 2 and b = (x12 - x21) / 2.  The four sub-band
    entries are the four sign combinations b -+ a*i, -b -+ a*i, so all
    four carry the same modulus sqrt(a^2 + b^2).  Halves of integers are
    exact in doubles, so -2*Im(ll) and 2*Re(ll) recover the diagonal
    differences exactly.
    """
    arr = _require_even_2d(img)
    if not np.issubdtype(arr.dtype, np.integer):
        raise TypeError("pixel matrix must have an integer dtype")
    if arr.size and (arr.min() < 0 or arr.max() > 255):
        raise ValueError("pixel values must lie in [0, 255]")
    x11, x12, x21, x22 = (c.astype(np.float64) for c in _block_corners(arr))
    a = (x11 - x22) / 2.0
    b = (x12 - x21) / 2.0
    return ComplexSubbands(
        ll=b - 1j * a,
        lh=b + 1j * a,
        hl=-b - 1j * a,
        hh=-b + 1j * a,
    )


def block_analysis(img: np.ndarray, gamma: complex) -> ComplexSubbands:
    """One-level 2D analysis with the two-tap butterfly at slope ``gamma``.

    Applies the 2x2 coefficient matrix [[p0n, p1n], [p1n, -p0n]] on both
    sides of every block.  At gamma = 0 this is the standard orthonormal
    2D Haar analysis step.
    """
    arr = _require_even_2d(img)
    p = coefficients(gamma)
    s0, s1, c01 = p.p0n * p.p0n, p.p1n * p.p1n, p.p0n * p.p1n
    x11, x12, x21, x22 = (c.astype(complex) for c in _block_corners(arr))
    cross = x12 + x21
    return ComplexSubbands(
        ll=s0 * x11 + c01 * cross + s1 * x22,
        lh=c01 * x11 - s0 * x12 + s1 * x21 - c01 * x22,
        hl=c01 * x11 + s1 * x12 - s0 * x21 - c01 * x22,
        hh=s1 * x11 - c01 * cross + s0 * x22,
    )


def modulus_images(sub: ComplexSubbands) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Elementwise modulus of each sub-band.

    For :func:`decompose` output the four results are elementwise equal.
    """
    return np.abs(sub.ll), np.abs(sub.lh), np.abs(sub.hl), np.abs(sub.hh)
