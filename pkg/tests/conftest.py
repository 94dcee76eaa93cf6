"""Shared fixtures: the hand-checked 4x4 golden example and the image corpus.

The golden arrays below were verified by hand against the block rules:
every intermediate (means, diagonal differences, spans, raw levels, parity
bits, stored bands, and both reconstructions) follows from the 4x4 input.
"""

import numpy as np
import pytest

from ghwcodec.corpus import synthetic_corpus, write_corpus

GOLDEN_INPUT = np.array([
    [61, 69, 79, 67],
    [59, 67, 81, 72],
    [54, 60, 74, 60],
    [55, 63, 61, 34],
])

GOLDEN_MEANS = np.array([[64, 75], [58, 57]])
GOLDEN_D_PRIMARY = np.array([[-6, 7], [-9, 40]])
GOLDEN_D_SECONDARY = np.array([[10, -14], [5, -1]])
GOLDEN_GAP = np.array([[-4, -7], [4, 39]])
GOLDEN_SPAN = np.array([[20, -28], [-18, 80]])
GOLDEN_RAW_LH = np.array([[67, 71], [55, 67]])
GOLDEN_RAW_HL = np.array([[61, 79], [61, 47]])
GOLDEN_B_MASK = np.array([[1, 0], [0, 1]])  # parity of stored hl
GOLDEN_C_MASK = np.array([[1, 0], [1, 0]])  # parity of stored lh
GOLDEN_HL = np.array([[61, 78], [60, 47]])
GOLDEN_LH = np.array([[67, 70], [55, 66]])

# Reconstruction with full re-expansion (mu = 1).
GOLDEN_DECODED_MU1 = np.array([
    [61, 70, 78, 66],
    [58, 67, 82, 70],
    [53, 60, 76, 47],
    [55, 63, 66, 38],
])

# mu = 0.97 shifts exactly two pixels by one level each.
GOLDEN_DECODED_MU097 = GOLDEN_DECODED_MU1.copy()
GOLDEN_DECODED_MU097[2, 2] = 75
GOLDEN_DECODED_MU097[3, 1] = 62


@pytest.fixture(scope="session")
def golden():
    return {
        "input": GOLDEN_INPUT,
        "means": GOLDEN_MEANS,
        "d_primary": GOLDEN_D_PRIMARY,
        "d_secondary": GOLDEN_D_SECONDARY,
        "gap": GOLDEN_GAP,
        "span": GOLDEN_SPAN,
        "raw_lh": GOLDEN_RAW_LH,
        "raw_hl": GOLDEN_RAW_HL,
        "b_mask": GOLDEN_B_MASK,
        "c_mask": GOLDEN_C_MASK,
        "hl": GOLDEN_HL,
        "lh": GOLDEN_LH,
        "decoded_mu1": GOLDEN_DECODED_MU1,
        "decoded_mu097": GOLDEN_DECODED_MU097,
    }


@pytest.fixture(scope="session")
def corpus_images():
    return synthetic_corpus()


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory):
    directory = tmp_path_factory.mktemp("corpus")
    write_corpus(directory)
    return directory
