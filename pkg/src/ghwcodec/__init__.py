"""ghwcodec: lossy grayscale image codec with parity-coded 2x2 blocks.

The encoder folds each 2x2 pixel block into two stored integers whose
parities carry the block's orientation bits; the decoder re-expands the
block from the pair alone.  Reference DCT and Haar-DWT coders, quality
metrics, a binary container format, and a benchmark harness round out
the package.
"""

from .baselines import (
    BaselineConfig,
    dct8_forward,
    dct8_inverse,
    haar_analysis,
    haar_dwt_compress,
    haar_synthesis,
    jpeg_like_compress,
)
from .codec import (
    BlockEncoding,
    BlockStats,
    CodecParams,
    SubbandPair,
    block_stats,
    compress,
    decode_block,
    decompress,
    encode_block,
    trace_block,
)
from .metrics import (
    QualityReport,
    compression_ratio,
    mae,
    mse,
    psnr,
    quality_report,
    ssim,
)
from .pgm import PgmError, read_pgm, read_pgm_file, write_pgm, write_pgm_file
from .pipeline import (
    CompressedImage,
    ContainerError,
    compress_multilevel,
    decompress_multilevel,
    deserialize,
    pad_to_even,
    serialize,
)
from .transform import (
    ComplexSubbands,
    GhwParams,
    block_analysis,
    build_transform_matrix_4,
    coefficients,
    decompose,
    eval_scaling,
    eval_wavelet,
    modulus_images,
    solve_balanced_gamma,
    solve_gamma,
)

__version__ = "0.1.0"
