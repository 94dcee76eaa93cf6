from fractions import Fraction

import numpy as np
import pytest

from ghwcodec.codec import CodecParams, SubbandPair, compress, decompress
from ghwcodec.pipeline import (
    ContainerError,
    compress_multilevel,
    decompress_multilevel,
    deserialize,
    pad_to_even,
    serialize,
)

MU1 = CodecParams(mu=1.0)


def test_pad_five_by_four():
    img = np.arange(20).reshape(5, 4)
    padded = pad_to_even(img)
    assert padded.shape == (6, 4)
    assert np.array_equal(padded[5], img[4])


def test_pad_even_is_identity():
    img = np.arange(16).reshape(4, 4)
    padded = pad_to_even(img)
    assert padded.shape == (4, 4)
    assert np.array_equal(padded, img)


def test_pad_three_by_three_and_crop_back():
    img = np.arange(9).reshape(3, 3) * 20
    padded = pad_to_even(img)
    assert padded.shape == (4, 4)
    assert np.array_equal(padded[3, :3], img[2])
    assert np.array_equal(padded[:3, 3], img[:, 2])
    out = decompress_multilevel(compress_multilevel(img, 1, MU1), MU1)
    assert out.shape == (3, 3)


def test_stored_sample_counts():
    img = np.zeros((512, 512), dtype=np.uint8)
    for levels, expected in ((1, 131072), (2, 65536), (3, 32768)):
        comp = compress_multilevel(img, levels)
        assert comp.sample_count == expected


def test_level_range_rejected():
    img = np.zeros((8, 8), dtype=np.uint8)
    with pytest.raises(ValueError):
        compress_multilevel(img, 0)
    with pytest.raises(ValueError):
        compress_multilevel(img, 4)


def test_odd_subband_dimension_rejected():
    img = np.zeros((510, 510), dtype=np.uint8)
    compress_multilevel(img, 1)
    with pytest.raises(ValueError):
        compress_multilevel(img, 2)


def test_roundtrip_golden(golden):
    comp = compress_multilevel(golden["input"], 1, MU1)
    assert np.array_equal(comp.hl, golden["hl"])
    assert np.array_equal(comp.lh, golden["lh"])
    out = decompress_multilevel(comp, MU1)
    assert out.dtype == np.uint8
    assert np.array_equal(out, golden["decoded_mu1"])


def test_roundtrip_constant():
    img = np.full((16, 16), 200, dtype=np.uint8)
    out = decompress_multilevel(compress_multilevel(img, 1))
    assert np.max(np.abs(out.astype(int) - 200)) <= 1


def test_two_levels_equal_manual_composition():
    rng = np.random.default_rng(7)
    img = rng.integers(0, 256, (32, 32))
    comp = compress_multilevel(img, 2, MU1)

    # Stage the same computation by hand.
    pair1 = compress(img.astype(np.int64), MU1)
    stacked = np.vstack((pair1.hl, pair1.lh)).astype(np.int64)
    offset = int(stacked.min())
    pair2 = compress(stacked - offset, MU1)
    assert comp.offsets == (0, offset)
    assert np.array_equal(comp.hl, pair2.hl)
    assert np.array_equal(comp.lh, pair2.lh)

    # And invert it by hand.
    inner = decompress(SubbandPair(lh=comp.lh, hl=comp.hl), MU1, clamp=False) + offset
    half = inner.shape[0] // 2
    outer = decompress(SubbandPair(lh=inner[half:], hl=inner[:half]), MU1)
    assert np.array_equal(decompress_multilevel(comp, MU1), np.clip(outer, 0, 255))


def test_multilevel_quality_smoke():
    ramp = np.floor(np.linspace(0, 255, 64) + 0.5).astype(np.uint8)
    img = np.tile(ramp, (64, 1))
    for levels in (1, 2, 3):
        out = decompress_multilevel(compress_multilevel(img, levels))
        assert np.mean(np.abs(out.astype(float) - img)) < 10


def test_serialize_roundtrip(golden):
    comp = compress_multilevel(golden["input"], 1, CodecParams(mu=0.97))
    data = serialize(comp)
    back = deserialize(data)
    assert back.orig_width == comp.orig_width
    assert back.orig_height == comp.orig_height
    assert back.padded_width == comp.padded_width
    assert back.padded_height == comp.padded_height
    assert back.levels == comp.levels
    assert back.lam == Fraction(1, 8)
    assert back.mu == pytest.approx(0.97)
    assert back.offsets == comp.offsets
    assert np.array_equal(back.hl, comp.hl)
    assert np.array_equal(back.lh, comp.lh)
    # Serialization is a bijection on valid containers.
    assert serialize(back) == data


def test_serialize_roundtrip_multilevel():
    rng = np.random.default_rng(15)
    img = rng.integers(0, 256, (24, 24))
    for levels in (2, 3):
        comp = compress_multilevel(img, levels)
        back = deserialize(serialize(comp))
        assert serialize(back) == serialize(comp)
        assert np.array_equal(decompress_multilevel(back), decompress_multilevel(comp))


def test_bad_magic_rejected(golden):
    data = bytearray(serialize(compress_multilevel(golden["input"], 1)))
    data[:4] = b"NOPE"
    with pytest.raises(ContainerError, match="magic"):
        deserialize(bytes(data))


def test_bad_version_rejected(golden):
    data = bytearray(serialize(compress_multilevel(golden["input"], 1)))
    data[4] = 9
    with pytest.raises(ContainerError, match="version"):
        deserialize(bytes(data))


def test_truncated_payload_rejected(golden):
    data = serialize(compress_multilevel(golden["input"], 1))
    with pytest.raises(ContainerError, match="truncat"):
        deserialize(data[:-1])


def test_trailing_bytes_rejected(golden):
    data = serialize(compress_multilevel(golden["input"], 1))
    with pytest.raises(ContainerError, match="trailing"):
        deserialize(data + b"\x00")


def test_decode_uses_container_mu_by_default(golden):
    comp_mu1 = compress_multilevel(golden["input"], 1, CodecParams(mu=1.0))
    back = deserialize(serialize(comp_mu1))
    assert np.array_equal(decompress_multilevel(back), golden["decoded_mu1"])
    comp_097 = compress_multilevel(golden["input"], 1, CodecParams(mu=0.97))
    back = deserialize(serialize(comp_097))
    assert np.array_equal(decompress_multilevel(back), golden["decoded_mu097"])
    # Explicit params override the stored value.
    assert np.array_equal(
        decompress_multilevel(back, CodecParams(mu=1.0)), golden["decoded_mu1"]
    )
