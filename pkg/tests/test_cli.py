import json

import numpy as np
import pytest

from ghwcodec.cli import main
from ghwcodec.pgm import read_pgm_file, write_pgm_file


@pytest.fixture
def golden_pgm(tmp_path, golden):
    path = tmp_path / "golden.pgm"
    write_pgm_file(path, golden["input"])
    return path


@pytest.fixture
def small_corpus_dir(tmp_path):
    rng = np.random.default_rng(5)
    d = tmp_path / "imgs"
    d.mkdir()
    for name in ("aa", "bb", "cc", "dd", "ee"):
        write_pgm_file(d / f"{name}.pgm", rng.integers(0, 256, (32, 32)).astype(np.uint8))
    return d


def test_compress_decompress_golden_path(tmp_path, golden_pgm, golden, capsys):
    container = tmp_path / "out.ghwc"
    recon = tmp_path / "recon.pgm"
    assert main(["compress", "--in", str(golden_pgm), "--out", str(container),
                 "--levels", "1", "--lambda", "1/8", "--mu", "0.97"]) == 0
    assert "CR 2" in capsys.readouterr().out
    assert main(["decompress", "--in", str(container), "--out", str(recon),
                 "--mu", "1.0"]) == 0
    assert np.array_equal(read_pgm_file(recon), golden["decoded_mu1"])
    # Raster bytes of the written PGM equal the expected pixels verbatim.
    raw = recon.read_bytes()
    assert raw.endswith(bytes(golden["decoded_mu1"].astype(np.uint8).ravel()))


def test_decompress_uses_container_mu_by_default(tmp_path, golden_pgm, golden):
    container = tmp_path / "out.ghwc"
    recon = tmp_path / "recon.pgm"
    main(["compress", "--in", str(golden_pgm), "--out", str(container), "--mu", "0.97"])
    main(["decompress", "--in", str(container), "--out", str(recon)])
    assert np.array_equal(read_pgm_file(recon), golden["decoded_mu097"])


def test_compress_reports_cr_per_level(tmp_path, capsys):
    src = tmp_path / "img.pgm"
    write_pgm_file(src, np.zeros((64, 64), dtype=np.uint8))
    for levels, cr in ((1, "CR 2"), (2, "CR 4"), (3, "CR 8")):
        assert main(["compress", "--in", str(src), "--out", str(tmp_path / "o.ghwc"),
                     "--levels", str(levels)]) == 0
        assert cr in capsys.readouterr().out


def test_compress_rejects_level_four(tmp_path, golden_pgm, capsys):
    rc = main(["compress", "--in", str(golden_pgm),
               "--out", str(tmp_path / "o.ghwc"), "--levels", "4"])
    assert rc != 0
    assert "levels" in capsys.readouterr().err


def test_compress_pads_odd_input(tmp_path, capsys):
    src = tmp_path / "odd.pgm"
    rng = np.random.default_rng(9)
    img = rng.integers(0, 256, (5, 7)).astype(np.uint8)
    write_pgm_file(src, img)
    container = tmp_path / "o.ghwc"
    recon = tmp_path / "r.pgm"
    assert main(["compress", "--in", str(src), "--out", str(container)]) == 0
    assert main(["decompress", "--in", str(container), "--out", str(recon)]) == 0
    assert read_pgm_file(recon).shape == (5, 7)


def test_missing_input_fails_with_diagnostic(tmp_path, capsys):
    rc = main(["compress", "--in", str(tmp_path / "nope.pgm"),
               "--out", str(tmp_path / "o.ghwc")])
    assert rc == 1
    assert capsys.readouterr().err.startswith("error:")


def test_corrupt_container_diagnostic(tmp_path, capsys):
    bad = tmp_path / "bad.ghwc"
    bad.write_bytes(b"JUNKJUNKJUNKJUNKJUNKJUNKJUNKJUNK")
    rc = main(["decompress", "--in", str(bad), "--out", str(tmp_path / "r.pgm")])
    assert rc == 1
    assert "magic" in capsys.readouterr().err


def test_metrics_identical_files(tmp_path, golden_pgm, capsys):
    assert main(["metrics", "--ref", str(golden_pgm), "--test", str(golden_pgm)]) == 0
    out = capsys.readouterr().out
    assert "mae: 0.000000" in out
    assert "psnr: inf" in out
    assert "ssim: 1.000000" in out


def test_metrics_golden_pair(tmp_path, golden, golden_pgm, capsys):
    test_path = tmp_path / "recon.pgm"
    write_pgm_file(test_path, golden["decoded_mu1"])
    assert main(["metrics", "--ref", str(golden_pgm), "--test", str(test_path)]) == 0
    assert "mae: 2.000000" in capsys.readouterr().out


def test_metrics_json_record(tmp_path, golden_pgm, capsys):
    # 4x4 images cannot feed the windowed measure.
    rng = np.random.default_rng(13)
    a, b = tmp_path / "a.pgm", tmp_path / "b.pgm"
    img = rng.integers(0, 256, (16, 16)).astype(np.uint8)
    write_pgm_file(a, img)
    write_pgm_file(b, np.clip(img.astype(int) + 1, 0, 255).astype(np.uint8))
    assert main(["metrics", "--ref", str(a), "--test", str(b), "--json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert set(record) == {"mae", "mse", "psnr", "ssim", "ssim_windowed"}
    assert main(["metrics", "--ref", str(a), "--test", str(a), "--json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["psnr"] is None  # sentinel for identical images


def test_metrics_dimension_mismatch(tmp_path, golden_pgm, capsys):
    other = tmp_path / "other.pgm"
    write_pgm_file(other, np.zeros((8, 8), dtype=np.uint8))
    rc = main(["metrics", "--ref", str(golden_pgm), "--test", str(other)])
    assert rc == 1
    assert "mismatch" in capsys.readouterr().err


def test_bench_stdout_csv(small_corpus_dir, capsys):
    assert main(["bench", "--in", str(small_corpus_dir), "--cr", "2,4"]) == 0
    out = capsys.readouterr().out
    assert "# rows" in out and "# mae_cr2" in out and "# timing" in out
    header = "image,jpegLike,haarDwt,proposed"
    assert header in out
    rows_section = out.split("# rows\n")[1].split("#")[0].strip().splitlines()
    assert len(rows_section) == 1 + 5 * 3 * 2  # header + image*method*cr


def test_bench_table_layout(small_corpus_dir, capsys):
    assert main(["bench", "--in", str(small_corpus_dir), "--cr", "2",
                 "--format", "text"]) == 0
    out = capsys.readouterr().out
    section = out.split("# mae_cr2\n")[1].split("\n#")[0].strip().splitlines()
    # header + rule + one row per image; three method columns
    assert len(section) == 2 + 5
    assert section[0].split() == ["image", "jpegLike", "haarDwt", "proposed"]


def test_bench_deterministic_metrics(small_corpus_dir, capsys):
    def metric_lines():
        assert main(["bench", "--in", str(small_corpus_dir), "--cr", "2"]) == 0
        out = capsys.readouterr().out
        rows = out.split("# rows\n")[1].split("#")[0].strip().splitlines()
        return [",".join(line.split(",")[:6]) for line in rows]  # drop wall time

    assert metric_lines() == metric_lines()


def test_bench_writes_reports_and_figures(small_corpus_dir, tmp_path, capsys):
    out_dir = tmp_path / "report"
    assert main(["bench", "--in", str(small_corpus_dir), "--cr", "2,4,8",
                 "--out", str(out_dir)]) == 0
    names = {p.name for p in out_dir.iterdir()}
    expected_csv = {"rows.csv", "timing.csv"} | {
        f"{m}_cr{c}.csv" for m in ("mae", "psnr", "ssim") for c in (2, 4, 8)
    }
    assert expected_csv <= names
    assert {"mae.png", "psnr.png", "ssim.png"} <= names
    rows = (out_dir / "rows.csv").read_text().strip().splitlines()
    assert len(rows) == 1 + 5 * 3 * 3


def test_bench_no_plots_flag(small_corpus_dir, tmp_path):
    out_dir = tmp_path / "report"
    assert main(["bench", "--in", str(small_corpus_dir), "--cr", "2",
                 "--out", str(out_dir), "--no-plots"]) == 0
    assert not any(p.suffix == ".png" for p in out_dir.iterdir())


def test_bench_empty_directory(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    rc = main(["bench", "--in", str(empty)])
    assert rc == 1
    assert "no .pgm images" in capsys.readouterr().err


def test_bench_rejects_bad_cr(small_corpus_dir, capsys):
    with pytest.raises(SystemExit):
        main(["bench", "--in", str(small_corpus_dir), "--cr", "3"])
