"""Benchmark harness: runs all three codecs over an image set and renders
comparison tables (CSV or aligned text) plus per-metric figures.

One row is produced per (image, method, cr) triple.  Metric columns are
deterministic; wall times are measured and reported separately because
they depend on the machine.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

import numpy as np

from .baselines import default_dwt_levels, haar_dwt_compress, jpeg_like_compress
from .codec import CodecParams
from .metrics import mae, psnr, ssim
from .pipeline import compress_multilevel, decompress_multilevel

METHODS = ("jpegLike", "haarDwt", "proposed")
METRICS = ("mae", "psnr", "ssim")
DEFAULT_CRS = (2, 4, 8)


@dataclass(frozen=True)
class BenchRow:
    image_name: str
    method: str
    cr: float
    mae: float
    psnr: float
    ssim: float
    wall_time: float


def _run_method(method: str, img: np.ndarray, cr: int,
                params: CodecParams) -> tuple[np.ndarray, float]:
    start = time.perf_counter()
    if method == "proposed":
        levels = default_dwt_levels(cr)
        recon = decompress_multilevel(compress_multilevel(img, levels, params))
    elif method == "jpegLike":
        recon = jpeg_like_compress(img, cr)
    elif method == "haarDwt":
        recon = haar_dwt_compress(img, cr, default_dwt_levels(cr))
    else:
        raise ValueError(f"unknown method {method!r}")
    return recon, time.perf_counter() - start


def run_benchmark(images: dict[str, np.ndarray], crs=DEFAULT_CRS,
                  params: CodecParams | None = None) -> list[BenchRow]:
    """Run every method on every image at every ratio."""
    params = params or CodecParams()
    rows = []
    for name in sorted(images):
        img = images[name]
        for method in METHODS:
            for cr in crs:
                recon, elapsed = _run_method(method, img, cr, params)
                rows.append(BenchRow(
                    image_name=name,
                    method=method,
                    cr=float(cr),
                    mae=mae(img, recon),
                    psnr=psnr(img, recon),
                    ssim=ssim(img, recon),
                    wall_time=elapsed,
                ))
    rows.sort(key=lambda r: (r.image_name, r.method, r.cr))
    return rows


def metric_table(rows: list[BenchRow], metric: str, cr: float):
    """(header, data rows) for one metric at one ratio; methods as columns."""
    header = ["image", *METHODS]
    cells = {(r.image_name, r.method): getattr(r, metric)
             for r in rows if r.cr == cr}
    names = sorted({r.image_name for r in rows if r.cr == cr})
    data = [[name] + [f"{cells[(name, m)]:.4f}" for m in METHODS] for name in names]
    return header, data


def timing_table(rows: list[BenchRow]):
    """Mean wall time per (method, cr); machine-dependent."""
    header = ["method", "cr", "mean_wall_time_s"]
    data = []
    for method in METHODS:
        for cr in sorted({r.cr for r in rows}):
            times = [r.wall_time for r in rows if r.method == method and r.cr == cr]
            if times:
                data.append([method, f"{cr:g}", f"{float(np.mean(times)):.4f}"])
    return header, data


def rows_table(rows: list[BenchRow]):
    header = ["image", "method", "cr", "mae", "psnr", "ssim", "wall_time_s"]
    data = [[r.image_name, r.method, f"{r.cr:g}", f"{r.mae:.4f}",
             f"{r.psnr:.4f}", f"{r.ssim:.4f}", f"{r.wall_time:.4f}"]
            for r in rows]
    return header, data


def format_csv(header, data) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(data)
    return buf.getvalue()


def format_text(header, data) -> str:
    cols = [header] + [[str(c) for c in row] for row in data]
    widths = [max(len(row[i]) for row in cols) for i in range(len(header))]
    lines = []
    for idx, row in enumerate(cols):
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * widths[i] for i in range(len(header))))
    return "\n".join(lines) + "\n"


def render_figures(rows: list[BenchRow], out_dir, crs) -> list[str]:
    """Write one grouped-bar figure per metric; returns the file paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    paths = []
    for metric in METRICS:
        fig, axes = plt.subplots(1, len(crs), figsize=(4.5 * len(crs), 3.4),
                                 sharey=True, squeeze=False)
        for ax, cr in zip(axes[0], crs):
            _, data = metric_table(rows, metric, float(cr))
            names = [row[0] for row in data]
            x = np.arange(len(names))
            width = 0.8 / len(METHODS)
            for k, method in enumerate(METHODS):
                vals = [float(row[1 + k]) for row in data]
                ax.bar(x + (k - 1) * width, vals, width, label=method)
            ax.set_xticks(x)
            ax.set_xticklabels(names, rotation=45, ha="right", fontsize=8)
            ax.set_title(f"CR = {cr}")
        axes[0][0].set_ylabel(metric.upper())
        axes[0][-1].legend(fontsize=8)
        fig.suptitle(f"{metric.upper()} by image and method")
        fig.tight_layout()
        path = str(out_dir / f"{metric}.png") if hasattr(out_dir, "__truediv__") \
            else f"{out_dir}/{metric}.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        paths.append(path)
    return paths
