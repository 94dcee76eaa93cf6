"""Command-line front end: compress, decompress, metrics, bench."""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from .codec import CodecParams
from .metrics import mae, mse, psnr, ssim
from .pgm import PgmError, read_pgm_file, write_pgm_file
from .pipeline import (
    ContainerError,
    MAX_LEVELS,
    compress_multilevel,
    decompress_multilevel,
    deserialize,
    serialize,
)
from .report import (
    DEFAULT_CRS,
    format_csv,
    format_text,
    metric_table,
    render_figures,
    rows_table,
    run_benchmark,
    timing_table,
)


def _parse_lambda(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad fraction {text!r}; use forms like 1/8")
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"lambda must be in (0, 1], got {text}")
    if value.numerator > 255 or value.denominator > 255:
        raise argparse.ArgumentTypeError(f"lambda {text} does not fit the container format")
    return value


def _parse_mu(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad mu {text!r}")
    if not 0.0 < value <= 1.0:
        raise argparse.ArgumentTypeError(f"mu must be in (0, 1], got {text}")
    return value


def _parse_crs(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad cr list {text!r}; use forms like 2,4,8")
    for v in values:
        if v not in DEFAULT_CRS:
            raise argparse.ArgumentTypeError(f"cr must be one of 2, 4, 8, got {v}")
    if not values:
        raise argparse.ArgumentTypeError("empty cr list")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghwcodec",
        description="Lossy grayscale codec with parity-coded 2x2 blocks, "
                    "plus quality metrics and a benchmark harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compress", help="compress a PGM image to a GHWC container")
    p.add_argument("--in", dest="in_path", required=True, help="input PGM (P2 or P5)")
    p.add_argument("--out", dest="out_path", required=True, help="output container path")
    p.add_argument("--levels", type=int, default=1,
                   help=f"encoder passes, 1..{MAX_LEVELS} (default 1)")
    p.add_argument("--lambda", dest="lam", type=_parse_lambda, default=Fraction(1, 8),
                   metavar="P/Q", help="span weight as a fraction (default 1/8)")
    p.add_argument("--mu", type=_parse_mu, default=0.97,
                   help="decoder re-expansion weight stored in the container (default 0.97)")

    p = sub.add_parser("decompress", help="decode a GHWC container to a PGM image")
    p.add_argument("--in", dest="in_path", required=True, help="input container")
    p.add_argument("--out", dest="out_path", required=True, help="output PGM path")
    p.add_argument("--mu", type=_parse_mu, default=None,
                   help="override the container's re-expansion weight")

    p = sub.add_parser("metrics", help="compare two same-size PGM images")
    p.add_argument("--ref", dest="ref_path", required=True, help="reference PGM")
    p.add_argument("--test", dest="test_path", required=True, help="image under test")
    p.add_argument("--json", action="store_true", help="emit a JSON record")

    p = sub.add_parser("bench", help="benchmark all methods over a directory of PGMs")
    p.add_argument("--in", dest="in_path", required=True, help="directory of PGM images")
    p.add_argument("--out", dest="out_path", default=None,
                   help="directory for CSV tables and figures (default: print only)")
    p.add_argument("--cr", type=_parse_crs, default=DEFAULT_CRS, metavar="2,4,8",
                   help="comma-separated ratios (default 2,4,8)")
    p.add_argument("--format", choices=("csv", "text"), default="csv",
                   help="table style for printed output (default csv)")
    p.add_argument("--lambda", dest="lam", type=_parse_lambda, default=Fraction(1, 8),
                   metavar="P/Q", help="span weight for the proposed codec")
    p.add_argument("--mu", type=_parse_mu, default=0.97,
                   help="re-expansion weight for the proposed codec")
    p.add_argument("--no-plots", action="store_true",
                   help="skip figure rendering when --out is given")
    return parser


def cmd_compress(args) -> int:
    img = read_pgm_file(args.in_path)
    params = CodecParams(lam=args.lam, mu=args.mu)
    comp = compress_multilevel(img, args.levels, params)
    Path(args.out_path).write_bytes(serialize(comp))
    padded = comp.padded_width * comp.padded_height
    cr = padded / comp.sample_count
    print(f"{args.in_path} -> {args.out_path}: "
          f"{comp.sample_count} stored samples, CR {cr:g}")
    return 0


def cmd_decompress(args) -> int:
    comp = deserialize(Path(args.in_path).read_bytes())
    params = None
    if args.mu is not None:
        params = CodecParams(lam=comp.lam, mu=args.mu)
    img = decompress_multilevel(comp, params)
    write_pgm_file(args.out_path, img)
    print(f"{args.in_path} -> {args.out_path}: {img.shape[1]}x{img.shape[0]} pixels")
    return 0


def cmd_metrics(args) -> int:
    ref = read_pgm_file(args.ref_path)
    test = read_pgm_file(args.test_path)
    record = {
        "mae": mae(ref, test),
        "mse": mse(ref, test),
        "psnr": psnr(ref, test),
        "ssim": ssim(ref, test),
        # The windowed measure needs at least one full 8x8 tile.
        "ssim_windowed": ssim(ref, test, windowed=True) if min(ref.shape) >= 8 else None,
    }
    if args.json:
        printable = {k: (None if isinstance(v, float) and math.isinf(v) else v)
                     for k, v in record.items()}
        print(json.dumps(printable))
    else:
        for key, value in record.items():
            if value is None:
                print(f"{key}: n/a")
            else:
                print(f"{key}: {'inf' if math.isinf(value) else f'{value:.6f}'}")
    return 0


def cmd_bench(args) -> int:
    in_dir = Path(args.in_path)
    if not in_dir.is_dir():
        raise ValueError(f"not a directory: {in_dir}")
    paths = sorted(in_dir.glob("*.pgm"))
    if not paths:
        raise ValueError(f"no .pgm images found in {in_dir}")
    images = {path.stem: read_pgm_file(path) for path in paths}

    params = CodecParams(lam=args.lam, mu=args.mu)
    rows = run_benchmark(images, args.cr, params)

    render = format_csv if args.format == "csv" else format_text
    tables = [("rows", rows_table(rows))]
    for metric in ("mae", "psnr", "ssim"):
        for cr in args.cr:
            tables.append((f"{metric}_cr{cr}", metric_table(rows, metric, float(cr))))
    tables.append(("timing", timing_table(rows)))

    if args.out_path:
        out_dir = Path(args.out_path)
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, (header, data) in tables:
            (out_dir / f"{name}.csv").write_text(format_csv(header, data))
        written = [f"{name}.csv" for name, _ in tables]
        if not args.no_plots:
            written += [Path(p).name for p in render_figures(rows, out_dir, args.cr)]
        print(f"wrote {len(written)} files to {out_dir}: {', '.join(written)}")
    else:
        for name, (header, data) in tables:
            note = " (machine-dependent)" if name == "timing" else ""
            print(f"# {name}{note}")
            print(render(header, data))
    return 0


_HANDLERS = {
    "compress": cmd_compress,
    "decompress": cmd_decompress,
    "metrics": cmd_metrics,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (OSError, ValueError, TypeError, PgmError, ContainerError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
