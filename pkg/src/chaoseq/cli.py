"""Command-line interface.

Subcommands compose the library pipelines; `figure fig1..fig9` runs the
canonical experiments end to end, writing a CSV and an SVG per figure.

Exit codes: 0 success, 1 usage error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import analysis, export, pi_digits, primes, spectrum
from .errors import ChaoseqError, UnknownFigure

DEFAULT_PRIME_COUNT = 100_000
DEFAULT_DIGIT_COUNT = 50_000

# Documented zoom windows for the magnified figures; the source material
# for these plots does not fix them, so they are package defaults.
FIG2_WINDOW = (10_000.0, 10_200.0)
FIG5_WINDOW = (0.5, 1.5)

FIGURE_NAMES = tuple(f"fig{i}" for i in range(1, 10))


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="chaoseq", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", metavar="subcommand")

    def add_common(p, with_input=False, with_axes=False):
        p.add_argument("-o", "--output", default="-", help="output path or '-' for stdout")
        p.add_argument("--format", choices=("csv", "svg"), default="csv")
        if with_input:
            p.add_argument(
                "--from", dest="source", required=True,
                help="input CSV (single column or k,value); '-' for stdin",
            )
        if with_axes:
            p.add_argument("--xmin", type=float)
            p.add_argument("--xmax", type=float)
            p.add_argument("--ymin", type=float)
            p.add_argument("--ymax", type=float)

    p = sub.add_parser("primes", help="first n primes")
    p.add_argument("--count", type=int, default=DEFAULT_PRIME_COUNT)
    add_common(p, with_axes=True)

    p = sub.add_parser("pi", help="first m fractional digits of pi")
    p.add_argument("--count", type=int, default=DEFAULT_DIGIT_COUNT)
    add_common(p, with_axes=True)

    p = sub.add_parser("derive", help="ratio derivative D_k of a sequence")
    add_common(p, with_input=True, with_axes=True)

    p = sub.add_parser("return-map", help="(value_k, value_{k+1}) pairs")
    add_common(p, with_input=True, with_axes=True)

    p = sub.add_parser("spectrum", help="normalized DFT amplitude spectrum")
    add_common(p, with_input=True, with_axes=True)
    p.add_argument("--range", dest="k_range", choices=("half", "full"), default="half")

    p = sub.add_parser("figure", help="reproduce one canonical figure")
    p.add_argument("name", help="fig1..fig9")
    p.add_argument("--outdir", default=".")
    return parser


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _read_series(path: str) -> list:
    """Last column of a CSV file; header row optional."""
    lines = [ln for ln in _read_text(path).splitlines() if ln.strip()]
    values = []
    for i, line in enumerate(lines):
        cell = line.split(",")[-1].strip()
        try:
            values.append(int(cell))
        except ValueError:
            try:
                values.append(float(cell))
            except ValueError:
                if i == 0:
                    continue  # header row
                raise ChaoseqError(f"non-numeric value {cell!r} at line {i + 1}")
    return values


def _write_bytes(data: bytes, path: str) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _axis_overrides(args) -> tuple[Optional[tuple], Optional[tuple]]:
    x_rng = y_rng = None
    if args.xmin is not None or args.xmax is not None:
        if args.xmin is None or args.xmax is None:
            raise _UsageError("--xmin and --xmax must be given together")
        x_rng = (args.xmin, args.xmax)
    if args.ymin is not None or args.ymax is not None:
        if args.ymin is None or args.ymax is None:
            raise _UsageError("--ymin and --ymax must be given together")
        y_rng = (args.ymin, args.ymax)
    return x_rng, y_rng


def _indexed_table(header: tuple[str, str], values, first_index: int = 1) -> export.CsvTable:
    rows = tuple((first_index + i, v) for i, v in enumerate(values))
    return export.CsvTable(header, rows)


def _scatter_table(points: analysis.ScatterSet) -> export.CsvTable:
    return export.CsvTable(("x", "y"), points.points)


def _spectrum_table(spec: spectrum.Spectrum, k_range: str) -> export.CsvTable:
    k_max = spec.size - 1 if k_range == "full" else spec.size // 2
    rows = tuple(
        (k, float(spec.harmonics[k].real), float(spec.harmonics[k].imag), float(spec.amplitudes[k]))
        for k in range(k_max + 1)
    )
    return export.CsvTable(("k", "re", "im", "amplitude"), rows)


def _index_scatter(values, first_index: int) -> analysis.ScatterSet:
    return analysis.ScatterSet(
        tuple((first_index + i, float(v)) for i, v in enumerate(values))
    )


def _emit(args, table: export.CsvTable, points=None, *,
          labels=("", ""), title="", stem_spectrum=None, k_range="half",
          point_radius=1.0) -> None:
    if args.format == "csv":
        _write_bytes(export.render_csv(table).encode("utf-8"), args.output)
        return
    x_rng, y_rng = _axis_overrides(args)
    spec = export.PlotSpec(
        x_label=labels[0], y_label=labels[1], title=title,
        mode="stem" if stem_spectrum is not None else "scatter",
        x_range=x_rng, y_range=y_rng, point_radius=point_radius,
    )
    if stem_spectrum is not None:
        svg = export.render_spectrum(stem_spectrum, spec, full_range=(k_range == "full"))
    else:
        svg = export.render_scatter(points, spec)
    _write_bytes(svg.encode("utf-8"), args.output)


def _cmd_primes(args) -> None:
    seq = primes.sieve_primes(args.count)
    table = _indexed_table(("k", "x_k"), seq.values)
    _emit(args, table, _index_scatter(seq.values, 1),
          labels=("k", "x_k"), title="Prime sequence")


def _cmd_pi(args) -> None:
    seq = pi_digits.pi_digits_spigot(args.count)
    table = _indexed_table(("k", "digit"), seq.digits)
    _emit(args, table, _index_scatter(seq.digits, 1),
          labels=("k", "X_k"), title="Digits of pi", point_radius=1.5)


def _cmd_derive(args) -> None:
    series = analysis.ratio_derivative(_read_series(args.source))
    table = _indexed_table(("k", "D_k"), series.values, series.first_index)
    _emit(args, table, _index_scatter(series.values, series.first_index),
          labels=("k", "D_k"), title="Ratio derivative")


def _cmd_return_map(args) -> None:
    points = analysis.return_map(_read_series(args.source))
    _emit(args, _scatter_table(points), points,
          labels=("value_k", "value_k+1"), title="Return map")


def _cmd_spectrum(args) -> None:
    spec = spectrum.dft_amplitude(_read_series(args.source))
    table = _spectrum_table(spec, args.k_range)
    _emit(args, table, labels=("k", "|Y[k]|"), title="Amplitude spectrum",
          stem_spectrum=spec, k_range=args.k_range)


def _figure_outputs(name: str):
    """(CsvTable, svg_text) for one canonical figure."""
    if name in ("fig1", "fig2", "fig3", "fig4", "fig5", "fig6"):
        xs = primes.sieve_primes(DEFAULT_PRIME_COUNT).values
    if name in ("fig7", "fig8", "fig9"):
        digits = pi_digits.pi_digits_spigot(DEFAULT_DIGIT_COUNT).digits

    if name == "fig1":
        pts = analysis.return_map(xs, "primes")
        spec = export.PlotSpec(x_label="x_k", y_label="x_k+1", title="Prime return map")
        return _scatter_table(pts), export.render_scatter(pts, spec)
    if name == "fig2":
        pts = analysis.return_map(xs, "primes")
        spec = export.PlotSpec(
            x_label="x_k", y_label="x_k+1", title="Prime return map (zoom)",
            x_range=FIG2_WINDOW, y_range=FIG2_WINDOW, point_radius=2.0,
        )
        return _scatter_table(pts), export.render_scatter(pts, spec)
    if name == "fig3":
        series = analysis.ratio_derivative(xs, "primes")
        table = _indexed_table(("k", "D_k"), series.values, series.first_index)
        pts = _index_scatter(series.values, series.first_index)
        spec = export.PlotSpec(x_label="k", y_label="D_k", title="Prime ratio derivative")
        return table, export.render_scatter(pts, spec)
    if name == "fig4":
        series = analysis.ratio_derivative(xs, "primes")
        pts = analysis.return_map(series.values, "prime D_k")
        spec = export.PlotSpec(x_label="D_k", y_label="D_k+1", title="Derivative return map")
        return _scatter_table(pts), export.render_scatter(pts, spec)
    if name == "fig5":
        series = analysis.ratio_derivative(xs, "primes")
        pts = analysis.return_map(series.values, "prime D_k")
        spec = export.PlotSpec(
            x_label="D_k", y_label="D_k+1", title="Derivative return map (zoom)",
            x_range=FIG5_WINDOW, y_range=FIG5_WINDOW, point_radius=2.0,
        )
        return _scatter_table(pts), export.render_scatter(pts, spec)
    if name == "fig6":
        series = analysis.ratio_derivative(xs, "primes")
        spec_y = spectrum.dft_amplitude(series.values)
        table = _spectrum_table(spec_y, "half")
        plot = export.PlotSpec(x_label="k", y_label="|Y[k]|", mode="stem",
                               title="Amplitude spectrum of prime D_n")
        return table, export.render_spectrum(spec_y, plot)
    if name == "fig7":
        table = _indexed_table(("k", "digit"), digits)
        pts = _index_scatter(digits, 1)
        spec = export.PlotSpec(x_label="k", y_label="X_k", title="Digits of pi",
                               point_radius=1.5)
        return table, export.render_scatter(pts, spec)
    if name == "fig8":
        pts = analysis.return_map(digits, "pi digits")
        spec = export.PlotSpec(x_label="X_k", y_label="X_k+1", title="Pi digit return map",
                               point_radius=2.5)
        return _scatter_table(pts), export.render_scatter(pts, spec)
    if name == "fig9":
        spec_y = spectrum.dft_amplitude(digits)
        table = _spectrum_table(spec_y, "half")
        plot = export.PlotSpec(x_label="k", y_label="|Y[k]|", mode="stem",
                               title="Amplitude spectrum of pi digits")
        return table, export.render_spectrum(spec_y, plot)
    raise UnknownFigure(name)


def figure(name: str, outdir: str = ".") -> list[Path]:
    """Write <name>.csv and <name>.svg into `outdir`; returns the paths."""
    if name not in FIGURE_NAMES:
        raise UnknownFigure(name)
    table, svg = _figure_outputs(name)
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / f"{name}.csv"
    svg_path = out / f"{name}.svg"
    csv_path.write_bytes(export.render_csv(table).encode("utf-8"))
    svg_path.write_bytes(svg.encode("utf-8"))
    return [csv_path, svg_path]


def _cmd_figure(args) -> None:
    figure(args.name, args.outdir)


_COMMANDS = {
    "primes": _cmd_primes,
    "pi": _cmd_pi,
    "derive": _cmd_derive,
    "return-map": _cmd_return_map,
    "spectrum": _cmd_spectrum,
    "figure": _cmd_figure,
}


def _validate_threads_env() -> None:
    raw = os.environ.get("CHAOSEQ_THREADS")
    if raw is None:
        return
    try:
        threads = int(raw)
    except ValueError:
        threads = 0
    if threads < 1:
        raise _UsageError(f"CHAOSEQ_THREADS must be a positive integer, got {raw!r}")
    # All pipelines are serial for bit-stable output; the variable is
    # validated so misconfiguration fails loudly.


def run(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        _validate_threads_env()
        args = parser.parse_args(argv)
        if args.subcommand is None:
            raise _UsageError("a subcommand is required")
        _COMMANDS[args.subcommand](args)
        return 0
    except _UsageError as exc:
        print(f"chaoseq: error: {exc}", file=sys.stderr)
        return 1
    except (ChaoseqError, OSError) as exc:
        print(f"chaoseq: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run(sys.argv[1:]))
