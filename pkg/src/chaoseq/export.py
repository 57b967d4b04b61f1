"""CSV serialization and deterministic SVG rendering.

All output is byte-deterministic: no timestamps, no generated IDs, fixed
number formatting. Floats are written in Python's shortest round-trip
form, so parse(render(table)) == table for finite values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Optional

from .analysis import ScatterSet
from .errors import EmptyData, SinkFailure
from .spectrum import Spectrum

# Scatter plots above this point count are thinned deterministically.
# CSV output is never thinned.
MAX_PLOT_POINTS = 200_000


@dataclass(frozen=True)
class CsvTable:
    header: tuple[str, ...]
    rows: tuple[tuple, ...]

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.header):
                raise ValueError("row length does not match header")


@dataclass(frozen=True)
class PlotSpec:
    width: int = 800
    height: int = 560
    margin: int = 64
    point_radius: float = 1.0
    x_label: str = ""
    y_label: str = ""
    title: str = ""
    mode: str = "scatter"  # "scatter" | "stem"
    x_range: Optional[tuple[float, float]] = None
    y_range: Optional[tuple[float, float]] = None

    def __post_init__(self):
        if self.width <= 2 * self.margin or self.height <= 2 * self.margin:
            raise ValueError("width and height must exceed twice the margin")
        if self.mode not in ("scatter", "stem"):
            raise ValueError(f"unknown mode {self.mode!r}")


def _cell(value) -> str:
    if isinstance(value, bool):
        raise TypeError("boolean cells are not supported")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)  # shortest form that round-trips
    return str(value)


def render_csv(table: CsvTable) -> str:
    lines = [",".join(table.header)]
    lines.extend(",".join(_cell(v) for v in row) for row in table.rows)
    return "\n".join(lines) + "\n"


def write_csv(table: CsvTable, destination: BinaryIO) -> None:
    """RFC-4180-style CSV: UTF-8, LF endings, '.' decimal separator."""
    try:
        destination.write(render_csv(table).encode("utf-8"))
    except OSError as exc:
        raise SinkFailure(str(exc)) from exc


def _parse_cell(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def parse_csv(text: str) -> CsvTable:
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty CSV")
    header = tuple(lines[0].split(","))
    rows = tuple(tuple(_parse_cell(c) for c in line.split(",")) for line in lines[1:])
    return CsvTable(header, rows)


def _axis_range(values: Iterable[float], override) -> tuple[float, float]:
    if override is not None:
        return float(override[0]), float(override[1])
    vals = list(values)
    lo, hi = min(vals), max(vals)
    if lo == hi:
        return lo - 1.0, hi + 1.0
    pad = 0.02 * (hi - lo)
    return lo - pad, hi + pad


def _tick_values(lo: float, hi: float, target: int = 6) -> list[float]:
    span = hi - lo
    raw = span / target
    magnitude = 10.0 ** math.floor(math.log10(raw))
    step = 10.0 * magnitude
    for mult in (1.0, 2.0, 5.0):
        if raw <= mult * magnitude:
            step = mult * magnitude
            break
    first = math.ceil(lo / step)
    last = math.floor(hi / step)
    return [i * step for i in range(first, last + 1)]


def _fmt_px(v: float) -> str:
    return f"{v:.2f}"


def _fmt_tick(v: float) -> str:
    return f"{v:.10g}"


class _Frame:
    """Pixel mapping and shared axis/tick markup for one plot."""

    def __init__(self, spec: PlotSpec, x_rng, y_rng):
        self.spec = spec
        self.x_lo, self.x_hi = x_rng
        self.y_lo, self.y_hi = y_rng
        self.left = spec.margin
        self.right = spec.width - spec.margin
        self.top = spec.margin
        self.bottom = spec.height - spec.margin

    def px(self, x: float) -> float:
        return self.left + (x - self.x_lo) / (self.x_hi - self.x_lo) * (self.right - self.left)

    def py(self, y: float) -> float:
        return self.bottom - (y - self.y_lo) / (self.y_hi - self.y_lo) * (self.bottom - self.top)

    def contains(self, x: float, y: float) -> bool:
        return self.x_lo <= x <= self.x_hi and self.y_lo <= y <= self.y_hi

    def chrome(self) -> list[str]:
        s = self.spec
        out = [
            f'<rect width="{s.width}" height="{s.height}" fill="white"/>',
            f'<rect x="{self.left}" y="{self.top}" width="{self.right - self.left}"'
            f' height="{self.bottom - self.top}" fill="none" stroke="black" stroke-width="1"/>',
        ]
        for t in _tick_values(self.x_lo, self.x_hi):
            x = _fmt_px(self.px(t))
            out.append(
                f'<line x1="{x}" y1="{self.bottom}" x2="{x}" y2="{self.bottom + 5}"'
                ' stroke="black" stroke-width="1"/>'
            )
            out.append(
                f'<text x="{x}" y="{self.bottom + 18}" font-family="sans-serif"'
                f' font-size="11" text-anchor="middle">{_fmt_tick(t)}</text>'
            )
        for t in _tick_values(self.y_lo, self.y_hi):
            y = _fmt_px(self.py(t))
            out.append(
                f'<line x1="{self.left - 5}" y1="{y}" x2="{self.left}" y2="{y}"'
                ' stroke="black" stroke-width="1"/>'
            )
            out.append(
                f'<text x="{self.left - 8}" y="{y}" font-family="sans-serif"'
                f' font-size="11" text-anchor="end" dominant-baseline="middle">{_fmt_tick(t)}</text>'
            )
        if s.title:
            out.append(
                f'<text x="{s.width // 2}" y="{self.top - 12}" font-family="sans-serif"'
                f' font-size="14" text-anchor="middle">{s.title}</text>'
            )
        if s.x_label:
            out.append(
                f'<text x="{(self.left + self.right) // 2}" y="{s.height - 10}"'
                f' font-family="sans-serif" font-size="12" text-anchor="middle">{s.x_label}</text>'
            )
        if s.y_label:
            out.append(
                f'<text x="14" y="{(self.top + self.bottom) // 2}" font-family="sans-serif"'
                f' font-size="12" text-anchor="middle"'
                f' transform="rotate(-90 14 {(self.top + self.bottom) // 2})">{s.y_label}</text>'
            )
        return out


def _document(spec: PlotSpec, body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.width}"'
        f' height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">'
    )
    return head + "\n" + "\n".join(body) + "\n</svg>\n"


def render_scatter(points: ScatterSet, spec: PlotSpec) -> str:
    """One circle per point; linear axes auto-scaled with 2% padding.

    Explicit spec.x_range / spec.y_range reproduce zoom windows; points
    outside the window are clipped.
    """
    pts = points.points
    if not pts:
        raise EmptyData("scatter set has no points")
    if len(pts) > MAX_PLOT_POINTS:
        step = math.ceil(len(pts) / MAX_PLOT_POINTS)
        pts = pts[::step]
    frame = _Frame(
        spec,
        _axis_range((p[0] for p in pts), spec.x_range),
        _axis_range((p[1] for p in pts), spec.y_range),
    )
    body = frame.chrome()
    r = spec.point_radius
    for x, y in pts:
        if not frame.contains(x, y):
            continue
        body.append(
            f'<circle cx="{_fmt_px(frame.px(x))}" cy="{_fmt_px(frame.py(y))}" r="{r}" fill="black"/>'
        )
    return _document(spec, body)


def render_spectrum(spectrum: Spectrum, spec: PlotSpec, full_range: bool = False) -> str:
    """Stem plot of |Y[k]| vs k.

    Defaults to k = 0..floor(N/2); real input makes the upper half
    redundant. Pass full_range=True for k = 0..N-1.
    """
    if spectrum.size == 0:
        raise EmptyData("spectrum has no harmonics")
    k_max = spectrum.size - 1 if full_range else spectrum.size // 2
    amps = spectrum.amplitudes[: k_max + 1]
    x_rng = spec.x_range or (-0.02 * max(k_max, 1), max(k_max, 1) * 1.02)
    y_hi = float(amps.max())
    y_rng = spec.y_range or (0.0, (y_hi if y_hi > 0 else 1.0) * 1.02)
    frame = _Frame(spec, x_rng, y_rng)
    body = frame.chrome()
    base = _fmt_px(frame.py(max(0.0, frame.y_lo)))
    for k in range(k_max + 1):
        a = float(amps[k])
        if not (frame.x_lo <= k <= frame.x_hi):
            continue
        x = _fmt_px(frame.px(k))
        body.append(
            f'<line x1="{x}" y1="{base}" x2="{x}" y2="{_fmt_px(frame.py(min(a, frame.y_hi)))}"'
            ' stroke="black" stroke-width="1"/>'
        )
    return _document(spec, body)
