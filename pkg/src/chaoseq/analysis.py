"""Return maps and the ratio derivative of a sequence.

The ratio derivative of a source f is
    D_k = (f(k+1) - f(k)) / (f(k) - f(k-1)),
the ratio of consecutive forward differences. With 1-based indexing over a
source of length N it exists for k = 2..N-1.
"""

from dataclasses import dataclass
from numbers import Integral
from typing import Sequence

from .errors import TooShort, ZeroDenominator


@dataclass(frozen=True)
class ScatterSet:
    """Ordered (value_k, value_{k+1}) pairs of a source sequence."""

    points: tuple[tuple[float, float], ...]
    source_label: str = ""


@dataclass(frozen=True)
class RatioSeries:
    """D_k values over a source; values[j] is D_{first_index + j}."""

    values: tuple[float, ...]
    first_index: int = 2
    source_label: str = ""


def return_map(source: Sequence[float], label: str = "") -> ScatterSet:
    """Pair consecutive elements; empty for sources shorter than 2."""
    pts = tuple((source[j], source[j + 1]) for j in range(len(source) - 1))
    return ScatterSet(pts, label)


def ratio_derivative(source: Sequence[float], label: str = "") -> RatioSeries:
    """Ratio of consecutive forward differences of `source`.

    Integer sources keep the differences exact; the only rounding is the
    final division. Raises ZeroDenominator when two consecutive elements
    are equal (the denominator of D_k vanishes).
    """
    n = len(source)
    if n < 3:
        raise TooShort(f"need at least 3 elements, got {n}")
    exact = all(isinstance(v, Integral) for v in source)
    src = source if exact else [float(v) for v in source]
    values = []
    for j in range(n - 2):
        den = src[j + 1] - src[j]
        if den == 0:
            raise ZeroDenominator(j + 1)
        values.append((src[j + 2] - src[j + 1]) / den)
    if src[n - 1] - src[n - 2] == 0:
        # Not a D_k denominator, but the final pair still violates the
        # nonzero-difference precondition.
        raise ZeroDenominator(n - 1)
    return RatioSeries(tuple(values), first_index=2, source_label=label)
