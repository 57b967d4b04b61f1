"""Fractional decimal digits of pi by two independent algorithms.

Product path: Rabinowitz-Wagon streaming spigot, emitting 8-digit groups
per pass with the classic held-predigit / 9-run carry handling.
Oracle path: Machin's formula pi = 16*arctan(1/5) - 4*arctan(1/239) in
fixed-point big-integer arithmetic with guard digits.
"""

import sys
from dataclasses import dataclass

import numpy as np

from .errors import CapacityExceeded

DIGIT_CEILING = 100_000

# Digits emitted per spigot pass. The per-cell values stay below ~5e13,
# comfortably inside int64.
_GROUP = 8
_BASE = 10**_GROUP


@dataclass(frozen=True)
class DigitSequence:
    """Digits of pi after the decimal separator (the leading 3 excluded)."""

    digits: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.digits)


def _spigot_pass(a, base):
    """One radix conversion pass; returns the next base-`base` group."""
    carry = 0
    for i in range(a.shape[0] - 1, 0, -1):
        x = base * a[i] + carry
        den = 2 * i + 1
        q = x // den
        a[i] = x - q * den
        carry = q * i
    x = base * a[0] + carry
    a[0] = x % 10
    return x // 10


try:  # pure-Python fallback keeps the module importable without numba
    from numba import njit

    _spigot_pass = njit(cache=True)(_spigot_pass)
except ImportError:  # pragma: no cover
    pass


def _check_count(count: int) -> None:
    if count < 1:
        raise ValueError("count must be positive")
    if count > DIGIT_CEILING:
        raise CapacityExceeded(count, DIGIT_CEILING)


def pi_digits_spigot(count: int) -> DigitSequence:
    """First `count` fractional digits of pi via the Rabinowitz-Wagon spigot."""
    _check_count(count)
    total = count + 1 + _GROUP  # leading "3" plus slack for the last group
    length = (10 * total) // 3 + 1
    a = np.full(length, 2, dtype=np.int64)
    groups: list[int] = []
    predigit: int | None = None
    nines = 0
    for _ in range((total + _GROUP - 1) // _GROUP):
        q = int(_spigot_pass(a, _BASE))
        if q >= _BASE:
            # Carry ripples into the held predigit; held 9-groups become 0.
            predigit += 1
            groups.append(predigit)
            groups.extend([0] * nines)
            nines = 0
            predigit = q - _BASE
        elif q == _BASE - 1:
            nines += 1
        else:
            if predigit is not None:
                groups.append(predigit)
            groups.extend([_BASE - 1] * nines)
            nines = 0
            predigit = q
    if predigit is not None:
        groups.append(predigit)
    digits: list[int] = []
    for g in groups:
        digits.extend(int(c) for c in str(g).zfill(_GROUP))
        if len(digits) > total:
            break
    # digits[0] is the integer part "3"; the rest are fractional.
    return DigitSequence(tuple(digits[1 : count + 1]))


def _arctan_inverse(x: int, unit: int) -> int:
    """floor-ish arctan(1/x) * unit via the Gregory series, integer arithmetic."""
    power = unit // x
    total = power
    x_squared = x * x
    k = 3
    while power:
        power //= x_squared
        if power == 0:
            break
        if k % 4 == 1:
            total += power // k
        else:
            total -= power // k
        k += 2
    return total


def _allow_big_int_str(digit_count: int) -> None:
    # CPython caps int->str conversion length; raise it only upward.
    if hasattr(sys, "set_int_max_str_digits"):
        need = digit_count + 32
        if sys.get_int_max_str_digits() < need:
            sys.set_int_max_str_digits(need)


def pi_digits_machin(count: int) -> DigitSequence:
    """First `count` fractional digits of pi via Machin's formula.

    Computes `count + guard` digits in fixed point and truncates; a run of
    all-9 or all-0 guard digits would leave the last kept digit ambiguous,
    so the computation is retried with more guard digits in that case.
    """
    _check_count(count)
    for guard in (10, 20):
        unit = 10 ** (count + guard)
        pi = 16 * _arctan_inverse(5, unit) - 4 * _arctan_inverse(239, unit)
        _allow_big_int_str(count + guard)
        text = str(pi)  # "31415926..." with count+guard fractional digits
        tail = text[count + 1 :]
        if tail != "9" * guard and tail != "0" * guard:
            break
    return DigitSequence(tuple(int(c) for c in text[1 : count + 1]))
