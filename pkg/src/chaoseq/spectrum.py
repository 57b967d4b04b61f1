"""Normalized DFT amplitude spectrum.

The harmonic definition is
    Y[k] = (1/N) * sum_{n=0}^{N-1} x[n] * exp(-2*pi*i*k*n / N)
so Y[0] is the sample mean. The product path is Bluestein's chirp-z
reduction (exact at any N, power-of-two convolutions delegated to
numpy.fft); the oracle is direct O(N^2) summation of the same formula.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CapacityExceeded, EmptyInput

FAST_CEILING = 1_048_576
NAIVE_CEILING = 8_192


@dataclass(frozen=True)
class Spectrum:
    """Complex harmonics Y[k] with 1/N normalization, plus their moduli."""

    harmonics: np.ndarray  # complex128, length == size
    amplitudes: np.ndarray  # float64, |Y[k]|
    size: int

    @property
    def normalization(self) -> float:
        return 1.0 / self.size


def _as_samples(samples) -> np.ndarray:
    x = np.asarray(samples, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError("samples must be one-dimensional")
    return x


def dft_amplitude(samples) -> Spectrum:
    """Normalized DFT at arbitrary length via Bluestein's chirp-z transform."""
    x = _as_samples(samples)
    n = len(x)
    if n == 0:
        raise EmptyInput("no samples")
    if n > FAST_CEILING:
        raise CapacityExceeded(n, FAST_CEILING, what="sample count")
    # k^2 reduced mod 2N keeps the chirp phase exact in double precision.
    k2 = (np.arange(n, dtype=np.int64) ** 2) % (2 * n)
    chirp = np.exp(-1j * np.pi * k2 / n)
    m = 1
    while m < 2 * n - 1:
        m <<= 1
    a = np.zeros(m, dtype=np.complex128)
    a[:n] = x * chirp
    b = np.zeros(m, dtype=np.complex128)
    b[:n] = np.conj(chirp)
    b[m - n + 1 :] = np.conj(chirp[1:][::-1])
    conv = np.fft.ifft(np.fft.fft(a) * np.fft.fft(b))
    harmonics = chirp * conv[:n] / n
    return Spectrum(harmonics, np.abs(harmonics), n)


def naive_dft(samples) -> Spectrum:
    """Direct summation of the harmonic formula; reference oracle."""
    x = _as_samples(samples)
    n = len(x)
    if n == 0:
        raise EmptyInput("no samples")
    if n > NAIVE_CEILING:
        raise CapacityExceeded(n, NAIVE_CEILING, what="sample count")
    idx = np.arange(n, dtype=np.int64)
    harmonics = np.empty(n, dtype=np.complex128)
    for k in range(n):
        # (k*idx) mod n keeps the angle small and exact.
        angles = -2.0 * np.pi * ((k * idx) % n) / n
        harmonics[k] = np.sum(x * np.exp(1j * angles)) / n
    return Spectrum(harmonics, np.abs(harmonics), n)
