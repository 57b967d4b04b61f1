"""Sequence chaos analysis: primes, pi digits, return maps, ratio
derivatives and normalized DFT amplitude spectra."""

from .analysis import RatioSeries, ScatterSet, ratio_derivative, return_map
from .errors import (
    CapacityExceeded,
    ChaoseqError,
    EmptyData,
    EmptyInput,
    SinkFailure,
    TooShort,
    UnknownFigure,
    ZeroDenominator,
)
from .export import CsvTable, PlotSpec, parse_csv, render_csv, render_scatter, render_spectrum, write_csv
from .pi_digits import DigitSequence, pi_digits_machin, pi_digits_spigot
from .primes import PrimeSequence, sieve_primes, trial_division_oracle
from .spectrum import Spectrum, dft_amplitude, naive_dft

__version__ = "0.1.0"

__all__ = [
    "CapacityExceeded",
    "ChaoseqError",
    "CsvTable",
    "DigitSequence",
    "EmptyData",
    "EmptyInput",
    "PlotSpec",
    "PrimeSequence",
    "RatioSeries",
    "ScatterSet",
    "SinkFailure",
    "Spectrum",
    "TooShort",
    "UnknownFigure",
    "ZeroDenominator",
    "dft_amplitude",
    "naive_dft",
    "parse_csv",
    "pi_digits_machin",
    "pi_digits_spigot",
    "ratio_derivative",
    "render_csv",
    "render_scatter",
    "render_spectrum",
    "return_map",
    "sieve_primes",
    "trial_division_oracle",
    "write_csv",
]
