import pytest

from chaoseq import analysis, pi_digits, primes


@pytest.fixture(scope="session")
def primes_100k():
    return primes.sieve_primes(100_000).values


@pytest.fixture(scope="session")
def prime_derivative(primes_100k):
    return analysis.ratio_derivative(primes_100k, "primes").values


@pytest.fixture(scope="session")
def digits_50k_spigot():
    return pi_digits.pi_digits_spigot(50_000).digits


@pytest.fixture(scope="session")
def digits_50k_machin():
    return pi_digits.pi_digits_machin(50_000).digits
