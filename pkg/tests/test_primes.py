import pytest

from chaoseq import CapacityExceeded, sieve_primes, trial_division_oracle
from chaoseq.primes import ORACLE_CEILING, SIEVE_CEILING


def test_empty_request():
    assert sieve_primes(0).values == ()
    assert sieve_primes(0).count == 0


def test_first_primes():
    assert sieve_primes(4).values == (2, 3, 5, 7)
    assert trial_division_oracle(1).values == (2,)
    assert trial_division_oracle(5).values == (2, 3, 5, 7, 11)


def test_oracle_agreement_10000():
    assert sieve_primes(10_000).values == trial_division_oracle(10_000).values


def test_hundred_thousandth_prime(primes_100k):
    # Frozen from a trial-division run done before the sieve was written.
    assert primes_100k[-1] == 1_299_709
    assert len(primes_100k) == 100_000


@pytest.mark.parametrize("n", [1, 2, 5, 6, 7, 100, 1000])
def test_prefix_property(n):
    longer = sieve_primes(n + 1).values
    assert sieve_primes(n).values == longer[:n]


def test_strictly_increasing_and_even_gaps(primes_100k):
    for a, b in zip(primes_100k, primes_100k[1:]):
        assert b > a
        if a > 2:
            gap = b - a
            assert gap >= 2 and gap % 2 == 0


@pytest.mark.parametrize("segment_size", [64, 1 << 10, 1 << 15, 1 << 18])
def test_segment_size_independence(segment_size, primes_100k):
    assert sieve_primes(100_000, segment_size=segment_size).values == primes_100k


def test_capacity_errors():
    with pytest.raises(CapacityExceeded):
        sieve_primes(SIEVE_CEILING + 1)
    with pytest.raises(CapacityExceeded):
        trial_division_oracle(ORACLE_CEILING + 1)
    with pytest.raises(ValueError):
        sieve_primes(-1)
