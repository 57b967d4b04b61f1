"""Prime sequence generation.

Two independent routes: a segmented sieve of Eratosthenes (product path)
and a per-candidate trial-division generator (test oracle). They must
agree element-wise and share no sieving code.
"""

from dataclasses import dataclass
from math import isqrt, log

from .errors import CapacityExceeded

SIEVE_CEILING = 10_000_000
ORACLE_CEILING = 200_000

# Odd-number flags per segment; cache-resident. Results never depend on it.
DEFAULT_SEGMENT_SIZE = 1 << 15

_SMALL_PRIMES = (2, 3, 5, 7, 11)


@dataclass(frozen=True)
class PrimeSequence:
    """The first `count` primes, strictly increasing."""

    values: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.values)


def _nth_prime_bound(n: int) -> int:
    """Upper bound for the nth prime (1-based), Rosser-style for n >= 6."""
    if n < 6:
        return _SMALL_PRIMES[n - 1] + 1
    ln = log(n)
    return int(n * (ln + log(ln))) + 1


def _simple_sieve(limit: int) -> list[int]:
    """All primes <= limit by a plain sieve; used only for base primes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def sieve_primes(count: int, segment_size: int = DEFAULT_SEGMENT_SIZE) -> PrimeSequence:
    """First `count` primes via a segmented sieve over odd numbers.

    Deterministic; output is independent of `segment_size`.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    if count > SIEVE_CEILING:
        raise CapacityExceeded(count, SIEVE_CEILING)
    if count == 0:
        return PrimeSequence(())
    if count <= len(_SMALL_PRIMES):
        return PrimeSequence(_SMALL_PRIMES[:count])

    bound = _nth_prime_bound(count)
    primes: list[int] = [2]
    base: list[int] = []  # odd base primes <= isqrt(current bound)
    low = 3  # segments cover odd numbers in [low, low + 2*segment_size)
    while len(primes) < count:
        if low >= bound:
            # Bound estimate exhausted (should not happen for the Rosser
            # bound, but guarantees termination regardless).
            bound += bound // 4
        root = isqrt(low + 2 * segment_size)
        if not base or base[-1] < root:
            base = [p for p in _simple_sieve(root) if p > 2]
        flags = bytearray([1]) * segment_size
        high = low + 2 * segment_size
        for p in base:
            start = max(p * p, ((low + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start >= high:
                continue
            flags[(start - low) // 2 :: p] = bytearray(
                len(range((start - low) // 2, segment_size, p))
            )
        for i, f in enumerate(flags):
            if f:
                primes.append(low + 2 * i)
                if len(primes) == count:
                    break
        low = high
    return PrimeSequence(tuple(primes))


def _is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def trial_division_oracle(count: int) -> PrimeSequence:
    """First `count` primes by per-candidate trial division.

    Independent of sieve_primes; O(n * sqrt(p)), test use only.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    if count > ORACLE_CEILING:
        raise CapacityExceeded(count, ORACLE_CEILING)
    out: list[int] = []
    candidate = 2
    while len(out) < count:
        if _is_prime_trial(candidate):
            out.append(candidate)
        candidate += 1
    return PrimeSequence(tuple(out))
