from __future__ import annotations

import logging
from dataclasses import dataclass
from math import isqrt
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

if TYPE_CHECKING:
    from collections.abc import Iterator
    from typing import Final

_LOGGER: Final = logging.getLogger(__name__)

MODULUS_CEILING: Final = 1 << 62
PRIMALITY_CEILING: Final = 1 << 64
SEGMENT_SIZE: Final = 1 << 18

# Deterministic for every n < 3.3 * 10^24.
_MILLER_RABIN_BASES: Final = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self) -> None:
        if not 2 <= self.modulus < MODULUS_CEILING:
            raise ValueError(f'Modulus out of range: {self.modulus}')
        if not 0 <= self.value < self.modulus:
            raise ValueError(f'Residue {self.value} not reduced modulo {self.modulus}')

    def __str__(self) -> str:
        return f'{self.value} (mod {self.modulus})'


class PrimeRange(NamedTuple):
    lo: int
    hi: int
    primes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.primes)


def mul_mod(a: int, b: int, m: int) -> int:
    return a * b % m


def pow_mod(a: int, e: int, m: int) -> int:
    if e < 0:
        raise ValueError(f'Negative exponent: {e}')
    return pow(a % m, e, m)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), extending the Jacobi symbol to every integer n."""
    if n == 0:
        return 1 if abs(a) == 1 else 0

    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result

    twos = (n & -n).bit_length() - 1
    if twos:
        if a % 2 == 0:
            return 0
        n >>= twos
        if twos % 2 == 1 and a % 8 in (3, 5):
            result = -result

    return result * _jacobi(a % n, n)


def _jacobi(a: int, n: int) -> int:
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def sqrt_mod(a: int, p: int) -> int | None:
    """Square root of a modulo the odd prime p, or None for a non-residue.

    The smaller of the two roots is returned. The non-residue needed by Tonelli-Shanks
    is the least one found by ascending search, so results are deterministic.
    """
    a %= p
    if a == 0 or p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None

    if p % 4 == 3:
        root = pow(a, (p + 1) // 4, p)
        return min(root, p - root)

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1

    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1

    m = s
    c = pow(z, q, p)
    t = pow(a, q, p)
    root = pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        root = root * b % p

    return min(root, p - root)


def is_prime(n: int) -> bool:
    if n >= PRIMALITY_CEILING:
        raise ValueError(f'Primality test is only deterministic below 2^64: {n}')
    if n < 2:
        return False
    for small in _MILLER_RABIN_BASES:
        if n % small == 0:
            return n == small

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for base in _MILLER_RABIN_BASES:
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _base_primes(limit: int) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def iter_prime_segments(lo: int, hi: int, segment_size: int = SEGMENT_SIZE) -> Iterator[np.ndarray]:
    """Yield the primes in [lo, hi) as ascending int64 arrays, one per sieve segment."""
    lo = max(lo, 2)
    if hi <= lo:
        return

    if lo == 2:
        yield np.array([2], dtype=np.int64)
        lo = 3
    if lo % 2 == 0:
        lo += 1

    base = _base_primes(isqrt(hi - 1))[1:]
    span = 2 * segment_size
    low = lo
    while low < hi:
        high = min(low + span, hi)
        odd_count = (high - low + 1) // 2
        mask = np.ones(odd_count, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= high:
                break
            start = max(p * p, (low + p - 1) // p * p)
            if start % 2 == 0:
                start += p
            if start >= high:
                continue
            mask[(start - low) // 2 :: p] = False
        segment = low + 2 * np.flatnonzero(mask).astype(np.int64)
        if segment.size:
            yield segment
        low = high


def primes_in(lo: int, hi: int) -> PrimeRange:
    primes = tuple(int(p) for segment in iter_prime_segments(lo, hi) for p in segment)
    _LOGGER.debug(f'Sieved {len(primes)} primes in [{lo}, {hi})')
    return PrimeRange(lo, hi, primes)
