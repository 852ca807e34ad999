from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np

from .modarith import kronecker
from .quadform import Constraint, FormSpec, is_represented

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator
    from typing import Final

_LOGGER: Final = logging.getLogger(__name__)

LIMIT_CEILING: Final = 10**5
MODULUS_CEILING: Final = 1 << 31
_INT64_CEILING: Final = 1 << 63
_HALF_BITS: Final = 16
# Float FFT products are exact after rounding while every convolution sum stays below this.
_FFT_EXACT_CEILING: Final = 1 << 40
_FFT_MIN_LENGTH: Final = 4096


class SeriesKind(Enum):
    DELTA = 'delta'
    TAU16 = 'tau16'
    R12 = 'r12'


@dataclass(frozen=True, eq=False)
class SeriesMod:
    """Power series truncated after q^limit, coefficients reduced modulo `modulus`."""

    modulus: int
    limit: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if self.coeffs.shape != (self.limit + 1,):
            raise ValueError(f'Expected {self.limit + 1} coefficients, got {self.coeffs.shape}')
        self.coeffs.setflags(write=False)

    @staticmethod
    def from_coeffs(coeffs: Iterable[int], modulus: int, limit: int) -> SeriesMod:
        array = np.zeros(limit + 1, dtype=np.int64)
        values = [c % modulus for c in coeffs][: limit + 1]
        array[: len(values)] = values
        return SeriesMod(modulus, limit, array)

    @staticmethod
    def one(modulus: int, limit: int) -> SeriesMod:
        return SeriesMod.from_coeffs([1], modulus, limit)

    def __getitem__(self, n: int) -> int:
        return int(self.coeffs[n])

    def __len__(self) -> int:
        return self.limit + 1

    def __mul__(self, other: SeriesMod) -> SeriesMod:
        return series_mul(self, other)

    def __pow__(self, e: int) -> SeriesMod:
        return series_pow(self, e)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesMod):
            return NotImplemented
        return (
            self.modulus == other.modulus and self.limit == other.limit and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.limit, self.coeffs.tobytes()))

    def rows(self) -> Iterator[tuple[int, int]]:
        for n, coefficient in enumerate(self.coeffs.tolist()):
            yield n, coefficient


def _check_params(limit: int, modulus: int) -> None:
    if not 0 <= limit <= LIMIT_CEILING:
        raise ValueError(f'Series limit must be in [0, {LIMIT_CEILING}]: {limit}')
    if not 2 <= modulus < MODULUS_CEILING:
        raise ValueError(f'Series modulus must be in [2, 2^31): {modulus}')


def _fft_convolve(x: np.ndarray, y: np.ndarray, length: int) -> np.ndarray:
    size = 1 << (2 * length - 1).bit_length()
    product = np.fft.irfft(np.fft.rfft(x, size) * np.fft.rfft(y, size), size)[:length]
    return np.rint(product).astype(np.int64)


def _convolve_mod(x: np.ndarray, y: np.ndarray, m: int, length: int) -> np.ndarray:
    if length >= _FFT_MIN_LENGTH and (m - 1) ** 2 * length < _FFT_EXACT_CEILING:
        return _fft_convolve(x, y, length) % m
    if (m - 1) ** 2 * length < _INT64_CEILING:
        return np.convolve(x, y)[:length] % m

    # Split into 16-bit halves so every partial convolution stays inside int64.
    base = 1 << _HALF_BITS
    mask = base - 1
    x_hi, x_lo = x >> _HALF_BITS, x & mask
    y_hi, y_lo = y >> _HALF_BITS, y & mask
    hh = np.convolve(x_hi, y_hi)[:length] % m
    mid = (np.convolve(x_hi, y_lo)[:length] + np.convolve(x_lo, y_hi)[:length]) % m
    ll = np.convolve(x_lo, y_lo)[:length] % m
    result = hh * (base * base % m) % m
    result = (result + mid * base % m) % m
    return (result + ll) % m


def series_mul(a: SeriesMod, b: SeriesMod) -> SeriesMod:
    if a.modulus != b.modulus:
        raise ValueError(f'Series moduli differ: {a.modulus} and {b.modulus}')
    if a.limit != b.limit:
        raise ValueError(f'Series limits differ: {a.limit} and {b.limit}')
    coeffs = _convolve_mod(a.coeffs, b.coeffs, a.modulus, a.limit + 1)
    return SeriesMod(a.modulus, a.limit, coeffs.astype(np.int64))


def series_pow(a: SeriesMod, e: int) -> SeriesMod:
    if e < 0:
        raise ValueError(f'Negative series exponent: {e}')
    result = SeriesMod.one(a.modulus, a.limit)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def _jacobi_cube(limit: int, modulus: int) -> SeriesMod:
    # prod (1 - q^k)^3 = sum_j (-1)^j (2j + 1) q^(j(j+1)/2)
    coeffs = np.zeros(limit + 1, dtype=np.int64)
    j = 0
    while (exponent := j * (j + 1) // 2) <= limit:
        coeffs[exponent] = (-1) ** j * (2 * j + 1) % modulus
        j += 1
    return SeriesMod(modulus, limit, coeffs)


def delta_mod(limit: int, modulus: int) -> SeriesMod:
    """tau(n) mod m for n <= limit, from q * prod (1 - q^k)^24."""
    _check_params(limit, modulus)
    cube = _jacobi_cube(limit, modulus)
    eta24 = series_mul(series_mul(cube, cube), series_mul(cube, cube))
    eta24 = series_mul(eta24, eta24)
    coeffs = np.zeros(limit + 1, dtype=np.int64)
    coeffs[1:] = eta24.coeffs[:limit]
    return SeriesMod(modulus, limit, coeffs)


def eisenstein4_mod(limit: int, modulus: int) -> SeriesMod:
    _check_params(limit, modulus)
    sigma3 = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        sigma3[d::d] = (sigma3[d::d] + pow(d, 3, modulus)) % modulus
    coeffs = sigma3 * (240 % modulus) % modulus
    coeffs[0] = 1 % modulus
    return SeriesMod(modulus, limit, coeffs)


def tau16_mod(limit: int, modulus: int) -> SeriesMod:
    """Coefficients of Delta * E4, the weight-16 cusp form."""
    return series_mul(delta_mod(limit, modulus), eisenstein4_mod(limit, modulus))


def theta_mod(limit: int, modulus: int) -> SeriesMod:
    _check_params(limit, modulus)
    coeffs = np.zeros(limit + 1, dtype=np.int64)
    coeffs[0] = 1 % modulus
    k = 1
    while k * k <= limit:
        coeffs[k * k] = 2 % modulus
        k += 1
    return SeriesMod(modulus, limit, coeffs)


def r12_mod(limit: int, modulus: int) -> SeriesMod:
    """Number of representations of n as a sum of twelve squares, mod m."""
    return series_pow(theta_mod(limit, modulus), 12)


_BUILDERS: Final = {
    SeriesKind.DELTA: delta_mod,
    SeriesKind.TAU16: tau16_mod,
    SeriesKind.R12: r12_mod,
}


def build_series(kind: SeriesKind, limit: int, modulus: int) -> SeriesMod:
    return _BUILDERS[kind](limit, modulus)


@lru_cache(maxsize=16)
def cached_series(kind: SeriesKind, limit: int, modulus: int) -> SeriesMod:
    _LOGGER.info(f'Building {kind.value} series mod {modulus} up to q^{limit}')
    return build_series(kind, limit, modulus)


def residue_distribution(series: SeriesMod, indices: Iterable[int]) -> Counter[int]:
    return Counter(series[n] for n in indices if n <= series.limit)


def wilton_residue(p: int) -> int:
    """tau(p) mod 23 predicted from the splitting of p in the Hilbert class field of Q(sqrt(-23))."""
    if p == 23:
        return 1
    if kronecker(p, 23) == -1:
        return 0
    if is_represented(FormSpec(23, 1, Constraint.X_NONZERO), p):
        return 2
    return 22
