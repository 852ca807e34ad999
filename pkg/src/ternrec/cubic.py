from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from math import isqrt
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from typing import Final

ORACLE_CEILING: Final = 10**6


class RootCount(IntEnum):
    ZERO = 0
    ONE = 1
    TWO = 2
    THREE = 3


@dataclass(frozen=True)
class Cubic:
    """Monic cubic x^3 + a1*x^2 + a2*x + a3 with integer coefficients."""

    a1: int
    a2: int
    a3: int

    @staticmethod
    def parse(text: str) -> Cubic:
        parts = [part.strip() for part in text.split(',')]
        if len(parts) != 3:
            raise ValueError(f'Expected three comma-separated coefficients a1,a2,a3, got: {text!r}')
        try:
            a1, a2, a3 = (int(part) for part in parts)
        except ValueError as err:
            raise ValueError(f'Non-integer coefficient in: {text!r}') from err
        return Cubic(a1, a2, a3)

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return self.a1, self.a2, self.a3

    @property
    def disc(self) -> int:
        return discriminant(self)

    @property
    def d(self) -> int:
        """d = 9*a3^2 - 4*a2^3, used by the u-criterion exclusion expression."""
        return 9 * self.a3**2 - 4 * self.a2**3

    @property
    def is_depressed(self) -> bool:
        return self.a1 == 0

    def __call__(self, x: int) -> int:
        return ((x + self.a1) * x + self.a2) * x + self.a3

    def __str__(self) -> str:
        text = 'x^3'
        for coefficient, power in ((self.a1, 'x^2'), (self.a2, 'x'), (self.a3, '')):
            if coefficient == 0:
                continue
            sign = '-' if coefficient < 0 else '+'
            magnitude = abs(coefficient)
            body = power if magnitude == 1 and power else f'{magnitude}{power}'
            text += f' {sign} {body}'
        return text


def discriminant(f: Cubic) -> int:
    a1, a2, a3 = f.coefficients
    return a1**2 * a2**2 - 4 * a2**3 - 4 * a1**3 * a3 - 27 * a3**2 + 18 * a1 * a2 * a3


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [k for k in range(1, isqrt(n) + 1) if n % k == 0]
    return sorted(set(small) | {n // k for k in small})


def rational_roots(f: Cubic) -> list[int]:
    if f.a3 == 0:
        return sorted({0} | {r for r in _divisors(f.a2) + [-k for k in _divisors(f.a2)] if f(r) == 0})
    candidates = _divisors(f.a3)
    return sorted({r for k in candidates for r in (k, -k) if f(r) == 0})


def is_irreducible(f: Cubic) -> bool:
    # A monic integer cubic is reducible over Q iff it has an integer root dividing a3.
    return not rational_roots(f)


def is_abelian(f: Cubic) -> bool:
    disc = f.disc
    return disc > 0 and isqrt(disc) ** 2 == disc and is_irreducible(f)


def np_brute(f: Cubic, p: int) -> RootCount:
    if p > ORACLE_CEILING:
        raise ValueError(f'Brute-force root count is limited to p <= {ORACLE_CEILING}: {p}')
    a1, a2, a3 = (c % p for c in f.coefficients)
    x = np.arange(p, dtype=np.int64)
    values = ((x + a1) * x % p + a2) * x % p
    values = (values + a3) % p
    return RootCount(int(np.count_nonzero(values == 0)))


Poly = tuple[int, int, int]


def _mulmod_cubic(u: Poly, v: Poly, c: Poly, p: int) -> Poly:
    """Product of two residues modulo the monic cubic x^3 + c2*x^2 + c1*x + c0 over F_p.

    Residues are coefficient triples in ascending degree; c = (c0, c1, c2).
    """
    u0, u1, u2 = u
    v0, v1, v2 = v
    w0 = u0 * v0
    w1 = u0 * v1 + u1 * v0
    w2 = u0 * v2 + u1 * v1 + u2 * v0
    w3 = u1 * v2 + u2 * v1
    w4 = u2 * v2
    c0, c1, c2 = c
    # x^4 = x * x^3, then fold x^3 = -(c2*x^2 + c1*x + c0) twice.
    w3 -= w4 * c2
    w2 -= w4 * c1
    w1 -= w4 * c0
    w2 -= w3 * c2
    w1 -= w3 * c1
    w0 -= w3 * c0
    return w0 % p, w1 % p, w2 % p


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_gcd_degree(a: list[int], b: list[int], p: int) -> int:
    a, b = _trim(a), _trim(b)
    while b:
        inverse = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            factor = a[-1] * inverse % p
            shift = len(a) - len(b)
            for i, coefficient in enumerate(b):
                a[shift + i] = (a[shift + i] - factor * coefficient) % p
            _trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def np_gcd(f: Cubic, p: int) -> RootCount:
    """Number of distinct roots of f in F_p, computed as deg gcd(x^p - x, f)."""
    c = (f.a3 % p, f.a2 % p, f.a1 % p)
    result: Poly = (1, 0, 0)
    base: Poly = (0, 1, 0)
    e = p
    while e:
        if e & 1:
            result = _mulmod_cubic(result, base, c, p)
        base = _mulmod_cubic(base, base, c, p)
        e >>= 1

    h = [result[0], (result[1] - 1) % p, result[2]]
    if not _trim(h):
        return RootCount.THREE
    return RootCount(_poly_gcd_degree([c[0], c[1], c[2], 1], h, p))
