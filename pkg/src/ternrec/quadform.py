from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import TYPE_CHECKING, NamedTuple

from .modarith import sqrt_mod

if TYPE_CHECKING:
    from typing import Final

ENUM_CEILING: Final = 10**9


class Constraint(Enum):
    NONE = 'none'
    X_NONZERO = 'x_nonzero'
    PARITY_EVEN_SUM = 'parity_even_sum'


@dataclass(frozen=True)
class FormSpec:
    """The representation problem m*p = X^2 + n*Y^2 under a side constraint."""

    n: int
    m: int = 1
    constraint: Constraint = Constraint.NONE

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f'Form coefficient n must be positive: {self.n}')
        if self.m not in (1, 4):
            raise ValueError(f'Form multiplier m must be 1 or 4: {self.m}')

    def __str__(self) -> str:
        lhs = 'p' if self.m == 1 else f'{self.m}p'
        text = f'{lhs} = X^2 + {self.n}Y^2'
        if self.constraint is not Constraint.NONE:
            text += f' ({self.constraint.value})'
        return text


class Representation(NamedTuple):
    x: int
    y: int

    def value(self, n: int) -> int:
        return self.x * self.x + n * self.y * self.y


def represent(spec: FormSpec, p: int) -> Representation | None:
    """Cornacchia's algorithm for p = X^2 + n*Y^2."""
    if spec.m != 1:
        raise ValueError(f'Cornacchia representation needs m = 1, got m = {spec.m}')
    n = spec.n
    if (2 * n) % p == 0:
        raise ValueError(f'Prime {p} divides 2n = {2 * n}; use the enumeration oracle')

    root = sqrt_mod(-n, p)
    if root is None:
        return None
    if 2 * root < p:
        root = p - root

    a, b = p, root
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b

    remainder = p - b * b
    if remainder % n:
        return None
    c = remainder // n
    y = isqrt(c)
    if y * y != c:
        return None
    return Representation(b, y)


def _enumerate(total: int, n: int, prefer: Constraint) -> Representation | None:
    first = None
    for y in range(isqrt(total // n) + 1):
        rest = total - n * y * y
        x = isqrt(rest)
        if x * x != rest:
            continue
        candidate = Representation(x, y)
        if satisfies(candidate, prefer):
            return candidate
        if first is None:
            first = candidate
    return first


def represent4(n: int, p: int) -> Representation | None:
    """4p = X^2 + n*Y^2 by enumeration over Y, preferring X + Y even."""
    return _enumerate(4 * p, n, Constraint.PARITY_EVEN_SUM)


def represent_enum(spec: FormSpec, p: int) -> Representation | None:
    total = spec.m * p
    if total > ENUM_CEILING:
        raise ValueError(f'Enumeration oracle is limited to m*p <= {ENUM_CEILING}: {total}')
    return _enumerate(total, spec.n, spec.constraint)


def satisfies(rep: Representation, constraint: Constraint) -> bool:
    match constraint:
        case Constraint.NONE:
            return True
        case Constraint.X_NONZERO:
            return rep.x != 0
        case Constraint.PARITY_EVEN_SUM:
            return (rep.x + rep.y) % 2 == 0
    raise ValueError(f'Unknown constraint: {constraint}')


def find_representation(spec: FormSpec, p: int) -> Representation | None:
    if spec.m == 4:
        return represent4(spec.n, p)
    if (2 * spec.n) % p == 0:
        return represent_enum(spec, p)
    return represent(spec, p)


def is_represented(spec: FormSpec, p: int) -> bool:
    rep = find_representation(spec, p)
    return rep is not None and satisfies(rep, spec.constraint)
