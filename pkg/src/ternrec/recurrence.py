from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from .cubic import Cubic

if TYPE_CHECKING:
    from typing import Final

EXACT_CEILING: Final = 64
INDEX_CEILING: Final = 1 << 63

Matrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]
State = tuple[int, int, int]


class SequenceKind(Enum):
    SUN_S = 'sun_s'
    SMALL_U = 'small_u'
    CAP_U = 'cap_u'


@dataclass(frozen=True)
class RecurrenceSpec:
    """t(k+3) + c1*t(k+2) + c2*t(k+1) + c3*t(k) = 0 with t(origin), t(origin+1), t(origin+2) given."""

    c1: int
    c2: int
    c3: int
    t0: int
    t1: int
    t2: int
    label: str = ''
    origin: int = 0

    @property
    def cubic(self) -> Cubic:
        return Cubic(self.c1, self.c2, self.c3)

    @property
    def initial_terms(self) -> State:
        return self.t0, self.t1, self.t2

    @property
    def base_terms(self) -> State:
        """Exact terms t(0), t(1), t(2), stepping the recurrence backwards when origin > 0."""
        a, b, c = self.initial_terms
        for _ in range(self.origin):
            numerator = -(c + self.c1 * b + self.c2 * a)
            if self.c3 == 0 or numerator % self.c3:
                raise ValueError(f'Sequence {self.label or self} cannot be extended below index {self.origin}')
            a, b, c = numerator // self.c3, a, b
        return a, b, c


def spec_from(kind: SequenceKind, f: Cubic) -> RecurrenceSpec:
    a1, a2, a3 = f.coefficients
    match kind:
        case SequenceKind.SUN_S:
            return RecurrenceSpec(a1, a2, a3, 3, -a1, a1 * a1 - 2 * a2, label=f's[{f}]')
        case SequenceKind.SMALL_U:
            if a1 != 0:
                raise ValueError(f'Sequence u is defined for depressed cubics only, got a1 = {a1}')
            return RecurrenceSpec(0, a2, a3, 0, -a2, -a3, label=f'u[{f}]')
        case SequenceKind.CAP_U:
            return RecurrenceSpec(a1, a2, a3, 0, 1, -a1, label=f'U[{f}]')
    raise ValueError(f'Unknown sequence kind: {kind}')


NAMED_SPECS: Final = {
    'tribonacci': RecurrenceSpec(-1, -1, -1, 1, 1, 2, label='tribonacci', origin=1),
    'padovan': RecurrenceSpec(0, -1, -1, 0, 1, 1, label='padovan'),
    'perrin': RecurrenceSpec(0, -1, -1, 3, 0, 2, label='perrin'),
    'berstel': RecurrenceSpec(-2, 4, -4, 0, 0, 1, label='berstel'),
    'cseq': RecurrenceSpec(-1, 0, -1, 0, 0, 1, label='cseq'),
    'ex31': RecurrenceSpec(0, -31, 62, 0, 31, -62, label='ex31'),
}


def named_spec(name: str) -> RecurrenceSpec:
    try:
        return NAMED_SPECS[name]
    except KeyError as err:
        raise ValueError(f'Unknown sequence: {name}') from err


def companion_matrix(spec: RecurrenceSpec, p: int) -> Matrix:
    """Step matrix A for the row state (t(k), t(k+1), t(k+2)), so that state(k) = state(0) * A^k.

    A is the transpose of the column-form companion matrix [[0, 1, 0], [0, 0, 1], [-c3, -c2, -c1]].
    """
    return (
        (0, 0, -spec.c3 % p),
        (1, 0, -spec.c2 % p),
        (0, 1, -spec.c1 % p),
    )


def _mat_mul(x: Matrix, y: Matrix, p: int) -> Matrix:
    (x00, x01, x02), (x10, x11, x12), (x20, x21, x22) = x
    (y00, y01, y02), (y10, y11, y12), (y20, y21, y22) = y
    return (
        (
            (x00 * y00 + x01 * y10 + x02 * y20) % p,
            (x00 * y01 + x01 * y11 + x02 * y21) % p,
            (x00 * y02 + x01 * y12 + x02 * y22) % p,
        ),
        (
            (x10 * y00 + x11 * y10 + x12 * y20) % p,
            (x10 * y01 + x11 * y11 + x12 * y21) % p,
            (x10 * y02 + x11 * y12 + x12 * y22) % p,
        ),
        (
            (x20 * y00 + x21 * y10 + x22 * y20) % p,
            (x20 * y01 + x21 * y11 + x22 * y21) % p,
            (x20 * y02 + x21 * y12 + x22 * y22) % p,
        ),
    )


def _vec_mul(v: State, x: Matrix, p: int) -> State:
    v0, v1, v2 = v
    (x00, x01, x02), (x10, x11, x12), (x20, x21, x22) = x
    return (
        (v0 * x00 + v1 * x10 + v2 * x20) % p,
        (v0 * x01 + v1 * x11 + v2 * x21) % p,
        (v0 * x02 + v1 * x12 + v2 * x22) % p,
    )


def state_mod(spec: RecurrenceSpec, k: int, p: int) -> State:
    """(t(k), t(k+1), t(k+2)) mod p."""
    if k < 0:
        raise ValueError(f'Negative index: {k}')
    if k >= INDEX_CEILING:
        raise ValueError(f'Index out of range: {k}')
    if p < 2:
        raise ValueError(f'Modulus must be at least 2: {p}')

    state: State = tuple(t % p for t in spec.base_terms)  # type: ignore[assignment]
    power = companion_matrix(spec, p)
    while k:
        if k & 1:
            state = _vec_mul(state, power, p)
        k >>= 1
        if k:
            power = _mat_mul(power, power, p)
    return state


def term_mod(spec: RecurrenceSpec, k: int, p: int) -> int:
    return state_mod(spec, k, p)[0]


def term_exact(spec: RecurrenceSpec, k: int) -> int:
    if not 0 <= k <= EXACT_CEILING:
        raise ValueError(f'Exact terms are available for 0 <= k <= {EXACT_CEILING}: {k}')
    a, b, c = spec.base_terms
    for _ in range(k):
        a, b, c = b, c, -(spec.c1 * c + spec.c2 * b + spec.c3 * a)
    return a
