from __future__ import annotations

from typing import TYPE_CHECKING

from .criteria import Method, u_excluded_divisor
from .cubic import Cubic
from .qseries import SeriesKind
from .quadform import Constraint, FormSpec
from .recurrence import SequenceKind, named_spec, spec_from
from .verifier import KroneckerAndRoot, NpfEquals, Represented, ResidueClass, SeriesCongruence, TermCongruence, TheoremCase

if TYPE_CHECKING:
    from collections.abc import Iterable
    from typing import Final

DEFAULT_SERIES_LIMIT: Final = 10**4

# (n, (a1, a2, a3), exceptional primes): p | u(p-1) iff 4p = X^2 + nY^2 with X + Y even.
SMALL_U_TABLE: Final = (
    (23, (0, -1, 1), (3, 23)),
    (31, (0, 1, 1), (3, 31)),
    (59, (0, 2, 1), (2, 3, 59)),
    (211, (0, -2, 3), (2, 3, 211)),
    (283, (0, 4, 1), (2, 3, 283)),
    (499, (0, 4, 3), (2, 3, 499)),
    (643, (0, -2, 5), (2, 3, 5, 643)),
)

# (n, (a1, a2, a3), exceptional primes): p | U(p-1) iff 4p = X^2 + nY^2.
CAP_U_TABLE: Final = (
    (83, (1, 1, 2), (2, 3, 47, 83)),
    (107, (1, 3, 2), (2, 3, 7, 107)),
    (139, (-1, 1, 2), (2, 3, 47, 139)),
    (307, (-1, 3, 2), (2, 3, 7, 307)),
    (331, (-2, 4, 1), (2, 3, 5, 17, 331)),
    (379, (1, 1, 4), (2, 3, 101, 379)),
    (547, (1, -3, 4), (2, 3, 7, 547)),
    (883, (5, -5, 2), (2, 3, 5, 421, 883)),
    (907, (5, 1, 2), (2, 3, 5, 11, 19, 907)),
)

# Primes below 10^5 where a U-table row fails although its printed exception list omits them.
CAP_U_OBSERVED_EXCEPTIONS: Final = {
    139: (61,),
    883: (23,),
    907: (7, 37),
}

CUBE_RESIDUES_MOD_31: Final = (1, 2, 4, 8, 15, 16, 23, 27, 29, 30)


def small_u_case(n: int, coefficients: tuple[int, int, int], exceptions: Iterable[int]) -> TheoremCase:
    cubic = Cubic(*coefficients)
    return TheoremCase(
        id=f'table1-n{n}',
        cubic=cubic,
        predicates=(
            TermCongruence(spec_from(SequenceKind.SMALL_U, cubic), -1),
            Represented(FormSpec(n, 4, Constraint.PARITY_EVEN_SUM)),
        ),
        exceptions=frozenset(exceptions),
        source=f'u-sequence table: p | u(p-1) of {cubic} iff p = (X/2)^2 + {n}(Y/2)^2 with 2 | X+Y',
        criterion=Method.U,
    )


def cap_u_case(n: int, coefficients: tuple[int, int, int], exceptions: Iterable[int]) -> TheoremCase:
    cubic = Cubic(*coefficients)
    return TheoremCase(
        id=f'table2-n{n}',
        cubic=cubic,
        predicates=(
            TermCongruence(spec_from(SequenceKind.CAP_U, cubic), -1),
            Represented(FormSpec(n, 4)),
        ),
        exceptions=frozenset(exceptions),
        source=f'U-sequence table: p | U(p-1) of {cubic} iff 4p = X^2 + {n}Y^2',
        criterion=Method.CAP_U,
        observed_exceptions=frozenset(CAP_U_OBSERVED_EXCEPTIONS.get(n, ())),
    )


def named_cases(series_limit: int = DEFAULT_SERIES_LIMIT) -> list[TheoremCase]:
    padovan_cubic = Cubic(0, -1, -1)
    ex31_cubic = Cubic(0, -31, 62)
    return [
        TheoremCase(
            id='tribonacci',
            cubic=Cubic(-1, -1, -1),
            predicates=(
                TermCongruence(named_spec('tribonacci'), -1),
                Represented(FormSpec(11)),
                SeriesCongruence(SeriesKind.R12, 11, 4, series_limit),
            ),
            exceptions=frozenset({11, 19}),
            source='Tribonacci: p | T(p-1) iff p = X^2 + 11Y^2 iff r12(p) = 4 mod 11, for p not dividing 11*19',
            criterion=Method.CAP_U,
        ),
        TheoremCase(
            id='padovan',
            cubic=padovan_cubic,
            predicates=(
                TermCongruence(named_spec('padovan'), -1),
                Represented(FormSpec(23, 1, Constraint.X_NONZERO)),
                NpfEquals(padovan_cubic, 3),
                SeriesCongruence(SeriesKind.DELTA, 23, 2, series_limit),
            ),
            exceptions=frozenset({3, 23}),
            source='Padovan: p | B(p-1) iff p = X^2 + 23Y^2 with X != 0 iff N_p(x^3 - x - 1) = 3 iff tau(p) = 2 mod 23',
            criterion=Method.U,
        ),
        TheoremCase(
            id='perrin',
            cubic=padovan_cubic,
            predicates=(
                TermCongruence(named_spec('perrin'), 1, residues=(2,)),
                Represented(FormSpec(23)),
                KroneckerAndRoot(23, padovan_cubic),
            ),
            exceptions=frozenset({2, 3, 23}),
            source='Perrin: P(p+1) = 2 mod p iff p = X^2 + 23Y^2, for p not dividing 2*3*23',
            criterion=Method.SUN,
        ),
        TheoremCase(
            id='berstel',
            cubic=Cubic(-2, 4, -4),
            predicates=(
                TermCongruence(named_spec('berstel'), 0),
                Represented(FormSpec(11)),
            ),
            exceptions=frozenset({2, 3, 11, 13}),
            source='Berstel: p | B(p) iff p = X^2 + 11Y^2, for p not dividing 2*3*11*13',
            criterion=Method.CAP_U,
        ),
        TheoremCase(
            id='cseq',
            cubic=Cubic(-1, 0, -1),
            predicates=(
                TermCongruence(named_spec('cseq'), 0),
                Represented(FormSpec(31)),
                SeriesCongruence(SeriesKind.TAU16, 31, 2, series_limit),
            ),
            exceptions=frozenset({2, 3, 29, 31}),
            source='C-sequence: p | C(p) iff p = X^2 + 31Y^2 iff tau16(p) = 2 mod 31, for p not dividing 2*3*29*31',
            criterion=Method.CAP_U,
        ),
        TheoremCase(
            id='ex31',
            cubic=ex31_cubic,
            predicates=(
                TermCongruence(named_spec('ex31'), -1, multiplier=4),
                ResidueClass(31, CUBE_RESIDUES_MOD_31),
                TermCongruence(named_spec('ex31'), -1, residues=(31, -31), multiplier=4, negate=True),
            ),
            exceptions=frozenset({2, 3, 31}),
            source='Abelian cubic x^3 - 31x + 62: 4N(p-1) = 0 mod p iff p is a cube mod 31, else 4N(p-1) = +-31',
            criterion=Method.U,
            excluded_divisor=u_excluded_divisor(ex31_cubic),
        ),
    ]


def registry(series_limit: int = DEFAULT_SERIES_LIMIT) -> list[TheoremCase]:
    cases = [small_u_case(*row) for row in SMALL_U_TABLE]
    cases += [cap_u_case(*row) for row in CAP_U_TABLE]
    cases += named_cases(series_limit)
    return cases


def find_case(case_id: str, cases: Iterable[TheoremCase]) -> TheoremCase:
    for case in cases:
        if case.id == case_id:
            return case
    raise ValueError(f'Unknown case: {case_id}')
