from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any, ClassVar, NamedTuple

from pathos.pools import ProcessPool  # type: ignore

from .criteria import CriterionInapplicableError, excluded_divisor
from .cubic import np_gcd
from .modarith import iter_prime_segments, kronecker
from .qseries import cached_series
from .quadform import is_represented
from .recurrence import term_mod

if TYPE_CHECKING:
    from collections.abc import Iterable
    from typing import Final

    from .criteria import Method
    from .cubic import Cubic
    from .qseries import SeriesKind
    from .quadform import FormSpec
    from .recurrence import RecurrenceSpec

_LOGGER: Final = logging.getLogger(__name__)

BOUND_CEILING: Final = 10**9
_CHUNKS_PER_WORKER: Final = 4


class PredicateKind(Enum):
    DIVIDES_TERM = 'divides_term'
    TERM_CONGRUENCE = 'term_congruence'
    REPRESENTATION = 'representation'
    NPF_EQUALS = 'npf_equals'
    KRONECKER_AND_ROOT = 'kronecker_and_root'
    SERIES_CONGRUENCE = 'series_congruence'
    RESIDUE_CLASS = 'residue_class'


class Predicate(ABC):
    """A statement about a prime p. Evaluates to None where it is undefined."""

    @property
    @abstractmethod
    def kind(self) -> PredicateKind:
        ...

    @abstractmethod
    def evaluate(self, p: int) -> bool | None:
        ...

    @abstractmethod
    def describe(self) -> str:
        ...


def _index_text(offset: int) -> str:
    if offset == 0:
        return 'p'
    return f'p{offset:+d}'


@dataclass(frozen=True)
class TermCongruence(Predicate):
    """multiplier * t(p + offset) mod p lies in `residues`, or outside them when negated."""

    spec: RecurrenceSpec
    offset: int
    residues: tuple[int, ...] = (0,)
    multiplier: int = 1
    negate: bool = False

    @property
    def kind(self) -> PredicateKind:
        if self.residues == (0,) and not self.negate:
            return PredicateKind.DIVIDES_TERM
        return PredicateKind.TERM_CONGRUENCE

    def evaluate(self, p: int) -> bool:
        value = self.multiplier * term_mod(self.spec, p + self.offset, p) % p
        hit = value in {r % p for r in self.residues}
        return hit != self.negate

    def describe(self) -> str:
        scaled = f'{self.multiplier}*' if self.multiplier != 1 else ''
        term = f'{scaled}{self.spec.label}({_index_text(self.offset)})'
        if self.kind is PredicateKind.DIVIDES_TERM:
            return f'p | {term}'
        relation = 'not in' if self.negate else 'in'
        return f'{term} mod p {relation} {{{", ".join(str(r) for r in self.residues)}}}'


@dataclass(frozen=True)
class Represented(Predicate):
    form: FormSpec

    @property
    def kind(self) -> PredicateKind:
        return PredicateKind.REPRESENTATION

    def evaluate(self, p: int) -> bool:
        return is_represented(self.form, p)

    def describe(self) -> str:
        return str(self.form)


@dataclass(frozen=True)
class NpfEquals(Predicate):
    cubic: Cubic
    count: int

    @property
    def kind(self) -> PredicateKind:
        return PredicateKind.NPF_EQUALS

    def evaluate(self, p: int) -> bool:
        return np_gcd(self.cubic, p) == self.count

    def describe(self) -> str:
        return f'N_p({self.cubic}) = {self.count}'


@dataclass(frozen=True)
class KroneckerAndRoot(Predicate):
    n: int
    cubic: Cubic

    @property
    def kind(self) -> PredicateKind:
        return PredicateKind.KRONECKER_AND_ROOT

    def evaluate(self, p: int) -> bool:
        return kronecker(-self.n, p) == 1 and np_gcd(self.cubic, p) >= 1

    def describe(self) -> str:
        return f'(-{self.n}/p) = 1 and {self.cubic} has a root mod p'


@dataclass(frozen=True)
class SeriesCongruence(Predicate):
    series: SeriesKind
    modulus: int
    residue: int
    limit: int

    @property
    def kind(self) -> PredicateKind:
        return PredicateKind.SERIES_CONGRUENCE

    def evaluate(self, p: int) -> bool | None:
        if p > self.limit:
            return None
        return cached_series(self.series, self.limit, self.modulus)[p] == self.residue % self.modulus

    def describe(self) -> str:
        return f'{self.series.value}(p) = {self.residue} mod {self.modulus}'


@dataclass(frozen=True)
class ResidueClass(Predicate):
    modulus: int
    residues: tuple[int, ...]

    @property
    def kind(self) -> PredicateKind:
        return PredicateKind.RESIDUE_CLASS

    def evaluate(self, p: int) -> bool:
        return p % self.modulus in self.residues

    def describe(self) -> str:
        return f'p mod {self.modulus} in {{{", ".join(str(r) for r in self.residues)}}}'


@dataclass(frozen=True)
class TheoremCase:
    id: str
    cubic: Cubic
    predicates: tuple[Predicate, ...]
    exceptions: frozenset[int]
    source: str
    criterion: Method | None = None
    excluded_divisor: int | None = None
    # Mismatches found by sweeping that the source's exception list leaves out. They still fail the verdict.
    observed_exceptions: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if len(self.predicates) < 2:
            raise ValueError(f'Case {self.id} needs at least two predicates')
        if self.observed_exceptions & self.exceptions:
            raise ValueError(f'Case {self.id} lists primes as both printed and observed exceptions')

    def unrecorded(self, mismatches: Iterable[int]) -> list[int]:
        return [p for p in mismatches if p not in self.observed_exceptions]

    @property
    def left(self) -> Predicate:
        return self.predicates[0]

    @property
    def right(self) -> Predicate:
        return self.predicates[1]

    @property
    def extra(self) -> tuple[Predicate, ...]:
        return self.predicates[2:]

    def is_exceptional(self, p: int) -> bool:
        if p in self.exceptions:
            return True
        return self.excluded_divisor is not None and self.excluded_divisor % p == 0


class Evaluation(NamedTuple):
    p: int
    values: tuple[bool | None, ...]
    exceptional: bool

    @property
    def left(self) -> bool | None:
        return self.values[0]

    @property
    def right(self) -> bool | None:
        return self.values[1]

    @property
    def third(self) -> bool | None:
        return self.values[2] if len(self.values) > 2 else None

    @property
    def agree(self) -> bool:
        return len({value for value in self.values if value is not None}) <= 1


class FlaggedPrime(NamedTuple):
    p: int
    left: bool
    right: bool


@dataclass(frozen=True)
class SweepReport:
    case: str
    bound: int
    primes_checked: int
    mismatches: tuple[int, ...]
    flagged_exceptions: tuple[FlaggedPrime, ...] = field(default=())

    @property
    def verdict(self) -> str:
        return 'fail' if self.mismatches else 'pass'

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict[str, Any]:
        return {
            'case': self.case,
            'bound': self.bound,
            'primes_checked': self.primes_checked,
            'mismatches': list(self.mismatches),
            'flagged_exceptions': [flagged._asdict() for flagged in self.flagged_exceptions],
            'verdict': self.verdict,
        }

    @staticmethod
    def from_dict(dct: dict[str, Any]) -> SweepReport:
        report = SweepReport(
            case=dct['case'],
            bound=dct['bound'],
            primes_checked=dct['primes_checked'],
            mismatches=tuple(dct['mismatches']),
            flagged_exceptions=tuple(
                FlaggedPrime(flagged['p'], flagged['left'], flagged['right']) for flagged in dct['flagged_exceptions']
            ),
        )
        if 'verdict' in dct and dct['verdict'] != report.verdict:
            raise ValueError(f'Inconsistent verdict {dct["verdict"]!r} for case {report.case}')
        return report


def evaluate(case: TheoremCase, p: int) -> Evaluation:
    return Evaluation(p, tuple(predicate.evaluate(p) for predicate in case.predicates), case.is_exceptional(p))


class _ChunkResult(NamedTuple):
    checked: int
    mismatches: tuple[int, ...]
    flagged: tuple[FlaggedPrime, ...]
    discovered: tuple[int, ...]


def _scan_range(case: TheoremCase, lo: int, hi: int, inadmissible_divisor: int | None) -> _ChunkResult:
    checked = 0
    mismatches: list[int] = []
    flagged: list[FlaggedPrime] = []
    discovered: list[int] = []
    disc = case.cubic.disc

    for segment in iter_prime_segments(lo, hi):
        for p in segment.tolist():
            evaluation = evaluate(case, p)
            if evaluation.exceptional:
                flagged.append(FlaggedPrime(p, bool(evaluation.left), bool(evaluation.right)))
            else:
                checked += 1
                if not evaluation.agree:
                    mismatches.append(p)
            if (
                not evaluation.agree
                or disc % p == 0
                or (inadmissible_divisor is not None and inadmissible_divisor % p == 0)
            ):
                discovered.append(p)

    _LOGGER.debug(f'{case.id}: [{lo}, {hi}) checked {checked}, {len(mismatches)} mismatches')
    return _ChunkResult(checked, tuple(mismatches), tuple(flagged), tuple(discovered))


def _partition(bound: int, chunks: int) -> list[tuple[int, int]]:
    edges = sorted({2 + (bound - 2) * i // chunks for i in range(chunks + 1)})
    return list(zip(edges, edges[1:], strict=False))


def _check_sweep_args(bound: int, workers: int) -> None:
    if not 2 <= bound <= BOUND_CEILING:
        raise ValueError(f'Sweep bound must be in [2, {BOUND_CEILING}]: {bound}')
    if workers < 1:
        raise ValueError(f'Worker count must be positive: {workers}')


def _scan(case: TheoremCase, bound: int, workers: int, inadmissible_divisor: int | None = None) -> list[_ChunkResult]:
    _check_sweep_args(bound, workers)
    ranges = _partition(bound, workers * _CHUNKS_PER_WORKER if workers > 1 else 1)
    _LOGGER.info(f'Scanning case {case.id} below {bound} in {len(ranges)} ranges with {workers} workers')

    def scan_range(bounds: tuple[int, int]) -> _ChunkResult:
        lo, hi = bounds
        return _scan_range(case, lo, hi, inadmissible_divisor)

    if workers == 1:
        return [scan_range(bounds) for bounds in ranges]
    with ProcessPool(ncpus=workers) as process_pool:
        return list(process_pool.map(scan_range, ranges))


def sweep(case: TheoremCase, bound: int, workers: int = 1) -> SweepReport:
    results = _scan(case, bound, workers)
    mismatches = sorted(p for result in results for p in result.mismatches)
    flagged = sorted((f for result in results for f in result.flagged), key=lambda f: f.p)
    report = SweepReport(
        case=case.id,
        bound=bound,
        primes_checked=sum(result.checked for result in results),
        mismatches=tuple(mismatches),
        flagged_exceptions=tuple(flagged),
    )
    if mismatches:
        unrecorded = case.unrecorded(mismatches)
        if unrecorded:
            _LOGGER.warning(f'Case {case.id} fails below {bound} at primes: {unrecorded[:20]}')
        if len(unrecorded) < len(mismatches):
            _LOGGER.info(f'Case {case.id} fails at its observed exceptions: {sorted(case.observed_exceptions)}')
    return report


def discover_exceptions(
    case: TheoremCase,
    bound: int,
    workers: int = 1,
    include_inadmissible: bool = False,
) -> list[int]:
    """Primes below `bound` where the equivalence fails or p divides disc(f).

    With `include_inadmissible`, primes excluded by the case's criterion are added too.
    """
    inadmissible_divisor = None
    if include_inadmissible and case.criterion is not None:
        try:
            inadmissible_divisor = excluded_divisor(case.cubic, case.criterion)
        except CriterionInapplicableError:
            _LOGGER.warning(f'Criterion {case.criterion.value} does not apply to case {case.id}')
    results = _scan(case, bound, workers, inadmissible_divisor)
    return sorted(p for result in results for p in result.discovered)


def sweep_all(cases: Iterable[TheoremCase], bound: int, workers: int = 1) -> list[SweepReport]:
    return [sweep(case, bound, workers) for case in cases]
