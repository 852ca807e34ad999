from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from ternrec.cubic import Cubic, np_gcd
from ternrec.modarith import primes_in
from ternrec.qseries import SeriesKind
from ternrec.quadform import FormSpec
from ternrec.recurrence import named_spec, term_mod
from ternrec.registry import find_case, registry
from ternrec.verifier import (
    Evaluation,
    FlaggedPrime,
    PredicateKind,
    Represented,
    ResidueClass,
    SeriesCongruence,
    SweepReport,
    TermCongruence,
    TheoremCase,
    _partition,
    discover_exceptions,
    evaluate,
    sweep,
    sweep_all,
)

if TYPE_CHECKING:
    from typing import Final

SERIES_LIMIT: Final = 2000
CASES: Final = registry(SERIES_LIMIT)


def _residue_case(exceptions: frozenset[int] = frozenset()) -> TheoremCase:
    return TheoremCase(
        id='one-mod-4-vs-one-mod-3',
        cubic=Cubic(0, -1, -1),
        predicates=(ResidueClass(4, (1,)), ResidueClass(3, (1,))),
        exceptions=exceptions,
        source='unrelated residue classes',
    )


def test_term_congruence() -> None:
    # Given
    divides = TermCongruence(named_spec('padovan'), -1)
    perrin = TermCongruence(named_spec('perrin'), 1, residues=(2,))

    # Then
    assert divides.kind is PredicateKind.DIVIDES_TERM
    assert divides.describe() == 'p | padovan(p-1)'
    assert divides.evaluate(59)
    assert not divides.evaluate(61)
    assert perrin.kind is PredicateKind.TERM_CONGRUENCE
    assert perrin.describe() == 'perrin(p+1) mod p in {2}'


def test_negated_term_congruence() -> None:
    # Given
    predicate = TermCongruence(named_spec('perrin'), 0, negate=True)

    # Then
    assert predicate.kind is PredicateKind.TERM_CONGRUENCE
    assert not predicate.evaluate(271)
    assert predicate.describe() == 'perrin(p) mod p not in {0}'


def test_series_congruence_is_undefined_beyond_limit() -> None:
    # Given
    predicate = SeriesCongruence(SeriesKind.DELTA, 23, 2, 100)

    # Then
    assert predicate.evaluate(59) is True
    assert predicate.evaluate(101) is None


def test_evaluation_ignores_undefined_values() -> None:
    assert Evaluation(101, (True, True, None), False).agree
    assert not Evaluation(101, (True, False, None), False).agree
    assert Evaluation(101, (False, False), False).third is None


EVALUATE_DATA: Final = (
    ('padovan-59', 'padovan', 59, (True, True, True, True)),
    ('tribonacci-13', 'tribonacci', 13, (False, False, False)),
    ('tribonacci-47', 'tribonacci', 47, (True, True, True)),
    ('perrin-59', 'perrin', 59, (True, True, True)),
)


@pytest.mark.parametrize(
    'test_id,case_id,p,expected',
    EVALUATE_DATA,
    ids=[test_id for test_id, *_ in EVALUATE_DATA],
)
def test_evaluate(test_id: str, case_id: str, p: int, expected: tuple[bool, ...]) -> None:
    # When
    evaluation = evaluate(find_case(case_id, CASES), p)

    # Then
    assert evaluation.values == expected
    assert evaluation.agree
    assert not evaluation.exceptional


def test_case_needs_two_predicates() -> None:
    with pytest.raises(ValueError, match='at least two predicates'):
        TheoremCase('lonely', Cubic(0, -1, -1), (Represented(FormSpec(23)),), frozenset(), '')


def test_excluded_divisor_marks_primes_exceptional() -> None:
    case = find_case('ex31', CASES)
    assert case.is_exceptional(31)
    assert case.is_exceptional(2)
    assert not case.is_exceptional(47)


def test_sweep_reports_mismatches() -> None:
    # When
    report = sweep(_residue_case(), 30)

    # Then
    assert report.primes_checked == 10
    assert report.mismatches == (5, 7, 17, 19, 29)
    assert report.verdict == 'fail'
    assert not report.passed


def test_sweep_flags_exceptions() -> None:
    # When
    report = sweep(_residue_case(frozenset({5, 13})), 30)

    # Then
    assert report.primes_checked == 8
    assert report.mismatches == (7, 17, 19, 29)
    assert report.flagged_exceptions == (FlaggedPrime(5, True, False), FlaggedPrime(13, True, True))


def test_sweep_bound_is_exclusive() -> None:
    assert sweep(_residue_case(), 29).mismatches == (5, 7, 17, 19)
    assert sweep(_residue_case(), 2).primes_checked == 0


def test_sweep_argument_checks() -> None:
    with pytest.raises(ValueError, match='Sweep bound'):
        sweep(_residue_case(), 1)
    with pytest.raises(ValueError, match='Worker count'):
        sweep(_residue_case(), 100, 0)


@pytest.mark.parametrize('case_id', ['padovan', 'perrin', 'tribonacci', 'berstel', 'cseq', 'ex31', 'table1-n23'])
def test_named_cases_pass_small_sweep(case_id: str) -> None:
    report = sweep(find_case(case_id, CASES), SERIES_LIMIT)
    assert report.passed, report.mismatches


def test_sweep_all() -> None:
    reports = sweep_all(CASES[:3], 500)
    assert [report.case for report in reports] == [case.id for case in CASES[:3]]
    assert all(report.passed for report in reports)


def test_discover_exceptions() -> None:
    padovan = find_case('padovan', CASES)
    assert discover_exceptions(padovan, 30) == [23]
    assert discover_exceptions(padovan, 30, include_inadmissible=True) == [2, 3, 17, 23]
    assert set(discover_exceptions(find_case('table1-n23', CASES), 1000)) <= {3, 23}


def test_discover_exceptions_of_failing_case() -> None:
    assert discover_exceptions(_residue_case(), 30) == [5, 7, 17, 19, 23, 29]


def test_partition() -> None:
    # When
    ranges = _partition(30, 4)

    # Then
    assert ranges[0][0] == 2
    assert ranges[-1][1] == 30
    assert all(hi == lo for (_, hi), (lo, _) in zip(ranges, ranges[1:], strict=False))
    assert _partition(3, 8) == [(2, 3)]


def test_report_dict() -> None:
    # Given
    report = SweepReport('padovan', 30, 8, (), (FlaggedPrime(3, False, False),))

    # When
    dct = report.to_dict()

    # Then
    assert list(dct) == ['case', 'bound', 'primes_checked', 'mismatches', 'flagged_exceptions', 'verdict']
    assert dct['flagged_exceptions'] == [{'p': 3, 'left': False, 'right': False}]
    assert dct['verdict'] == 'pass'
    assert SweepReport.from_dict(dct) == report


def test_report_dict_with_inconsistent_verdict() -> None:
    dct = SweepReport('padovan', 30, 8, (7,)).to_dict() | {'verdict': 'pass'}
    with pytest.raises(ValueError, match='Inconsistent verdict'):
        SweepReport.from_dict(dct)


@pytest.mark.parametrize('case_id', ['tribonacci', 'berstel', 'cseq', 'perrin'])
def test_term_form_and_splitting_agree(case_id: str) -> None:
    # Given
    case = find_case(case_id, CASES)

    for p in primes_in(2, SERIES_LIMIT).primes:
        if case.is_exceptional(p):
            continue
        # When
        left, right = case.left.evaluate(p), case.right.evaluate(p)

        # Then
        assert left == right == (np_gcd(case.cubic, p) == 3), p


def test_evaluate_abelian_case_at_311() -> None:
    # When
    evaluation = evaluate(find_case('ex31', CASES), 311)

    # Then
    assert 311 % 31 == 1
    assert 4 * term_mod(named_spec('ex31'), 310, 311) % 311 == 0
    assert evaluation.values == (True, True, True)
    assert evaluation.agree
