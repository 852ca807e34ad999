from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from ternrec.criteria import Method
from ternrec.cubic import Cubic, RootCount, is_irreducible, np_brute
from ternrec.registry import CAP_U_TABLE, SMALL_U_TABLE, find_case, registry
from ternrec.verifier import TheoremCase, evaluate, sweep

if TYPE_CHECKING:
    from typing import Final

CASES: Final = registry()


def test_registry_ids() -> None:
    ids = [case.id for case in CASES]
    assert len(ids) == 22
    assert len(set(ids)) == len(ids)
    assert ids[:2] == ['table1-n23', 'table1-n31']
    assert ids[-6:] == ['tribonacci', 'padovan', 'perrin', 'berstel', 'cseq', 'ex31']


@pytest.mark.parametrize(
    'n,coefficients,exceptions',
    SMALL_U_TABLE + CAP_U_TABLE,
    ids=[str(n) for n, *_ in SMALL_U_TABLE + CAP_U_TABLE],
)
def test_table_cubics(n: int, coefficients: tuple[int, int, int], exceptions: tuple[int, ...]) -> None:
    # Given
    f = Cubic(*coefficients)

    # Then
    assert f.disc == -n
    assert is_irreducible(f)
    assert n in exceptions
    assert 3 in exceptions


def test_table_case_fields() -> None:
    # When
    small_u = find_case('table1-n23', CASES)
    cap_u = find_case('table2-n907', CASES)

    # Then
    assert small_u.cubic.coefficients == (0, -1, 1)
    assert small_u.exceptions == frozenset({3, 23})
    assert small_u.criterion is Method.U
    assert cap_u.exceptions == frozenset({2, 3, 5, 11, 19, 907})
    assert cap_u.criterion is Method.CAP_U
    assert str(cap_u.right.describe()) == '4p = X^2 + 907Y^2'


def test_named_cases() -> None:
    assert find_case('padovan', CASES).cubic == find_case('perrin', CASES).cubic
    assert find_case('berstel', CASES).cubic.disc == -176
    assert find_case('cseq', CASES).cubic.disc == -31
    assert len(find_case('padovan', CASES).predicates) == 4
    assert find_case('ex31', CASES).excluded_divisor is not None


def test_series_limit_reaches_predicates() -> None:
    padovan = find_case('padovan', registry(500))
    assert padovan.predicates[3].evaluate(499) is not None
    assert padovan.predicates[3].evaluate(503) is None


def test_find_unknown_case() -> None:
    with pytest.raises(ValueError, match='Unknown case: nope'):
        find_case('nope', CASES)


OBSERVED_EXCEPTION_DATA: Final = (
    ('table2-n139', 61),
    ('table2-n883', 23),
    ('table2-n907', 7),
    ('table2-n907', 37),
)


@pytest.mark.parametrize(
    'case_id,p',
    OBSERVED_EXCEPTION_DATA,
    ids=[f'{case_id}-{p}' for case_id, p in OBSERVED_EXCEPTION_DATA],
)
def test_observed_exception_is_a_mismatch(case_id: str, p: int) -> None:
    # Given
    case = find_case(case_id, CASES)

    # When
    evaluation = evaluate(case, p)

    # Then
    assert p in case.observed_exceptions
    assert p not in case.exceptions
    assert not evaluation.exceptional
    assert evaluation.values == (True, False)
    assert np_brute(case.cubic, p) == RootCount.ONE


def test_observed_exceptions_fail_the_sweep() -> None:
    # When
    report = sweep(find_case('table2-n907', CASES), 100)

    # Then
    assert report.mismatches == (7, 37)
    assert report.verdict == 'fail'
    assert find_case('table2-n907', CASES).unrecorded(report.mismatches) == []


def test_observed_exceptions_stay_apart_from_printed_ones() -> None:
    case = find_case('table2-n907', CASES)
    with pytest.raises(ValueError, match='both printed and observed'):
        TheoremCase(
            id='overlap',
            cubic=case.cubic,
            predicates=case.predicates,
            exceptions=frozenset({7}),
            source='overlap',
            observed_exceptions=frozenset({7}),
        )
    assert [c.id for c in CASES if c.observed_exceptions] == ['table2-n139', 'table2-n883', 'table2-n907']
