from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from ternrec.casefile import UserCaseEntry, read_case_file
from ternrec.criteria import Method
from ternrec.cubic import Cubic
from ternrec.quadform import Constraint, FormSpec
from ternrec.verifier import PredicateKind, ResidueClass, sweep

from .utils import TEST_DATA_DIR

if TYPE_CHECKING:
    from pathlib import Path
    from typing import Any, Final

CASE_FILE: Final = TEST_DATA_DIR / 'cases.jsonl'
BAD_CASE_FILE: Final = TEST_DATA_DIR / 'bad-cases.jsonl'


def test_read_case_file() -> None:
    # When
    cases = read_case_file(CASE_FILE)

    # Then
    assert [case.id for case in cases] == ['user-n83', 'user-perrin', 'user-n23', 'user-cubes-31']
    assert cases[0].cubic == Cubic(1, 1, 2)
    assert cases[0].criterion is Method.CAP_U
    assert cases[1].left.kind is PredicateKind.TERM_CONGRUENCE
    assert cases[2].exceptions == frozenset({3, 23})
    assert cases[3].right == ResidueClass(31, (1, 2, 4, 8, 15, 16, 23, 27, 29, 30))
    assert cases[3].excluded_divisor is not None


@pytest.mark.parametrize('index', range(4))
def test_user_cases_pass_small_sweep(index: int) -> None:
    case = read_case_file(CASE_FILE)[index]
    assert sweep(case, 1000).passed


def test_entry_defaults() -> None:
    # When
    entry = UserCaseEntry({'id': 'x', 'a1': 0, 'a2': -1, 'a3': -1, 'kind': 'sun', 'n': 23})

    # Then
    assert entry.form == FormSpec(23, 1, Constraint.NONE)
    assert entry.exceptions == ()
    assert entry.criterion is Method.SUN


BAD_ENTRY_DATA: Final = (
    ('missing-field', {'id': 'x', 'a1': 0, 'a2': -1, 'kind': 'u', 'n': 23}, 'missing field'),
    ('bad-kind', {'id': 'x', 'a1': 0, 'a2': -1, 'a3': 1, 'kind': 'v', 'n': 23}, 'kind must be one of'),
    ('missing-n', {'id': 'x', 'a1': 0, 'a2': -1, 'a3': 1, 'kind': 'u'}, 'missing field "n"'),
    ('bad-m', {'id': 'x', 'a1': 0, 'a2': -1, 'a3': 1, 'kind': 'u', 'n': 23, 'm': 3}, '1 or 4'),
    ('residue-without-modulus', {'id': 'x', 'a1': 0, 'a2': -31, 'a3': 62, 'kind': 'residue'}, 'residue cases need'),
)


@pytest.mark.parametrize(
    'test_id,entry,message',
    BAD_ENTRY_DATA,
    ids=[test_id for test_id, *_ in BAD_ENTRY_DATA],
)
def test_bad_entry(test_id: str, entry: dict[str, Any], message: str) -> None:
    with pytest.raises(ValueError, match=message):
        UserCaseEntry(entry)


def test_invalid_json_reports_line() -> None:
    with pytest.raises(ValueError, match='bad-cases.jsonl:2: invalid JSON'):
        read_case_file(BAD_CASE_FILE)


def test_empty_case_file(tmp_path: Path) -> None:
    # Given
    case_file = tmp_path / 'empty.jsonl'
    case_file.write_text('\n\n')

    # Then
    assert read_case_file(case_file) == []
