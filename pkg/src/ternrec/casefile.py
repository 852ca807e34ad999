from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .criteria import Method, u_excluded_divisor
from .cubic import Cubic
from .quadform import Constraint, FormSpec
from .recurrence import SequenceKind, spec_from
from .verifier import Represented, ResidueClass, TermCongruence, TheoremCase

if TYPE_CHECKING:
    from pathlib import Path
    from typing import Any, Final

    from .verifier import Predicate

_LOGGER: Final = logging.getLogger(__name__)

_KINDS: Final = ('u', 'capU', 'sun', 'residue')


@dataclass
class UserCaseEntry:
    id: str
    cubic: Cubic
    kind: str
    exceptions: tuple[int, ...]
    form: FormSpec | None
    modulus: int | None
    residues: tuple[int, ...]

    def __init__(self, e: dict[str, Any]) -> None:
        try:
            self.id = str(e['id'])
            self.cubic = Cubic(int(e['a1']), int(e['a2']), int(e['a3']))
            self.kind = e['kind']
            self.exceptions = tuple(sorted(int(p) for p in e.get('exceptions', ())))
        except KeyError as err:
            raise ValueError(f'Case entry is missing field {err.args[0]!r}: {e}') from err

        if self.kind not in _KINDS:
            raise ValueError(f'Case {self.id}: kind must be one of {", ".join(_KINDS)}, got {self.kind!r}')

        if self.kind == 'residue':
            if 'modulus' not in e or 'residues' not in e:
                raise ValueError(f'Case {self.id}: residue cases need "modulus" and "residues"')
            self.form = None
            self.modulus = int(e['modulus'])
            self.residues = tuple(sorted(int(r) % self.modulus for r in e['residues']))
        else:
            if 'n' not in e:
                raise ValueError(f'Case {self.id}: missing field "n"')
            self.form = FormSpec(int(e['n']), int(e.get('m', 1)), Constraint(e.get('constraint', 'none')))
            self.modulus = None
            self.residues = ()

    @property
    def left(self) -> Predicate:
        match self.kind:
            case 'u' | 'residue':
                return TermCongruence(spec_from(SequenceKind.SMALL_U, self.cubic), -1)
            case 'capU':
                return TermCongruence(spec_from(SequenceKind.CAP_U, self.cubic), -1)
            case _:
                target = self.cubic.a1**2 - 2 * self.cubic.a2
                return TermCongruence(spec_from(SequenceKind.SUN_S, self.cubic), 1, residues=(target,))

    @property
    def right(self) -> Predicate:
        if self.form is not None:
            return Represented(self.form)
        assert self.modulus is not None
        return ResidueClass(self.modulus, self.residues)

    @property
    def criterion(self) -> Method:
        return {'u': Method.U, 'residue': Method.U, 'capU': Method.CAP_U, 'sun': Method.SUN}[self.kind]

    def to_case(self) -> TheoremCase:
        return TheoremCase(
            id=self.id,
            cubic=self.cubic,
            predicates=(self.left, self.right),
            exceptions=frozenset(self.exceptions),
            source=f'user case ({self.kind}) for {self.cubic}',
            criterion=self.criterion,
            excluded_divisor=u_excluded_divisor(self.cubic) if self.kind == 'residue' else None,
        )


def read_case_file(path: Path) -> list[TheoremCase]:
    cases = []
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            entry = json.loads(line)
        except json.JSONDecodeError as err:
            raise ValueError(f'{path}:{lineno}: invalid JSON: {err.msg}') from err
        cases.append(UserCaseEntry(entry).to_case())
    _LOGGER.info(f'Loaded {len(cases)} cases from {path}')
    return cases
