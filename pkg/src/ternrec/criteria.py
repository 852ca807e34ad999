from __future__ import annotations

import logging
from enum import Enum
from typing import TYPE_CHECKING, NamedTuple

from .cubic import RootCount
from .modarith import Residue
from .recurrence import SequenceKind, spec_from, term_mod

if TYPE_CHECKING:
    from typing import Final

    from .cubic import Cubic

_LOGGER: Final = logging.getLogger(__name__)


class CriterionInapplicableError(ValueError):
    pass


class InadmissiblePrimeError(ValueError):
    pass


class Method(Enum):
    SUN = 'sun'
    U = 'u'
    CAP_U = 'capu'


class Admissibility(NamedTuple):
    admissible: bool
    excluded_divisor: int


class Classification(NamedTuple):
    value: RootCount
    method: Method
    witness: Residue


def sun_excluded_divisor(f: Cubic) -> int:
    value = 6 * f.disc * (f.a1**2 - 3 * f.a2)
    if value == 0:
        raise CriterionInapplicableError(f'The s-criterion does not apply to {f}: 6*disc*(a1^2 - 3*a2) = 0')
    return value


def u_excluded_divisor(f: Cubic) -> int:
    if not f.is_depressed:
        raise ValueError(f'The u-criterion is stated for depressed cubics only: {f}')
    a2, a3, d = f.a2, f.a3, f.d
    value = (
        6
        * f.disc
        * a2
        * a3
        * ((20 * a2**3 * a3 + 27 * a2**3 + 9 * a2 * d) ** 2 - d * (31 * a2**2 + d) ** 2)
    )
    if value == 0:
        raise CriterionInapplicableError(f'The u-criterion does not apply to {f}: its exclusion expression vanishes')
    return value


def capu_excluded_divisor(f: Cubic) -> int:
    value = 6 * f.disc * (f.a1**2 - 3 * f.a2)
    if value == 0:
        raise CriterionInapplicableError(f'The U-criterion does not apply to {f}: 6*disc*(a1^2 - 3*a2) = 0')
    return value


_EXCLUDED_DIVISORS: Final = {
    Method.SUN: sun_excluded_divisor,
    Method.U: u_excluded_divisor,
    Method.CAP_U: capu_excluded_divisor,
}


def excluded_divisor(f: Cubic, method: Method) -> int:
    return _EXCLUDED_DIVISORS[method](f)


def admissibility(f: Cubic, p: int, method: Method) -> Admissibility:
    divisor = excluded_divisor(f, method)
    return Admissibility(divisor % p != 0, divisor)


def admissible(f: Cubic, p: int, method: Method) -> bool:
    return admissibility(f, p, method).admissible


def sun_admissible(f: Cubic, p: int) -> bool:
    return admissible(f, p, Method.SUN)


def u_admissible(f: Cubic, p: int) -> bool:
    return admissible(f, p, Method.U)


def capu_admissible(f: Cubic, p: int) -> bool:
    return admissible(f, p, Method.CAP_U)


def _require_admissible(f: Cubic, p: int, method: Method) -> None:
    if not admissible(f, p, method):
        raise InadmissiblePrimeError(f'Prime {p} is excluded by the {method.value}-criterion for {f}')


def sun_classify(f: Cubic, p: int) -> Classification:
    _require_admissible(f, p, Method.SUN)
    s = term_mod(spec_from(SequenceKind.SUN_S, f), p + 1, p)
    witness = Residue(s, p)
    if s == (f.a1**2 - 2 * f.a2) % p:
        return Classification(RootCount.THREE, Method.SUN, witness)
    if s == f.a2 % p:
        return Classification(RootCount.ZERO, Method.SUN, witness)
    return Classification(RootCount.ONE, Method.SUN, witness)


def u_classify(f: Cubic, p: int) -> Classification:
    _require_admissible(f, p, Method.U)
    u = term_mod(spec_from(SequenceKind.SMALL_U, f), p - 1, p)
    value = f.disc * u * u % p
    witness = Residue(value, p)
    if value == 0:
        return Classification(RootCount.THREE, Method.U, witness)
    if value == pow(f.a2, 4, p):
        return Classification(RootCount.ZERO, Method.U, witness)
    return Classification(RootCount.ONE, Method.U, witness)


def capu_classify(f: Cubic, p: int) -> Classification:
    _require_admissible(f, p, Method.CAP_U)
    big_u = term_mod(spec_from(SequenceKind.CAP_U, f), p - 1, p)
    value = f.disc * big_u * big_u % p
    witness = Residue(value, p)
    if value == 0:
        return Classification(RootCount.THREE, Method.CAP_U, witness)
    if value == pow(f.a1**2 - 3 * f.a2, 2, p):
        return Classification(RootCount.ZERO, Method.CAP_U, witness)
    return Classification(RootCount.ONE, Method.CAP_U, witness)


_CLASSIFIERS: Final = {
    Method.SUN: sun_classify,
    Method.U: u_classify,
    Method.CAP_U: capu_classify,
}


def classify(f: Cubic, p: int, method: Method) -> Classification:
    classification = _CLASSIFIERS[method](f, p)
    _LOGGER.debug(f'{method.value}-criterion for {f} at p={p}: {classification.value.name} ({classification.witness})')
    return classification
