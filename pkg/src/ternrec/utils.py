from __future__ import annotations

import os
from argparse import ArgumentTypeError
from typing import TYPE_CHECKING

from rich.console import Console

from .cubic import Cubic
from .modarith import PRIMALITY_CEILING, is_prime

if TYPE_CHECKING:
    from collections.abc import Callable
    from pathlib import Path

console = Console(stderr=True)


def default_jobs() -> int:
    return os.cpu_count() or 1


def bounded_int(lo: int, hi: int) -> Callable[[str], int]:
    def parse(value: str) -> int:
        try:
            number = int(value)
        except ValueError as err:
            raise ArgumentTypeError(f'invalid integer: {value!r}') from err
        if not lo <= number <= hi:
            raise ArgumentTypeError(f'{number} is outside [{lo}, {hi}]')
        return number

    return parse


def prime_int(value: str) -> int:
    number = bounded_int(2, PRIMALITY_CEILING - 1)(value)
    if not is_prime(number):
        raise ArgumentTypeError(f'{number} is not prime')
    return number


def cubic_arg(value: str) -> Cubic:
    try:
        return Cubic.parse(value)
    except ValueError as err:
        raise ArgumentTypeError(str(err)) from err


def write_to_file(file_path: Path, content: str) -> None:
    """Write `content` to `file_path`, replacing any existing file."""
    try:
        with file_path.open('w', encoding='utf-8') as file:
            file.write(content)
    except OSError as err:
        raise ValueError(f'Could not write {file_path}: {err.strerror}') from err


def ternrec_toml_file_contents() -> str:
    return """[sweep.default]
case                       = 'all'
bound                      = 100000
jobs                       = 4
format                     = 'json'
series-limit               = 10000
verbose                    = false
debug                      = false

[sweep.quick]
bound                      = 10000
jobs                       = 1

[discover.default]
bound                      = 10000
jobs                       = 4
inadmissible               = false

[series.default]
limit                      = 10000
verbose                    = false
"""
