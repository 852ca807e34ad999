from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

if TYPE_CHECKING:
    from pytest import FixtureRequest, Parser


def pytest_addoption(parser: Parser) -> None:
    parser.addoption(
        '--full-scale',
        action='store_true',
        default=False,
        help='Run acceptance sweeps at their full bounds instead of the reduced ones',
    )
    parser.addoption(
        '--sweep-workers',
        type=int,
        default=2,
        help='Worker processes used by acceptance sweeps',
    )


@pytest.fixture(scope='session')
def full_scale(request: FixtureRequest) -> bool:
    return request.config.getoption('--full-scale')


@pytest.fixture(scope='session')
def sweep_workers(request: FixtureRequest) -> int:
    return request.config.getoption('--sweep-workers')
