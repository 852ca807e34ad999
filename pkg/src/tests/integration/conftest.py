from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

if TYPE_CHECKING:
    from collections.abc import Callable
    from typing import Final

# Reduced bounds keep the default run short; --full-scale restores the published ones.
REDUCED_BOUND: Final = 20_000


@pytest.fixture(scope='session')
def sweep_bound(full_scale: bool) -> Callable[[int], int]:
    def bound(full: int) -> int:
        return full if full_scale else min(full, REDUCED_BOUND)

    return bound
