from __future__ import annotations

import random
from typing import TYPE_CHECKING

import pytest

from ternrec.cubic import Cubic, RootCount, is_abelian, is_irreducible, np_brute, np_gcd, rational_roots
from ternrec.modarith import primes_in

if TYPE_CHECKING:
    from typing import Final


DISCRIMINANT_DATA: Final = (
    ('padovan', Cubic(0, -1, -1), -23),
    ('berstel', Cubic(-2, 4, -4), -176),
    ('table2-n83', Cubic(1, 1, 2), -83),
    ('table2-n331', Cubic(-2, 4, 1), -331),
    ('cseq', Cubic(-1, 0, -1), -31),
    ('abelian', Cubic(0, -31, 62), 15376),
    ('triple-root', Cubic(0, 0, 0), 0),
)


@pytest.mark.parametrize(
    'test_id,f,expected',
    DISCRIMINANT_DATA,
    ids=[test_id for test_id, *_ in DISCRIMINANT_DATA],
)
def test_discriminant(test_id: str, f: Cubic, expected: int) -> None:
    assert f.disc == expected


def test_parse() -> None:
    assert Cubic.parse('1, 1,2') == Cubic(1, 1, 2)
    assert Cubic.parse('0,-1,-1').coefficients == (0, -1, -1)
    with pytest.raises(ValueError, match='three comma-separated'):
        Cubic.parse('1,2')
    with pytest.raises(ValueError, match='Non-integer'):
        Cubic.parse('a,1,2')


def test_str() -> None:
    assert str(Cubic(0, -1, -1)) == 'x^3 - x - 1'
    assert str(Cubic(1, 1, 2)) == 'x^3 + x^2 + x + 2'
    assert str(Cubic(-2, 4, -4)) == 'x^3 - 2x^2 + 4x - 4'
    assert str(Cubic(0, 0, 0)) == 'x^3'


def test_evaluate() -> None:
    f = Cubic(1, 1, 2)
    assert [f(x) for x in range(-2, 3)] == [x**3 + x**2 + x + 2 for x in range(-2, 3)]


def test_rational_roots() -> None:
    assert rational_roots(Cubic(0, 0, -1)) == [1]
    assert rational_roots(Cubic(0, -1, 0)) == [-1, 0, 1]
    assert rational_roots(Cubic(0, -1, -1)) == []
    assert rational_roots(Cubic(-6, 11, -6)) == [1, 2, 3]


IRREDUCIBLE_DATA: Final = (
    ('x3-1', Cubic(0, 0, -1), False),
    ('x3-x', Cubic(0, -1, 0), False),
    ('x3-31x+62', Cubic(0, -31, 62), True),
    ('padovan', Cubic(0, -1, -1), True),
    ('tribonacci', Cubic(-1, -1, -1), True),
)


@pytest.mark.parametrize(
    'test_id,f,expected',
    IRREDUCIBLE_DATA,
    ids=[test_id for test_id, *_ in IRREDUCIBLE_DATA],
)
def test_is_irreducible(test_id: str, f: Cubic, expected: bool) -> None:
    assert is_irreducible(f) == expected


def test_is_abelian() -> None:
    assert is_abelian(Cubic(0, -31, 62))
    assert is_abelian(Cubic(0, -3, 1))
    assert not is_abelian(Cubic(0, -1, -1))
    # Square discriminant but reducible.
    assert not is_abelian(Cubic(-6, 11, -6))


ROOT_COUNT_DATA: Final = (
    ('padovan-59', Cubic(0, -1, -1), 59, RootCount.THREE),
    ('padovan-23', Cubic(0, -1, -1), 23, RootCount.TWO),
    ('x3+x+1-5', Cubic(0, 1, 1), 5, RootCount.ZERO),
    ('x3+x+1-11', Cubic(0, 1, 1), 11, RootCount.ONE),
    ('x3+x+1-47', Cubic(0, 1, 1), 47, RootCount.THREE),
    ('triple-root-7', Cubic(0, 0, 0), 7, RootCount.ONE),
)


@pytest.mark.parametrize(
    'test_id,f,p,expected',
    ROOT_COUNT_DATA,
    ids=[test_id for test_id, *_ in ROOT_COUNT_DATA],
)
def test_root_count(test_id: str, f: Cubic, p: int, expected: RootCount) -> None:
    assert np_brute(f, p) == expected
    assert np_gcd(f, p) == expected


@pytest.mark.parametrize(
    'f',
    [Cubic(0, -1, -1), Cubic(1, 1, 2), Cubic(-1, -1, -1), Cubic(-2, 4, -4), Cubic(0, -31, 62), Cubic(-6, 11, -6)],
    ids=str,
)
def test_np_gcd_matches_brute_force(f: Cubic) -> None:
    for p in primes_in(2, 1500).primes:
        assert np_gcd(f, p) == np_brute(f, p), p


def test_np_brute_limit() -> None:
    with pytest.raises(ValueError, match='Brute-force'):
        np_brute(Cubic(0, -1, -1), 1_000_003)
    assert np_gcd(Cubic(0, -1, -1), 1_000_003) in tuple(RootCount)


def _random_cubics(seed: int, count: int) -> list[Cubic]:
    rng = random.Random(seed)
    return [Cubic(rng.randint(-50, 50), rng.randint(-50, 50), rng.randint(-50, 50)) for _ in range(count)]


def test_np_gcd_matches_brute_force_on_random_cubics() -> None:
    primes = primes_in(2, 2000).primes
    for f in _random_cubics(1501, 200):
        for p in primes:
            assert np_gcd(f, p) == np_brute(f, p), (f, p)


SPLITTING_TYPE_DATA: Final = (
    ('padovan', Cubic(0, -1, -1), {0, 1, 3}),
    ('tribonacci', Cubic(-1, -1, -1), {0, 1, 3}),
    ('table2-n907', Cubic(5, 1, 2), {0, 1, 3}),
    ('abelian-31', Cubic(0, -31, 62), {0, 3}),
    ('abelian-9', Cubic(0, -3, 1), {0, 3}),
)


@pytest.mark.parametrize(
    'test_id,f,allowed',
    SPLITTING_TYPE_DATA,
    ids=[test_id for test_id, *_ in SPLITTING_TYPE_DATA],
)
def test_root_count_at_unramified_primes(test_id: str, f: Cubic, allowed: set[int]) -> None:
    # Given
    assert is_abelian(f) == (allowed == {0, 3})

    # When
    counts = {np_gcd(f, p) for p in primes_in(2, 5000).primes if (6 * f.disc) % p}

    # Then
    assert counts == allowed
