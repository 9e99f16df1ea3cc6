"""Direct checks of the bitmask cover engine against exhaustive search."""

import random
from itertools import combinations

import pytest

from metricdim.cover import CoverSystem


def brute_min_cover(masks, universe):
    best = None
    for k in range(len(masks) + 1):
        for subset in combinations(range(len(masks)), k):
            cov = 0
            for i in subset:
                cov |= masks[i]
            if cov | 0 == universe and cov == universe:
                return k, subset
    return best


def test_min_cover_matches_exhaustive():
    rng = random.Random(99)
    for _ in range(60):
        nbits = rng.randint(1, 10)
        nsets = rng.randint(1, 8)
        universe = (1 << nbits) - 1
        masks = [rng.randrange(1, 1 << nbits) for _ in range(nsets)]
        if CoverSystem(masks, universe).owners.count(0):
            continue  # some element uncoverable
        system = CoverSystem(masks, universe)
        size, witness = system.min_cover()
        expected_size, _ = brute_min_cover(masks, universe)
        assert size == expected_size
        cov = 0
        for i in witness:
            cov |= masks[i]
        assert cov == universe


def test_min_cover_raises_when_infeasible():
    system = CoverSystem([0b001, 0b010], 0b111)
    with pytest.raises(ValueError):
        system.min_cover()


def test_exists_cover_budget_semantics():
    system = CoverSystem([0b011, 0b100, 0b110], 0b111)
    assert system.exists_cover(2)
    assert not system.exists_cover(1)
    assert not system.exists_cover(0)
    assert system.exists_cover(0, pre_covered=0b111)
    assert not system.exists_cover(-1)


def test_lex_least_cover_is_least():
    rng = random.Random(7)
    for _ in range(40):
        nbits = rng.randint(1, 8)
        nsets = rng.randint(2, 8)
        universe = (1 << nbits) - 1
        masks = [rng.randrange(1, 1 << nbits) for _ in range(nsets)]
        system = CoverSystem(masks, universe)
        if any(own == 0 for own in system.owners):
            continue
        size, _ = system.min_cover()
        witness = system.lex_least_cover(size)
        expected = min(
            subset
            for subset in combinations(range(nsets), size)
            if self_union(masks, subset) == universe
        )
        assert tuple(witness) == expected


def self_union(masks, subset):
    cov = 0
    for i in subset:
        cov |= masks[i]
    return cov


def test_allowed_restriction():
    masks = [0b111, 0b011, 0b100]
    system = CoverSystem(masks, 0b111)
    assert system.min_cover()[0] == 1
    size, witness = system.min_cover(allowed=0b110)  # forbid the full set
    assert size == 2 and sorted(witness) == [1, 2]
