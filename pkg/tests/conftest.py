"""Shared fixtures for the engine tests."""

import random
from dataclasses import dataclass

import pytest

from src.arena import Arena, GameId
from src.census import (
    Census,
    Day2Partition,
    Poset,
    build_poset,
    classify_day2,
    games_born_by,
    sample_formal_games,
)

SAMPLE_SEED = 20260918


@dataclass
class Day2:
    arena: Arena
    census: Census
    partition: Day2Partition
    poset: Poset

    @property
    def games(self) -> list[GameId]:
        return self.poset.elements


@pytest.fixture
def arena() -> Arena:
    """A fresh arena for tests that build their own games."""
    return Arena()


@pytest.fixture
def day1(arena):
    """The day-1 games by name."""
    return {
        "0": arena.zero,
        "*": arena.star,
        "1": arena.one,
        "~1": arena.one_bar,
    }


@pytest.fixture(scope="session")
def day2() -> Day2:
    """The day-2 census with its order, built once per test session."""
    arena = Arena()
    census = games_born_by(2, arena=arena)
    return Day2(
        arena,
        census,
        classify_day2(census, arena=arena),
        build_poset(census.per_day[2], arena=arena),
    )


@pytest.fixture(scope="session")
def day3_sample(day2) -> list[GameId]:
    """Formal day-3 games drawn with a fixed seed."""
    return sample_formal_games(
        day2.census.per_day[2], 60, random.Random(SAMPLE_SEED), arena=day2.arena
    )
