import random

import pytest

from src.census import (
    B8_ANTICHAINS,
    BooleanLattice,
    InfeasibleError,
    Poset,
    boolean_lattice,
    build_poset,
    check_component_isomorphisms,
    check_generation,
    compares_with_zero,
    count_antichains,
    day3_bound,
    formal_games,
    games_born_by,
    generator_relations,
    impartial_games_born_by,
    impartial_gap,
    sample_formal_games,
)
from src.notation.parser import parse_game
from src.order import ge_trivial


def test_census_sizes(day2):
    assert [len(games) for games in day2.census.per_day] == [1, 4, 256]
    assert day2.census.per_day[0] == {day2.arena.zero}
    assert day2.census.per_day[1] == set(day2.arena.day1)
    assert day2.census.day == 2


def test_census_above_cap(arena):
    with pytest.raises(InfeasibleError) as e:
        games_born_by(3, arena=arena)
    assert e.value.requested == 3
    assert e.value.cap == 2


def test_formal_games_count(arena):
    assert len(list(formal_games(arena.day1, arena=arena))) == 256
    assert list(formal_games([], arena=arena)) == [arena.zero]


def test_partition(day2):
    partition = day2.partition
    assert partition.sizes() == (15, 15, 225, 1)
    assert partition.component_of(day2.arena.zero) == "origin"
    assert partition.component_of(day2.arena.one_bar) == "plus"
    assert partition.component_of(day2.arena.one) == "minus"
    assert partition.component_of(day2.arena.star) == "zero_part"


def test_day1_poset_is_an_antichain(arena):
    poset = build_poset(arena.day1, arena=arena)
    assert poset.relation == [[i == j for j in range(4)] for i in range(4)]


def test_day2_poset_is_a_partial_order(day2):
    assert len(day2.poset) == 256
    assert day2.poset.is_reflexive()
    assert day2.poset.is_antisymmetric()
    assert day2.poset.is_transitive()


def test_component_isomorphisms(day2):
    reports = check_component_isomorphisms(
        day2.partition, day2.poset, arena=day2.arena
    )
    assert [(r.component, r.size, r.target_size) for r in reports] == [
        ("plus", 15, 15),
        ("minus", 15, 15),
        ("zero_part", 225, 225),
    ]
    assert all(r.passed for r in reports)


def test_corrupted_relation_is_reported(day2):
    poset = day2.poset.copy()
    g, h = sorted(day2.partition.plus, key=day2.arena.sort_key)[:2]
    i, j = poset.index(g), poset.index(h)
    poset.relation[i][j] = not poset.relation[i][j]
    plus = check_component_isomorphisms(day2.partition, poset, arena=day2.arena)[0]
    assert not plus.passed
    assert (g, h) in plus.violations


def test_trivial_order_within_components(day2):
    arena = day2.arena
    partition = day2.partition
    for g in day2.games:
        for h in day2.games:
            if partition.component_of(g) == partition.component_of(h):
                assert day2.poset.ge(g, h) == ge_trivial(g, h, arena=arena)


def test_generation(day2):
    report = check_generation(day2.partition, day2.poset, arena=day2.arena)
    assert report.relations_hold
    assert report.missing == []
    assert report.extra == []
    assert report.closure_pairs == report.relation_pairs


def test_generation_needs_every_relation(day2):
    arena = day2.arena
    first = generator_relations(arena)[0]
    assert first == (parse_game("{|*,1}", arena), arena.zero)
    report = check_generation(day2.partition, day2.poset, omit=[first], arena=arena)
    assert first in report.missing
    assert report.closure_pairs < report.relation_pairs


def test_count_antichains():
    assert count_antichains(BooleanLattice(4)) == 168
    identity = Poset(list(range(4)), [[i == j for j in range(4)] for i in range(4)])
    assert count_antichains(identity) == 16
    chain = Poset([0, 1], [[True, True], [False, True]])
    assert count_antichains(chain) == 3


def test_component_antichains(day2):
    assert count_antichains(day2.poset.restrict(day2.partition.plus)) == 167
    assert count_antichains(day2.poset.restrict(day2.partition.minus)) == 167


def test_antichain_cap():
    with pytest.raises(InfeasibleError):
        count_antichains(BooleanLattice(5), cap=24)


def test_boolean_lattice():
    lattice = boolean_lattice(3)
    assert len(lattice) == 8
    assert lattice.ge(frozenset({0, 1}), frozenset({1}))
    assert not lattice.ge(frozenset({0}), frozenset({1}))
    assert lattice.cover_graph().number_of_edges() == 12


def test_day3_bound():
    bound = day3_bound()
    assert bound.m == 2 * 167 * 167 * 56130437228687557907788
    assert B8_ANTICHAINS == 56130437228687557907788
    assert bound.m_squared == bound.m**2
    assert bound.log2_floor in (182, 183)
    assert bound.m_squared < 2**512
    assert 2**bound.log2_floor <= bound.m_squared < 2 ** (bound.log2_floor + 1)


def test_impartial_games(arena):
    assert [len(impartial_games_born_by(d, arena=arena)) for d in range(4)] == [
        1,
        2,
        4,
        16,
    ]
    with pytest.raises(InfeasibleError):
        impartial_games_born_by(5, arena=arena)


def test_impartial_gap_small(arena):
    assert impartial_gap(impartial_games_born_by(3, arena=arena), arena=arena) == []
    assert impartial_gap([arena.one], arena=arena) == [arena.one]


@pytest.mark.slow
def test_impartial_gap_day4(arena):
    games = impartial_games_born_by(4, arena=arena)
    assert len(games) == 65536
    assert impartial_gap(games, arena=arena) == []


def test_compares_with_zero(day2):
    arena = day2.arena
    above, below = compares_with_zero(day2.census, arena=arena)
    star_one = {arena.star, arena.one}
    expected = {arena.zero} | {
        g
        for g in day2.partition.plus
        if set(arena.right_options(g)) <= star_one
    }
    assert above == expected
    assert below == {arena.conjugate(g) for g in above}


def test_sample_formal_games(day2):
    first = sample_formal_games(
        day2.census.per_day[2], 5, random.Random(1), arena=day2.arena
    )
    second = sample_formal_games(
        day2.census.per_day[2], 5, random.Random(1), arena=day2.arena
    )
    assert first == second
    assert all(day2.arena.birthday(g) <= 3 for g in first)
