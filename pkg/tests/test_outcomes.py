import pytest

from src.outcomes import (
    Outcome,
    OutcomeBound,
    left_wins_first,
    misere_outcome,
    normal_outcome,
    outcome_ge,
    right_wins_first,
    sum_outcome,
)


@pytest.mark.parametrize(
    "name, misere, normal",
    [
        ("0", Outcome.N, Outcome.P),
        ("*", Outcome.P, Outcome.N),
        ("1", Outcome.R, Outcome.L),
        ("~1", Outcome.L, Outcome.R),
    ],
)
def test_day1_outcomes(arena, day1, name, misere, normal):
    assert misere_outcome(day1[name], arena=arena) == misere
    assert normal_outcome(day1[name], arena=arena) == normal


def test_double_star_is_a_first_player_win(arena):
    # The second player is forced to take the last move
    assert sum_outcome((arena.star, arena.star), arena=arena) == Outcome.N
    assert left_wins_first(arena.sum(arena.star, arena.star), arena=arena)
    assert right_wins_first(arena.sum(arena.star, arena.star), arena=arena)


def test_adjoint_sum_is_p(arena, day1):
    for g in day1.values():
        assert misere_outcome(arena.sum(g, arena.adjoint(g)), arena=arena) == Outcome.P


def test_sum_outcome_matches_interned_sum(day2, day3_sample):
    arena = day2.arena
    games = day2.games[::17] + day3_sample[:5]
    for g in games:
        for h in games:
            for normal in (False, True):
                assert sum_outcome((g, h), normal=normal, arena=arena) == sum_outcome(
                    (arena.sum(g, h),), normal=normal, arena=arena
                )


def test_sum_outcome_drops_zeros(arena):
    assert sum_outcome((arena.zero, arena.one, arena.zero), arena=arena) == Outcome.R
    assert sum_outcome((), arena=arena) == Outcome.N


def test_outcome_order():
    assert outcome_ge(Outcome.L, Outcome.R)
    assert outcome_ge(Outcome.L, Outcome.P)
    assert outcome_ge(Outcome.N, Outcome.R)
    assert not outcome_ge(Outcome.P, Outcome.N)
    assert not outcome_ge(Outcome.N, Outcome.P)
    assert not outcome_ge(Outcome.R, Outcome.L)
    assert all(outcome_ge(o, o) for o in Outcome)


def test_outcome_comparison_operators():
    assert Outcome.L >= Outcome.N
    assert Outcome.R <= Outcome.P
    assert not Outcome.P >= Outcome.N


def test_conjugate_outcome():
    assert Outcome.L.conjugate() == Outcome.R
    assert Outcome.P.conjugate() == Outcome.P
    assert Outcome.N.conjugate() == Outcome.N


def test_outcome_bounds():
    assert OutcomeBound.AT_MOST_P.holds(Outcome.R)
    assert OutcomeBound.AT_MOST_P.holds(Outcome.P)
    assert not OutcomeBound.AT_MOST_P.holds(Outcome.N)
    assert OutcomeBound.AT_LEAST_N.holds(Outcome.L)
    assert not OutcomeBound.AT_LEAST_N.holds(Outcome.P)
    assert OutcomeBound.AT_MOST_N.holds(Outcome.R)
    assert OutcomeBound.AT_LEAST_P.holds(Outcome.L)
    assert not OutcomeBound.AT_LEAST_P.holds(Outcome.N)


def test_conjugate_game_swaps_outcome(day2):
    arena = day2.arena
    for g in day2.games:
        bar = arena.conjugate(g)
        misere, normal = misere_outcome(g, arena=arena), normal_outcome(g, arena=arena)
        assert misere_outcome(bar, arena=arena) == misere.conjugate()
        assert normal_outcome(bar, arena=arena) == normal.conjugate()
