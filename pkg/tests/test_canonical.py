import random

import pytest

from src.canonical import (
    StepKind,
    bypass_left,
    canonical_form,
    canonicalize,
    dominated_left,
    dominated_right,
    formal_size,
    is_canonical,
    replay,
    reversible_left,
    reversible_right,
    simplify,
)
from src.census import formal_games
from src.notation.parser import parse_game
from src.order import ContractError, eq_misere, ge_misere


def test_dominated_left(arena):
    g = parse_game("{0,{|*,1}|0}", arena)
    assert dominated_left(g, arena=arena) == {arena.zero}
    assert dominated_left(arena.star, arena=arena) == set()
    assert dominated_right(arena.star, arena=arena) == set()


def test_reversible_options(arena):
    assert reversible_left(arena.star, arena=arena) == set()
    g = parse_game("{{|*,1}|*}", arena)
    assert reversible_right(g, arena=arena) == set()


def test_day2_formal_games_are_canonical(arena):
    for g in formal_games(arena.day1, arena=arena):
        form, trace = canonicalize(g, arena=arena)
        assert form == g
        assert len(trace) == 0
        assert reversible_left(g, arena=arena) == set()
        assert dominated_left(g, arena=arena) == set()


def test_double_star_is_canonical(arena):
    double_star = arena.sum(arena.star, arena.star)
    form = canonical_form(double_star, arena=arena)
    assert form == arena.intern([arena.star], [arena.star])
    assert not eq_misere(form, arena.zero, arena=arena)


def test_dominated_option_is_removed(arena):
    g = parse_game("{0,{|*,1}|*}", arena)
    form, trace = canonicalize(g, arena=arena)
    assert form == parse_game("{{|*,1}|*}", arena)
    assert eq_misere(form, g, arena=arena)
    assert is_canonical(form, arena=arena)
    assert formal_size(form, arena=arena) < formal_size(g, arena=arena)
    assert trace.count(StepKind.REMOVED_DOMINATED_LEFT) + trace.count(
        StepKind.BYPASSED_LEFT
    ) >= 1
    assert replay(g, trace, arena=arena) == form


def test_canonical_form_is_cached_as_fixed_point(arena):
    g = parse_game("{0,{|*,1}|*}", arena)
    form = canonical_form(g, arena=arena)
    again, trace = canonicalize(form, arena=arena)
    assert again == form
    assert len(trace) == 0


def test_bypass_rejects_non_reversible_option(arena):
    with pytest.raises(ContractError):
        bypass_left(arena.star, arena.zero, arena.zero, arena=arena)


def test_bypass_on_sampled_games(day2, day3_sample):
    arena = day2.arena
    for g in day3_sample:
        for option, through in reversible_left(g, arena=arena):
            assert eq_misere(bypass_left(g, option, through, arena=arena), g, arena=arena)


def test_formal_size(arena):
    assert formal_size(arena.zero, arena=arena) == 1
    assert formal_size(arena.star, arena=arena) == 3
    assert formal_size(arena.sum(arena.star, arena.star), arena=arena) == 7


def test_canonical_laws_on_sample(day2, day3_sample):
    arena = day2.arena
    rng = random.Random(7)
    for g in day3_sample:
        form, trace = canonicalize(g, arena=arena)
        assert eq_misere(form, g, arena=arena)
        assert canonical_form(form, arena=arena) == form
        assert is_canonical(form, arena=arena)
        assert replay(g, trace, arena=arena) == form
        assert simplify(g, rng, arena=arena) == form


@pytest.mark.slow
def test_canonical_forms_are_unique_on_day2(arena):
    games = list(formal_games(arena.day1, arena=arena))
    forms = {g: canonical_form(g, arena=arena) for g in games}
    for g in games:
        for h in games:
            equal = ge_misere(g, h, arena=arena) and ge_misere(h, g, arena=arena)
            assert equal == (forms[g] == forms[h])
