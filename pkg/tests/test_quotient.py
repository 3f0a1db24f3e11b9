import dataclasses

import pytest

from src.order import ContractError, ge_misere
from src.outcomes import Outcome, misere_outcome
from src.quotient import (
    MonoidElement,
    QuotientInfeasibleError,
    bounded_quotient,
    element_game,
    refines,
    verify_z_presentation,
    window,
)


@pytest.fixture
def integers(arena):
    return bounded_quotient([arena.one, arena.one_bar], 12, arena=arena)


def test_element_game(arena):
    generators = [arena.one, arena.one_bar]
    assert element_game(generators, MonoidElement((0, 0)), arena=arena) == arena.zero
    assert element_game(generators, MonoidElement((1, 1)), arena=arena) == arena.sum(
        arena.one, arena.one_bar
    )
    with pytest.raises(ContractError):
        element_game(generators, MonoidElement((1,)), arena=arena)


def test_forced_play_outcomes(arena):
    generators = [arena.one, arena.one_bar]
    for a in range(5):
        for b in range(5):
            game = element_game(generators, MonoidElement((a, b)), arena=arena)
            expected = Outcome.N if a == b else Outcome.L if a < b else Outcome.R
            assert misere_outcome(game, arena=arena) == expected


def test_monoid_element():
    x = MonoidElement((1, 2))
    assert x + MonoidElement((0, 3)) == MonoidElement((1, 5))
    assert str(x) == "(1,2)"
    assert len(window(2, 3)) == 16


def test_integer_classes(integers):
    assert len(integers.classes) == 25
    assert integers.ge((0, 1), (0, 0))
    assert not integers.ge((0, 0), (0, 1))
    assert integers.ge((0, 0), (1, 0))
    assert not integers.ge((1, 0), (0, 0))
    assert integers.class_of((1, 1)) == integers.class_of((0, 0))
    assert integers.class_of((3, 5)) == integers.class_of((0, 2))
    assert "12" in integers.caveat


def test_integer_presentation(arena, integers):
    report = verify_z_presentation(integers, arena=arena)
    assert report.passed, report.violations


def test_corrupted_outcome_is_reported(arena, integers):
    index = integers.class_of((0, 0))
    outcomes = list(integers.outcome_of_class)
    outcomes[index] = Outcome.P
    report = verify_z_presentation(
        dataclasses.replace(integers, outcome_of_class=outcomes), arena=arena
    )
    assert not report.outcome_law
    assert not report.passed


def test_integer_presentation_needs_one_and_one_bar(arena):
    presentation = bounded_quotient([arena.star], 3, arena=arena)
    with pytest.raises(ContractError):
        verify_z_presentation(presentation, arena=arena)


def test_refinement(arena, integers):
    coarse = bounded_quotient([arena.one, arena.one_bar], 6, arena=arena)
    assert refines(integers, coarse)


def test_star_quotient(arena):
    # Copies of * only matter through their parity
    presentation = bounded_quotient([arena.star], 6, arena=arena)
    assert len(presentation.classes) == 2
    assert presentation.outcome_of_class[presentation.class_of((0,))] == Outcome.N
    assert presentation.outcome_of_class[presentation.class_of((1,))] == Outcome.P


def test_window_cap(arena):
    with pytest.raises(QuotientInfeasibleError):
        bounded_quotient([arena.one, arena.one_bar], 100, element_cap=4096, arena=arena)
    with pytest.raises(ValueError):
        bounded_quotient([arena.one], 0, arena=arena)


def test_quotient_order_respects_global_order(arena):
    generators = [arena.one, arena.one_bar]
    presentation = bounded_quotient(generators, 3, arena=arena)
    elements = window(len(generators), 3)
    games = {x: element_game(generators, x, arena=arena) for x in elements}
    for x in elements:
        for y in elements:
            if ge_misere(games[x], games[y], arena=arena):
                assert presentation.ge(x, y), (x, y)


def test_quotient_has_relations_absent_globally(arena, integers):
    assert not ge_misere(arena.one_bar, arena.zero, arena=arena)
    assert integers.ge((0, 1), (0, 0))
    assert not integers.ge((0, 0), (0, 1))
