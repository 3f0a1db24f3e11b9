import pytest

from src.order import ContractError, ge_misere
from src.outcomes import Outcome, OutcomeBound, sum_outcome
from src.witnesses import (
    WitnessKind,
    distinguish,
    downlink_witness,
    failing_condition,
    uplink_witness,
    witness_a,
    witness_b,
)


def test_star_against_zero(arena):
    # The Right option 0 of * is downlinked to 0 by *
    assert failing_condition(arena.star, arena.zero, arena=arena) == ("ii", arena.zero)

    b = witness_b(arena.star, arena.zero, arena=arena)
    assert b.kind == WitnessKind.FORM_B
    assert b.context == arena.star

    a = witness_a(arena.star, arena.zero, arena=arena)
    assert a.context == arena.intern([arena.star], [arena.star])
    g_outcome, h_outcome = a.outcomes(arena=arena)
    assert OutcomeBound.AT_MOST_P.holds(g_outcome)
    assert OutcomeBound.AT_LEAST_N.holds(h_outcome)


def test_left_end_context(arena):
    # H = 0 is a Left end and 1 is not
    assert failing_condition(arena.one, arena.zero, arena=arena) == ("iii", None)

    b = witness_b(arena.one, arena.zero, arena=arena)
    assert b.context == arena.intern([], [arena.intern([], [arena.star])])
    assert b.verify(arena=arena)
    assert witness_a(arena.one, arena.zero, arena=arena).verify(arena=arena)


def test_right_end_context(arena):
    # G = 0 is a Right end and ~1 is not
    assert failing_condition(arena.zero, arena.one_bar, arena=arena) == ("iv", None)
    assert witness_a(arena.zero, arena.one_bar, arena=arena).verify(arena=arena)
    assert witness_b(arena.zero, arena.one_bar, arena=arena).verify(arena=arena)


def test_zero_against_one(arena):
    a = witness_a(arena.zero, arena.one, arena=arena)
    assert a.certified == (
        (arena.zero, OutcomeBound.AT_MOST_P),
        (arena.one, OutcomeBound.AT_LEAST_N),
    )
    assert a.verify(arena=arena)
    assert witness_b(arena.zero, arena.one, arena=arena).verify(arena=arena)


def test_witness_requires_unordered_pair(arena):
    with pytest.raises(ContractError):
        witness_a(arena.star, arena.star, arena=arena)
    with pytest.raises(ContractError):
        witness_b(arena.star, arena.star, arena=arena)
    assert failing_condition(arena.one, arena.one, arena=arena) is None


def test_downlink_witness(arena):
    w = downlink_witness(arena.zero, arena.zero, arena=arena)
    assert w.context == arena.star

    w = downlink_witness(arena.zero, arena.one, arena=arena)
    assert sum_outcome((arena.zero, w.context), arena=arena) in (Outcome.P, Outcome.R)
    assert sum_outcome((arena.one, w.context), arena=arena) in (Outcome.P, Outcome.L)

    w = downlink_witness(arena.star, arena.one, arena=arena)
    assert w.verify(arena=arena)


def test_downlink_witness_requires_link(arena):
    # 1 >= 0 fails only through its Left option, so 1 is not downlinked to 0
    with pytest.raises(ContractError):
        downlink_witness(arena.one, arena.zero, arena=arena)


def test_uplink_witness(arena):
    w = uplink_witness(arena.one, arena.star, arena=arena)
    assert w.kind == WitnessKind.UPLINK_CONTEXT
    assert w.context == downlink_witness(arena.star, arena.one, arena=arena).context
    assert w.verify(arena=arena)


def test_distinguish(arena):
    w = distinguish(arena.one, arena.zero, arena=arena)
    g_outcome, h_outcome = w.outcomes(arena=arena)
    assert not g_outcome >= h_outcome


def test_witness_order_of_conditions(day2):
    arena = day2.arena
    for g in day2.games[::5]:
        for h in day2.games[::3]:
            found = failing_condition(g, h, arena=arena)
            assert (found is None) == ge_misere(g, h, arena=arena)


@pytest.mark.slow
def test_witnesses_verify_on_day2(day2):
    arena = day2.arena
    for g in day2.games:
        for h in day2.games:
            if ge_misere(g, h, arena=arena):
                continue
            assert witness_a(g, h, arena=arena).verify(arena=arena)
            assert witness_b(g, h, arena=arena).verify(arena=arena)
