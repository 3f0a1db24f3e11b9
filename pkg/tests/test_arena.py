import pytest

from src.arena import MalformedReferenceError, get_arena, reset_arena


def test_day1_ids(arena):
    assert arena.day1 == (0, 1, 2, 3)
    assert len(arena) == 4


def test_intern_is_idempotent(arena):
    star = arena.intern([arena.zero], [arena.zero])
    assert star == arena.star
    assert arena.intern([arena.zero], [arena.zero]) == star
    assert arena.intern((), ()) == arena.zero


def test_intern_ignores_order_and_duplicates(arena):
    g = arena.intern([arena.star, arena.one, arena.star], [arena.zero])
    h = arena.intern([arena.one, arena.star], [arena.zero, arena.zero])
    assert g == h
    assert len(set(arena.left_options(g))) == len(arena.left_options(g))


def test_intern_rejects_unknown_ids(arena):
    with pytest.raises(MalformedReferenceError) as e:
        arena.intern([99], [])
    assert e.value.game_id == 99
    with pytest.raises(MalformedReferenceError):
        arena.birthday(-1)


def test_sum(arena):
    double_star = arena.sum(arena.star, arena.star)
    assert double_star == arena.intern([arena.star], [arena.star])
    for g in arena.day1:
        assert arena.sum(arena.zero, g) == g
        assert arena.sum(g, arena.zero) == g
    assert arena.sum(arena.one, arena.star) == arena.sum(arena.star, arena.one)


def test_sum_identity_on_day2(day2):
    arena = day2.arena
    for g in day2.games:
        assert arena.sum(arena.zero, g) == g


def test_conjugate(arena):
    assert arena.conjugate(arena.one) == arena.one_bar
    assert arena.conjugate(arena.star) == arena.star
    g = arena.intern([arena.star], [arena.star, arena.one])
    assert arena.conjugate(arena.conjugate(g)) == g


def test_conjugate_involution_on_day2(day2):
    arena = day2.arena
    assert all(arena.conjugate(arena.conjugate(g)) == g for g in day2.games)


def test_adjoint(arena):
    assert arena.adjoint(arena.zero) == arena.star
    assert arena.adjoint(arena.one) == arena.intern([arena.zero], [arena.star])
    assert arena.adjoint(arena.star) == arena.intern([arena.star], [arena.star])
    assert arena.adjoint(arena.one_bar) == arena.intern([arena.star], [arena.zero])


def test_ends(arena):
    assert arena.is_left_end(arena.zero)
    assert arena.is_left_end(arena.one_bar)
    assert not arena.is_left_end(arena.star)
    assert arena.is_right_end(arena.one)


def test_birthday(arena):
    assert arena.birthday(arena.zero) == 0
    assert arena.birthday(arena.star) == 1
    g = arena.intern([arena.star], [arena.star, arena.one])
    assert arena.birthday(g) == 2


def test_structural_order(arena):
    assert arena.sorted(arena.day1) == [
        arena.zero,
        arena.one_bar,
        arena.one,
        arena.star,
    ]


def test_subpositions(arena):
    g = arena.intern([arena.star], [arena.one])
    assert arena.subpositions([g]) == {g, arena.star, arena.one, arena.zero}


def test_caches_are_per_arena(arena):
    arena.cache("test")["key"] = 1
    assert arena.cache("test") == {"key": 1}
    assert "key" not in reset_arena().cache("test")


def test_shared_arena():
    fresh = reset_arena()
    assert get_arena() is fresh
    assert get_arena() is get_arena()


@pytest.mark.slow
def test_birthday_of_sum(day2):
    arena = day2.arena
    for g in day2.games:
        for h in day2.games:
            assert arena.birthday(arena.sum(g, h)) == arena.birthday(g) + arena.birthday(h)


def test_adjoint_is_never_a_right_end(day2, day3_sample):
    arena = day2.arena
    for g in [*day2.games, *day3_sample]:
        assert not arena.is_right_end(arena.adjoint(g)), g
