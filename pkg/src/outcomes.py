"""Copyright (C) 2026 Network RADIUS SAS (legal@networkradius.com)

This software may not be redistributed in any form without the prior
written consent of Network RADIUS.

THIS SOFTWARE IS PROVIDED BY THE AUTHOR AND CONTRIBUTORS ``AS IS'' AND
ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE
ARE DISCLAIMED.  IN NO EVENT SHALL THE AUTHOR OR CONTRIBUTORS BE LIABLE
FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS
OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION)
HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT
LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY
OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF
SUCH DAMAGE."""

"""
Outcome classes under misère and normal play.

Outcomes are evaluated on disjunctive sums given as a multiset of component
games, so a sum never has to be interned just to learn who wins it. A single
game is the one-component sum.
"""

import bisect
from collections.abc import Iterable
from enum import Enum

from src.arena import Arena, GameId, get_arena

LEFT = 0
RIGHT = 1


class Outcome(Enum):
    """
    Outcome class of a game, partially ordered by favourability to Left:
    L >= P >= R and L >= N >= R, with P and N incomparable.
    """

    L = "L"
    R = "R"
    P = "P"
    N = "N"

    @classmethod
    def from_predicates(cls, left_first: bool, right_first: bool) -> "Outcome":
        """
        Assemble an outcome from who wins moving first.

        Args:
            left_first (bool): Left wins when Left moves first.
            right_first (bool): Right wins when Right moves first.
        """
        if left_first and right_first:
            return cls.N
        if left_first:
            return cls.L
        if right_first:
            return cls.R
        return cls.P

    def conjugate(self) -> "Outcome":
        """The outcome with the roles of Left and Right exchanged."""
        return {
            Outcome.L: Outcome.R,
            Outcome.R: Outcome.L,
        }.get(self, self)

    def __ge__(self, other: "Outcome") -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return outcome_ge(self, other)

    def __le__(self, other: "Outcome") -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return outcome_ge(other, self)

    def __gt__(self, other: "Outcome") -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return self != other and outcome_ge(self, other)

    def __lt__(self, other: "Outcome") -> bool:
        if not isinstance(other, Outcome):
            return NotImplemented
        return self != other and outcome_ge(other, self)


def outcome_ge(a: Outcome, b: Outcome) -> bool:
    """
    The outcome order.

    Args:
        a (Outcome): Left hand side.
        b (Outcome): Right hand side.

    Returns:
        bool: True if a is at least as good for Left as b.
    """
    return a == b or a == Outcome.L or b == Outcome.R


class OutcomeBound(Enum):
    """
    One-sided outcome bounds used to state what a context certifies.
    """

    AT_MOST_P = "<=P"
    AT_LEAST_P = ">=P"
    AT_MOST_N = "<=N"
    AT_LEAST_N = ">=N"

    def holds(self, outcome: Outcome) -> bool:
        """
        Check the bound against an outcome.

        Args:
            outcome (Outcome): The outcome to test.

        Returns:
            bool: True if the outcome satisfies the bound.
        """
        match self:
            case OutcomeBound.AT_MOST_P:
                return outcome_ge(Outcome.P, outcome)
            case OutcomeBound.AT_LEAST_P:
                return outcome_ge(outcome, Outcome.P)
            case OutcomeBound.AT_MOST_N:
                return outcome_ge(Outcome.N, outcome)
            case OutcomeBound.AT_LEAST_N:
                return outcome_ge(outcome, Outcome.N)
        raise ValueError(f"Unsupported outcome bound: {self}")


def _normalize(arena: Arena, components: Iterable[GameId]) -> tuple:
    # The empty game has no moves, so it never changes who wins a sum
    return tuple(sorted(arena.check(g) for g in components if g != arena.zero))


def _replace(key: tuple, index: int, option: GameId, zero: GameId) -> tuple:
    rest = list(key[:index] + key[index + 1:])
    if option != zero:
        bisect.insort(rest, option)
    return tuple(rest)


def _wins_first(arena: Arena, key: tuple, side: int, normal: bool) -> bool:
    cache = arena.cache(f"{'normal' if normal else 'misere'}.wins_first.{side}")
    found = cache.get(key)
    if found is not None:
        return found

    options_of = arena.left_options if side == LEFT else arena.right_options
    other = RIGHT if side == LEFT else LEFT

    result = False
    moved = False
    previous = None
    for index, component in enumerate(key):
        if component == previous:
            continue
        previous = component
        for option in options_of(component):
            moved = True
            after = _replace(key, index, option, arena.zero)
            if not _wins_first(arena, after, other, normal):
                result = True
                break
        if result:
            break

    # A player with no move wins under misère play and loses under normal play
    if not moved:
        result = not normal

    cache[key] = result
    return result


def left_wins_first(
    game: GameId, normal: bool = False, arena: Arena | None = None
) -> bool:
    """True if Left, moving first on the game, has a winning strategy."""
    arena = arena or get_arena()
    return _wins_first(arena, _normalize(arena, (game,)), LEFT, normal)


def right_wins_first(
    game: GameId, normal: bool = False, arena: Arena | None = None
) -> bool:
    """True if Right, moving first on the game, has a winning strategy."""
    arena = arena or get_arena()
    return _wins_first(arena, _normalize(arena, (game,)), RIGHT, normal)


def sum_outcome(
    components: Iterable[GameId],
    normal: bool = False,
    arena: Arena | None = None,
) -> Outcome:
    """
    Outcome of the disjunctive sum of the components, evaluated without
    interning the sum.

    Args:
        components (Iterable[GameId]): The component games, repeats allowed.
        normal (bool): Use the normal-play convention instead of misère.
        arena (Arena | None): The arena the ids belong to. Defaults to the
            shared arena.

    Returns:
        Outcome: The outcome class of the sum.
    """
    arena = arena or get_arena()
    key = _normalize(arena, components)
    return Outcome.from_predicates(
        _wins_first(arena, key, LEFT, normal),
        _wins_first(arena, key, RIGHT, normal),
    )


def misere_outcome(game: GameId, arena: Arena | None = None) -> Outcome:
    """
    Misère outcome o-(G): a player unable to move wins.

    Args:
        game (GameId): The game.
        arena (Arena | None): The arena the id belongs to.

    Returns:
        Outcome: The misère outcome class.
    """
    return sum_outcome((game,), normal=False, arena=arena)


def normal_outcome(game: GameId, arena: Arena | None = None) -> Outcome:
    """
    Normal-play outcome o+(G): a player unable to move loses.

    Args:
        game (GameId): The game.
        arena (Arena | None): The arena the id belongs to.

    Returns:
        Outcome: The normal-play outcome class.
    """
    return sum_outcome((game,), normal=True, arena=arena)
