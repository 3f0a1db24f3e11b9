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
Append-only arena of structurally interned game positions.

A game is stored once per distinct structure {left options | right options}
and referred to by its GameId, the index of the node in the arena. Option
lists are kept sorted under the structural order so two games with the same
option sets always intern to the same node, whatever order the options were
supplied in.

The arena is a single-writer structure: interning and cache insertion must be
serialized, lookups on already interned ids are plain reads.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import NewType

from src import logging_helper

GameId = NewType("GameId", int)

logger = logging_helper.get_logger("arena")


class MalformedReferenceError(ValueError):
    """
    Exception raised when a GameId does not reference a node of the arena.
    """

    def __init__(self, game_id: object, size: int) -> None:
        super().__init__(
            f"Game id {game_id!r} is not valid in an arena of {size} nodes"
        )
        self.game_id = game_id
        self.size = size


@dataclass(frozen=True)
class GameNode:
    """
    A stored position. Both option lists are sorted under the arena's
    structural order and contain no duplicates.
    """

    left_options: tuple[GameId, ...]
    right_options: tuple[GameId, ...]


class Arena:
    """
    Store of interned games with the structural constructors used throughout
    the engine: disjunctive sum, conjugate and adjoint.
    """

    def __init__(self) -> None:
        self._nodes: list[GameNode] = []
        self._intern_table: dict[tuple[frozenset, frozenset], GameId] = {}
        self._birthdays: list[int] = []
        self._sort_keys: list[tuple] = []
        self._sum_cache: dict[tuple[GameId, GameId], GameId] = {}
        self._conjugate_cache: dict[GameId, GameId] = {}
        self._adjoint_cache: dict[GameId, GameId] = {}
        self._caches: dict[str, dict] = {}

        # The day-1 games always take ids 0..3 in this order
        self.zero = self.intern((), ())
        self.star = self.intern((self.zero,), (self.zero,))
        self.one = self.intern((self.zero,), ())
        self.one_bar = self.intern((), (self.zero,))

    def __len__(self) -> int:
        return len(self._nodes)

    def __iter__(self) -> Iterator[GameId]:
        return (GameId(i) for i in range(len(self._nodes)))

    def __contains__(self, game_id: object) -> bool:
        return (
            isinstance(game_id, int)
            and not isinstance(game_id, bool)
            and 0 <= game_id < len(self._nodes)
        )

    def __repr__(self) -> str:
        return f"Arena(len={len(self._nodes)})"

    @property
    def day1(self) -> tuple[GameId, GameId, GameId, GameId]:
        """The four games born by day 1: 0, *, 1 and ~1."""
        return (self.zero, self.star, self.one, self.one_bar)

    def check(self, game_id: GameId) -> GameId:
        """
        Validate a GameId.

        Raises:
            MalformedReferenceError: If the id does not reference a node.
        """
        if game_id not in self:
            raise MalformedReferenceError(game_id, len(self._nodes))
        return game_id

    def cache(self, name: str) -> dict:
        """
        Get a named memo table bound to this arena.

        Memo tables key on GameIds, so they must live exactly as long as the
        arena that issued those ids.
        """
        table = self._caches.get(name)
        if table is None:
            table = self._caches[name] = {}
        return table

    def intern(
        self, left: Iterable[GameId], right: Iterable[GameId]
    ) -> GameId:
        """
        Get the unique GameId of the game {left | right}.

        Args:
            left (Iterable[GameId]): Left options, duplicates allowed.
            right (Iterable[GameId]): Right options, duplicates allowed.

        Returns:
            GameId: The id of the existing node, or of a newly appended one.

        Raises:
            MalformedReferenceError: If any option id is not valid.
        """
        left_set = frozenset(self.check(g) for g in left)
        right_set = frozenset(self.check(g) for g in right)
        return self._intern_sets(left_set, right_set)

    def _intern_sets(
        self, left_set: frozenset, right_set: frozenset
    ) -> GameId:
        key = (left_set, right_set)
        found = self._intern_table.get(key)
        if found is not None:
            return found

        sort_key = self._sort_keys.__getitem__
        left_options = tuple(sorted(left_set, key=sort_key))
        right_options = tuple(sorted(right_set, key=sort_key))

        birthday = 0
        for option in left_options + right_options:
            birthday = max(birthday, self._birthdays[option] + 1)

        game_id = GameId(len(self._nodes))
        self._nodes.append(GameNode(left_options, right_options))
        self._birthdays.append(birthday)
        self._sort_keys.append(
            (
                birthday,
                tuple(self._sort_keys[g] for g in left_options),
                tuple(self._sort_keys[g] for g in right_options),
            )
        )
        self._intern_table[key] = game_id
        return game_id

    def node(self, game_id: GameId) -> GameNode:
        return self._nodes[self.check(game_id)]

    def left_options(self, game_id: GameId) -> tuple[GameId, ...]:
        return self._nodes[game_id].left_options

    def right_options(self, game_id: GameId) -> tuple[GameId, ...]:
        return self._nodes[game_id].right_options

    def is_left_end(self, game_id: GameId) -> bool:
        """True if the game has no Left option."""
        return not self._nodes[self.check(game_id)].left_options

    def is_right_end(self, game_id: GameId) -> bool:
        """True if the game has no Right option."""
        return not self._nodes[self.check(game_id)].right_options

    def birthday(self, game_id: GameId) -> int:
        """Height of the formal game tree; 0 for the empty game."""
        return self._birthdays[self.check(game_id)]

    def sort_key(self, game_id: GameId) -> tuple:
        """
        Structural sort key: birthday first, then the Left option list, then
        the Right option list, each compared recursively.
        """
        return self._sort_keys[self.check(game_id)]

    def sorted(self, games: Iterable[GameId]) -> list[GameId]:
        """Sort games under the structural order."""
        return sorted(games, key=self.sort_key)

    def sum(self, g: GameId, h: GameId) -> GameId:
        """
        Formal disjunctive sum g + h.

        A move in the sum is a move in exactly one component; the empty game
        is the identity.
        """
        return self._sum(self.check(g), self.check(h))

    def _sum(self, g: GameId, h: GameId) -> GameId:
        if g == self.zero:
            return h
        if h == self.zero:
            return g

        key = (g, h) if g <= h else (h, g)
        found = self._sum_cache.get(key)
        if found is not None:
            return found

        g_node = self._nodes[g]
        h_node = self._nodes[h]
        left = [self._sum(x, h) for x in g_node.left_options]
        left += [self._sum(g, x) for x in h_node.left_options]
        right = [self._sum(x, h) for x in g_node.right_options]
        right += [self._sum(g, x) for x in h_node.right_options]

        result = self._intern_sets(frozenset(left), frozenset(right))
        self._sum_cache[key] = result
        return result

    def sum_all(self, games: Iterable[GameId]) -> GameId:
        """Formal disjunctive sum of any number of games."""
        result = self.zero
        for game in games:
            result = self.sum(result, game)
        return result

    def conjugate(self, game_id: GameId) -> GameId:
        """The game with Left and Right swapped at every level."""
        return self._conjugate(self.check(game_id))

    def _conjugate(self, g: GameId) -> GameId:
        found = self._conjugate_cache.get(g)
        if found is not None:
            return found

        node = self._nodes[g]
        result = self._intern_sets(
            frozenset(self._conjugate(x) for x in node.right_options),
            frozenset(self._conjugate(x) for x in node.left_options),
        )
        self._conjugate_cache[g] = result
        self._conjugate_cache[result] = g
        return result

    def adjoint(self, game_id: GameId) -> GameId:
        """
        The adjoint G°, for which G + G° is always a misère P-position.

            *                   if G = 0
            {(G^R)° | 0}        if G != 0 is a Left end
            {0 | (G^L)°}        if G != 0 is a Right end
            {(G^R)° | (G^L)°}   otherwise
        """
        return self._adjoint(self.check(game_id))

    def _adjoint(self, g: GameId) -> GameId:
        found = self._adjoint_cache.get(g)
        if found is not None:
            return found

        node = self._nodes[g]
        if g == self.zero:
            result = self.star
        else:
            left = frozenset(self._adjoint(x) for x in node.right_options)
            right = frozenset(self._adjoint(x) for x in node.left_options)
            if not node.left_options:
                right = frozenset((self.zero,))
            elif not node.right_options:
                left = frozenset((self.zero,))
            result = self._intern_sets(left, right)

        self._adjoint_cache[g] = result
        return result

    def subpositions(self, games: Iterable[GameId]) -> set[GameId]:
        """All games reachable from the given ones, the games included."""
        seen: set[GameId] = set()
        stack = [self.check(g) for g in games]
        while stack:
            g = stack.pop()
            if g in seen:
                continue
            seen.add(g)
            node = self._nodes[g]
            stack.extend(node.left_options)
            stack.extend(node.right_options)
        return seen


_arena: Arena | None = None


def get_arena() -> Arena:
    """
    Get the process-wide arena, creating it on first use.

    Returns:
        Arena: The shared arena.
    """
    global _arena
    if _arena is None:
        _arena = Arena()
        logger.debug("Created the shared game arena.")
    return _arena


def reset_arena() -> Arena:
    """
    Replace the process-wide arena with a fresh one. Every GameId and memo
    table issued by the old arena becomes meaningless.

    Returns:
        Arena: The new shared arena.
    """
    global _arena
    _arena = Arena()
    logger.debug("Reset the shared game arena.")
    return _arena
