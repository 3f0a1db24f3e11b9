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
Order relations between games.

The misère order is decided by the recursive downlink test rather than by
quantifying over contexts:

    G >= H  iff  G is downlinked to no H^L, no G^R is downlinked to H,
                 H a Left end implies G a Left end, and
                 G a Right end implies H a Right end;

    G is downlinked to H  iff  no G^L >= H and G >= no H^R.

Every recursive call strictly lowers the sum of the two birthdays.
"""

from dataclasses import dataclass

from src.arena import Arena, GameId, get_arena


class ContractError(ValueError):
    """
    Exception raised when an operation is called outside its precondition.
    """

    def __init__(self, message: str, games: tuple = ()) -> None:
        super().__init__(message)
        self.message = message
        self.games = games


@dataclass
class OrderStats:
    """
    Counters for the mutually recursive order test.
    """

    ge_calls: int = 0
    downlink_calls: int = 0
    measure_checks: int = 0
    measure_violations: int = 0

    def observe(self, parent: int, child: int) -> None:
        self.measure_checks += 1
        if child >= parent:
            self.measure_violations += 1


def order_stats(arena: Arena | None = None) -> OrderStats:
    """
    Get the recursion counters of an arena's order memo.

    Args:
        arena (Arena | None): The arena. Defaults to the shared arena.

    Returns:
        OrderStats: Counters accumulated since the arena was created.
    """
    arena = arena or get_arena()
    table = arena.cache("order.stats")
    if "stats" not in table:
        table["stats"] = OrderStats()
    return table["stats"]


def _ge(arena: Arena, g: GameId, h: GameId) -> bool:
    cache = arena.cache("order.ge")
    key = (g, h)
    found = cache.get(key)
    if found is not None:
        return found

    stats = order_stats(arena)
    stats.ge_calls += 1
    measure = arena.birthday(g) + arena.birthday(h)

    g_left, g_right = arena.left_options(g), arena.right_options(g)
    h_left, h_right = arena.left_options(h), arena.right_options(h)

    result = True
    if not h_left and g_left:
        result = False
    elif not g_right and h_right:
        result = False
    else:
        for h_l in h_left:
            stats.observe(measure, arena.birthday(g) + arena.birthday(h_l))
            if _downlinked(arena, g, h_l):
                result = False
                break
        if result:
            for g_r in g_right:
                stats.observe(measure, arena.birthday(g_r) + arena.birthday(h))
                if _downlinked(arena, g_r, h):
                    result = False
                    break

    cache[key] = result
    return result


def _downlinked(arena: Arena, g: GameId, h: GameId) -> bool:
    cache = arena.cache("order.downlinked")
    key = (g, h)
    found = cache.get(key)
    if found is not None:
        return found

    stats = order_stats(arena)
    stats.downlink_calls += 1
    measure = arena.birthday(g) + arena.birthday(h)

    result = True
    for g_l in arena.left_options(g):
        stats.observe(measure, arena.birthday(g_l) + arena.birthday(h))
        if _ge(arena, g_l, h):
            result = False
            break
    if result:
        for h_r in arena.right_options(h):
            stats.observe(measure, arena.birthday(g) + arena.birthday(h_r))
            if _ge(arena, g, h_r):
                result = False
                break

    cache[key] = result
    return result


def ge_misere(g: GameId, h: GameId, arena: Arena | None = None) -> bool:
    """
    Decide G >= H in misère play.

    Args:
        g (GameId): Left hand side.
        h (GameId): Right hand side.
        arena (Arena | None): The arena the ids belong to.

    Returns:
        bool: True if o-(G+X) >= o-(H+X) for every game X.
    """
    arena = arena or get_arena()
    return _ge(arena, arena.check(g), arena.check(h))


def downlinked(g: GameId, h: GameId, arena: Arena | None = None) -> bool:
    """
    Decide whether G is downlinked to H, i.e. whether some T has
    o-(G+T) <= P and o-(H+T) >= P.

    Args:
        g (GameId): The game pushed down.
        h (GameId): The game held up.
        arena (Arena | None): The arena the ids belong to.

    Returns:
        bool: True if no G^L >= H and G >= no H^R.
    """
    arena = arena or get_arena()
    return _downlinked(arena, arena.check(g), arena.check(h))


def uplinked(g: GameId, h: GameId, arena: Arena | None = None) -> bool:
    """
    Decide whether G is uplinked to H: o-(G+T) >= P and o-(H+T) <= P for
    some T. This is exactly H downlinked to G.
    """
    return downlinked(h, g, arena=arena)


def eq_misere(g: GameId, h: GameId, arena: Arena | None = None) -> bool:
    """Misère equality: G >= H and H >= G."""
    return ge_misere(g, h, arena=arena) and ge_misere(h, g, arena=arena)


def _ge_normal(arena: Arena, g: GameId, h: GameId) -> bool:
    cache = arena.cache("order.ge_normal")
    key = (g, h)
    found = cache.get(key)
    if found is not None:
        return found

    result = not any(
        _ge_normal(arena, h, g_r) for g_r in arena.right_options(g)
    ) and not any(_ge_normal(arena, h_l, g) for h_l in arena.left_options(h))

    cache[key] = result
    return result


def ge_normal(g: GameId, h: GameId, arena: Arena | None = None) -> bool:
    """
    Decide G >= H in normal play: no G^R <= H and G <= no H^L.

    Args:
        g (GameId): Left hand side.
        h (GameId): Right hand side.
        arena (Arena | None): The arena the ids belong to.

    Returns:
        bool: True if G >= H under the normal-play convention.
    """
    arena = arena or get_arena()
    return _ge_normal(arena, arena.check(g), arena.check(h))


def eq_normal(g: GameId, h: GameId, arena: Arena | None = None) -> bool:
    """Normal-play equality."""
    return ge_normal(g, h, arena=arena) and ge_normal(h, g, arena=arena)


def ge_trivial(g: GameId, h: GameId, arena: Arena | None = None) -> bool:
    """
    Decide whether G trivially exceeds H: the Left options of G contain
    those of H, the Right options of G are contained in those of H, and
    both games agree on being Left ends and on being Right ends.
    """
    arena = arena or get_arena()
    g_node = arena.node(g)
    h_node = arena.node(h)
    return (
        set(g_node.left_options) >= set(h_node.left_options)
        and set(g_node.right_options) <= set(h_node.right_options)
        and (not g_node.left_options) == (not h_node.left_options)
        and (not g_node.right_options) == (not h_node.right_options)
    )


def compare(
    g: GameId, h: GameId, normal: bool = False, arena: Arena | None = None
) -> str:
    """
    Compare two games.

    Args:
        g (GameId): Left hand side.
        h (GameId): Right hand side.
        normal (bool): Use the normal-play order instead of the misère one.
        arena (Arena | None): The arena the ids belong to.

    Returns:
        str: One of "=", ">", "<" or "||" (incomparable).
    """
    ge = ge_normal if normal else ge_misere
    forward = ge(g, h, arena=arena)
    backward = ge(h, g, arena=arena)
    if forward and backward:
        return "="
    if forward:
        return ">"
    if backward:
        return "<"
    return "||"
